#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cliquespace/graph.hpp>
#include <cliquespace/oracle.hpp>

#include <map>
#include <random>

using namespace cliquespace;

TEST_CASE("edge ranking is the colex bijection") {
    CHECK(edge_index(1, 2) == 0);
    CHECK(edge_index(3, 4) == 5);  // last pair of n=4
    // bijection and inverse over a window
    std::uint64_t rank = 0;
    for (std::uint64_t j = 2; j <= 12; ++j)
        for (std::uint64_t i = 1; i < j; ++i) {
            CHECK(edge_index(i, j) == rank);
            auto [a, b] = edge_unrank(rank);
            CHECK(a == i);
            CHECK(b == j);
            ++rank;
        }
    CHECK_THROWS_AS(edge_index(2, 2), std::invalid_argument);
}

TEST_CASE("prefix property: edges among first n' vertices occupy the rank prefix") {
    for (std::uint64_t np = 2; np <= 9; ++np) {
        std::uint64_t cut = binom_u64(std::int64_t(np), 2);
        for (std::uint64_t r = 0; r < binom_u64(10, 2); ++r) {
            auto [i, j] = edge_unrank(r);
            CHECK((j <= np) == (r < cut));
        }
    }
}

TEST_CASE("subset ranking round trips in colex order") {
    CHECK(subset_rank({1, 2, 3}) == 0);
    std::uint64_t total = binom_u64(8, 3);
    for (std::uint64_t r = 0; r < total; ++r) {
        auto s = subset_unrank(r, 3);
        CHECK(subset_rank(s) == r);
        if (r > 0) {
            // colex: the max element is non-decreasing with rank
            CHECK(subset_unrank(r - 1, 3).back() <= s.back());
        }
    }
    // suffix property: subsets containing the max vertex n occupy ranks >= C(n-1,s)
    std::uint64_t n = 7, s = 3;
    std::uint64_t cut = binom_u64(std::int64_t(n) - 1, std::int64_t(s));
    for (std::uint64_t r = 0; r < binom_u64(std::int64_t(n), std::int64_t(s)); ++r) {
        auto set = subset_unrank(r, s);
        CHECK((set.back() == n) == (r >= cut));
    }
}

TEST_CASE("bit array round trip") {
    std::mt19937_64 rng(3);
    BitArray a(77);
    std::vector<int> ref(77);
    for (std::uint64_t i = 0; i < 77; ++i) {
        ref[i] = int(rng() & 1);
        a.set(i, ref[i]);
    }
    for (std::uint64_t i = 0; i < 77; ++i) CHECK(a.get(i) == ref[i]);
    CHECK_THROWS_AS(a.get(77), OutOfBounds);
}

TEST_CASE("pc n=2 k=2: the whole graph is the clique") {
    BitStream s(9);
    auto g = sample_graph(GraphVariant::PC, 2, 2, 0, s);
    CHECK(g.edge(1, 2) == 1);
    REQUIRE(g.planted.has_value());
    CHECK(g.planted->size() == 2);
}

TEST_CASE("structural invariants hold on every sample") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        BitStream s(seed);
        auto g = sample_graph(GraphVariant::KPC, 6, 3, 2, s);
        REQUIRE(g.planted.has_value());
        CHECK(g.planted->size() == 3);
        for (std::uint64_t b = 0; b < 3; ++b) {
            // exactly one planted vertex per block of size 2
            std::uint64_t cnt = 0;
            for (std::uint64_t v : *g.planted)
                if (v > b * 2 && v <= (b + 1) * 2) ++cnt;
            CHECK(cnt == 1);
        }
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = x + 1; y < 3; ++y) CHECK(g.edge((*g.planted)[x], (*g.planted)[y]) == 1);

        BitStream s2(seed);
        auto cl = sample_graph(GraphVariant::CLKPC, 8, 4, 2, s2);
        CHECK((*cl.planted)[0] == 1);

        BitStream s3(seed);
        auto h = sample_hypergraph(HypergraphVariant::CLHPC, 6, 3, 3, s3);
        CHECK((*h.planted)[0] == 1);  // s-2 = 1 forced vertex
        // all s-subsets of planted are hyperedges
        CHECK(h.hyperedge(*h.planted) == 1);
    }
}

TEST_CASE("exact marginals against closed forms") {
    // [DERIVED] PC n=4,k=2 edge marginal = 1/2 + 1/2 * C(2,0)/C(4,2) = 7/12
    CHECK(edge_marginal(GraphVariant::PC, 4, 2, 0, 1, 2) == Rational(7, 12));
    // [DERIVED] KPC ell=2,k=2 cross-block edge = 1/2 + 1/2 * 1/4 = 5/8
    CHECK(edge_marginal(GraphVariant::KPC, 4, 2, 2, 1, 3) == Rational(5, 8));
    // same-block pair can never be jointly planted
    CHECK(edge_marginal(GraphVariant::KPC, 4, 2, 2, 1, 2) == Rational(1, 2));
    CHECK(edge_marginal(GraphVariant::ER, 4, 0, 0, 1, 2) == Rational(1, 2));
    // CLKPC: edge(1, v) for v in block 2 has forced prob 1/ell
    CHECK(edge_marginal(GraphVariant::CLKPC, 4, 2, 2, 1, 3) == Rational(1, 2) + Rational(1, 4));
    // [DERIVED] CLHPC n=5,s=3,k=2: planted = {1,v}, no s-subset forced (k < s)
    CHECK(hyperedge_marginal(HypergraphVariant::CLHPC, 5, 3, 2, {1, 2, 3}) == Rational(1, 2));
    // HPC n=4,s=3,k=3: subset {1,2,3} forced iff planted = {1,2,3}, prob 1/4
    CHECK(hyperedge_marginal(HypergraphVariant::HPC, 4, 3, 3, {1, 2, 3}) ==
          Rational(1, 4) + Rational(3, 4) / 2);
}

TEST_CASE("sampler matches exact marginals statistically") {
    const std::uint64_t trials = 20000;
    struct Spec {
        GraphVariant v;
        std::uint64_t n, k, ell;
    };
    for (Spec spec : {Spec{GraphVariant::ER, 5, 0, 0}, Spec{GraphVariant::PC, 5, 2, 0},
                      Spec{GraphVariant::KPC, 6, 3, 2}, Spec{GraphVariant::CLKPC, 6, 3, 2}}) {
        std::uint64_t nbits = spec.n * (spec.n - 1) / 2;
        std::vector<std::uint64_t> ones(nbits, 0);
        for (std::uint64_t t = 0; t < trials; ++t) {
            BitStream s(1000 + t);
            auto g = sample_graph(spec.v, spec.n, spec.k, spec.ell, s);
            for (std::uint64_t r = 0; r < nbits; ++r) ones[r] += std::uint64_t(g.edges.get(r));
        }
        for (std::uint64_t r = 0; r < nbits; ++r) {
            auto [i, j] = edge_unrank(r);
            double p = edge_marginal(spec.v, spec.n, spec.k, spec.ell, i, j).convert_to<double>();
            double sigma = std::sqrt(double(trials) * p * (1 - p));
            CHECK(std::abs(double(ones[r]) - double(trials) * p) < 4.5 * sigma);
        }
    }
}

TEST_CASE("kpc planted supports are equiprobable under the sampler") {
    // ell=2, k=2: four block-respecting planted sets, each should get ~1/4
    std::map<std::string, std::uint64_t> counts;
    const std::uint64_t trials = 20000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        BitStream s(50000 + t);
        auto g = sample_graph(GraphVariant::KPC, 4, 2, 2, s);
        std::string key;
        for (std::uint64_t v : *g.planted) key += char('0' + v);
        ++counts[key];
    }
    CHECK(counts.size() == 4);
    for (const auto& [k, c] : counts) CHECK(std::abs(double(c) - trials / 4.0) < 4.5 * std::sqrt(trials * 0.25 * 0.75));
}

TEST_CASE("hypergraph sampler: HER n=4 s=3 gives 4 free bits") {
    BitStream s(5);
    auto h = sample_hypergraph(HypergraphVariant::HER, 4, 3, 0, s);
    CHECK(h.hyperedges.size() == 4);
    CHECK(s.consumed() == 4);
    CHECK(!h.planted);
}

TEST_CASE("clhpc n=5 s=3 k=2: second planted vertex uniform over {2..5}") {
    std::map<std::uint64_t, std::uint64_t> counts;
    const std::uint64_t trials = 20000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        BitStream s(90000 + t);
        auto h = sample_hypergraph(HypergraphVariant::CLHPC, 5, 3, 2, s);
        REQUIRE(h.planted->size() == 2);
        ++counts[(*h.planted)[1]];
    }
    CHECK(counts.size() == 4);
    for (auto [v, c] : counts) {
        CHECK(v >= 2);
        CHECK(std::abs(double(c) - trials / 4.0) < 4.5 * std::sqrt(trials * 0.25 * 0.75));
    }
}

TEST_CASE("parameter validation") {
    BitStream s(1);
    CHECK_THROWS_AS(sample_graph(GraphVariant::KPC, 5, 2, 2, s), std::invalid_argument);
    CHECK_THROWS_AS(sample_graph(GraphVariant::PC, 3, 4, 0, s), std::invalid_argument);
    CHECK_THROWS_AS(sample_hypergraph(HypergraphVariant::HPC, 4, 2, 2, s), std::invalid_argument);
    CHECK_THROWS_AS(sample_hypergraph(HypergraphVariant::CLHPC, 5, 4, 1, s), std::invalid_argument);
}
