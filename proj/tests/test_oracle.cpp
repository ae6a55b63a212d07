#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cliquespace/oracle.hpp>

#include <random>

using namespace cliquespace;

TEST_CASE("enumeration mass is exactly 1") {
    CHECK(enumerate_graph_distribution(GraphVariant::ER, 3, 0, 0).total_mass() == 1);
    CHECK(enumerate_graph_distribution(GraphVariant::PC, 4, 2, 0).total_mass() == 1);
    CHECK(enumerate_graph_distribution(GraphVariant::KPC, 4, 2, 2).total_mass() == 1);
    CHECK(enumerate_graph_distribution(GraphVariant::CLKPC, 4, 2, 2).total_mass() == 1);
    ExactDistribution h = enumerate_hypergraph_projection(
        HypergraphVariant::CLHPC, 5, 3, 2, [](const HypergraphInstance& hh) -> std::optional<std::string> {
            std::string key;
            for (std::uint64_t r = 0; r < hh.hyperedges.size(); ++r) key += char('0' + hh.hyperedges.get(r));
            return key;
        });
    CHECK(h.total_mass() == 1);
}

TEST_CASE("ER n=3: 8 outcomes each 1/8") {
    auto d = enumerate_graph_distribution(GraphVariant::ER, 3, 0, 0);
    CHECK(d.outcomes.size() == 8);
    for (const auto& [k, p] : d.outcomes) CHECK(p == Rational(1, 8));
}

TEST_CASE("PC n=3 k=2 regression fixture") {
    auto d = enumerate_graph_distribution(GraphVariant::PC, 3, 2, 0);
    // [DERIVED: enumeration oracle, frozen] P(complete triangle) = 3 supports
    // x P(2 free bits both 1)/3 each = 1/4; P(single-edge graph "100") = 1/12.
    CHECK(d.outcomes.at("111") == Rational(1, 4));
    CHECK(d.outcomes.at("100") == Rational(1, 12));
    // every outcome has at least one edge (the planted pair)
    CHECK(d.outcomes.find("000") == d.outcomes.end());
}

TEST_CASE("KPC supports respect block structure") {
    enumerate_graph(GraphVariant::KPC, 4, 2, 2, [](const GraphInstance& g, const Rational&) {
        REQUIRE(g.planted.has_value());
        CHECK((*g.planted)[0] >= 1);
        CHECK((*g.planted)[0] <= 2);
        CHECK((*g.planted)[1] >= 3);
        CHECK((*g.planted)[1] <= 4);
    });
}

TEST_CASE("tv distance: identity, disjoint point masses, symmetry, triangle") {
    ExactDistribution a, b, c;
    a.add("x", 1);
    b.add("y", 1);
    CHECK(tv_distance(a, a) == 0);
    CHECK(tv_distance(a, b) == 1);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto random_dist = [&](int n) {
            ExactDistribution d;
            std::vector<std::uint64_t> w(static_cast<std::size_t>(n));
            std::uint64_t tot = 0;
            for (auto& x : w) {
                x = 1 + rng() % 10;
                tot += x;
            }
            for (int i = 0; i < n; ++i) d.add("o" + std::to_string(i % 5), Rational(w[std::size_t(i)], tot));
            return d;
        };
        auto x = random_dist(4), y = random_dist(4), z = random_dist(4);
        CHECK(tv_distance(x, y) == tv_distance(y, x));
        CHECK(tv_distance(x, z) <= tv_distance(x, y) + tv_distance(y, z));
        CHECK(tv_distance(x, y) >= 0);
        CHECK(tv_distance(x, y) <= 1);
    }
}

TEST_CASE("conditioning renormalizes exactly") {
    ExactDistribution d;
    d.add("a", Rational(1, 4));
    d.add("b", Rational(1, 4));
    auto c = d.conditioned();
    CHECK(c.outcomes.at("a") == Rational(1, 2));
    CHECK(c.total_mass() == 1);
}

TEST_CASE("max clique: complete and empty hypergraphs") {
    HypergraphInstance complete;
    complete.n = 5;
    complete.s = 3;
    complete.hyperedges = BitArray(10);
    for (std::uint64_t r = 0; r < 10; ++r) complete.hyperedges.set(r, 1);
    CHECK(max_clique_hypergraph(complete) == 5);

    HypergraphInstance empty;
    empty.n = 5;
    empty.s = 3;
    empty.hyperedges = BitArray(10);
    CHECK(max_clique_hypergraph(empty) == 2);  // s-1: vacuous cliques only
}

TEST_CASE("max clique implementations agree on 200 random instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        HypergraphInstance h;
        h.n = 5 + rng() % 11;  // up to 15
        h.s = 3 + rng() % 2;   // 3 or 4
        h.hyperedges = BitArray(binom_u64(std::int64_t(h.n), std::int64_t(h.s)));
        for (std::uint64_t r = 0; r < h.hyperedges.size(); ++r) h.hyperedges.set(r, int(rng() & 1));
        CHECK(max_clique_hypergraph(h) == max_clique_hypergraph_bitmask(h));
    }
}

TEST_CASE("union bounds are exact rationals") {
    // [DERIVED] HER(20,3), t=8: C(20,8) * 2^-C(8,3) = 125970 / 2^56
    Rational b = hyper_clique_union_bound(20, 3, 8);
    CHECK(b == Rational(BigInt(125970), pow(BigInt(2), 56)));
    CHECK(b.convert_to<double>() < 1.8e-12);
    CHECK(b.convert_to<double>() > 1.7e-12);
    // graph case: C(30,8) * 2^-28
    CHECK(graph_clique_union_bound(30, 8) == Rational(binom(30, 8), pow(BigInt(2), 28)));
}

TEST_CASE("statistical battery: fair stream passes, biased stream fails") {
    BitStream s(23);
    std::uint64_t ones = 0, trials = 100000;
    for (std::uint64_t i = 0; i < trials; ++i) ones += std::uint64_t(s.next());
    StatReport rep;
    rep.tests.push_back(proportion_test("fair", ones, trials, 0.5));
    // a stream tested against the wrong marginal must fail decisively
    rep.tests.push_back(proportion_test("wrong-marginal", ones, trials, 7.0 / 12.0));
    rep.finalize();
    CHECK(rep.tests[0].pass);
    CHECK(!rep.tests[1].pass);
}

TEST_CASE("pair independence test flags a correlated pair") {
    BitStream s(29);
    std::array<std::uint64_t, 4> indep{0, 0, 0, 0}, corr{0, 0, 0, 0};
    for (int i = 0; i < 100000; ++i) {
        int a = s.next(), b = s.next();
        ++indep[std::size_t((a << 1) | b)];
        ++corr[std::size_t((a << 1) | a)];
    }
    StatReport rep;
    rep.tests.push_back(pair_independence_test("independent", indep));
    rep.finalize();
    CHECK(rep.all_pass());
    CHECK(pair_independence_test("correlated", corr).p_value < 1e-6);
}
