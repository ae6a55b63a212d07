#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cliquespace/io.hpp>

#include <sstream>

using namespace cliquespace;

TEST_CASE("pcg1 round trip preserves every field and bit") {
    BitStream s(101);
    auto g = sample_graph(GraphVariant::KPC, 8, 4, 2, s);
    std::stringstream buf;
    write_pcg1(buf, g);
    auto back = read_pcg1(buf);
    CHECK(back.n == g.n);
    CHECK(back.variant == g.variant);
    CHECK(back.k == g.k);
    CHECK(back.ell == g.ell);
    for (std::uint64_t r = 0; r < g.edges.size(); ++r) CHECK(back.edges.get(r) == g.edges.get(r));
    CHECK(!back.planted);  // hidden label never enters the main file
}

TEST_CASE("hpg1 round trip") {
    BitStream s(102);
    auto h = sample_hypergraph(HypergraphVariant::CLHPC, 6, 3, 3, s);
    std::stringstream buf;
    write_hpg1(buf, h);
    auto back = read_hpg1(buf);
    CHECK(back.n == h.n);
    CHECK(back.s == h.s);
    CHECK(back.variant == h.variant);
    CHECK(back.k == h.k);
    for (std::uint64_t r = 0; r < h.hyperedges.size(); ++r) CHECK(back.hyperedges.get(r) == h.hyperedges.get(r));
}

TEST_CASE("malformed files are rejected") {
    {
        std::stringstream buf("PCXX");
        CHECK_THROWS_AS(read_pcg1(buf), MalformedFile);
    }
    {
        // valid header, truncated payload
        BitStream s(103);
        auto g = sample_graph(GraphVariant::ER, 8, 0, 0, s);
        std::stringstream buf;
        write_pcg1(buf, g);
        std::string data = buf.str();
        std::stringstream cut(data.substr(0, data.size() - 1));
        CHECK_THROWS_AS(read_pcg1(cut), MalformedFile);
    }
    {
        std::stringstream empty;
        CHECK_THROWS_AS(read_hpg1(empty), MalformedFile);
    }
}

TEST_CASE("sidecar carries seed, params, label, and the planted set") {
    BitStream s(104);
    auto g = sample_graph(GraphVariant::PC, 6, 3, 0, s);
    auto j = graph_sidecar(g, 104, BitStream::kGeneratorId);
    CHECK(j["seed"] == 104);
    CHECK(j["label"] == "planted");
    CHECK(j["params"]["n"] == 6);
    CHECK(j["planted"].size() == 3);

    GraphInstance blank = g;
    blank.planted.reset();
    apply_sidecar(blank, j);
    CHECK(blank.planted == g.planted);

    auto er = sample_graph(GraphVariant::ER, 4, 0, 0, s);
    auto je = graph_sidecar(er, 104, BitStream::kGeneratorId);
    CHECK(je["label"] == "null");
    CHECK(!je.contains("planted"));
}

TEST_CASE("pmf json round trip, including probabilities wider than 64 bits") {
    DiscretePmf q;
    q.value_bits = 8;
    q.prob_bits = 80;
    BigInt one = BigInt(1) << 80;
    q.support = {FixedPoint{8, -10}, FixedPoint{8, 3}, FixedPoint{8, 200}};
    q.prob_raw = {one / 4, one / 4, one / 2};
    q.validate();
    auto j = pmf_to_json(q);
    auto back = pmf_from_json(j);
    CHECK(back.value_bits == 8);
    CHECK(back.prob_bits == 80);
    CHECK(back.support == q.support);
    CHECK(back.prob_raw == q.prob_raw);

    // malformed pmf files are flagged
    CHECK_THROWS_AS(pmf_from_json(nlohmann::json::array()), MalformedFile);
    auto bad = j;
    bad[0]["prob_t"] = 12;
    CHECK_THROWS_AS(pmf_from_json(bad), MalformedFile);
}

TEST_CASE("byte layout: bits are little-endian within bytes, header fields little-endian") {
    GraphInstance g;
    g.n = 4;
    g.variant = GraphVariant::ER;
    g.edges = BitArray(6);
    g.edges.set(0, 1);  // edge (1,2)
    g.edges.set(5, 1);  // edge (3,4)
    std::stringstream buf;
    write_pcg1(buf, g);
    std::string raw = buf.str();
    REQUIRE(raw.size() == 4 + 4 + 1 + 4 + 4 + 1);
    CHECK(raw.substr(0, 4) == "PCG1");
    CHECK(std::uint8_t(raw[4]) == 4);  // n low byte
    CHECK(std::uint8_t(raw[5]) == 0);
    CHECK(std::uint8_t(raw[8]) == 0);  // variant ER
    CHECK(std::uint8_t(raw[17]) == 0b00100001);  // bits 0 and 5
}
