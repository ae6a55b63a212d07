#pragma once

// File formats. PCG1 is the graph container: magic "PCG1", u32 n, u8 variant,
// u32 k, u32 ell (all little-endian), then ceil(C(n,2)/8) bytes of edge bits
// in colex rank order, little-endian within each byte. HPG1 is the s-uniform
// analogue with a u8 s after the variant byte. Hidden planted sets never go
// in the main file; they live in the JSON sidecar, which blind pipeline
// stages must not read.

#include "fixed_point.hpp"
#include "graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquespace {

struct MalformedFile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff), char((v >> 24) & 0xff)};
    os.write(b, 4);
}

inline std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw MalformedFile("truncated file: expected u32");
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}

inline std::uint8_t get_u8(std::istream& is) {
    char c;
    is.read(&c, 1);
    if (!is) throw MalformedFile("truncated file: expected u8");
    return std::uint8_t(c);
}

inline void put_bits(std::ostream& os, const BitArray& bits) {
    os.write(reinterpret_cast<const char*>(bits.bytes().data()), std::streamsize(bits.bytes().size()));
}

inline BitArray get_bits(std::istream& is, std::uint64_t nbits) {
    BitArray a(nbits);
    is.read(reinterpret_cast<char*>(a.bytes().data()), std::streamsize(a.bytes().size()));
    if (std::uint64_t(is.gcount()) != a.bytes().size()) throw MalformedFile("truncated file: bit payload short");
    return a;
}

}  // namespace detail

inline void write_pcg1(std::ostream& os, const GraphInstance& g) {
    os.write("PCG1", 4);
    detail::put_u32(os, std::uint32_t(g.n));
    os.put(char(g.variant));
    detail::put_u32(os, std::uint32_t(g.k));
    detail::put_u32(os, std::uint32_t(g.ell));
    detail::put_bits(os, g.edges);
}

inline GraphInstance read_pcg1(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != "PCG1") throw MalformedFile("bad magic: expected PCG1");
    GraphInstance g;
    g.n = detail::get_u32(is);
    std::uint8_t v = detail::get_u8(is);
    if (v > 3) throw MalformedFile("unknown graph variant byte");
    g.variant = GraphVariant(v);
    g.k = detail::get_u32(is);
    g.ell = detail::get_u32(is);
    g.edges = detail::get_bits(is, g.n * (g.n - 1) / 2);
    return g;
}

inline void write_hpg1(std::ostream& os, const HypergraphInstance& h) {
    os.write("HPG1", 4);
    detail::put_u32(os, std::uint32_t(h.n));
    os.put(char(h.variant));
    os.put(char(h.s));
    detail::put_u32(os, std::uint32_t(h.k));
    detail::put_bits(os, h.hyperedges);
}

inline HypergraphInstance read_hpg1(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != "HPG1") throw MalformedFile("bad magic: expected HPG1");
    HypergraphInstance h;
    h.n = detail::get_u32(is);
    std::uint8_t v = detail::get_u8(is);
    if (v > 2) throw MalformedFile("unknown hypergraph variant byte");
    h.variant = HypergraphVariant(v);
    h.s = detail::get_u8(is);
    if (h.s < 3) throw MalformedFile("hypergraph uniformity must be >= 3");
    h.k = detail::get_u32(is);
    h.hyperedges = detail::get_bits(is, binom_u64(std::int64_t(h.n), std::int64_t(h.s)));
    return h;
}

inline void write_file_pcg1(const std::string& path, const GraphInstance& g) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    write_pcg1(os, g);
}

inline GraphInstance read_file_pcg1(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_pcg1(is);
}

inline void write_file_hpg1(const std::string& path, const HypergraphInstance& h) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    write_hpg1(os, h);
}

inline HypergraphInstance read_file_hpg1(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_hpg1(is);
}

// ---- sidecars -----------------------------------------------------------

inline nlohmann::json graph_sidecar(const GraphInstance& g, std::uint64_t seed, const std::string& generator) {
    nlohmann::json j;
    j["seed"] = seed;
    j["generator"] = generator;
    j["variant"] = to_string(g.variant);
    j["params"] = {{"n", g.n}, {"k", g.k}, {"ell", g.ell}};
    j["label"] = g.planted ? "planted" : "null";
    if (g.planted) j["planted"] = *g.planted;
    return j;
}

inline nlohmann::json hypergraph_sidecar(const HypergraphInstance& h, std::uint64_t seed, const std::string& generator) {
    nlohmann::json j;
    j["seed"] = seed;
    j["generator"] = generator;
    j["variant"] = to_string(h.variant);
    j["params"] = {{"n", h.n}, {"s", h.s}, {"k", h.k}};
    j["label"] = h.planted ? "planted" : "null";
    if (h.planted) j["planted"] = *h.planted;
    return j;
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << j.dump(2) << "\n";
}

inline nlohmann::json read_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedFile(std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

// Attach the planted sidecar set back onto an instance (oracle-side only).
inline void apply_sidecar(GraphInstance& g, const nlohmann::json& sidecar) {
    if (sidecar.contains("planted")) g.planted = sidecar["planted"].get<std::vector<std::uint64_t>>();
}
inline void apply_sidecar(HypergraphInstance& h, const nlohmann::json& sidecar) {
    if (sidecar.contains("planted")) h.planted = sidecar["planted"].get<std::vector<std::uint64_t>>();
}

// ---- pmf files ----------------------------------------------------------
// JSON list of {value_raw, value_t, prob_raw, prob_t}. prob_raw may exceed 64
// bits, so it is carried as a decimal string (plain numbers also accepted).

inline DiscretePmf pmf_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw MalformedFile("pmf file must be a non-empty JSON list");
    DiscretePmf q;
    for (const auto& e : j) {
        FixedPoint v;
        v.t = e.at("value_t").get<int>();
        v.raw = BigInt(e.at("value_raw").get<std::int64_t>());
        int pt = e.at("prob_t").get<int>();
        BigInt pr;
        if (e.at("prob_raw").is_string())
            pr = BigInt(e.at("prob_raw").get<std::string>());
        else
            pr = BigInt(e.at("prob_raw").get<std::uint64_t>());
        if (q.support.empty()) {
            q.value_bits = v.t;
            q.prob_bits = pt;
        } else if (v.t != q.value_bits || pt != q.prob_bits) {
            throw MalformedFile("pmf entries disagree on bit widths");
        }
        q.support.push_back(v);
        q.prob_raw.push_back(pr);
    }
    try {
        q.validate();
    } catch (const std::invalid_argument& e) {
        throw MalformedFile(std::string("invalid pmf: ") + e.what());
    }
    return q;
}

inline nlohmann::json pmf_to_json(const DiscretePmf& q) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < q.support.size(); ++i) {
        j.push_back({{"value_raw", q.support[i].raw.convert_to<std::int64_t>()},
                     {"value_t", q.value_bits},
                     {"prob_raw", q.prob_raw[i].str()},
                     {"prob_t", q.prob_bits}});
    }
    return j;
}

// ---- reduced-instance outputs ------------------------------------------
// Each reduced output is a binary payload at <path> plus a JSON header at
// <path>.json describing shape and encoding.

inline void write_spca_output(const std::string& path, std::uint64_t d_bar, std::uint64_t n_bar,
                              const std::function<int(std::uint64_t, std::uint64_t)>& entry,
                              nlohmann::json header_extra = {}) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    for (std::uint64_t i = 1; i <= d_bar; ++i)
        for (std::uint64_t j = 1; j <= n_bar; ++j) os.put(char(std::int8_t(entry(i, j))));
    nlohmann::json h = std::move(header_extra);
    h["format"] = "spca-int8-v1";
    h["rows"] = d_bar;
    h["cols"] = n_bar;
    write_json(path + ".json", h);
}

inline void write_submat_output(const std::string& path, std::uint64_t p_bar, int t_bar,
                                const std::function<FixedPoint(std::uint64_t, std::uint64_t)>& entry,
                                nlohmann::json header_extra = {}) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    for (std::uint64_t i = 1; i <= p_bar; ++i)
        for (std::uint64_t j = 1; j <= p_bar; ++j) {
            FixedPoint v = entry(i, j);
            std::int64_t raw = v.raw.convert_to<std::int64_t>();
            for (int b = 0; b < 8; ++b) os.put(char((std::uint64_t(raw) >> (8 * b)) & 0xff));
        }
    nlohmann::json h = std::move(header_extra);
    h["format"] = "submat-fixed64-v1";
    h["rows"] = p_bar;
    h["cols"] = p_bar;
    h["t_bar"] = t_bar;
    write_json(path + ".json", h);
}

inline void write_kwise_output(const std::string& path, std::uint64_t s_bar, std::uint64_t n_bar,
                               const std::function<int(std::uint64_t, std::uint64_t)>& sample_bit,
                               nlohmann::json header_extra = {}) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    // row-major bit matrix, little-endian within bytes, rows byte-aligned
    for (std::uint64_t t = 1; t <= s_bar; ++t) {
        std::uint8_t acc = 0;
        int fill = 0;
        for (std::uint64_t j = 1; j <= n_bar; ++j) {
            acc |= std::uint8_t(sample_bit(t, j) << fill);
            if (++fill == 8) {
                os.put(char(acc));
                acc = 0;
                fill = 0;
            }
        }
        if (fill) os.put(char(acc));
    }
    nlohmann::json h = std::move(header_extra);
    h["format"] = "kwise-bits-v1";
    h["rows"] = s_bar;
    h["cols"] = n_bar;
    write_json(path + ".json", h);
}

}  // namespace cliquespace
