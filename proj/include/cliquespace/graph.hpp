#pragma once

// Instance distributions: Erdos-Renyi and planted-clique graphs, their
// k-partite and clique-leakage variants, and the s-uniform hypergraph
// analogues. Edges are bit-packed in colexicographic rank order, so the edges
// among the first n' vertices always occupy the rank prefix [0, C(n',2)).
// That prefix property is what the harvesting views rely on.

#include "numeric.hpp"
#include "tape.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquespace {

enum class GraphVariant : std::uint8_t { ER = 0, PC = 1, KPC = 2, CLKPC = 3 };
enum class HypergraphVariant : std::uint8_t { HER = 0, HPC = 1, CLHPC = 2 };

inline const char* to_string(GraphVariant v) {
    switch (v) {
        case GraphVariant::ER: return "ER";
        case GraphVariant::PC: return "PC";
        case GraphVariant::KPC: return "KPC";
        case GraphVariant::CLKPC: return "CLKPC";
    }
    return "?";
}
inline const char* to_string(HypergraphVariant v) {
    switch (v) {
        case HypergraphVariant::HER: return "HER";
        case HypergraphVariant::HPC: return "HPC";
        case HypergraphVariant::CLHPC: return "CLHPC";
    }
    return "?";
}

// Colex rank of the pair {i, j}, 1 <= i < j. Independent of n.
inline std::uint64_t edge_index(std::uint64_t i, std::uint64_t j) {
    if (i == 0 || j <= i) throw std::invalid_argument("edge_index: need 1 <= i < j");
    return (i - 1) + (j - 1) * (j - 2) / 2;
}

// Inverse of edge_index.
inline std::pair<std::uint64_t, std::uint64_t> edge_unrank(std::uint64_t rank) {
    std::uint64_t j = 2;
    while ((j * (j - 1)) / 2 <= rank) ++j;
    std::uint64_t i = rank - (j - 1) * (j - 2) / 2 + 1;
    return {i, j};
}

// Colex rank of a strictly increasing s-subset.
inline std::uint64_t subset_rank(const std::vector<std::uint64_t>& subset) {
    std::uint64_t r = 0;
    for (std::size_t t = 0; t < subset.size(); ++t) {
        if (subset[t] == 0 || (t > 0 && subset[t] <= subset[t - 1]))
            throw std::invalid_argument("subset_rank: subset must be strictly increasing and 1-based");
        r += binom_u64(std::int64_t(subset[t]) - 1, std::int64_t(t) + 1);
    }
    return r;
}

inline std::vector<std::uint64_t> subset_unrank(std::uint64_t rank, std::size_t s) {
    std::vector<std::uint64_t> out(s);
    for (std::size_t t = s; t >= 1; --t) {
        // largest v with C(v-1, t) <= rank
        std::uint64_t v = t;  // C(t-1,t) = 0
        while (binom(std::int64_t(v), std::int64_t(t)) <= BigInt(rank)) ++v;
        out[t - 1] = v;
        rank -= binom_u64(std::int64_t(v) - 1, std::int64_t(t));
    }
    return out;
}

class BitArray {
public:
    BitArray() = default;
    explicit BitArray(std::uint64_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

    std::uint64_t size() const { return nbits_; }
    int get(std::uint64_t i) const {
        if (i >= nbits_) throw OutOfBounds("bit array index out of range");
        return (bytes_[i >> 3] >> (i & 7)) & 1;
    }
    void set(std::uint64_t i, int b) {
        if (i >= nbits_) throw OutOfBounds("bit array index out of range");
        if (b)
            bytes_[i >> 3] |= std::uint8_t(1u << (i & 7));
        else
            bytes_[i >> 3] &= std::uint8_t(~(1u << (i & 7)));
    }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t>& bytes() { return bytes_; }

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint8_t> bytes_;
};

struct GraphInstance {
    std::uint64_t n = 0;
    GraphVariant variant = GraphVariant::ER;
    std::uint64_t k = 0;    // 0 for ER
    std::uint64_t ell = 0;  // KPC/CLKPC only, n = ell * k
    BitArray edges;         // length C(n,2), colex rank order
    // Hidden label. Kept out of the main bit array so blind pipelines never
    // see it; only oracles and event computations may look.
    std::optional<std::vector<std::uint64_t>> planted;

    int edge(std::uint64_t i, std::uint64_t j) const {
        if (i == j) return 0;
        if (i > j) std::swap(i, j);
        return edges.get(edge_index(i, j));
    }
};

struct HypergraphInstance {
    std::uint64_t n = 0;
    std::uint64_t s = 3;
    HypergraphVariant variant = HypergraphVariant::HER;
    std::uint64_t k = 0;
    BitArray hyperedges;  // length C(n,s), colex subset rank order
    std::optional<std::vector<std::uint64_t>> planted;

    int hyperedge(const std::vector<std::uint64_t>& subset) const { return hyperedges.get(subset_rank(subset)); }
};

// ---- planted set choice -------------------------------------------------
// These consume source bits first, before any edge bits, in the documented
// order (block 1 to block k for partite variants). All draws are exact via
// rejection sampling.

inline std::vector<std::uint64_t> draw_planted_pc(BitSource& src, std::uint64_t n, std::uint64_t k) {
    std::uint64_t total = binom_u64(std::int64_t(n), std::int64_t(k));
    return subset_unrank(uniform_below(src, total), k);
}

inline std::vector<std::uint64_t> draw_planted_kpc(BitSource& src, std::uint64_t ell, std::uint64_t k) {
    std::vector<std::uint64_t> planted(k);
    for (std::uint64_t b = 0; b < k; ++b) planted[b] = b * ell + 1 + uniform_below(src, ell);
    return planted;
}

inline std::vector<std::uint64_t> draw_planted_clkpc(BitSource& src, std::uint64_t ell, std::uint64_t k) {
    // kG conditioned on "vertex 1 planted" equals: vertex 1 is block 1's
    // representative, remaining blocks uniform.
    std::vector<std::uint64_t> planted(k);
    planted[0] = 1;
    for (std::uint64_t b = 1; b < k; ++b) planted[b] = b * ell + 1 + uniform_below(src, ell);
    return planted;
}

inline std::vector<std::uint64_t> draw_planted_hpc(BitSource& src, std::uint64_t n, std::uint64_t k) {
    return draw_planted_pc(src, n, k);
}

inline std::vector<std::uint64_t> draw_planted_clhpc(BitSource& src, std::uint64_t n, std::uint64_t s,
                                                     std::uint64_t k) {
    // First s-2 vertices forced; the rest a uniform (k-s+2)-subset of {s-1..n}.
    std::vector<std::uint64_t> planted;
    for (std::uint64_t v = 1; v <= s - 2; ++v) planted.push_back(v);
    std::uint64_t rest = k - (s - 2);
    std::uint64_t pool = n - (s - 2);
    std::uint64_t total = binom_u64(std::int64_t(pool), std::int64_t(rest));
    for (std::uint64_t v : subset_unrank(uniform_below(src, total), rest)) planted.push_back(v + (s - 2));
    return planted;
}

// ---- samplers -----------------------------------------------------------

inline void check_graph_params(GraphVariant variant, std::uint64_t n, std::uint64_t k, std::uint64_t ell) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    switch (variant) {
        case GraphVariant::ER:
            break;
        case GraphVariant::PC:
            if (k == 0 || k > n) throw std::invalid_argument("PC requires 1 <= k <= n");
            break;
        case GraphVariant::KPC:
        case GraphVariant::CLKPC:
            if (k == 0 || ell == 0 || n != ell * k) throw std::invalid_argument("KPC/CLKPC require n = ell * k");
            break;
    }
}

// Exact sampler. Bit consumption order: planted choices first, then one bit
// per non-forced edge in rank order.
inline GraphInstance sample_graph(GraphVariant variant, std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                                  BitSource& src) {
    check_graph_params(variant, n, k, ell);
    GraphInstance g;
    g.n = n;
    g.variant = variant;
    g.k = (variant == GraphVariant::ER) ? 0 : k;
    g.ell = (variant == GraphVariant::KPC || variant == GraphVariant::CLKPC) ? ell : 0;
    g.edges = BitArray(n * (n - 1) / 2);

    std::vector<std::uint8_t> in_clique(n + 1, 0);
    switch (variant) {
        case GraphVariant::ER:
            break;
        case GraphVariant::PC:
            g.planted = draw_planted_pc(src, n, k);
            break;
        case GraphVariant::KPC:
            g.planted = draw_planted_kpc(src, ell, k);
            break;
        case GraphVariant::CLKPC:
            g.planted = draw_planted_clkpc(src, ell, k);
            break;
    }
    if (g.planted)
        for (std::uint64_t v : *g.planted) in_clique[v] = 1;

    std::uint64_t m = g.edges.size();
    for (std::uint64_t r = 0; r < m; ++r) {
        auto [i, j] = edge_unrank(r);
        if (in_clique[i] && in_clique[j])
            g.edges.set(r, 1);
        else
            g.edges.set(r, src.next());
    }
    return g;
}

inline GraphInstance sample_graph(GraphVariant variant, std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                                  BitStream& stream) {
    StreamSource src(stream);
    return sample_graph(variant, n, k, ell, src);
}

inline void check_hypergraph_params(HypergraphVariant variant, std::uint64_t n, std::uint64_t s, std::uint64_t k) {
    if (s < 3) throw std::invalid_argument("s must be >= 3");
    if (n < s) throw std::invalid_argument("n must be >= s");
    if (variant == HypergraphVariant::HPC && (k == 0 || k > n)) throw std::invalid_argument("HPC requires 1 <= k <= n");
    if (variant == HypergraphVariant::CLHPC && (k < s - 2 || k > n))
        throw std::invalid_argument("CLHPC requires s-2 <= k <= n");
}

inline HypergraphInstance sample_hypergraph(HypergraphVariant variant, std::uint64_t n, std::uint64_t s,
                                            std::uint64_t k, BitSource& src) {
    check_hypergraph_params(variant, n, s, k);
    HypergraphInstance h;
    h.n = n;
    h.s = s;
    h.variant = variant;
    h.k = (variant == HypergraphVariant::HER) ? 0 : k;
    h.hyperedges = BitArray(binom_u64(std::int64_t(n), std::int64_t(s)));

    std::vector<std::uint8_t> in_clique(n + 1, 0);
    if (variant == HypergraphVariant::HPC)
        h.planted = draw_planted_hpc(src, n, k);
    else if (variant == HypergraphVariant::CLHPC)
        h.planted = draw_planted_clhpc(src, n, s, k);
    if (h.planted)
        for (std::uint64_t v : *h.planted) in_clique[v] = 1;

    std::uint64_t m = h.hyperedges.size();
    for (std::uint64_t r = 0; r < m; ++r) {
        auto subset = subset_unrank(r, s);
        bool forced = h.planted.has_value();
        if (forced)
            for (std::uint64_t v : subset)
                if (!in_clique[v]) {
                    forced = false;
                    break;
                }
        if (forced)
            h.hyperedges.set(r, 1);
        else
            h.hyperedges.set(r, src.next());
    }
    return h;
}

inline HypergraphInstance sample_hypergraph(HypergraphVariant variant, std::uint64_t n, std::uint64_t s,
                                            std::uint64_t k, BitStream& stream) {
    StreamSource src(stream);
    return sample_hypergraph(variant, n, s, k, src);
}

// ---- exact marginals ----------------------------------------------------
// P(edge bit = 1) for a distribution spec, as an exact rational. Computed by
// enumerating the (equiprobable) planted supports, which is exact at any size
// where the support count fits the enumeration guard.

namespace detail {

// Enumerate all planted sets of a variant; each is equiprobable.
inline std::vector<std::vector<std::uint64_t>> planted_supports(GraphVariant variant, std::uint64_t n,
                                                               std::uint64_t k, std::uint64_t ell,
                                                               std::uint64_t guard = 1u << 22) {
    std::vector<std::vector<std::uint64_t>> out;
    switch (variant) {
        case GraphVariant::ER:
            break;
        case GraphVariant::PC: {
            std::uint64_t total = binom_u64(std::int64_t(n), std::int64_t(k));
            if (total > guard) throw std::runtime_error("planted support enumeration too large");
            for (std::uint64_t r = 0; r < total; ++r) out.push_back(subset_unrank(r, k));
            break;
        }
        case GraphVariant::KPC:
        case GraphVariant::CLKPC: {
            std::uint64_t first_block = (variant == GraphVariant::CLKPC) ? 1 : ell;
            BigInt total_b = BigInt(first_block);
            for (std::uint64_t b = 1; b < k; ++b) total_b *= ell;
            if (total_b > BigInt(guard)) throw std::runtime_error("planted support enumeration too large");
            std::uint64_t total = static_cast<std::uint64_t>(total_b);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<std::uint64_t> set(k);
                std::uint64_t c = code;
                set[0] = (variant == GraphVariant::CLKPC) ? 1 : (1 + c % ell);
                if (variant != GraphVariant::CLKPC) c /= ell;
                for (std::uint64_t b = 1; b < k; ++b) {
                    set[b] = b * ell + 1 + c % ell;
                    c /= ell;
                }
                out.push_back(std::move(set));
            }
            break;
        }
    }
    return out;
}

inline std::vector<std::vector<std::uint64_t>> hyper_planted_supports(HypergraphVariant variant, std::uint64_t n,
                                                                      std::uint64_t s, std::uint64_t k,
                                                                      std::uint64_t guard = 1u << 22) {
    std::vector<std::vector<std::uint64_t>> out;
    if (variant == HypergraphVariant::HER) return out;
    if (variant == HypergraphVariant::HPC) {
        std::uint64_t total = binom_u64(std::int64_t(n), std::int64_t(k));
        if (total > guard) throw std::runtime_error("planted support enumeration too large");
        for (std::uint64_t r = 0; r < total; ++r) out.push_back(subset_unrank(r, k));
        return out;
    }
    std::uint64_t rest = k - (s - 2), pool = n - (s - 2);
    std::uint64_t total = binom_u64(std::int64_t(pool), std::int64_t(rest));
    if (total > guard) throw std::runtime_error("planted support enumeration too large");
    for (std::uint64_t r = 0; r < total; ++r) {
        std::vector<std::uint64_t> set;
        for (std::uint64_t v = 1; v <= s - 2; ++v) set.push_back(v);
        for (std::uint64_t v : subset_unrank(r, rest)) set.push_back(v + (s - 2));
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace detail

inline Rational edge_marginal(GraphVariant variant, std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                              std::uint64_t i, std::uint64_t j) {
    check_graph_params(variant, n, k, ell);
    if (i > j) std::swap(i, j);
    if (i == 0 || j > n || i == j) throw std::invalid_argument("bad edge");
    if (variant == GraphVariant::ER) return Rational(1, 2);
    auto supports = detail::planted_supports(variant, n, k, ell);
    std::uint64_t both = 0;
    for (const auto& set : supports) {
        bool hi = std::find(set.begin(), set.end(), i) != set.end();
        bool hj = std::find(set.begin(), set.end(), j) != set.end();
        if (hi && hj) ++both;
    }
    Rational p_forced(both, supports.size());
    return p_forced + (Rational(1) - p_forced) / 2;
}

inline Rational hyperedge_marginal(HypergraphVariant variant, std::uint64_t n, std::uint64_t s, std::uint64_t k,
                                   const std::vector<std::uint64_t>& subset) {
    check_hypergraph_params(variant, n, s, k);
    if (variant == HypergraphVariant::HER) return Rational(1, 2);
    auto supports = detail::hyper_planted_supports(variant, n, s, k);
    std::uint64_t all_in = 0;
    for (const auto& set : supports) {
        bool all = true;
        for (std::uint64_t v : subset)
            if (std::find(set.begin(), set.end(), v) == set.end()) {
                all = false;
                break;
            }
        if (all) ++all_in;
    }
    Rational p_forced(all_in, supports.size());
    return p_forced + (Rational(1) - p_forced) / 2;
}

}  // namespace cliquespace
