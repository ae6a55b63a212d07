#pragma once

// Randomness harvesting: carve one source instance into a smaller
// sub-instance plus a multiple-access randomness tape over disjoint source
// bits. Five schemes, one per source distribution shape. Each view
// instruments which source bit ranks are touched through the sub path and
// through the rand path, so disjointness is a checkable property rather than
// a comment.

#include "graph.hpp"
#include "numeric.hpp"
#include "tape.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace cliquespace {

enum class HarvestScheme { PcBasic, KpcBasic, KpcAdvanced, Clkpc, Clhpc };

inline const char* to_string(HarvestScheme s) {
    switch (s) {
        case HarvestScheme::PcBasic: return "pc-basic";
        case HarvestScheme::KpcBasic: return "kpc-basic";
        case HarvestScheme::KpcAdvanced: return "kpc-advanced";
        case HarvestScheme::Clkpc: return "clkpc";
        case HarvestScheme::Clhpc: return "clhpc";
    }
    return "?";
}

// The sub-instance as a lazy edge oracle with declared (n, k) and the variant
// it presents as.
struct SubInstanceView {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    GraphVariant variant = GraphVariant::ER;
    std::uint64_t ell = 0;
    std::function<int(std::uint64_t, std::uint64_t)> edge;  // 1-based, i != j
};

struct HarvestView {
    HarvestScheme scheme;
    SubInstanceView sub;
    BitTape rand;  // MultipleAccess, derived; length == budget
    std::uint64_t budget = 0;
    // True when the scheme's validity event holds. Absent when it needs the
    // hidden label and the source carries none.
    std::optional<bool> event_ok;
    // kpc_advanced under a planted source: rand bits carry planted structure.
    bool rand_is_pseudo = false;
    // Instrumentation: source bit ranks touched through each path.
    std::shared_ptr<std::set<std::uint64_t>> sub_touched = std::make_shared<std::set<std::uint64_t>>();
    std::shared_ptr<std::set<std::uint64_t>> rand_touched = std::make_shared<std::set<std::uint64_t>>();
};

// Closed-form bit budgets, asserted against the constructed views in tests.
inline std::uint64_t budget_pc_basic(std::uint64_t n, std::uint64_t m) {
    return binom_u64(std::int64_t(n), 2) - binom_u64(std::int64_t(n - m), 2);
}
inline std::uint64_t budget_kpc_basic(std::uint64_t ell, std::uint64_t k, std::uint64_t m) {
    return binom_u64(std::int64_t(ell * k), 2) - binom_u64(std::int64_t(ell * k - m), 2);
}
inline std::uint64_t budget_kpc_advanced(std::uint64_t ell, std::uint64_t k) {
    return binom_u64(std::int64_t(ell * k), 2);
}
inline std::uint64_t budget_clkpc(std::uint64_t ell, std::uint64_t k) {
    return binom_u64(std::int64_t(ell * k), 2);
}
inline std::uint64_t budget_clhpc(std::uint64_t n, std::uint64_t s) {
    return binom_u64(std::int64_t(n + s - 2), std::int64_t(s - 1));
}

// Subgraph on the first n-m vertices is the instance; the C(n,2)-C(n-m,2)
// edge bits touching the last m vertices are the randomness. With colex edge
// ranks those are exactly the ranks >= C(n-m,2), enumerated in rank order.
inline HarvestView harvest_pc_basic(std::shared_ptr<const GraphInstance> src, std::uint64_t m,
                                    WorkspaceMeter* meter = nullptr) {
    if (m == 0 || m >= src->n) throw std::invalid_argument("harvest_pc_basic: need 1 <= m < n");
    std::uint64_t n_sub = src->n - m;
    HarvestView v{HarvestScheme::PcBasic,
                  {},
                  BitTape::explicit_tape({}, TapePolicy::MultipleAccess),
                  budget_pc_basic(src->n, m)};
    auto sub_touched = v.sub_touched;
    auto rand_touched = v.rand_touched;
    v.sub.n = n_sub;
    v.sub.k = src->k;
    v.sub.variant = src->variant;
    v.sub.edge = [src, n_sub, sub_touched](std::uint64_t i, std::uint64_t j) {
        if (i > j) std::swap(i, j);
        if (i == 0 || j > n_sub || i == j) throw OutOfBounds("sub edge out of range");
        sub_touched->insert(edge_index(i, j));
        return src->edge(i, j);
    };
    std::uint64_t base = binom_u64(std::int64_t(n_sub), 2);
    v.rand = BitTape::derived_tape(
        [src, base, rand_touched, meter](std::uint64_t t) {
            std::optional<WorkspaceMeter::Charge> c;
            if (meter) c = meter->charge("harvest.rand_offset", counter_bits(src->edges.size()));
            rand_touched->insert(base + t);
            return src->edges.get(base + t);
        },
        v.budget, TapePolicy::MultipleAccess);
    if (src->planted) {
        bool ok = true;
        for (std::uint64_t p : *src->planted)
            if (p > n_sub) ok = false;
        v.event_ok = ok;
    } else if (src->variant == GraphVariant::ER) {
        v.event_ok = true;  // no clique to fall outside the prefix
    }
    return v;
}

// Same randomness carve-out as pc_basic, but the instance is the induced
// subgraph on the first ell*k_s vertices, which is exactly kPC-shaped.
inline HarvestView harvest_kpc_basic(std::shared_ptr<const GraphInstance> src, std::uint64_t k_s, std::uint64_t m,
                                     WorkspaceMeter* meter = nullptr) {
    std::uint64_t ell = src->ell, k = src->k;
    if (src->variant != GraphVariant::ER && src->variant != GraphVariant::KPC)
        throw std::invalid_argument("harvest_kpc_basic: source must be ER or KPC shaped");
    if (src->variant == GraphVariant::ER) {
        // null sources carry no block structure; caller supplies shape via k_s/m
        ell = src->ell;
        if (ell == 0) throw std::invalid_argument("harvest_kpc_basic: ER source needs ell recorded");
        k = src->n / ell;
    }
    if (k_s > k - 1) throw std::invalid_argument("harvest_kpc_basic: need k_s <= k-1");
    if (m == 0 || ell * k_s + m > src->n) throw std::invalid_argument("harvest_kpc_basic: sub and rand vertices overlap");
    std::uint64_t n_sub = ell * k_s;
    HarvestView v{HarvestScheme::KpcBasic,
                  {},
                  BitTape::explicit_tape({}, TapePolicy::MultipleAccess),
                  budget_kpc_basic(ell, k, m)};
    auto sub_touched = v.sub_touched;
    auto rand_touched = v.rand_touched;
    v.sub.n = n_sub;
    v.sub.k = k_s;
    v.sub.variant = src->variant == GraphVariant::ER ? GraphVariant::ER : GraphVariant::KPC;
    v.sub.ell = ell;
    v.sub.edge = [src, n_sub, sub_touched](std::uint64_t i, std::uint64_t j) {
        if (i > j) std::swap(i, j);
        if (i == 0 || j > n_sub || i == j) throw OutOfBounds("sub edge out of range");
        sub_touched->insert(edge_index(i, j));
        return src->edge(i, j);
    };
    std::uint64_t base = binom_u64(std::int64_t(src->n - m), 2);
    v.rand = BitTape::derived_tape(
        [src, base, rand_touched, meter](std::uint64_t t) {
            std::optional<WorkspaceMeter::Charge> c;
            if (meter) c = meter->charge("harvest.rand_offset", counter_bits(src->edges.size()));
            rand_touched->insert(base + t);
            return src->edges.get(base + t);
        },
        v.budget, TapePolicy::MultipleAccess);
    std::uint64_t first_rand_vertex = src->n - m + 1;
    if (src->planted) {
        bool ok = true;
        for (std::uint64_t p : *src->planted)
            if (p >= first_rand_vertex) ok = false;
        v.event_ok = ok;
    } else if (src->variant == GraphVariant::ER) {
        v.event_ok = true;
    }
    return v;
}

// Source has 2k blocks; the randomness is the whole subgraph on the last
// ell*k vertices. Under a planted source those bits are not i.i.d., which the
// view flags instead of hiding.
inline HarvestView harvest_kpc_advanced(std::shared_ptr<const GraphInstance> src, std::uint64_t k_s,
                                        bool* warn_ks_too_large = nullptr, WorkspaceMeter* meter = nullptr) {
    std::uint64_t ell = src->ell;
    if (ell == 0) throw std::invalid_argument("harvest_kpc_advanced: source needs ell recorded");
    std::uint64_t two_k = src->n / ell;
    if (two_k % 2 != 0) throw std::invalid_argument("harvest_kpc_advanced: source must have an even block count");
    std::uint64_t k = two_k / 2;
    if (k_s > k) throw std::invalid_argument("harvest_kpc_advanced: need k_s <= k");
    if (warn_ks_too_large) {
        // lemma hypothesis k_s <= k / sqrt(ell); warn-only
        *warn_ks_too_large = BigInt(k_s) * BigInt(k_s) * BigInt(ell) > BigInt(k) * BigInt(k);
    }
    std::uint64_t n_sub = ell * k_s;
    std::uint64_t off = ell * k;  // rand vertices are off+1 .. 2*off
    HarvestView v{HarvestScheme::KpcAdvanced,
                  {},
                  BitTape::explicit_tape({}, TapePolicy::MultipleAccess),
                  budget_kpc_advanced(ell, k)};
    auto sub_touched = v.sub_touched;
    auto rand_touched = v.rand_touched;
    v.sub.n = n_sub;
    v.sub.k = k_s;
    v.sub.variant = src->variant == GraphVariant::ER ? GraphVariant::ER : GraphVariant::KPC;
    v.sub.ell = ell;
    v.sub.edge = [src, n_sub, sub_touched](std::uint64_t i, std::uint64_t j) {
        if (i > j) std::swap(i, j);
        if (i == 0 || j > n_sub || i == j) throw OutOfBounds("sub edge out of range");
        sub_touched->insert(edge_index(i, j));
        return src->edge(i, j);
    };
    v.rand = BitTape::derived_tape(
        [src, off, rand_touched, meter](std::uint64_t t) {
            std::optional<WorkspaceMeter::Charge> c;
            // two endpoint counters plus the remapped rank
            if (meter) c = meter->charge("harvest.rand_remap", 3 * counter_bits(src->edges.size()));
            auto [a, b] = edge_unrank(t);  // local pair within the rand block
            std::uint64_t r = edge_index(a + off, b + off);
            rand_touched->insert(r);
            return src->edges.get(r);
        },
        v.budget, TapePolicy::MultipleAccess);
    v.rand_is_pseudo = src->variant != GraphVariant::ER;
    return v;
}

namespace detail {

// v-th (1-based) vertex among the last span vertices with no edge to vertex 1.
// Lazy scan; also records the selection bits it inspects.
inline std::optional<std::uint64_t> nth_nonneighbor(const GraphInstance& g, std::uint64_t first, std::uint64_t v,
                                                    std::set<std::uint64_t>* touched) {
    std::uint64_t count = 0;
    for (std::uint64_t u = first; u <= g.n; ++u) {
        if (touched) touched->insert(edge_index(1, u));
        if (g.edge(1, u) == 0) {
            ++count;
            if (count == v) return u;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Clique leakage source with 4k blocks. Randomness comes from the subgraph
// induced on those of the last ell*3k vertices with no edge to vertex 1;
// because vertex 1 is planted in the alternative, none of those vertices can
// be planted, so the harvested bits are always fair.
inline HarvestView harvest_clkpc(std::shared_ptr<const GraphInstance> src, std::uint64_t k_s,
                                 WorkspaceMeter* meter = nullptr) {
    std::uint64_t ell = src->ell;
    if (ell == 0) throw std::invalid_argument("harvest_clkpc: source needs ell recorded");
    std::uint64_t four_k = src->n / ell;
    if (four_k % 4 != 0) throw std::invalid_argument("harvest_clkpc: source must have a block count divisible by 4");
    std::uint64_t k = four_k / 4;
    if (k_s > k) throw std::invalid_argument("harvest_clkpc: need k_s <= k");
    std::uint64_t n_sub = ell * k_s;
    std::uint64_t first_cand = ell * k + 1;  // start of the last ell*3k vertices
    HarvestView v{HarvestScheme::Clkpc,
                  {},
                  BitTape::explicit_tape({}, TapePolicy::MultipleAccess),
                  budget_clkpc(ell, k)};
    auto sub_touched = v.sub_touched;
    auto rand_touched = v.rand_touched;
    v.sub.n = n_sub;
    v.sub.k = k_s;
    v.sub.variant = src->variant == GraphVariant::ER ? GraphVariant::ER : GraphVariant::CLKPC;
    v.sub.ell = ell;
    v.sub.edge = [src, n_sub, sub_touched](std::uint64_t i, std::uint64_t j) {
        if (i > j) std::swap(i, j);
        if (i == 0 || j > n_sub || i == j) throw OutOfBounds("sub edge out of range");
        sub_touched->insert(edge_index(i, j));
        return src->edge(i, j);
    };
    const GraphInstance* g = src.get();
    v.rand = BitTape::derived_tape(
        [src, g, first_cand, rand_touched, meter](std::uint64_t t) {
            std::optional<WorkspaceMeter::Charge> c;
            // endpoint pair, two non-neighbor scans (scan position + hit
            // count each), and the remapped rank
            if (meter) c = meter->charge("harvest.nonneighbor_scan", 5 * counter_bits(src->edges.size()));
            auto [a, b] = edge_unrank(t);  // pair of candidate indices
            auto va = detail::nth_nonneighbor(*g, first_cand, a, rand_touched.get());
            auto vb = detail::nth_nonneighbor(*g, first_cand, b, rand_touched.get());
            if (!va || !vb) throw InsufficientHarvest("clkpc: not enough non-neighbors of vertex 1");
            std::uint64_t r = edge_index(*va, *vb);
            rand_touched->insert(r);
            return src->edges.get(r);
        },
        v.budget, TapePolicy::MultipleAccess);
    // EnoughVertices is graph-observable: count candidates once.
    std::uint64_t cands = 0;
    for (std::uint64_t u = first_cand; u <= src->n; ++u)
        if (src->edge(1, u) == 0) ++cands;
    v.event_ok = cands >= ell * k;
    return v;
}

// Hypergraph source clHPC^s(n+s-1, k+s-2). The graph on vertices
// {s-1..n+s-2} given by hyperedges {1..s-2, i, j} is the instance; all
// hyperedges containing the last vertex are the randomness.
inline HarvestView harvest_clhpc(std::shared_ptr<const HypergraphInstance> src, WorkspaceMeter* meter = nullptr) {
    std::uint64_t s = src->s;
    if (src->n < s + 1) throw std::invalid_argument("harvest_clhpc: source too small");
    std::uint64_t n_sub = src->n - (s - 1);
    std::uint64_t k_sub = (src->k >= s - 2) ? src->k - (s - 2) : 0;
    HarvestView v{HarvestScheme::Clhpc,
                  {},
                  BitTape::explicit_tape({}, TapePolicy::MultipleAccess),
                  budget_clhpc(n_sub, s)};
    auto sub_touched = v.sub_touched;
    auto rand_touched = v.rand_touched;
    v.sub.n = n_sub;
    v.sub.k = k_sub;
    v.sub.variant = src->variant == HypergraphVariant::HER ? GraphVariant::ER : GraphVariant::PC;
    v.sub.edge = [src, n_sub, s, sub_touched](std::uint64_t i, std::uint64_t j) {
        if (i > j) std::swap(i, j);
        if (i == 0 || j > n_sub || i == j) throw OutOfBounds("sub edge out of range");
        std::vector<std::uint64_t> subset;
        for (std::uint64_t vtx = 1; vtx <= s - 2; ++vtx) subset.push_back(vtx);
        subset.push_back(i + (s - 2));
        subset.push_back(j + (s - 2));
        std::uint64_t r = subset_rank(subset);
        sub_touched->insert(r);
        return src->hyperedges.get(r);
    };
    // Hyperedges containing the max vertex occupy the colex rank suffix.
    std::uint64_t base = binom_u64(std::int64_t(src->n - 1), std::int64_t(s));
    v.rand = BitTape::derived_tape(
        [src, base, rand_touched, meter](std::uint64_t t) {
            std::optional<WorkspaceMeter::Charge> c;
            if (meter) c = meter->charge("harvest.rand_offset", counter_bits(src->hyperedges.size()));
            rand_touched->insert(base + t);
            return src->hyperedges.get(base + t);
        },
        v.budget, TapePolicy::MultipleAccess);
    if (src->planted) {
        bool ok = true;
        for (std::uint64_t p : *src->planted)
            if (p == src->n) ok = false;
        v.event_ok = ok;
    } else if (src->variant == HypergraphVariant::HER) {
        v.event_ok = true;
    }
    return v;
}

// Read every sub edge into a concrete instance (used by tests and the CLI;
// pipelines that need laziness use view.sub.edge directly).
inline GraphInstance materialize_sub(const HarvestView& v) {
    GraphInstance g;
    g.n = v.sub.n;
    g.variant = v.sub.variant;
    g.k = v.sub.k;
    g.ell = v.sub.ell;
    g.edges = BitArray(g.n * (g.n - 1) / 2);
    for (std::uint64_t r = 0; r < g.edges.size(); ++r) {
        auto [i, j] = edge_unrank(r);
        g.edges.set(r, v.sub.edge(i, j));
    }
    return g;
}

// Read the whole rand tape into a bit string (tests).
inline std::string read_all_rand(HarvestView& v) {
    std::string s(v.rand.length(), '0');
    for (std::uint64_t t = 0; t < v.rand.length(); ++t) s[t] = char('0' + v.rand.read(t));
    return s;
}

}  // namespace cliquespace
