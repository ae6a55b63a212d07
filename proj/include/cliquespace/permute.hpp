#pragma once

// Approximate uniform permutations from raw bits: split the bit string into
// ceil(log2 n)-bit chunks and let pi(i) be the i-th distinct value in [n]
// seen while scanning chunks. Conditioned on every value appearing, pi is an
// exactly uniform permutation; the evaluation loop needs only three counters.

#include "graph.hpp"
#include "numeric.hpp"
#include "tape.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace cliquespace {

// Bits needed for the standard invocation of the construction.
inline std::uint64_t perm_bits(std::uint64_t n) {
    std::uint64_t w = std::uint64_t(ceil_log2(n));
    return 10 * n * w * w;
}

class PermFn {
public:
    // Snapshots the first r bits of the tape (tape reads are counted).
    PermFn(std::uint64_t n, BitTape& bits, std::uint64_t r) : n_(n), chunk_width_(ceil_log2(n)) {
        if (r < std::uint64_t(chunk_width_)) throw std::invalid_argument("PermFn: need r >= ceil(log2 n)");
        if (r > bits.length()) throw OutOfBounds("PermFn: tape shorter than r");
        bits_.resize(r);
        for (std::uint64_t i = 0; i < r; ++i) bits_[i] = std::uint8_t(bits.read(i));
        compute_coverage();
    }

    PermFn(std::uint64_t n, std::vector<std::uint8_t> raw_bits) : n_(n), chunk_width_(ceil_log2(n)), bits_(std::move(raw_bits)) {
        compute_coverage();
    }

    std::uint64_t n() const { return n_; }
    std::uint64_t num_chunks() const { return bits_.size() / std::uint64_t(chunk_width_); }
    bool covered() const { return covered_; }

    // pi(i), 1-based. The i-th distinct value in [n] across chunks, falling
    // back to 1 when fewer than i distinct values appear. Three counters.
    std::uint64_t eval(std::uint64_t i, WorkspaceMeter* meter = nullptr) const {
        if (i == 0 || i > n_) throw std::invalid_argument("PermFn::eval: i out of range");
        std::optional<WorkspaceMeter::Charge> charge;
        if (meter) charge = meter->charge("pi_eval.counters", 3 * counter_bits(bits_.size() + n_));
        std::uint64_t distinct = 0;
        std::uint64_t chunks = num_chunks();
        for (std::uint64_t c = 0; c < chunks; ++c) {
            std::uint64_t v = chunk_value(c);
            if (v > n_) continue;  // values above n are skipped, not reduced mod n
            bool seen = false;
            for (std::uint64_t prev = 0; prev < c; ++prev) {
                if (chunk_value(prev) == v) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                ++distinct;
                if (distinct == i) return v;
            }
        }
        return 1;  // fallback
    }

private:
    std::uint64_t chunk_value(std::uint64_t c) const {
        std::uint64_t v = 0;
        for (int b = 0; b < chunk_width_; ++b) v = (v << 1) | std::uint64_t(bits_[c * std::uint64_t(chunk_width_) + std::uint64_t(b)]);
        return v + 1;  // chunk encodes a value in [2^w], 1-based
    }

    void compute_coverage() {
        std::vector<std::uint8_t> seen(n_ + 1, 0);
        std::uint64_t chunks = num_chunks();
        std::uint64_t found = 0;
        for (std::uint64_t c = 0; c < chunks && found < n_; ++c) {
            std::uint64_t v = chunk_value(c);
            if (v <= n_ && !seen[v]) {
                seen[v] = 1;
                ++found;
            }
        }
        covered_ = found == n_;
    }

    std::uint64_t n_;
    int chunk_width_;
    std::vector<std::uint8_t> bits_;
    bool covered_ = false;
};

inline PermFn build_pi(std::uint64_t n, BitTape& bits, std::uint64_t r) { return PermFn(n, bits, r); }

struct TvBoundReport {
    // n * exp(-r / (2 n ceil(log2 n))), the closed-form decay with constant 1.
    double bound;
    // Exact P(some value in [n] never appears in a chunk), when computable.
    std::optional<Rational> exact_coverage_failure;
};

inline TvBoundReport tv_bound(std::uint64_t n, std::uint64_t r) {
    if (n < 2) throw std::invalid_argument("tv_bound: n >= 2");
    std::uint64_t w = std::uint64_t(ceil_log2(n));
    TvBoundReport rep;
    rep.bound = double(n) * std::exp(-double(r) / (2.0 * double(n) * double(w)));
    std::uint64_t chunks = r / w;
    if (n <= 16 && chunks <= 512) {
        // inclusion-exclusion over missing values; chunks are iid uniform
        // over 2^w values, of which each target is one.
        BigInt pow2w = BigInt(1) << unsigned(w);
        Rational fail = 0;
        for (std::uint64_t j = 1; j <= n; ++j) {
            Rational term(binom(std::int64_t(n), std::int64_t(j)));
            Rational miss((pow2w - j), pow2w);
            Rational p = 1;
            for (std::uint64_t c = 0; c < chunks; ++c) p *= miss;
            term *= p;
            if (j % 2 == 1)
                fail += term;
            else
                fail -= term;
        }
        rep.exact_coverage_failure = fail;
    }
    return rep;
}

// Lazy relabeled graph view: edge(i, j) = src.edge(pi(i), pi(j)).
struct RelabeledGraphView {
    std::uint64_t n;
    std::shared_ptr<const GraphInstance> src;
    std::shared_ptr<const PermFn> pi;

    int edge(std::uint64_t i, std::uint64_t j, WorkspaceMeter* meter = nullptr) const {
        std::uint64_t a = pi->eval(i, meter), b = pi->eval(j, meter);
        if (a == b) return 0;  // non-coverage fallback can collapse vertices
        return src->edge(a, b);
    }

    GraphInstance materialize() const {
        GraphInstance g;
        g.n = n;
        g.variant = GraphVariant::PC;
        g.k = src->k;
        g.edges = BitArray(n * (n - 1) / 2);
        for (std::uint64_t r = 0; r < g.edges.size(); ++r) {
            auto [i, j] = edge_unrank(r);
            g.edges.set(r, edge(i, j));
        }
        return g;
    }
};

inline RelabeledGraphView relabel_kpc_to_pc(std::shared_ptr<const GraphInstance> src, BitTape& bits) {
    std::uint64_t n = src->n;
    std::uint64_t r = perm_bits(n);
    auto pi = std::make_shared<PermFn>(n, bits, r);
    return RelabeledGraphView{n, std::move(src), std::move(pi)};
}

// Test/oracle path: relabel with an explicitly supplied permutation.
inline GraphInstance relabel_with_permutation(const GraphInstance& src, const std::vector<std::uint64_t>& pi) {
    GraphInstance g;
    g.n = src.n;
    g.variant = GraphVariant::PC;
    g.k = src.k;
    g.edges = BitArray(src.n * (src.n - 1) / 2);
    for (std::uint64_t r = 0; r < g.edges.size(); ++r) {
        auto [i, j] = edge_unrank(r);
        std::uint64_t a = pi[i - 1], b = pi[j - 1];
        g.edges.set(r, src.edge(a, b));
    }
    return g;
}

// Synthesize an approximately kPC-distributed graph from raw bits: an ER
// graph from the first C(ell*k_s, 2) bits plus k_s independent permutations
// over [ell]; vertex (j-1)*ell + i is planted when pi_j(i) = 1.
struct SynthesizedKpcView {
    std::uint64_t ell = 0;
    std::uint64_t k_s = 0;
    std::vector<std::uint8_t> er_bits;
    std::vector<std::shared_ptr<PermFn>> perms;
    double composed_tv_bound = 0.0;

    std::uint64_t n() const { return ell * k_s; }

    bool planted(std::uint64_t v) const {
        std::uint64_t j = (v - 1) / ell, i = (v - 1) % ell + 1;
        return perms[j]->eval(i) == 1;
    }

    int edge(std::uint64_t i, std::uint64_t j) const {
        if (i > j) std::swap(i, j);
        if (planted(i) && planted(j)) return 1;
        return er_bits[edge_index(i, j)];
    }

    GraphInstance materialize() const {
        GraphInstance g;
        g.n = n();
        g.variant = GraphVariant::KPC;
        g.k = k_s;
        g.ell = ell;
        g.edges = BitArray(g.n * (g.n - 1) / 2);
        for (std::uint64_t r = 0; r < g.edges.size(); ++r) {
            auto [i, j] = edge_unrank(r);
            g.edges.set(r, edge(i, j));
        }
        std::vector<std::uint64_t> set;
        for (std::uint64_t v = 1; v <= g.n; ++v)
            if (planted(v)) set.push_back(v);
        if (set.size() == k_s) g.planted = set;
        return g;
    }
};

inline SynthesizedKpcView sample_kpc_from_bits(std::uint64_t ell, std::uint64_t k_s, BitTape& bits) {
    std::uint64_t er = binom_u64(std::int64_t(ell * k_s), 2);
    std::uint64_t per_perm = perm_bits(ell);
    if (bits.length() < er + k_s * per_perm) throw OutOfBounds("sample_kpc_from_bits: insufficient bits");
    SynthesizedKpcView v;
    v.ell = ell;
    v.k_s = k_s;
    v.er_bits.resize(er);
    for (std::uint64_t i = 0; i < er; ++i) v.er_bits[i] = std::uint8_t(bits.read(i));
    for (std::uint64_t j = 0; j < k_s; ++j) {
        std::vector<std::uint8_t> raw(per_perm);
        for (std::uint64_t i = 0; i < per_perm; ++i) raw[i] = std::uint8_t(bits.read(er + j * per_perm + i));
        v.perms.push_back(std::make_shared<PermFn>(ell, std::move(raw)));
    }
    // sub-additivity across the k_s independent permutations
    v.composed_tv_bound = double(k_s) * tv_bound(ell, per_perm).bound;
    return v;
}

}  // namespace cliquespace
