#pragma once

// Downstream reductions: planted clique to sparse-PCA samples, to planted
// submatrix detection, and to k-wise-independence testing, plus the
// enumeration wrappers that turn a deterministic recovery oracle into a
// detection algorithm. Every reduced instance is a lazy oracle: an entry is a
// pure function of (source instance, rand tape, params) and recomputes to
// the same value every time.

#include "fixed_point.hpp"
#include "graph.hpp"
#include "harvest.hpp"
#include "numeric.hpp"
#include "permute.hpp"
#include "tape.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace cliquespace {

struct RmuViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- Sparse PCA ---------------------------------------------------------

struct SpcaParams {
    Rational delta;
    Rational mu;
    std::uint64_t n = 0, m = 0, k = 0;
    std::uint64_t d_bar = 0, n_bar = 0, k_bar = 0;
    Rational theta_bar;

    bool rmu_ok = false;
    std::vector<std::string> rmu_failures;

    std::uint64_t half() const { return (n - m) / 2; }

    // (d_bar - (n-m)/2) * n_bar + 2 * 10 * d_bar * ceil(log2 d_bar)^2 + n_bar
    std::uint64_t rand_budget() const {
        std::uint64_t w = std::uint64_t(ceil_log2(d_bar));
        return (d_bar - half()) * n_bar + 2 * 10 * d_bar * w * w + n_bar;
    }
};

inline SpcaParams spca_derive_params(std::uint64_t n, std::uint64_t m, std::uint64_t k, const Rational& mu,
                                     std::uint64_t d_bar, const Rational& delta = Rational(1, 12),
                                     bool require_rmu = false) {
    if (m >= n || k == 0) throw std::invalid_argument("spca_derive_params: bad n, m, k");
    if ((n - m) % 2 != 0) throw RmuViolation("n - m must be even");
    if (2 * d_bar <= n - m) throw RmuViolation("d_bar too small: need d_bar > (n-m)/2");
    if (!(delta > 0) || !(delta < Rational(1, 6))) throw RmuViolation("delta outside (0, 1/6)");
    if (mu < Rational(1, 3) || !(mu < Rational(1, 2) - delta)) throw RmuViolation("mu outside [1/3, 1/2 - delta)");

    SpcaParams p;
    p.delta = delta;
    p.mu = mu;
    p.n = n;
    p.m = m;
    p.k = k;
    p.d_bar = d_bar;

    // n_bar = ceil((4(n-m)/k)^(1/(1-mu))), all exact integer arithmetic
    BigInt a = BigInt(4) * (n - m), b = k;
    std::int64_t mp = std::int64_t(numerator(mu).convert_to<std::int64_t>());
    std::int64_t mq = std::int64_t(denominator(mu).convert_to<std::int64_t>());
    // exponent 1/(1-mu) = mq / (mq - mp)
    BigInt nb = ceil_rational_pow(a, b, mq, mq - mp);
    p.n_bar = nb.convert_to<std::uint64_t>();
    // k_bar = ceil(n_bar * k / (4(n-m)))
    BigInt num = BigInt(p.n_bar) * k, den = BigInt(4) * (n - m);
    p.k_bar = ((num + den - 1) / den).convert_to<std::uint64_t>();
    p.theta_bar = Rational(BigInt(p.k_bar - 1) * k, BigInt(n - m));

    // R_mu membership
    auto fail = [&](const std::string& s) { p.rmu_failures.push_back(s); };
    // 15 sqrt(k_bar log(120 e d_bar) / n_bar) <= 1  <=>  225 k_bar ln(120 e d_bar) <= n_bar
    long double lhs = 225.0L * (long double)(p.k_bar) * std::log(120.0L * std::exp(1.0L) * (long double)(d_bar));
    if (!(lhs <= (long double)(p.n_bar))) fail("15*sqrt(k_bar*log(120*e*d_bar)/n_bar) > 1");
    // k_bar <= d_bar^0.49  <=>  k_bar^100 <= d_bar^49
    if (pow(BigInt(p.k_bar), 100) > pow(BigInt(d_bar), 49)) fail("k_bar > d_bar^0.49");
    // n_bar^mu <= k_bar  <=>  n_bar^mp <= k_bar^mq
    if (pow(BigInt(p.n_bar), unsigned(mp)) > pow(BigInt(p.k_bar), unsigned(mq))) fail("n_bar^mu > k_bar");
    if (!(p.n_bar < d_bar)) fail("n_bar >= d_bar");
    p.rmu_ok = p.rmu_failures.empty();
    if (require_rmu && !p.rmu_ok) {
        std::string msg = "R_mu violated:";
        for (const auto& f : p.rmu_failures) msg += " [" + f + "]";
        throw RmuViolation(msg);
    }
    return p;
}

// n_bar samples in {-1,+1}^{d_bar}, lazily evaluated.
struct SpcaInstance {
    SpcaParams params;
    std::function<int(std::uint64_t, std::uint64_t)> entry;  // (row in [d_bar], col in [n_bar]) -> -1/+1
};

// rand tape layout: [(d_bar - h) * n_bar filler-row bits, row-major]
// [10*d_bar*ceil(log d_bar)^2 bits for pi_d] [same size slot for pi_n]
// [n_bar sign bits]. h = (n-m)/2.
inline SpcaInstance spca_reduce(const SubInstanceView& sub, const SpcaParams& params, BitTape& rand,
                                WorkspaceMeter* meter = nullptr) {
    std::uint64_t h = params.half();
    std::uint64_t nm = params.n - params.m;
    if (sub.n != nm) throw std::invalid_argument("spca_reduce: sub size != n - m");
    if (params.n_bar > nm)
        throw std::invalid_argument("spca_reduce: n_bar exceeds n - m, adjacency columns unavailable");
    if (rand.length() < params.rand_budget()) throw OutOfBounds("spca_reduce: insufficient rand bits");

    std::uint64_t filler = (params.d_bar - h) * params.n_bar;
    std::uint64_t perm_slot = 10 * params.d_bar * std::uint64_t(ceil_log2(params.d_bar)) * std::uint64_t(ceil_log2(params.d_bar));

    // permutations snapshot their bits at build
    std::vector<std::uint8_t> pd_bits(perm_bits(params.d_bar));
    for (std::uint64_t i = 0; i < pd_bits.size(); ++i) pd_bits[i] = std::uint8_t(rand.read(filler + i));
    auto pi_d = std::make_shared<PermFn>(params.d_bar, std::move(pd_bits));
    std::vector<std::uint8_t> pn_bits(perm_bits(params.n_bar));
    for (std::uint64_t i = 0; i < pn_bits.size(); ++i) pn_bits[i] = std::uint8_t(rand.read(filler + perm_slot + i));
    auto pi_n = std::make_shared<PermFn>(params.n_bar, std::move(pn_bits));

    std::uint64_t sign_off = filler + 2 * perm_slot;
    BitTape* tape = &rand;
    auto sub_edge = sub.edge;
    SpcaInstance inst;
    inst.params = params;
    inst.entry = [params, h, pi_d, pi_n, tape, sign_off, sub_edge, meter](std::uint64_t i, std::uint64_t j) {
        if (i == 0 || i > params.d_bar || j == 0 || j > params.n_bar)
            throw OutOfBounds("spca entry out of range");
        std::optional<WorkspaceMeter::Charge> c;
        if (meter) c = meter->charge("spca.entry", 2 * counter_bits(params.d_bar + params.n_bar));
        std::uint64_t a = pi_d->eval(i, meter), b = pi_n->eval(j, meter);
        int bit;
        if (a <= h) {
            // row a of the shifted block: adjacency row h + a, column b
            bit = (h + a == b) ? 0 : sub_edge(h + a, b);
        } else {
            bit = tape->read((a - h - 1) * params.n_bar + (b - 1));
        }
        int eta = tape->read(sign_off + (j - 1)) ? 1 : -1;
        return eta * (2 * bit - 1);
    };
    return inst;
}

// ---- planted submatrix detection ---------------------------------------

struct SubmatParams {
    std::uint64_t ell = 0, k_s = 0;
    std::uint64_t p_bar = 0, k_bar = 0;
    Rational lambda_bar;
    int t_bar = 0;   // output truncation bits: ceil(4 log2 p_bar)
    double m_bar = 0.0;   // sqrt(6 log2(ell k_s)), report only
    double mu_bar = 0.0;  // 1 / (2 m_bar), report only
    int w_bar = 0;   // pmf support bits: t_bar + 6 ceil(log2(ell k_s))
    int t_big = 0;   // probability bits T: ceil(log2 m_bar) + w_bar + 3 ceil(log2(ell k_s))
    std::uint64_t n2 = 0;  // ell * k_s / 2

    std::uint64_t rand_budget() const { return 2 * n2 * n2 * std::uint64_t(t_big); }
};

inline SubmatParams submat_derive_params(std::uint64_t ell, std::uint64_t k_s, std::uint64_t p_bar,
                                         const Rational& lambda_bar) {
    if (k_s % 20 != 0) throw std::invalid_argument("submat: need 20 | k_s (k_bar = k_s / 20)");
    SubmatParams p;
    p.ell = ell;
    p.k_s = k_s;
    p.p_bar = p_bar;
    p.k_bar = k_s / 20;
    p.lambda_bar = lambda_bar;
    p.n2 = ell * k_s / 2;
    if (!(2 * k_s <= p_bar && p_bar <= p.n2)) throw std::invalid_argument("submat: need 2 k_s <= p_bar <= ell k_s / 2");
    if (p.n2 % p_bar != 0) throw std::invalid_argument("submat: p_bar must divide ell k_s / 2");
    double lg_n = std::log2(double(ell * k_s));
    p.t_bar = int(std::ceil(4.0 * std::log2(double(p_bar))));
    p.m_bar = std::sqrt(6.0 * lg_n);
    p.mu_bar = 1.0 / (2.0 * p.m_bar);
    int clg_n = int(std::ceil(lg_n));
    p.w_bar = p.t_bar + 6 * clg_n;
    p.t_big = int(std::ceil(std::log2(p.m_bar))) + p.w_bar + 3 * clg_n;
    double lam_cap = double(p_bar) / (double(ell * k_s) * std::sqrt(6.0 * lg_n));
    if (lambda_bar.convert_to<double>() > lam_cap)
        throw std::invalid_argument("submat: lambda_bar above p_bar / (ell k_s sqrt(6 log(ell k_s)))");
    return p;
}

struct SubmatInstance {
    SubmatParams params;
    std::function<FixedPoint(std::uint64_t, std::uint64_t)> entry;  // (i, j) in [p_bar]^2, t_bar bits
    // intermediate B matrix, exposed for distributional tests
    std::function<FixedPoint(std::uint64_t, std::uint64_t)> b_entry;  // (a, b) in [N2]^2
};

// rand layout: N2^2 slices of T bits for B0 (row-major), then the same for
// B1. Entry (a,b) of B reads only the slice matching A(a,b), but the budget
// reserves both so the layout never depends on the input graph.
inline SubmatInstance submat_reduce(const SubInstanceView& sub, const SubmatParams& params, BitTape& rand,
                                    const DiscretePmf& q0, const DiscretePmf& q1, WorkspaceMeter* meter = nullptr) {
    if (sub.n != params.ell * params.k_s) throw std::invalid_argument("submat_reduce: sub size != ell * k_s");
    if (q0.prob_bits != params.t_big || q1.prob_bits != params.t_big)
        throw std::invalid_argument("submat_reduce: pmf probability width != T");
    q0.validate();
    q1.validate();
    if (rand.length() < params.rand_budget()) throw OutOfBounds("submat_reduce: insufficient rand bits");

    std::uint64_t n2 = params.n2;
    std::uint64_t t_big = std::uint64_t(params.t_big);
    BitTape* tape = &rand;
    auto sub_edge = sub.edge;
    auto q0p = std::make_shared<DiscretePmf>(q0);
    auto q1p = std::make_shared<DiscretePmf>(q1);

    auto b_entry = [params, n2, t_big, tape, sub_edge, q0p, q1p, meter](std::uint64_t a, std::uint64_t b) {
        if (a == 0 || a > n2 || b == 0 || b > n2) throw OutOfBounds("submat B entry out of range");
        // lower-left quarter: adjacency row n2 + a, column b
        int bit = (n2 + a == b) ? 0 : sub_edge(n2 + a, b);
        std::uint64_t slice = (a - 1) * n2 + (b - 1);
        std::uint64_t off = (bit ? n2 * n2 : 0) * t_big + slice * t_big;
        return inverse_cdf_sample(bit ? *q1p : *q0p, *tape, off, meter);
    };

    SubmatInstance inst;
    inst.params = params;
    inst.b_entry = b_entry;
    std::uint64_t blocks = n2 / params.p_bar;
    int t_bar = params.t_bar;
    inst.entry = [params, b_entry, blocks, t_bar, meter](std::uint64_t i, std::uint64_t j) {
        if (i == 0 || i > params.p_bar || j == 0 || j > params.p_bar)
            throw OutOfBounds("submat entry out of range");
        std::optional<WorkspaceMeter::Charge> c;
        // accumulator: w_bar fraction bits plus headroom for the block count
        // and value magnitude; two block-index counters
        if (meter)
            c = meter->charge("submat.block_sum",
                              std::uint64_t(params.w_bar) + 8 + 4 * counter_bits(blocks + 1));
        // sum of all blocks divided by N2 / p_bar, in exact fixed point
        BigInt acc = 0;  // at w_bar fraction bits
        for (std::uint64_t bi = 0; bi < blocks; ++bi)
            for (std::uint64_t bj = 0; bj < blocks; ++bj)
                acc += b_entry(bi * params.p_bar + i, bj * params.p_bar + j).raw;
        Rational x(acc, BigInt(1) << unsigned(params.w_bar));
        x /= Rational(blocks);
        return truncate(x, t_bar);
    };
    return inst;
}

// ---- testing almost k-wise independence --------------------------------

struct KwiseParams {
    Rational alpha;           // exponent parameter; n_bar = 2^(k_bar / alpha)
    std::uint64_t ell_exp = 0;  // n = 2^ell_exp
    std::uint64_t k = 0;
    std::uint64_t k_bar = 0;  // 1 + ell_exp
    std::uint64_t n_bar = 0;
    std::uint64_t s_bar = 0;
    double eps = 0.0;       // 2 alpha log2^2(n_bar) / n_bar^alpha
    double eps_prime = 0.0;  // (k - 2) / n_bar^alpha

    std::uint64_t n() const { return std::uint64_t(1) << ell_exp; }
    std::uint64_t rand_budget() const { return n() + n() * (n_bar - n()) + ell_exp * s_bar; }
};

inline KwiseParams kwise_derive_params(const Rational& alpha, std::uint64_t ell_exp, std::uint64_t k,
                                       std::uint64_t s_bar) {
    if (!(alpha > 0)) throw std::invalid_argument("kwise: alpha must be positive");
    KwiseParams p;
    p.alpha = alpha;
    p.ell_exp = ell_exp;
    p.k = k;
    p.k_bar = 1 + ell_exp;
    // n_bar = 2^(k_bar / alpha); require the exponent to be integral
    BigInt e_num = BigInt(p.k_bar) * denominator(alpha);
    BigInt e_den = numerator(alpha);
    if (e_num % e_den != 0) throw std::invalid_argument("kwise: k_bar / alpha must be an integer exponent");
    std::uint64_t e = (e_num / e_den).convert_to<std::uint64_t>();
    if (e >= 63) throw std::invalid_argument("kwise: n_bar too large");
    p.n_bar = std::uint64_t(1) << e;
    if (p.n_bar < p.n()) throw std::invalid_argument("kwise: n_bar < n");
    p.s_bar = s_bar;
    double a = alpha.convert_to<double>();
    double na = std::pow(double(p.n_bar), a);
    double lg = std::log2(double(p.n_bar));
    p.eps = 2.0 * a * lg * lg / na;
    p.eps_prime = double(k - 2) / na;
    return p;
}

struct KwiseInstance {
    KwiseParams params;
    std::function<int(std::uint64_t, std::uint64_t)> sample_bit;  // (t in [s_bar], j in [n_bar])
    std::function<std::uint64_t(std::uint64_t)> row_pick;         // t -> chosen row in [n]
};

// rand layout: [n diagonal bits] [n * (n_bar - n) padding column bits,
// row-major] [ell_exp bits per row pick, s_bar picks].
inline KwiseInstance kwise_reduce(const SubInstanceView& sub, const KwiseParams& params, BitTape& rand,
                                  WorkspaceMeter* meter = nullptr) {
    std::uint64_t n = params.n();
    if (sub.n != n) throw std::invalid_argument("kwise_reduce: sub size != 2^ell_exp");
    if (rand.length() < params.rand_budget()) throw OutOfBounds("kwise_reduce: insufficient rand bits");
    BitTape* tape = &rand;
    auto sub_edge = sub.edge;

    std::uint64_t pad_off = n;
    std::uint64_t pick_off = n + n * (params.n_bar - n);
    auto row_pick = [params, tape, pick_off](std::uint64_t t) {
        if (t == 0 || t > params.s_bar) throw OutOfBounds("kwise sample index out of range");
        std::uint64_t v = 0;
        for (std::uint64_t b = 0; b < params.ell_exp; ++b)
            v = (v << 1) | std::uint64_t(tape->read(pick_off + (t - 1) * params.ell_exp + b));
        return v + 1;
    };

    KwiseInstance inst;
    inst.params = params;
    inst.row_pick = row_pick;
    inst.sample_bit = [params, n, tape, pad_off, row_pick, sub_edge, meter](std::uint64_t t, std::uint64_t j) {
        if (j == 0 || j > params.n_bar) throw OutOfBounds("kwise column out of range");
        std::optional<WorkspaceMeter::Charge> c;
        if (meter) c = meter->charge("kwise.sample_bit", 3 * counter_bits(params.n_bar + params.s_bar));
        std::uint64_t row = row_pick(t);
        if (j <= n) {
            if (j == row) return tape->read(row - 1);  // random diagonal
            return sub_edge(row, j);
        }
        return tape->read(pad_off + (row - 1) * (params.n_bar - n) + (j - n - 1));
    };
    return inst;
}

// ---- recovery-to-detection ---------------------------------------------

// A hypergraph with its vertices renamed through a logspace-computable
// permutation; recovery oracles run against this view.
struct RenamedHypergraph {
    const HypergraphInstance* base = nullptr;
    std::function<std::uint64_t(std::uint64_t)> rename;  // view vertex -> base vertex

    std::uint64_t n() const { return base->n; }
    std::uint64_t s() const { return base->s; }

    int hyperedge(std::vector<std::uint64_t> subset) const {
        for (auto& v : subset) v = rename(v);
        std::sort(subset.begin(), subset.end());
        return base->hyperedge(subset);
    }

    // For cheating/test oracles only: planted set in view coordinates.
    std::optional<std::vector<std::uint64_t>> planted_view() const {
        if (!base->planted) return std::nullopt;
        std::vector<std::uint64_t> out;
        for (std::uint64_t v = 1; v <= base->n; ++v) {
            std::uint64_t b = rename(v);
            for (std::uint64_t p : *base->planted)
                if (p == b) out.push_back(v);
        }
        return out;
    }
};

using HypergraphRecoveryOracle = std::function<bool(const RenamedHypergraph&, std::uint64_t)>;

// Enumerates all increasing (s-2)-tuples, pretends each is leaked clique
// membership, runs the recovery oracle on the renamed hypergraph, and
// accepts when the flagged vertices form a clique of size >= k.
inline int detect_via_recovery_hpc(const HypergraphInstance& input, std::uint64_t k,
                                   const HypergraphRecoveryOracle& oracle, WorkspaceMeter* meter = nullptr) {
    std::uint64_t s = input.s, n = input.n;
    std::optional<WorkspaceMeter::Charge> c;
    // s-2 tuple counters, a vertex counter, plus bookkeeping
    if (meter) c = meter->charge("detect_hpc.counters", (s + 2) * counter_bits(n));

    std::vector<std::uint64_t> tuple(s - 2);
    for (std::uint64_t i = 0; i < s - 2; ++i) tuple[i] = i + 1;
    for (;;) {
        // rename: [s-2] -> tuple; the rest order-preserving onto the complement
        auto tuple_copy = tuple;
        auto rename = [tuple_copy, s](std::uint64_t i) -> std::uint64_t {
            if (i <= s - 2) return tuple_copy[i - 1];
            // (i - (s-2))-th smallest positive integer not in the tuple
            std::uint64_t need = i - (s - 2), v = 0, count = 0;
            while (count < need) {
                ++v;
                bool in_tuple = false;
                for (std::uint64_t t : tuple_copy)
                    if (t == v) in_tuple = true;
                if (!in_tuple) ++count;
            }
            return v;
        };
        RenamedHypergraph view{&input, rename};
        std::vector<std::uint64_t> flagged;
        for (std::uint64_t v = 1; v <= n; ++v)
            if (oracle(view, v)) flagged.push_back(v);
        if (flagged.size() >= k) {
            // every s-subset of the flagged set must be a hyperedge
            bool clique = true;
            std::vector<std::uint64_t> idx(s);
            for (std::uint64_t i = 0; i < s && clique; ++i) idx[i] = i;
            if (flagged.size() >= s) {
                for (;;) {
                    std::vector<std::uint64_t> subset(s);
                    for (std::uint64_t i = 0; i < s; ++i) subset[i] = flagged[idx[i]];
                    if (!view.hyperedge(subset)) {
                        clique = false;
                        break;
                    }
                    std::int64_t pos = std::int64_t(s) - 1;
                    while (pos >= 0 && idx[std::uint64_t(pos)] == flagged.size() - s + std::uint64_t(pos)) --pos;
                    if (pos < 0) break;
                    ++idx[std::uint64_t(pos)];
                    for (std::uint64_t i = std::uint64_t(pos) + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
                }
            }
            if (clique) return 1;
        }
        // next increasing tuple
        std::int64_t pos = std::int64_t(s) - 3;
        while (pos >= 0 && tuple[std::uint64_t(pos)] == n - (s - 2) + std::uint64_t(pos) + 1) --pos;
        if (pos < 0) break;
        ++tuple[std::uint64_t(pos)];
        for (std::uint64_t i = std::uint64_t(pos) + 1; i < s - 2; ++i) tuple[i] = tuple[i - 1] + 1;
    }
    return 0;
}

struct RenamedGraph {
    const GraphInstance* base = nullptr;
    std::uint64_t swap_vertex = 1;  // vertices 1 and swap_vertex exchanged

    std::uint64_t n() const { return base->n; }
    std::uint64_t rename(std::uint64_t v) const {
        if (v == 1) return swap_vertex;
        if (v == swap_vertex) return 1;
        return v;
    }
    int edge(std::uint64_t i, std::uint64_t j) const { return base->edge(rename(i), rename(j)); }

    std::optional<std::vector<std::uint64_t>> planted_view() const {
        if (!base->planted) return std::nullopt;
        std::vector<std::uint64_t> out;
        for (std::uint64_t p : *base->planted) out.push_back(rename(p));
        std::sort(out.begin(), out.end());
        return out;
    }
};

using GraphRecoveryOracle = std::function<bool(const RenamedGraph&, std::uint64_t)>;

// k-partite analogue: iterate over the first block, swapping each candidate
// into position 1; accept when the flagged set is a size-k clique with
// exactly one vertex per block.
inline int detect_via_recovery_kpc(const GraphInstance& input, const GraphRecoveryOracle& oracle,
                                   WorkspaceMeter* meter = nullptr) {
    std::uint64_t ell = input.ell;
    if (ell == 0) throw std::invalid_argument("detect_via_recovery_kpc: input needs ell recorded");
    std::uint64_t k = input.n / ell;
    std::optional<WorkspaceMeter::Charge> c;
    if (meter) c = meter->charge("detect_kpc.counters", 4 * counter_bits(input.n));
    for (std::uint64_t i = 1; i <= ell; ++i) {
        RenamedGraph view{&input, i};
        std::vector<std::uint64_t> flagged;
        for (std::uint64_t v = 1; v <= input.n; ++v)
            if (oracle(view, v)) flagged.push_back(v);
        if (flagged.size() != k) continue;
        bool ok = true;
        for (std::uint64_t b = 0; b < k && ok; ++b) {
            // exactly one flagged vertex in block b
            std::uint64_t cnt = 0;
            for (std::uint64_t v : flagged)
                if (v > b * ell && v <= (b + 1) * ell) ++cnt;
            ok = cnt == 1;
        }
        for (std::size_t x = 0; x < flagged.size() && ok; ++x)
            for (std::size_t y = x + 1; y < flagged.size() && ok; ++y)
                ok = view.edge(flagged[x], flagged[y]) == 1;
        if (ok) return 1;
    }
    return 0;
}

}  // namespace cliquespace
