#pragma once

// Ground-truth machinery for the test suites: exhaustive enumeration of the
// tiny-scale samplers into exact rational distributions, total variation
// distance, brute-force hypergraph max clique, and chi-square batteries.
// Everything in the value path here is exact rational arithmetic, so TV = 0
// claims are equalities rather than approximations.

#include "graph.hpp"
#include "numeric.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cliquespace {

struct ExactDistribution {
    std::map<std::string, Rational> outcomes;

    Rational total_mass() const {
        Rational t = 0;
        for (const auto& [_, p] : outcomes) t += p;
        return t;
    }

    void add(const std::string& key, const Rational& p) { outcomes[key] += p; }

    // Renormalize to mass 1 (conditioning).
    ExactDistribution conditioned() const {
        Rational t = total_mass();
        if (t == 0) throw std::runtime_error("conditioning on a null event");
        ExactDistribution d;
        for (const auto& [k, p] : outcomes) d.outcomes[k] = p / t;
        return d;
    }
};

inline Rational tv_distance(const ExactDistribution& a, const ExactDistribution& b) {
    Rational sum = 0;
    for (const auto& [k, p] : a.outcomes) {
        auto it = b.outcomes.find(k);
        Rational q = (it == b.outcomes.end()) ? Rational(0) : it->second;
        sum += abs(p - q);
    }
    for (const auto& [k, q] : b.outcomes) {
        if (a.outcomes.find(k) == a.outcomes.end()) sum += q;
    }
    return sum / 2;
}

struct BudgetTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string graph_key(const GraphInstance& g) {
    std::string s(g.edges.size(), '0');
    for (std::uint64_t r = 0; r < g.edges.size(); ++r) s[r] = char('0' + g.edges.get(r));
    return s;
}

}  // namespace detail

// Enumerate a graph distribution exactly: every planted support (uniform over
// supports) crossed with every pattern of non-forced edge bits. The visitor
// receives each concrete instance with its exact probability.
inline void enumerate_graph(GraphVariant variant, std::uint64_t n, std::uint64_t k, std::uint64_t ell,
                            const std::function<void(const GraphInstance&, const Rational&)>& visit,
                            std::uint64_t free_bit_budget = 24) {
    check_graph_params(variant, n, k, ell);
    std::uint64_t m = n * (n - 1) / 2;
    auto supports = detail::planted_supports(variant, n, k, ell);
    std::size_t nsupports = supports.empty() ? 1 : supports.size();

    GraphInstance g;
    g.n = n;
    g.variant = variant;
    g.k = (variant == GraphVariant::ER) ? 0 : k;
    g.ell = (variant == GraphVariant::KPC || variant == GraphVariant::CLKPC) ? ell : 0;

    for (std::size_t si = 0; si < nsupports; ++si) {
        std::vector<std::uint8_t> in_clique(n + 1, 0);
        g.planted.reset();
        if (!supports.empty()) {
            g.planted = supports[si];
            for (std::uint64_t v : supports[si]) in_clique[v] = 1;
        }
        std::vector<std::uint64_t> free_ranks;
        g.edges = BitArray(m);
        for (std::uint64_t r = 0; r < m; ++r) {
            auto [i, j] = edge_unrank(r);
            if (in_clique[i] && in_clique[j])
                g.edges.set(r, 1);
            else
                free_ranks.push_back(r);
        }
        if (free_ranks.size() > free_bit_budget) throw BudgetTooLarge("too many free edge bits to enumerate");
        std::uint64_t patterns = std::uint64_t(1) << free_ranks.size();
        Rational p = Rational(1, nsupports) / Rational(BigInt(patterns));
        for (std::uint64_t pat = 0; pat < patterns; ++pat) {
            for (std::size_t b = 0; b < free_ranks.size(); ++b) g.edges.set(free_ranks[b], int((pat >> b) & 1));
            visit(g, p);
        }
    }
}

inline void enumerate_hypergraph(HypergraphVariant variant, std::uint64_t n, std::uint64_t s, std::uint64_t k,
                                 const std::function<void(const HypergraphInstance&, const Rational&)>& visit,
                                 std::uint64_t free_bit_budget = 24) {
    check_hypergraph_params(variant, n, s, k);
    std::uint64_t m = binom_u64(std::int64_t(n), std::int64_t(s));
    auto supports = detail::hyper_planted_supports(variant, n, s, k);
    std::size_t nsupports = supports.empty() ? 1 : supports.size();

    HypergraphInstance h;
    h.n = n;
    h.s = s;
    h.variant = variant;
    h.k = (variant == HypergraphVariant::HER) ? 0 : k;

    for (std::size_t si = 0; si < nsupports; ++si) {
        std::vector<std::uint8_t> in_clique(n + 1, 0);
        h.planted.reset();
        if (!supports.empty()) {
            h.planted = supports[si];
            for (std::uint64_t v : supports[si]) in_clique[v] = 1;
        }
        std::vector<std::uint64_t> free_ranks;
        h.hyperedges = BitArray(m);
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
                free_ranks.push_back(r);
        }
        if (free_ranks.size() > free_bit_budget) throw BudgetTooLarge("too many free hyperedge bits to enumerate");
        std::uint64_t patterns = std::uint64_t(1) << free_ranks.size();
        Rational p = Rational(1, nsupports) / Rational(BigInt(patterns));
        for (std::uint64_t pat = 0; pat < patterns; ++pat) {
            for (std::size_t b = 0; b < free_ranks.size(); ++b) h.hyperedges.set(free_ranks[b], int((pat >> b) & 1));
            visit(h, p);
        }
    }
}

// Full edge-bit-string distribution of a graph sampler spec.
inline ExactDistribution enumerate_graph_distribution(GraphVariant variant, std::uint64_t n, std::uint64_t k,
                                                      std::uint64_t ell, std::uint64_t free_bit_budget = 24) {
    ExactDistribution d;
    enumerate_graph(
        variant, n, k, ell, [&](const GraphInstance& g, const Rational& p) { d.add(detail::graph_key(g), p); },
        free_bit_budget);
    return d;
}

// Distribution of a projection of the instance (e.g. an induced subgraph, or
// a harvested (sub, rand) pair encoded as a string).
inline ExactDistribution enumerate_graph_projection(
    GraphVariant variant, std::uint64_t n, std::uint64_t k, std::uint64_t ell,
    const std::function<std::optional<std::string>(const GraphInstance&)>& project,
    std::uint64_t free_bit_budget = 24) {
    ExactDistribution d;
    enumerate_graph(
        variant, n, k, ell,
        [&](const GraphInstance& g, const Rational& p) {
            auto key = project(g);
            if (key) d.add(*key, p);
        },
        free_bit_budget);
    return d;
}

inline ExactDistribution enumerate_hypergraph_projection(
    HypergraphVariant variant, std::uint64_t n, std::uint64_t s, std::uint64_t k,
    const std::function<std::optional<std::string>(const HypergraphInstance&)>& project,
    std::uint64_t free_bit_budget = 24) {
    ExactDistribution d;
    enumerate_hypergraph(
        variant, n, s, k,
        [&](const HypergraphInstance& h, const Rational& p) {
            auto key = project(h);
            if (key) d.add(*key, p);
        },
        free_bit_budget);
    return d;
}

// Product of a distribution with b i.i.d. fair bits, keys joined by '|'.
inline ExactDistribution product_with_fair_bits(const ExactDistribution& d, std::uint64_t b) {
    if (b > 24) throw BudgetTooLarge("too many fair bits for product enumeration");
    ExactDistribution out;
    std::uint64_t patterns = std::uint64_t(1) << b;
    Rational q(1, BigInt(patterns));
    for (const auto& [key, p] : d.outcomes) {
        for (std::uint64_t pat = 0; pat < patterns; ++pat) {
            std::string bits(b, '0');
            for (std::uint64_t i = 0; i < b; ++i) bits[i] = char('0' + ((pat >> i) & 1));
            out.add(key + "|" + bits, p * q);
        }
    }
    return out;
}

// ---- brute-force hypergraph max clique ---------------------------------

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool extends_clique(const HypergraphInstance& h, const std::vector<std::uint64_t>& clique, std::uint64_t v) {
    // All (s-1)-subsets of `clique` together with v must be hyperedges.
    std::uint64_t s = h.s;
    if (clique.size() + 1 < s) return true;
    std::vector<std::uint64_t> idx(s - 1);
    // enumerate (s-1)-subsets of clique by index combination
    for (std::uint64_t i = 0; i < s - 1; ++i) idx[i] = i;
    for (;;) {
        std::vector<std::uint64_t> subset;
        subset.reserve(s);
        for (std::uint64_t i : idx) subset.push_back(clique[i]);
        subset.push_back(v);
        std::sort(subset.begin(), subset.end());
        if (!h.hyperedge(subset)) return false;
        // next combination
        std::int64_t pos = std::int64_t(s) - 2;
        while (pos >= 0 && idx[pos] == clique.size() - (s - 1) + std::uint64_t(pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::uint64_t i = std::uint64_t(pos) + 1; i < s - 1; ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
}

inline void max_clique_rec(const HypergraphInstance& h, std::vector<std::uint64_t>& clique, std::uint64_t next,
                           std::uint64_t& best) {
    if (clique.size() > best) best = clique.size();
    if (clique.size() + (h.n - next + 1) <= best) return;  // prune
    for (std::uint64_t v = next; v <= h.n; ++v) {
        if (clique.size() + (h.n - v + 1) <= best) break;
        if (extends_clique(h, clique, v)) {
            clique.push_back(v);
            max_clique_rec(h, clique, v + 1, best);
            clique.pop_back();
        }
    }
}

}  // namespace detail

// Exact maximum t such that some t-subset has all its s-subsets present.
// For an empty hypergraph this is s-1 (vacuously a clique).
inline std::uint64_t max_clique_hypergraph(const HypergraphInstance& h) {
    if (h.n > 40) throw TooLarge("max_clique_hypergraph supports n <= 40");
    std::uint64_t best = std::min<std::uint64_t>(h.s - 1, h.n);
    std::vector<std::uint64_t> clique;
    detail::max_clique_rec(h, clique, 1, best);
    return best;
}

// Independent check: bitmask dynamic program, n <= 20.
inline std::uint64_t max_clique_hypergraph_bitmask(const HypergraphInstance& h) {
    if (h.n > 20) throw TooLarge("bitmask max clique supports n <= 20");
    std::uint32_t full = (h.n >= 32) ? ~0u : ((1u << h.n) - 1);
    std::vector<std::uint8_t> is_clique(std::size_t(full) + 1, 0);
    std::uint64_t best = 0;
    // Process masks in increasing order; a mask's submask with the top vertex
    // removed is always smaller, so the DP order is valid.
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::uint32_t pc = std::uint32_t(__builtin_popcount(mask));
        if (pc < h.s) {
            is_clique[mask] = 1;
        } else {
            std::uint32_t top = 31 - std::uint32_t(__builtin_clz(mask));
            std::uint32_t rest = mask & ~(1u << top);
            if (is_clique[rest]) {
                std::vector<std::uint64_t> members;
                for (std::uint32_t b = 0; b < h.n; ++b)
                    if (rest & (1u << b)) members.push_back(b + 1);
                is_clique[mask] = detail::extends_clique(h, members, top + 1) ? 1 : 0;
            }
        }
        if (is_clique[mask] && pc > best) best = pc;
        if (mask == full) break;
    }
    return std::max<std::uint64_t>(best, std::min<std::uint64_t>(h.s - 1, h.n));
}

// Exact union bound on P(exists clique of size >= t) in HG^s(n, 1/2):
// C(n,t) * 2^{-C(t,s)}.
inline Rational hyper_clique_union_bound(std::uint64_t n, std::uint64_t s, std::uint64_t t) {
    BigInt sets = binom(std::int64_t(n), std::int64_t(t));
    BigInt denom = pow(BigInt(2), static_cast<unsigned>(binom_u64(std::int64_t(t), std::int64_t(s))));
    return Rational(sets, denom);
}

// P(exists clique of size >= t) union bound in G(n, 1/2): C(n,t) * 2^{-C(t,2)}.
inline Rational graph_clique_union_bound(std::uint64_t n, std::uint64_t t) {
    BigInt sets = binom(std::int64_t(n), std::int64_t(t));
    BigInt denom = pow(BigInt(2), static_cast<unsigned>(t * (t - 1) / 2));
    return Rational(sets, denom);
}

// ---- statistical battery ------------------------------------------------

struct StatTest {
    std::string name;
    double statistic = 0.0;
    double p_value = 1.0;
    bool pass = true;
};

struct StatReport {
    double alpha = 1e-3;
    std::vector<StatTest> tests;

    // Bonferroni across the battery.
    void finalize() {
        double cut = alpha / std::max<std::size_t>(1, tests.size());
        for (auto& t : tests) t.pass = t.p_value >= cut;
    }
    bool all_pass() const {
        for (const auto& t : tests)
            if (!t.pass) return false;
        return true;
    }
};

// One-proportion chi-square (1 dof): observed successes vs expected p.
inline StatTest proportion_test(const std::string& name, std::uint64_t ones, std::uint64_t trials, double p) {
    StatTest t;
    t.name = name;
    double e1 = double(trials) * p, e0 = double(trials) * (1.0 - p);
    double o1 = double(ones), o0 = double(trials - ones);
    t.statistic = (o1 - e1) * (o1 - e1) / e1 + (o0 - e0) * (o0 - e0) / e0;
    boost::math::chi_squared chi(1);
    t.p_value = boost::math::cdf(boost::math::complement(chi, t.statistic));
    return t;
}

// Chi-square goodness of fit over arbitrary categories.
inline StatTest gof_test(const std::string& name, const std::vector<std::uint64_t>& observed,
                         const std::vector<double>& expected_probs, std::uint64_t trials) {
    StatTest t;
    t.name = name;
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = double(trials) * expected_probs[i];
        if (e <= 0) continue;
        double diff = double(observed[i]) - e;
        stat += diff * diff / e;
    }
    t.statistic = stat;
    boost::math::chi_squared chi(double(observed.size()) - 1.0);
    t.p_value = boost::math::cdf(boost::math::complement(chi, stat));
    return t;
}

// 2x2 independence chi-square for a pair of binary observables.
inline StatTest pair_independence_test(const std::string& name, const std::array<std::uint64_t, 4>& counts) {
    // counts indexed by (a<<1)|b
    StatTest t;
    t.name = name;
    double n = 0;
    for (auto c : counts) n += double(c);
    double a1 = double(counts[2] + counts[3]), b1 = double(counts[1] + counts[3]);
    double pa = a1 / n, pb = b1 / n;
    double stat = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double e = n * (a ? pa : 1 - pa) * (b ? pb : 1 - pb);
            if (e <= 0) continue;
            double o = double(counts[(a << 1) | b]);
            stat += (o - e) * (o - e) / e;
        }
    t.statistic = stat;
    boost::math::chi_squared chi(1);
    t.p_value = boost::math::cdf(boost::math::complement(chi, stat));
    return t;
}

}  // namespace cliquespace
