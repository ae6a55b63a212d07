#pragma once

// Exact fixed-point values: value = raw / 2^t with a big-integer raw part.
// Nothing in the reduction value paths touches floating point, so outputs
// are bit-identical across platforms and build modes.

#include "numeric.hpp"
#include "tape.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cliquespace {

struct FixedPoint {
    int t = 0;       // fraction bits
    BigInt raw = 0;  // value = raw / 2^t

    Rational value() const { return Rational(raw, BigInt(1) << unsigned(t)); }

    bool operator==(const FixedPoint& o) const { return t == o.t && raw == o.raw; }
    bool operator<(const FixedPoint& o) const { return value() < o.value(); }
};

// [x]_t = 2^-t * floor(2^t * x). Floor, not round-toward-zero.
inline FixedPoint truncate(const Rational& x, int t) {
    BigInt num = numerator(x) * (BigInt(1) << unsigned(t));
    BigInt den = denominator(x);
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;  // floor for negatives
    return FixedPoint{t, q};
}

inline FixedPoint truncate(const FixedPoint& x, int t) { return truncate(x.value(), t); }

// A finite pmf over fixed-point support values; probabilities are held as
// T-bit fixed-point raw integers so the inverse-CDF scan is exact.
struct DiscretePmf {
    int value_bits = 0;  // w: support values at w fraction bits
    int prob_bits = 0;   // T: probabilities as raw / 2^T
    std::vector<FixedPoint> support;  // ascending
    std::vector<BigInt> prob_raw;     // same length as support

    void validate() const {
        if (support.size() != prob_raw.size() || support.empty()) throw std::invalid_argument("malformed pmf");
        BigInt total = 0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (support[i].t != value_bits) throw std::invalid_argument("pmf support at wrong bit width");
            if (i > 0 && !(support[i - 1] < support[i])) throw std::invalid_argument("pmf support not ascending");
            if (prob_raw[i] < 0) throw std::invalid_argument("negative pmf entry");
            total += prob_raw[i];
        }
        // sum within per-entry slack of 2^-T
        BigInt one = BigInt(1) << unsigned(prob_bits);
        BigInt slack = BigInt(std::int64_t(support.size()));
        if (total > one || total + slack < one) throw std::invalid_argument("pmf mass not ~1");
    }

    static DiscretePmf point_mass(const FixedPoint& v, int prob_bits) {
        DiscretePmf q;
        q.value_bits = v.t;
        q.prob_bits = prob_bits;
        q.support = {v};
        q.prob_raw = {BigInt(1) << unsigned(prob_bits)};
        return q;
    }
};

// Inverse-CDF draw: read exactly T bits (most significant first) as a uniform
// u in [0,1), return the first support value whose cumulative mass exceeds u.
// Linear scan; one cumulative accumulator plus the scan index.
inline FixedPoint inverse_cdf_sample(const DiscretePmf& q, BitTape& bits, std::uint64_t offset,
                                     WorkspaceMeter* meter = nullptr) {
    q.validate();
    std::optional<WorkspaceMeter::Charge> charge;
    // u and the cumulative accumulator are T-bit registers; the scan index is
    // a counter over the support
    if (meter)
        charge = meter->charge("inverse_cdf.scan",
                               2 * std::uint64_t(q.prob_bits) + counter_bits(q.support.size()));
    BigInt u = 0;
    for (int i = 0; i < q.prob_bits; ++i) u = (u << 1) | bits.read(offset + std::uint64_t(i));
    BigInt cum = 0;
    for (std::size_t i = 0; i < q.support.size(); ++i) {
        cum += q.prob_raw[i];
        if (cum > u) return q.support[i];
    }
    return q.support.back();  // rounding slack: u landed past the last step
}

inline FixedPoint inverse_cdf_sample(const DiscretePmf& q, BitSource& src, WorkspaceMeter* meter = nullptr) {
    q.validate();
    std::optional<WorkspaceMeter::Charge> charge;
    if (meter)
        charge = meter->charge("inverse_cdf.scan",
                               2 * std::uint64_t(q.prob_bits) + counter_bits(q.support.size()));
    BigInt u = 0;
    for (int i = 0; i < q.prob_bits; ++i) u = (u << 1) | src.next();
    BigInt cum = 0;
    for (std::size_t i = 0; i < q.support.size(); ++i) {
        cum += q.prob_raw[i];
        if (cum > u) return q.support[i];
    }
    return q.support.back();
}

}  // namespace cliquespace
