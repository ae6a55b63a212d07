#pragma once

// Instrumented bit-level access model. Every reduction in this library pulls
// its bits through a BitTape so that access policies (read-once vs multiple
// access) and workspace bounds are machine-checkable rather than proof-side
// claims.

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquespace {

struct TapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfBounds : TapeError {
    using TapeError::TapeError;
};
struct ReadOncePolicyViolation : TapeError {
    using TapeError::TapeError;
};
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientHarvest : TapeError {
    using TapeError::TapeError;
};

enum class TapePolicy { MultipleAccess, ReadOnce };

// Bits needed for a counter ranging over [0, range]: the model charges
// counters at their actual O(log N) width, not a machine-word size.
inline std::uint64_t counter_bits(std::uint64_t range) {
    std::uint64_t b = 1;
    while ((std::uint64_t(1) << b) <= range && b < 63) ++b;
    return b;
}

// Bit oracle: position -> bit. May throw to propagate source errors.
using BitOracle = std::function<int(std::uint64_t)>;

class BitTape {
public:
    static BitTape explicit_tape(std::vector<std::uint8_t> bits, TapePolicy policy) {
        BitTape t;
        t.length_ = bits.size();
        t.policy_ = policy;
        t.explicit_bits_ = std::move(bits);
        t.derived_ = false;
        return t;
    }

    static BitTape derived_tape(BitOracle oracle, std::uint64_t length, TapePolicy policy) {
        BitTape t;
        t.length_ = length;
        t.policy_ = policy;
        t.oracle_ = std::move(oracle);
        t.derived_ = true;
        return t;
    }

    std::uint64_t length() const { return length_; }
    TapePolicy policy() const { return policy_; }
    std::uint64_t head() const { return head_; }
    std::uint64_t reads() const { return reads_; }
    bool derived() const { return derived_; }

    int read(std::uint64_t pos) {
        if (pos >= length_) throw OutOfBounds("tape read at " + std::to_string(pos) + " >= length " + std::to_string(length_));
        if (policy_ == TapePolicy::ReadOnce && pos != head_)
            throw ReadOncePolicyViolation("read-once tape: position " + std::to_string(pos) + " != head " + std::to_string(head_));
        int b = derived_ ? oracle_(pos) : int(explicit_bits_[pos]);
        ++reads_;
        if (policy_ == TapePolicy::ReadOnce) ++head_;
        return b;
    }

    // Convenience for read-once consumption.
    int next() { return read(head_); }

private:
    BitTape() = default;
    std::uint64_t length_ = 0;
    TapePolicy policy_ = TapePolicy::MultipleAccess;
    std::uint64_t head_ = 0;
    std::uint64_t reads_ = 0;
    bool derived_ = false;
    std::vector<std::uint8_t> explicit_bits_;
    BitOracle oracle_;
};

// Cooperative workspace accounting. Operations that claim a logspace
// discipline charge their live counters here; strict mode turns an
// over-budget charge into an error instead of a log entry.
class WorkspaceMeter {
public:
    explicit WorkspaceMeter(std::uint64_t limit_bits, bool strict = true)
        : limit_(limit_bits), strict_(strict) {}

    // limit = c * ceil(log2 input_size)
    static WorkspaceMeter for_input(std::uint64_t input_size_bits, std::uint64_t c = 16, bool strict = true) {
        std::uint64_t lg = 1;
        while ((std::uint64_t(1) << lg) < input_size_bits && lg < 63) ++lg;
        return WorkspaceMeter(c * lg, strict);
    }

    class Charge {
    public:
        Charge() = default;
        Charge(WorkspaceMeter* m, std::uint64_t bits) : meter_(m), bits_(bits) {}
        Charge(const Charge&) = delete;
        Charge& operator=(const Charge&) = delete;
        Charge(Charge&& o) noexcept : meter_(o.meter_), bits_(o.bits_) { o.meter_ = nullptr; }
        Charge& operator=(Charge&& o) noexcept {
            release();
            meter_ = o.meter_;
            bits_ = o.bits_;
            o.meter_ = nullptr;
            return *this;
        }
        ~Charge() { release(); }
        void release() {
            if (meter_) {
                meter_->live_ -= bits_;
                meter_ = nullptr;
            }
        }

    private:
        WorkspaceMeter* meter_ = nullptr;
        std::uint64_t bits_ = 0;
    };

    Charge charge(const std::string& label, std::uint64_t bits) {
        live_ += bits;
        if (live_ > peak_) peak_ = live_;
        charges_.emplace_back(label, bits);
        if (live_ > limit_) {
            violated_ = true;
            if (strict_)
                throw LimitExceeded("workspace limit " + std::to_string(limit_) + " bits exceeded by charge '" + label +
                                    "' (live " + std::to_string(live_) + ")");
        }
        return Charge(this, bits);
    }

    std::uint64_t limit() const { return limit_; }
    std::uint64_t peak() const { return peak_; }
    std::uint64_t live() const { return live_; }
    bool violated() const { return violated_; }
    const std::vector<std::pair<std::string, std::uint64_t>>& charges() const { return charges_; }

private:
    friend class Charge;
    std::uint64_t limit_;
    bool strict_;
    std::uint64_t live_ = 0;
    std::uint64_t peak_ = 0;
    bool violated_ = false;
    std::vector<std::pair<std::string, std::uint64_t>> charges_;
};

// Counter-based deterministic random bit stream. Same (seed, index) gives the
// same bit on every platform, which keeps whole pipeline runs replayable.
class BitStream {
public:
    static constexpr const char* kGeneratorId = "splitmix64-ctr-v1";

    explicit BitStream(std::uint64_t seed) : seed_(seed) {}

    // Random access: i-th bit of the stream.
    int bit_at(std::uint64_t index) const {
        std::uint64_t word = mix(seed_ + 0x9E3779B97F4A7C15ULL * (index >> 6));
        return int((word >> (index & 63)) & 1);
    }

    // Sequential consumption (read-once flavor used by samplers).
    int next() { return bit_at(counter_++); }

    std::uint64_t consumed() const { return counter_; }
    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Abstract read-once source of fair bits. Samplers draw from this so that the
// same code path can be driven by a BitStream or by an exhaustive enumerator.
class BitSource {
public:
    virtual ~BitSource() = default;
    virtual int next() = 0;
};

class StreamSource final : public BitSource {
public:
    explicit StreamSource(BitStream& s) : s_(s) {}
    int next() override { return s_.next(); }

private:
    BitStream& s_;
};

// Fixed pattern source; throws when the pattern is exhausted. The enumeration
// oracle grows patterns on demand to cover every consumption trace.
class FixedSource final : public BitSource {
public:
    explicit FixedSource(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
    int next() override {
        if (pos_ >= bits_.size()) throw OutOfBounds("fixed bit source exhausted");
        return bits_[pos_++];
    }
    std::size_t consumed() const { return pos_; }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t pos_ = 0;
};

// Uniform integer in [0, bound) from fair bits via rejection on
// ceil(log2 bound)-bit draws. Exact, terminates with probability 1.
inline std::uint64_t uniform_below(BitSource& src, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound 0");
    if (bound == 1) return 0;
    int w = 0;
    while ((std::uint64_t(1) << w) < bound) ++w;
    for (;;) {
        std::uint64_t v = 0;
        for (int i = 0; i < w; ++i) v = (v << 1) | std::uint64_t(src.next());
        if (v < bound) return v;
    }
}

}  // namespace cliquespace
