#pragma once

#include <cstdint>
#include <limits>

namespace sparsenet {

// Philox4x32-10 counter-based generator. Each (seed, stream) pair is an
// independent stream; streams can be derived cheaply, which keeps network
// generation and per-sample draws reproducible under any parallel schedule.
class Philox {
public:
    using result_type = std::uint64_t;

    Philox() : Philox(0, 0) {}
    Philox(std::uint64_t seed, std::uint64_t stream = 0) {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
        ctr_[0] = 0;
        ctr_[1] = 0;
        ctr_[2] = static_cast<std::uint32_t>(stream);
        ctr_[3] = static_cast<std::uint32_t>(stream >> 32);
        buf_pos_ = 4;
    }

    // Independent stream derived from this generator's identity (not its
    // position), so derive(i) is stable no matter how much was consumed.
    Philox derive(std::uint64_t substream) const {
        std::uint64_t seed = (std::uint64_t(key_[1]) << 32) | key_[0];
        std::uint64_t base = (std::uint64_t(ctr_[3]) << 32) | ctr_[2];
        // golden-ratio mix keeps distinct (base, substream) pairs distinct
        std::uint64_t mixed = base ^ (substream * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
        Philox p;
        p.key_[0] = key_[0];
        p.key_[1] = key_[1] ^ 0x1BD11BDA;
        p.ctr_[0] = 0;
        p.ctr_[1] = 0;
        p.ctr_[2] = static_cast<std::uint32_t>(mixed);
        p.ctr_[3] = static_cast<std::uint32_t>(mixed >> 32);
        p.buf_pos_ = 4;
        return p;
    }

    std::uint32_t next_u32() {
        if (buf_pos_ >= 4) refill();
        return buf_[buf_pos_++];
    }

    std::uint64_t next_u64() {
        std::uint64_t lo = next_u32();
        std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // UniformRandomBitGenerator interface
    result_type operator()() { return next_u64(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    // uniform in [0, 1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1]
    double uniform_signed() { return 2.0 * uniform() - 1.0; }

    // unbiased uniform integer in [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b, std::uint32_t& lo) {
        std::uint64_t w = std::uint64_t(a) * b;
        lo = static_cast<std::uint32_t>(w);
        return static_cast<std::uint32_t>(w >> 32);
    }

    void refill() {
        std::uint32_t c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
        std::uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            std::uint32_t lo0, lo1;
            std::uint32_t hi0 = mulhi(0xD2511F53u, c0, lo0);
            std::uint32_t hi1 = mulhi(0xCD9E8D57u, c2, lo1);
            std::uint32_t n0 = hi1 ^ c1 ^ k0;
            std::uint32_t n1 = lo1;
            std::uint32_t n2 = hi0 ^ c3 ^ k1;
            std::uint32_t n3 = lo0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        buf_[0] = c0; buf_[1] = c1; buf_[2] = c2; buf_[3] = c3;
        buf_pos_ = 0;
        if (++ctr_[0] == 0 && ++ctr_[1] == 0) ++ctr_[2];
    }

    std::uint32_t key_[2];
    std::uint32_t ctr_[4];
    std::uint32_t buf_[4];
    int buf_pos_;
};

} // namespace sparsenet
