#pragma once

#include <cstdint>
#include <vector>

namespace dehornoy::detail {

bool is_prime_u64(std::uint64_t n);

// Deterministic descending stream of 62-bit primes: skip the first `skip`
// primes below 2^62, then return the next `count`.
std::vector<std::uint64_t> modular_primes(std::size_t count, std::size_t skip = 0);

// Montgomery arithmetic for an odd modulus p < 2^62.  Values in the
// Montgomery domain are plain uint64_t residues; zero is zero in both
// domains.
class Montgomery {
public:
    explicit Montgomery(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t one() const { return r1_; }

    std::uint64_t to(std::uint64_t x) const { return mul(x % p_, r2_); }
    std::uint64_t from(std::uint64_t x) const { return redc(x); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

private:
    std::uint64_t redc(unsigned __int128 t) const {
        const std::uint64_t m = static_cast<std::uint64_t>(t) * ninv_;
        const std::uint64_t r =
            static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }

    std::uint64_t p_;
    std::uint64_t ninv_;  // -p^{-1} mod 2^64
    std::uint64_t r1_;    // 2^64 mod p
    std::uint64_t r2_;    // 2^128 mod p
};

}  // namespace dehornoy::detail
