#include "dehornoy/modarith.hpp"

#include <stdexcept>

namespace dehornoy::detail {

namespace {

std::uint64_t mulmod_u128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1u) r = mulmod_u128(r, a, m);
        a = mulmod_u128(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u128(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> modular_primes(std::size_t count, std::size_t skip) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t c = (std::uint64_t{1} << 62) - 1;
    while (out.size() < count) {
        if (is_prime_u64(c)) {
            if (skip > 0)
                --skip;
            else
                out.push_back(c);
        }
        c -= 2;
    }
    return out;
}

Montgomery::Montgomery(std::uint64_t p) : p_(p) {
    if (p < 3 || (p & 1u) == 0 || p >= (std::uint64_t{1} << 62))
        throw std::invalid_argument("Montgomery: modulus must be odd and below 2^62");
    // Newton iteration for p^{-1} mod 2^64, then negate.
    std::uint64_t x = p;
    for (int i = 0; i < 5; ++i) x *= 2 - p * x;
    ninv_ = ~x + 1;
    r1_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
    r2_ = mulmod_u128(r1_, r1_, p);
}

std::uint64_t Montgomery::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = r1_;
    while (e > 0) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace dehornoy::detail
