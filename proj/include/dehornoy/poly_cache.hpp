#pragma once

#include <filesystem>
#include <optional>

#include "dehornoy/int_polynomial.hpp"

namespace dehornoy {

// On-disk cache for characteristic polynomials of the descent/recoil
// matrices.  Files are addressed by degree together with the index-order
// and algorithm versions, so stale entries from incompatible builds are
// never served.
struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = false;
};

inline constexpr const char* cache_schema_version = "dehornoy.charpoly.v1";
inline constexpr const char* cache_order_version = "lex.v1";
inline constexpr const char* cache_algorithm_version = "hessenberg-crt.v1";

// Returns the polynomial when a valid, version-matching entry exists.
std::optional<IntPolynomial> cache_load_charpoly(const CacheConfig& cfg, int n);

// Best-effort atomic store (temp file + rename); failures are swallowed,
// the cache is an optimization only.
void cache_store_charpoly(const CacheConfig& cfg, int n, const IntPolynomial& poly);

}  // namespace dehornoy
