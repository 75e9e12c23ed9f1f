#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dehornoy/charpoly.hpp"
#include "dehornoy/int_matrix.hpp"
#include "dehornoy/int_polynomial.hpp"
#include "dehornoy/poly_cache.hpp"

namespace dehornoy {

// Resource caps.  Matrix-level operations work on n! x n! objects, the
// characteristic polynomial additionally runs the CRT pipeline, hence the
// lower default.
struct Budget {
    int max_n_matrix = 7;
    int max_n_charpoly = 6;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class Claim {
    divisibility,
    commutation,
    surjectivity,
    ribbon_derivation,
    block_structure,
};

std::string claim_name(Claim c);

struct VerificationReport {
    Claim claim = Claim::divisibility;
    int n = 0;
    bool verified = false;
    nlohmann::json witness;          // claim-specific payload / counterexample
    std::int64_t wall_ms = 0;        // diagnostics, excluded from canonical output
    std::size_t prime_count = 0;     // primes used by charpoly calls (0 = none/cached)
};

struct VerifyOptions {
    Budget budget;
    int threads = 1;
    CacheConfig cache;
};

// The n! x n! 0/1 matrix: entry (s, t) = 1 iff the recoil set of t is
// contained in the descent set of s.  Rows and columns are indexed by S_n
// in lexicographic one-line order.
IntMatrix build_matrix(int n, const Budget& budget = {});

// Matrix of the derivation restricted to degree n, (n-1)! rows by n! cols,
// same index order on both sides.
IntMatrix derivation_matrix(int n);

// char_poly(build_matrix(n)) with caching.
IntPolynomial matrix_char_poly(int n, const VerifyOptions& opts = {},
                               CharPolyStats* stats = nullptr);

// P_n divides P_{n+1} over the integers; the witness carries both
// polynomials and the quotient.
VerificationReport verify_divisibility(int n, const VerifyOptions& opts = {});

// The derivation commutes with the descent endomorphism on every basis
// element of degree n (or a seeded uniform sample of them).
VerificationReport verify_commutation(int n, std::optional<std::size_t> sample = std::nullopt,
                                      std::uint64_t seed = 1);

// The derivation maps degree n onto degree n-1: rank = (n-1)!.
VerificationReport verify_surjectivity(int n, const VerifyOptions& opts = {});

// The kernel of the derivation in degree n is stable under the descent
// endomorphism; also checks deg P_n = dim kernel + (n-1)!.
VerificationReport verify_block_structure(int n, const VerifyOptions& opts = {});

// The closed form for the derivation of S^I matches the derivation of the
// expanded product, for every composition of every m <= max_n.
VerificationReport verify_ribbon_derivation(int max_n);

// Number of sequences (s_1..s_l) with each consecutive pair admissible:
// all-ones vector . M^(l-1) . all-ones vector.
mpz_class count_normal_sequences(int n, std::uint64_t l, const Budget& budget = {});

struct GrowthResult {
    double estimate = 0.0;
    double residual = 0.0;
    int iterations_used = 0;
    bool converged = false;
};

// Power iteration for the dominant eigenvalue of the counting matrix.
// Non-convergence is reported through the result, not an error.
GrowthResult growth_rate(int n, int iterations = 1000, double tolerance = 1e-9,
                         const Budget& budget = {});

}  // namespace dehornoy
