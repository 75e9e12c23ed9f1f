#pragma once

#include "dehornoy/int_matrix.hpp"
#include "dehornoy/int_polynomial.hpp"

namespace dehornoy {

struct CharPolyOptions {
    int threads = 1;            // worker threads over the prime set; <=1 is serial
    std::size_t prime_skip = 0; // skip the first primes of the stream (cross-checks)
};

struct CharPolyStats {
    std::size_t prime_count = 0;
    long bound_bits = 0;
};

// det(xI - m), computed per word-sized prime by Hessenberg reduction and
// recombined by CRT.  The prime set is sized from an a-priori coefficient
// bound (binomial times a Hadamard row-norm product); the result is checked
// to be monic of degree = dim.  Deterministic for a fixed matrix and
// prime_skip, independent of thread count.
IntPolynomial char_poly(const IntMatrix& m, const CharPolyOptions& opts = {},
                        CharPolyStats* stats = nullptr);

}  // namespace dehornoy
