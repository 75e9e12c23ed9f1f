#pragma once

#include "dehornoy/int_matrix.hpp"

namespace dehornoy {

// Fraction-free determinant (Bareiss).  Exact over the integers.
mpz_class bareiss_determinant(const IntMatrix& m);

// Rank over the rationals via fraction-free forward elimination.
std::size_t rank(const IntMatrix& m);

// Basis of the right kernel { v : m v = 0 }, one primitive integer vector
// per free column, computed by fraction-free Gauss-Jordan elimination.
std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMatrix& m);

}  // namespace dehornoy
