#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dehornoy {

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    mpz_class sum_entries() const;

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Exact power by repeated squaring; e = 0 gives the identity.
IntMatrix mat_pow(const IntMatrix& m, std::uint64_t e);

// t*I - m for square m.
IntMatrix scalar_shift(const mpz_class& t, const IntMatrix& m);

}  // namespace dehornoy
