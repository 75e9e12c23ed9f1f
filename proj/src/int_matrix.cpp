#include "dehornoy/int_matrix.hpp"

#include <stdexcept>

namespace dehornoy {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

mpz_class IntMatrix::sum_entries() const {
    mpz_class s = 0;
    for (const auto& v : e_) s += v;
    return s;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const mpz_class& bkj = b.at(k, j);
                if (bkj != 0)
                    mpz_addmul(r.at(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    }
    return r;
}

IntMatrix mat_pow(const IntMatrix& m, std::uint64_t e) {
    if (!m.is_square()) throw std::invalid_argument("mat_pow: non-square matrix");
    IntMatrix acc = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (e > 0) {
        if (e & 1u) acc = mat_mul(acc, base);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base);
    }
    return acc;
}

IntMatrix scalar_shift(const mpz_class& t, const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("scalar_shift: non-square matrix");
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = (i == j ? t : mpz_class(0)) - m.at(i, j);
    return r;
}

}  // namespace dehornoy
