#include "dehornoy/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace dehornoy {

namespace {

// a / b, checked to be exact.
mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: inexact division in fraction-free elimination");
    return q;
}

}  // namespace

mpz_class bareiss_determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("bareiss_determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(w.at(pivot, j), w.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = exact_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(w.at(pivot, j), w.at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                w.at(i, j) = exact_div(w.at(i, j) * w.at(r, col) - w.at(i, col) * w.at(r, j), prev);
            w.at(i, col) = 0;
        }
        prev = w.at(r, col);
        ++r;
    }
    return r;
}

std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMatrix& m) {
    IntMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::vector<std::size_t> pivot_col;
    mpz_class prev = 1;

    // Full fraction-free Gauss-Jordan: after each pivot every other row is
    // updated, so at the end all pivot entries equal the last pivot value
    // and the kernel reads off Cramer-style.
    for (std::size_t col = 0; col < cols && pivot_col.size() < rows; ++col) {
        const std::size_t r = pivot_col.size();
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(pivot, j), w.at(r, j));
        const mpz_class p = w.at(r, col);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == col) continue;
                w.at(i, j) = exact_div(w.at(i, j) * p - w.at(i, col) * w.at(r, j), prev);
            }
            w.at(i, col) = 0;
        }
        prev = p;
        pivot_col.push_back(col);
    }

    for (std::size_t t = 0; t < pivot_col.size(); ++t)
        if (w.at(t, pivot_col[t]) != prev)
            throw std::logic_error("integer_kernel_basis: pivot invariant violated");

    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivot_col) is_pivot[c] = 1;

    std::vector<std::vector<mpz_class>> basis;
    basis.reserve(cols - pivot_col.size());
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpz_class> v(cols, mpz_class(0));
        v[f] = prev;
        for (std::size_t t = 0; t < pivot_col.size(); ++t) v[pivot_col[t]] = -w.at(t, f);
        // primitive, leading entry positive
        mpz_class g = 0;
        for (const auto& x : v)
            if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : v) x /= g;
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dehornoy
