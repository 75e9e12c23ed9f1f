#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace dehornoy {

// Dense univariate polynomial over the integers, coefficients ascending.
// Normal form strips trailing zeros; the zero polynomial stores nothing
// and has degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial zero() { return {}; }
    static IntPolynomial constant(mpz_class c);
    static IntPolynomial monomial(int deg, mpz_class c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int k) const;
    const mpz_class& lead() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Lowest nonzero coefficient and its degree; zero polynomial has
    // valuation -1 and trailing coefficient 0.
    int valuation() const;
    mpz_class trailing_coefficient() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const mpz_class& s) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    mpz_class eval(const mpz_class& t) const;
    IntPolynomial derivative() const;

    // "x^2 - 2*x + 1", descending powers; zero renders as "0".
    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<mpz_class> c_;
};

// Exact division test over the integers: returns r with q = p * r when such
// an integer polynomial exists, nullopt otherwise.  Throws
// std::invalid_argument when p is zero.
std::optional<IntPolynomial> divides(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace dehornoy
