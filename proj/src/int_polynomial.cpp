#include "dehornoy/int_polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace dehornoy {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::constant(mpz_class c) {
    IntPolynomial p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(int deg, mpz_class c) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    IntPolynomial p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, mpz_class(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

const mpz_class& IntPolynomial::lead() const {
    if (c_.empty()) throw std::logic_error("lead: zero polynomial");
    return c_.back();
}

int IntPolynomial::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

mpz_class IntPolynomial::trailing_coefficient() const {
    const int v = valuation();
    return v < 0 ? mpz_class(0) : c_[static_cast<std::size_t>(v)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return zero();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& s) const {
    if (s == 0) return zero();
    std::vector<mpz_class> r = c_;
    for (auto& v : r) v *= s;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> r = c_;
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::eval(const mpz_class& t) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= t;
        acc += c_[i];
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::optional<IntPolynomial> divides(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero()) throw std::invalid_argument("divides: zero divisor");
    if (q.is_zero()) return IntPolynomial::zero();
    if (q.degree() < p.degree()) return std::nullopt;

    const int pd = p.degree();
    const int qd = q.degree();
    std::vector<mpz_class> rem = q.coeffs();
    std::vector<mpz_class> quot(static_cast<std::size_t>(qd - pd) + 1, mpz_class(0));
    const mpz_class& lead = p.lead();

    for (int d = qd; d >= pd; --d) {
        mpz_class& top = rem[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_class f = top / lead;
        quot[static_cast<std::size_t>(d - pd)] = f;
        for (int j = 0; j <= pd; ++j)
            rem[static_cast<std::size_t>(d - pd + j)] -= f * p.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

}  // namespace dehornoy
