#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "dehornoy/permutation.hpp"

namespace dehornoy {

// Element of the free quasi-symmetric algebra in the fundamental basis:
// a finite integer combination of basis terms F_p indexed by permutations.
// Terms are kept in canonical order (degree, then lex) with no zero
// coefficients stored.
class FQSymElement {
public:
    using TermMap = std::map<Permutation, mpz_class>;

    FQSymElement() = default;

    static FQSymElement zero() { return {}; }
    static FQSymElement unit() { return basis(Permutation()); }
    static FQSymElement basis(const Permutation& p, mpz_class coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpz_class coefficient(const Permutation& p) const;

    // True when every term has degree d (vacuously true for zero).
    bool homogeneous(int d) const;
    mpz_class coefficient_sum() const;

    void add_term(const Permutation& p, const mpz_class& c);

    FQSymElement& operator+=(const FQSymElement& o);
    FQSymElement& operator-=(const FQSymElement& o);
    FQSymElement operator+(const FQSymElement& o) const;
    FQSymElement operator-(const FQSymElement& o) const;
    FQSymElement operator-() const;
    FQSymElement& operator*=(const mpz_class& c);
    FQSymElement operator*(const mpz_class& c) const;

    bool operator==(const FQSymElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FQSymElement& o) const { return terms_ != o.terms_; }

    // Canonical rendering, e.g. "-2*F[21] + F[132]"; zero renders as "0".
    std::string to_string() const;

private:
    TermMap terms_;
};

// Product on the F-basis: F_a * F_b expands over the shifted shuffle.
FQSymElement multiply(const FQSymElement& x, const FQSymElement& y);
FQSymElement operator*(const FQSymElement& x, const FQSymElement& y);

// The derivation: sum over letters of the signed letter deletions.
FQSymElement derivation(const FQSymElement& x);

// Single summand of the derivation at letter i; terms whose degree is
// below i contribute nothing.
FQSymElement derivation_partial(const FQSymElement& x, int i);

// The descent endomorphism: F_s maps to the sum of F_t over all t whose
// recoil set is contained in the descent set of s.
FQSymElement phi(const FQSymElement& x);

// S^I: the product F_{1..i1} * F_{1..i2} * ... over the parts of I.
FQSymElement ribbon_complete(const Composition& c);

// Image of F_p under the descent endomorphism computed the other way,
// via the factorization S^{C(p)}.
FQSymElement phi_basis(const Permutation& p);

// Closed form for the derivation of S^I: sum over parts of
// (part - 2) * S^{I with that part lowered by one} (parts lowered to
// zero disappear).
FQSymElement derivation_of_ribbon(const Composition& c);

}  // namespace dehornoy
