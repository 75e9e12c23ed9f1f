#include <doctest.h>

#include <set>
#include <vector>

#include "dehornoy/fqsym.hpp"
#include "dehornoy/symmetric_group.hpp"
#include "test_util.hpp"

using namespace dehornoy;

namespace {
FQSymElement F(const std::string& word) { return FQSymElement::basis(Permutation::parse(word)); }
}  // namespace

TEST_CASE("element bookkeeping") {
    FQSymElement x;
    CHECK(x.is_zero());
    CHECK(x.to_string() == "0");
    x.add_term(Permutation::parse("21"), 3);
    x.add_term(Permutation::parse("21"), -3);
    CHECK(x.is_zero());  // cancelled terms are not stored
    x.add_term(Permutation::parse("132"), 1);
    x.add_term(Permutation::parse("21"), -2);
    CHECK(x.term_count() == 2);
    CHECK(x.to_string() == "-2*F[21] + F[132]");
    CHECK(x.coefficient(Permutation::parse("21")) == -2);
    CHECK(x.coefficient(Permutation::parse("12")) == 0);
    CHECK(!x.homogeneous(2));
    CHECK(F("312").homogeneous(3));
    CHECK(FQSymElement::zero().homogeneous(5));
    CHECK(x.coefficient_sum() == -1);
    CHECK((x - x).is_zero());
    CHECK((-x + x).is_zero());
    CHECK((x * mpz_class(2)).coefficient(Permutation::parse("21")) == -4);
}

TEST_CASE("product expands the shifted shuffle") {
    CHECK(F("1") * F("1") == F("12") + F("21"));
    CHECK(F("12") * F("1") == F("123") + F("132") + F("312"));
    CHECK(FQSymElement::unit() * F("21") == F("21"));
    CHECK(F("21") * FQSymElement::unit() == F("21"));
    CHECK((FQSymElement::zero() * F("21")).is_zero());

    // Basis products have all-ones coefficients and binomial term counts.
    testutil::Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const int p = 1 + int(rng.bounded(4));
        const int q = 1 + int(rng.bounded(4));
        const Permutation a = testutil::random_permutation(rng, p);
        const Permutation b = testutil::random_permutation(rng, q);
        const FQSymElement prod = FQSymElement::basis(a) * FQSymElement::basis(b);
        CHECK(prod.term_count() == binomial(p + q, p));
        for (const auto& [perm, coeff] : prod.terms()) CHECK(coeff == 1);
        CHECK(prod.homogeneous(p + q));
    }
}

TEST_CASE("product is associative") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const FQSymElement a = FQSymElement::basis(testutil::random_permutation(rng, 1 + int(rng.bounded(3))));
        const FQSymElement b = FQSymElement::basis(testutil::random_permutation(rng, 1 + int(rng.bounded(3))));
        const FQSymElement c = FQSymElement::basis(testutil::random_permutation(rng, 1 + int(rng.bounded(3))));
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("derivation on small basis elements") {
    CHECK(derivation(F("132")) == -F("12"));
    CHECK(derivation(F("21")) == F("1") * mpz_class(-2));
    CHECK(derivation(F("1")) == -FQSymElement::unit());
    CHECK(derivation(FQSymElement::unit()).is_zero());
    CHECK(derivation(FQSymElement::zero()).is_zero());
    // Degree drops by exactly one.
    CHECK(derivation(F("3142")).homogeneous(3));
    // Identity permutations: only the n-2 interior letters survive, sign +1.
    for (int n = 3; n <= 6; ++n) {
        const FQSymElement d = derivation(FQSymElement::basis(Permutation::identity(n)));
        CHECK(d == FQSymElement::basis(Permutation::identity(n - 1), n - 2));
    }
}

TEST_CASE("derivation is linear") {
    const FQSymElement x = F("132") - F("213") * mpz_class(4);
    CHECK(derivation(x) == derivation(F("132")) - derivation(F("213")) * mpz_class(4));
}

TEST_CASE("partial derivations split over the product by letter range") {
    testutil::Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int p = 1 + int(rng.bounded(4));
        const int q = 1 + int(rng.bounded(3));
        const FQSymElement a = FQSymElement::basis(testutil::random_permutation(rng, p));
        const FQSymElement b = FQSymElement::basis(testutil::random_permutation(rng, q));
        const FQSymElement prod = a * b;
        for (int i = 1; i <= p; ++i)
            CHECK(derivation_partial(prod, i) == derivation_partial(a, i) * b);
        for (int i = p + 1; i <= p + q; ++i)
            CHECK(derivation_partial(prod, i) == a * derivation_partial(b, i - p));
        // Summing the partials gives the Leibniz identity.
        CHECK(derivation(prod) == derivation(a) * b + a * derivation(b));
    }
}

TEST_CASE("descent endomorphism on small basis elements") {
    CHECK(phi(F("21")) == F("12") + F("21"));
    CHECK(phi(F("213")) == F("123") + F("213") + F("231"));
    CHECK(phi(F("123")) == F("123"));  // empty descent set admits only empty recoils
    CHECK(phi(FQSymElement::unit()) == FQSymElement::unit());
    // Term count of phi(F_s) is the number of admissible successors of s.
    CHECK(phi(F("321")).term_count() == 6);
}

TEST_CASE("descent endomorphism preserves degree and is linear") {
    const FQSymElement x = F("21") * mpz_class(3) - F("12");
    CHECK(phi(x) == phi(F("21")) * mpz_class(3) - phi(F("12")));
    CHECK(phi(F("3142")).homogeneous(4));
}

TEST_CASE("complete-ribbon products") {
    CHECK(ribbon_complete(Composition{{3}}) == F("123"));
    CHECK(ribbon_complete(Composition{{1, 1}}) == F("12") + F("21"));
    CHECK(ribbon_complete(Composition{}) == FQSymElement::unit());
    CHECK(ribbon_complete(Composition{{2, 1}}) == F("123") + F("132") + F("312"));
    // All coefficients stay 1: the shuffle sets of the factors are disjoint.
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        const Composition c = composition_from_descent_mask(5, mask);
        const FQSymElement s = ribbon_complete(c);
        for (const auto& [perm, coeff] : s.terms()) CHECK(coeff == 1);
        CHECK(s.homogeneous(5));
    }
}

TEST_CASE("factored form of the descent endomorphism matches the scan") {
    for (int n = 1; n <= 5; ++n) {
        const auto& table = SymmetricGroupTable::get(n);
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            const Permutation& s = table.perm(idx);
            CHECK(phi_basis(s) == phi(FQSymElement::basis(s)));
        }
    }
}

TEST_CASE("closed form for the derivation of a complete ribbon") {
    // Parts contribute (part - 2) times the lowered ribbon.
    CHECK(derivation_of_ribbon(Composition{{3}}) == ribbon_complete(Composition{{2}}));
    CHECK(derivation_of_ribbon(Composition{{2}}).is_zero());
    CHECK(derivation_of_ribbon(Composition{{1}}) == -FQSymElement::unit());
    CHECK(derivation_of_ribbon(Composition{{1, 1}}) ==
          (ribbon_complete(Composition{{1}}) * mpz_class(-2)));
    CHECK(derivation_of_ribbon(Composition{{1, 3}}) ==
          -ribbon_complete(Composition{{3}}) + ribbon_complete(Composition{{1, 2}}));
    for (int m = 1; m <= 5; ++m)
        for (std::uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
            const Composition c = composition_from_descent_mask(m, mask);
            CHECK(derivation_of_ribbon(c) == derivation(ribbon_complete(c)));
        }
}
