#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <vector>

#include "dehornoy/fqsym.hpp"
#include "dehornoy/serialize.hpp"
#include "dehornoy/symmetric_group.hpp"
#include "dehornoy/verify.hpp"
#include "test_util.hpp"

using namespace dehornoy;

namespace {

// Independent oracle: enumerate S_n with next_permutation and read descents
// and recoils straight off the definitions, bypassing the library's
// combinatorics.
std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::uint64_t descent_mask_oracle(const std::vector<int>& w) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m |= 1ull << i;
    return m;
}

std::uint64_t recoil_mask_oracle(const std::vector<int>& w) {
    std::uint64_t m = 0;
    const auto pos = [&](int v) {
        return std::find(w.begin(), w.end(), v) - w.begin();
    };
    for (int i = 1; i < static_cast<int>(w.size()); ++i)
        if (pos(i + 1) < pos(i)) m |= 1ull << (i - 1);
    return m;
}

bool admissible_oracle(const std::vector<int>& prev, const std::vector<int>& next) {
    return (recoil_mask_oracle(next) & ~descent_mask_oracle(prev)) == 0;
}

mpz_class count_oracle(int n, int l) {
    const auto perms = all_perms(n);
    // Enumerate tuples by odometer.
    std::vector<std::size_t> idx(static_cast<std::size_t>(l), 0);
    mpz_class total = 0;
    while (true) {
        bool ok = true;
        for (int k = 0; k + 1 < l && ok; ++k)
            ok = admissible_oracle(perms[idx[k]], perms[idx[k + 1]]);
        if (ok) ++total;
        int k = l - 1;
        while (k >= 0 && ++idx[k] == perms.size()) idx[k--] = 0;
        if (k < 0) break;
    }
    return total;
}

}  // namespace

TEST_CASE("symmetric group tables") {
    const auto& t3 = SymmetricGroupTable::get(3);
    CHECK(t3.size() == 6);
    CHECK(t3.perm(0) == Permutation::parse("123"));
    CHECK(t3.perm(5) == Permutation::parse("321"));
    CHECK(std::is_sorted(t3.perms().begin(), t3.perms().end()));
    for (std::size_t i = 0; i < t3.size(); ++i) {
        CHECK(t3.index_of(t3.perm(i)) == i);
        CHECK(t3.des_mask(i) == descents(t3.perm(i)).mask);
        CHECK(t3.rec_mask(i) == recoils(t3.perm(i)).mask);
    }
    const auto& t1 = SymmetricGroupTable::get(1);
    CHECK(t1.size() == 1);
    // Degree 0 is the one-element group of the empty permutation; it anchors
    // the matrix of the derivation in degree 1.
    CHECK(SymmetricGroupTable::get(0).size() == 1);
    CHECK(SymmetricGroupTable::get(0).perm(0) == Permutation());
    CHECK_THROWS_AS(SymmetricGroupTable::get(10), BudgetExceeded);
    CHECK_THROWS_AS(SymmetricGroupTable::get(-1), std::invalid_argument);
    // Same table object is shared between calls.
    CHECK(&SymmetricGroupTable::get(3) == &t3);
}

TEST_CASE("transition matrix matches the definition") {
    CHECK(build_matrix(1) == IntMatrix::from_rows({{1}}));
    CHECK(build_matrix(2) == IntMatrix::from_rows({{1, 0}, {1, 1}}));
    for (int n = 1; n <= 4; ++n) {
        const IntMatrix m = build_matrix(n);
        const auto perms = all_perms(n);
        REQUIRE(m.rows() == perms.size());
        REQUIRE(m.cols() == perms.size());
        for (std::size_t s = 0; s < perms.size(); ++s)
            for (std::size_t t = 0; t < perms.size(); ++t)
                CHECK(m.at(s, t) == (admissible_oracle(perms[s], perms[t]) ? 1 : 0));
    }
    CHECK_THROWS_AS(build_matrix(8), BudgetExceeded);
    // Raising the budget moves the boundary; the dense 8!-square matrix
    // itself is out of memory reach, so probe with the mask-based counter.
    Budget wide;
    wide.max_n_matrix = 8;
    CHECK(count_normal_sequences(8, 1, wide) == 40320);
    CHECK_THROWS_AS(count_normal_sequences(8, 1), BudgetExceeded);
}

TEST_CASE("endomorphism matrix is the transpose of the transition matrix") {
    for (int n = 1; n <= 4; ++n) {
        const IntMatrix m = build_matrix(n);
        const auto& table = SymmetricGroupTable::get(n);
        for (std::size_t col = 0; col < table.size(); ++col) {
            const FQSymElement img = phi(FQSymElement::basis(table.perm(col)));
            for (std::size_t row = 0; row < table.size(); ++row)
                CHECK(img.coefficient(table.perm(row)) == m.at(col, row));
        }
    }
}

TEST_CASE("derivation matrix matches the derivation") {
    for (int n = 2; n <= 4; ++n) {
        const IntMatrix d = derivation_matrix(n);
        const auto& tn = SymmetricGroupTable::get(n);
        const auto& tm = SymmetricGroupTable::get(n - 1);
        REQUIRE(d.rows() == tm.size());
        REQUIRE(d.cols() == tn.size());
        for (std::size_t col = 0; col < tn.size(); ++col) {
            const FQSymElement img = derivation(FQSymElement::basis(tn.perm(col)));
            for (std::size_t row = 0; row < tm.size(); ++row)
                CHECK(d.at(row, col) == img.coefficient(tm.perm(row)));
        }
    }
}

TEST_CASE("characteristic polynomials of the small matrices") {
    VerifyOptions opts;  // cache disabled by default
    CHECK(matrix_char_poly(1, opts) == IntPolynomial({-1, 1}));
    CHECK(matrix_char_poly(2, opts) == IntPolynomial({1, -2, 1}));
    const IntPolynomial p3 = matrix_char_poly(3, opts);
    CHECK(p3.degree() == 6);
    CHECK(p3 == char_poly(build_matrix(3)));
    CHECK_THROWS_AS(matrix_char_poly(7, opts), BudgetExceeded);
}

TEST_CASE("characteristic polynomial caching") {
    const auto dir = testutil::fresh_dir("mcp");
    VerifyOptions opts;
    opts.cache = CacheConfig{dir, true};
    CharPolyStats first, second;
    const IntPolynomial a = matrix_char_poly(3, opts, &first);
    CHECK(first.prime_count > 0);
    const IntPolynomial b = matrix_char_poly(3, opts, &second);
    CHECK(second.prime_count == 0);  // served from disk
    CHECK(a == b);
    std::filesystem::remove_all(dir);
}

TEST_CASE("divisibility of consecutive characteristic polynomials") {
    for (int n = 1; n <= 4; ++n) {
        const VerificationReport r = verify_divisibility(n);
        CHECK(r.verified);
        CHECK(r.claim == Claim::divisibility);
        CHECK(r.n == n);
        const int expected_deg =
            static_cast<int>(factorial(n + 1)) - static_cast<int>(factorial(n));
        CHECK(r.witness.at("quotient_degree").get<int>() == expected_deg);
        const IntPolynomial q = poly_from_json(r.witness.at("quotient"));
        const IntPolynomial pn = poly_from_json(r.witness.at("p_n"));
        const IntPolynomial pn1 = poly_from_json(r.witness.at("p_n_plus_one"));
        CHECK(pn * q == pn1);
    }
    CHECK_THROWS_AS(verify_divisibility(6), BudgetExceeded);  // needs P_7
}

TEST_CASE("commutation of the derivation with the descent endomorphism") {
    for (int n = 1; n <= 5; ++n) {
        const VerificationReport r = verify_commutation(n);
        CHECK(r.verified);
        CHECK(r.witness.at("mode") == "full");
        CHECK(r.witness.at("checked").get<std::size_t>() == factorial(n));
    }
    const VerificationReport s = verify_commutation(6, 40, 9);
    CHECK(s.verified);
    CHECK(s.witness.at("mode") == "sample");
    CHECK(s.witness.at("checked").get<std::size_t>() == 40);
    // Sampling is deterministic in the seed.
    const VerificationReport s2 = verify_commutation(6, 40, 9);
    CHECK(report_to_json(s) == report_to_json(s2));
    // Oversized samples degrade to the full check.
    const VerificationReport f = verify_commutation(3, 1000, 9);
    CHECK(f.witness.at("mode") == "full");
    CHECK(f.witness.at("checked").get<std::size_t>() == 6);
}

TEST_CASE("derivation maps degree n onto degree n-1") {
    for (int n = 2; n <= 5; ++n) {
        const VerificationReport r = verify_surjectivity(n);
        CHECK(r.verified);
        CHECK(r.witness.at("rank").get<std::size_t>() == factorial(n - 1));
        CHECK(r.witness.at("kernel_dimension").get<std::size_t>() ==
              factorial(n) - factorial(n - 1));
    }
}

TEST_CASE("kernel of the derivation is stable under the endomorphism") {
    for (int n = 2; n <= 4; ++n) {
        const VerificationReport r = verify_block_structure(n);
        CHECK(r.verified);
        CHECK(r.witness.at("degree_consistent").get<bool>());
        CHECK(r.witness.at("kernel_dimension").get<std::size_t>() ==
              factorial(n) - factorial(n - 1));
    }
}

TEST_CASE("ribbon derivation closed form") {
    const VerificationReport r = verify_ribbon_derivation(6);
    CHECK(r.verified);
    CHECK(r.witness.at("compositions_checked").get<int>() == 63);
    CHECK_THROWS_AS(verify_ribbon_derivation(10), BudgetExceeded);
}

TEST_CASE("normal sequence counts against brute force") {
    for (int n = 1; n <= 3; ++n)
        for (int l = 1; l <= 3; ++l)
            CHECK(count_normal_sequences(n, l) == count_oracle(n, l));
    CHECK(count_normal_sequences(3, 2) == 19);
    CHECK(count_normal_sequences(4, 1) == 24);
    // Length 2 is the entry sum of the transition matrix.
    for (int n = 1; n <= 5; ++n)
        CHECK(count_normal_sequences(n, 2) == build_matrix(n).sum_entries());
    CHECK_THROWS_AS(count_normal_sequences(9, 2), BudgetExceeded);
}

TEST_CASE("vector iteration agrees with the matrix power route") {
    for (int n = 1; n <= 3; ++n) {
        const IntMatrix m = build_matrix(n);
        for (std::uint64_t l = 1; l <= 4; ++l) {
            const IntMatrix p = mat_pow(m, l - 1);
            CHECK(count_normal_sequences(n, l) == p.sum_entries());
        }
    }
    // Spot value from the square of the n=3 matrix.
    CHECK(count_normal_sequences(3, 3) == mat_pow(build_matrix(3), 2).sum_entries());
}

TEST_CASE("growth estimates") {
    const GrowthResult g1 = growth_rate(1);
    CHECK(g1.converged);
    CHECK(g1.estimate == doctest::Approx(1.0).epsilon(1e-9));

    // The n = 2 matrix is a single Jordan block: the estimate creeps toward 1
    // and the residual decays only linearly, so convergence is not reached.
    const GrowthResult g2 = growth_rate(2, 1000, 1e-9);
    CHECK(!g2.converged);
    CHECK(g2.iterations_used == 1000);
    CHECK(g2.estimate == doctest::Approx(1.0).epsilon(5e-3));

    const GrowthResult g3 = growth_rate(3);
    CHECK(g3.converged);
    CHECK(g3.estimate == doctest::Approx(2.0).epsilon(1e-7));

    // Dominant root of the nonzero factor of the n = 4 polynomial.
    const GrowthResult g4 = growth_rate(4);
    CHECK(g4.converged);
    CHECK(g4.estimate == doctest::Approx(5.449489742783178).epsilon(1e-7));

    CHECK_THROWS_AS(growth_rate(9), BudgetExceeded);
}

TEST_CASE("serialization round trips and canonical reports") {
    const IntPolynomial p({-1, 0, mpz_class("123456789012345678901234567890")});
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_to_json(IntPolynomial::zero()).empty());

    const IntMatrix m = IntMatrix::from_rows({{1, -2}, {0, 7}});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    FQSymElement x;
    x.add_term(Permutation::parse("21"), -2);
    x.add_term(Permutation::parse("132"), mpz_class("99999999999999999999"));
    CHECK(fqsym_from_json(fqsym_to_json(x)) == x);

    VerificationReport r;
    r.claim = Claim::commutation;
    r.n = 3;
    r.verified = true;
    r.witness = {{"checked", 6}};
    r.wall_ms = 1234;   // volatile: must stay out of the canonical payload
    r.prime_count = 5;
    const nlohmann::json canonical = report_to_json(r);
    CHECK(canonical.find("wall_ms") == canonical.end());
    CHECK(canonical.find("diagnostics") == canonical.end());
    CHECK(canonical.at("claim") == "commutation");
    CHECK(canonical.at("verified") == true);
    const nlohmann::json verbose = report_to_json(r, true);
    CHECK(verbose.at("diagnostics").at("wall_ms") == 1234);
}

TEST_CASE("claim names") {
    CHECK(claim_name(Claim::divisibility) == "divisibility");
    CHECK(claim_name(Claim::commutation) == "commutation");
    CHECK(claim_name(Claim::surjectivity) == "surjectivity");
    CHECK(claim_name(Claim::ribbon_derivation) == "ribbon-derivation");
    CHECK(claim_name(Claim::block_structure) == "block-structure");
}
