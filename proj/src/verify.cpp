#include "dehornoy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "dehornoy/fqsym.hpp"
#include "dehornoy/linalg.hpp"
#include "dehornoy/serialize.hpp"
#include "dehornoy/symmetric_group.hpp"

namespace dehornoy {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void require_degree(int n) {
    if (n < 1) throw std::invalid_argument("degree must be at least 1");
}

void check_matrix_budget(int n, const Budget& b) {
    require_degree(n);
    if (n > b.max_n_matrix)
        throw BudgetExceeded("n=" + std::to_string(n) + " exceeds the matrix budget n<=" +
                             std::to_string(b.max_n_matrix));
}

void check_charpoly_budget(int n, const Budget& b) {
    check_matrix_budget(n, b);
    if (n > b.max_n_charpoly)
        throw BudgetExceeded("n=" + std::to_string(n) + " exceeds the charpoly budget n<=" +
                             std::to_string(b.max_n_charpoly));
}

// Deterministic, platform-independent RNG (splitmix64) with unbiased
// bounded draws; std::uniform_int_distribution is implementation-defined.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t bounded(std::uint64_t n) {
        for (;;) {
            const std::uint64_t x = next();
            const std::uint64_t r = x % n;
            if (x - r <= ~std::uint64_t{0} - (n - 1)) return r;
        }
    }
};

}  // namespace

std::string claim_name(Claim c) {
    switch (c) {
        case Claim::divisibility: return "divisibility";
        case Claim::commutation: return "commutation";
        case Claim::surjectivity: return "surjectivity";
        case Claim::ribbon_derivation: return "ribbon-derivation";
        case Claim::block_structure: return "block-structure";
    }
    throw std::logic_error("claim_name: unknown claim");
}

IntMatrix build_matrix(int n, const Budget& budget) {
    check_matrix_budget(n, budget);
    const auto& table = SymmetricGroupTable::get(n);
    const std::size_t N = table.size();
    IntMatrix m(N, N);
    for (std::size_t s = 0; s < N; ++s) {
        const std::uint64_t not_des = ~table.des_mask(s);
        for (std::size_t t = 0; t < N; ++t)
            if ((table.rec_mask(t) & not_des) == 0) m.at(s, t) = 1;
    }
    return m;
}

IntMatrix derivation_matrix(int n) {
    require_degree(n);
    const auto& table = SymmetricGroupTable::get(n);
    const auto& target = SymmetricGroupTable::get(n - 1);
    IntMatrix m(target.size(), table.size());
    for (std::size_t t = 0; t < table.size(); ++t) {
        const Permutation& p = table.perm(t);
        for (int i = 1; i <= n; ++i) {
            const int s = sign_at(p, i);
            if (s == 0) continue;
            const std::size_t row = target.index_of(delete_letter(p, i));
            m.at(row, t) += s;
        }
    }
    return m;
}

IntPolynomial matrix_char_poly(int n, const VerifyOptions& opts, CharPolyStats* stats) {
    check_charpoly_budget(n, opts.budget);
    if (auto cached = cache_load_charpoly(opts.cache, n)) {
        if (stats) *stats = {};
        return *cached;
    }
    const IntMatrix m = build_matrix(n, opts.budget);
    CharPolyOptions copts;
    copts.threads = opts.threads;
    IntPolynomial p = char_poly(m, copts, stats);
    cache_store_charpoly(opts.cache, n, p);
    return p;
}

VerificationReport verify_divisibility(int n, const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    require_degree(n);
    CharPolyStats s1, s2;
    const IntPolynomial pn = matrix_char_poly(n, opts, &s1);
    const IntPolynomial pn1 = matrix_char_poly(n + 1, opts, &s2);
    const std::optional<IntPolynomial> quotient = divides(pn, pn1);

    VerificationReport r;
    r.claim = Claim::divisibility;
    r.n = n;
    r.verified = quotient.has_value();
    r.prime_count = s1.prime_count + s2.prime_count;

    nlohmann::json w;
    w["p_n_degree"] = pn.degree();
    w["p_n_plus_one_degree"] = pn1.degree();
    w["p_n"] = poly_to_json(pn);
    w["p_n_plus_one"] = poly_to_json(pn1);
    w["p_n_valuation"] = pn.valuation();
    w["p_n_trailing_coefficient"] = pn.trailing_coefficient().get_str();
    if (quotient) {
        w["quotient"] = poly_to_json(*quotient);
        w["quotient_degree"] = quotient->degree();
    } else {
        w["quotient"] = nullptr;
        w["quotient_degree"] = nullptr;
    }
    r.witness = std::move(w);
    r.wall_ms = ms_since(t0);
    return r;
}

VerificationReport verify_commutation(int n, std::optional<std::size_t> sample,
                                      std::uint64_t seed) {
    const auto t0 = Clock::now();
    require_degree(n);
    const auto& table = SymmetricGroupTable::get(n);
    const std::size_t N = table.size();

    std::vector<std::size_t> chosen;
    const bool sampled = sample.has_value() && *sample < N;
    if (sampled) {
        std::vector<std::size_t> idx(N);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        Rng rng(seed);
        for (std::size_t i = 0; i < *sample; ++i) {
            const std::size_t j = i + rng.bounded(N - i);
            std::swap(idx[i], idx[j]);
        }
        chosen.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(*sample));
        std::sort(chosen.begin(), chosen.end());
    } else {
        chosen.resize(N);
        std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    }

    VerificationReport r;
    r.claim = Claim::commutation;
    r.n = n;
    r.verified = true;
    nlohmann::json w;
    w["mode"] = sampled ? "sample" : "full";
    w["checked"] = chosen.size();
    if (sampled) w["seed"] = seed;
    w["failing"] = nullptr;

    for (std::size_t idx : chosen) {
        const FQSymElement f = FQSymElement::basis(table.perm(idx));
        const FQSymElement lhs = derivation(phi(f));
        const FQSymElement rhs = phi(derivation(f));
        if (lhs != rhs) {
            r.verified = false;
            w["failing"] = {{"sigma", table.perm(idx).to_string()},
                            {"lhs", lhs.to_string()},
                            {"rhs", rhs.to_string()}};
            break;
        }
    }
    r.witness = std::move(w);
    r.wall_ms = ms_since(t0);
    return r;
}

VerificationReport verify_surjectivity(int n, const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    check_matrix_budget(n, opts.budget);
    const IntMatrix d = derivation_matrix(n);
    const std::size_t rk = rank(d);
    const std::size_t expected = factorial(n - 1);

    VerificationReport r;
    r.claim = Claim::surjectivity;
    r.n = n;
    r.verified = rk == expected;
    r.witness = {{"rank", rk},
                 {"expected_rank", expected},
                 {"kernel_dimension", d.cols() - rk},
                 {"matrix_rows", d.rows()},
                 {"matrix_cols", d.cols()}};
    r.wall_ms = ms_since(t0);
    return r;
}

VerificationReport verify_block_structure(int n, const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    check_matrix_budget(n, opts.budget);
    const auto& table = SymmetricGroupTable::get(n);
    const std::size_t N = table.size();
    const IntMatrix d = derivation_matrix(n);
    const auto kernel = integer_kernel_basis(d);
    const std::size_t expected_dim = N - factorial(n - 1);

    VerificationReport r;
    r.claim = Claim::block_structure;
    r.n = n;
    nlohmann::json w;
    w["kernel_dimension"] = kernel.size();
    w["expected_kernel_dimension"] = expected_dim;
    w["failing_vector"] = nullptr;

    bool ok = kernel.size() == expected_dim;

    // Image of each kernel vector under the descent endomorphism must stay
    // in the kernel.
    std::vector<mpz_class> img(N);
    for (std::size_t v = 0; ok && v < kernel.size(); ++v) {
        for (std::size_t t = 0; t < N; ++t) {
            img[t] = 0;
            const std::uint64_t rec = table.rec_mask(t);
            for (std::size_t s = 0; s < N; ++s)
                if ((rec & ~table.des_mask(s)) == 0) img[t] += kernel[v][s];
        }
        for (std::size_t row = 0; row < d.rows(); ++row) {
            mpz_class acc = 0;
            for (std::size_t t = 0; t < N; ++t)
                if (d.at(row, t) != 0) acc += d.at(row, t) * img[t];
            if (acc != 0) {
                ok = false;
                w["failing_vector"] = v;
                break;
            }
        }
    }
    w["vectors_checked"] = kernel.size();

    CharPolyStats stats;
    const IntPolynomial pn = matrix_char_poly(n, opts, &stats);
    r.prime_count = stats.prime_count;
    const bool degree_ok =
        pn.degree() == static_cast<int>(kernel.size() + factorial(n - 1));
    w["charpoly_degree"] = pn.degree();
    w["degree_consistent"] = degree_ok;

    r.verified = ok && degree_ok;
    r.witness = std::move(w);
    r.wall_ms = ms_since(t0);
    return r;
}

VerificationReport verify_ribbon_derivation(int max_n) {
    const auto t0 = Clock::now();
    require_degree(max_n);
    if (max_n > SymmetricGroupTable::max_degree)
        throw BudgetExceeded("ribbon check for degrees above " +
                             std::to_string(SymmetricGroupTable::max_degree) +
                             " is outside the supported range");

    VerificationReport r;
    r.claim = Claim::ribbon_derivation;
    r.n = max_n;
    r.verified = true;
    nlohmann::json w;
    w["max_degree"] = max_n;
    w["failing_composition"] = nullptr;

    std::size_t checked = 0;
    for (int m = 1; m <= max_n && r.verified; ++m) {
        const std::uint64_t span = std::uint64_t{1} << (m - 1);
        for (std::uint64_t mask = 0; mask < span; ++mask) {
            const Composition c = composition_from_descent_mask(m, mask);
            const FQSymElement closed = derivation_of_ribbon(c);
            const FQSymElement expanded = derivation(ribbon_complete(c));
            ++checked;
            if (closed != expanded) {
                r.verified = false;
                w["failing_composition"] = c.to_string();
                break;
            }
        }
    }
    w["compositions_checked"] = checked;
    r.witness = std::move(w);
    r.wall_ms = ms_since(t0);
    return r;
}

mpz_class count_normal_sequences(int n, std::uint64_t l, const Budget& budget) {
    check_matrix_budget(n, budget);
    if (l < 1) throw std::invalid_argument("count_normal_sequences: length must be at least 1");
    const auto& table = SymmetricGroupTable::get(n);
    const std::size_t N = table.size();
    std::vector<mpz_class> cur(N, mpz_class(1)), next(N);
    for (std::uint64_t step = 1; step < l; ++step) {
        for (std::size_t s = 0; s < N; ++s) {
            mpz_class acc = 0;
            const std::uint64_t not_des = ~table.des_mask(s);
            for (std::size_t t = 0; t < N; ++t)
                if ((table.rec_mask(t) & not_des) == 0) acc += cur[t];
            next[s] = std::move(acc);
        }
        std::swap(cur, next);
    }
    mpz_class total = 0;
    for (const auto& v : cur) total += v;
    return total;
}

GrowthResult growth_rate(int n, int iterations, double tolerance, const Budget& budget) {
    check_matrix_budget(n, budget);
    if (iterations < 1) throw std::invalid_argument("growth_rate: need at least one iteration");
    const auto& table = SymmetricGroupTable::get(n);
    const std::size_t N = table.size();
    std::vector<double> v(N, 1.0 / std::sqrt(static_cast<double>(N))), w(N);

    GrowthResult res;
    for (int it = 1; it <= iterations; ++it) {
        for (std::size_t s = 0; s < N; ++s) {
            double acc = 0.0;
            const std::uint64_t not_des = ~table.des_mask(s);
            for (std::size_t t = 0; t < N; ++t)
                if ((table.rec_mask(t) & not_des) == 0) acc += v[t];
            w[s] = acc;
        }
        double lambda = 0.0;
        for (std::size_t s = 0; s < N; ++s) lambda += v[s] * w[s];  // |v| = 1
        double resid2 = 0.0;
        for (std::size_t s = 0; s < N; ++s) {
            const double d = w[s] - lambda * v[s];
            resid2 += d * d;
        }
        res.estimate = lambda;
        res.residual = std::sqrt(resid2);
        res.iterations_used = it;
        if (res.residual <= tolerance * std::max(1.0, std::abs(lambda))) {
            res.converged = true;
            return res;
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) {  // nilpotent direction collapsed; restart uniform
            v.assign(N, 1.0 / std::sqrt(static_cast<double>(N)));
            continue;
        }
        for (std::size_t s = 0; s < N; ++s) v[s] = w[s] / norm;
    }
    return res;
}

}  // namespace dehornoy
