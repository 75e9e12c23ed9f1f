#include "dehornoy/charpoly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dehornoy/modarith.hpp"

namespace dehornoy {

namespace {

using detail::Montgomery;

// Characteristic polynomial mod p of the n x n matrix a (row-major,
// Montgomery domain).  a is destroyed.  Returns ascending coefficients in
// the standard domain.
std::vector<std::uint64_t> charpoly_mod(std::vector<std::uint64_t>& a, std::size_t n,
                                        const Montgomery& M) {
    // Reduce to upper Hessenberg form by similarity transforms.  For each
    // column the multipliers are applied as one batched transform
    // P A P^{-1}: all row updates first, then one contiguous column pass.
    std::vector<std::uint64_t> t(n, 0);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t r = k + 1; r < n; ++r)
            if (a[r * n + k] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) continue;
        if (pivot != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[(k + 1) * n + j]);
            for (std::size_t r = 0; r < n; ++r) std::swap(a[r * n + pivot], a[r * n + k + 1]);
        }
        const std::uint64_t inv = M.inv(a[(k + 1) * n + k]);
        bool any = false;
        for (std::size_t i = k + 2; i < n; ++i) {
            t[i] = M.mul(a[i * n + k], inv);
            any = any || t[i] != 0;
        }
        if (!any) continue;
        const std::uint64_t* src = &a[(k + 1) * n];
        for (std::size_t i = k + 2; i < n; ++i) {
            const std::uint64_t ti = t[i];
            if (ti == 0) continue;
            std::uint64_t* row = &a[i * n];
            for (std::size_t j = k; j < n; ++j) row[j] = M.sub(row[j], M.mul(ti, src[j]));
        }
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint64_t* row = &a[r * n];
            std::uint64_t acc = 0;
            for (std::size_t i = k + 2; i < n; ++i)
                if (t[i] != 0) acc = M.add(acc, M.mul(t[i], row[i]));
            a[r * n + k + 1] = M.add(a[r * n + k + 1], acc);
        }
    }

    // q[m] = char poly of the leading m x m block, ascending coefficients.
    std::vector<std::vector<std::uint64_t>> q(n + 1);
    q[0] = {M.one()};
    for (std::size_t m = 0; m < n; ++m) {
        const std::uint64_t diag = a[m * n + m];
        std::vector<std::uint64_t> cur(m + 2, 0);
        for (std::size_t i = 0; i <= m; ++i) cur[i + 1] = q[m][i];
        if (diag != 0)
            for (std::size_t i = 0; i <= m; ++i) cur[i] = M.sub(cur[i], M.mul(diag, q[m][i]));
        std::uint64_t prod = M.one();
        for (std::size_t i = m; i-- > 0;) {
            prod = M.mul(prod, a[(i + 1) * n + i]);
            if (prod == 0) break;
            const std::uint64_t w = M.mul(a[i * n + m], prod);
            if (w == 0) continue;
            for (std::size_t j = 0; j <= i; ++j) cur[j] = M.sub(cur[j], M.mul(w, q[i][j]));
        }
        q[m + 1] = std::move(cur);
    }

    std::vector<std::uint64_t> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = M.from(q[n][i]);
    return out;
}

// ceil(log2) style bound on |coeff| of det(xI - m): the coefficient at
// x^(n-k) is a signed sum of binomial(n,k) principal k-minors, each at most
// the product of the k largest row 2-norms.
long coefficient_bound_bits(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<double> lognorm(n);
    mpz_class norm2;
    for (std::size_t i = 0; i < n; ++i) {
        norm2 = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const mpz_class& e = m.at(i, j);
            if (e != 0) mpz_addmul(norm2.get_mpz_t(), e.get_mpz_t(), e.get_mpz_t());
        }
        if (norm2 <= 1) {
            lognorm[i] = 0.0;
        } else {
            long exp2 = 0;
            const double d = mpz_get_d_2exp(&exp2, norm2.get_mpz_t());
            lognorm[i] = 0.5 * (std::log2(d) + static_cast<double>(exp2));
        }
    }
    std::sort(lognorm.rbegin(), lognorm.rend());
    const double ln2 = std::log(2.0);
    double best = 0.0;
    double prefix = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += lognorm[k - 1];
        const double logbinom = (std::lgamma(static_cast<double>(n) + 1) -
                                 std::lgamma(static_cast<double>(k) + 1) -
                                 std::lgamma(static_cast<double>(n - k) + 1)) /
                                ln2;
        best = std::max(best, logbinom + prefix);
    }
    return static_cast<long>(std::ceil(best)) + 17;  // sign bit + float guard
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& m, const CharPolyOptions& opts, CharPolyStats* stats) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) {
        if (stats) *stats = {};
        return IntPolynomial::constant(1);
    }

    const long bits = coefficient_bound_bits(m);
    const std::size_t prime_count = static_cast<std::size_t>(bits / 61) + 2;
    const std::vector<std::uint64_t> primes = detail::modular_primes(prime_count, opts.prime_skip);

    std::vector<std::vector<std::uint64_t>> residues(primes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mtx;

    auto worker = [&]() {
        try {
            std::vector<std::uint64_t> a(n * n);
            for (std::size_t idx; (idx = next.fetch_add(1)) < primes.size();) {
                if (failed.load()) return;
                const Montgomery M(primes[idx]);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        a[i * n + j] =
                            M.to(mpz_fdiv_ui(m.at(i, j).get_mpz_t(), primes[idx]));
                residues[idx] = charpoly_mod(a, n, M);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mtx);
            if (!error) error = std::current_exception();
            failed.store(true);
        }
    };

    const std::size_t nthreads =
        std::min<std::size_t>(std::max(opts.threads, 1), primes.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    // Explicit CRT: X = sum_i w_i * (P/p_i) mod P with w_i = r_i * c_i mod p_i,
    // then a symmetric lift.
    mpz_class P = 1;
    for (std::uint64_t p : primes) P *= p;
    std::vector<mpz_class> partial(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        partial[i] = P / primes[i];
        const Montgomery M(primes[i]);
        const std::uint64_t inv =
            M.inv(M.to(mpz_fdiv_ui(partial[i].get_mpz_t(), primes[i])));
        for (std::size_t k = 0; k <= n; ++k)
            residues[i][k] = M.from(M.mul(M.to(residues[i][k]), inv));
    }
    const mpz_class half = P / 2;

    std::vector<mpz_class> coeffs(n + 1);
    mpz_class acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (residues[i][k] != 0)
                mpz_addmul_ui(acc.get_mpz_t(), partial[i].get_mpz_t(), residues[i][k]);
        acc %= P;
        if (acc < 0) acc += P;
        if (acc > half) acc -= P;
        coeffs[k] = acc;
    }

    IntPolynomial result(std::move(coeffs));
    if (result.degree() != static_cast<int>(n) || !result.is_monic())
        throw std::logic_error("char_poly: reconstruction failed the monic/degree check");
    if (stats) {
        stats->prime_count = primes.size();
        stats->bound_bits = bits;
    }
    return result;
}

}  // namespace dehornoy
