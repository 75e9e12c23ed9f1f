// Command-line front end: builds descent/recoil matrices, computes their
// characteristic polynomials, runs the verification claims, counts normal
// sequences and estimates growth.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 usage error,
// 3 budget exceeded.  Diagnostics go to stderr; stdout is canonical and
// deterministic for a fixed command line.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "dehornoy/fqsym.hpp"
#include "dehornoy/serialize.hpp"
#include "dehornoy/symmetric_group.hpp"
#include "dehornoy/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_verified = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct CliConfig {
    int n = 0;
    std::uint64_t length = 1;
    long long sample = -1;  // -1 = default policy, 0 = exhaustive
    std::string format = "text";
    std::string output;
    std::string cache_dir;
    bool no_cache = false;
    int threads = 0;  // 0 = auto
    std::uint64_t seed = 1;
    int max_n_budget = 0;  // 0 = defaults
    int iterations = 1000;
    double tolerance = 1e-9;
};

dehornoy::Budget make_budget(const CliConfig& cfg) {
    dehornoy::Budget b;
    if (cfg.max_n_budget > 0) {
        b.max_n_matrix = cfg.max_n_budget;
        b.max_n_charpoly = cfg.max_n_budget;
    }
    return b;
}

dehornoy::CacheConfig make_cache(const CliConfig& cfg) {
    dehornoy::CacheConfig cache;
    if (cfg.no_cache) return cache;
    if (!cfg.cache_dir.empty()) {
        cache.dir = cfg.cache_dir;
        cache.enabled = true;
        return cache;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        cache.dir = std::filesystem::path(xdg) / "dehornoy";
        cache.enabled = true;
    } else if (const char* home = std::getenv("HOME"); home && *home) {
        cache.dir = std::filesystem::path(home) / ".cache" / "dehornoy";
        cache.enabled = true;
    }
    return cache;
}

int effective_threads(const CliConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

dehornoy::VerifyOptions make_verify_options(const CliConfig& cfg) {
    dehornoy::VerifyOptions opts;
    opts.budget = make_budget(cfg);
    opts.threads = effective_threads(cfg);
    opts.cache = make_cache(cfg);
    return opts;
}

// Sink selection: stdout or --output file with identical bytes.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_matrix(const CliConfig& cfg, std::ostream& out) {
    const dehornoy::Budget budget = make_budget(cfg);
    if (cfg.n < 1) throw std::invalid_argument("--n must be at least 1");
    if (cfg.n > budget.max_n_matrix)
        throw dehornoy::BudgetExceeded("n=" + std::to_string(cfg.n) +
                                       " exceeds the matrix budget n<=" +
                                       std::to_string(budget.max_n_matrix));
    const auto& table = dehornoy::SymmetricGroupTable::get(cfg.n);
    const std::size_t N = table.size();
    // Entries are 0/1; rows stream so the full matrix is never materialized.
    std::string row;
    if (cfg.format == "json") out << '[';
    for (std::size_t s = 0; s < N; ++s) {
        row.clear();
        const std::uint64_t not_des = ~table.des_mask(s);
        for (std::size_t t = 0; t < N; ++t) {
            const bool one = (table.rec_mask(t) & not_des) == 0;
            if (cfg.format == "json") {
                row += t == 0 ? "[\"" : ",\"";
                row += one ? '1' : '0';
                row += '"';
            } else {
                if (t != 0) row += cfg.format == "csv" ? "," : " ";
                row += one ? '1' : '0';
            }
        }
        if (cfg.format == "json") {
            if (s != 0) out << ',';
            out << row << ']';
        } else {
            out << row << '\n';
        }
    }
    if (cfg.format == "json") out << "]\n";
}

void emit_charpoly(const CliConfig& cfg, std::ostream& out) {
    dehornoy::CharPolyStats stats;
    const auto opts = make_verify_options(cfg);
    const dehornoy::IntPolynomial p = dehornoy::matrix_char_poly(cfg.n, opts, &stats);
    std::cerr << "# charpoly n=" << cfg.n << " degree=" << p.degree()
              << " primes=" << stats.prime_count << " bound_bits=" << stats.bound_bits
              << (stats.prime_count == 0 ? " (cache)" : "") << '\n';
    if (cfg.format == "json") {
        const nlohmann::json j{
            {"n", cfg.n}, {"degree", p.degree()}, {"coeffs", dehornoy::poly_to_json(p)}};
        out << j.dump() << '\n';
    } else if (cfg.format == "csv") {
        for (int k = 0; k <= p.degree(); ++k)
            out << k << ',' << p.coeff(k).get_str() << '\n';
    } else {
        out << p.to_string() << '\n';
    }
}

void emit_report_text(const dehornoy::VerificationReport& r, std::ostream& out) {
    out << "claim: " << dehornoy::claim_name(r.claim) << '\n';
    out << "n: " << r.n << '\n';
    out << "verified: " << (r.verified ? "true" : "false") << '\n';
    for (auto it = r.witness.begin(); it != r.witness.end(); ++it) {
        const nlohmann::json& v = it.value();
        if (v.is_array()) continue;  // polynomial payloads: json format carries them
        out << it.key() << ": ";
        if (v.is_null())
            out << "none";
        else if (v.is_string())
            out << v.get<std::string>();
        else
            out << v.dump();
        out << '\n';
    }
}

int emit_report(const CliConfig& cfg, const dehornoy::VerificationReport& r, std::ostream& out) {
    std::cerr << "# " << dehornoy::claim_name(r.claim) << " n=" << r.n
              << " wall_ms=" << r.wall_ms << " primes=" << r.prime_count << '\n';
    if (cfg.format == "json") {
        out << dehornoy::report_to_json(r).dump() << '\n';
    } else if (cfg.format == "csv") {
        out << dehornoy::claim_name(r.claim) << ',' << r.n << ','
            << (r.verified ? "true" : "false") << '\n';
    } else {
        emit_report_text(r, out);
    }
    return r.verified ? exit_ok : exit_not_verified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for the descent/recoil divisibility conjecture"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--output", cfg.output, "Write output to a file instead of stdout");
        cmd->add_option("--max-n-budget", cfg.max_n_budget,
                        "Override the resource cap on n (default: 7 matrix, 6 charpoly)")
            ->envname("DEHORNOY_MAX_N");
        cmd->add_option("--cache-dir", cfg.cache_dir,
                        "Characteristic polynomial cache (where applicable)")
            ->envname("DEHORNOY_CACHE_DIR");
        cmd->add_flag("--no-cache", cfg.no_cache, "Bypass the on-disk cache");
        cmd->add_option("--threads", cfg.threads, "Worker threads (0 = auto, where applicable)");
    };

    CLI::App* matrix = app.add_subcommand("matrix", "Print the descent/recoil matrix");
    matrix->add_option("--n", cfg.n, "Degree of the symmetric group")->required();
    add_common(matrix);

    CLI::App* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of the matrix");
    charpoly->add_option("--n", cfg.n, "Degree of the symmetric group")->required();
    add_common(charpoly);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification claim");
    std::string claim;
    verify->add_option("claim", claim, "divides|commute|surjective|blocks|ribbon")
        ->required()
        ->check(CLI::IsMember({"divides", "commute", "surjective", "blocks", "ribbon"}));
    verify->add_option("--n", cfg.n, "Degree (for ribbon: maximum degree)")->required();
    verify->add_option("--sample", cfg.sample,
                       "Commutation sample size (0 = exhaustive; default: exhaustive for n<7, "
                       "200 for n>=7)");
    verify->add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
    add_common(verify);

    CLI::App* count = app.add_subcommand("count", "Count normal sequences");
    count->add_option("--n", cfg.n, "Degree of the symmetric group")->required();
    count->add_option("--length", cfg.length, "Sequence length")->required();
    add_common(count);

    CLI::App* growth = app.add_subcommand("growth", "Dominant eigenvalue estimate");
    growth->add_option("--n", cfg.n, "Degree of the symmetric group")->required();
    growth->add_option("--iterations", cfg.iterations, "Power iteration budget")
        ->capture_default_str();
    growth->add_option("--tolerance", cfg.tolerance, "Residual tolerance")
        ->capture_default_str();
    add_common(growth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (cfg.n < 1) throw std::invalid_argument("--n must be at least 1");
        OutputSink sink(cfg.output);
        std::ostream& out = sink.stream();

        if (matrix->parsed()) {
            emit_matrix(cfg, out);
            return exit_ok;
        }
        if (charpoly->parsed()) {
            emit_charpoly(cfg, out);
            return exit_ok;
        }
        if (verify->parsed()) {
            dehornoy::VerificationReport report;
            if (claim == "divides") {
                report = dehornoy::verify_divisibility(cfg.n, make_verify_options(cfg));
            } else if (claim == "commute") {
                std::optional<std::size_t> sample;
                if (cfg.sample > 0)
                    sample = static_cast<std::size_t>(cfg.sample);
                else if (cfg.sample < 0 && cfg.n >= 7)
                    sample = 200;
                report = dehornoy::verify_commutation(cfg.n, sample, cfg.seed);
            } else if (claim == "surjective") {
                report = dehornoy::verify_surjectivity(cfg.n, make_verify_options(cfg));
            } else if (claim == "blocks") {
                report = dehornoy::verify_block_structure(cfg.n, make_verify_options(cfg));
            } else {
                report = dehornoy::verify_ribbon_derivation(cfg.n);
            }
            return emit_report(cfg, report, out);
        }
        if (count->parsed()) {
            if (cfg.length < 1) throw std::invalid_argument("--length must be at least 1");
            const mpz_class c =
                dehornoy::count_normal_sequences(cfg.n, cfg.length, make_budget(cfg));
            if (cfg.format == "json") {
                const nlohmann::json j{
                    {"n", cfg.n}, {"length", cfg.length}, {"count", c.get_str()}};
                out << j.dump() << '\n';
            } else if (cfg.format == "csv") {
                out << cfg.n << ',' << cfg.length << ',' << c.get_str() << '\n';
            } else {
                out << c.get_str() << '\n';
            }
            return exit_ok;
        }
        if (growth->parsed()) {
            const dehornoy::GrowthResult g =
                dehornoy::growth_rate(cfg.n, cfg.iterations, cfg.tolerance, make_budget(cfg));
            if (!g.converged)
                std::cerr << "# growth: no convergence within " << g.iterations_used
                          << " iterations (residual " << g.residual << ")\n";
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", g.estimate);
            if (cfg.format == "json") {
                const nlohmann::json j{{"estimate", g.estimate},
                                       {"residual", g.residual},
                                       {"iterations", g.iterations_used},
                                       {"converged", g.converged}};
                out << j.dump() << '\n';
            } else if (cfg.format == "csv") {
                char rbuf[64];
                std::snprintf(rbuf, sizeof rbuf, "%.6g", g.residual);
                out << buf << ',' << rbuf << ',' << g.iterations_used << ','
                    << (g.converged ? "true" : "false") << '\n';
            } else {
                out << buf << '\n';
            }
            return exit_ok;
        }
        return exit_usage;
    } catch (const dehornoy::BudgetExceeded& e) {
        std::cerr << "error: budget-exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory (consider lowering --max-n-budget)\n";
        return exit_not_verified;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return exit_not_verified;
    }
}
