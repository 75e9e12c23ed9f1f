#include "dehornoy/poly_cache.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

#include "dehornoy/serialize.hpp"

namespace dehornoy {

namespace {

std::filesystem::path cache_file(const CacheConfig& cfg, int n) {
    const std::string name = std::string("charpoly-n") + std::to_string(n) + "-" +
                             cache_order_version + "-" + cache_algorithm_version + ".json";
    return cfg.dir / name;
}

}  // namespace

std::optional<IntPolynomial> cache_load_charpoly(const CacheConfig& cfg, int n) {
    if (!cfg.enabled || cfg.dir.empty()) return std::nullopt;
    std::ifstream in(cache_file(cfg, n));
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("schema") != cache_schema_version || j.at("order") != cache_order_version ||
            j.at("algorithm") != cache_algorithm_version || j.at("n") != n)
            return std::nullopt;
        IntPolynomial p = poly_from_json(j.at("coeffs"));
        if (p.degree() != j.at("degree").get<int>()) return std::nullopt;
        return p;
    } catch (...) {
        return std::nullopt;
    }
}

void cache_store_charpoly(const CacheConfig& cfg, int n, const IntPolynomial& poly) {
    if (!cfg.enabled || cfg.dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.dir, ec);
    if (ec) return;
    const nlohmann::json j{{"schema", cache_schema_version},
                           {"order", cache_order_version},
                           {"algorithm", cache_algorithm_version},
                           {"n", n},
                           {"degree", poly.degree()},
                           {"coeffs", poly_to_json(poly)}};
    const std::filesystem::path final_path = cache_file(cfg, n);
    const std::filesystem::path tmp_path = final_path.string() + ".tmp";
    {
        std::ofstream out(tmp_path);
        if (!out) return;
        out << j.dump() << '\n';
        if (!out) return;
    }
    std::filesystem::rename(tmp_path, final_path, ec);
}

}  // namespace dehornoy
