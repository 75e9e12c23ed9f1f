#include "dehornoy/serialize.hpp"

#include <stdexcept>

namespace dehornoy {

nlohmann::json poly_to_json(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPolynomial poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected array");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) coeffs.emplace_back(e.get<std::string>());
    return IntPolynomial(std::move(coeffs));
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix_from_json: expected array");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("matrix_from_json: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = mpz_class(j[i][c].get<std::string>());
    }
    return m;
}

nlohmann::json fqsym_to_json(const FQSymElement& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, c] : x.terms())
        arr.push_back({{"word", p.to_string()}, {"coefficient", c.get_str()}});
    return arr;
}

FQSymElement fqsym_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("fqsym_from_json: expected array");
    FQSymElement x;
    for (const auto& t : j)
        x.add_term(Permutation::parse(t.at("word").get<std::string>()),
                   mpz_class(t.at("coefficient").get<std::string>()));
    return x;
}

nlohmann::json report_to_json(const VerificationReport& r, bool include_diagnostics) {
    nlohmann::json j{{"claim", claim_name(r.claim)},
                     {"n", r.n},
                     {"verified", r.verified},
                     {"witness", r.witness}};
    if (include_diagnostics)
        j["diagnostics"] = {{"wall_ms", r.wall_ms}, {"prime_count", r.prime_count}};
    return j;
}

}  // namespace dehornoy
