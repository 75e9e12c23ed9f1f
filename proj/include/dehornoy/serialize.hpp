#pragma once

#include <json.hpp>

#include "dehornoy/fqsym.hpp"
#include "dehornoy/int_matrix.hpp"
#include "dehornoy/int_polynomial.hpp"
#include "dehornoy/verify.hpp"

namespace dehornoy {

// Big integers serialize as decimal strings throughout: coefficients
// routinely exceed 64 bits.

// ["c0", "c1", ...] ascending; the zero polynomial is [].
nlohmann::json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const nlohmann::json& j);

// Row arrays: [["a","b"],["c","d"]].
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// Canonically ordered term list: [{"word": "21", "coefficient": "-2"}, ...].
nlohmann::json fqsym_to_json(const FQSymElement& x);
FQSymElement fqsym_from_json(const nlohmann::json& j);

// Canonical report payload.  Diagnostics (wall time, prime count) are
// volatile across runs and are only included on request.
nlohmann::json report_to_json(const VerificationReport& r, bool include_diagnostics = false);

}  // namespace dehornoy
