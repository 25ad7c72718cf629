#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "symbidisc/geometry.hpp"
#include "symbidisc/numerics.hpp"
#include "symbidisc/von_neumann.hpp"

namespace symbidisc {

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

/// {"size": k, "terms": [{"s": i, "p": j, "coeff": <matrix>}, ...]}.
/// A bare matrix document is read as the constant polynomial.
nlohmann::json polynomial_to_json(const MatrixPolynomial& f);
MatrixPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);

/// Pretty JSON with a trailing newline. Doubles are printed with enough
/// digits to round-trip.
std::string dump_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace symbidisc
