#pragma once

#include "loewner/matrix.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace loewner {

/// Matrix file schema: {"dim": n, "entries": [[re, im], ...]} with exactly
/// n*n pairs in row-major order.
ComplexMatrix matrix_from_json(const nlohmann::json &j, const std::string &context);
nlohmann::json matrix_to_json(const ComplexMatrix &m);

/// Errors mention the offending path.
ComplexMatrix read_matrix(const std::string &path);
void write_matrix(const std::string &path, const ComplexMatrix &m);

} // namespace loewner
