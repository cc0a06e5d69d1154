#ifndef SEMINORM_MATRIX_IO_HPP
#define SEMINORM_MATRIX_IO_HPP

#include <string>

#include <json.hpp>

#include "seminorm/complex_matrix.hpp"
#include "seminorm/state.hpp"

namespace seminorm {

/// Matrix JSON: {"n": <int>, "entries": [[re, im] x n*n]} row-major.
/// Entries must be finite doubles; n is capped at 64 (desk scale).
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
ComplexMatrix matrix_from_file(const std::string& path);

/// Witness payloads use the same [re, im] pair convention.
nlohmann::json state_to_json(const State& s);

/// Canonical serialization: keys sorted (nlohmann objects are sorted by
/// construction), floating-point values at 17 significant digits, no
/// trailing newline (serialize_report adds one).
std::string canonical_dump(const nlohmann::json& j);

}  // namespace seminorm

#endif
