#pragma once

#include <json.hpp>

#include <string>

#include "coxperron/coxeter.hpp"
#include "coxperron/poly.hpp"

namespace coxperron {

using Json = nlohmann::ordered_json;

/// ["-4","7","-2"] for -4 + 7t - 2t^2: lowest terms, constant term first.
Json poly_to_json(const Poly& p);
/// Accepts coefficient strings (or plain JSON integers).
Poly poly_from_json(const Json& j);

/// {"rank": k, "m": [[...]], "labels": [...]} with infinity as "inf".
Json matrix_to_json(const CoxeterMatrix& m);
/// "labels" is optional. Throws PreconditionError on schema violations.
CoxeterMatrix matrix_from_json(const Json& j);

/// Parses text, mapping JSON syntax errors to PreconditionError.
Json parse_json(const std::string& text);
/// Reads and parses a file; throws PreconditionError when unreadable.
Json read_json_file(const std::string& path);

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

}  // namespace coxperron
