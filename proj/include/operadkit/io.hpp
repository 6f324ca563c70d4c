#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "operadkit/algebra.hpp"
#include "operadkit/operad.hpp"

namespace operadkit {

using Structure = std::variant<TruncatedOperad, GradedAlgebra>;

/// JSON structure-constants document. Operads:
///   {"kind": "operad", "field": "Q" | "Fp:<p>", "max_arity": N,
///    "arities": [{"arity": n, "dim": d, "actions": [rho(s_1), ...]}, ...],
///    "identity": [...],
///    "compositions": [{"m", "n", "i", "entries": [[a, b, out, c], ...]}]}
/// Algebras:
///   {"kind": "algebra", "field", "max_degree": D, "dims": [...],
///    "unit": [...], "products": [{"i", "j", "entries": [...]}],
///    "typing": ["", "eo", ...]}   (typing optional)
/// Matrices are lists of rows. Scalars are integers or "p/q" strings.
/// Absent composition/product blocks are zero maps; only nonzero entries
/// are written. Output is deterministic.
std::string to_text(const TruncatedOperad& p);
std::string to_text(const GradedAlgebra& a);
std::string to_text(const Structure& s);

/// Throws ParseError with a JSON path on malformed or inconsistent input.
Structure parse_text(std::string_view text);
TruncatedOperad parse_operad(std::string_view text);
GradedAlgebra parse_algebra(std::string_view text);

}  // namespace operadkit
