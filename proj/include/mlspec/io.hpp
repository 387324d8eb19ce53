#pragma once

#include <json.hpp>

#include <string>

#include "mlspec/hilbert.hpp"
#include "mlspec/spectral.hpp"
#include "mlspec/structures.hpp"

namespace mlspec {

using Json = nlohmann::ordered_json;

// Malformed documents throw ParseError; documents that parse but describe an
// invalid object throw the module error (InvalidDomain, SingularMatrix, ...).

// {"dim": n, "entries": [[...], ...]}. Entries are integers or strings in the
// rational format ("p", "p/q", exact decimals); non-integral JSON numbers are
// taken at their exact binary value.
SquareMatrix matrix_from_json(const Json& j);
// Entries are written as "p" or "p/q" strings.
Json matrix_to_json(const SquareMatrix& m);

// {"type": "ellipsoid", "center": [...], "shape": [[...]]} or
// {"type": "polytope", "halfspaces": [{"normal": [...], "offset": b}],
//  "interior": [...]} with "interior" optional.
ConvexDomain domain_from_json(const Json& j);
Json domain_to_json(const ConvexDomain& d);

RealVector vector_from_json(const Json& j);
Json vector_to_json(const RealVector& v);

// {"dim", "generators": {"a": [[...]], ...}, "relators", "torsion_lcm"}, plus
// optional "inverses" (same layout as "generators") and
// "triangle": {"orders": [p, q, r], "param": s}.
Representation representation_from_json(const Json& j);
Json representation_to_json(const Representation& rep);

// Array of {"word", "length", "trace", "trace_inv"}.
Json spectrum_to_json(const SpectrumTable& t);
// max_len < 0 means the longest word in the table.
SpectrumTable spectrum_from_json(const Json& j, int max_len = -1);
// Header line, then one tab-separated row per entry, reals at 17 significant
// digits so the mirror is lossless.
std::string spectrum_to_tsv(const SpectrumTable& t);

// Unreadable files and malformed JSON throw ParseError.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace mlspec
