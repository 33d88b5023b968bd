#pragma once

#include <string>
#include <string_view>

#include "ohg/hypergraph.hpp"
#include "ohg/matrix.hpp"

namespace ohg {

inline constexpr int kInstanceFormatVersion = 1;

// Parses an instance document into unvalidated data. Throws ParseError with a
// line:column position for JSON syntax errors and a field path
// (e.g. "incidences[3].sign") for schema errors.
HypergraphData parse_instance_data(std::string_view text);

// parse_instance_data followed by validation; invariant violations throw
// InvalidHypergraphError whose report names incidences by field path.
OrientedHypergraph parse_instance(std::string_view text);

// Canonical form: incidences sorted by (vertex position, edge position, k),
// one incidence per line. Byte-identical for equal hypergraphs.
std::string serialize_instance(const OrientedHypergraph& g);

std::string serialize_validation_report(const ValidationReport& report);

// θ documents are JSON objects mapping vertex label to +1 or -1.
SwitchingFunction parse_switching_function(std::string_view text);
std::string serialize_switching_function(const SwitchingFunction& theta);

enum class MatrixFormat { csv, json };

// CSV: header row is an empty corner cell followed by column labels; every
// following row is the row label then base-10 entries. JSON:
// {"rows": [...], "cols": [...], "entries": [[...], ...]}.
std::string serialize_matrix(const LabeledMatrix& m, MatrixFormat format);
LabeledMatrix parse_matrix(std::string_view text, MatrixFormat format);

}  // namespace ohg
