#pragma once

// Edge-list input and the serialization formats used by the CLI: JSON rows
// with deterministic key order, plain-text tables, and the Betti CSV layout
// (rows i, columns j).

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "deviant/betti.hpp"
#include "deviant/ideals.hpp"
#include "deviant/series.hpp"

namespace deviant {

using Json = nlohmann::ordered_json;

// First data line: vertex count n. Each following line: one edge `i j`,
// 1-based. Blank lines and '#' comments are ignored.
// Throws std::invalid_argument with a line reference on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Exact integers: values that fit in 64 bits become JSON numbers, anything
// larger a decimal string.
Json json_int(const Int& v);
Json json_vector(const ExponentVector& v);

Json deviations_rows(const DeviationTable& t);   // [{"s":..,"epsilon":..}]
Json multigraded_rows(const DeviationTable& t);  // [{"v":[..],"epsilon":..}]
Json betti_rows(const BettiTable& t);            // [{"i":..,"v":[..],"beta":..}]

std::string deviations_text(const DeviationTable& t);
std::string multigraded_text(const DeviationTable& t);

// Graded table beta_{i,j}: rows i, columns j; blank cells are zero.
std::string betti_text(const BettiTable& t);
std::string betti_csv(const BettiTable& t);

}  // namespace deviant
