#pragma once

// Text formats.
//
// Matrix files follow the 4ti2 layout: a "<rows> <cols>" header, then one
// line per row of space-separated decimal entries, LF-terminated. A basis is
// the l x 2^n matrix whose rows are its elements in canonical order.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "oa/analysis.hpp"
#include "oa/hilbert.hpp"
#include "oa/matrix.hpp"

namespace oa {

std::string write_matrix(const IntMatrix& m);
/// Throws ParseError (with 1-based line/column) on malformed or ragged input.
IntMatrix read_matrix(std::string_view text);

std::string write_basis(const HilbertBasis& basis);
std::string write_basis(std::vector<ReplicateVector> elements, std::size_t width);
/// Rows become replicate vectors; the column count must be a power of two.
std::vector<ReplicateVector> read_basis(std::string_view text);

/// JSON object with the element count and the three cross-tabulations.
std::string write_summary_json(const Summary& s);
Summary read_summary_json(std::string_view text);
/// "table<TAB>row<TAB>col<TAB>count" lines after a header line.
std::string write_summary_tsv(const Summary& s);
Summary read_summary_tsv(std::string_view text);

/// One line per classified element, in input order.
std::string write_classifications_tsv(const std::vector<Classification>& records);

std::string load_text(const std::filesystem::path& p);
void save_text(const std::filesystem::path& p, std::string_view text);

}  // namespace oa
