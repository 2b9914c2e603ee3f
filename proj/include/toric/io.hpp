#pragma once

#include "toric/cluster.hpp"
#include "toric/ideal.hpp"
#include "toric/model_matrix.hpp"
#include "toric/models.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

// Matrix text format: a "k n" header line, then k rows of n space-separated
// non-negative integers. Lines starting with '#' are ignored.
ModelMatrix read_matrix_text(std::istream& in);
std::string write_matrix_text(const ModelMatrix& A);

// JSON mirror: {"rows": [[...]], "row_labels": [...], "col_labels": [...]}.
nlohmann::json matrix_to_json(const ModelMatrix& A);
ModelMatrix matrix_from_json(const nlohmann::json& j);

/// Reads a matrix file, sniffing JSON vs text by the first non-space byte.
ModelMatrix read_matrix_file(const std::string& path);

// Binomial JSON: {"plus": {"p_{1,1}": 1, ...}, "minus": {...}}.
nlohmann::json binomial_to_json(const Binomial& b, const std::vector<std::string>& vars);
Binomial binomial_from_json(const nlohmann::json& j, const std::vector<std::string>& vars);

// Ideal JSON: {"order": "...", "generators": [...], "groebner": [...]}.
nlohmann::json ideal_to_json(const IdealPresentation& I, const std::vector<std::string>& vars);
IdealPresentation ideal_from_json(const nlohmann::json& j, const std::vector<std::string>& vars);

/// One binomial per line; "<zero ideal>" when the basis is empty.
std::string ideal_text(const IdealPresentation& I, const std::vector<std::string>& vars);

// Merge report JSON: {identical, added_linear, added_higher, base_gb_size,
// merged_gb_size, interpretable}.
nlohmann::json merge_report_to_json(const MergeReport& r, const std::vector<std::string>& vars);

// Contingency table CSV: header row of column labels, then one row per line
// with its label first.
ContingencyTable read_table_csv(std::istream& in);
ContingencyTable read_table_csv_file(const std::string& path);

// Trace JSON: array of {merged, distance "num/den", clusters, report} steps;
// the terminal marker carries {terminal: true, merged, grand_cluster}.
nlohmann::json trace_to_json(const MergeTrace& trace, const ContingencyTable& t);

}  // namespace toric
