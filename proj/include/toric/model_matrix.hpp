#pragma once

#include "toric/bigint.hpp"

#include <string>
#include <vector>

namespace toric {

/// Identifies a matrix row: either a cell (i,j) of a two-way table or a bare
/// 1-based index. Cell rows give variables the name p_{i,j}, indexed rows p_k.
struct CellLabel {
    int i = 0;
    int j = 0;
    bool is_pair = false;

    static CellLabel cell(int i, int j) { return CellLabel{i, j, true}; }
    static CellLabel index(int k) { return CellLabel{k, 0, false}; }

    std::string var_name() const;  // "p_{i,j}" or "p_k"
    std::string text() const;      // "(i,j)" or "k"
    static CellLabel parse(const std::string& s);

    bool operator==(const CellLabel&) const = default;
};

/// A non-negative integer matrix whose rows index table cells and whose
/// columns index model parameters. Immutable after construction.
class ModelMatrix {
  public:
    ModelMatrix(std::vector<IntVec> entries, std::vector<CellLabel> row_labels,
                std::vector<std::string> col_labels);

    /// Builds with default labels: rows 1..k, columns a0..a(n-1).
    static ModelMatrix from_rows(std::vector<IntVec> entries);

    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return static_cast<int>(entries_[0].size()); }
    const Int& at(int r, int c) const { return entries_.at(r).at(c); }
    const IntVec& row(int r) const { return entries_.at(r); }
    const std::vector<IntVec>& entries() const { return entries_; }
    const std::vector<CellLabel>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    /// Derived flag, not an invariant: column 0 is all ones.
    bool has_constant_column() const;
    IntVec row_sums() const;
    std::vector<std::string> var_names() const;
    ModelMatrix select_rows(const std::vector<int>& keep) const;

    bool operator==(const ModelMatrix&) const = default;

  private:
    std::vector<IntVec> entries_;
    std::vector<CellLabel> row_labels_;
    std::vector<std::string> col_labels_;
};

/// True when dimensions and entries agree; labels are ignored.
bool entries_equal(const ModelMatrix& a, const ModelMatrix& b);

/// Model matrix of the two-way independence model: a column of ones, then the
/// row indicators r_1..r_I, then the column indicators c_1..c_J. Rows are the
/// cells (1,1),(1,2),...,(I,J) in lexicographic order.
ModelMatrix build_independence_matrix(int I, int J);

/// Replaces columns a and b by their entrywise sum. The merged column sits at
/// min(a,b); column 0 is never mergeable. Row labels are unchanged and the
/// merged column label records the pair.
ModelMatrix merge_columns(const ModelMatrix& A, int a, int b);

struct RowGroups {
    ModelMatrix reduced;                  // one representative per group, original order
    std::vector<std::vector<int>> groups; // maximal sets of equal rows, singletons included
    std::vector<int> kept;                // row index of each representative
};

/// Collapses equal rows, keeping the smallest-index occurrence of each group.
RowGroups dedupe_rows(const ModelMatrix& A);

}  // namespace toric
