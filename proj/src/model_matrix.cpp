#include "toric/model_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

std::string CellLabel::var_name() const {
    if (is_pair) return "p_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    return "p_" + std::to_string(i);
}

std::string CellLabel::text() const {
    if (is_pair) return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return std::to_string(i);
}

CellLabel CellLabel::parse(const std::string& s) {
    if (!s.empty() && s.front() == '(') {
        auto comma = s.find(',');
        auto close = s.find(')');
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw InputError("bad cell label: " + s);
        return cell(std::stoi(s.substr(1, comma - 1)), std::stoi(s.substr(comma + 1, close - comma - 1)));
    }
    return index(std::stoi(s));
}

ModelMatrix::ModelMatrix(std::vector<IntVec> entries, std::vector<CellLabel> row_labels,
                         std::vector<std::string> col_labels)
    : entries_(std::move(entries)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
    if (entries_.empty()) throw std::invalid_argument("matrix needs at least one row");
    const std::size_t n = entries_[0].size();
    if (n == 0) throw std::invalid_argument("matrix needs at least one column");
    for (const auto& r : entries_) {
        if (r.size() != n) throw std::invalid_argument("ragged matrix");
        for (const Int& e : r)
            if (e < 0) throw std::invalid_argument("matrix entries must be non-negative");
    }
    if (row_labels_.size() != entries_.size() || col_labels_.size() != n)
        throw std::invalid_argument("label count does not match matrix dimensions");
}

ModelMatrix ModelMatrix::from_rows(std::vector<IntVec> entries) {
    if (entries.empty() || entries[0].empty())
        throw std::invalid_argument("matrix needs at least one row and one column");
    std::vector<CellLabel> rl;
    for (std::size_t r = 0; r < entries.size(); ++r) rl.push_back(CellLabel::index(static_cast<int>(r) + 1));
    std::vector<std::string> cl;
    for (std::size_t c = 0; c < entries[0].size(); ++c) cl.push_back("a" + std::to_string(c));
    return ModelMatrix(std::move(entries), std::move(rl), std::move(cl));
}

bool ModelMatrix::has_constant_column() const {
    for (int r = 0; r < rows(); ++r)
        if (at(r, 0) != 1) return false;
    return true;
}

IntVec ModelMatrix::row_sums() const {
    IntVec s;
    s.reserve(entries_.size());
    for (const auto& r : entries_) s.push_back(vec_sum(r));
    return s;
}

std::vector<std::string> ModelMatrix::var_names() const {
    std::vector<std::string> v;
    v.reserve(row_labels_.size());
    for (const auto& l : row_labels_) v.push_back(l.var_name());
    return v;
}

ModelMatrix ModelMatrix::select_rows(const std::vector<int>& keep) const {
    std::vector<IntVec> e;
    std::vector<CellLabel> rl;
    for (int r : keep) {
        e.push_back(entries_.at(r));
        rl.push_back(row_labels_.at(r));
    }
    return ModelMatrix(std::move(e), std::move(rl), col_labels_);
}

bool entries_equal(const ModelMatrix& a, const ModelMatrix& b) {
    return a.entries() == b.entries();
}

ModelMatrix build_independence_matrix(int I, int J) {
    if (I < 1 || J < 1) throw std::invalid_argument("table dimensions must be at least 1");
    std::vector<IntVec> rows;
    std::vector<CellLabel> rl;
    const int n = 1 + I + J;
    for (int i = 1; i <= I; ++i)
        for (int j = 1; j <= J; ++j) {
            IntVec row(n, 0);
            row[0] = 1;
            row[i] = 1;
            row[I + j] = 1;
            rows.push_back(std::move(row));
            rl.push_back(CellLabel::cell(i, j));
        }
    std::vector<std::string> cl;
    cl.emplace_back("const");
    for (int i = 1; i <= I; ++i) cl.push_back("r" + std::to_string(i));
    for (int j = 1; j <= J; ++j) cl.push_back("c" + std::to_string(j));
    return ModelMatrix(std::move(rows), std::move(rl), std::move(cl));
}

ModelMatrix merge_columns(const ModelMatrix& A, int a, int b) {
    if (a == b) throw std::invalid_argument("cannot merge a column with itself");
    if (a < 0 || b < 0 || a >= A.cols() || b >= A.cols())
        throw std::invalid_argument("column index out of range");
    if (a == 0 || b == 0) throw std::invalid_argument("column 0 is never merged");
    const int lo = std::min(a, b), hi = std::max(a, b);
    std::vector<IntVec> rows;
    rows.reserve(A.rows());
    for (int r = 0; r < A.rows(); ++r) {
        IntVec row = A.row(r);
        row[lo] += row[hi];
        row.erase(row.begin() + hi);
        rows.push_back(std::move(row));
    }
    std::vector<std::string> cl = A.col_labels();
    cl[lo] = A.col_labels()[a] + "+" + A.col_labels()[b];
    cl.erase(cl.begin() + hi);
    return ModelMatrix(std::move(rows), A.row_labels(), std::move(cl));
}

RowGroups dedupe_rows(const ModelMatrix& A) {
    std::map<IntVec, int> seen;  // row contents -> group position
    std::vector<std::vector<int>> groups;
    std::vector<int> kept;
    for (int r = 0; r < A.rows(); ++r) {
        auto it = seen.find(A.row(r));
        if (it == seen.end()) {
            seen.emplace(A.row(r), static_cast<int>(groups.size()));
            groups.push_back({r});
            kept.push_back(r);
        } else {
            groups[it->second].push_back(r);
        }
    }
    return RowGroups{A.select_rows(kept), std::move(groups), std::move(kept)};
}

}  // namespace toric
