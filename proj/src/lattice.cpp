#include "toric/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toric {

namespace {

struct Elimination {
    std::vector<IntVec> reduced;  // echelon form of the input rows
    std::vector<IntVec> transform;  // unimodular U with U * input = reduced
    int rank = 0;
};

// Integer row echelon by repeated Euclidean reduction in each column. Only
// unimodular operations are used (swap, negate, add integer multiples), so the
// transform rows below the rank form a saturated basis of the left kernel.
Elimination eliminate(const std::vector<IntVec>& input) {
    const int k = static_cast<int>(input.size());
    const int n = input.empty() ? 0 : static_cast<int>(input[0].size());
    Elimination e;
    e.reduced = input;
    e.transform.assign(k, IntVec(k, 0));
    for (int i = 0; i < k; ++i) e.transform[i][i] = 1;

    auto add_multiple = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < n; ++c) e.reduced[dst][c] -= q * e.reduced[src][c];
        for (int c = 0; c < k; ++c) e.transform[dst][c] -= q * e.transform[src][c];
    };
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        std::swap(e.reduced[a], e.reduced[b]);
        std::swap(e.transform[a], e.transform[b]);
    };
    auto negate_row = [&](int r) {
        for (auto& x : e.reduced[r]) x = -x;
        for (auto& x : e.transform[r]) x = -x;
    };

    int pivot = 0;
    for (int col = 0; col < n && pivot < k; ++col) {
        while (true) {
            int best = -1;
            int nonzero = 0;
            for (int r = pivot; r < k; ++r) {
                if (e.reduced[r][col] == 0) continue;
                ++nonzero;
                if (best < 0 || abs(e.reduced[r][col]) < abs(e.reduced[best][col])) best = r;
            }
            if (best < 0) break;  // column already clear
            if (nonzero == 1) {
                swap_rows(pivot, best);
                if (e.reduced[pivot][col] < 0) negate_row(pivot);
                ++pivot;
                break;
            }
            for (int r = pivot; r < k; ++r) {
                if (r == best || e.reduced[r][col] == 0) continue;
                add_multiple(r, best, e.reduced[r][col] / e.reduced[best][col]);
            }
        }
    }
    e.rank = pivot;
    return e;
}

void reduce_above_pivots(std::vector<IntVec>& rows) {
    const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int p = 0; p < static_cast<int>(rows.size()); ++p) {
        int col = 0;
        while (col < n && rows[p][col] == 0) ++col;
        if (col == n) continue;
        for (int r = 0; r < p; ++r) {
            // floor division puts the entry above the pivot into [0, pivot)
            Int q = rows[r][col] / rows[p][col];
            Int rem = rows[r][col] - q * rows[p][col];
            if (rem < 0) q -= 1;
            if (q == 0) continue;
            for (int c = 0; c < n; ++c) rows[r][c] -= q * rows[p][c];
        }
    }
}

}  // namespace

std::vector<IntVec> hermite_form(std::vector<IntVec> rows) {
    if (rows.empty()) return rows;
    Elimination e = eliminate(rows);
    e.reduced.resize(e.rank);
    reduce_above_pivots(e.reduced);
    return e.reduced;
}

int exact_rank(const std::vector<IntVec>& rows) { return eliminate(rows).rank; }

int exact_rank(const ModelMatrix& A) { return exact_rank(A.entries()); }

LatticeBasis integer_kernel(const ModelMatrix& A) {
    Elimination e = eliminate(A.entries());
    std::vector<IntVec> kernel(e.transform.begin() + e.rank, e.transform.end());
    return LatticeBasis{hermite_form(std::move(kernel)), A.rows()};
}

int degrees_of_freedom(const ModelMatrix& A) { return A.rows() - exact_rank(A); }

bool lattice_contains(const LatticeBasis& L, const IntVec& v) {
    if (static_cast<int>(v.size()) != L.ambient_dim)
        throw std::invalid_argument("vector dimension does not match lattice");
    IntVec w = v;
    const int n = L.ambient_dim;
    for (const IntVec& row : L.vectors) {
        int col = 0;
        while (col < n && row[col] == 0) ++col;
        if (col == n) continue;
        if (w[col] == 0) continue;
        if (w[col] % row[col] != 0) return false;
        Int q = w[col] / row[col];
        for (int c = 0; c < n; ++c) w[c] -= q * row[c];
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

bool kernels_equal(const ModelMatrix& A, const ModelMatrix& B) {
    if (A.rows() != B.rows())
        throw std::invalid_argument("kernel comparison needs equal row counts");
    LatticeBasis ka = integer_kernel(A), kb = integer_kernel(B);
    if (ka.size() != kb.size()) return false;
    for (const auto& v : kb.vectors)
        if (!lattice_contains(ka, v)) return false;
    for (const auto& v : ka.vectors)
        if (!lattice_contains(kb, v)) return false;
    return true;
}

}  // namespace toric
