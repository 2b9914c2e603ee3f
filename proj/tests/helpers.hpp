#pragma once

#include "toric/bigint.hpp"
#include "toric/binomial.hpp"
#include "toric/model_matrix.hpp"

#include <utility>
#include <vector>

namespace toric::testing {

inline ModelMatrix mat(std::vector<std::vector<int>> rows) {
    std::vector<IntVec> out;
    for (auto& r : rows) {
        IntVec v;
        for (int x : r) v.push_back(Int(x));
        out.push_back(std::move(v));
    }
    return ModelMatrix::from_rows(std::move(out));
}

/// 9x7 model matrix of the 3x3 independence model.
inline ModelMatrix independence_3x3() { return build_independence_matrix(3, 3); }

/// The 4x5 matrix whose toric ideal is zero but whose last-two-column merge
/// introduces a quadric.
inline ModelMatrix quadric_example_matrix() {
    return mat({{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 1, 0, 0, 0}, {0, 0, 1, 0, 1}});
}

/// The 9x6 matrix obtained by summing the third row indicator and the third
/// column indicator of the 3x3 independence matrix (entry 2 in the last row).
inline ModelMatrix mixed_merge_matrix() {
    return mat({{1, 1, 0, 0, 1, 0},
                {1, 1, 0, 0, 0, 1},
                {1, 1, 0, 1, 0, 0},
                {1, 0, 1, 0, 1, 0},
                {1, 0, 1, 0, 0, 1},
                {1, 0, 1, 1, 0, 0},
                {1, 0, 0, 1, 1, 0},
                {1, 0, 0, 1, 0, 1},
                {1, 0, 0, 2, 0, 0}});
}

inline Binomial binom(int dim, std::vector<std::pair<int, int>> terms) {
    IntVec u(dim, 0);
    for (auto [i, c] : terms) u[i] += c;
    return Binomial::from_vector(u);
}

/// 0-based variable index of cell (i,j) in an I x J table, cells row-major.
inline int cell(int J, int i, int j) { return (i - 1) * J + (j - 1); }

/// The nine quadrics generating the 3x3 independence ideal, frozen literally.
inline std::vector<Binomial> minors_3x3_literal() {
    auto c = [](int i, int j) { return cell(3, i, j); };
    std::vector<Binomial> g;
    g.push_back(binom(9, {{c(1, 1), 1}, {c(2, 3), 1}, {c(1, 3), -1}, {c(2, 1), -1}}));
    g.push_back(binom(9, {{c(1, 3), 1}, {c(3, 2), 1}, {c(1, 2), -1}, {c(3, 3), -1}}));
    g.push_back(binom(9, {{c(2, 3), 1}, {c(3, 2), 1}, {c(2, 2), -1}, {c(3, 3), -1}}));
    g.push_back(binom(9, {{c(2, 3), 1}, {c(3, 1), 1}, {c(2, 1), -1}, {c(3, 3), -1}}));
    g.push_back(binom(9, {{c(1, 1), 1}, {c(2, 2), 1}, {c(1, 2), -1}, {c(2, 1), -1}}));
    g.push_back(binom(9, {{c(1, 3), 1}, {c(2, 2), 1}, {c(1, 2), -1}, {c(2, 3), -1}}));
    g.push_back(binom(9, {{c(2, 2), 1}, {c(3, 1), 1}, {c(2, 1), -1}, {c(3, 2), -1}}));
    g.push_back(binom(9, {{c(1, 3), 1}, {c(3, 1), 1}, {c(1, 1), -1}, {c(3, 3), -1}}));
    g.push_back(binom(9, {{c(1, 1), 1}, {c(3, 2), 1}, {c(1, 2), -1}, {c(3, 1), -1}}));
    return g;
}

/// The six generators of the merged 3x3 ideal: three identifications of the
/// merged columns plus the three quadrics of the remaining 3x2 table.
inline std::vector<Binomial> merged_3x3_literal() {
    auto c = [](int i, int j) { return cell(3, i, j); };
    std::vector<Binomial> g;
    g.push_back(binom(9, {{c(3, 2), 1}, {c(3, 3), -1}}));
    g.push_back(binom(9, {{c(1, 3), 1}, {c(1, 2), -1}}));
    g.push_back(binom(9, {{c(2, 3), 1}, {c(2, 2), -1}}));
    g.push_back(binom(9, {{c(1, 2), 1}, {c(3, 1), 1}, {c(1, 1), -1}, {c(3, 3), -1}}));
    g.push_back(binom(9, {{c(2, 2), 1}, {c(3, 1), 1}, {c(2, 1), -1}, {c(3, 3), -1}}));
    g.push_back(binom(9, {{c(1, 1), 1}, {c(2, 2), 1}, {c(1, 2), -1}, {c(2, 1), -1}}));
    return g;
}

/// Exact rank by Gaussian elimination over the rationals; independent of the
/// integer elimination used by the library.
inline int rational_rank(const ModelMatrix& A) {
    std::vector<std::vector<Rat>> m(A.rows(), std::vector<Rat>(A.cols()));
    for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c) m[r][c] = Rat(A.at(r, c));
    int rank = 0;
    for (int c = 0; c < A.cols() && rank < A.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < A.rows(); ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < A.rows(); ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int cc = c; cc < A.cols(); ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

/// Plain full-grid kernel enumeration (no meet-in-the-middle); only for tiny k.
inline std::vector<IntVec> naive_kernel_enumeration(const ModelMatrix& A, int bound) {
    std::vector<IntVec> out;
    IntVec u(A.rows(), -bound);
    while (true) {
        bool zero = true, kernel = true;
        for (const Int& x : u)
            if (x != 0) zero = false;
        if (!zero) {
            for (int c = 0; c < A.cols() && kernel; ++c) {
                Int s = 0;
                for (int r = 0; r < A.rows(); ++r) s += u[r] * A.at(r, c);
                kernel = s == 0;
            }
            int lead = 0;
            while (u[lead] == 0) ++lead;
            if (kernel && u[lead] > 0) out.push_back(u);
        }
        std::size_t i = 0;
        while (i < u.size() && u[i] == bound) u[i++] = -bound;
        if (i == u.size()) break;
        u[i] += 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toric::testing
