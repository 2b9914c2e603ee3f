#pragma once

#include "toric/bigint.hpp"
#include "toric/model_matrix.hpp"

#include <vector>

namespace toric {

/// Basis of the integer kernel lattice {u : u^T A = 0}. The basis is stored in
/// Hermite normal form, so equal lattices have identical bases.
struct LatticeBasis {
    std::vector<IntVec> vectors;
    int ambient_dim = 0;

    int size() const { return static_cast<int>(vectors.size()); }
    bool operator==(const LatticeBasis&) const = default;
};

/// Row-style Hermite normal form of the span of `rows`: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows are
/// dropped. The result is the unique HNF basis of the row lattice.
std::vector<IntVec> hermite_form(std::vector<IntVec> rows);

/// Exact rank over the rationals, computed by integer elimination.
int exact_rank(const std::vector<IntVec>& rows);
int exact_rank(const ModelMatrix& A);

/// Saturated basis of {u in Z^k : u^T A = 0} by unimodular row reduction.
LatticeBasis integer_kernel(const ModelMatrix& A);

/// k - rank(A).
int degrees_of_freedom(const ModelMatrix& A);

/// Exact integer membership of v in the lattice spanned by L.
bool lattice_contains(const LatticeBasis& L, const IntVec& v);

/// True iff the kernel lattices of A and B coincide. Requires equal row counts.
bool kernels_equal(const ModelMatrix& A, const ModelMatrix& B);

}  // namespace toric
