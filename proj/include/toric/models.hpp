#pragma once

#include "toric/ideal.hpp"
#include "toric/model_matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

/// The monomial parametrization p_i -> prod_j zeta_j^{A[i][j]} attached to a
/// model matrix. Membership of a binomial in its kernel is decided by exact
/// exponent bookkeeping, never numerically.
struct MonomialMap {
    ModelMatrix matrix;

    explicit MonomialMap(ModelMatrix m) : matrix(std::move(m)) {}
    std::vector<std::string> parameter_names() const;  // zeta_0..zeta_t
    IntVec image_exponents(const IntVec& monomial) const;  // A^T * monomial
    bool annihilates(const Binomial& f) const;
};

/// Outcome of merging two parameter columns: the ideal before and after, and
/// a minimal description of the gap split into degree-one and higher parts.
struct MergeReport {
    IdealPresentation base;    // ideal of the original matrix
    IdealPresentation merged;  // ideal of the merged matrix
    std::vector<Binomial> added_linear;
    std::vector<Binomial> added_higher;
    bool identical = false;
    bool interpretable = true;  // false when a row indicator met a column indicator
    std::optional<IdealPresentation> reduced_model;  // filled by independence_merge
};

/// Toric ideal of A: the kernel of its monomial parametrization.
IdealPresentation toric_ideal(const ModelMatrix& A, const TermOrder& ord);

/// The 2x2 minors p_{i,j}p_{h,k} - p_{i,k}p_{h,j}, i<h, j<k, as exponent
/// vectors over the IJ cell variables.
std::vector<Binomial> independence_minors(int I, int J);

struct RowDecomposition {
    IdealPresentation reduced_ideal;   // ideal of the deduped matrix, lifted to all k variables
    std::vector<Binomial> linear;      // representative - duplicate, per duplicate
};

/// Splits I(A) into the lifted ideal of the row-deduplicated matrix plus the
/// degree-one binomials identifying each duplicate row with its group
/// representative. The identity ideal_sum(lifted, linear) == toric_ideal(A)
/// is checked before returning.
RowDecomposition repeated_row_decomposition(const ModelMatrix& A, const TermOrder& ord);

/// Full before/after analysis of a column merge. Requires I(A) included in the
/// merged ideal (checked); added_linear is the set difference of the reduced
/// bases' degree-one parts, added_higher a greedy minimal completion.
MergeReport analyze_merge(const ModelMatrix& A, int a, int b, const TermOrder& ord);

/// All unordered row pairs (h,k) whose rows agree outside columns {a,b} and
/// have equal a+b column sums: exactly the pairs whose difference binomial
/// lies in the merged ideal. Closed form, no basis computation.
std::vector<std::pair<int, int>> linear_binomial_pairs(const ModelMatrix& A, int a, int b);

/// The four possible 2x2 subtables (up to permutations) at rows {h,k} and
/// columns {a,b} of a binary matrix whose rows agree elsewhere:
///   A: rows differ with equal sums  -> merge creates the binomial p_k - p_h
///   B: rows equal with a common one -> p_k - p_h already present
///   C: sums differ                  -> no linear binomial
///   D: all zero                     -> p_k - p_h already present
enum class MergeConfig { A, B, C, D, NotApplicable };
MergeConfig classify_binary_merge(const ModelMatrix& M, int h, int k, int a, int b);

enum class Axis { Rows, Columns };

/// Same-axis indicator merge of the I x J independence model (a, b 1-based
/// category indices on the chosen axis). The report's added_higher part is
/// empty and added_linear is one identification per opposite-axis category;
/// reduced_model carries the independence ideal of the smaller table.
MergeReport independence_merge(int I, int J, Axis axis, int a, int b, const TermOrder& ord);

/// Checks the two computable consequences of the merge decomposition:
/// containment of the base ideal in the merged one, and agreement of the
/// merged ideal with the kernel of the merged parametrization (symbolically
/// plus bounded-norm completeness).
bool verify_merge_theorem(const ModelMatrix& A, int a, int b, const TermOrder& ord,
                          int bound = 3, int max_k = 12);

}  // namespace toric
