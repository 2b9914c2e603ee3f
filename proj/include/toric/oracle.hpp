#pragma once

#include "toric/ideal.hpp"
#include "toric/model_matrix.hpp"

#include <vector>

namespace toric {

/// Brute-force verifiers, independent of the completion engine: kernel vectors
/// are found by direct enumeration of the defining condition u^T A = 0, never
/// through a basis computation.

/// All u != 0 with |u|_inf <= bound and u^T A = 0, up to sign (first nonzero
/// entry positive), sorted. Refuses k > max_k rows.
std::vector<IntVec> enumerate_kernel_vectors(const ModelMatrix& A, int bound, int max_k = 12);
std::vector<Binomial> enumerate_kernel_binomials(const ModelMatrix& A, int bound, int max_k = 12);

/// True iff every enumerated kernel binomial reduces to zero modulo I and
/// every element of I's reduced basis lies in the kernel of A.
bool check_completeness(const IdealPresentation& I, const ModelMatrix& A, int bound,
                        int max_k = 12);

/// Cross-checks the closed-form merge criterion against the merged
/// parametrization: a pair gains a degree-one binomial exactly when its merged
/// rows coincide.
bool check_linear_criterion(const ModelMatrix& A, int a, int b);

}  // namespace toric
