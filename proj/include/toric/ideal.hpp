#pragma once

#include "toric/binomial.hpp"
#include "toric/lattice.hpp"
#include "toric/term_order.hpp"

#include <vector>

namespace toric {

/// A binomial ideal given by generators together with its reduced Groebner
/// basis under a recorded term order. The reduced basis is unique for a fixed
/// order: elements are oriented (leading monomial on the plus side), pairwise
/// auto-reduced and sorted by increasing leading monomial.
struct IdealPresentation {
    std::vector<Binomial> generators;
    std::vector<Binomial> groebner;
    TermOrder order;
    int ambient_dim = 0;

    bool is_zero_ideal() const { return groebner.empty(); }
};

/// Remainder of f under multivariate division by G. A binomial divided by
/// binomials stays a binomial (or a monomial, or vanishes). The remainder is
/// sign-normalized: a surviving lone monomial is reported with coefficient +1.
Binomial normal_form(const Binomial& f, const std::vector<Binomial>& G, const TermOrder& ord);

/// Reduced Groebner basis of <gens> under ord. Deterministic: the result does
/// not depend on generator order or on the reduction thread count.
std::vector<Binomial> buchberger(const std::vector<Binomial>& gens, const TermOrder& ord);

IdealPresentation make_ideal(const std::vector<Binomial>& gens, const TermOrder& ord,
                             int ambient_dim);

/// Full lattice ideal I_L = (<p^{u+} - p^{u-} : u basis> : (p_1...p_k)^inf),
/// by per-variable saturation: for each variable v in ascending order, a
/// Groebner basis is recomputed under graded revlex with v last and every
/// element is divided by the highest power of v dividing it. The grading must
/// be strictly positive and orthogonal to the lattice; when omitted it is the
/// all-ones vector if the basis is coordinate-sum-zero, otherwise a balancing
/// coordinate is appended, saturated and projected away.
IdealPresentation lattice_to_toric(const LatticeBasis& L, const TermOrder& ord,
                                   IntVec grading = {});

bool ideal_membership(const Binomial& f, const IdealPresentation& I);
bool ideals_equal(const IdealPresentation& I1, const IdealPresentation& I2);
IdealPresentation ideal_sum(const IdealPresentation& I1, const std::vector<Binomial>& gens);

/// Degree-one elements of the reduced basis.
std::vector<Binomial> linear_part(const IdealPresentation& I);

/// Worker count for batch S-pair reduction. The reduced basis is identical for
/// every setting; only wall time changes. Default 1.
void set_reduction_threads(int n);
int reduction_threads();

}  // namespace toric
