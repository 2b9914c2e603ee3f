#pragma once

#include "toric/bigint.hpp"
#include "toric/term_order.hpp"

#include <string>
#include <vector>

namespace toric {

/// A difference of two monomials p^plus - p^minus with unit coefficients,
/// stored as a pair of non-negative exponent vectors. Vectors built from an
/// integer vector u have disjoint supports (plus = u+, minus = u-); reduction
/// intermediates may carry a common monomial factor, which is preserved.
/// A reduction can also leave a single monomial p^plus; that state is tracked
/// by an explicit flag. The zero polynomial is its own state.
class Binomial {
  public:
    Binomial() = default;

    static Binomial zero(int dim);
    static Binomial from_vector(const IntVec& u);
    static Binomial from_parts(IntVec plus, IntVec minus);
    static Binomial monomial(IntVec m);

    bool is_zero() const { return zero_; }
    bool is_monomial() const { return monomial_; }
    int dim() const { return static_cast<int>(plus_.size()); }

    const IntVec& plus() const { return plus_; }
    const IntVec& minus() const { return minus_; }
    IntVec vector() const;  // plus - minus

    Int degree() const;      // max of the two total degrees
    bool homogeneous() const;

    /// Copy with the order-leading monomial on the plus side.
    Binomial oriented(const TermOrder& ord) const;

    /// Renders e.g. "p_{1,3}*p_{2,1} - p_{1,1}*p_{2,3}". The lexicographically
    /// larger monomial is printed first regardless of any term order.
    std::string text(const std::vector<std::string>& vars) const;

    bool operator==(const Binomial&) const = default;

  private:
    IntVec plus_, minus_;
    bool monomial_ = false;
    bool zero_ = true;
};

// Exponent-vector helpers shared by the division and completion routines.
Int total_degree(const IntVec& m);
bool monomial_divides(const IntVec& a, const IntVec& b);  // a | b
bool monomials_coprime(const IntVec& a, const IntVec& b);
IntVec monomial_lcm(const IntVec& a, const IntVec& b);

}  // namespace toric
