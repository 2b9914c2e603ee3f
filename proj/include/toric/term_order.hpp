#pragma once

#include "toric/bigint.hpp"

#include <compare>
#include <string>
#include <vector>

namespace toric {

enum class OrderKind { Lex, DegRevLex };

/// A monomial term order on k variables. DegRevLex supports an optional
/// positive weight vector (degree = w·a) and an optional variable moved to the
/// revlex-last position; both are needed by the per-variable saturation loop.
class TermOrder {
  public:
    TermOrder() = default;  // degrevlex on zero variables; placeholder state

    static TermOrder lex(int dim);
    static TermOrder degrevlex(int dim);
    static TermOrder degrevlex_weighted(IntVec weights);
    static TermOrder degrevlex_var_last(int dim, int var);
    static TermOrder degrevlex_weighted_var_last(IntVec weights, int var);

    int dim() const { return dim_; }
    OrderKind kind() const { return kind_; }
    int last_var() const { return last_var_; }

    Int weighted_degree(const IntVec& a) const;
    std::strong_ordering compare(const IntVec& a, const IntVec& b) const;
    bool greater(const IntVec& a, const IntVec& b) const { return compare(a, b) > 0; }
    bool less(const IntVec& a, const IntVec& b) const { return compare(a, b) < 0; }

    /// Same order on the sub-ring of the kept variables (identity orders only).
    TermOrder restricted(const std::vector<int>& kept) const;

    std::string name() const;
    static TermOrder parse(const std::string& name, int dim);

    bool operator==(const TermOrder&) const = default;

  private:
    TermOrder(OrderKind kind, int dim, IntVec weights, int last_var)
        : kind_(kind), dim_(dim), weights_(std::move(weights)), last_var_(last_var) {}

    OrderKind kind_ = OrderKind::DegRevLex;
    int dim_ = 0;
    IntVec weights_;    // empty = all ones
    int last_var_ = -1; // -1 = natural revlex position
};

}  // namespace toric
