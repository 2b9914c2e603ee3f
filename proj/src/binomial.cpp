#include "toric/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

Int total_degree(const IntVec& m) { return vec_sum(m); }

bool monomial_divides(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool monomials_coprime(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

IntVec monomial_lcm(const IntVec& a, const IntVec& b) {
    IntVec m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

Binomial Binomial::zero(int dim) {
    Binomial b;
    b.plus_.assign(dim, 0);
    b.minus_.assign(dim, 0);
    b.zero_ = true;
    return b;
}

Binomial Binomial::from_vector(const IntVec& u) {
    Binomial b;
    b.plus_.assign(u.size(), 0);
    b.minus_.assign(u.size(), 0);
    bool nonzero = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0) b.plus_[i] = u[i], nonzero = true;
        if (u[i] < 0) b.minus_[i] = -u[i], nonzero = true;
    }
    b.zero_ = !nonzero;
    return b;
}

Binomial Binomial::from_parts(IntVec plus, IntVec minus) {
    if (plus.size() != minus.size()) throw std::invalid_argument("mismatched exponent dimensions");
    for (const Int& e : plus)
        if (e < 0) throw std::invalid_argument("negative exponent");
    for (const Int& e : minus)
        if (e < 0) throw std::invalid_argument("negative exponent");
    Binomial b;
    b.zero_ = plus == minus;
    if (b.zero_) {
        b.plus_.assign(plus.size(), 0);
        b.minus_.assign(plus.size(), 0);
    } else {
        b.plus_ = std::move(plus);
        b.minus_ = std::move(minus);
    }
    return b;
}

Binomial Binomial::monomial(IntVec m) {
    for (const Int& e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    Binomial b;
    b.minus_.assign(m.size(), 0);
    b.plus_ = std::move(m);
    b.monomial_ = true;
    b.zero_ = false;
    return b;
}

IntVec Binomial::vector() const {
    IntVec u(plus_.size());
    for (std::size_t i = 0; i < plus_.size(); ++i) u[i] = plus_[i] - minus_[i];
    return u;
}

Int Binomial::degree() const {
    Int dp = total_degree(plus_);
    if (monomial_) return dp;
    return std::max(dp, total_degree(minus_));
}

bool Binomial::homogeneous() const {
    return monomial_ || total_degree(plus_) == total_degree(minus_);
}

Binomial Binomial::oriented(const TermOrder& ord) const {
    if (zero_ || monomial_) return *this;
    Binomial b = *this;
    if (ord.less(b.plus_, b.minus_)) std::swap(b.plus_, b.minus_);
    return b;
}

namespace {

std::string monomial_text(const IntVec& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.at(i);
        if (m[i] != 1) s += "^" + m[i].str();
    }
    return s.empty() ? "1" : s;
}

// Print-order comparison: plain lexicographic with p_1 largest, independent of
// any term order so rendered output is stable.
bool lex_greater(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

std::string Binomial::text(const std::vector<std::string>& vars) const {
    if (zero_) return "0";
    if (monomial_) return monomial_text(plus_, vars);
    const IntVec& first = lex_greater(plus_, minus_) ? plus_ : minus_;
    const IntVec& second = lex_greater(plus_, minus_) ? minus_ : plus_;
    return monomial_text(first, vars) + " - " + monomial_text(second, vars);
}

}  // namespace toric
