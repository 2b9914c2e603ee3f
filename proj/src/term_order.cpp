#include "toric/term_order.hpp"

#include <stdexcept>

namespace toric {

TermOrder TermOrder::lex(int dim) { return TermOrder(OrderKind::Lex, dim, {}, -1); }

TermOrder TermOrder::degrevlex(int dim) { return TermOrder(OrderKind::DegRevLex, dim, {}, -1); }

TermOrder TermOrder::degrevlex_weighted(IntVec weights) {
    const int dim = static_cast<int>(weights.size());
    for (const Int& w : weights)
        if (w <= 0) throw std::invalid_argument("order weights must be positive");
    return TermOrder(OrderKind::DegRevLex, dim, std::move(weights), -1);
}

TermOrder TermOrder::degrevlex_var_last(int dim, int var) {
    if (var < 0 || var >= dim) throw std::invalid_argument("variable out of range");
    return TermOrder(OrderKind::DegRevLex, dim, {}, var);
}

TermOrder TermOrder::degrevlex_weighted_var_last(IntVec weights, int var) {
    TermOrder o = degrevlex_weighted(std::move(weights));
    if (var < 0 || var >= o.dim_) throw std::invalid_argument("variable out of range");
    o.last_var_ = var;
    return o;
}

Int TermOrder::weighted_degree(const IntVec& a) const {
    Int d = 0;
    if (weights_.empty()) {
        for (const Int& e : a) d += e;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) d += weights_[i] * a[i];
    }
    return d;
}

std::strong_ordering TermOrder::compare(const IntVec& a, const IntVec& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw std::invalid_argument("exponent dimension does not match term order");
    if (kind_ == OrderKind::Lex) {
        for (int i = 0; i < dim_; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }
    // Graded reverse lexicographic: weighted degree first, then scan the
    // variable sequence (with last_var moved to the end) from the back; at the
    // first difference the smaller exponent wins.
    Int da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
    auto revlex_at = [&](int i) -> std::strong_ordering {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
        return std::strong_ordering::equal;
    };
    if (last_var_ >= 0) {
        if (auto c = revlex_at(last_var_); c != 0) return c;
    }
    for (int i = dim_ - 1; i >= 0; --i) {
        if (i == last_var_) continue;
        if (auto c = revlex_at(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

TermOrder TermOrder::restricted(const std::vector<int>& kept) const {
    if (last_var_ >= 0)
        throw std::logic_error("cannot restrict an order with a distinguished variable");
    if (kind_ == OrderKind::Lex) return lex(static_cast<int>(kept.size()));
    if (weights_.empty()) return degrevlex(static_cast<int>(kept.size()));
    IntVec w;
    w.reserve(kept.size());
    for (int i : kept) w.push_back(weights_.at(i));
    return degrevlex_weighted(std::move(w));
}

std::string TermOrder::name() const {
    if (kind_ == OrderKind::Lex) return "lex";
    std::string s = "degrevlex";
    if (!weights_.empty()) {
        s += ":w=";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i) s += ",";
            s += weights_[i].str();
        }
    }
    if (last_var_ >= 0) s += ":last=" + std::to_string(last_var_);
    return s;
}

TermOrder TermOrder::parse(const std::string& name, int dim) {
    if (name == "lex") return lex(dim);
    if (name == "degrevlex") return degrevlex(dim);
    if (name.rfind("degrevlex:last=", 0) == 0)
        return degrevlex_var_last(dim, std::stoi(name.substr(15)));
    throw InputError("unknown term order: " + name);
}

}  // namespace toric
