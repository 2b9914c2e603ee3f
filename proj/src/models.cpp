#include "toric/models.hpp"

#include "toric/lattice.hpp"
#include "toric/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

std::vector<std::string> MonomialMap::parameter_names() const {
    std::vector<std::string> out;
    for (int c = 0; c < matrix.cols(); ++c) out.push_back("zeta_" + std::to_string(c));
    return out;
}

IntVec MonomialMap::image_exponents(const IntVec& monomial) const {
    if (static_cast<int>(monomial.size()) != matrix.rows())
        throw std::invalid_argument("monomial dimension does not match matrix");
    IntVec out(matrix.cols(), 0);
    for (int r = 0; r < matrix.rows(); ++r) {
        if (monomial[r] == 0) continue;
        for (int c = 0; c < matrix.cols(); ++c) out[c] += monomial[r] * matrix.at(r, c);
    }
    return out;
}

bool MonomialMap::annihilates(const Binomial& f) const {
    if (f.is_zero()) return true;
    if (f.is_monomial()) return false;  // a monomial maps to a monomial, never to zero
    return image_exponents(f.plus()) == image_exponents(f.minus());
}

namespace {

Binomial lift_binomial(const Binomial& b, int dim, const std::vector<int>& position) {
    IntVec p(dim, 0), q(dim, 0);
    for (std::size_t r = 0; r < position.size(); ++r) {
        p[position[r]] = b.plus()[r];
        q[position[r]] = b.minus()[r];
    }
    if (b.is_monomial()) return Binomial::monomial(std::move(p));
    return Binomial::from_parts(std::move(p), std::move(q));
}

// Embedding along a sorted variable subset preserves degrevlex and lex
// comparisons, so a lifted reduced basis stays reduced and sorted.
IdealPresentation lift_ideal(const IdealPresentation& I, int dim, const std::vector<int>& position,
                             const TermOrder& ord) {
    IdealPresentation out;
    out.order = ord;
    out.ambient_dim = dim;
    for (const auto& g : I.generators) out.generators.push_back(lift_binomial(g, dim, position));
    for (const auto& g : I.groebner) out.groebner.push_back(lift_binomial(g, dim, position));
    return out;
}

void check_merge_indices(const ModelMatrix& A, int a, int b) {
    if (a == b) throw std::invalid_argument("cannot merge a column with itself");
    if (a < 0 || b < 0 || a >= A.cols() || b >= A.cols())
        throw std::invalid_argument("column index out of range");
    if (a == 0 || b == 0) throw std::invalid_argument("column 0 is never merged");
}

bool rows_agree_outside(const ModelMatrix& A, int h, int k, int a, int b) {
    for (int c = 0; c < A.cols(); ++c) {
        if (c == a || c == b) continue;
        if (A.at(h, c) != A.at(k, c)) return false;
    }
    return true;
}

}  // namespace

IdealPresentation toric_ideal(const ModelMatrix& A, const TermOrder& ord) {
    if (ord.dim() != A.rows())
        throw std::invalid_argument("order dimension does not match matrix rows");
    IntVec sums = A.row_sums();
    std::vector<int> zero_rows, live_rows;
    for (int r = 0; r < A.rows(); ++r) (sums[r] == 0 ? zero_rows : live_rows).push_back(r);

    if (zero_rows.empty())
        return lattice_to_toric(integer_kernel(A), ord, sums);

    // An all-zero row parametrizes its cell by the constant 1, contributing
    // the generator p_i - 1 on top of the ideal of the remaining rows.
    std::vector<Binomial> gens;
    for (int i : zero_rows)
        gens.push_back(Binomial::from_vector(unit_vec(A.rows(), i)));
    if (!live_rows.empty()) {
        IdealPresentation inner = toric_ideal(A.select_rows(live_rows), ord.restricted(live_rows));
        for (const auto& g : inner.groebner)
            gens.push_back(lift_binomial(g, A.rows(), live_rows));
    }
    return make_ideal(std::move(gens), ord, A.rows());
}

std::vector<Binomial> independence_minors(int I, int J) {
    if (I < 1 || J < 1) throw std::invalid_argument("table dimensions must be at least 1");
    auto idx = [J](int i, int j) { return (i - 1) * J + (j - 1); };
    std::vector<Binomial> out;
    for (int i = 1; i <= I; ++i)
        for (int h = i + 1; h <= I; ++h)
            for (int j = 1; j <= J; ++j)
                for (int k = j + 1; k <= J; ++k) {
                    IntVec u(I * J, 0);
                    u[idx(i, j)] += 1;
                    u[idx(h, k)] += 1;
                    u[idx(i, k)] -= 1;
                    u[idx(h, j)] -= 1;
                    out.push_back(Binomial::from_vector(u));
                }
    return out;
}

RowDecomposition repeated_row_decomposition(const ModelMatrix& A, const TermOrder& ord) {
    RowGroups dd = dedupe_rows(A);
    const int k = A.rows();

    IdealPresentation inner = toric_ideal(dd.reduced, ord.restricted(dd.kept));
    IdealPresentation lifted = lift_ideal(inner, k, dd.kept, ord);

    std::vector<Binomial> linear;
    for (const auto& group : dd.groups) {
        for (std::size_t m = 1; m < group.size(); ++m) {
            IntVec u(k, 0);
            u[group[0]] = 1;
            u[group[m]] = -1;
            linear.push_back(Binomial::from_vector(u));
        }
    }

    if (!ideals_equal(ideal_sum(lifted, linear), toric_ideal(A, ord)))
        throw std::logic_error("row decomposition identity failed");
    return RowDecomposition{std::move(lifted), std::move(linear)};
}

MergeReport analyze_merge(const ModelMatrix& A, int a, int b, const TermOrder& ord) {
    ModelMatrix tilde = merge_columns(A, a, b);
    MergeReport rep;
    rep.base = toric_ideal(A, ord);
    rep.merged = toric_ideal(tilde, ord);

    for (const auto& g : rep.base.groebner)
        if (!ideal_membership(g, rep.merged))
            throw std::logic_error("merged ideal does not contain the base ideal");

    std::vector<Binomial> lin_base = linear_part(rep.base);
    for (const auto& g : linear_part(rep.merged))
        if (std::find(lin_base.begin(), lin_base.end(), g) == lin_base.end())
            rep.added_linear.push_back(g);

    IdealPresentation running =
        rep.added_linear.empty() ? rep.base : ideal_sum(rep.base, rep.added_linear);

    std::vector<Binomial> rest;
    for (const auto& g : rep.merged.groebner)
        if (std::find(rep.added_linear.begin(), rep.added_linear.end(), g) ==
            rep.added_linear.end())
            rest.push_back(g);
    std::stable_sort(rest.begin(), rest.end(), [&](const Binomial& x, const Binomial& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return ord.less(x.plus(), y.plus());
    });
    for (const auto& g : rest) {
        if (!ideal_membership(g, running)) {
            rep.added_higher.push_back(g);
            running = ideal_sum(running, {g});
        }
    }

    rep.identical = rep.added_linear.empty() && rep.added_higher.empty();

    auto axis_tag = [](const std::string& label) -> char {
        return label.empty() ? '?' : label[0];
    };
    const char ta = axis_tag(A.col_labels()[a]), tb = axis_tag(A.col_labels()[b]);
    rep.interpretable = !((ta == 'r' && tb == 'c') || (ta == 'c' && tb == 'r'));
    return rep;
}

std::vector<std::pair<int, int>> linear_binomial_pairs(const ModelMatrix& A, int a, int b) {
    check_merge_indices(A, a, b);
    std::vector<std::pair<int, int>> out;
    for (int h = 0; h < A.rows(); ++h)
        for (int k = h + 1; k < A.rows(); ++k) {
            if (!rows_agree_outside(A, h, k, a, b)) continue;
            if (A.at(h, a) + A.at(h, b) == A.at(k, a) + A.at(k, b)) out.emplace_back(h, k);
        }
    return out;
}

MergeConfig classify_binary_merge(const ModelMatrix& M, int h, int k, int a, int b) {
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (M.at(r, c) != 0 && M.at(r, c) != 1)
                throw std::invalid_argument("matrix is not binary");
    check_merge_indices(M, a, b);
    if (h == k || h < 0 || k < 0 || h >= M.rows() || k >= M.rows())
        throw std::invalid_argument("row index out of range");

    if (!rows_agree_outside(M, h, k, a, b)) return MergeConfig::NotApplicable;
    const bool equal_rows = M.at(h, a) == M.at(k, a) && M.at(h, b) == M.at(k, b);
    if (equal_rows) {
        const bool all_zero =
            M.at(h, a) == 0 && M.at(h, b) == 0 && M.at(k, a) == 0 && M.at(k, b) == 0;
        return all_zero ? MergeConfig::D : MergeConfig::B;
    }
    if (M.at(h, a) + M.at(h, b) == M.at(k, a) + M.at(k, b)) return MergeConfig::A;
    return MergeConfig::C;
}

MergeReport independence_merge(int I, int J, Axis axis, int a, int b, const TermOrder& ord) {
    if (a == b) throw std::invalid_argument("categories must differ");
    const int limit = axis == Axis::Rows ? I : J;
    if (a < 1 || b < 1 || a > limit || b > limit)
        throw std::invalid_argument("category index out of range");
    if (a > b) std::swap(a, b);

    ModelMatrix A = build_independence_matrix(I, J);
    const int ca = axis == Axis::Rows ? a : I + a;
    const int cb = axis == Axis::Rows ? b : I + b;
    MergeReport rep = analyze_merge(A, ca, cb, ord);
    if (!rep.added_higher.empty())
        throw std::logic_error("same-axis merge produced a non-linear gap");

    auto idx = [J](int i, int j) { return (i - 1) * J + (j - 1); };
    std::vector<Binomial> expected;
    if (axis == Axis::Columns) {
        for (int i = 1; i <= I; ++i) {
            IntVec u(I * J, 0);
            u[idx(i, a)] = 1;
            u[idx(i, b)] = -1;
            expected.push_back(Binomial::from_vector(u).oriented(ord));
        }
    } else {
        for (int j = 1; j <= J; ++j) {
            IntVec u(I * J, 0);
            u[idx(a, j)] = 1;
            u[idx(b, j)] = -1;
            expected.push_back(Binomial::from_vector(u).oriented(ord));
        }
    }
    auto key = [](const Binomial& x) { return std::make_pair(x.plus(), x.minus()); };
    std::vector<Binomial> got = rep.added_linear;
    std::sort(got.begin(), got.end(),
              [&](const Binomial& x, const Binomial& y) { return key(x) < key(y); });
    std::sort(expected.begin(), expected.end(),
              [&](const Binomial& x, const Binomial& y) { return key(x) < key(y); });
    if (got != expected)
        throw std::logic_error("identification binomials do not match the merged categories");

    RowGroups dd = dedupe_rows(merge_columns(A, ca, cb));
    rep.reduced_model = toric_ideal(dd.reduced, ord.restricted(dd.kept));
    return rep;
}

bool verify_merge_theorem(const ModelMatrix& A, int a, int b, const TermOrder& ord, int bound,
                          int max_k) {
    ModelMatrix tilde = merge_columns(A, a, b);
    IdealPresentation base = toric_ideal(A, ord);
    IdealPresentation merged = toric_ideal(tilde, ord);
    for (const auto& g : base.groebner)
        if (!ideal_membership(g, merged)) return false;
    MonomialMap psi(tilde);
    for (const auto& g : merged.groebner)
        if (!psi.annihilates(g)) return false;
    return check_completeness(merged, tilde, bound, max_k);
}

}  // namespace toric
