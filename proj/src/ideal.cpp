#include "toric/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

namespace toric {

namespace {

std::atomic<int> g_threads{1};

IntVec sub_add(const IntVec& m, const IntVec& sub, const IntVec& add) {
    IntVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - sub[i] + add[i];
    return r;
}

const Binomial* find_reducer(const IntVec& mon, const std::vector<Binomial>& G) {
    for (const auto& g : G)
        if (!g.is_zero() && monomial_divides(g.plus(), mon)) return &g;
    return nullptr;
}

// Division against an oriented basis. Each step replaces one monomial of f by
// a strictly smaller one, so the loop terminates by well-ordering.
Binomial reduce_oriented(Binomial f, const std::vector<Binomial>& G, const TermOrder& ord) {
    while (true) {
        if (f.is_zero()) return f;
        if (const Binomial* g = find_reducer(f.plus(), G)) {
            if (f.is_monomial()) {
                if (g->is_monomial()) return Binomial::zero(f.dim());
                f = Binomial::monomial(sub_add(f.plus(), g->plus(), g->minus()));
            } else if (g->is_monomial()) {
                f = Binomial::monomial(f.minus());
            } else {
                f = Binomial::from_parts(sub_add(f.plus(), g->plus(), g->minus()), f.minus())
                        .oriented(ord);
            }
            continue;
        }
        if (f.is_monomial()) return f;
        if (const Binomial* g = find_reducer(f.minus(), G)) {
            if (g->is_monomial()) {
                f = Binomial::monomial(f.plus());
            } else {
                f = Binomial::from_parts(f.plus(), sub_add(f.minus(), g->plus(), g->minus()))
                        .oriented(ord);
            }
            continue;
        }
        return f;
    }
}

Binomial s_poly(const Binomial& f, const Binomial& g, const TermOrder& ord) {
    IntVec L = monomial_lcm(f.plus(), g.plus());
    if (f.is_monomial() && g.is_monomial()) return Binomial::zero(f.dim());
    if (f.is_monomial()) return Binomial::monomial(sub_add(L, g.plus(), g.minus()));
    if (g.is_monomial()) return Binomial::monomial(sub_add(L, f.plus(), f.minus()));
    return Binomial::from_parts(sub_add(L, g.plus(), g.minus()), sub_add(L, f.plus(), f.minus()))
        .oriented(ord);
}

void check_dims(const std::vector<Binomial>& fs, const TermOrder& ord) {
    for (const auto& f : fs)
        if (f.dim() != ord.dim())
            throw std::invalid_argument("binomial dimension does not match term order");
}

std::vector<Binomial> orient_all(const std::vector<Binomial>& G, const TermOrder& ord) {
    std::vector<Binomial> out;
    out.reserve(G.size());
    for (const auto& g : G) {
        Binomial h = g.oriented(ord);
        if (!h.is_zero()) out.push_back(std::move(h));
    }
    return out;
}

}  // namespace

void set_reduction_threads(int n) { g_threads.store(std::max(1, n)); }
int reduction_threads() { return g_threads.load(); }

Binomial normal_form(const Binomial& f, const std::vector<Binomial>& G, const TermOrder& ord) {
    if (f.dim() != ord.dim())
        throw std::invalid_argument("binomial dimension does not match term order");
    check_dims(G, ord);
    return reduce_oriented(f.oriented(ord), orient_all(G, ord), ord);
}

std::vector<Binomial> buchberger(const std::vector<Binomial>& gens, const TermOrder& ord) {
    check_dims(gens, ord);
    std::vector<Binomial> G;
    for (const auto& g0 : gens) {
        Binomial g = g0.oriented(ord);
        if (g.is_zero()) continue;
        if (std::find(G.begin(), G.end(), g) == G.end()) G.push_back(std::move(g));
    }

    struct SPair {
        int i, j;
        IntVec lcm;
        Int deg;
    };
    std::vector<SPair> pending;
    auto enqueue = [&](int i, int j) {
        // product criterion: coprime leading monomials reduce to zero
        if (monomials_coprime(G[i].plus(), G[j].plus())) return;
        IntVec L = monomial_lcm(G[i].plus(), G[j].plus());
        Int d = total_degree(L);
        pending.push_back(SPair{i, j, std::move(L), std::move(d)});
    };
    for (int j = 1; j < static_cast<int>(G.size()); ++j)
        for (int i = 0; i < j; ++i) enqueue(i, j);

    auto pair_less = [&](const SPair& a, const SPair& b) {
        auto c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    while (!pending.empty()) {
        // batch: every pending pair whose lcm has the minimal total degree
        Int min_deg = pending[0].deg;
        for (const auto& p : pending) min_deg = std::min(min_deg, p.deg);
        std::vector<SPair> batch;
        std::vector<SPair> rest;
        rest.reserve(pending.size());
        for (auto& p : pending) {
            if (p.deg == min_deg) batch.push_back(std::move(p));
            else rest.push_back(std::move(p));
        }
        pending = std::move(rest);
        std::sort(batch.begin(), batch.end(), pair_less);

        // reduce the batch against a snapshot of G; parallel mode changes only
        // wall time, insertion below is sequential in batch order
        std::vector<Binomial> reduced(batch.size());
        const int threads = std::min<int>(g_threads.load(), static_cast<int>(batch.size()));
        auto work = [&](std::size_t from, std::size_t to) {
            for (std::size_t x = from; x < to; ++x)
                reduced[x] = reduce_oriented(s_poly(G[batch[x].i], G[batch[x].j], ord), G, ord);
        };
        if (threads > 1) {
            std::vector<std::future<void>> futs;
            const std::size_t chunk = (batch.size() + threads - 1) / threads;
            for (std::size_t from = 0; from < batch.size(); from += chunk)
                futs.push_back(std::async(std::launch::async, work, from,
                                          std::min(from + chunk, batch.size())));
            for (auto& f : futs) f.get();
        } else {
            work(0, batch.size());
        }

        for (std::size_t x = 0; x < batch.size(); ++x) {
            Binomial r = reduce_oriented(reduced[x], G, ord);
            if (r.is_zero()) continue;
            if (std::find(G.begin(), G.end(), r) != G.end()) continue;
            const int n = static_cast<int>(G.size());
            G.push_back(std::move(r));
            for (int i = 0; i < n; ++i) enqueue(i, n);
        }
    }

    // minimalize: ascending leading monomials, drop divisible leads
    std::sort(G.begin(), G.end(), [&](const Binomial& a, const Binomial& b) {
        auto c = ord.compare(a.plus(), b.plus());
        if (c != 0) return c < 0;
        return ord.less(a.minus(), b.minus());
    });
    std::vector<Binomial> minimal;
    for (const auto& g : G) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (monomial_divides(h.plus(), g.plus())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // auto-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Binomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Binomial r = reduce_oriented(minimal[i], others, ord);
            if (r == minimal[i]) continue;
            changed = true;
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<long>(i));
                --i;
            } else {
                minimal[i] = std::move(r);
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Binomial& a, const Binomial& b) {
        return ord.less(a.plus(), b.plus());
    });
    return minimal;
}

IdealPresentation make_ideal(const std::vector<Binomial>& gens, const TermOrder& ord,
                             int ambient_dim) {
    std::vector<Binomial> gb = buchberger(gens, ord);
    return IdealPresentation{orient_all(gens, ord), std::move(gb), ord, ambient_dim};
}

namespace {

Binomial strip_variable_power(const Binomial& g, int v) {
    if (g.is_zero()) return g;
    if (g.is_monomial()) {
        IntVec p = g.plus();
        p[v] = 0;
        return Binomial::monomial(std::move(p));
    }
    Int m = std::min(g.plus()[v], g.minus()[v]);
    if (m == 0) return g;
    IntVec p = g.plus(), q = g.minus();
    p[v] -= m;
    q[v] -= m;
    return Binomial::from_parts(std::move(p), std::move(q));
}

}  // namespace

IdealPresentation lattice_to_toric(const LatticeBasis& L, const TermOrder& ord, IntVec grading) {
    const int k = L.ambient_dim;
    if (ord.dim() != k) throw std::invalid_argument("order dimension does not match lattice");
    if (L.vectors.empty()) return IdealPresentation{{}, {}, ord, k};

    if (grading.empty()) {
        bool zero_sum = std::all_of(L.vectors.begin(), L.vectors.end(),
                                    [](const IntVec& v) { return vec_sum(v) == 0; });
        if (zero_sum) {
            grading.assign(k, 1);
        } else {
            // No positive grading at hand: append a balancing coordinate (the
            // extended lattice is coordinate-sum-zero), saturate there, then
            // evaluate the extra variable at 1 and rebuild under ord.
            LatticeBasis ext;
            ext.ambient_dim = k + 1;
            for (const IntVec& v : L.vectors) {
                IntVec w = v;
                w.push_back(-vec_sum(v));
                ext.vectors.push_back(std::move(w));
            }
            IdealPresentation J =
                lattice_to_toric(ext, TermOrder::degrevlex(k + 1), IntVec(k + 1, 1));
            std::vector<Binomial> gens;
            for (const Binomial& g : J.groebner) {
                IntVec p = g.plus(), q = g.minus();
                p.pop_back();
                q.pop_back();
                Binomial pr = g.is_monomial() ? Binomial::monomial(std::move(p))
                                              : Binomial::from_parts(std::move(p), std::move(q));
                if (!pr.is_zero()) gens.push_back(std::move(pr));
            }
            return make_ideal(std::move(gens), ord, k);
        }
    }

    if (static_cast<int>(grading.size()) != k)
        throw std::invalid_argument("grading dimension does not match lattice");
    for (const IntVec& v : L.vectors) {
        Int dot = 0;
        for (int i = 0; i < k; ++i) dot += grading[i] * v[i];
        if (dot != 0) throw std::invalid_argument("grading is not orthogonal to the lattice");
    }

    std::vector<Binomial> J;
    J.reserve(L.vectors.size());
    for (const IntVec& v : L.vectors) J.push_back(Binomial::from_vector(v));

    // One pass suffices: the ideal is homogeneous for the positive grading, so
    // under graded revlex with v last a leading monomial is divisible by v
    // only when the whole element is.
    for (int v = 0; v < k; ++v) {
        TermOrder sat = TermOrder::degrevlex_weighted_var_last(grading, v);
        std::vector<Binomial> G = buchberger(J, sat);
        J.clear();
        for (const Binomial& g : G) J.push_back(strip_variable_power(g, v));
    }

    std::vector<Binomial> gb = buchberger(J, ord);
    std::vector<Binomial> gens = gb;
    return IdealPresentation{std::move(gens), std::move(gb), ord, k};
}

bool ideal_membership(const Binomial& f, const IdealPresentation& I) {
    if (f.dim() != I.ambient_dim)
        throw std::invalid_argument("binomial dimension does not match ideal");
    if (f.is_zero()) return true;
    return reduce_oriented(f.oriented(I.order), I.groebner, I.order).is_zero();
}

bool ideals_equal(const IdealPresentation& I1, const IdealPresentation& I2) {
    if (I1.ambient_dim != I2.ambient_dim)
        throw std::invalid_argument("ideal comparison needs equal ambient dimension");
    if (I1.order == I2.order) return I1.groebner == I2.groebner;
    return I1.groebner == buchberger(I2.groebner, I1.order);
}

IdealPresentation ideal_sum(const IdealPresentation& I1, const std::vector<Binomial>& gens) {
    for (const auto& g : gens)
        if (g.dim() != I1.ambient_dim)
            throw std::invalid_argument("generator dimension does not match ideal");
    std::vector<Binomial> basis_input = I1.groebner;
    basis_input.insert(basis_input.end(), gens.begin(), gens.end());
    std::vector<Binomial> gb = buchberger(basis_input, I1.order);

    std::vector<Binomial> all = I1.generators;
    for (const auto& g : orient_all(gens, I1.order))
        if (std::find(all.begin(), all.end(), g) == all.end()) all.push_back(g);
    return IdealPresentation{std::move(all), std::move(gb), I1.order, I1.ambient_dim};
}

std::vector<Binomial> linear_part(const IdealPresentation& I) {
    std::vector<Binomial> out;
    for (const auto& g : I.groebner)
        if (g.degree() == 1) out.push_back(g);
    return out;
}

}  // namespace toric
