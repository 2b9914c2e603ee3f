#include "toric/oracle.hpp"

#include "toric/models.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

// Odometer over [-bound, bound]^dims; returns false after the last tuple.
bool advance(IntVec& u, int bound) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < bound) {
            u[i] += 1;
            return true;
        }
        u[i] = -bound;
    }
    return false;
}

IntVec partial_image(const ModelMatrix& A, const IntVec& u, int row_offset) {
    IntVec s(A.cols(), 0);
    for (std::size_t r = 0; r < u.size(); ++r) {
        if (u[r] == 0) continue;
        for (int c = 0; c < A.cols(); ++c) s[c] += u[r] * A.at(row_offset + static_cast<int>(r), c);
    }
    return s;
}

}  // namespace

std::vector<IntVec> enumerate_kernel_vectors(const ModelMatrix& A, int bound, int max_k) {
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    const int k = A.rows();
    if (k > max_k)
        throw GuardError("enumeration refused for " + std::to_string(k) + " rows (guard " +
                         std::to_string(max_k) + ")");

    // Meet in the middle: bucket the first half by its image, then scan the
    // second half for cancelling images.
    const int k1 = k / 2;
    const int k2 = k - k1;
    std::map<IntVec, std::vector<IntVec>> buckets;
    {
        IntVec u1(k1, -bound);
        bool more = true;
        while (more) {
            buckets[partial_image(A, u1, 0)].push_back(u1);
            more = !u1.empty() && advance(u1, bound);
        }
    }

    std::vector<IntVec> out;
    IntVec u2(k2, -bound);
    bool more = true;
    while (more) {
        IntVec t = partial_image(A, u2, k1);
        for (Int& x : t) x = -x;
        if (auto it = buckets.find(t); it != buckets.end()) {
            for (const IntVec& u1 : it->second) {
                IntVec u = u1;
                u.insert(u.end(), u2.begin(), u2.end());
                int first_nonzero = -1;
                for (int i = 0; i < k; ++i)
                    if (u[i] != 0) {
                        first_nonzero = i;
                        break;
                    }
                if (first_nonzero < 0) continue;       // zero vector
                if (u[first_nonzero] < 0) continue;    // keep one sign per pair
                out.push_back(std::move(u));
            }
        }
        more = advance(u2, bound);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Binomial> enumerate_kernel_binomials(const ModelMatrix& A, int bound, int max_k) {
    std::vector<Binomial> out;
    for (const IntVec& u : enumerate_kernel_vectors(A, bound, max_k))
        out.push_back(Binomial::from_vector(u));
    return out;
}

bool check_completeness(const IdealPresentation& I, const ModelMatrix& A, int bound, int max_k) {
    if (I.ambient_dim != A.rows())
        throw std::invalid_argument("ideal dimension does not match matrix rows");
    MonomialMap phi{A};
    for (const Binomial& g : I.groebner)
        if (!phi.annihilates(g)) return false;
    for (const Binomial& f : enumerate_kernel_binomials(A, bound, max_k))
        if (!ideal_membership(f, I)) return false;
    return true;
}

bool check_linear_criterion(const ModelMatrix& A, int a, int b) {
    ModelMatrix tilde = merge_columns(A, a, b);
    std::vector<std::pair<int, int>> pairs = linear_binomial_pairs(A, a, b);
    for (int h = 0; h < A.rows(); ++h)
        for (int k = h + 1; k < A.rows(); ++k) {
            const bool by_map = tilde.row(h) == tilde.row(k);
            const bool by_criterion =
                std::find(pairs.begin(), pairs.end(), std::make_pair(h, k)) != pairs.end();
            if (by_map != by_criterion) return false;
        }
    return true;
}

}  // namespace toric
