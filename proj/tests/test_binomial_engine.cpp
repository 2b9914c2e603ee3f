#include "toric/ideal.hpp"
#include "toric/models.hpp"
#include "toric/oracle.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <algorithm>
#include <random>

using namespace toric;
using namespace toric::testing;

TEST_CASE("binomial representation") {
    Binomial b = binom(4, {{0, 1}, {1, 1}, {2, -1}, {3, -1}});
    CHECK(b.plus() == IntVec{Int(1), Int(1), Int(0), Int(0)});
    CHECK(b.minus() == IntVec{Int(0), Int(0), Int(1), Int(1)});
    CHECK(b.vector() == IntVec{Int(1), Int(1), Int(-1), Int(-1)});
    CHECK(b.degree() == 2);
    CHECK(b.homogeneous());
    CHECK_FALSE(b.is_zero());
    CHECK(Binomial::from_vector(IntVec(4, 0)).is_zero());

    // built from a vector, the supports are disjoint by construction
    for (int i = 0; i < 4; ++i) CHECK((b.plus()[i] == 0 || b.minus()[i] == 0));

    // a pair with a common factor is preserved verbatim
    Binomial c = Binomial::from_parts({Int(2), Int(0)}, {Int(1), Int(1)});
    CHECK(c.plus()[0] == 2);
    CHECK(c.minus()[0] == 1);
}

TEST_CASE("term orders") {
    TermOrder drl = TermOrder::degrevlex(3);
    // degree decides first
    CHECK(drl.greater({Int(2), Int(0), Int(0)}, {Int(1), Int(0), Int(0)}));
    // among equal degrees the smaller last exponent wins
    CHECK(drl.greater({Int(1), Int(1), Int(0)}, {Int(0), Int(0), Int(2)}));
    CHECK(drl.greater({Int(0), Int(2), Int(0)}, {Int(0), Int(0), Int(2)}));

    TermOrder lx = TermOrder::lex(3);
    CHECK(lx.greater({Int(1), Int(0), Int(0)}, {Int(0), Int(5), Int(5)}));

    TermOrder last0 = TermOrder::degrevlex_var_last(3, 0);
    // variable 0 is cheapest: among equal degrees, less of it is bigger
    CHECK(last0.greater({Int(0), Int(1), Int(0)}, {Int(1), Int(0), Int(0)}));

    TermOrder wd = TermOrder::degrevlex_weighted({Int(1), Int(2), Int(3)});
    CHECK(wd.greater({Int(0), Int(0), Int(1)}, {Int(2), Int(0), Int(0)}));
    CHECK(wd.compare({Int(3), Int(0), Int(0)}, {Int(1), Int(1), Int(0)}) != 0);
    CHECK_THROWS_AS(TermOrder::degrevlex_weighted({Int(0), Int(1)}), std::invalid_argument);

    CHECK(TermOrder::parse("degrevlex", 5) == TermOrder::degrevlex(5));
    CHECK(TermOrder::parse("lex", 5) == TermOrder::lex(5));
    CHECK_THROWS_AS(TermOrder::parse("grlex", 5), InputError);
}

TEST_CASE("term orders are multiplicative total orders with 1 smallest") {
    std::mt19937 rng(4096);
    std::uniform_int_distribution<int> ed(0, 3);
    std::vector<TermOrder> orders = {TermOrder::degrevlex(4), TermOrder::lex(4),
                                     TermOrder::degrevlex_var_last(4, 2),
                                     TermOrder::degrevlex_weighted({Int(1), Int(3), Int(2), Int(1)})};
    auto rand_mon = [&] {
        IntVec m(4);
        for (auto& x : m) x = ed(rng);
        return m;
    };
    for (const TermOrder& ord : orders) {
        for (int t = 0; t < 200; ++t) {
            IntVec a = rand_mon(), b = rand_mon(), m = rand_mon();
            auto c = ord.compare(a, b);
            CHECK((c == 0) == (a == b));
            // antisymmetry and multiplicativity
            CHECK(ord.compare(b, a) == (c < 0   ? std::strong_ordering::greater
                                        : c > 0 ? std::strong_ordering::less
                                                : std::strong_ordering::equal));
            IntVec am = a, bm = b;
            for (int i = 0; i < 4; ++i) {
                am[i] += m[i];
                bm[i] += m[i];
            }
            CHECK(ord.compare(am, bm) == c);
            if (a != IntVec(4, 0)) CHECK(ord.greater(a, IntVec(4, 0)));
        }
    }
}

TEST_CASE("normal_form") {
    TermOrder drl4 = TermOrder::degrevlex(4);
    Binomial f = binom(4, {{0, 1}, {3, 1}, {1, -1}, {2, -1}});  // p1p4 - p2p3

    SUBCASE("self reduction gives zero") { CHECK(normal_form(f, {f}, drl4).is_zero()); }

    SUBCASE("a listed quadric reduces to zero modulo the nine minors") {
        TermOrder drl9 = TermOrder::degrevlex(9);
        Binomial minor = binom(9, {{cell(3, 1, 2), 1}, {cell(3, 2, 1), 1},
                                   {cell(3, 1, 1), -1}, {cell(3, 2, 2), -1}});
        CHECK(normal_form(minor, minors_3x3_literal(), drl9).is_zero());
    }

    SUBCASE("division under lex keeps common factors") {
        TermOrder lx = TermOrder::lex(3);
        Binomial g = Binomial::from_parts({Int(2), Int(0), Int(0)}, {Int(0), Int(1), Int(1)});
        Binomial d = binom(3, {{0, 1}, {1, -1}});  // p1 - p2
        Binomial r = normal_form(g, {d}, lx);
        // oracle: dividing by p1 - p2 acts as the substitution p1 := p2
        auto substitute = [](const Binomial& b) {
            auto fold = [](IntVec m) {
                m[1] += m[0];
                m[0] = 0;
                return m;
            };
            return Binomial::from_parts(fold(b.plus()), fold(b.minus()));
        };
        CHECK(r == substitute(g));
        CHECK(r == Binomial::from_parts({Int(0), Int(2), Int(0)}, {Int(0), Int(1), Int(1)}));
    }

    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(normal_form(f, {binom(3, {{0, 1}, {1, -1}})}, drl4),
                        std::invalid_argument);
    }

    SUBCASE("idempotence on random reductions") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> ed(-2, 2);
        TermOrder drl5 = TermOrder::degrevlex(5);
        std::vector<Binomial> G;
        for (int i = 0; i < 4; ++i) {
            IntVec u(5);
            for (auto& x : u) x = ed(rng);
            Binomial g = Binomial::from_vector(u);
            if (!g.is_zero()) G.push_back(g);
        }
        for (int t = 0; t < 50; ++t) {
            IntVec u(5);
            for (auto& x : u) x = ed(rng);
            Binomial r = normal_form(Binomial::from_vector(u), G, drl5);
            CHECK(normal_form(r, G, drl5) == r);
        }
    }
}

TEST_CASE("buchberger") {
    SUBCASE("a single generator is its own reduced basis") {
        TermOrder drl = TermOrder::degrevlex(3);
        Binomial g = binom(3, {{0, 1}, {2, 1}, {1, -2}});  // p1p3 - p2^2
        auto gb = buchberger({g}, drl);
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == g.oriented(drl));
    }

    SUBCASE("the nine minors generate their own reduced basis") {
        TermOrder drl9 = TermOrder::degrevlex(9);
        auto gb = buchberger(minors_3x3_literal(), drl9);
        for (const auto& m : minors_3x3_literal()) CHECK(normal_form(m, gb, drl9).is_zero());
        for (const auto& g : gb)
            CHECK(normal_form(g, minors_3x3_literal(), drl9).is_zero());
    }

    SUBCASE("linear chain under lex") {
        TermOrder lx = TermOrder::lex(3);
        auto gb = buchberger({binom(3, {{0, 1}, {1, -1}}), binom(3, {{1, 1}, {2, -1}})}, lx);
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == binom(3, {{1, 1}, {2, -1}}));
        CHECK(gb[1] == binom(3, {{0, 1}, {2, -1}}));
        // oracle: exhaustive degree-one membership, every difference is in
        IdealPresentation I{{}, gb, lx, 3};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(ideal_membership(binom(3, {{i, 1}, {j, -1}}), I));
    }

    SUBCASE("result does not depend on generator order") {
        TermOrder drl9 = TermOrder::degrevlex(9);
        auto gens = minors_3x3_literal();
        auto gb = buchberger(gens, drl9);
        std::mt19937 rng(5);
        for (int t = 0; t < 5; ++t) {
            std::shuffle(gens.begin(), gens.end(), rng);
            CHECK(buchberger(gens, drl9) == gb);
        }
    }

    SUBCASE("batch reduction workers do not change the basis") {
        TermOrder drl9 = TermOrder::degrevlex(9);
        auto gb1 = buchberger(minors_3x3_literal(), drl9);
        set_reduction_threads(4);
        auto gb4 = buchberger(minors_3x3_literal(), drl9);
        set_reduction_threads(1);
        CHECK(gb1 == gb4);
    }
}

TEST_CASE("lattice_to_toric") {
    TermOrder drl4 = TermOrder::degrevlex(4);

    SUBCASE("rank-1 lattice gives the quadric") {
        LatticeBasis L{{{Int(1), Int(1), Int(-1), Int(-1)}}, 4};
        IdealPresentation I = lattice_to_toric(L, drl4);
        IdealPresentation expected =
            make_ideal({binom(4, {{0, 1}, {1, 1}, {2, -1}, {3, -1}})}, drl4, 4);
        CHECK(ideals_equal(I, expected));
    }

    SUBCASE("empty lattice gives the zero ideal") {
        IdealPresentation I = lattice_to_toric(LatticeBasis{{}, 4}, drl4);
        CHECK(I.is_zero_ideal());
    }

    SUBCASE("twisted cubic relation") {
        TermOrder drl3 = TermOrder::degrevlex(3);
        LatticeBasis L{{{Int(1), Int(-2), Int(1)}}, 3};
        IdealPresentation I = lattice_to_toric(L, drl3);
        IdealPresentation expected = make_ideal({binom(3, {{0, 1}, {2, 1}, {1, -2}})}, drl3, 3);
        CHECK(ideals_equal(I, expected));
        // bounded completeness: every small lattice vector reduces to zero
        ModelMatrix curve = mat({{1, 0}, {1, 1}, {1, 2}});
        for (const auto& u : naive_kernel_enumeration(curve, 3))
            CHECK(ideal_membership(Binomial::from_vector(u), I));
    }

    SUBCASE("saturation strips common factors introduced mid-run") {
        // basis {(1,1,-1,0), (0,2,0,-1)}: the generated ideal needs saturation
        TermOrder drl = TermOrder::degrevlex(4);
        LatticeBasis L{{{Int(1), Int(1), Int(-1), Int(0)}, {Int(0), Int(2), Int(0), Int(-1)}}, 4};
        IdealPresentation I = lattice_to_toric(L, drl);
        ModelMatrix probe = mat({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 2, 0}});
        // kernel of probe is exactly the span of L
        CHECK(check_completeness(I, probe, 3));
    }
}

TEST_CASE("ideal_membership") {
    TermOrder drl9 = TermOrder::degrevlex(9);
    ModelMatrix A = independence_3x3();
    IdealPresentation IA = toric_ideal(A, drl9);
    IdealPresentation IM = toric_ideal(merge_columns(A, 5, 6), drl9);
    Binomial ident = binom(9, {{cell(3, 3, 2), 1}, {cell(3, 3, 3), -1}});

    CHECK(ideal_membership(ident, IM));
    CHECK_FALSE(ideal_membership(ident, IA));
    CHECK(ideal_membership(Binomial::from_vector(IntVec(9, 0)), IA));
    // the base kernel has no weight-(1,-1) vector at all
    for (const auto& u : naive_kernel_enumeration(A, 1)) {
        int support = 0;
        for (const auto& x : u) support += x != 0;
        CHECK(support != 2);
    }
    CHECK_THROWS_AS(ideal_membership(binom(4, {{0, 1}, {1, -1}}), IA), std::invalid_argument);
}

TEST_CASE("ideals_equal") {
    TermOrder drl9 = TermOrder::degrevlex(9);
    ModelMatrix A = independence_3x3();
    IdealPresentation IA = toric_ideal(A, drl9);

    CHECK(ideals_equal(IA, toric_ideal(mixed_merge_matrix(), drl9)));
    CHECK(ideals_equal(IA, IA));
    CHECK_FALSE(ideals_equal(IA, toric_ideal(merge_columns(A, 5, 6), drl9)));

    // recomputation bridges different orders
    IdealPresentation lexIA = toric_ideal(A, TermOrder::lex(9));
    CHECK(ideals_equal(IA, lexIA));
    CHECK(ideals_equal(lexIA, IA));
}

TEST_CASE("ideal_sum") {
    TermOrder drl9 = TermOrder::degrevlex(9);
    ModelMatrix A = independence_3x3();
    IdealPresentation IA = toric_ideal(A, drl9);
    IdealPresentation IM = toric_ideal(merge_columns(A, 5, 6), drl9);

    SUBCASE("base plus the three identifications is the merged ideal") {
        std::vector<Binomial> lin = {binom(9, {{1, 1}, {2, -1}}), binom(9, {{4, 1}, {5, -1}}),
                                     binom(9, {{7, 1}, {8, -1}})};
        IdealPresentation S = ideal_sum(IA, lin);
        CHECK(ideals_equal(S, IM));
        // monotone: everything that went in reduces to zero
        for (const auto& g : IA.groebner) CHECK(ideal_membership(g, S));
        for (const auto& g : lin) CHECK(ideal_membership(g, S));
    }

    SUBCASE("adding nothing changes nothing") {
        CHECK(ideals_equal(ideal_sum(IA, {}), IA));
    }

    SUBCASE("zero ideal plus a quadric") {
        TermOrder drl4 = TermOrder::degrevlex(4);
        IdealPresentation zero = toric_ideal(quadric_example_matrix(), drl4);
        REQUIRE(zero.is_zero_ideal());
        Binomial q = binom(4, {{0, 1}, {1, 1}, {2, -1}, {3, -1}});
        IdealPresentation S = ideal_sum(zero, {q});
        CHECK(ideals_equal(S, make_ideal({q}, drl4, 4)));
    }
}

TEST_CASE("linear_part") {
    TermOrder drl9 = TermOrder::degrevlex(9);
    ModelMatrix A = independence_3x3();

    auto lin = linear_part(toric_ideal(merge_columns(A, 5, 6), drl9));
    std::vector<Binomial> expected = {binom(9, {{1, 1}, {2, -1}}), binom(9, {{4, 1}, {5, -1}}),
                                      binom(9, {{7, 1}, {8, -1}})};
    for (auto& e : expected) e = e.oriented(drl9);
    std::sort(lin.begin(), lin.end(),
              [](const Binomial& a, const Binomial& b) { return a.plus() < b.plus(); });
    std::sort(expected.begin(), expected.end(),
              [](const Binomial& a, const Binomial& b) { return a.plus() < b.plus(); });
    CHECK(lin == expected);

    CHECK(linear_part(toric_ideal(A, drl9)).empty());
    CHECK(linear_part(toric_ideal(quadric_example_matrix(), TermOrder::degrevlex(4))).empty());
}

TEST_CASE("groebner bases of homogeneous inputs stay homogeneous") {
    TermOrder drl9 = TermOrder::degrevlex(9);
    ModelMatrix A = independence_3x3();
    REQUIRE(A.has_constant_column());
    for (const auto& g : toric_ideal(A, drl9).groebner) CHECK(g.homogeneous());
    for (const auto& g : toric_ideal(merge_columns(A, 2, 3), drl9).groebner)
        CHECK(g.homogeneous());
}

TEST_CASE("every basis element vanishes under the monomial substitution") {
    TermOrder drl9 = TermOrder::degrevlex(9);
    ModelMatrix A = independence_3x3();
    MonomialMap phi{A};
    for (const auto& g : toric_ideal(A, drl9).groebner) CHECK(phi.annihilates(g));
    CHECK(phi.parameter_names().front() == "zeta_0");
    CHECK(phi.parameter_names().back() == "zeta_6");
}
