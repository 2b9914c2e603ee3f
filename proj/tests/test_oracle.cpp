#include "toric/oracle.hpp"

#include "toric/models.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <random>

using namespace toric;
using namespace toric::testing;

TEST_CASE("enumerate_kernel_vectors") {
    SUBCASE("the quadric example has an empty kernel at bound 3") {
        CHECK(enumerate_kernel_vectors(quadric_example_matrix(), 3).empty());
    }

    SUBCASE("its merge has one primitive kernel vector up to sign and scaling") {
        ModelMatrix M = merge_columns(quadric_example_matrix(), 3, 4);
        auto vecs = enumerate_kernel_vectors(M, 2);
        IntVec gen{Int(1), Int(1), Int(-1), Int(-1)};
        REQUIRE(vecs.size() == 2);
        CHECK(vecs[0] == gen);
        for (const auto& v : vecs) {
            // every bounded kernel vector is an integer multiple of the generator
            Int scale = v[0];
            for (int i = 0; i < 4; ++i) CHECK(v[i] == scale * gen[i]);
        }
    }

    SUBCASE("monomial curve contains its defining relation") {
        ModelMatrix curve = mat({{1, 0}, {1, 1}, {1, 2}});
        auto vecs = enumerate_kernel_vectors(curve, 2);
        CHECK(std::find(vecs.begin(), vecs.end(), IntVec{Int(1), Int(-2), Int(1)}) != vecs.end());
    }

    SUBCASE("meet-in-the-middle agrees with the plain grid scan") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> kd(1, 6), nd(1, 4), ed(0, 2);
        for (int t = 0; t < 40; ++t) {
            int k = kd(rng), n = nd(rng);
            std::vector<std::vector<int>> rows(k, std::vector<int>(n));
            for (auto& r : rows)
                for (auto& x : r) x = ed(rng);
            ModelMatrix A = mat(rows);
            CHECK(enumerate_kernel_vectors(A, 2) == naive_kernel_enumeration(A, 2));
        }
    }

    SUBCASE("the guard refuses large enumerations unless overridden") {
        std::vector<std::vector<int>> rows(13, std::vector<int>(1, 1));
        ModelMatrix big = mat(rows);
        CHECK_THROWS_AS(enumerate_kernel_vectors(big, 1), GuardError);
        CHECK_NOTHROW(enumerate_kernel_vectors(big, 1, 13));
        CHECK_THROWS_AS(enumerate_kernel_vectors(big, 0, 13), std::invalid_argument);
    }
}

TEST_CASE("check_completeness") {
    TermOrder drl9 = TermOrder::degrevlex(9);
    ModelMatrix A = independence_3x3();

    SUBCASE("the minors are complete for the independence matrix") {
        CHECK(check_completeness(make_ideal(minors_3x3_literal(), drl9, 9), A, 2));
    }

    SUBCASE("the zero ideal is complete exactly when the kernel is trivial") {
        TermOrder drl4 = TermOrder::degrevlex(4);
        IdealPresentation zero{{}, {}, drl4, 4};
        CHECK(check_completeness(zero, quadric_example_matrix(), 3));
        CHECK_FALSE(check_completeness(zero, merge_columns(quadric_example_matrix(), 3, 4), 2));
    }

    SUBCASE("a truncated basis is flagged as incomplete") {
        auto gens = minors_3x3_literal();
        gens.resize(4);
        CHECK_FALSE(check_completeness(make_ideal(gens, drl9, 9), A, 2));
    }

    SUBCASE("an ideal outside the kernel is flagged") {
        IdealPresentation wrong = make_ideal({binom(9, {{0, 1}, {1, -1}})}, drl9, 9);
        CHECK_FALSE(check_completeness(wrong, A, 2));
    }
}

TEST_CASE("check_linear_criterion") {
    ModelMatrix A = independence_3x3();
    CHECK(check_linear_criterion(A, 5, 6));
    CHECK(check_linear_criterion(A, 3, 6));

    std::mt19937 rng(1009);
    std::uniform_int_distribution<int> ed(0, 1);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::vector<int>> rows(8, std::vector<int>(5));
        for (auto& r : rows)
            for (auto& x : r) x = ed(rng);
        ModelMatrix M = mat(rows);
        int a = std::uniform_int_distribution<int>(1, 4)(rng);
        int b = std::uniform_int_distribution<int>(1, 4)(rng);
        if (a == b) continue;
        CHECK(check_linear_criterion(M, a, b));
    }
}
