#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hochcat/structure_algebra.hpp"

using namespace hochcat;

TEST_CASE("constructors pass check_algebra") {
    Field q(0);
    CHECK(check_algebra(q, dual_numbers(q)).ok);
    CHECK(check_algebra(q, matrix_algebra(q, 2)).ok);
    CHECK(check_algebra(q, cyclic_group(q, 3)).ok);
    CHECK(dual_numbers(q).dim == 2);
    CHECK(matrix_algebra(q, 2).dim == 4);
    CHECK(cyclic_group(q, 3).dim == 3);

    // x*x = 0 in the dual numbers
    auto d = dual_numbers(q);
    Vec x{q.zero(), q.one()};
    for (const auto& s : d.multiply(q, x, x)) CHECK(s.is_zero());
}

TEST_CASE("check_algebra flags perturbed products") {
    Field q(0);
    // note x*x = 1 alone would give the C2 group algebra, which is still a
    // legal algebra; kill 1*x instead to break unitality
    auto d = dual_numbers(q);
    d.cc(0, 1, 1) = q.zero();
    auto rep = check_algebra(q, d);
    CHECK(!rep.ok);
    CHECK(!rep.detail.empty());

    auto m2 = matrix_algebra(q, 2);
    m2.cc(1, 2, 0) = q.zero();  // e12 * e21 = e22 instead of e11
    m2.cc(1, 2, 3) = q.one();
    auto rep2 = check_algebra(q, m2);
    CHECK(!rep2.ok);
    CHECK(rep2.detail.find("associativity") != std::string::npos);
}

TEST_CASE("group table validation") {
    CHECK_THROWS_AS(GroupTable::from_table({{0, 1}, {1, 1}}), ConfigError);
    CHECK_THROWS_AS(GroupTable::from_table({{1, 0}, {1, 0}}), ConfigError);
    auto c2 = GroupTable::from_table({{0, 1}, {1, 0}});
    CHECK(c2.identity == 0);
    CHECK(c2.inverse(1) == 1);
}

TEST_CASE("classical Hochschild dimensions") {
    Field q(0);
    auto m2 = matrix_algebra(q, 2);
    CHECK(classical_hh_dim(q, m2, 0) == 1);
    CHECK(classical_hh_dim(q, m2, 1) == 0);

    auto d = dual_numbers(q);
    CHECK(classical_hh_dim(q, d, 0) == 2);
    CHECK(classical_hh_dim(q, d, 1) == 1);
    CHECK(classical_hh_dim(q, d, 2) == 1);

    CHECK_THROWS_AS(classical_hh_dim(q, d, 4), ConfigError);
}

TEST_CASE("degree zero equals the centre dimension") {
    for (Field f : {Field(0), Field(3)}) {
        for (const auto& r : {dual_numbers(f), matrix_algebra(f, 2), cyclic_group(f, 3)}) {
            CHECK(classical_hh_dim(f, r, 0) == int(center_basis(f, r).size()));
        }
    }
}

TEST_CASE("separable algebras have vanishing positive HH") {
    Field q(0);
    Field f3(3);
    CHECK(is_separable_algebra(q, matrix_algebra(q, 2)));
    CHECK(is_separable_algebra(q, cyclic_group(q, 3)));
    CHECK(!is_separable_algebra(q, dual_numbers(q)));
    CHECK(!is_separable_algebra(f3, cyclic_group(f3, 3)));

    for (int n = 1; n <= 3; ++n) {
        CHECK(classical_hh_dim(q, matrix_algebra(q, 2), n) == 0);
        CHECK(classical_hh_dim(q, cyclic_group(q, 3), n) == 0);
    }
}

TEST_CASE("Kunneth right-hand factors used by the acceptance suite") {
    Field q(0);
    CHECK(classical_hh_dim(q, scalar_algebra(q), 0) == 1);
    CHECK(classical_hh_dim(q, scalar_algebra(q), 1) == 0);
    CHECK(classical_hh_dim(q, scalar_algebra(q), 2) == 0);
}
