#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hochcat/matrix.hpp"

using namespace hochcat;

namespace {

Mat random_mat(Field f, int r, int c, std::mt19937_64& rng) {
    Mat m(f, r, c);
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto& s : m.a) s = f.from_int(d(rng));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
    Field q(0);
    CHECK(q.add(q.from_ratio(1, 2), q.from_ratio(1, 3)) == q.from_ratio(5, 6));
    CHECK(q.mul(q.from_ratio(2, 3), q.from_ratio(3, 4)) == q.from_ratio(1, 2));
    CHECK(q.to_string(q.from_ratio(-4, 6)) == "-2/3");
    CHECK(q.parse("7/3") == q.from_ratio(7, 3));

    Field f5(5);
    CHECK(f5.from_int(-1) == f5.from_int(4));
    CHECK(f5.inv(f5.from_int(2)) == f5.from_int(3));
    CHECK(f5.to_string(f5.from_int(9)) == "4");

    CHECK_THROWS_AS(Field(6), ConfigError);
}

TEST_CASE("rank examples") {
    Field q(0), f2(2);
    CHECK(rank(Mat::identity(q, 2)) == 2);
    CHECK(rank(Mat(q, 3, 4)) == 0);
    Mat m(f2, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = f2.one();
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel_basis examples") {
    Field q(0), f2(2);
    CHECK(kernel_basis(Mat::identity(q, 3)).empty());
    CHECK(kernel_basis(Mat(q, 2, 3)).size() == 3);
    Mat m(f2, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = f2.one();
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec{f2.one(), f2.one()});
}

TEST_CASE("solve examples") {
    Field q(0);
    Vec b{q.from_int(3), q.from_int(-1)};
    CHECK(solve(Mat::identity(q, 2), b) == b);
    CHECK(!solve(Mat(q, 2, 2), b).has_value());
    Mat two(q, 1, 1);
    two.at(0, 0) = q.from_int(2);
    CHECK(solve(two, Vec{q.one()}) == Vec{q.from_ratio(1, 2)});
}

TEST_CASE("quotient examples") {
    Field q(0);
    auto tri = quotient(q, 3, {});
    CHECK(tri.dim == 3);
    CHECK(tri.project == Mat::identity(q, 3));

    auto full = quotient(q, 2, {Vec{q.one(), q.zero()}, Vec{q.zero(), q.one()}});
    CHECK(full.dim == 0);

    auto diag = quotient(q, 2, {Vec{q.one(), q.one()}});
    CHECK(diag.dim == 1);
    Vec p10 = diag.project.apply(Vec{q.one(), q.zero()});
    CHECK(!p10[0].is_zero());
    Vec p11 = diag.project.apply(Vec{q.one(), q.one()});
    CHECK(p11[0].is_zero());
}

TEST_CASE("rank-nullity and solve consistency on random matrices") {
    std::mt19937_64 rng(5);
    for (Field f : {Field(0), Field(2), Field(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            int r = 1 + int(rng() % 6), c = 1 + int(rng() % 6);
            Mat m = random_mat(f, r, c, rng);
            CHECK(rank(m) + int(kernel_basis(m).size()) == c);
            for (const auto& v : kernel_basis(m)) CHECK(Mat(f, r, 1).col_vec(0) == m.apply(v));

            // consistent rhs by construction
            Vec x(c);
            std::uniform_int_distribution<int> d(-2, 2);
            for (auto& s : x) s = f.from_int(d(rng));
            Vec b = m.apply(x);
            auto sol = solve(m, b);
            REQUIRE(sol.has_value());
            CHECK(m.apply(*sol) == b);
        }
    }
}

TEST_CASE("quotient projection properties on random subspaces") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Field f = trial % 2 ? Field(3) : Field(0);
        int n = 2 + int(rng() % 5);
        Mat gen = random_mat(f, int(rng() % 4), n, rng);
        std::vector<Vec> sub;
        for (int i = 0; i < gen.rows; ++i) sub.push_back(gen.row_vec(i));
        auto qt = quotient(f, n, sub);
        for (const auto& v : sub) {
            Vec img = qt.project.apply(v);
            for (const auto& s : img) CHECK(s.is_zero());
        }
        CHECK(rank(qt.project) == qt.dim);
        CHECK(qt.project.mul(qt.section) == Mat::identity(f, qt.dim));
    }
}

TEST_CASE("solve_columns and inverse") {
    std::mt19937_64 rng(7);
    Field q(0);
    for (int trial = 0; trial < 10; ++trial) {
        Mat m = random_mat(q, 4, 4, rng);
        if (rank(m) < 4) continue;
        Mat inv = inverse(m);
        CHECK(m.mul(inv) == Mat::identity(q, 4));
        CHECK(inv.mul(m) == Mat::identity(q, 4));
    }
}

TEST_CASE("RowSpan coordinates") {
    Field q(0);
    RowSpan sp(q, 3, true);
    Vec v1{q.from_int(1), q.from_int(2), q.from_int(0)};
    Vec v2{q.from_int(0), q.from_int(1), q.from_int(1)};
    CHECK(sp.add(v1));
    CHECK(sp.add(v2));
    Vec w{q.from_int(2), q.from_int(5), q.from_int(1)};  // 2*v1 + v2
    auto c = sp.coords(w);
    REQUIRE(c.has_value());
    CHECK((*c) == Vec{q.from_int(2), q.from_int(1)});
    CHECK(!sp.coords(Vec{q.one(), q.zero(), q.zero()}).has_value());
}

TEST_CASE("apply_kron agrees with materialized kron") {
    std::mt19937_64 rng(13);
    Field f(7);
    Mat a = random_mat(f, 3, 2, rng), b = random_mat(f, 2, 4, rng), m = random_mat(f, 8, 3, rng);
    CHECK(apply_kron(a, b, m) == kron(a, b).mul(m));
}
