#include "hochcat/structure_algebra.hpp"

#include <set>

namespace hochcat {

Mat StructureAlgebra::left_mult(Field f, int i) const {
    Mat m(f, dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, j) = cc(i, j, k);
    return m;
}

Mat StructureAlgebra::right_mult(Field f, int i) const {
    Mat m(f, dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, j) = cc(j, i, k);
    return m;
}

Mat StructureAlgebra::left_mult_by(Field f, const Vec& coords) const {
    Mat m(f, dim, dim);
    for (int i = 0; i < dim; ++i)
        if (!coords[i].is_zero()) m = m.add(left_mult(f, i).scaled(coords[i]));
    return m;
}

Vec StructureAlgebra::multiply(Field f, const Vec& x, const Vec& y) const {
    Vec out(dim, f.zero());
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar s = f.mul(x[i], y[j]);
            for (int k = 0; k < dim; ++k)
                if (!cc(i, j, k).is_zero()) out[k] = f.add(out[k], f.mul(s, cc(i, j, k)));
        }
    }
    return out;
}

CheckReport check_algebra(Field f, const StructureAlgebra& r) {
    const int d = r.dim;
    if (int(r.c.size()) != d * d * d || int(r.unit_coords.size()) != d)
        return {false, "structure constant array has wrong size"};
    // associativity: sum_m c_ij^m c_mk^l = sum_m c_jk^m c_im^l
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Scalar lhs = f.zero(), rhs = f.zero();
                    for (int m = 0; m < d; ++m) {
                        lhs = f.add(lhs, f.mul(r.cc(i, j, m), r.cc(m, k, l)));
                        rhs = f.add(rhs, f.mul(r.cc(j, k, m), r.cc(i, m, l)));
                    }
                    if (!(lhs == rhs))
                        return {false, "associativity fails at (i,j,k,l)=(" + std::to_string(i) + "," +
                                           std::to_string(j) + "," + std::to_string(k) + "," +
                                           std::to_string(l) + ")"};
                }
    for (int j = 0; j < d; ++j) {
        Vec ej(d, f.zero());
        ej[j] = f.one();
        if (!(r.multiply(f, r.unit_coords, ej) == ej))
            return {false, "unit fails on the left at basis index " + std::to_string(j)};
        if (!(r.multiply(f, ej, r.unit_coords) == ej))
            return {false, "unit fails on the right at basis index " + std::to_string(j)};
    }
    return {true, ""};
}

namespace {

// differential matrix C^n -> C^{n+1} of the standard Hochschild cochain complex;
// a cochain is flattened as f[(tuple index)*d + target index] with tuple index
// in base-d digits, leftmost argument most significant.
Mat hochschild_differential(Field f, const StructureAlgebra& r, int n) {
    const int d = r.dim;
    int64_t src_tuples = 1, tgt_tuples = 1;
    for (int i = 0; i < n; ++i) src_tuples *= d;
    tgt_tuples = src_tuples * d;
    Mat m(f, int(tgt_tuples * d), int(src_tuples * d));
    std::vector<int> args(n + 1);
    for (int64_t t = 0; t < tgt_tuples; ++t) {
        int64_t rem = t;
        for (int i = n; i >= 0; --i) {
            args[i] = int(rem % d);
            rem /= d;
        }
        // a_1 f(a_2..a_{n+1})
        {
            int64_t sub = 0;
            for (int i = 1; i <= n; ++i) sub = sub * d + args[i];
            for (int v = 0; v < d; ++v)
                for (int k = 0; k < d; ++k)
                    if (!r.cc(args[0], v, k).is_zero())
                        m.at(int(t * d + k), int(sub * d + v)) =
                            f.add(m.at(int(t * d + k), int(sub * d + v)), r.cc(args[0], v, k));
        }
        // (-1)^i f(.., a_i a_{i+1}, ..)
        for (int i = 0; i < n; ++i) {
            bool negate = (i % 2 == 0);
            for (int u = 0; u < d; ++u) {
                const Scalar& cu = r.cc(args[i], args[i + 1], u);
                if (cu.is_zero()) continue;
                int64_t sub = 0;
                for (int j = 0; j <= n; ++j) {
                    if (j == i) {
                        sub = sub * d + u;
                        ++j;  // skip args[i+1]
                        continue;
                    }
                    sub = sub * d + args[j];
                }
                Scalar s = negate ? f.neg(cu) : cu;
                for (int k = 0; k < d; ++k)
                    m.at(int(t * d + k), int(sub * d + k)) = f.add(m.at(int(t * d + k), int(sub * d + k)), s);
            }
        }
        // (-1)^{n+1} f(a_1..a_n) a_{n+1}
        {
            int64_t sub = 0;
            for (int i = 0; i < n; ++i) sub = sub * d + args[i];
            bool negate = (n % 2 == 0);
            for (int v = 0; v < d; ++v)
                for (int k = 0; k < d; ++k) {
                    const Scalar& cv = r.cc(v, args[n], k);
                    if (cv.is_zero()) continue;
                    Scalar s = negate ? f.neg(cv) : cv;
                    m.at(int(t * d + k), int(sub * d + v)) = f.add(m.at(int(t * d + k), int(sub * d + v)), s);
                }
        }
    }
    return m;
}

}  // namespace

int classical_hh_dim(Field f, const StructureAlgebra& r, int n) {
    if (n < 0 || n > 3) throw ConfigError("classical_hh_dim supports degrees 0..3");
    Mat dn = hochschild_differential(f, r, n);
    int ker = dn.cols - rank(dn);
    if (n == 0) return ker;
    Mat dprev = hochschild_differential(f, r, n - 1);
    return ker - rank(dprev);
}

int GroupTable::inverse(int g) const {
    for (int h = 0; h < n; ++h)
        if (mul[g][h] == identity) return h;
    throw InternalError("group element has no inverse");
}

GroupTable GroupTable::cyclic(int n) {
    if (n < 1) throw ConfigError("cyclic group order must be >= 1");
    GroupTable g;
    g.n = n;
    g.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    g.identity = 0;
    return g;
}

GroupTable GroupTable::from_table(const std::vector<std::vector<int>>& mul) {
    GroupTable g;
    g.n = int(mul.size());
    if (g.n == 0) throw ConfigError("empty group table");
    for (const auto& row : mul) {
        if (int(row.size()) != g.n) throw ConfigError("group table is not square");
        std::set<int> seen(row.begin(), row.end());
        if (int(seen.size()) != g.n || *seen.begin() < 0 || *seen.rbegin() >= g.n)
            throw ConfigError("group table is not a Latin square");
    }
    for (int j = 0; j < g.n; ++j) {
        std::set<int> seen;
        for (int i = 0; i < g.n; ++i) seen.insert(mul[i][j]);
        if (int(seen.size()) != g.n) throw ConfigError("group table is not a Latin square");
    }
    g.mul = mul;
    int id = -1;
    for (int e = 0; e < g.n; ++e) {
        bool ok = true;
        for (int x = 0; x < g.n && ok; ++x) ok = (mul[e][x] == x && mul[x][e] == x);
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw ConfigError("group table has no identity element");
    g.identity = id;
    // associativity
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw ConfigError("group table is not associative");
    return g;
}

StructureAlgebra dual_numbers(Field f) {
    StructureAlgebra r;
    r.dim = 2;
    r.basis_labels = {"1", "x"};
    r.c.assign(8, f.zero());
    r.cc(0, 0, 0) = f.one();
    r.cc(0, 1, 1) = f.one();
    r.cc(1, 0, 1) = f.one();
    // x*x = 0
    r.unit_coords = {f.one(), f.zero()};
    return r;
}

StructureAlgebra matrix_algebra(Field f, int n) {
    if (n < 1) throw ConfigError("matrix_algebra size must be >= 1");
    StructureAlgebra r;
    r.dim = n * n;
    r.c.assign(size_t(r.dim) * r.dim * r.dim, f.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.basis_labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) r.cc(i * n + j, k * n + l, i * n + l) = f.one();
        }
    r.unit_coords.assign(r.dim, f.zero());
    for (int i = 0; i < n; ++i) r.unit_coords[i * n + i] = f.one();
    return r;
}

StructureAlgebra scalar_algebra(Field f) {
    StructureAlgebra r;
    r.dim = 1;
    r.basis_labels = {"1"};
    r.c = {f.one()};
    r.unit_coords = {f.one()};
    return r;
}

StructureAlgebra group_algebra(Field f, const GroupTable& g) {
    StructureAlgebra r;
    r.dim = g.n;
    r.c.assign(size_t(g.n) * g.n * g.n, f.zero());
    for (int i = 0; i < g.n; ++i) {
        r.basis_labels.push_back("g" + std::to_string(i));
        for (int j = 0; j < g.n; ++j) r.cc(i, j, g.mul[i][j]) = f.one();
    }
    r.unit_coords.assign(g.n, f.zero());
    r.unit_coords[g.identity] = f.one();
    return r;
}

StructureAlgebra cyclic_group(Field f, int n) { return group_algebra(f, GroupTable::cyclic(n)); }

std::vector<Vec> center_basis(Field f, const StructureAlgebra& r) {
    const int d = r.dim;
    Mat sys(f, d * d, d);
    for (int i = 0; i < d; ++i) {
        Mat diff = r.left_mult(f, i).sub(r.right_mult(f, i));
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j) sys.at(i * d + k, j) = diff.at(k, j);
    }
    return kernel_basis(sys);
}

bool is_separable_algebra(Field f, const StructureAlgebra& r) {
    // look for e in r⊗r with (b⊗1)e = e(1⊗b) for all b and mu(e) = 1
    const int d = r.dim;
    std::vector<Vec> rows;
    for (int b = 0; b < d; ++b) {
        Mat lhs = kron(r.left_mult(f, b), Mat::identity(f, d));
        Mat rhs = kron(Mat::identity(f, d), r.right_mult(f, b));
        Mat diff = lhs.sub(rhs);
        for (int i = 0; i < diff.rows; ++i) rows.push_back(diff.row_vec(i));
    }
    Mat mu(f, d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (!r.cc(i, j, k).is_zero()) mu.at(k, i * d + j) = r.cc(i, j, k);
    Mat sys(f, int(rows.size()) + d, d * d);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < d * d; ++j) sys.at(int(i), j) = rows[i][j];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d * d; ++j) sys.at(int(rows.size()) + i, j) = mu.at(i, j);
    Vec target(int(rows.size()) + d, f.zero());
    for (int i = 0; i < d; ++i) target[rows.size() + i] = r.unit_coords[i];
    return solve(sys, target).has_value();
}

}  // namespace hochcat
