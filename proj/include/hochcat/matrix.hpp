#pragma once

#include <optional>
#include <vector>

#include "hochcat/scalar.hpp"

namespace hochcat {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over a fixed field. Multiplication and elimination
// skip zero multipliers, so structurally sparse inputs stay cheap.
struct Mat {
    int rows = 0;
    int cols = 0;
    Field field{0};
    std::vector<Scalar> a;

    Mat() = default;
    Mat(Field f, int r, int c) : rows(r), cols(c), field(f), a(size_t(r) * c) {}

    static Mat identity(Field f, int n);

    Scalar& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Mat mul(const Mat& o) const;
    Mat add(const Mat& o) const;
    Mat sub(const Mat& o) const;
    Mat neg() const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;
    Vec apply(const Vec& v) const;

    Vec row_vec(int i) const;
    Vec col_vec(int j) const;
    void set_col(int j, const Vec& v);

    // flatten row-major
    Vec flat() const { return a; }
    static Mat from_flat(Field f, int r, int c, Vec v);
};

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat block_diag(Field f, const std::vector<Mat>& blocks);

// Kronecker product; refuses to materialize anything huge.
Mat kron(const Mat& a, const Mat& b);
// (a ⊗ b) * m without materializing a ⊗ b.
Mat apply_kron(const Mat& a, const Mat& b, const Mat& m);

// Incremental reduced row echelon span with first-nonzero pivoting.
// Optionally tracks how each echelon row decomposes over the inserted
// generators so arbitrary vectors can be expressed in generator coordinates.
class RowSpan {
public:
    RowSpan(Field f, int ambient, bool track = false);

    // Returns true if the vector enlarged the span.
    bool add(const Vec& v);
    int rank() const { return int(rows_.size()); }
    int ambient() const { return ambient_; }
    int generators() const { return ngen_; }

    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    // Coordinates of v over the inserted generators (empty if v not in span).
    std::optional<Vec> coords(const Vec& v) const;

    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    Field f_;
    int ambient_;
    bool track_;
    int ngen_ = 0;
    std::vector<Vec> rows_;    // reduced echelon rows, sorted by pivot
    std::vector<Vec> combos_;  // row i = sum combos_[i][j] * generator j
    std::vector<int> pivots_;
};

int rank(const Mat& m);
std::vector<Vec> kernel_basis(const Mat& m);
std::optional<Vec> solve(const Mat& m, const Vec& b);
// X with m * X = b, all columns at once (shared elimination).
std::optional<Mat> solve_columns(const Mat& m, const Mat& b);
Mat inverse(const Mat& m);

// Quotient of k^ambient by span(subspace): 'project' kills exactly the span
// and is onto k^dim; 'section' satisfies project * section = identity.
struct Quotient {
    int dim = 0;
    Mat project;
    Mat section;
};
Quotient quotient(Field f, int ambient, const std::vector<Vec>& subspace);

}  // namespace hochcat
