#include "hochcat/matrix.hpp"

#include <algorithm>

namespace hochcat {

Mat Mat::identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

bool Mat::is_zero() const {
    for (const auto& s : a)
        if (!s.is_zero()) return false;
    return true;
}

Mat Mat::mul(const Mat& o) const {
    if (cols != o.rows) throw InternalError("matrix shape mismatch in mul");
    Mat c(field, rows, o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            const Scalar* brow = o.a.data() + size_t(k) * o.cols;
            Scalar* crow = c.a.data() + size_t(i) * o.cols;
            for (int j = 0; j < o.cols; ++j) {
                if (brow[j].is_zero()) continue;
                crow[j] = field.add(crow[j], field.mul(aik, brow[j]));
            }
        }
    }
    return c;
}

Mat Mat::add(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw InternalError("matrix shape mismatch in add");
    Mat c(field, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) c.a[i] = field.add(a[i], o.a[i]);
    return c;
}

Mat Mat::sub(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw InternalError("matrix shape mismatch in sub");
    Mat c(field, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) c.a[i] = field.sub(a[i], o.a[i]);
    return c;
}

Mat Mat::neg() const {
    Mat c(field, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) c.a[i] = field.neg(a[i]);
    return c;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat c(field, rows, cols);
    if (s.is_zero()) return c;
    for (size_t i = 0; i < a.size(); ++i) c.a[i] = field.mul(a[i], s);
    return c;
}

Mat Mat::transpose() const {
    Mat c(field, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) c.at(j, i) = at(i, j);
    return c;
}

Vec Mat::apply(const Vec& v) const {
    if (int(v.size()) != cols) throw InternalError("vector length mismatch in apply");
    Vec r(rows, field.zero());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] = field.add(r[i], field.mul(at(i, j), v[j]));
    return r;
}

Vec Mat::row_vec(int i) const { return Vec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols); }

Vec Mat::col_vec(int j) const {
    Vec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

Mat Mat::from_flat(Field f, int r, int c, Vec v) {
    if (int64_t(v.size()) != int64_t(r) * c) throw InternalError("flat size mismatch");
    Mat m(f, r, c);
    m.a = std::move(v);
    return m;
}

Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw InternalError("hcat row mismatch");
    Mat c(a.field, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

Mat vcat(const Mat& a, const Mat& b) {
    if (a.cols != b.cols) throw InternalError("vcat col mismatch");
    Mat c(a.field, a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), c.a.begin());
    std::copy(b.a.begin(), b.a.end(), c.a.begin() + a.a.size());
    return c;
}

Mat block_diag(Field f, const std::vector<Mat>& blocks) {
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows;
        c += b.cols;
    }
    Mat m(f, r, c);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) m.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows;
        co += b.cols;
    }
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    int64_t r = int64_t(a.rows) * b.rows, c = int64_t(a.cols) * b.cols;
    if (r * c > (int64_t(1) << 26)) throw InternalError("kron too large to materialize");
    Mat m(a.field, int(r), int(c));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const Scalar& s = a.at(i, j);
            if (s.is_zero()) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    if (!b.at(k, l).is_zero())
                        m.at(i * b.rows + k, j * b.cols + l) = a.field.mul(s, b.at(k, l));
        }
    return m;
}

Mat apply_kron(const Mat& a, const Mat& b, const Mat& m) {
    if (int64_t(a.cols) * b.cols != m.rows) throw InternalError("apply_kron shape mismatch");
    Mat out(m.field, a.rows * b.rows, m.cols);
    Mat bt = b.transpose();
    for (int c = 0; c < m.cols; ++c) {
        // column c viewed as an (a.cols x b.cols) matrix V; (a⊗b)vec(V) = vec(a·V·bᵀ)
        Mat v(m.field, a.cols, b.cols);
        for (int i = 0; i < a.cols; ++i)
            for (int j = 0; j < b.cols; ++j) v.at(i, j) = m.at(i * b.cols + j, c);
        Mat w = a.mul(v).mul(bt);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < b.rows; ++j) out.at(i * b.rows + j, c) = w.at(i, j);
    }
    return out;
}

RowSpan::RowSpan(Field f, int ambient, bool track) : f_(f), ambient_(ambient), track_(track) {}

bool RowSpan::add(const Vec& v) {
    if (int(v.size()) != ambient_) throw InternalError("RowSpan ambient mismatch");
    int gen = ngen_++;
    Vec w = v;
    Vec comb;
    if (track_) {
        comb.assign(gen + 1, f_.zero());
        comb[gen] = f_.one();
    }
    for (size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = w[pivots_[r]];
        if (c.is_zero()) continue;
        const Vec& row = rows_[r];
        for (int j = pivots_[r]; j < ambient_; ++j)
            if (!row[j].is_zero()) w[j] = f_.sub(w[j], f_.mul(c, row[j]));
        if (track_) {
            const Vec& rc = combos_[r];
            for (size_t j = 0; j < rc.size(); ++j)
                if (!rc[j].is_zero()) comb[j] = f_.sub(comb[j], f_.mul(c, rc[j]));
        }
    }
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!w[j].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return false;
    Scalar piv = w[p];
    if (!(piv == f_.one())) {
        Scalar ip = f_.inv(piv);
        for (int j = p; j < ambient_; ++j)
            if (!w[j].is_zero()) w[j] = f_.mul(w[j], ip);
        if (track_)
            for (auto& s : comb)
                if (!s.is_zero()) s = f_.mul(s, ip);
    }
    // keep reduced form: eliminate the new pivot from existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = rows_[r][p];
        if (c.is_zero()) continue;
        for (int j = p; j < ambient_; ++j)
            if (!w[j].is_zero()) rows_[r][j] = f_.sub(rows_[r][j], f_.mul(c, w[j]));
        if (track_) {
            auto& rc = combos_[r];
            if (rc.size() < comb.size()) rc.resize(comb.size(), f_.zero());
            for (size_t j = 0; j < comb.size(); ++j)
                if (!comb[j].is_zero()) rc[j] = f_.sub(rc[j], f_.mul(c, comb[j]));
        }
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    if (track_) combos_.insert(combos_.begin() + pos, std::move(comb));
    return true;
}

Vec RowSpan::reduce(const Vec& v) const {
    Vec w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = w[pivots_[r]];
        if (c.is_zero()) continue;
        const Vec& row = rows_[r];
        for (int j = pivots_[r]; j < ambient_; ++j)
            if (!row[j].is_zero()) w[j] = f_.sub(w[j], f_.mul(c, row[j]));
    }
    return w;
}

bool RowSpan::contains(const Vec& v) const {
    Vec w = reduce(v);
    for (const auto& s : w)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<Vec> RowSpan::coords(const Vec& v) const {
    if (!track_) throw InternalError("RowSpan not tracking coordinates");
    Vec w = v;
    Vec out(ngen_, f_.zero());
    for (size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = w[pivots_[r]];
        if (c.is_zero()) continue;
        const Vec& row = rows_[r];
        for (int j = pivots_[r]; j < ambient_; ++j)
            if (!row[j].is_zero()) w[j] = f_.sub(w[j], f_.mul(c, row[j]));
        const Vec& rc = combos_[r];
        for (size_t j = 0; j < rc.size(); ++j)
            if (!rc[j].is_zero()) out[j] = f_.add(out[j], f_.mul(c, rc[j]));
    }
    for (const auto& s : w)
        if (!s.is_zero()) return std::nullopt;
    return out;
}

int rank(const Mat& m) {
    RowSpan sp(m.field, m.cols);
    for (int i = 0; i < m.rows; ++i) sp.add(m.row_vec(i));
    return sp.rank();
}

std::vector<Vec> kernel_basis(const Mat& m) {
    RowSpan sp(m.field, m.cols);
    for (int i = 0; i < m.rows; ++i) sp.add(m.row_vec(i));
    const auto& pivots = sp.pivots();
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(m.cols, m.field.zero());
        v[j] = m.field.one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m.field.neg(sp.rows()[r][j]);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Mat> solve_columns(const Mat& m, const Mat& b) {
    if (m.rows != b.rows) throw InternalError("solve dimension mismatch");
    // eliminate over [m | b], pivoting only in the m-columns
    RowSpan sp(m.field, m.cols + b.cols);
    for (int i = 0; i < m.rows; ++i) {
        Vec v(m.cols + b.cols);
        for (int j = 0; j < m.cols; ++j) v[j] = m.at(i, j);
        for (int j = 0; j < b.cols; ++j) v[m.cols + j] = b.at(i, j);
        sp.add(v);
    }
    // rows with pivot inside the b-part witness inconsistency
    for (int p : sp.pivots())
        if (p >= m.cols) return std::nullopt;
    Mat x(m.field, m.cols, b.cols);
    const auto& pivots = sp.pivots();
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols; ++j) x.at(pivots[r], j) = sp.rows()[r][m.cols + j];
    return x;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat bb(m.field, m.rows, 1);
    bb.set_col(0, b);
    auto x = solve_columns(m, bb);
    if (!x) return std::nullopt;
    return x->col_vec(0);
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw InternalError("inverse of non-square matrix");
    auto x = solve_columns(m, Mat::identity(m.field, m.rows));
    if (!x || !(m.mul(*x) == Mat::identity(m.field, m.rows)))
        throw InternalError("matrix not invertible");
    return *x;
}

Quotient quotient(Field f, int ambient, const std::vector<Vec>& subspace) {
    RowSpan sp(f, ambient);
    for (const auto& v : subspace) {
        if (int(v.size()) != ambient) throw InternalError("quotient subspace vector length mismatch");
        sp.add(v);
    }
    std::vector<bool> is_pivot(ambient, false);
    for (int p : sp.pivots()) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < ambient; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Quotient q;
    q.dim = int(free_cols.size());
    q.project = Mat(f, q.dim, ambient);
    q.section = Mat(f, ambient, q.dim);
    // project(v) = free coordinates of (v reduced mod the subspace); with the
    // echelon fully reduced this is v[free] - sum_r v[pivot_r] * row_r[free]
    for (size_t r = 0; r < free_cols.size(); ++r) q.project.at(int(r), free_cols[r]) = f.one();
    for (size_t s = 0; s < sp.pivots().size(); ++s) {
        const Vec& row = sp.rows()[s];
        for (size_t r = 0; r < free_cols.size(); ++r)
            q.project.at(int(r), sp.pivots()[s]) = f.neg(row[free_cols[r]]);
    }
    for (size_t r = 0; r < free_cols.size(); ++r) q.section.at(free_cols[r], int(r)) = f.one();
    return q;
}

}  // namespace hochcat
