#include "hochcat/backend.hpp"

#include <algorithm>

namespace hochcat {

void CObjectData::ensure() const {
    std::call_once(once_, [this] {
        if (lazy_) {
            auto* self = const_cast<CObjectData*>(this);
            auto [l, r] = lazy_();
            self->left_ = std::move(l);
            self->right_ = std::move(r);
            self->lazy_ = nullptr;
        }
    });
}

const std::vector<Mat>& CObjectData::left() const {
    ensure();
    return left_;
}

const std::vector<Mat>& CObjectData::right() const {
    ensure();
    return right_;
}

Vec HomSpace::coords(const CMorphism& m) const {
    if (direct_blocks) {
        Vec out;
        out.reserve(basis.size());
        const auto& sd = src->gdims;
        const auto& td = tgt->gdims;
        int soff = 0, toff = 0;
        for (size_t g = 0; g < sd.size(); ++g) {
            for (int i = 0; i < td[g]; ++i)
                for (int j = 0; j < sd[g]; ++j) out.push_back(m.m.at(toff + i, soff + j));
            soff += sd[g];
            toff += td[g];
        }
        return out;
    }
    if (basis.empty()) {
        if (!m.m.is_zero()) throw InternalError("morphism outside declared hom space");
        return {};
    }
    auto c = span->coords(m.m.flat());
    if (!c) throw InternalError("morphism outside declared hom space");
    return *c;
}

CMorphism HomSpace::from_coords(const Vec& c) const {
    if (int(c.size()) != dim()) throw InternalError("hom coordinate length mismatch");
    Mat m(field, tgt->total, src->total);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!c[i].is_zero()) m = m.add(basis[i].m.scaled(c[i]));
    return CMorphism{src, tgt, std::move(m)};
}

namespace {

CObject make_obj_bimodule(int total, std::vector<Mat> left, std::vector<Mat> right) {
    auto d = std::make_shared<CObjectData>();
    d->kind = BackendKind::Bimodule;
    d->total = total;
    d->left_ = std::move(left);
    d->right_ = std::move(right);
    return d;
}

CObject make_obj_bimodule_lazy(int total,
                               std::function<std::pair<std::vector<Mat>, std::vector<Mat>>()> lazy) {
    auto d = std::make_shared<CObjectData>();
    d->kind = BackendKind::Bimodule;
    d->total = total;
    d->lazy_ = std::move(lazy);
    return d;
}

CObject make_obj_graded(std::vector<int> dims) {
    auto d = std::make_shared<CObjectData>();
    d->kind = BackendKind::Graded;
    d->gdims = std::move(dims);
    d->total = 0;
    for (int n : d->gdims) d->total += n;
    return d;
}

std::vector<int> offsets(const std::vector<int>& dims) {
    std::vector<int> off(dims.size() + 1, 0);
    for (size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
    return off;
}

}  // namespace

std::shared_ptr<Backend> Backend::bimodule(Field f, StructureAlgebra b,
                                           std::optional<std::vector<Vec>> center_sub) {
    auto rep = check_algebra(f, b);
    if (!rep.ok) throw ConfigError("backend algebra is not an algebra: " + rep.detail);

    auto c = std::shared_ptr<Backend>(new Backend());
    c->field_ = f;
    c->kind_ = BackendKind::Bimodule;
    c->B_ = std::move(b);
    const auto& B = c->B_;
    const int d = B.dim;
    for (int i = 0; i < d; ++i) {
        c->unit_left_.push_back(B.left_mult(f, i));
        c->unit_right_.push_back(B.right_mult(f, i));
    }
    c->unit_ = make_obj_bimodule(d, c->unit_left_, c->unit_right_);
    c->zero_ = make_obj_bimodule(0, std::vector<Mat>(d, Mat(f, 0, 0)), std::vector<Mat>(d, Mat(f, 0, 0)));

    auto centre = center_basis(f, B);
    RowSpan zspan(f, d);
    for (const auto& z : centre) zspan.add(z);
    if (center_sub) {
        c->X_ = *center_sub;
        RowSpan xspan(f, d);
        for (const auto& x : c->X_) {
            if (int(x.size()) != d) throw ConfigError("center_sub vector has wrong length");
            if (!zspan.contains(x)) throw ConfigError("center_sub is not central");
            if (!xspan.add(x)) throw ConfigError("center_sub basis is linearly dependent");
        }
        if (!xspan.contains(B.unit_coords)) throw ConfigError("center_sub does not contain the unit");
        for (const auto& x : c->X_)
            for (const auto& y : c->X_)
                if (!xspan.contains(B.multiply(f, x, y)))
                    throw ConfigError("center_sub is not closed under multiplication");
        // X must contain everything that factors through B (x) B: the span of
        // sum_pq t_pq b_p a b_q over centralizer elements t and a in B
        Mat cent(f, d * d * d, d * d);
        for (int i = 0; i < d; ++i) {
            Mat diff = kron(B.left_mult(f, i), Mat::identity(f, d))
                           .sub(kron(Mat::identity(f, d), B.right_mult(f, i)));
            for (int r = 0; r < d * d; ++r)
                for (int cc2 = 0; cc2 < d * d; ++cc2) cent.at(i * d * d + r, cc2) = diff.at(r, cc2);
        }
        for (const auto& t : kernel_basis(cent)) {
            for (int a = 0; a < d; ++a) {
                Vec z(d, f.zero());
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) {
                        if (t[p * d + q].is_zero()) continue;
                        Vec ea(d, f.zero());
                        ea[a] = f.one();
                        Vec ep(d, f.zero());
                        ep[p] = f.one();
                        Vec eq(d, f.zero());
                        eq[q] = f.one();
                        Vec w = B.multiply(f, B.multiply(f, ep, ea), eq);
                        for (int k = 0; k < d; ++k)
                            z[k] = f.add(z[k], f.mul(t[p * d + q], w[k]));
                    }
                if (!xspan.contains(z))
                    throw ConfigError(
                        "center_sub must contain all central elements factoring through B(x)B");
            }
        }
    } else {
        c->X_ = centre;
    }

    // generators {B, B (x) B}
    std::vector<Mat> lF, rF;
    for (int i = 0; i < d; ++i) {
        lF.push_back(kron(B.left_mult(f, i), Mat::identity(f, d)));
        rF.push_back(kron(Mat::identity(f, d), B.right_mult(f, i)));
    }
    c->generators_ = {c->unit_, make_obj_bimodule(d * d, std::move(lF), std::move(rF))};
    return c;
}

std::shared_ptr<Backend> Backend::graded(Field f, GroupTable g) {
    auto c = std::shared_ptr<Backend>(new Backend());
    c->field_ = f;
    c->kind_ = BackendKind::Graded;
    c->G_ = std::move(g);
    std::vector<int> unit_dims(c->G_.n, 0);
    unit_dims[c->G_.identity] = 1;
    c->unit_ = make_obj_graded(unit_dims);
    c->zero_ = make_obj_graded(std::vector<int>(c->G_.n, 0));
    for (int i = 0; i < c->G_.n; ++i) {
        std::vector<int> dims(c->G_.n, 0);
        dims[i] = 1;
        c->generators_.push_back(i == c->G_.identity ? c->unit_ : make_obj_graded(dims));
    }
    return c;
}

CObject Backend::bimodule_object(std::vector<Mat> left, std::vector<Mat> right) const {
    if (kind_ != BackendKind::Bimodule) throw ConfigError("bimodule object in a graded backend");
    const int d = B_.dim;
    if (int(left.size()) != d || int(right.size()) != d)
        throw ConfigError("need one action matrix per basis element of B");
    int n = left.empty() ? 0 : left[0].rows;
    for (const auto& m : left)
        if (m.rows != n || m.cols != n) throw ConfigError("action matrices must be square of equal size");
    for (const auto& m : right)
        if (m.rows != n || m.cols != n) throw ConfigError("action matrices must be square of equal size");
    Field f = field_;
    auto amt = [&](const std::vector<Mat>& act, const Vec& coords) {
        Mat m(f, n, n);
        for (int i = 0; i < d; ++i)
            if (!coords[i].is_zero()) m = m.add(act[i].scaled(coords[i]));
        return m;
    };
    if (!(amt(left, B_.unit_coords) == Mat::identity(f, n)) ||
        !(amt(right, B_.unit_coords) == Mat::identity(f, n)))
        throw ConfigError("actions are not unital");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Mat lij(f, n, n), rji(f, n, n);
            for (int k = 0; k < d; ++k) {
                if (!B_.cc(i, j, k).is_zero()) lij = lij.add(left[k].scaled(B_.cc(i, j, k)));
                if (!B_.cc(j, i, k).is_zero()) rji = rji.add(right[k].scaled(B_.cc(j, i, k)));
            }
            if (!(left[i].mul(left[j]) == lij)) throw ConfigError("left action is not an algebra action");
            if (!(right[i].mul(right[j]) == rji)) throw ConfigError("right action is not an algebra action");
            if (!(left[i].mul(right[j]) == right[j].mul(left[i])))
                throw ConfigError("left and right actions do not commute");
        }
    return make_obj_bimodule(n, std::move(left), std::move(right));
}

CObject Backend::graded_object(std::vector<int> dims) const {
    if (kind_ != BackendKind::Graded) throw ConfigError("graded object in a bimodule backend");
    if (int(dims.size()) != G_.n) throw ConfigError("dimension vector length must equal the group order");
    for (int n : dims)
        if (n < 0) throw ConfigError("dimensions must be nonnegative");
    return make_obj_graded(std::move(dims));
}

bool Backend::is_unit_object(const CObject& x) const {
    if (x == unit_) return true;
    if (x->total != unit_->total) return false;
    if (kind_ == BackendKind::Graded) return x->gdims == unit_->gdims;
    return x->left() == unit_->left() && x->right() == unit_->right();
}

bool Backend::mor_valid(const CMorphism& m) const {
    if (m.m.rows != m.tgt->total || m.m.cols != m.src->total) return false;
    if (kind_ == BackendKind::Graded) {
        auto so = offsets(m.src->gdims), to = offsets(m.tgt->gdims);
        for (size_t g = 0; g < m.src->gdims.size(); ++g)
            for (size_t h = 0; h < m.tgt->gdims.size(); ++h) {
                if (g == h) continue;
                for (int i = to[h]; i < to[h + 1]; ++i)
                    for (int j = so[g]; j < so[g + 1]; ++j)
                        if (!m.m.at(i, j).is_zero()) return false;
            }
        return true;
    }
    for (int i = 0; i < B_.dim; ++i) {
        if (!(m.m.mul(m.src->left()[i]) == m.tgt->left()[i].mul(m.m))) return false;
        if (!(m.m.mul(m.src->right()[i]) == m.tgt->right()[i].mul(m.m))) return false;
    }
    return true;
}

CMorphism Backend::make_mor(CObject src, CObject tgt, Mat m) const {
    CMorphism out{std::move(src), std::move(tgt), std::move(m)};
    if (!mor_valid(out)) throw ConfigError("matrix does not intertwine the structure");
    return out;
}

CMorphism Backend::mor(CObject src, CObject tgt, Mat m) const {
    return CMorphism{std::move(src), std::move(tgt), std::move(m)};
}

CMorphism Backend::identity_mor(const CObject& x) const {
    return CMorphism{x, x, Mat::identity(field_, x->total)};
}

CMorphism Backend::zero_mor(const CObject& src, const CObject& tgt) const {
    return CMorphism{src, tgt, Mat(field_, tgt->total, src->total)};
}

CMorphism Backend::compose(const CMorphism& g, const CMorphism& f) const {
    if (g.src->total != f.tgt->total) throw InternalError("composition shape mismatch");
    return CMorphism{f.src, g.tgt, g.m.mul(f.m)};
}

CMorphism Backend::add(const CMorphism& a, const CMorphism& b) const {
    return CMorphism{a.src, a.tgt, a.m.add(b.m)};
}

CMorphism Backend::sub(const CMorphism& a, const CMorphism& b) const {
    return CMorphism{a.src, a.tgt, a.m.sub(b.m)};
}

CMorphism Backend::scaled(const CMorphism& a, const Scalar& s) const {
    return CMorphism{a.src, a.tgt, a.m.scaled(s)};
}

CMorphism Backend::invert(const CMorphism& a) const {
    return CMorphism{a.tgt, a.src, inverse(a.m)};
}

const TensorReal& Backend::tensor_obj(const CObject& x, const CObject& y) const {
    std::lock_guard<std::mutex> lk(cache_mu_);
    Key key{x.get(), y.get()};
    auto it = tensor_cache_.find(key);
    if (it != tensor_cache_.end()) return it->second;

    Field f = field_;
    TensorReal real;
    if (kind_ == BackendKind::Graded) {
        const int n = G_.n;
        std::vector<int> dims(n, 0);
        auto xo = offsets(x->gdims), yo = offsets(y->gdims);
        // degree-g basis: pairs (h, k) with h*k = g, ordered by h then row-major
        std::vector<int> roff(n, 0);
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) dims[G_.mul[h][k]] += x->gdims[h] * y->gdims[k];
        auto dof = offsets(dims);
        std::vector<int> fill = dims;
        for (int& v : fill) v = 0;
        int kron_dim = x->total * y->total;
        Mat P(f, dof.back(), kron_dim), S(f, kron_dim, dof.back());
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                int g = G_.mul[h][k];
                for (int i = 0; i < x->gdims[h]; ++i)
                    for (int j = 0; j < y->gdims[k]; ++j) {
                        int a = (xo[h] + i) * y->total + (yo[k] + j);
                        int r = dof[g] + fill[g]++;
                        P.at(r, a) = f.one();
                        S.at(a, r) = f.one();
                    }
            }
        real = TensorReal{make_obj_graded(dims), std::move(P), std::move(S)};
    } else {
        const int d = B_.dim;
        int kron_dim = x->total * y->total;
        std::vector<Vec> balancing;
        for (int b = 0; b < d; ++b) {
            // columns of R_x(b) (x) I - I (x) L_y(b)
            const Mat& rx = x->right()[b];
            const Mat& ly = y->left()[b];
            for (int i = 0; i < x->total; ++i)
                for (int j = 0; j < y->total; ++j) {
                    Vec v(kron_dim, f.zero());
                    bool nz = false;
                    for (int k = 0; k < x->total; ++k)
                        if (!rx.at(k, i).is_zero()) {
                            v[k * y->total + j] = rx.at(k, i);
                            nz = true;
                        }
                    for (int k = 0; k < y->total; ++k)
                        if (!ly.at(k, j).is_zero()) {
                            v[i * y->total + k] = f.sub(v[i * y->total + k], ly.at(k, j));
                            nz = nz || !v[i * y->total + k].is_zero();
                        }
                    if (nz) balancing.push_back(std::move(v));
                }
        }
        Quotient q = quotient(f, kron_dim, balancing);
        CObject xc = x, yc = y;
        Mat P = q.project, S = q.section;
        auto lazy = [this, xc, yc, P, S]() {
            std::vector<Mat> l, r;
            for (int b = 0; b < B_.dim; ++b) {
                l.push_back(P.mul(apply_kron(xc->left()[b], Mat::identity(field_, yc->total), S)));
                r.push_back(P.mul(apply_kron(Mat::identity(field_, xc->total), yc->right()[b], S)));
            }
            return std::make_pair(std::move(l), std::move(r));
        };
        real = TensorReal{make_obj_bimodule_lazy(q.dim, std::move(lazy)), std::move(q.project),
                          std::move(q.section)};
    }
    keepalive_[key] = {x, y};
    return tensor_cache_.emplace(key, std::move(real)).first->second;
}

CMorphism Backend::tensor_mor(const CMorphism& f, const CMorphism& g) const {
    const TensorReal& src = tensor_obj(f.src, g.src);
    const TensorReal& tgt = tensor_obj(f.tgt, g.tgt);
    Mat m = tgt.proj.mul(apply_kron(f.m, g.m, src.sect));
    return CMorphism{src.obj, tgt.obj, std::move(m)};
}

DirectSum Backend::direct_sum(const std::vector<CObject>& parts) const {
    Field f = field_;
    DirectSum out;
    if (kind_ == BackendKind::Graded) {
        std::vector<int> dims(G_.n, 0);
        for (const auto& p : parts)
            for (int g = 0; g < G_.n; ++g) dims[g] += p->gdims[g];
        out.obj = make_obj_graded(dims);
        auto to = offsets(dims);
        std::vector<int> fill(G_.n, 0);
        for (const auto& p : parts) {
            Mat inj(f, out.obj->total, p->total);
            auto po = offsets(p->gdims);
            for (int g = 0; g < G_.n; ++g)
                for (int i = 0; i < p->gdims[g]; ++i) inj.at(to[g] + fill[g] + i, po[g] + i) = f.one();
            for (int g = 0; g < G_.n; ++g) fill[g] += p->gdims[g];
            out.inj.push_back(CMorphism{p, out.obj, std::move(inj)});
        }
    } else {
        int total = 0;
        for (const auto& p : parts) total += p->total;
        const int d = B_.dim;
        std::vector<Mat> l(d, Mat(f, total, total)), r(d, Mat(f, total, total));
        int off = 0;
        std::vector<int> offs;
        for (const auto& p : parts) {
            offs.push_back(off);
            for (int b = 0; b < d; ++b)
                for (int i = 0; i < p->total; ++i)
                    for (int j = 0; j < p->total; ++j) {
                        if (!p->left()[b].at(i, j).is_zero()) l[b].at(off + i, off + j) = p->left()[b].at(i, j);
                        if (!p->right()[b].at(i, j).is_zero())
                            r[b].at(off + i, off + j) = p->right()[b].at(i, j);
                    }
            off += p->total;
        }
        out.obj = make_obj_bimodule(total, std::move(l), std::move(r));
        for (size_t s = 0; s < parts.size(); ++s) {
            Mat inj(f, total, parts[s]->total);
            for (int i = 0; i < parts[s]->total; ++i) inj.at(offs[s] + i, i) = f.one();
            out.inj.push_back(CMorphism{parts[s], out.obj, std::move(inj)});
        }
    }
    for (size_t s = 0; s < parts.size(); ++s)
        out.proj.push_back(CMorphism{out.obj, parts[s], out.inj[s].m.transpose()});
    return out;
}

Mat Backend::left_contract(const CObject& x) const {
    Field f = field_;
    if (kind_ == BackendKind::Graded) return Mat::identity(f, x->total);
    const int d = B_.dim;
    Mat c(f, x->total, d * x->total);
    for (int b = 0; b < d; ++b)
        for (int i = 0; i < x->total; ++i)
            for (int k = 0; k < x->total; ++k)
                if (!x->left()[b].at(k, i).is_zero()) c.at(k, b * x->total + i) = x->left()[b].at(k, i);
    return c;
}

Mat Backend::right_contract(const CObject& x) const {
    Field f = field_;
    if (kind_ == BackendKind::Graded) return Mat::identity(f, x->total);
    const int d = B_.dim;
    Mat c(f, x->total, x->total * d);
    for (int i = 0; i < x->total; ++i)
        for (int b = 0; b < d; ++b)
            for (int k = 0; k < x->total; ++k)
                if (!x->right()[b].at(k, i).is_zero()) c.at(k, i * d + b) = x->right()[b].at(k, i);
    return c;
}

CMorphism Backend::left_unitor(const CObject& x) const {
    const TensorReal& t = tensor_obj(unit_, x);
    return CMorphism{t.obj, x, left_contract(x).mul(t.sect)};
}

CMorphism Backend::right_unitor(const CObject& x) const {
    const TensorReal& t = tensor_obj(x, unit_);
    return CMorphism{t.obj, x, right_contract(x).mul(t.sect)};
}

CMorphism Backend::associator(const CObject& x, const CObject& y, const CObject& z) const {
    const TensorReal& xy = tensor_obj(x, y);
    const TensorReal& xy_z = tensor_obj(xy.obj, z);
    const TensorReal& yz = tensor_obj(y, z);
    const TensorReal& x_yz = tensor_obj(x, yz.obj);
    Field f = field_;
    Mat t = apply_kron(xy.sect, Mat::identity(f, z->total), xy_z.sect);
    t = apply_kron(Mat::identity(f, x->total), yz.proj, t);
    t = x_yz.proj.mul(t);
    return CMorphism{xy_z.obj, x_yz.obj, std::move(t)};
}

const HomSpace& Backend::hom_space(const CObject& x, const CObject& y) const {
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        auto it = hom_cache_.find(Key{x.get(), y.get()});
        if (it != hom_cache_.end()) return *it->second;
    }
    auto hs = std::make_shared<HomSpace>();
    hs->src = x;
    hs->tgt = y;
    hs->field = field_;
    Field f = field_;
    if (kind_ == BackendKind::Graded) {
        hs->direct_blocks = true;
        auto xo = offsets(x->gdims), yo = offsets(y->gdims);
        for (int g = 0; g < G_.n; ++g)
            for (int i = 0; i < y->gdims[g]; ++i)
                for (int j = 0; j < x->gdims[g]; ++j) {
                    Mat m(f, y->total, x->total);
                    m.at(yo[g] + i, xo[g] + j) = f.one();
                    hs->basis.push_back(CMorphism{x, y, std::move(m)});
                }
    } else if (is_unit_object(x) && is_unit_object(y)) {
        // End(1) is cut down to X acting by central multiplication
        for (const auto& xi : X_) hs->basis.push_back(CMorphism{x, y, B_.left_mult_by(f, xi)});
    } else {
        hs->basis = solve_hom(x, y);
    }
    if (!hs->direct_blocks) {
        hs->span = std::make_shared<RowSpan>(f, x->total * y->total, true);
        for (const auto& b : hs->basis)
            if (!hs->span->add(b.m.flat())) throw InternalError("hom basis is linearly dependent");
    }
    std::lock_guard<std::mutex> lk(cache_mu_);
    keepalive_[Key{x.get(), y.get()}] = {x, y};
    return *hom_cache_.emplace(Key{x.get(), y.get()}, std::move(hs)).first->second;
}

std::vector<CMorphism> Backend::solve_hom(const CObject& x, const CObject& y) const {
    Field f = field_;
    const int d = B_.dim;
    if (x->total == 0 || y->total == 0) return {};
    // find generators of x as a free left module
    RowSpan span(f, x->total);
    std::vector<int> gens;
    for (int v = 0; v < x->total; ++v) {
        Vec ev(x->total, f.zero());
        ev[v] = f.one();
        if (span.contains(ev)) continue;
        gens.push_back(v);
        for (int b = 0; b < d; ++b) span.add(x->left()[b].col_vec(v));
    }
    const int r = int(gens.size());
    if (span.rank() != x->total || r * d != x->total) return solve_hom_naive(x, y);
    // expansion of x-coordinates over the free basis {b . g_j}
    Mat g(f, x->total, r * d);
    for (int j = 0; j < r; ++j)
        for (int b = 0; b < d; ++b) g.set_col(j * d + b, x->left()[b].col_vec(gens[j]));
    auto expo = solve_columns(g, Mat::identity(f, x->total));
    if (!expo) return solve_hom_naive(x, y);
    Mat exp = *expo;  // (r*d) x x.total with g * exp = id

    // unknowns n_j = image of g_j; right-module constraints
    const int ny = y->total;
    Mat sys(f, r * d * ny, r * ny);
    for (int j = 0; j < r; ++j)
        for (int b = 0; b < d; ++b) {
            // F(R_x(b) g_j) = R_y(b) n_j, with the left side expanded over the free basis
            Vec beta = exp.apply(x->right()[b].col_vec(gens[j]));
            int rowblock = (j * d + b) * ny;
            for (int l = 0; l < r; ++l) {
                Mat coeff(f, ny, ny);
                for (int bp = 0; bp < d; ++bp)
                    if (!beta[l * d + bp].is_zero()) coeff = coeff.add(y->left()[bp].scaled(beta[l * d + bp]));
                for (int u = 0; u < ny; ++u)
                    for (int v = 0; v < ny; ++v)
                        if (!coeff.at(u, v).is_zero())
                            sys.at(rowblock + u, l * ny + v) = f.add(sys.at(rowblock + u, l * ny + v), coeff.at(u, v));
            }
            const Mat& ry = y->right()[b];
            for (int u = 0; u < ny; ++u)
                for (int v = 0; v < ny; ++v)
                    if (!ry.at(u, v).is_zero())
                        sys.at(rowblock + u, j * ny + v) = f.sub(sys.at(rowblock + u, j * ny + v), ry.at(u, v));
        }
    std::vector<CMorphism> out;
    for (const auto& sol : kernel_basis(sys)) {
        // F = [columns L_y(b) n_j] . exp
        Mat h(f, ny, r * d);
        for (int j = 0; j < r; ++j) {
            Vec nj(sol.begin() + j * ny, sol.begin() + (j + 1) * ny);
            for (int b = 0; b < d; ++b) h.set_col(j * d + b, y->left()[b].apply(nj));
        }
        out.push_back(CMorphism{x, y, h.mul(exp)});
    }
    return out;
}

std::vector<CMorphism> Backend::solve_hom_naive(const CObject& x, const CObject& y) const {
    Field f = field_;
    const int d = B_.dim;
    const int nx = x->total, ny = y->total;
    // F L = L F and F R = R F over all basis elements, unknown F is ny x nx
    Mat sys(f, 2 * d * nx * ny, nx * ny);
    int row = 0;
    auto add_block = [&](const Mat& a, const Mat& b) {
        // a F - F b = 0: rows indexed by (u, v)
        for (int u = 0; u < ny; ++u)
            for (int v = 0; v < nx; ++v) {
                for (int k = 0; k < ny; ++k)
                    if (!a.at(u, k).is_zero())
                        sys.at(row + u * nx + v, k * nx + v) = f.add(sys.at(row + u * nx + v, k * nx + v), a.at(u, k));
                for (int k = 0; k < nx; ++k)
                    if (!b.at(k, v).is_zero())
                        sys.at(row + u * nx + v, u * nx + k) = f.sub(sys.at(row + u * nx + v, u * nx + k), b.at(k, v));
            }
        row += nx * ny;
    };
    for (int b = 0; b < d; ++b) {
        add_block(y->left()[b], x->left()[b]);
        add_block(y->right()[b], x->right()[b]);
    }
    std::vector<CMorphism> out;
    for (const auto& sol : kernel_basis(sys))
        out.push_back(CMorphism{x, y, Mat::from_flat(f, ny, nx, sol)});
    return out;
}

}  // namespace hochcat
