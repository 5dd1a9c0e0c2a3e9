#include "hochcat/freyd.hpp"

namespace hochcat {

namespace {

Vec concat(const Vec& a, const Vec& b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

Vec FreydHom::class_coords(const FreydMorphism& m) const {
    Vec u = h00_->coords(m.f0);
    Vec w = h11_->coords(m.f1);
    Vec red = zspan_->reduce(concat(u, w));
    auto c = repspan_->coords(red);
    if (!c) throw InternalError("morphism class outside computed hom space");
    return *c;
}

FreydMorphism FreydHom::from_class_coords(const Vec& v) const {
    if (int(v.size()) != dim()) throw InternalError("class coordinate length mismatch");
    Field f = h00_->field;
    Vec u(h00_->dim(), f.zero()), w(h11_->dim(), f.zero());
    for (size_t i = 0; i < reps_.size(); ++i) {
        if (v[i].is_zero()) continue;
        Vec iu = h00_->coords(reps_[i].f0), iw = h11_->coords(reps_[i].f1);
        for (size_t j = 0; j < u.size(); ++j) u[j] = f.add(u[j], f.mul(v[i], iu[j]));
        for (size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(v[i], iw[j]));
    }
    return FreydMorphism{p_, q_, h00_->from_coords(u), h11_->from_coords(w)};
}

PresentedObject Freyd::embed_obj(const CObject& x) const {
    return PresentedObject{c_->zero_object(), x, c_->zero_mor(c_->zero_object(), x)};
}

PresentedObject Freyd::zero_obj() const { return embed_obj(c_->zero_object()); }

FreydMorphism Freyd::femb(const CMorphism& m) const {
    return FreydMorphism{embed_obj(m.src), embed_obj(m.tgt), m,
                         c_->zero_mor(c_->zero_object(), c_->zero_object())};
}

FreydMorphism Freyd::fid(const PresentedObject& p) const {
    return FreydMorphism{p, p, c_->identity_mor(p.x0), c_->identity_mor(p.x1)};
}

FreydMorphism Freyd::fzero(const PresentedObject& p, const PresentedObject& q) const {
    return FreydMorphism{p, q, c_->zero_mor(p.x0, q.x0), c_->zero_mor(p.x1, q.x1)};
}

FreydMorphism Freyd::fcompose(const FreydMorphism& g, const FreydMorphism& f) const {
    return FreydMorphism{f.src, g.tgt, c_->compose(g.f0, f.f0), c_->compose(g.f1, f.f1)};
}

FreydMorphism Freyd::fadd(const FreydMorphism& a, const FreydMorphism& b) const {
    return FreydMorphism{a.src, a.tgt, c_->add(a.f0, b.f0), c_->add(a.f1, b.f1)};
}

FreydMorphism Freyd::fsub(const FreydMorphism& a, const FreydMorphism& b) const {
    return FreydMorphism{a.src, a.tgt, c_->sub(a.f0, b.f0), c_->sub(a.f1, b.f1)};
}

FreydMorphism Freyd::fneg(const FreydMorphism& a) const {
    return FreydMorphism{a.src, a.tgt, CMorphism{a.f0.src, a.f0.tgt, a.f0.m.neg()},
                         CMorphism{a.f1.src, a.f1.tgt, a.f1.m.neg()}};
}

FreydMorphism Freyd::fscale(const FreydMorphism& a, const Scalar& s) const {
    return FreydMorphism{a.src, a.tgt, c_->scaled(a.f0, s), c_->scaled(a.f1, s)};
}

bool Freyd::commutes(const FreydMorphism& m) const {
    return m.f0.m.mul(m.src.x.m) == m.tgt.x.m.mul(m.f1.m);
}

bool Freyd::is_zero_class(const FreydMorphism& m) const {
    if (m.tgt.x1->total == 0) return m.f0.m.is_zero();
    const auto& h = c_->hom_space(m.src.x0, m.tgt.x1);
    RowSpan span(c_->field(), m.tgt.x0->total * m.src.x0->total);
    for (const auto& b : h.basis) span.add(m.tgt.x.m.mul(b.m).flat());
    return span.contains(m.f0.m.flat());
}

bool Freyd::same_class(const FreydMorphism& a, const FreydMorphism& b) const {
    return is_zero_class(fsub(a, b));
}

const FreydTensor& Freyd::tensor(const PresentedObject& p, const PresentedObject& q) const {
    std::lock_guard<std::mutex> lk(mu_);
    PairKey key{p.x1.get(), p.x0.get(), q.x1.get(), q.x0.get()};
    auto& slot = tensor_cache_[key];
    for (const auto& e : slot)
        if (e.first.first == p.x.m && e.first.second == q.x.m) return e.second;

    const auto& t00 = c_->tensor_obj(p.x0, q.x0);
    const auto& t10 = c_->tensor_obj(p.x1, q.x0);
    const auto& t01 = c_->tensor_obj(p.x0, q.x1);
    auto sum = c_->direct_sum({t10.obj, t01.obj});
    CMorphism part10 = c_->tensor_mor(p.x, c_->identity_mor(q.x0));
    CMorphism part01 = c_->tensor_mor(c_->identity_mor(p.x0), q.x);
    CMorphism xten = c_->add(c_->compose(part10, sum.proj[0]), c_->compose(part01, sum.proj[1]));
    FreydTensor ft;
    ft.obj = PresentedObject{sum.obj, t00.obj, CMorphism{sum.obj, t00.obj, xten.m}};
    ft.j10 = sum.inj[0];
    ft.p10 = sum.proj[0];
    ft.j01 = sum.inj[1];
    ft.p01 = sum.proj[1];
    slot.push_back({{p.x.m, q.x.m}, std::move(ft)});
    return slot.back().second;
}

FreydMorphism Freyd::tensor_mor(const FreydMorphism& f, const FreydMorphism& g) const {
    const FreydTensor& ts = tensor(f.src, g.src);
    const FreydTensor& tt = tensor(f.tgt, g.tgt);
    CMorphism f0 = c_->tensor_mor(f.f0, g.f0);
    CMorphism a = c_->compose(tt.j10, c_->compose(c_->tensor_mor(f.f1, g.f0), ts.p10));
    CMorphism b = c_->compose(tt.j01, c_->compose(c_->tensor_mor(f.f0, g.f1), ts.p01));
    CMorphism f1 = c_->add(a, b);
    return FreydMorphism{ts.obj, tt.obj, CMorphism{ts.obj.x0, tt.obj.x0, f0.m},
                         CMorphism{ts.obj.x1, tt.obj.x1, f1.m}};
}

FreydMorphism Freyd::unitor_left(const PresentedObject& p) const {
    PresentedObject unit = unit_obj();
    const FreydTensor& t = tensor(unit, p);
    CMorphism f0 = c_->left_unitor(p.x0);
    CMorphism f1 = c_->compose(c_->left_unitor(p.x1), t.p01);
    return FreydMorphism{t.obj, p, CMorphism{t.obj.x0, p.x0, f0.m}, CMorphism{t.obj.x1, p.x1, f1.m}};
}

FreydMorphism Freyd::unitor_right(const PresentedObject& p) const {
    PresentedObject unit = unit_obj();
    const FreydTensor& t = tensor(p, unit);
    CMorphism f0 = c_->right_unitor(p.x0);
    CMorphism f1 = c_->compose(c_->right_unitor(p.x1), t.p10);
    return FreydMorphism{t.obj, p, CMorphism{t.obj.x0, p.x0, f0.m}, CMorphism{t.obj.x1, p.x1, f1.m}};
}

FreydMorphism Freyd::assoc(const PresentedObject& p, const PresentedObject& q,
                           const PresentedObject& r) const {
    const FreydTensor& tpq = tensor(p, q);
    const FreydTensor& tqr = tensor(q, r);
    const FreydTensor& src = tensor(tpq.obj, r);
    const FreydTensor& tgt = tensor(p, tqr.obj);
    CMorphism f0 = c_->associator(p.x0, q.x0, r.x0);

    // first source summand R((pq)_1, Z0), decomposed along (pq)_1
    CMorphism a1 = c_->compose(
        tgt.j10, c_->compose(c_->associator(p.x1, q.x0, r.x0),
                             c_->compose(c_->tensor_mor(tpq.p10, c_->identity_mor(r.x0)), src.p10)));
    CMorphism a2 = c_->compose(
        tgt.j01,
        c_->compose(c_->tensor_mor(c_->identity_mor(p.x0), tqr.j10),
                    c_->compose(c_->associator(p.x0, q.x1, r.x0),
                                c_->compose(c_->tensor_mor(tpq.p01, c_->identity_mor(r.x0)), src.p10))));
    // second source summand R((pq)_0, Z1)
    CMorphism b = c_->compose(
        tgt.j01, c_->compose(c_->tensor_mor(c_->identity_mor(p.x0), tqr.j01),
                             c_->compose(c_->associator(p.x0, q.x0, r.x1), src.p01)));
    CMorphism f1 = c_->add(a1, c_->add(a2, b));
    return FreydMorphism{src.obj, tgt.obj, CMorphism{src.obj.x0, tgt.obj.x0, f0.m},
                         CMorphism{src.obj.x1, tgt.obj.x1, f1.m}};
}

FreydMorphism Freyd::finvert(const FreydMorphism& iso) const {
    return FreydMorphism{iso.tgt, iso.src, c_->invert(iso.f0), c_->invert(iso.f1)};
}

FreydMorphism Freyd::canonical_epi(const PresentedObject& p) const {
    PresentedObject src = embed_obj(p.x0);
    return FreydMorphism{src, p, c_->identity_mor(p.x0), c_->zero_mor(c_->zero_object(), p.x1)};
}

FSum Freyd::direct_sum(const std::vector<PresentedObject>& parts) const {
    std::vector<CObject> p0, p1;
    for (const auto& p : parts) {
        p0.push_back(p.x0);
        p1.push_back(p.x1);
    }
    DirectSum s0 = c_->direct_sum(p0);
    DirectSum s1 = c_->direct_sum(p1);
    CMorphism x = c_->zero_mor(s1.obj, s0.obj);
    for (size_t i = 0; i < parts.size(); ++i)
        x = c_->add(x, c_->compose(s0.inj[i], c_->compose(parts[i].x, s1.proj[i])));
    FSum out;
    out.obj = PresentedObject{s1.obj, s0.obj, x};
    for (size_t i = 0; i < parts.size(); ++i) {
        out.inj.push_back(FreydMorphism{parts[i], out.obj, s0.inj[i], s1.inj[i]});
        out.proj.push_back(FreydMorphism{out.obj, parts[i], s0.proj[i], s1.proj[i]});
    }
    return out;
}

std::shared_ptr<const FreydHom> Freyd::hom(const PresentedObject& p, const PresentedObject& q) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        PairKey key{p.x1.get(), p.x0.get(), q.x1.get(), q.x0.get()};
        for (const auto& e : hom_cache_[key])
            if (e.first.first == p.x.m && e.first.second == q.x.m) return e.second;
    }
    Field f = c_->field();
    auto out = std::make_shared<FreydHom>();
    out->p_ = p;
    out->q_ = q;
    out->h00_ = &c_->hom_space(p.x0, q.x0);
    out->h11_ = &c_->hom_space(p.x1, q.x1);
    const auto& h01 = c_->hom_space(p.x0, q.x1);
    const int n00 = out->h00_->dim(), n11 = out->h11_->dim();

    // commuting squares: f0 . x = y . f1 in Hom_k(X1, Y0)
    const int amb = q.x0->total * p.x1->total;
    Mat sys(f, amb, n00 + n11);
    for (int a = 0; a < n00; ++a) sys.set_col(a, out->h00_->basis[a].m.mul(p.x.m).flat());
    for (int b = 0; b < n11; ++b)
        sys.set_col(n00 + b, q.x.m.mul(out->h11_->basis[b].m).neg().flat());
    std::vector<Vec> kbasis = kernel_basis(sys);

    // homotopy subspace: (y.h, h.x) for h: X0 -> Y1, plus (0, w) with y.w = 0
    out->zspan_ = std::make_shared<RowSpan>(f, n00 + n11);
    for (const auto& h : h01.basis) {
        Vec u = out->h00_->coords(c_->compose(q.x, h));
        Vec w = out->h11_->coords(c_->compose(h, p.x));
        out->zspan_->add(concat(u, w));
    }
    {
        Mat wsys(f, q.x0->total * p.x1->total, n11);
        for (int b = 0; b < n11; ++b) wsys.set_col(b, q.x.m.mul(out->h11_->basis[b].m).flat());
        for (const auto& w : kernel_basis(wsys)) out->zspan_->add(concat(Vec(n00, f.zero()), w));
    }

    out->repspan_ = std::make_shared<RowSpan>(f, n00 + n11, true);
    for (const auto& v : kbasis) {
        Vec red = out->zspan_->reduce(v);
        bool fresh = false;
        for (const auto& s : out->repspan_->reduce(red))
            if (!s.is_zero()) {
                fresh = true;
                break;
            }
        if (fresh && out->repspan_->add(red)) {
            Vec u(red.begin(), red.begin() + n00);
            Vec w(red.begin() + n00, red.end());
            out->reps_.push_back(FreydMorphism{p, q, out->h00_->from_coords(u), out->h11_->from_coords(w)});
        }
    }
    std::lock_guard<std::mutex> lk(mu_);
    PairKey key{p.x1.get(), p.x0.get(), q.x1.get(), q.x0.get()};
    hom_cache_[key].push_back({{p.x.m, q.x.m}, out});
    return out;
}

const Realization& Freyd::realize(const PresentedObject& p) const {
    std::lock_guard<std::mutex> lk(mu_);
    std::pair<const void*, const void*> key{p.x1.get(), p.x0.get()};
    auto& slot = realize_cache_[key];
    for (const auto& e : slot)
        if (e.first == p.x.m) return e.second;
    Realization real;
    Field f = c_->field();
    for (const auto& t : c_->generators()) {
        const auto& h0 = c_->hom_space(t, p.x0);
        const auto& h1 = c_->hom_space(t, p.x1);
        std::vector<Vec> image;
        for (const auto& h : h1.basis) image.push_back(h0.coords(c_->compose(p.x, h)));
        Quotient q = quotient(f, h0.dim(), image);
        real.dims.push_back(q.dim);
        real.quo.push_back(std::move(q));
    }
    slot.push_back({p.x.m, std::move(real)});
    return slot.back().second;
}

Mat Freyd::realize_map(const FreydMorphism& m, int gi) const {
    const Realization& rp = realize(m.src);
    const Realization& rq = realize(m.tgt);
    const CObject& t = c_->generators()[gi];
    const auto& h0p = c_->hom_space(t, m.src.x0);
    const auto& h0q = c_->hom_space(t, m.tgt.x0);
    Field f = c_->field();
    Mat out(f, rq.dims[gi], rp.dims[gi]);
    for (int j = 0; j < rp.dims[gi]; ++j) {
        Vec coords = rp.quo[gi].section.col_vec(j);
        CMorphism g = h0p.from_coords(coords);
        Vec img = h0q.coords(c_->compose(m.f0, g));
        out.set_col(j, rq.quo[gi].project.apply(img));
    }
    return out;
}

Mat Freyd::realize_gen_map(const PresentedObject& p, int gj, int gi, const CMorphism& u) const {
    // precomposition with u: T_i -> T_j induces V_{T_j}(p) -> V_{T_i}(p)
    const Realization& rp = realize(p);
    const auto& h0j = c_->hom_space(c_->generators()[gj], p.x0);
    const auto& h0i = c_->hom_space(c_->generators()[gi], p.x0);
    Field f = c_->field();
    Mat out(f, rp.dims[gi], rp.dims[gj]);
    for (int col = 0; col < rp.dims[gj]; ++col) {
        CMorphism g = h0j.from_coords(rp.quo[gj].section.col_vec(col));
        out.set_col(col, rp.quo[gi].project.apply(h0i.coords(c_->compose(g, u))));
    }
    return out;
}

KernelStep Freyd::kernel_presentation(const FreydMorphism& f) const {
    Field fl = c_->field();
    const PresentedObject& p = f.src;
    const Realization& rp = realize(p);
    const int ngen = int(c_->generators().size());

    // kernels of the realized map at each generator
    std::vector<std::vector<Vec>> wbasis(ngen);
    for (int i = 0; i < ngen; ++i) wbasis[i] = kernel_basis(realize_map(f, i));

    // greedy cover of the kernel subfunctor
    struct Cover {
        int gen;
        CMorphism rep;  // T_gen -> X0
    };
    std::vector<Cover> covers;
    std::vector<RowSpan> spans;
    for (int i = 0; i < ngen; ++i) spans.emplace_back(fl, rp.dims[i]);
    auto add_cover_image = [&](const Cover& cv) {
        for (int i = 0; i < ngen; ++i) {
            const auto& h0i = c_->hom_space(c_->generators()[i], p.x0);
            for (const auto& u : c_->hom_basis(c_->generators()[i], c_->generators()[cv.gen])) {
                Vec cls = rp.quo[i].project.apply(h0i.coords(c_->compose(cv.rep, u)));
                spans[i].add(cls);
            }
        }
    };
    for (int i = 0; i < ngen; ++i) {
        const auto& h0i = c_->hom_space(c_->generators()[i], p.x0);
        for (const auto& w : wbasis[i]) {
            if (spans[i].contains(w)) continue;
            Cover cv{i, h0i.from_coords(rp.quo[i].section.apply(w))};
            covers.push_back(cv);
            add_cover_image(cv);
        }
    }

    std::vector<CObject> k0_parts;
    for (const auto& cv : covers) k0_parts.push_back(c_->generators()[cv.gen]);
    DirectSum k0sum = c_->direct_sum(k0_parts);
    CMorphism k0(c_->zero_mor(k0sum.obj, p.x0));
    for (size_t s = 0; s < covers.size(); ++s)
        k0 = c_->add(k0, c_->compose(covers[s].rep, k0sum.proj[s]));

    // relations: kernel of Hom(T, K0) -> V_T(p), covered the same way
    std::vector<const HomSpace*> homk(ngen);
    std::vector<std::vector<Vec>> ubasis(ngen);
    for (int i = 0; i < ngen; ++i) {
        homk[i] = &c_->hom_space(c_->generators()[i], k0sum.obj);
        const auto& h0i = c_->hom_space(c_->generators()[i], p.x0);
        Mat phi(fl, rp.dims[i], homk[i]->dim());
        for (int b = 0; b < homk[i]->dim(); ++b) {
            Vec img = h0i.coords(c_->compose(k0, homk[i]->basis[b]));
            phi.set_col(b, rp.quo[i].project.apply(img));
        }
        ubasis[i] = kernel_basis(phi);
    }
    struct Rel {
        int gen;
        CMorphism rep;  // T_gen -> K0
    };
    std::vector<Rel> rels;
    std::vector<RowSpan> rspans;
    for (int i = 0; i < ngen; ++i) rspans.emplace_back(fl, homk[i]->dim());
    auto add_rel_image = [&](const Rel& rl) {
        for (int i = 0; i < ngen; ++i)
            for (const auto& u : c_->hom_basis(c_->generators()[i], c_->generators()[rl.gen]))
                rspans[i].add(homk[i]->coords(c_->compose(rl.rep, u)));
    };
    for (int i = 0; i < ngen; ++i) {
        for (const auto& u : ubasis[i]) {
            if (rspans[i].contains(u)) continue;
            Rel rl{i, homk[i]->from_coords(u)};
            rels.push_back(rl);
            add_rel_image(rl);
        }
    }

    std::vector<CObject> k1_parts;
    for (const auto& rl : rels) k1_parts.push_back(c_->generators()[rl.gen]);
    DirectSum k1sum = c_->direct_sum(k1_parts);
    CMorphism cmap(c_->zero_mor(k1sum.obj, k0sum.obj));
    for (size_t s = 0; s < rels.size(); ++s)
        cmap = c_->add(cmap, c_->compose(rels[s].rep, k1sum.proj[s]));

    // inclusion: f0 = k0, f1 solves k0 . c = x . f1 columnwise over the hom space
    CMorphism f1 = c_->zero_mor(k1sum.obj, p.x1);
    if (p.x1->total > 0 && !rels.empty()) {
        for (size_t s = 0; s < rels.size(); ++s) {
            const auto& h1 = c_->hom_space(c_->generators()[rels[s].gen], p.x1);
            RowSpan span(fl, p.x0->total * c_->generators()[rels[s].gen]->total, true);
            for (const auto& h : h1.basis) span.add(p.x.m.mul(h.m).flat());
            CMorphism target = c_->compose(k0, rels[s].rep);
            auto coords = span.coords(target.m.flat());
            if (!coords) throw InternalError("KERNEL-FAILURE: relation does not factor through x");
            CMorphism hs = c_->zero_mor(c_->generators()[rels[s].gen], p.x1);
            for (size_t b = 0; b < coords->size(); ++b)
                if (!(*coords)[b].is_zero()) hs = c_->add(hs, c_->scaled(h1.basis[b], (*coords)[b]));
            f1 = c_->add(f1, c_->compose(hs, k1sum.proj[s]));
        }
    } else if (!rels.empty()) {
        // x1 = 0: relations must compose to zero exactly
        if (!c_->compose(k0, cmap).m.is_zero())
            throw InternalError("KERNEL-FAILURE: relations do not annihilate the cover");
    }

    KernelStep out;
    out.k = PresentedObject{k1sum.obj, k0sum.obj, cmap};
    out.incl = FreydMorphism{out.k, p, k0, f1};
    if (!commutes(out.incl)) throw InternalError("KERNEL-FAILURE: inclusion square does not commute");
    return out;
}

std::optional<FreydMorphism> Freyd::lift_through(const FreydMorphism& incl,
                                                 const FreydMorphism& g) const {
    // unknowns: h = (h0, h1): g.src -> incl.src plus homotopy slack s: Z0 -> M1
    // equations: h0 . z = k . h1 (square) and incl.f0 . h0 + y1slack = g.f0
    const PresentedObject& z = g.src;
    const PresentedObject& k = incl.src;
    const PresentedObject& m = incl.tgt;
    Field f = c_->field();
    const auto& h0s = c_->hom_space(z.x0, k.x0);
    const auto& h1s = c_->hom_space(z.x1, k.x1);
    const auto& slack = c_->hom_space(z.x0, m.x1);
    const int n0 = h0s.dim(), n1 = h1s.dim(), ns = slack.dim();
    const int rows_sq = k.x0->total * z.x1->total;
    const int rows_lift = m.x0->total * z.x0->total;
    Mat sys(f, rows_sq + rows_lift, n0 + n1 + ns);
    for (int a = 0; a < n0; ++a) {
        Vec sq = h0s.basis[a].m.mul(z.x.m).flat();
        Vec lf = incl.f0.m.mul(h0s.basis[a].m).flat();
        for (int r = 0; r < rows_sq; ++r) sys.at(r, a) = sq[r];
        for (int r = 0; r < rows_lift; ++r) sys.at(rows_sq + r, a) = lf[r];
    }
    for (int b = 0; b < n1; ++b) {
        Vec sq = k.x.m.mul(h1s.basis[b].m).neg().flat();
        for (int r = 0; r < rows_sq; ++r) sys.at(r, n0 + b) = sq[r];
    }
    for (int s = 0; s < ns; ++s) {
        Vec lf = m.x.m.mul(slack.basis[s].m).flat();
        for (int r = 0; r < rows_lift; ++r) sys.at(rows_sq + r, n0 + n1 + s) = lf[r];
    }
    Vec rhs(rows_sq + rows_lift, f.zero());
    Vec gf = g.f0.m.flat();
    for (int r = 0; r < rows_lift; ++r) rhs[rows_sq + r] = gf[r];
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Vec u(sol->begin(), sol->begin() + n0);
    Vec w(sol->begin() + n0, sol->begin() + n0 + n1);
    return FreydMorphism{z, k, h0s.from_coords(u), h1s.from_coords(w)};
}

CResolution Freyd::projective_resolution(const PresentedObject& p, int n) const {
    if (n < 0) throw ConfigError("resolution length must be nonnegative");
    CResolution res;
    res.augment = canonical_epi(p);
    res.terms.push_back(p.x0);
    FreydMorphism current = res.augment;
    while (int(res.terms.size()) < n + 1) {
        KernelStep ks = kernel_presentation(current);
        res.terms.push_back(ks.k.x0);
        res.maps.push_back(ks.incl.f0);  // embed(K0) -> embed(P_prev)
        if (int(res.terms.size()) >= n + 1) break;
        res.terms.push_back(ks.k.x1);
        res.maps.push_back(ks.k.x);  // embed(K1) -> embed(K0)
        current = femb(ks.k.x);
    }
    return res;
}

int Freyd::ext_dim(const PresentedObject& p, const PresentedObject& q, int n) const {
    CResolution res = projective_resolution(p, n + 1);
    // Hom(embed(P_i), q) has dimension = realize-style quotient of hom(P_i, X0-of-q)
    auto hom_dims = [&](int i) { return hom(embed_obj(res.terms[i]), q); };
    auto d_matrix = [&](int i) {
        // precomposition with d_i: Hom(embed(P_{i-1}), q) -> Hom(embed(P_i), q)
        auto src = hom_dims(i - 1);
        auto tgt = hom_dims(i);
        Mat m(c_->field(), tgt->dim(), src->dim());
        for (int a = 0; a < src->dim(); ++a) {
            FreydMorphism comp = fcompose(src->basis()[a], femb(res.maps[i - 1]));
            m.set_col(a, tgt->class_coords(comp));
        }
        return m;
    };
    if (n == 0) {
        Mat d1 = d_matrix(1);
        return d1.cols - rank(d1);
    }
    Mat dn1 = d_matrix(n + 1);
    Mat dn = d_matrix(n);
    return (dn1.cols - rank(dn1)) - rank(dn);
}

}  // namespace hochcat
