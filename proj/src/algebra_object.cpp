#include "hochcat/algebra_object.hpp"

namespace hochcat {

FreydMorphism alg_mu(const Freyd& fr, const AlgebraObject& alg) {
    const Backend& c = fr.C();
    const FreydTensor& aa = fr.tensor(alg.a, alg.a);
    CMorphism f1 = c.add(c.compose(alg.mu10, aa.p10), c.compose(alg.mu01, aa.p01));
    return FreydMorphism{aa.obj, alg.a, CMorphism{aa.obj.x0, alg.a.x0, alg.mu0.m},
                         CMorphism{aa.obj.x1, alg.a.x1, f1.m}};
}

FreydMorphism alg_iota(const Freyd& fr, const AlgebraObject& alg) {
    const Backend& c = fr.C();
    return FreydMorphism{fr.unit_obj(), alg.a, alg.iota0,
                         c.zero_mor(c.zero_object(), alg.a.x1)};
}

FreydMorphism alg_pi(const Freyd& fr, const AlgebraObject& alg) { return fr.canonical_epi(alg.a); }

FreydMorphism alg_mu_r0(const Freyd& fr, const AlgebraObject& alg) {
    // A (x) embed(A0) -> A with components (mu10, mu0)
    const Backend& c = fr.C();
    PresentedObject e0 = fr.embed_obj(alg.a.x0);
    const FreydTensor& t = fr.tensor(alg.a, e0);
    CMorphism f1 = c.compose(alg.mu10, t.p10);  // the 01 summand has zero dimension
    return FreydMorphism{t.obj, alg.a, CMorphism{t.obj.x0, alg.a.x0, alg.mu0.m},
                         CMorphism{t.obj.x1, alg.a.x1, f1.m}};
}

FreydMorphism alg_mu_0l(const Freyd& fr, const AlgebraObject& alg) {
    const Backend& c = fr.C();
    PresentedObject e0 = fr.embed_obj(alg.a.x0);
    const FreydTensor& t = fr.tensor(e0, alg.a);
    CMorphism f1 = c.compose(alg.mu01, t.p01);
    return FreydMorphism{t.obj, alg.a, CMorphism{t.obj.x0, alg.a.x0, alg.mu0.m},
                         CMorphism{t.obj.x1, alg.a.x1, f1.m}};
}

bool pi_kills(const Freyd& fr, const AlgebraObject& alg, const CMorphism& v) {
    const Backend& c = fr.C();
    FreydMorphism m{fr.embed_obj(v.src), alg.a, v, c.zero_mor(c.zero_object(), alg.a.x1)};
    return fr.is_zero_class(m);
}

CheckReport check_axioms(const Freyd& fr, const AlgebraObject& alg) {
    FreydMorphism mu = alg_mu(fr, alg);
    if (!fr.commutes(mu)) return {false, "multiplication square does not commute"};
    FreydMorphism iota = alg_iota(fr, alg);
    if (!fr.commutes(iota)) return {false, "unit square does not commute"};

    FreydMorphism assoc = fr.assoc(alg.a, alg.a, alg.a);
    FreydMorphism lhs = fr.fcompose(mu, fr.tensor_mor(mu, fr.fid(alg.a)));
    FreydMorphism rhs = fr.fcompose(mu, fr.fcompose(fr.tensor_mor(fr.fid(alg.a), mu), assoc));
    if (!fr.same_class(lhs, rhs)) return {false, "associativity fails"};

    FreydMorphism lu = fr.unitor_left(alg.a);
    FreydMorphism left_unit =
        fr.fcompose(mu, fr.fcompose(fr.tensor_mor(iota, fr.fid(alg.a)), fr.finvert(lu)));
    if (!fr.same_class(left_unit, fr.fid(alg.a))) return {false, "left unitality fails"};
    FreydMorphism ru = fr.unitor_right(alg.a);
    FreydMorphism right_unit =
        fr.fcompose(mu, fr.fcompose(fr.tensor_mor(fr.fid(alg.a), iota), fr.finvert(ru)));
    if (!fr.same_class(right_unit, fr.fid(alg.a))) return {false, "right unitality fails"};
    return {true, ""};
}

CheckReport check_bimodule_axioms(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m) {
    FreydMorphism mu = alg_mu(fr, alg);
    FreydMorphism iota = alg_iota(fr, alg);
    const PresentedObject& a = alg.a;
    const PresentedObject& mm = m.m;

    // right module: rho . (rho (x) id) = rho . (id (x) mu) . assoc
    FreydMorphism lhs = fr.fcompose(m.rho, fr.tensor_mor(m.rho, fr.fid(a)));
    FreydMorphism rhs =
        fr.fcompose(m.rho, fr.fcompose(fr.tensor_mor(fr.fid(mm), mu), fr.assoc(mm, a, a)));
    if (!fr.same_class(lhs, rhs)) return {false, "right action is not associative"};
    FreydMorphism runit = fr.fcompose(
        m.rho, fr.fcompose(fr.tensor_mor(fr.fid(mm), iota), fr.finvert(fr.unitor_right(mm))));
    if (!fr.same_class(runit, fr.fid(mm))) return {false, "right action is not unital"};

    // left module: lambda . (id (x) lambda) . assoc = lambda . (mu (x) id)
    FreydMorphism llhs =
        fr.fcompose(m.lambda, fr.fcompose(fr.tensor_mor(fr.fid(a), m.lambda), fr.assoc(a, a, mm)));
    FreydMorphism lrhs = fr.fcompose(m.lambda, fr.tensor_mor(mu, fr.fid(mm)));
    if (!fr.same_class(llhs, lrhs)) return {false, "left action is not associative"};
    FreydMorphism lunit = fr.fcompose(
        m.lambda, fr.fcompose(fr.tensor_mor(iota, fr.fid(mm)), fr.finvert(fr.unitor_left(mm))));
    if (!fr.same_class(lunit, fr.fid(mm))) return {false, "left action is not unital"};

    // compatibility: rho . (lambda (x) id) = lambda . (id (x) rho) . assoc
    FreydMorphism clhs = fr.fcompose(m.rho, fr.tensor_mor(m.lambda, fr.fid(a)));
    FreydMorphism crhs =
        fr.fcompose(m.lambda, fr.fcompose(fr.tensor_mor(fr.fid(a), m.rho), fr.assoc(a, mm, a)));
    if (!fr.same_class(clhs, crhs)) return {false, "actions do not commute"};
    return {true, ""};
}

ABimodule regular_bimodule(const Freyd& fr, const AlgebraObject& alg) {
    FreydMorphism mu = alg_mu(fr, alg);
    return ABimodule{alg.a, mu, mu};
}

ABimodule free_bimodule(const Freyd& fr, const AlgebraObject& alg, const CObject& f) {
    PresentedObject ef = fr.embed_obj(f);
    const PresentedObject& a = alg.a;
    FreydMorphism mu = alg_mu(fr, alg);
    const FreydTensor& af = fr.tensor(a, ef);
    const FreydTensor& afa = fr.tensor(af.obj, a);

    FreydMorphism rho = fr.fcompose(
        fr.tensor_mor(fr.fid(af.obj), mu), fr.assoc(af.obj, a, a));
    // lambda: A((AF)A) -> (A(AF))A -> ((AA)F)A -> (AF)A
    FreydMorphism inner = fr.fcompose(fr.tensor_mor(mu, fr.fid(ef)),
                                      fr.finvert(fr.assoc(a, a, ef)));  // A(AF) -> AF
    FreydMorphism lam = fr.fcompose(fr.tensor_mor(inner, fr.fid(a)),
                                    fr.finvert(fr.assoc(a, af.obj, a)));
    return ABimodule{afa.obj, rho, lam};
}

ABimodule bimodule_direct_sum(const Freyd& fr, const AlgebraObject& alg,
                              const std::vector<ABimodule>& parts) {
    std::vector<PresentedObject> objs;
    for (const auto& p : parts) objs.push_back(p.m);
    FSum sum = fr.direct_sum(objs);
    ABimodule out;
    out.m = sum.obj;
    FreydMorphism rho = fr.fzero(fr.tensor(sum.obj, alg.a).obj, sum.obj);
    FreydMorphism lam = fr.fzero(fr.tensor(alg.a, sum.obj).obj, sum.obj);
    for (size_t i = 0; i < parts.size(); ++i) {
        rho = fr.fadd(rho, fr.fcompose(sum.inj[i],
                                       fr.fcompose(parts[i].rho,
                                                   fr.tensor_mor(sum.proj[i], fr.fid(alg.a)))));
        lam = fr.fadd(lam, fr.fcompose(sum.inj[i],
                                       fr.fcompose(parts[i].lambda,
                                                   fr.tensor_mor(fr.fid(alg.a), sum.proj[i]))));
    }
    out.rho = rho;
    out.lambda = lam;
    return out;
}

FreydMorphism adjunction_lift(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m,
                              const CObject& f, const FreydMorphism& phi) {
    PresentedObject ef = fr.embed_obj(f);
    const PresentedObject& a = alg.a;
    FreydMorphism step = fr.fcompose(m.rho, fr.tensor_mor(phi, fr.fid(a)));  // FA -> MA -> M
    return fr.fcompose(m.lambda,
                       fr.fcompose(fr.tensor_mor(fr.fid(a), step), fr.assoc(a, ef, a)));
}

FreydMorphism adjunction_drop(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m,
                              const CObject& f, const FreydMorphism& g) {
    PresentedObject ef = fr.embed_obj(f);
    const PresentedObject& a = alg.a;
    FreydMorphism iota = alg_iota(fr, alg);
    const FreydTensor& af = fr.tensor(a, ef);
    FreydMorphism left = fr.fcompose(fr.tensor_mor(iota, fr.fid(ef)),
                                     fr.finvert(fr.unitor_left(ef)));  // F -> AF
    FreydMorphism right = fr.fcompose(fr.tensor_mor(fr.fid(af.obj), iota),
                                      fr.finvert(fr.unitor_right(af.obj)));  // AF -> (AF)A
    return fr.fcompose(g, fr.fcompose(right, left));
}

BimoduleHom bimodule_hom(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m,
                         const ABimodule& n) {
    Field f = fr.C().field();
    BimoduleHom out;
    out.ambient = fr.hom(m.m, n.m);
    const int dim = out.ambient->dim();
    auto rtgt = fr.hom(fr.tensor(m.m, alg.a).obj, n.m);
    auto ltgt = fr.hom(fr.tensor(alg.a, m.m).obj, n.m);
    Mat sys(f, rtgt->dim() + ltgt->dim(), dim);
    for (int k = 0; k < dim; ++k) {
        const FreydMorphism& phi = out.ambient->basis()[k];
        FreydMorphism rdef = fr.fsub(fr.fcompose(phi, m.rho),
                                     fr.fcompose(n.rho, fr.tensor_mor(phi, fr.fid(alg.a))));
        FreydMorphism ldef = fr.fsub(fr.fcompose(phi, m.lambda),
                                     fr.fcompose(n.lambda, fr.tensor_mor(fr.fid(alg.a), phi)));
        Vec rc = rtgt->class_coords(rdef);
        Vec lc = ltgt->class_coords(ldef);
        for (int r = 0; r < rtgt->dim(); ++r) sys.at(r, k) = rc[r];
        for (int r = 0; r < ltgt->dim(); ++r) sys.at(rtgt->dim() + r, k) = lc[r];
    }
    out.basis = kernel_basis(sys);
    return out;
}

SeparabilityResult is_separable(const Freyd& fr, const AlgebraObject& alg) {
    Field f = fr.C().field();
    FreydMorphism mu = alg_mu(fr, alg);
    const PresentedObject& a = alg.a;
    const FreydTensor& taa = fr.tensor(a, a);
    // AA as a bimodule with outer actions
    ABimodule aa;
    aa.m = taa.obj;
    aa.rho = fr.fcompose(fr.tensor_mor(fr.fid(a), mu), fr.assoc(a, a, a));
    aa.lambda = fr.fcompose(fr.tensor_mor(mu, fr.fid(a)), fr.finvert(fr.assoc(a, a, a)));
    ABimodule reg = regular_bimodule(fr, alg);
    BimoduleHom homs = bimodule_hom(fr, alg, reg, aa);
    // solve mu . s = id over the bimodule hom space
    auto homaa = fr.hom(a, a);
    Mat sys(f, homaa->dim(), int(homs.basis.size()));
    for (size_t k = 0; k < homs.basis.size(); ++k) {
        FreydMorphism s = homs.ambient->from_class_coords(homs.basis[k]);
        sys.set_col(int(k), homaa->class_coords(fr.fcompose(mu, s)));
    }
    Vec rhs = homaa->class_coords(fr.fid(a));
    auto sol = solve(sys, rhs);
    SeparabilityResult out;
    if (!sol) return out;
    out.separable = true;
    Vec acc(homs.ambient->dim(), f.zero());
    for (size_t k = 0; k < homs.basis.size(); ++k)
        for (size_t j = 0; j < acc.size(); ++j)
            acc[j] = f.add(acc[j], f.mul((*sol)[k], homs.basis[k][j]));
    out.witness = homs.ambient->from_class_coords(acc);
    return out;
}

AlgebraObject cell_algebra(const Freyd& fr, const Vec& idempotent_coords) {
    const Backend& c = fr.C();
    if (c.kind() != BackendKind::Bimodule)
        throw ConfigError("cell_algebra requires the bimodule backend");
    Field f = c.field();
    const StructureAlgebra& b = c.algebra();
    const int d = b.dim;
    if (int(idempotent_coords.size()) != d) throw ConfigError("idempotent has wrong length");
    Vec e2 = b.multiply(f, idempotent_coords, idempotent_coords);
    if (!(e2 == idempotent_coords)) throw ConfigError("cell_algebra: e is not idempotent");
    bool nonzero = false;
    for (const auto& s : idempotent_coords) nonzero = nonzero || !s.is_zero();
    if (!nonzero) throw ConfigError("cell_algebra: e must be nonzero");

    // basis of eB: the echelon rows of {e b_j}, with coordinates in B
    RowSpan span(f, d);
    for (int j = 0; j < d; ++j) {
        Vec ej(d, f.zero());
        ej[j] = f.one();
        span.add(b.multiply(f, idempotent_coords, ej));
    }
    std::vector<Vec> ubasis(span.rows().begin(), span.rows().end());
    const int m = int(ubasis.size());
    RowSpan uspan(f, d, true);
    for (const auto& u : ubasis) uspan.add(u);

    // right multiplication on eB in the u-basis
    std::vector<Mat> rmul;
    for (int j = 0; j < d; ++j) {
        Vec ej(d, f.zero());
        ej[j] = f.one();
        Mat mj(f, m, m);
        for (int s = 0; s < m; ++s) {
            auto coords = uspan.coords(b.multiply(f, ubasis[s], ej));
            if (!coords) throw InternalError("eB is not closed under right multiplication");
            for (int t = 0; t < m; ++t) mj.at(t, s) = (*coords)[t];
        }
        rmul.push_back(std::move(mj));
    }

    // A = (eB)* (x) eB, dim m^2, flat index (r, s) = r*m + s
    std::vector<Mat> left, right;
    for (int j = 0; j < d; ++j) {
        left.push_back(kron(rmul[j].transpose(), Mat::identity(f, m)));
        right.push_back(kron(Mat::identity(f, m), rmul[j]));
    }
    CObject aobj = c.bimodule_object(std::move(left), std::move(right));

    // evaluation multiplication ((xi_r, u_s), (xi_t, u_v)) -> delta_st (xi_r, u_v)
    Mat ev(f, m * m, m * m * m * m);
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            for (int v = 0; v < m; ++v)
                ev.at(r * m + v, (r * m + s) * m * m + (s * m + v)) = f.one();
    const TensorReal& taa = c.tensor_obj(aobj, aobj);
    CMorphism mu0 = c.make_mor(taa.obj, aobj, ev.mul(taa.sect));

    // unit b -> sum_s (b . xi_s) (x) u_s
    Mat unit(f, m * m, d);
    for (int i = 0; i < d; ++i)
        for (int r = 0; r < m; ++r)
            for (int s = 0; s < m; ++s) unit.at(r * m + s, i) = rmul[i].at(s, r);
    CMorphism iota0 = c.make_mor(c.unit_object(), aobj, std::move(unit));

    CObject zero = c.zero_object();
    PresentedObject a{zero, aobj, c.zero_mor(zero, aobj)};
    const TensorReal& t01 = c.tensor_obj(aobj, zero);
    const TensorReal& t10 = c.tensor_obj(zero, aobj);
    AlgebraObject alg{a, mu0, c.zero_mor(t01.obj, zero), c.zero_mor(t10.obj, zero), iota0};
    return alg;
}

AlgebraObject graded_group_algebra(const Freyd& fr) {
    const Backend& c = fr.C();
    if (c.kind() != BackendKind::Graded)
        throw ConfigError("graded_group_algebra requires the graded backend");
    Field f = c.field();
    const GroupTable& g = c.group();
    CObject a0 = c.graded_object(std::vector<int>(g.n, 1));
    // contraction on the underlying tensor space: e_h (x) e_k -> e_{hk}
    Mat contract(f, g.n, g.n * g.n);
    for (int h = 0; h < g.n; ++h)
        for (int k = 0; k < g.n; ++k) contract.at(g.mul[h][k], h * g.n + k) = f.one();
    const TensorReal& taa = c.tensor_obj(a0, a0);
    CMorphism mu0 = c.make_mor(taa.obj, a0, contract.mul(taa.sect));
    Mat unit(f, g.n, 1);
    unit.at(g.identity, 0) = f.one();
    CMorphism iota0 = c.make_mor(c.unit_object(), a0, std::move(unit));
    CObject zero = c.zero_object();
    PresentedObject a{zero, a0, c.zero_mor(zero, a0)};
    return AlgebraObject{a, mu0, c.zero_mor(c.tensor_obj(a0, zero).obj, zero),
                         c.zero_mor(c.tensor_obj(zero, a0).obj, zero), iota0};
}

namespace {

// multiplication contraction of the backend algebra B(x)B -> B
CMorphism unit_multiplication(const Backend& c) {
    Field f = c.field();
    const StructureAlgebra& b = c.algebra();
    const int d = b.dim;
    Mat contract(f, d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (!b.cc(i, j, k).is_zero()) contract.at(k, i * d + j) = b.cc(i, j, k);
    const TensorReal& t = c.tensor_obj(c.unit_object(), c.unit_object());
    return c.make_mor(t.obj, c.unit_object(), contract.mul(t.sect));
}

}  // namespace

AlgebraObject cd_extension_algebra(const Freyd& fr) {
    const Backend& c = fr.C();
    if (c.kind() != BackendKind::Bimodule || !(c.algebra().c == dual_numbers(c.field()).c))
        throw ConfigError("cd_extension_algebra requires the bimodule backend over the dual numbers");
    Field f = c.field();
    CObject u = c.unit_object();
    Mat x(f, 2, 2);
    x.at(1, 0) = f.one();
    CMorphism a = c.make_mor(u, u, std::move(x));
    CMorphism mul = unit_multiplication(c);
    PresentedObject pres{u, u, a};
    return AlgebraObject{pres, mul, CMorphism{mul.src, u, mul.m}, CMorphism{mul.src, u, mul.m},
                         c.identity_mor(u)};
}

AlgebraObject unit_algebra(const Freyd& fr) {
    const Backend& c = fr.C();
    Field f = c.field();
    CObject u = c.unit_object();
    CObject zero = c.zero_object();
    CMorphism mu0 = c.kind() == BackendKind::Bimodule
                        ? unit_multiplication(c)
                        : CMorphism{c.tensor_obj(u, u).obj, u,
                                    c.left_unitor(u).m};
    PresentedObject a{zero, u, c.zero_mor(zero, u)};
    return AlgebraObject{a, mu0, c.zero_mor(c.tensor_obj(u, zero).obj, zero),
                         c.zero_mor(c.tensor_obj(zero, u).obj, zero), c.identity_mor(u)};
}

AlgebraObject inflate(const Freyd& fr, const AlgebraObject& alg, const StructureAlgebra& r) {
    const Backend& c = fr.C();
    Field f = c.field();
    auto rep = check_algebra(f, r);
    if (!rep.ok) throw ConfigError("inflation factor is not an algebra: " + rep.detail);
    Vec e0(r.dim, f.zero());
    e0[0] = f.one();
    if (!(r.unit_coords == e0))
        throw ConfigError("inflation requires the unit of R at basis index 0");

    const int d = r.dim;
    FSum sum = fr.direct_sum(std::vector<PresentedObject>(d, alg.a));
    FreydMorphism mu = alg_mu(fr, alg);

    const FreydTensor& tadad = fr.tensor(sum.obj, sum.obj);
    FreydMorphism muinfl = fr.fzero(tadad.obj, sum.obj);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            FreydMorphism pij = fr.tensor_mor(sum.proj[i], sum.proj[j]);
            FreydMorphism base = fr.fcompose(mu, pij);
            for (int k = 0; k < d; ++k) {
                const Scalar& s = r.cc(i, j, k);
                if (s.is_zero()) continue;
                muinfl = fr.fadd(muinfl, fr.fscale(fr.fcompose(sum.inj[k], base), s));
            }
        }
    CMorphism mu0 = muinfl.f0;
    CMorphism mu10 = fr.C().compose(muinfl.f1, tadad.j10);
    CMorphism mu01 = fr.C().compose(muinfl.f1, tadad.j01);
    CMorphism iota0 = c.compose(sum.inj[0].f0, alg.iota0);
    return AlgebraObject{sum.obj, mu0, mu01, mu10, iota0};
}

CocycleCheck check_two_cocycle(const Freyd& fr, const AlgebraObject& alg, const TwoCochain& g) {
    const Backend& c = fr.C();
    const CObject& a0 = alg.a.x0;
    const CObject& a1 = alg.a.x1;
    CMorphism assoc3 = c.associator(a0, a0, a0);

    // condition on A0^3
    CMorphism t1 = c.compose(alg.mu0, c.compose(c.tensor_mor(c.identity_mor(a0), g.g0), assoc3));
    CMorphism t2 = c.compose(g.g0, c.tensor_mor(alg.mu0, c.identity_mor(a0)));
    CMorphism t3 = c.compose(g.g0, c.compose(c.tensor_mor(c.identity_mor(a0), alg.mu0), assoc3));
    CMorphism t4 = c.compose(alg.mu0, c.tensor_mor(g.g0, c.identity_mor(a0)));
    CMorphism v1 = c.add(c.sub(t1, t2), c.sub(t3, t4));
    if (!pi_kills(fr, alg, v1)) return {false, "square condition on A0.A0.A0"};

    // condition on A0 A1
    CMorphism v2 = c.sub(c.add(c.compose(g.g0, c.tensor_mor(c.identity_mor(a0), alg.a.x)),
                               c.compose(g.g1, alg.mu01)),
                         c.compose(alg.mu0, c.tensor_mor(c.identity_mor(a0), g.g1)));
    if (!pi_kills(fr, alg, v2)) return {false, "mixed condition on A0.A1"};

    // condition on A1 A0
    CMorphism v3 = c.sub(c.add(c.compose(g.g0, c.tensor_mor(alg.a.x, c.identity_mor(a0))),
                               c.compose(g.g1, alg.mu10)),
                         c.compose(alg.mu0, c.tensor_mor(g.g1, c.identity_mor(a0))));
    if (!pi_kills(fr, alg, v3)) return {false, "mixed condition on A1.A0"};

    // condition on A2: g1 . b dies under pi
    if (a1->total > 0) {
        KernelStep ks = fr.kernel_presentation(fr.femb(alg.a.x));
        CMorphism v4 = c.compose(g.g1, ks.incl.f0);
        if (!pi_kills(fr, alg, v4)) return {false, "extension condition on A2"};
    }
    return {true, ""};
}

namespace {

// solve a . h = v over the hom space h: src(v) -> A1; internal consistency error if unsolvable
CMorphism solve_through_a(const Freyd& fr, const AlgebraObject& alg, const CMorphism& v,
                          const char* what) {
    const Backend& c = fr.C();
    Field f = c.field();
    if (alg.a.x1->total == 0) {
        if (!v.m.is_zero())
            throw InternalError(std::string("NO-FACTORIZATION: ") + what + " does not vanish");
        return c.zero_mor(v.src, alg.a.x1);
    }
    const auto& hs = c.hom_space(v.src, alg.a.x1);
    RowSpan span(f, alg.a.x0->total * v.src->total, true);
    for (const auto& h : hs.basis) span.add(alg.a.x.m.mul(h.m).flat());
    auto coords = span.coords(v.m.flat());
    if (!coords)
        throw InternalError(std::string("NO-FACTORIZATION: ") + what + " does not factor through a");
    CMorphism out = c.zero_mor(v.src, alg.a.x1);
    for (size_t b = 0; b < coords->size(); ++b)
        if (!(*coords)[b].is_zero()) out = c.add(out, c.scaled(hs.basis[b], (*coords)[b]));
    return out;
}

}  // namespace

DeformResult deform(const Freyd& fr, const AlgebraObject& alg, const TwoCochain& g) {
    const Backend& c = fr.C();
    Field f = c.field();
    const CObject& a0 = alg.a.x0;

    // mu0 must define a strictly associative multiplication on A0
    CMorphism assoc3 = c.associator(a0, a0, a0);
    CMorphism strict_lhs = c.compose(alg.mu0, c.tensor_mor(alg.mu0, c.identity_mor(a0)));
    CMorphism strict_rhs =
        c.compose(alg.mu0, c.compose(c.tensor_mor(c.identity_mor(a0), alg.mu0), assoc3));
    if (!(strict_lhs.m == strict_rhs.m))
        throw ConfigError("deform requires mu0 to be strictly associative on A0");

    DeformResult out;
    CocycleCheck cc = check_two_cocycle(fr, alg, g);
    if (!cc.ok) {
        out.error = "NO-COCYCLE: " + cc.which;
        return out;
    }

    // factorization witnesses
    CMorphism v2 = c.sub(c.add(c.compose(g.g0, c.tensor_mor(c.identity_mor(a0), alg.a.x)),
                               c.compose(g.g1, alg.mu01)),
                         c.compose(alg.mu0, c.tensor_mor(c.identity_mor(a0), g.g1)));
    out.h01 = solve_through_a(fr, alg, v2, "h01 equation");
    CMorphism v3 = c.sub(c.add(c.compose(g.g0, c.tensor_mor(alg.a.x, c.identity_mor(a0))),
                               c.compose(g.g1, alg.mu10)),
                         c.compose(alg.mu0, c.tensor_mor(g.g1, c.identity_mor(a0))));
    out.h10 = solve_through_a(fr, alg, v3, "h10 equation");
    CMorphism t1 = c.compose(alg.mu0, c.compose(c.tensor_mor(c.identity_mor(a0), g.g0), assoc3));
    CMorphism t2 = c.compose(g.g0, c.tensor_mor(alg.mu0, c.identity_mor(a0)));
    CMorphism t3 = c.compose(g.g0, c.compose(c.tensor_mor(c.identity_mor(a0), alg.mu0), assoc3));
    CMorphism t4 = c.compose(alg.mu0, c.tensor_mor(g.g0, c.identity_mor(a0)));
    CMorphism v1 = c.add(c.sub(t1, t2), c.sub(t3, t4));
    out.eta1 = solve_through_a(fr, alg, v1, "associativity nullhomotopy");

    // the doubled algebra A^g over k[t]/(t^2) with basis {1, t}
    DirectSum s0 = c.direct_sum({alg.a.x0, alg.a.x0});
    DirectSum s1 = c.direct_sum({alg.a.x1, alg.a.x1});
    CMorphism at = c.zero_mor(s1.obj, s0.obj);
    for (int s = 0; s < 2; ++s)
        at = c.add(at, c.compose(s0.inj[s], c.compose(alg.a.x, s1.proj[s])));
    at = c.sub(at, c.compose(s0.inj[1], c.compose(g.g1, s1.proj[0])));
    PresentedObject apres{s1.obj, s0.obj, at};

    auto twisted = [&](const CMorphism& base, const CMorphism& extra, const DirectSum& right,
                       const DirectSum& tgt) {
        // base (x) m + extra (x) tm on the doubled realizations
        CMorphism out0 =
            c.compose(tgt.inj[0], c.compose(base, c.tensor_mor(s0.proj[0], right.proj[0])));
        out0 = c.add(out0, c.compose(tgt.inj[1],
                                     c.compose(base, c.add(c.tensor_mor(s0.proj[0], right.proj[1]),
                                                           c.tensor_mor(s0.proj[1], right.proj[0])))));
        out0 = c.add(out0, c.compose(tgt.inj[1],
                                     c.compose(extra, c.tensor_mor(s0.proj[0], right.proj[0]))));
        return out0;
    };
    CMorphism mu0t = twisted(alg.mu0, g.g0, s0, s0);
    CMorphism mu01t = twisted(alg.mu01, out.h01, s1, s1);
    CMorphism mu10t = c.zero_mor(c.tensor_obj(s1.obj, s0.obj).obj, s1.obj);
    {
        // mirrored version: left factor runs over A1 components
        CMorphism base = alg.mu10;
        CMorphism extra = out.h10;
        mu10t = c.compose(s1.inj[0], c.compose(base, c.tensor_mor(s1.proj[0], s0.proj[0])));
        mu10t = c.add(mu10t, c.compose(s1.inj[1],
                                       c.compose(base, c.add(c.tensor_mor(s1.proj[0], s0.proj[1]),
                                                             c.tensor_mor(s1.proj[1], s0.proj[0])))));
        mu10t = c.add(mu10t, c.compose(s1.inj[1],
                                       c.compose(extra, c.tensor_mor(s1.proj[0], s0.proj[0]))));
    }
    CMorphism iotat = c.compose(s0.inj[0], alg.iota0);
    out.deformed = AlgebraObject{apres, mu0t, mu01t, mu10t, iotat};
    out.axioms = check_axioms(fr, out.deformed);
    out.ok = true;
    return out;
}

}  // namespace hochcat
