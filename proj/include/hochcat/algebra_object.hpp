#pragma once

#include "hochcat/freyd.hpp"

namespace hochcat {

// Algebra 1-morphism with componentwise structure maps: A presented as
// A1 -a-> A0, multiplication (mu0, (mu01, mu10)) and unit representative
// iota0: 1 -> A0.
struct AlgebraObject {
    PresentedObject a;  // A1 -> A0
    CMorphism mu0;      // R(A0,A0) -> A0
    CMorphism mu01;     // R(A0,A1) -> A1
    CMorphism mu10;     // R(A1,A0) -> A1
    CMorphism iota0;    // 1 -> A0
};

struct ABimodule {
    PresentedObject m;
    FreydMorphism rho;     // m (x) A -> m
    FreydMorphism lambda;  // A (x) m -> m
};

// A lifted degree-2 cochain; whether it is a cocycle is a property checked by
// the Hochschild layer.
struct TwoCochain {
    CMorphism g0;  // R(A0,A0) -> A0
    CMorphism g1;  // A1 -> A0
};

// derived freyd-level structure maps
FreydMorphism alg_mu(const Freyd& fr, const AlgebraObject& alg);     // AA -> A
FreydMorphism alg_iota(const Freyd& fr, const AlgebraObject& alg);   // embed(1) -> A
FreydMorphism alg_pi(const Freyd& fr, const AlgebraObject& alg);     // embed(A0) -> A
FreydMorphism alg_mu_r0(const Freyd& fr, const AlgebraObject& alg);  // A . embed(A0) -> A
FreydMorphism alg_mu_0l(const Freyd& fr, const AlgebraObject& alg);  // embed(A0) . A -> A

// true iff pi . v is the zero class, i.e. v factors through a
bool pi_kills(const Freyd& fr, const AlgebraObject& alg, const CMorphism& v);

CheckReport check_axioms(const Freyd& fr, const AlgebraObject& alg);
CheckReport check_bimodule_axioms(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m);

ABimodule regular_bimodule(const Freyd& fr, const AlgebraObject& alg);
ABimodule free_bimodule(const Freyd& fr, const AlgebraObject& alg, const CObject& f);
ABimodule bimodule_direct_sum(const Freyd& fr, const AlgebraObject& alg,
                              const std::vector<ABimodule>& parts);

// free-forgetful adjunction between maps F -> M and bimodule maps AFA -> M
FreydMorphism adjunction_lift(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m,
                              const CObject& f, const FreydMorphism& phi);
FreydMorphism adjunction_drop(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m,
                              const CObject& f, const FreydMorphism& g);

// class-space of bimodule maps m -> n, as coordinates in the ambient freyd hom
struct BimoduleHom {
    std::shared_ptr<const FreydHom> ambient;
    std::vector<Vec> basis;
};
BimoduleHom bimodule_hom(const Freyd& fr, const AlgebraObject& alg, const ABimodule& m,
                         const ABimodule& n);

struct SeparabilityResult {
    bool separable = false;
    FreydMorphism witness;  // s: A -> AA with mu . s = id when separable
};
SeparabilityResult is_separable(const Freyd& fr, const AlgebraObject& alg);

// constructors
AlgebraObject cell_algebra(const Freyd& fr, const Vec& idempotent_coords);
AlgebraObject graded_group_algebra(const Freyd& fr);
AlgebraObject cd_extension_algebra(const Freyd& fr);
AlgebraObject unit_algebra(const Freyd& fr);
AlgebraObject inflate(const Freyd& fr, const AlgebraObject& alg, const StructureAlgebra& r);

struct CocycleCheck {
    bool ok = true;
    std::string which;  // name of the first violated condition
};
CocycleCheck check_two_cocycle(const Freyd& fr, const AlgebraObject& alg, const TwoCochain& g);

struct DeformResult {
    bool ok = false;
    std::string error;  // "NO-COCYCLE" when the pair fails the cocycle test
    AlgebraObject deformed;
    CMorphism h01, h10, eta1;
    CheckReport axioms;
};
DeformResult deform(const Freyd& fr, const AlgebraObject& alg, const TwoCochain& g);

}  // namespace hochcat
