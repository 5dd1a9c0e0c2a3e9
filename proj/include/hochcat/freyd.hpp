#pragma once
#include <list>

#include "hochcat/backend.hpp"

namespace hochcat {

// An object of the projective abelianization: a morphism X1 -> X0 of the
// backend, standing for coker(x).
struct PresentedObject {
    CObject x1, x0;
    CMorphism x;
};

// A commuting square (f0, f1); the class of (f0, f1) is zero iff f0 = y . h
// for some h: X0 -> Y1.
struct FreydMorphism {
    PresentedObject src, tgt;
    CMorphism f0, f1;
};

// Tensor of presented objects, with the split structure of the degree-1 part
// [ R(X1,Y0) | R(X0,Y1) ].
struct FreydTensor {
    PresentedObject obj;
    CMorphism j10, p10, j01, p01;
};

// Class space of Hom(p, q) in the abelianization: commuting pairs modulo the
// homotopy subspace, with homotopy-reduced representatives.
class FreydHom {
public:
    int dim() const { return int(reps_.size()); }
    const std::vector<FreydMorphism>& basis() const { return reps_; }
    Vec class_coords(const FreydMorphism& m) const;
    FreydMorphism from_class_coords(const Vec& v) const;

// built by Freyd::hom
    PresentedObject p_, q_;
    const HomSpace *h00_ = nullptr, *h11_ = nullptr;
    std::shared_ptr<RowSpan> zspan_;    // homotopy subspace, (u|w) coordinates
    std::shared_ptr<RowSpan> repspan_;  // tracked span of the reduced representatives
    std::vector<FreydMorphism> reps_;
};

struct KernelStep {
    PresentedObject k;
    FreydMorphism incl;  // into the source of the kernelled map
};

// Realization of a presented object at the backend generator list:
// V_T = hom(T, X0) / x . hom(T, X1) for each generator T.
struct Realization {
    std::vector<int> dims;
    std::vector<Quotient> quo;  // over hom(T, X0) coordinates
};

struct CResolution {
    std::vector<CObject> terms;   // P_0 .. P_n
    std::vector<CMorphism> maps;  // d_i: P_i -> P_{i-1}, i >= 1
    FreydMorphism augment;        // embed(P_0) -> p
};

struct FSum {
    PresentedObject obj;
    std::vector<FreydMorphism> inj;
    std::vector<FreydMorphism> proj;
};

// The abelianization layer. Holds per-run caches; all results deterministic.
class Freyd {
public:
    explicit Freyd(std::shared_ptr<const Backend> c) : c_(std::move(c)) {}
    const Backend& C() const { return *c_; }
    std::shared_ptr<const Backend> backend() const { return c_; }

    PresentedObject embed_obj(const CObject& x) const;
    PresentedObject zero_obj() const;
    PresentedObject unit_obj() const { return embed_obj(c_->unit_object()); }

    FreydMorphism femb(const CMorphism& m) const;
    FreydMorphism fid(const PresentedObject& p) const;
    FreydMorphism fzero(const PresentedObject& p, const PresentedObject& q) const;
    FreydMorphism fcompose(const FreydMorphism& g, const FreydMorphism& f) const;
    FreydMorphism fadd(const FreydMorphism& a, const FreydMorphism& b) const;
    FreydMorphism fsub(const FreydMorphism& a, const FreydMorphism& b) const;
    FreydMorphism fneg(const FreydMorphism& a) const;
    FreydMorphism fscale(const FreydMorphism& a, const Scalar& s) const;
    bool commutes(const FreydMorphism& m) const;
    bool is_zero_class(const FreydMorphism& m) const;
    bool same_class(const FreydMorphism& a, const FreydMorphism& b) const;

    const FreydTensor& tensor(const PresentedObject& p, const PresentedObject& q) const;
    FreydMorphism tensor_mor(const FreydMorphism& f, const FreydMorphism& g) const;
    FreydMorphism unitor_left(const PresentedObject& p) const;   // 1 (x) p -> p
    FreydMorphism unitor_right(const PresentedObject& p) const;  // p (x) 1 -> p
    FreydMorphism assoc(const PresentedObject& p, const PresentedObject& q,
                        const PresentedObject& r) const;  // (pq)r -> p(qr)
    FreydMorphism finvert(const FreydMorphism& iso) const;

    FreydMorphism canonical_epi(const PresentedObject& p) const;
    FSum direct_sum(const std::vector<PresentedObject>& parts) const;

    std::shared_ptr<const FreydHom> hom(const PresentedObject& p, const PresentedObject& q) const;
    std::vector<FreydMorphism> hom_basis(const PresentedObject& p, const PresentedObject& q) const {
        return hom(p, q)->basis();
    }

    const Realization& realize(const PresentedObject& p) const;
    // induced map on realizations at generator index gi
    Mat realize_map(const FreydMorphism& m, int gi) const;
    // contravariant action of u: T_i -> T_j on realizations: V_{T_j}(p) -> V_{T_i}(p)
    Mat realize_gen_map(const PresentedObject& p, int gj, int gi, const CMorphism& u) const;

    KernelStep kernel_presentation(const FreydMorphism& f) const;
    // h with incl . h = g as classes; incl must be realization-injective
    std::optional<FreydMorphism> lift_through(const FreydMorphism& incl, const FreydMorphism& g) const;

    CResolution projective_resolution(const PresentedObject& p, int n) const;
    int ext_dim(const PresentedObject& p, const PresentedObject& q, int n) const;

private:
    std::shared_ptr<const Backend> c_;

    struct PairKey {
        const void* a1;
        const void* a0;
        const void* b1;
        const void* b0;
        auto operator<=>(const PairKey&) const = default;
    };
    mutable std::mutex mu_;
    mutable std::map<PairKey, std::list<std::pair<std::pair<Mat, Mat>, FreydTensor>>> tensor_cache_;
    mutable std::map<PairKey, std::list<std::pair<std::pair<Mat, Mat>, std::shared_ptr<FreydHom>>>>
        hom_cache_;
    mutable std::map<std::pair<const void*, const void*>, std::list<std::pair<Mat, Realization>>>
        realize_cache_;
};

}  // namespace hochcat
