#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "hochcat/structure_algebra.hpp"

namespace hochcat {

enum class BackendKind { Bimodule, Graded };

// A 1-morphism of the ambient monoidal category, realized as linear data:
// bimodule backend = a B-B-bimodule with one action matrix per basis element
// of B on each side; graded backend = a G-graded space with one dimension per
// group element. Action matrices of tensor realizations are computed on first
// use.
class CObjectData {
public:
    BackendKind kind = BackendKind::Bimodule;
    int total = 0;
    std::vector<int> gdims;  // graded backend only

    const std::vector<Mat>& left() const;
    const std::vector<Mat>& right() const;

    // construction helpers (Backend only)
    std::vector<Mat> left_, right_;
    std::function<std::pair<std::vector<Mat>, std::vector<Mat>>()> lazy_;

private:
    mutable std::once_flag once_;
    void ensure() const;
};

using CObject = std::shared_ptr<const CObjectData>;

// A 2-morphism: one total matrix (tgt.total x src.total). In the graded
// backend only the degree-diagonal blocks may be nonzero.
struct CMorphism {
    CObject src, tgt;
    Mat m;
};

struct TensorReal {
    CObject obj;
    Mat proj;  // x (x)_k y -> realization
    Mat sect;  // realization -> x (x)_k y, with proj * sect = id
};

struct DirectSum {
    CObject obj;
    std::vector<CMorphism> inj;
    std::vector<CMorphism> proj;
};

// Basis of a hom space plus exact coordinate extraction with respect to it.
class HomSpace {
public:
    std::vector<CMorphism> basis;
    int dim() const { return int(basis.size()); }
    Vec coords(const CMorphism& m) const;  // throws InternalError if not in span
    CMorphism from_coords(const Vec& c) const;

    CObject src, tgt;
    Field field{0};
    // graded: coordinates are the stacked diagonal blocks; bimodule: tracked span
    bool direct_blocks = false;
    std::shared_ptr<RowSpan> span;
};

// One concretely realized finitary monoidal category C(i,i).
class Backend {
public:
    static std::shared_ptr<Backend> bimodule(Field f, StructureAlgebra b,
                                             std::optional<std::vector<Vec>> center_sub = {});
    static std::shared_ptr<Backend> graded(Field f, GroupTable g);

    Field field() const { return field_; }
    BackendKind kind() const { return kind_; }
    const StructureAlgebra& algebra() const { return B_; }
    const std::vector<Vec>& center_sub() const { return X_; }
    const GroupTable& group() const { return G_; }
    const std::vector<CObject>& generators() const { return generators_; }

    CObject unit_object() const { return unit_; }
    CObject zero_object() const { return zero_; }
    CObject bimodule_object(std::vector<Mat> left, std::vector<Mat> right) const;
    CObject graded_object(std::vector<int> dims) const;
    bool is_unit_object(const CObject& x) const;

    CMorphism make_mor(CObject src, CObject tgt, Mat m) const;  // validates intertwining
    CMorphism mor(CObject src, CObject tgt, Mat m) const;       // trusted internal path
    CMorphism identity_mor(const CObject& x) const;
    CMorphism zero_mor(const CObject& src, const CObject& tgt) const;
    CMorphism compose(const CMorphism& g, const CMorphism& f) const;
    CMorphism add(const CMorphism& a, const CMorphism& b) const;
    CMorphism sub(const CMorphism& a, const CMorphism& b) const;
    CMorphism scaled(const CMorphism& a, const Scalar& s) const;
    CMorphism invert(const CMorphism& a) const;
    bool mor_valid(const CMorphism& m) const;

    const TensorReal& tensor_obj(const CObject& x, const CObject& y) const;
    CMorphism tensor_mor(const CMorphism& f, const CMorphism& g) const;
    DirectSum direct_sum(const std::vector<CObject>& parts) const;

    const HomSpace& hom_space(const CObject& x, const CObject& y) const;
    std::vector<CMorphism> hom_basis(const CObject& x, const CObject& y) const {
        return hom_space(x, y).basis;
    }

    CMorphism left_unitor(const CObject& x) const;   // R(1, x) -> x
    CMorphism right_unitor(const CObject& x) const;  // R(x, 1) -> x
    CMorphism associator(const CObject& x, const CObject& y, const CObject& z) const;

private:
    Backend() = default;

    Field field_{0};
    BackendKind kind_ = BackendKind::Bimodule;
    StructureAlgebra B_;
    std::vector<Vec> X_;
    std::vector<Mat> unit_left_, unit_right_;
    GroupTable G_;
    CObject unit_, zero_;
    std::vector<CObject> generators_;

    Mat left_contract(const CObject& x) const;   // B (x)_k x -> x
    Mat right_contract(const CObject& x) const;  // x (x)_k B -> x
    std::vector<CMorphism> solve_hom(const CObject& x, const CObject& y) const;
    std::vector<CMorphism> solve_hom_naive(const CObject& x, const CObject& y) const;

    mutable std::mutex cache_mu_;
    using Key = std::pair<const CObjectData*, const CObjectData*>;
    mutable std::map<Key, TensorReal> tensor_cache_;
    mutable std::map<Key, std::shared_ptr<const HomSpace>> hom_cache_;
    mutable std::map<Key, std::vector<CObject>> keepalive_;
};

}  // namespace hochcat
