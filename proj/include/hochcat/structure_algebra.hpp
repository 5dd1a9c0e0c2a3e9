#pragma once

#include <string>
#include <vector>

#include "hochcat/matrix.hpp"

namespace hochcat {

// Finite-dimensional associative unital algebra given by structure constants
// r_i r_j = sum_k c[i][j][k] r_k and the coordinates of 1 in the chosen basis.
struct StructureAlgebra {
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<Scalar> c;  // c[(i*dim + j)*dim + k]
    Vec unit_coords;

    const Scalar& cc(int i, int j, int k) const { return c[(size_t(i) * dim + j) * dim + k]; }
    Scalar& cc(int i, int j, int k) { return c[(size_t(i) * dim + j) * dim + k]; }

    // matrix of left multiplication by basis element i (columns index the argument)
    Mat left_mult(Field f, int i) const;
    // matrix of right multiplication by basis element i
    Mat right_mult(Field f, int i) const;
    Mat left_mult_by(Field f, const Vec& coords) const;
    Vec multiply(Field f, const Vec& x, const Vec& y) const;
};

struct CheckReport {
    bool ok = true;
    std::string detail;
};

CheckReport check_algebra(Field f, const StructureAlgebra& r);

// Hochschild cohomology of r in degree n <= 3 from the standard cochain
// complex Hom(r^{\otimes n}, r) with the classical differential.
int classical_hh_dim(Field f, const StructureAlgebra& r, int n);

struct GroupTable {
    int n = 0;
    std::vector<std::vector<int>> mul;  // mul[g][h]
    int identity = 0;

    int inverse(int g) const;
    static GroupTable cyclic(int n);
    static GroupTable from_table(const std::vector<std::vector<int>>& mul);  // validates
};

StructureAlgebra dual_numbers(Field f);
StructureAlgebra matrix_algebra(Field f, int n);
StructureAlgebra scalar_algebra(Field f);  // the ground field as a 1-dim algebra
StructureAlgebra group_algebra(Field f, const GroupTable& g);
StructureAlgebra cyclic_group(Field f, int n);

// Basis of the centre {z : zr = rz for all r}, as coordinate vectors.
std::vector<Vec> center_basis(Field f, const StructureAlgebra& r);

// True iff the multiplication map splits as a bimodule map r -> r (x) r,
// i.e. a separability idempotent exists (found by a linear solve).
bool is_separable_algebra(Field f, const StructureAlgebra& r);

}  // namespace hochcat
