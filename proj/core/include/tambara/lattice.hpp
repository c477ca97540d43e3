#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tambara {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major; lattices are row spans

// Row Hermite form of the row span: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot), zero rows dropped. Canonical for the lattice.
IntMat hermite_rows(IntMat rows, std::size_t ncols);

// Same reduction, also returning U with U * input = [H; 0] (U unimodular).
struct HermiteWithTransform {
  IntMat h;          // nonzero rows
  IntMat transform;  // rows.size() x rows.size()
  std::size_t rank = 0;
};
HermiteWithTransform hermite_with_transform(const IntMat& rows, std::size_t ncols);

// Reduce v modulo a Hermite basis; returns the canonical residue.
IntVec lattice_reduce(const IntMat& hnf, IntVec v);
bool lattice_contains(const IntMat& hnf, const IntVec& v);
// Coefficients c with v = sum c_i hnf_i, when v lies in the lattice.
std::optional<IntVec> lattice_coordinates(const IntMat& hnf, const IntVec& v);

IntMat lattice_sum(const IntMat& a, const IntMat& b, std::size_t ncols);
IntMat lattice_intersection(const IntMat& a, const IntMat& b, std::size_t ncols);
bool lattice_subset(const IntMat& a, const IntMat& b);  // span a within span b (b in Hermite form)

// Left kernel {x : x M = 0} as a Hermite basis; M has m rows of length n.
IntMat left_kernel(const IntMat& m, std::size_t ncols);
// {x in Z^r : x M in span(L)}; M is r x s, L Hermite of width s.
IntMat lattice_preimage(const IntMat& m, std::size_t ncols, const IntMat& l);

IntVec vec_mat(const IntVec& x, const IntMat& m, std::size_t ncols);  // x M
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(std::int64_t k, const IntVec& a);
bool vec_is_zero(const IntVec& a);

// U A V = D with D diagonal (d_1 | d_2 | ...), U and V unimodular.
struct SmithForm {
  IntMat d;
  IntMat u;
  IntMat v;
  IntMat v_inverse;
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors
};
SmithForm smith_form(const IntMat& a, std::size_t ncols);

// Absolute determinant of a square matrix through its Hermite form.
std::int64_t abs_determinant(const IntMat& m);

IntMat identity_matrix(std::size_t n);

}  // namespace tambara
