#pragma once

#include <vector>

#include "mlab/rng.hpp"
#include "mlab/types.hpp"

namespace mlab {

/// Lie-algebra value in the defining matrix representation.
struct AlgebraElement {
  Mat m;
  StructureGroup tag;

  AlgebraElement(Mat mat, StructureGroup t);
  static AlgebraElement zero(StructureGroup t);
};

/// Invertible group value in the defining matrix representation.
struct GroupElement {
  Mat m;
  StructureGroup tag;

  GroupElement(Mat mat, StructureGroup t);
  static GroupElement identity(StructureGroup t);
  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& o) const;
};

/// Characteristic-polynomial coefficients (c_1..c_n, leading 1 omitted);
/// labels the conjugacy class of a holonomy.
struct ConjugacyInvariant {
  std::vector<cplx> coeffs;

  double distance(const ConjugacyInvariant& o) const;
};

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
cplx trace_pair(const AlgebraElement& x, const AlgebraElement& y);
GroupElement exp_map(const AlgebraElement& x);
ConjugacyInvariant conjugacy_invariant(const GroupElement& g);

/// Operator norm of prod_i [A_i,B_i] * prod_j M_j - id, the fundamental-group
/// relation defect for a genus-g surface with holes.
double relation_defect(const std::vector<std::pair<GroupElement, GroupElement>>& handles,
                       const std::vector<GroupElement>& holes);

double operator_norm(const Mat& m);

/// Real basis of the Lie algebra (su(n): traceless anti-Hermitian;
/// gl(n,C): elementary matrices; abelian: one generator).
std::vector<AlgebraElement> algebra_basis(StructureGroup g);

/// Pseudorandom algebra element, operator norm <= 1.
AlgebraElement random_algebra(Rng& rng, StructureGroup g);
GroupElement random_group(Rng& rng, StructureGroup g);

}  // namespace mlab
