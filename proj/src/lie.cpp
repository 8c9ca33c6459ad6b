#include "mlab/lie.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace mlab {

namespace {

void require_same(const StructureGroup& a, const StructureGroup& b, const char* what) {
  if (!(a == b)) throw TagMismatch(std::string(what) + ": structure group mismatch");
}

void require_square(const Mat& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument(std::string(what) + ": matrix size does not match tag");
}

}  // namespace

double operator_norm(const Mat& m) {
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  return m.jacobiSvd().singularValues()(0);
}

AlgebraElement::AlgebraElement(Mat mat, StructureGroup t) : m(std::move(mat)), tag(t) {
  require_square(m, tag.n, "AlgebraElement");
  if (tag.abelian() && tag.n != 1)
    throw std::invalid_argument("AlgebraElement: abelian tags are 1x1");
  if (tag.kind == GroupKind::CompactUnitary) {
    double skew = (m + m.adjoint()).cwiseAbs().maxCoeff();
    if (skew > 1e-12 * (1.0 + m.cwiseAbs().maxCoeff()))
      throw std::invalid_argument("AlgebraElement: not anti-Hermitian");
  }
}

AlgebraElement AlgebraElement::zero(StructureGroup t) {
  return AlgebraElement(Mat::Zero(t.n, t.n), t);
}

GroupElement::GroupElement(Mat mat, StructureGroup t) : m(std::move(mat)), tag(t) {
  require_square(m, tag.n, "GroupElement");
  double ad = std::abs(m.determinant());
  if (!(ad > 0.0)) throw std::invalid_argument("GroupElement: singular matrix");
  if (tag.compact()) {
    double u = (m.adjoint() * m - Mat::Identity(tag.n, tag.n)).cwiseAbs().maxCoeff();
    if (u > 1e-12 * tag.n) throw std::invalid_argument("GroupElement: not unitary");
  }
}

GroupElement GroupElement::identity(StructureGroup t) {
  return GroupElement(Mat::Identity(t.n, t.n), t);
}

GroupElement GroupElement::inverse() const { return GroupElement(m.inverse(), tag); }

GroupElement GroupElement::operator*(const GroupElement& o) const {
  require_same(tag, o.tag, "GroupElement::operator*");
  return GroupElement(m * o.m, tag);
}

double ConjugacyInvariant::distance(const ConjugacyInvariant& o) const {
  if (coeffs.size() != o.coeffs.size()) return 1e300;
  double d = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) d = std::max(d, std::abs(coeffs[i] - o.coeffs[i]));
  return d;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x.tag, y.tag, "bracket");
  return AlgebraElement(x.m * y.m - y.m * x.m, x.tag);
}

cplx trace_pair(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x.tag, y.tag, "trace_pair");
  return (x.m * y.m).trace();
}

GroupElement exp_map(const AlgebraElement& x) {
  if (!x.m.allFinite()) throw std::invalid_argument("exp_map: non-finite entries");
  return GroupElement(x.m.exp(), x.tag);
}

ConjugacyInvariant conjugacy_invariant(const GroupElement& g) {
  // Faddeev-LeVerrier recursion for the characteristic polynomial.
  const int n = g.tag.n;
  Mat M = g.m;
  ConjugacyInvariant inv;
  inv.coeffs.resize(n);
  cplx c = -M.trace();
  inv.coeffs[0] = c;
  for (int k = 2; k <= n; ++k) {
    M = g.m * (M + c * Mat::Identity(n, n));
    c = -M.trace() / static_cast<double>(k);
    inv.coeffs[k - 1] = c;
  }
  return inv;
}

double relation_defect(const std::vector<std::pair<GroupElement, GroupElement>>& handles,
                       const std::vector<GroupElement>& holes) {
  StructureGroup tag;
  if (!handles.empty())
    tag = handles.front().first.tag;
  else if (!holes.empty())
    tag = holes.front().tag;
  else
    return 0.0;
  Mat prod = Mat::Identity(tag.n, tag.n);
  for (const auto& [a, b] : handles) {
    require_same(a.tag, tag, "relation_defect");
    require_same(b.tag, tag, "relation_defect");
    prod = prod * a.m * b.m * a.m.inverse() * b.m.inverse();
  }
  for (const auto& m : holes) {
    require_same(m.tag, tag, "relation_defect");
    prod = prod * m.m;
  }
  return operator_norm(prod - Mat::Identity(tag.n, tag.n));
}

std::vector<AlgebraElement> algebra_basis(StructureGroup g) {
  std::vector<AlgebraElement> basis;
  const int n = g.n;
  const cplx I{0.0, 1.0};
  switch (g.kind) {
    case GroupKind::CompactUnitary: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Mat a = Mat::Zero(n, n);
          a(i, j) = 1.0;
          a(j, i) = -1.0;
          basis.emplace_back(a, g);
          Mat b = Mat::Zero(n, n);
          b(i, j) = I;
          b(j, i) = I;
          basis.emplace_back(b, g);
        }
      for (int k = 0; k + 1 < n; ++k) {
        Mat d = Mat::Zero(n, n);
        d(k, k) = I;
        d(k + 1, k + 1) = -I;
        basis.emplace_back(d, g);
      }
      break;
    }
    case GroupKind::ComplexGeneral: {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Mat a = Mat::Zero(n, n);
          a(i, j) = 1.0;
          basis.emplace_back(a, g);
        }
      break;
    }
    case GroupKind::AbelianCompact: {
      Mat a(1, 1);
      a(0, 0) = I;
      basis.emplace_back(a, g);
      break;
    }
    case GroupKind::AbelianComplex: {
      Mat a(1, 1);
      a(0, 0) = 1.0;
      basis.emplace_back(a, g);
      break;
    }
  }
  return basis;
}

AlgebraElement random_algebra(Rng& rng, StructureGroup g) {
  auto basis = algebra_basis(g);
  Mat m = Mat::Zero(g.n, g.n);
  for (const auto& e : basis) {
    double c = rng.sym();
    if (g.kind == GroupKind::AbelianComplex || g.kind == GroupKind::ComplexGeneral)
      m += cplx{c, rng.sym()} * e.m;
    else
      m += c * e.m;
  }
  double nrm = operator_norm(m);
  if (nrm > 1.0) m /= nrm;
  return AlgebraElement(m, g);
}

GroupElement random_group(Rng& rng, StructureGroup g) {
  return exp_map(random_algebra(rng, g));
}

}  // namespace mlab
