#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mlab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const cplx kTwoPiI{0.0, 2.0 * kPi};

/// Which matrix realization of the structure group is in play.
enum class GroupKind {
  CompactUnitary,  // SU(n) in its defining representation
  ComplexGeneral,  // GL(n, C)
  AbelianCompact,  // U(1) as 1x1 unitary matrices
  AbelianComplex,  // C^* as GL(1, C)
};

struct StructureGroup {
  GroupKind kind = GroupKind::CompactUnitary;
  int n = 2;

  bool abelian() const {
    return kind == GroupKind::AbelianCompact || kind == GroupKind::AbelianComplex;
  }
  bool compact() const {
    return kind == GroupKind::CompactUnitary || kind == GroupKind::AbelianCompact;
  }
  bool operator==(const StructureGroup&) const = default;

  static StructureGroup su(int n) { return {GroupKind::CompactUnitary, n}; }
  static StructureGroup gl(int n) { return {GroupKind::ComplexGeneral, n}; }
  static StructureGroup u1() { return {GroupKind::AbelianCompact, 1}; }
  static StructureGroup cstar() { return {GroupKind::AbelianComplex, 1}; }
};

inline std::string to_string(const StructureGroup& g) {
  switch (g.kind) {
    case GroupKind::CompactUnitary: return "su" + std::to_string(g.n);
    case GroupKind::ComplexGeneral: return "gl" + std::to_string(g.n);
    case GroupKind::AbelianCompact: return "u1";
    case GroupKind::AbelianComplex: return "cstar";
  }
  return "?";
}

struct TagMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace mlab
