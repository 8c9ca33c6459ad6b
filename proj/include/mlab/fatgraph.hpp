#pragma once

#include <vector>

#include "mlab/lie.hpp"

namespace mlab {

struct RelationDefectError : std::runtime_error {
  double defect;
  explicit RelationDefectError(double d)
      : std::runtime_error("holonomy tuple violates the fundamental-group relation, defect " +
                           std::to_string(d)),
        defect(d) {}
};

/// Flat connection in the holonomy picture: a fat graph with one base vertex,
/// handle loops at the base, and for every hole a tail edge to a hole vertex
/// carrying the hole loop. The single contractible face word is
///   prod_i [A_i, B_i] * prod_j (t_j^-1 M_j t_j).
class FatGraphConnection {
 public:
  FatGraphConnection(int genus, int holes, StructureGroup tag,
                     std::vector<std::pair<GroupElement, GroupElement>> handles,
                     std::vector<GroupElement> hole_loops, std::vector<GroupElement> tails);

  int genus() const { return genus_; }
  int holes() const { return holes_; }
  bool flat() const { return flat_; }
  const StructureGroup& tag() const { return tag_; }

  /// Holonomy of the contractible face.
  GroupElement face_holonomy() const;
  double face_defect() const;

  /// Holonomy around hole j, based at the base vertex.
  GroupElement boundary_holonomy(int j) const;

  /// Vertex gauge action; element [0] acts at the base, [1+j] at hole vertex j.
  FatGraphConnection gauged(const std::vector<GroupElement>& per_vertex) const;

  /// Base-point move: conjugates every generator by h.
  FatGraphConnection rebased(const GroupElement& h) const;

 private:
  int genus_, holes_;
  StructureGroup tag_;
  std::vector<std::pair<GroupElement, GroupElement>> handles_;
  std::vector<GroupElement> hole_loops_;
  std::vector<GroupElement> tails_;
  bool flat_ = false;
};

/// Builds a flat fat-graph connection from handle and hole holonomies;
/// rejects tuples whose fundamental-group relation defect exceeds tol.
FatGraphConnection flat_from_holonomy(int genus, int holes,
                                      const std::vector<std::pair<GroupElement, GroupElement>>& handles,
                                      const std::vector<GroupElement>& hole_holonomies,
                                      double tol = 1e-10);

/// Conjugacy invariant of the holonomy around each hole (the symplectic-leaf
/// label). Requires a flat connection.
std::vector<ConjugacyInvariant> leaf_label(const FatGraphConnection& fgc);

}  // namespace mlab
