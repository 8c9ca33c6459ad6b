#pragma once

#include <array>
#include <memory>
#include <vector>

#include "mlab/types.hpp"

namespace mlab {

/// Oriented triangulated surface with boundary. All calculus happens in the
/// per-triangle reference chart (the standard simplex); vertex positions are
/// chart hints kept for serialization and mesh construction only.
///
/// Local edge i of triangle (w0,w1,w2) runs w_i -> w_{i+1 mod 3} and is
/// parametrized on the reference simplex by
///   e0: (s,0),  e1: (1-s,s),  e2: (0,1-s),   s in [0,1].
class TriangulatedSurface {
 public:
  struct Edge {
    int a = -1, b = -1;                 // endpoint ids, a < b
    std::array<int, 2> tri{-1, -1};     // incident triangles
    std::array<int, 2> local{-1, -1};   // local edge index inside tri
    std::array<bool, 2> forward{};      // triangle traverses a -> b
    int count = 0;
    bool boundary() const { return count == 1; }
  };

  /// Directed boundary edge in induced (surface-on-the-left) orientation.
  struct BoundaryEdge {
    int edge = -1;
    bool forward = true;  // traversal goes a -> b
  };

  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::array<int, 3>> triangles;
  int genus = 0;
  int holes = 0;

  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> tri_edges;  // edge id per (triangle, local edge)
  std::vector<std::vector<BoundaryEdge>> boundary_loops;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }
  int num_boundary_edges() const;

  /// Rebuilds edge incidences and boundary loops from the triangle list and
  /// checks manifoldness, consistent orientation and the Euler count.
  void finalize();

  /// One step of uniform 4-to-1 midpoint subdivision.
  TriangulatedSurface refined() const;

  /// Genus-g surface with k boundary loops, uniformly subdivided refine times.
  static std::shared_ptr<const TriangulatedSurface> build(int g, int k, int refine);
};

using SurfacePtr = std::shared_ptr<const TriangulatedSurface>;

}  // namespace mlab
