#include "mlab/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace mlab {

namespace {

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TriangulatedSurface octahedron() {
  TriangulatedSurface s;
  s.vertices = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}, {0.3, 0.3}, {-0.3, -0.3}};
  s.triangles = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                 {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return s;
}

TriangulatedSurface hexagon_disk() {
  TriangulatedSurface s;
  s.vertices.push_back({0.0, 0.0});
  for (int k = 0; k < 6; ++k) {
    double th = kPi * k / 3.0;
    s.vertices.push_back({std::cos(th), std::sin(th)});
  }
  for (int k = 0; k < 6; ++k) s.triangles.push_back({0, 1 + k, 1 + (k + 1) % 6});
  return s;
}

TriangulatedSurface grid_torus() {
  TriangulatedSurface s;
  const int m = 3;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.vertices.push_back({i / double(m), j / double(m)});
  auto id = [m](int i, int j) { return (i % m) * m + (j % m); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      s.triangles.push_back({a, b, c});
      s.triangles.push_back({a, c, d});
    }
  return s;
}

// BFS distance between triangles; adjacency = shared vertex.
std::vector<int> face_distances(const TriangulatedSurface& s, int start) {
  std::vector<std::vector<int>> at_vertex(s.vertices.size());
  for (int t = 0; t < s.num_triangles(); ++t)
    for (int v : s.triangles[t]) at_vertex[v].push_back(t);
  std::vector<int> dist(s.triangles.size(), -1);
  std::deque<int> q{start};
  dist[start] = 0;
  while (!q.empty()) {
    int t = q.front();
    q.pop_front();
    for (int v : s.triangles[t])
      for (int u : at_vertex[v])
        if (dist[u] < 0) {
          dist[u] = dist[t] + 1;
          q.push_back(u);
        }
  }
  return dist;
}

// Picks `count` triangles pairwise at face-distance >= 3 (greedy farthest point).
std::vector<int> pick_spread_faces(const TriangulatedSurface& s, int count) {
  std::vector<int> picked{0};
  std::vector<int> mindist = face_distances(s, 0);
  while (static_cast<int>(picked.size()) < count) {
    int best = -1;
    for (int t = 0; t < s.num_triangles(); ++t)
      if (best < 0 || mindist[t] > mindist[best]) best = t;
    if (mindist[best] < 3) throw SurfaceError("build_surface: mesh too coarse for surgery");
    picked.push_back(best);
    auto d = face_distances(s, best);
    for (int t = 0; t < s.num_triangles(); ++t) mindist[t] = std::min(mindist[t], d[t]);
  }
  return picked;
}

// Glues the boundaries left by removing triangles t1, t2 into a handle:
// vertices of t2 are relabeled onto vertices of t1 so the two hole circles
// are identified with opposite induced orientations.
void glue_handle(TriangulatedSurface& s, int t1, int t2) {
  auto [a0, a1, a2] = s.triangles[t1];
  auto [b0, b1, b2] = s.triangles[t2];
  // hole loop of t1 runs a1->a0->a2, of t2 runs b1->b0->b2; identify the
  // second reversed: a1~b1, a0~b2, a2~b0.
  std::map<int, int> relabel{{b1, a1}, {b2, a0}, {b0, a2}};
  for (auto& tri : s.triangles)
    for (int& v : tri)
      if (auto it = relabel.find(v); it != relabel.end()) v = it->second;
}

void remove_faces(TriangulatedSurface& s, std::vector<int> faces) {
  std::sort(faces.rbegin(), faces.rend());
  for (int f : faces) s.triangles.erase(s.triangles.begin() + f);
}

void drop_unused_vertices(TriangulatedSurface& s) {
  std::vector<int> remap(s.vertices.size(), -1);
  std::vector<Eigen::Vector2d> kept;
  for (auto& tri : s.triangles)
    for (int& v : tri) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(kept.size());
        kept.push_back(s.vertices[v]);
      }
      v = remap[v];
    }
  s.vertices = std::move(kept);
}

}  // namespace

int TriangulatedSurface::num_boundary_edges() const {
  int n = 0;
  for (const auto& e : edges)
    if (e.boundary()) ++n;
  return n;
}

void TriangulatedSurface::finalize() {
  edges.clear();
  tri_edges.assign(triangles.size(), {-1, -1, -1});
  std::map<std::pair<int, int>, int> index;
  for (int t = 0; t < num_triangles(); ++t) {
    const auto& tri = triangles[t];
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw SurfaceError("degenerate triangle");
    for (int l = 0; l < 3; ++l) {
      int u = tri[l], v = tri[(l + 1) % 3];
      auto key = std::minmax(u, v);
      auto [it, inserted] = index.try_emplace({key.first, key.second}, num_edges());
      if (inserted) {
        Edge e;
        e.a = key.first;
        e.b = key.second;
        edges.push_back(e);
      }
      Edge& e = edges[it->second];
      if (e.count >= 2) throw SurfaceError("edge incident to more than two triangles");
      e.tri[e.count] = t;
      e.local[e.count] = l;
      e.forward[e.count] = (u == e.a);
      ++e.count;
      tri_edges[t][l] = it->second;
    }
  }
  for (const auto& e : edges) {
    if (e.count == 2 && e.forward[0] == e.forward[1])
      throw SurfaceError("inconsistent triangle orientations");
  }

  // Boundary loops: walk induced directions (opposite to the traversal of the
  // unique incident triangle).
  std::map<int, std::pair<int, int>> outgoing;  // start vertex -> (edge, end vertex)
  for (int ei = 0; ei < num_edges(); ++ei) {
    const Edge& e = edges[ei];
    if (!e.boundary()) continue;
    // induced direction = the traversal of the unique incident triangle
    int start = e.forward[0] ? e.a : e.b;
    int end = e.forward[0] ? e.b : e.a;
    if (!outgoing.try_emplace(start, std::make_pair(ei, end)).second)
      throw SurfaceError("boundary vertex with two outgoing boundary edges");
  }
  boundary_loops.clear();
  std::set<int> used;
  while (used.size() < outgoing.size()) {
    int start = -1;
    for (const auto& [v, _] : outgoing)
      if (!used.count(v)) {
        start = v;
        break;
      }
    std::vector<BoundaryEdge> loop;
    int v = start;
    do {
      auto it = outgoing.find(v);
      if (it == outgoing.end()) throw SurfaceError("open boundary chain");
      used.insert(v);
      int ei = it->second.first;
      loop.push_back({ei, edges[ei].a == v});
      v = it->second.second;
    } while (v != start);
    boundary_loops.push_back(std::move(loop));
  }
  // Deterministic ordering: loops sorted by smallest vertex, each loop started
  // at the directed edge leaving that vertex.
  for (auto& loop : boundary_loops) {
    auto vstart = [&](const BoundaryEdge& be) { return be.forward ? edges[be.edge].a : edges[be.edge].b; };
    int best = 0;
    for (int i = 1; i < static_cast<int>(loop.size()); ++i)
      if (vstart(loop[i]) < vstart(loop[best])) best = i;
    std::rotate(loop.begin(), loop.begin() + best, loop.end());
  }
  std::sort(boundary_loops.begin(), boundary_loops.end(), [&](const auto& x, const auto& y) {
    auto vstart = [&](const BoundaryEdge& be) { return be.forward ? edges[be.edge].a : edges[be.edge].b; };
    return vstart(x.front()) < vstart(y.front());
  });

  if (static_cast<int>(boundary_loops.size()) != holes)
    throw SurfaceError("boundary loop count does not match holes");
  if (euler_characteristic() != 2 - 2 * genus - holes)
    throw SurfaceError("Euler characteristic mismatch");
}

TriangulatedSurface TriangulatedSurface::refined() const {
  TriangulatedSurface out;
  out.genus = genus;
  out.holes = holes;
  out.vertices = vertices;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int u, int v) {
    auto key = std::minmax(u, v);
    auto it = midpoint.find({key.first, key.second});
    if (it != midpoint.end()) return it->second;
    int id = static_cast<int>(out.vertices.size());
    out.vertices.push_back(0.5 * (vertices[u] + vertices[v]));
    midpoint[{key.first, key.second}] = id;
    return id;
  };
  for (const auto& tri : triangles) {
    int a = tri[0], b = tri[1], c = tri[2];
    int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    out.triangles.push_back({a, ab, ca});
    out.triangles.push_back({b, bc, ab});
    out.triangles.push_back({c, ca, bc});
    out.triangles.push_back({ab, bc, ca});
  }
  out.finalize();
  return out;
}

std::shared_ptr<const TriangulatedSurface> TriangulatedSurface::build(int g, int k, int refine) {
  if (g < 0 || k < 0 || refine < 0) throw std::invalid_argument("build_surface: negative parameter");
  TriangulatedSurface s;
  if (g == 0 && k == 0) {
    s = octahedron();
  } else if (g == 0 && k == 1) {
    s = hexagon_disk();
  } else if (g == 1 && k == 0) {
    s = grid_torus();
  } else {
    // Surgery: handles glued into a sphere (g >= 2), holes carved as removed
    // faces. A genus-1 base starts from the grid torus directly.
    int handles = g >= 2 ? g : 0;
    s = (g == 1) ? grid_torus() : octahedron();
    s.genus = (g == 1) ? 1 : 0;
    int spots = 2 * handles + k;
    while (s.num_triangles() < 24 * spots) {
      s.finalize();
      s = s.refined();
    }
    auto faces = pick_spread_faces(s, spots);
    std::vector<int> removed;
    for (int h = 0; h < handles; ++h) {
      glue_handle(s, faces[2 * h], faces[2 * h + 1]);
      removed.push_back(faces[2 * h]);
      removed.push_back(faces[2 * h + 1]);
    }
    for (int j = 0; j < k; ++j) removed.push_back(faces[2 * handles + j]);
    remove_faces(s, removed);
    drop_unused_vertices(s);
  }
  s.genus = g;
  s.holes = k;
  s.finalize();
  for (int r = 0; r < refine; ++r) s = s.refined();
  return std::make_shared<const TriangulatedSurface>(std::move(s));
}

}  // namespace mlab
