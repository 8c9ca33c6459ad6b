#include "mlab/fatgraph.hpp"

namespace mlab {

FatGraphConnection::FatGraphConnection(int genus, int holes, StructureGroup tag,
                                       std::vector<std::pair<GroupElement, GroupElement>> handles,
                                       std::vector<GroupElement> hole_loops,
                                       std::vector<GroupElement> tails)
    : genus_(genus),
      holes_(holes),
      tag_(tag),
      handles_(std::move(handles)),
      hole_loops_(std::move(hole_loops)),
      tails_(std::move(tails)) {
  if (static_cast<int>(handles_.size()) != genus_ ||
      static_cast<int>(hole_loops_.size()) != holes_ || tails_.size() != hole_loops_.size())
    throw std::invalid_argument("FatGraphConnection: generator counts do not match (g, k)");
  flat_ = face_defect() <= 1e-10;
}

GroupElement FatGraphConnection::face_holonomy() const {
  GroupElement w = GroupElement::identity(tag_);
  for (const auto& [a, b] : handles_) w = w * a * b * a.inverse() * b.inverse();
  for (int j = 0; j < holes_; ++j) w = w * boundary_holonomy(j);
  return w;
}

double FatGraphConnection::face_defect() const {
  return operator_norm(face_holonomy().m - Mat::Identity(tag_.n, tag_.n));
}

GroupElement FatGraphConnection::boundary_holonomy(int j) const {
  return tails_[j].inverse() * hole_loops_[j] * tails_[j];
}

FatGraphConnection FatGraphConnection::gauged(const std::vector<GroupElement>& per_vertex) const {
  if (static_cast<int>(per_vertex.size()) != 1 + holes_)
    throw std::invalid_argument("gauged: expected one element per vertex");
  const GroupElement& g0 = per_vertex[0];
  GroupElement g0i = g0.inverse();
  std::vector<std::pair<GroupElement, GroupElement>> handles;
  handles.reserve(handles_.size());
  for (const auto& [a, b] : handles_) handles.push_back({g0i * a * g0, g0i * b * g0});
  std::vector<GroupElement> loops, tails;
  for (int j = 0; j < holes_; ++j) {
    const GroupElement& gj = per_vertex[1 + j];
    GroupElement gji = gj.inverse();
    loops.push_back(gji * hole_loops_[j] * gj);
    tails.push_back(gji * tails_[j] * g0);
  }
  return FatGraphConnection(genus_, holes_, tag_, std::move(handles), std::move(loops),
                            std::move(tails));
}

FatGraphConnection FatGraphConnection::rebased(const GroupElement& h) const {
  std::vector<GroupElement> per_vertex(1 + holes_, h);
  return gauged(per_vertex);
}

FatGraphConnection flat_from_holonomy(
    int genus, int holes, const std::vector<std::pair<GroupElement, GroupElement>>& handles,
    const std::vector<GroupElement>& hole_holonomies, double tol) {
  double defect = relation_defect(handles, hole_holonomies);
  if (defect > tol) throw RelationDefectError(defect);
  StructureGroup tag = !handles.empty() ? handles.front().first.tag : hole_holonomies.front().tag;
  std::vector<GroupElement> tails(hole_holonomies.size(), GroupElement::identity(tag));
  return FatGraphConnection(genus, holes, tag, handles, hole_holonomies, std::move(tails));
}

std::vector<ConjugacyInvariant> leaf_label(const FatGraphConnection& fgc) {
  if (!fgc.flat()) throw std::invalid_argument("leaf_label: connection is not flat");
  std::vector<ConjugacyInvariant> labels;
  labels.reserve(fgc.holes());
  for (int j = 0; j < fgc.holes(); ++j)
    labels.push_back(conjugacy_invariant(fgc.boundary_holonomy(j)));
  return labels;
}

}  // namespace mlab
