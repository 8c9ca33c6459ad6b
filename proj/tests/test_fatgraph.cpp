#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlab/fatgraph.hpp"

using namespace mlab;

namespace {
const StructureGroup su2 = StructureGroup::su(2);
}

TEST_CASE("identity connection: k copies of the identity label") {
  auto id = GroupElement::identity(su2);
  auto fgc = flat_from_holonomy(0, 3, {}, {id, id, id});
  auto labels = leaf_label(fgc);
  REQUIRE(labels.size() == 3);
  auto ref = conjugacy_invariant(id);
  for (const auto& l : labels) CHECK(l.distance(ref) == 0.0);
}

TEST_CASE("sphere with two holes accepts (M, M^-1)") {
  Rng rng(1);
  auto m = random_group(rng, su2);
  auto fgc = flat_from_holonomy(0, 2, {}, {m, m.inverse()});
  CHECK(fgc.flat());
  auto labels = leaf_label(fgc);
  CHECK(labels[0].distance(conjugacy_invariant(m)) <= 1e-14);
  CHECK(labels[1].distance(conjugacy_invariant(m.inverse())) <= 1e-14);
}

TEST_CASE("sphere with three holes rejects a free third holonomy") {
  Rng rng(2);
  auto m1 = random_group(rng, su2);
  auto m2 = random_group(rng, su2);
  auto m3 = random_group(rng, su2);  // generically not (m1 m2)^-1
  CHECK_THROWS_AS(flat_from_holonomy(0, 3, {}, {m1, m2, m3}), RelationDefectError);
  try {
    flat_from_holonomy(0, 3, {}, {m1, m2, m3});
  } catch (const RelationDefectError& e) {
    CHECK(e.defect > 1e-10);
  }
  auto ok = flat_from_holonomy(0, 3, {}, {m1, m2, (m1 * m2).inverse()});
  CHECK(ok.face_defect() <= 1e-13);
}

TEST_CASE("torus with one hole: M = [A,B]^-1 is accepted") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_group(rng, su2);
    auto b = random_group(rng, su2);
    GroupElement comm = a * b * a.inverse() * b.inverse();
    auto fgc = flat_from_holonomy(1, 1, {{a, b}}, {comm.inverse()});
    CHECK(fgc.face_defect() <= 1e-13);
  }
}

TEST_CASE("leaf label is invariant under vertex gauge action and rebasing") {
  Rng rng(4);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_group(rng, su2);
    auto b = random_group(rng, su2);
    auto m1 = random_group(rng, su2);
    GroupElement comm = a * b * a.inverse() * b.inverse();
    GroupElement m2 = (comm * m1).inverse();
    auto fgc = flat_from_holonomy(1, 2, {{a, b}}, {m1, m2});
    auto base = leaf_label(fgc);

    std::vector<GroupElement> gauge;
    for (int v = 0; v < 3; ++v) gauge.push_back(random_group(rng, su2));
    auto gauged = fgc.gauged(gauge);
    CHECK(gauged.flat());
    auto moved = leaf_label(gauged);
    for (int j = 0; j < 2; ++j) worst = std::max(worst, base[j].distance(moved[j]));

    auto rebased = fgc.rebased(random_group(rng, su2));
    auto rb = leaf_label(rebased);
    for (int j = 0; j < 2; ++j) worst = std::max(worst, base[j].distance(rb[j]));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("leaf label requires flatness") {
  Rng rng(5);
  auto m = random_group(rng, su2);
  FatGraphConnection bad(0, 1, su2, {}, {m}, {GroupElement::identity(su2)});
  CHECK_FALSE(bad.flat());
  CHECK_THROWS(leaf_label(bad));
}
