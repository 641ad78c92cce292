#include "doctest.h"

#include "rht/cdga.hpp"
#include "rht/cohomology.hpp"
#include "rht/presets.hpp"
#include "rht/sullivan.hpp"

using namespace rht;

namespace {

VecQ unit(std::size_t n, std::size_t i) {
  VecQ v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("tower over the central weighted model stabilizes in two stages") {
  const FiniteCdga alg = FiniteCdga::build(model_MR(1));
  const Cohomology h(alg);
  const SullivanTower t(h, 5);

  CHECK(t.stages() == 2);
  CHECK(t.stabilized());
  CHECK(t.v_sequence() == std::vector<std::size_t>{3, 1, 0});
  CHECK(t.kernel_dim(1) == 1);
  CHECK(t.kernel_dim(2) == 0);

  CHECK(t.added(1) ==
        std::vector<std::string>{"v1_1", "v1_2", "v1_3"});
  CHECK(t.added(2) == std::vector<std::string>{"v2_1"});

  const Presentation& p1 = t.stage(1).pres();
  REQUIRE(p1.gens().size() == 3);
  CHECK(p1.gens()[0].weight == 1);
  CHECK(p1.gens()[1].weight == 1);
  CHECK(p1.gens()[2].weight == 2);

  const Presentation& p2 = t.stage(2).pres();
  REQUIRE(p2.gens().size() == 4);
  CHECK(p2.gens()[3].name == "v2_1");
  CHECK(p2.gens()[3].weight == 2);
  CHECK(p2.differential()[3] == p2.mono({"v1_1", "v1_2"}));

  // stage maps: duals land on the classes, the new generator on the
  // primitive that witnesses u1 v1 as exact
  CHECK(t.image("v1_1") == alg.pres().gen("u1"));
  CHECK(t.image("v1_2") == alg.pres().gen("v1"));
  CHECK(t.image("v1_3") == alg.pres().gen("g"));
  CHECK(t.image("v2_1") == alg.pres().gen("gc"));

  const Morphism f = t.stage_map(2);
  const Cohomology hs(t.stage(2));
  const OneQisReport q = one_qis_check(hs, h, f);
  CHECK(q.h1_iso);
  CHECK(q.h2_injective);
  CHECK(q.ok);
}

TEST_CASE("tower generator counts grow with the model width") {
  SUBCASE("two symplectic pairs") {
    const FiniteCdga alg = FiniteCdga::build(model_MR(2));
    const Cohomology h(alg);
    const SullivanTower t(h, 3);
    CHECK_FALSE(t.stabilized());
    const auto v = t.v_sequence();
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 5);
    CHECK(v[1] == 6);
    CHECK(v[2] == 16);
    CHECK(v[3] > 0);
  }
  SUBCASE("three symplectic pairs") {
    const FiniteCdga alg = FiniteCdga::build(model_MR(3));
    const Cohomology h(alg);
    const SullivanTower t(h, 2);
    CHECK_FALSE(t.stabilized());
    const auto v = t.v_sequence();
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 7);
    CHECK(v[1] == 15);
    CHECK(v[2] > 0);
  }
}

TEST_CASE("tower over surface models") {
  SUBCASE("genus two keeps growing") {
    const FiniteCdga alg = FiniteCdga::build(model_curve(2));
    const Cohomology h(alg);
    const SullivanTower t(h, 2);
    CHECK_FALSE(t.stabilized());
    const auto v = t.v_sequence();
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 4);
    CHECK(v[1] == 5);
    CHECK(v[2] > 0);
  }
  SUBCASE("the torus stabilizes immediately") {
    const FiniteCdga alg = FiniteCdga::build(model_curve(1));
    const Cohomology h(alg);
    const SullivanTower t(h, 5);
    CHECK(t.stabilized());
    CHECK(t.stages() == 1);
    CHECK(t.v_sequence() == std::vector<std::size_t>{2, 0});
  }
  SUBCASE("a single circle factor stabilizes immediately") {
    const FiniteCdga alg = FiniteCdga::build(model_b1_one());
    const Cohomology h(alg);
    const SullivanTower t(h, 5);
    CHECK(t.stabilized());
    CHECK(t.v_sequence() == std::vector<std::size_t>{1, 0});
  }
}

TEST_CASE("tower over an acyclic tensor extension matches the base model") {
  const AcyclicExtension ext = tensor_acyclic(model_MR(1));
  const FiniteCdga alg = FiniteCdga::build(ext.pres);
  const Cohomology h(alg);
  const SullivanTower t(h, 5);
  CHECK(t.stabilized());
  CHECK(t.v_sequence() == std::vector<std::size_t>{3, 1, 0});
}

TEST_CASE("tower reconstructs a length-three filtration") {
  const FiniteCdga alg = FiniteCdga::build(model_filiform());
  const Cohomology h(alg);
  const SullivanTower t(h, 6);
  CHECK(t.stabilized());
  CHECK(t.v_sequence() == std::vector<std::size_t>{2, 1, 1, 0});
  const Presentation& p3 = t.stage(3).pres();
  CHECK(p3.gens()[3].name == "v3_1");
  CHECK(p3.gens()[3].weight == 3);
  CHECK(p3.differential()[3] == p3.mono({"v1_1", "v2_1"}));
  CHECK(t.image("v3_1") == alg.pres().gen("e4"));
}

TEST_CASE("dual Lie algebra of the stabilized tower") {
  const FiniteCdga alg = FiniteCdga::build(model_MR(1));
  const Cohomology h(alg);
  const SullivanTower t(h, 5);
  const GradedLie g = dual_lie(t);

  CHECK(g.layer_dims == std::vector<std::size_t>{3, 1});
  CHECK(g.names ==
        std::vector<std::string>{"v1_1", "v1_2", "v1_3", "v2_1"});
  CHECK(g.weights == std::vector<int>{1, 1, 2, 2});
  CHECK(g.bracket.size() == 1);
  CHECK(g.bracket_of(0, 1) == unit(4, 3));
  CHECK(g.bracket_of(1, 0) == VecQ{0, 0, 0, -1});
  CHECK(g.bracket_of(0, 2) == VecQ(4));
  CHECK(g.bracket_of(2, 2) == VecQ(4));
  CHECK(g.jacobi_holds());

  // bilinear extension
  const VecQ x{1, 2, 0, 0}, y{3, 4, 0, 0};
  CHECK(g.bracket_vec(x, y) == VecQ{0, 0, 0, -2});
}

TEST_CASE("dual Lie algebra of an abelian tower") {
  const FiniteCdga alg = FiniteCdga::build(model_curve(1));
  const Cohomology h(alg);
  const SullivanTower t(h, 5);
  const GradedLie g = dual_lie(t);
  CHECK(g.layer_dims == std::vector<std::size_t>{2});
  CHECK(g.bracket.empty());
  CHECK(g.jacobi_holds());
}

TEST_CASE("dual Lie algebra of the deep tower is filtered by length") {
  const FiniteCdga alg = FiniteCdga::build(model_filiform());
  const Cohomology h(alg);
  const SullivanTower t(h, 6);
  const GradedLie g = dual_lie(t);
  CHECK(g.layer_dims == std::vector<std::size_t>{2, 1, 1});
  CHECK(g.weights == std::vector<int>{1, 1, 2, 3});
  CHECK(g.bracket_of(0, 1) == unit(4, 2));
  CHECK(g.bracket_of(0, 2) == unit(4, 3));
  CHECK(g.bracket_of(1, 2) == VecQ(4));
  CHECK(g.jacobi_holds());
}

TEST_CASE("graded Lie comparison") {
  const FiniteCdga alg = FiniteCdga::build(model_MR(1));
  const Cohomology h(alg);
  const SullivanTower t(h, 5);
  const GradedLie a = dual_lie(t);

  SUBCASE("an algebra matches itself") {
    const auto rep = lie_graded_compare(a, a);
    CHECK(rep.result == LieCompare::isomorphic);
  }
  SUBCASE("sign conventions are absorbed by the search") {
    GradedLie b = a;
    b.bracket[{0, 1}] = VecQ{0, 0, 0, -1};
    const auto rep = lie_graded_compare(a, b);
    CHECK(rep.result == LieCompare::isomorphic);
  }
  SUBCASE("layer dimensions separate algebras") {
    const FiniteCdga alg2 = FiniteCdga::build(model_curve(1));
    const Cohomology h2(alg2);
    const SullivanTower t2(h2, 5);
    const auto rep = lie_graded_compare(a, dual_lie(t2));
    CHECK(rep.result == LieCompare::distinct);
    CHECK(rep.detail == "layer dimensions differ (layer 1: 3 vs 2)");
  }
  SUBCASE("weight multisets separate algebras") {
    GradedLie b = a;
    b.weights[2] = 3;
    const auto rep = lie_graded_compare(a, b);
    CHECK(rep.result == LieCompare::distinct);
    CHECK(rep.detail == "weight multisets differ in layer 1");
  }
  SUBCASE("a tiny budget leaves the question open") {
    const auto rep = lie_graded_compare(a, a, 1);
    CHECK(rep.result == LieCompare::undecided);
    CHECK(rep.detail == "search budget exceeded");
  }
  SUBCASE("abelian algebras compare by generator data alone") {
    GradedLie x, y;
    x.layer_dims = {2};
    x.names = {"a", "b"};
    x.layer_of = {1, 1};
    x.weights = {0, 0};
    y = x;
    y.names = {"c", "d"};
    const auto rep = lie_graded_compare(x, y);
    CHECK(rep.result == LieCompare::isomorphic);
  }
  SUBCASE("higher-layer scaling is solved, not searched") {
    const FiniteCdga alg3 = FiniteCdga::build(model_filiform());
    const Cohomology h3(alg3);
    const SullivanTower t3(h3, 6);
    const GradedLie f = dual_lie(t3);
    GradedLie s = f;
    s.bracket[{0, 2}] = VecQ{0, 0, 0, 2};  // [x, z] = 2 w
    const auto rep = lie_graded_compare(f, s);
    CHECK(rep.result == LieCompare::isomorphic);
  }
}
