#include "doctest.h"

#include "rht/massey.hpp"
#include "rht/presets.hpp"

#include <map>
#include <set>

using namespace rht;

namespace {

std::vector<std::size_t> classes(const Cohomology& h,
                                 std::initializer_list<const char*> names) {
  std::vector<std::size_t> out;
  for (const char* n : names) {
    auto i = h.find_label(1, n);
    REQUIRE(i.has_value());
    out.push_back(*i);
  }
  return out;
}

}  // namespace

TEST_CASE("parameter polynomials: exact arithmetic") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly p = (x + Poly(Scalar(2))) * (x - Poly(Scalar(2)));
  CHECK(p == x * x - Poly(Scalar(4)));
  CHECK(p.degree() == 2);
  CHECK(!p.is_constant());
  CHECK(p.constant_value() == Scalar(-4));

  Poly q = x * y + y * x;
  CHECK(q == Poly(Scalar(2)) * x * y);
  CHECK((q - q).is_zero());
  CHECK(Poly(Scalar(0)).is_zero());
  CHECK(Poly(Scalar(0)).is_constant());

  // substitution and evaluation agree
  Poly r = p.subst(0, y + Poly(Scalar(1)));  // (y+1)^2 - 4
  CHECK(r == y * y + Poly(Scalar(2)) * y - Poly(Scalar(3)));
  CHECK(r.eval({{1, Scalar(1)}}) == Scalar(0));
  CHECK(r.eval({}) == Scalar(-3));
  CHECK(p.eval({{0, Scalar(3, 2)}}) == Scalar(-7, 4));

  CHECK(q.vars() == std::vector<std::size_t>{0, 1});
  CHECK(r.vars() == std::vector<std::size_t>{1});

  auto aff = (x + Poly(Scalar(2)) * y - Poly(Scalar(1, 3))).affine_form();
  REQUIRE(aff.has_value());
  CHECK(aff->first == Scalar(-1, 3));
  CHECK(aff->second ==
        std::map<std::size_t, Scalar>{{0, Scalar(1)}, {1, Scalar(2)}});
  CHECK(!p.affine_form().has_value());

  CHECK(Poly().str() == "0");
  CHECK((x * x - Poly(Scalar(4))).str() == "-4 + t0^2");
  CHECK((Poly(Scalar(2)) * x * y).str() == "2*t0*t1");
  CHECK(p.str(massey_param_name) == "-4 + p0^2");
}

TEST_CASE("triple product of the central example is nonzero") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  auto o = massey_product_classes(h, classes(h, {"u1", "u1", "v1"}));
  CHECK(o.status == MasseyStatus::defined);
  CHECK(o.verdict == MasseyVerdict::nontrivial);
  CHECK(o.decided_by == "constant-coordinate");
  CHECK(o.labels == std::vector<std::string>{"u1", "u1", "v1"});
  CHECK(o.param_count == 6);  // three closed directions per off-diagonal entry
  CHECK(o.residual_constraints.empty());

  // H^2 basis: u1^g, u1^gc, v1^g, v1^gc; the value has constant
  // coordinate +1 on [u1^gc] and parameter lines elsewhere
  REQUIRE(o.value.size() == 4);
  CHECK(o.value[1] == Poly(Scalar(1)));
  CHECK(o.constant_part == VecQ{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  CHECK(o.value[3].is_zero());
  CHECK(!o.value[0].is_zero());  // -(g-coefficient of x23)
  CHECK(!o.value[2].is_zero());  // +(g-coefficient of x12)
  CHECK(o.value[0].affine_form().has_value());

  // the whole value set misses zero: it is an affine set with constant
  // second coordinate
  auto s = value_affine_set(o);
  REQUIRE(s.has_value());
  CHECK(s->base == o.constant_part);
  for (const VecQ& d : s->dirs) CHECK(d[1] == Scalar(0));
}

TEST_CASE("order matters only in the detail, not the verdict") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  for (auto names : {std::initializer_list<const char*>{"u1", "v1", "u1"},
                     {"v1", "u1", "u1"},
                     {"u1", "v1", "v1"},
                     {"v1", "v1", "u1"}}) {
    auto o = massey_product_classes(h, classes(h, names));
    CHECK(o.status == MasseyStatus::defined);
    CHECK(o.verdict == MasseyVerdict::nontrivial);
  }
  for (auto names : {std::initializer_list<const char*>{"u1", "u1", "u1"},
                     {"v1", "v1", "v1"},
                     {"g", "g", "g"}}) {
    auto o = massey_product_classes(h, classes(h, names));
    CHECK(o.status == MasseyStatus::defined);
    CHECK(o.verdict == MasseyVerdict::trivial);
    CHECK(o.decided_by == "linear-system");
  }
}

TEST_CASE("cup obstructions make the product undefined") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  auto o = massey_product_classes(h, classes(h, {"u1", "u1", "g"}));
  CHECK(o.status == MasseyStatus::undefined);
  CHECK(o.verdict == MasseyVerdict::undecided);
  CHECK(o.value.empty());
  REQUIRE(o.residual_constraints.size() == 1);
  CHECK(o.residual_constraints[0].is_constant());
  CHECK(o.residual_constraints[0].constant_value() != Scalar(0));
}

TEST_CASE("length-three sweep over the central example") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  auto rows = massey_sweep(h, 3);
  REQUIRE(rows.size() == 27);
  std::map<MasseyVerdict, int> verdicts;
  int undefined = 0;
  for (const auto& r : rows) {
    if (r.status == MasseyStatus::undefined)
      ++undefined;
    else {
      REQUIRE(r.status == MasseyStatus::defined);
      ++verdicts[r.verdict];
    }
  }
  // defined tuples avoid a g next to u1/v1: the 8 over {u1,v1} plus g,g,g
  CHECK(undefined == 18);
  CHECK(verdicts[MasseyVerdict::trivial] == 3);
  CHECK(verdicts[MasseyVerdict::nontrivial] == 6);
  CHECK(verdicts[MasseyVerdict::undecided] == 0);

  // deterministic order: rows come in lexicographic tuple order
  CHECK(rows[0].tuple == std::vector<std::size_t>{0, 0, 0});
  CHECK(rows[26].tuple == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("length-four products vanish exactly as the weight bound demands") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  CHECK(weight_certificate(h, 4).applicable);

  // a quadruple over a nonzero triple is obstructed
  auto o = massey_product_classes(h, classes(h, {"u1", "u1", "u1", "v1"}));
  CHECK(o.status == MasseyStatus::undefined);

  auto rows = massey_sweep(h, 4);
  REQUIRE(rows.size() == 81);
  int defined = 0;
  for (const auto& r : rows) {
    if (r.status != MasseyStatus::defined) {
      CHECK(r.status == MasseyStatus::undefined);
      continue;
    }
    ++defined;
    // every defined quadruple is trivial, as the weight certificate forces
    CHECK(r.verdict == MasseyVerdict::trivial);
  }
  CHECK(defined == 3);  // u1^4, v1^4, g^4

  auto u4 = massey_product_classes(h, classes(h, {"u1", "u1", "u1", "u1"}));
  CHECK(u4.status == MasseyStatus::defined);
  CHECK(u4.verdict == MasseyVerdict::trivial);
  CHECK(u4.decided_by == "weight-restriction");
  auto g4 = massey_product_classes(h, classes(h, {"g", "g", "g", "g"}));
  CHECK(g4.verdict == MasseyVerdict::trivial);
  CHECK(g4.decided_by == "weight-restriction");
}

TEST_CASE("filiform quadruple product is nonzero") {
  auto a = FiniteCdga::build(model_filiform(), 4);
  Cohomology h(a);
  // H^2 basis in weight order: e2^e3 (weight 3), e1^e4 (weight 4)
  REQUIRE(h.label(2, 0) == "e2^e3");
  REQUIRE(h.label(2, 1) == "e1^e4");

  auto o = massey_product_classes(h, classes(h, {"e1", "e1", "e1", "e2"}));
  CHECK(o.status == MasseyStatus::defined);
  CHECK(o.verdict == MasseyVerdict::nontrivial);
  CHECK(o.decided_by == "constant-coordinate");
  REQUIRE(o.value.size() == 2);
  CHECK(o.value[1] == Poly(Scalar(-1)));  // [e1^e4] coordinate is fixed
  CHECK(!o.value[0].is_constant());       // [e2^e3] moves with a parameter
  CHECK(o.constant_part == VecQ{Scalar(0), Scalar(-1)});

  // triples inside it are all defined and trivial
  for (auto names : {std::initializer_list<const char*>{"e1", "e1", "e1"},
                     {"e1", "e1", "e2"},
                     {"e2", "e1", "e1"}}) {
    auto t = massey_product_classes(h, classes(h, names));
    CHECK(t.status == MasseyStatus::defined);
    CHECK(t.verdict == MasseyVerdict::trivial);
  }
}

TEST_CASE("curve products are always trivial when defined") {
  auto a = FiniteCdga::build(model_curve(2), 4);
  Cohomology h(a);
  CHECK(weight_certificate(h, 3).applicable);
  auto rows = massey_sweep(h, 3);
  REQUIRE(rows.size() == 64);
  int defined = 0;
  for (const auto& r : rows)
    if (r.status == MasseyStatus::defined) {
      ++defined;
      CHECK(r.verdict == MasseyVerdict::trivial);
    }
  CHECK(defined > 0);
  // the symplectic pair is obstructed
  auto o = massey_product_classes(h, classes(h, {"a1", "b1", "a1"}));
  CHECK(o.status == MasseyStatus::undefined);
}

TEST_CASE("one-generator circle: value lives in a zero space") {
  auto a = FiniteCdga::build(model_b1_one(), 4);
  Cohomology h(a);
  REQUIRE(h.dim(2) == 0);
  auto o = massey_product_classes(h, {0, 0, 0});
  CHECK(o.status == MasseyStatus::defined);
  CHECK(o.verdict == MasseyVerdict::trivial);
  CHECK(o.decided_by == "identically-zero");
}

TEST_CASE("general class combinations are accepted") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  VecQ c(h.dim(1));
  c[0] = 1;
  c[1] = 1;  // u1 + v1
  auto o = massey_product(h, {c, c, c});
  CHECK(o.status == MasseyStatus::defined);
  CHECK(o.verdict == MasseyVerdict::trivial);
  CHECK(o.labels[0] == "u1 + v1");

  CHECK_THROWS_AS(massey_product(h, {c, c}), std::invalid_argument);
  CHECK_THROWS_AS(massey_product(h, {c, c, VecQ{Scalar(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(massey_product_classes(h, {0, 1, 9}), std::invalid_argument);
}

TEST_CASE("the acyclic extension does not change any verdict") {
  auto mr = FiniteCdga::build(model_MR(1), 4);
  auto extension = tensor_acyclic(model_MR(1));
  auto ext = FiniteCdga::build(extension.pres, 4);
  Cohomology hs(mr), ht(ext);

  for (auto names : {std::initializer_list<const char*>{"u1", "u1", "v1"},
                     {"u1", "u1", "u1"},
                     {"u1", "v1", "u1"}}) {
    auto os = massey_product_classes(hs, classes(hs, names));
    auto ot = massey_product_classes(ht, classes(ht, names));
    CHECK(os.status == ot.status);
    CHECK(os.verdict == ot.verdict);
    CHECK(os.param_count == ot.param_count);  // t is not closed: same family
  }

  auto os = massey_product_classes(hs, classes(hs, {"u1", "u1", "v1"}));
  auto ot = massey_product_classes(ht, classes(ht, {"u1", "u1", "v1"}));
  auto iu = ht.find_label(2, "u1^gc");
  REQUIRE(iu.has_value());
  CHECK(ot.constant_part[*iu] == Scalar(1));
  CHECK(os.constant_part[1] == Scalar(1));
}

TEST_CASE("triple values push forward along a 1-quasi-isomorphism") {
  auto mr = FiniteCdga::build(model_MR(1), 4);
  auto extension = tensor_acyclic(model_MR(1));
  auto ext = FiniteCdga::build(extension.pres, 4);
  std::map<std::string, Element> images;
  for (const auto& g : mr.gens()) images[g.name] = ext.pres().gen(g.name);
  auto f = make_morphism(mr, ext, images);
  Cohomology hs(mr), ht(ext);

  for (auto names : {std::initializer_list<const char*>{"u1", "u1", "v1"},
                     {"u1", "u1", "u1"},
                     {"v1", "u1", "v1"},
                     {"g", "g", "g"}}) {
    auto r = massey_naturality(hs, ht, f, classes(hs, names));
    CHECK(r.qis.ok);
    CHECK(r.applicable);
    CHECK(r.natural);
  }
}

TEST_CASE("affine value sets compare exactly") {
  AffineSet s1{VecQ{Scalar(1), Scalar(0)},
               {VecQ{Scalar(0), Scalar(1)}}};
  AffineSet s2{VecQ{Scalar(1), Scalar(5)},
               {VecQ{Scalar(0), Scalar(-2)}}};
  AffineSet s3{VecQ{Scalar(2), Scalar(0)},
               {VecQ{Scalar(0), Scalar(1)}}};
  AffineSet s4{VecQ{Scalar(1), Scalar(0)}, {}};
  CHECK(affine_sets_equal(s1, s2));   // same line, shifted base along it
  CHECK(!affine_sets_equal(s1, s3));  // parallel but disjoint
  CHECK(!affine_sets_equal(s1, s4));  // different dimension
  CHECK(affine_sets_equal(s4, s4));

  MatrixQ m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 1;
  auto im = map_affine_set(m, s1);
  CHECK(im.base == VecQ{Scalar(2), Scalar(0)});
  CHECK(affine_sets_equal(im, map_affine_set(m, s2)));
}

TEST_CASE("status and verdict names") {
  CHECK(std::string(to_string(MasseyStatus::defined)) == "defined");
  CHECK(std::string(to_string(MasseyStatus::undefined)) == "undefined");
  CHECK(std::string(to_string(MasseyStatus::undecided)) == "undecided");
  CHECK(std::string(to_string(MasseyVerdict::trivial)) == "trivial");
  CHECK(std::string(to_string(MasseyVerdict::nontrivial)) == "nontrivial");
  CHECK(std::string(to_string(MasseyVerdict::undecided)) == "undecided");
}
