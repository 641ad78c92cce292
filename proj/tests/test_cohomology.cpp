#include "doctest.h"

#include "rht/cohomology.hpp"
#include "rht/presets.hpp"

using namespace rht;

TEST_CASE("cohomology of mr:1 has Kodaira-Thurston Betti numbers") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  CHECK(h.dim(0) == 1);
  CHECK(h.dim(1) == 3);
  CHECK(h.dim(2) == 4);
  CHECK(h.dim(3) == 3);
  CHECK(h.dim(4) == 1);
  CHECK(h.dim(9) == 0);

  CHECK(h.label(1, 0) == "u1");
  CHECK(h.label(1, 1) == "v1");
  CHECK(h.label(1, 2) == "g");
  CHECK(h.weight_histogram(1) == std::map<int, std::size_t>{{1, 2}, {2, 1}});

  std::vector<std::string> h2;
  for (std::size_t i = 0; i < 4; ++i) h2.push_back(h.label(2, i));
  CHECK(h2 == std::vector<std::string>{"u1^g", "u1^gc", "v1^g", "v1^gc"});
  CHECK(h.weight_histogram(2) == std::map<int, std::size_t>{{3, 4}});
  CHECK(h.find_label(2, "u1^gc") == 1);
  CHECK(!h.find_label(2, "g^gc").has_value());
}

TEST_CASE("Euler characteristic matches chains vs cohomology") {
  for (const char* id : {"mr:1", "mr:2", "mr:3", "curve:2", "curve:3",
                         "b1one", "filiform"}) {
    auto p = parse_preset_id(id);
    REQUIRE(p.has_value());
    auto a = FiniteCdga::build(*p, 4);
    REQUIRE(a.vanishes_above_cap());
    Cohomology h(a);
    long chains = 0, coh = 0;
    for (int q = 0; q <= 4; ++q) {
      chains += (q % 2 ? -1 : 1) * static_cast<long>(a.dim(q));
      coh += (q % 2 ? -1 : 1) * static_cast<long>(h.dim(q));
    }
    CHECK(chains == coh);
  }
}

TEST_CASE("weights of the mr family cohomology") {
  for (int k : {1, 2, 3}) {
    auto a = FiniteCdga::build(model_MR(k), 4);
    Cohomology h(a);
    CHECK(h.dim(1) == 2 * static_cast<std::size_t>(k) + 1);
    CHECK(h.weight_histogram(1) ==
          std::map<int, std::size_t>{{1, 2 * static_cast<std::size_t>(k)},
                                     {2, 1}});
    CHECK(h.dim(2) == 4 * static_cast<std::size_t>(k));
    CHECK(h.weight_histogram(2) ==
          std::map<int, std::size_t>{{3, 4 * static_cast<std::size_t>(k)}});
  }
}

TEST_CASE("curve cohomology is the surface algebra") {
  auto a = FiniteCdga::build(model_curve(2), 4);
  Cohomology h(a);
  CHECK(h.dim(1) == 4);
  CHECK(h.dim(2) == 1);
  CHECK(h.dim(3) == 0);
  CHECK(h.label(2, 0) == "a1^b1");
  auto pr = purity_report(h);
  for (const auto& r : pr) CHECK(r.pure);

  // cup products realize the symplectic pairing
  auto a1 = *h.find_label(1, "a1");
  auto b1 = *h.find_label(1, "b1");
  auto a2 = *h.find_label(1, "a2");
  auto b2 = *h.find_label(1, "b2");
  CHECK(h.cup(1, a1, 1, b1) == VecQ{Scalar(1)});
  CHECK(h.cup(1, a2, 1, b2) == VecQ{Scalar(1)});
  CHECK(h.cup(1, b1, 1, a1) == VecQ{Scalar(-1)});
  CHECK(h.cup(1, a1, 1, b2) == VecQ{Scalar(0)});
  CHECK(h.cup(1, a1, 1, a2) == VecQ{Scalar(0)});
}

TEST_CASE("filiform cohomology carries mixed weights") {
  auto a = FiniteCdga::build(model_filiform(), 4);
  Cohomology h(a);
  CHECK(h.dim(1) == 2);
  CHECK(h.dim(2) == 2);
  CHECK(h.label(2, 0) == "e2^e3");
  CHECK(h.label(2, 1) == "e1^e4");
  CHECK(h.weight(2, 0) == 3);
  CHECK(h.weight(2, 1) == 4);
}

TEST_CASE("class coordinates ignore exact corrections") {
  auto a = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(a);
  const auto& p = a.pres();
  // u1^gc plus a boundary lands on the same class
  auto e = p.mono({"u1", "gc"}) + a.d(p.gen("gc")) * Scalar(7);
  CHECK(h.class_coords(2, e) == VecQ{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  CHECK(h.class_coords(2, a.d(p.gen("gc"))) == VecQ(4));
  CHECK_THROWS_AS(h.class_coords(2, p.mono({"g", "gc"})),
                  std::invalid_argument);

  CHECK(h.is_exact(2, p.mono({"u1", "v1"})));
  CHECK(!h.is_exact(2, p.mono({"u1", "g"})));
  auto prim = h.primitive(2, p.mono({"u1", "v1"}));
  REQUIRE(prim.has_value());
  CHECK(a.d(*prim) == p.mono({"u1", "v1"}));
  CHECK(!h.primitive(2, p.mono({"u1", "g"})).has_value());

  // class_element reconstructs a representative cocycle
  auto ce = h.class_element(2, VecQ{Scalar(2), Scalar(0), Scalar(0), Scalar(-1)});
  CHECK(h.class_coords(2, ce) ==
        VecQ{Scalar(2), Scalar(0), Scalar(0), Scalar(-1)});
}

TEST_CASE("inclusion into the acyclic extension is a 1-quasi-isomorphism") {
  auto mr = FiniteCdga::build(model_MR(1), 4);
  auto extension = tensor_acyclic(model_MR(1));
  auto ext = FiniteCdga::build(extension.pres, 4);
  std::map<std::string, Element> images;
  for (const auto& g : mr.gens()) images[g.name] = ext.pres().gen(g.name);
  auto f = make_morphism(mr, ext, images);

  Cohomology hs(mr), ht(ext);
  CHECK(ht.dim(1) == 3);  // t is not closed; nothing new
  CHECK(ht.dim(2) == 4);
  auto r = one_qis_check(hs, ht, f);
  CHECK(r.h1_iso);
  CHECK(r.h2_injective);
  CHECK(r.ok);

  // a map collapsing H^1 fails the check
  auto torus = FiniteCdga::build(model_curve(1), 4);
  Cohomology htor(torus);
  std::map<std::string, Element> to_torus{
      {"u1", torus.pres().gen("a1")},
      {"v1", Element()},
      {"g", Element()},
      {"gc", Element()}};
  // d(gc) = u1^v1 -> a1^0 = 0: commutes since v1 maps to zero
  auto f2 = make_morphism(mr, torus, to_torus);
  auto r2 = one_qis_check(hs, htor, f2);
  CHECK(!r2.h1_iso);
  CHECK(!r2.ok);
}

TEST_CASE("weight certificate separates long products") {
  auto mr = FiniteCdga::build(model_MR(1), 4);
  Cohomology h(mr);
  CHECK(!weight_certificate(h, 3).applicable);
  CHECK(weight_certificate(h, 4).applicable);
  CHECK(weight_certificate(h, 7).applicable);

  auto curve = FiniteCdga::build(model_curve(2), 4);
  Cohomology hc(curve);
  CHECK(weight_certificate(hc, 3).applicable);

  auto fil = FiniteCdga::build(model_filiform(), 4);
  Cohomology hf(fil);
  CHECK(!weight_certificate(hf, 4).applicable);
  CHECK(weight_certificate(hf, 5).applicable);

  Presentation unw;
  unw.add_generator("x", 1);
  auto aunw = FiniteCdga::build(std::move(unw), 4);
  Cohomology hu(aunw);
  CHECK(!weight_certificate(hu, 4).applicable);

  auto b1 = FiniteCdga::build(model_b1_one(), 4);
  Cohomology hb(b1);
  CHECK(weight_certificate(hb, 2).applicable);  // H^2 vanishes outright
}
