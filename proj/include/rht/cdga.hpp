#pragma once

#include "rht/linalg.hpp"
#include "rht/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace rht {

// A finitely presented graded-commutative differential algebra,
// materialized degree by degree up to an inspection cap. Each degree holds
// the full list of free-algebra monomials plus a reduced row space for the
// relation ideal; the canonical basis is the set of monomials that are not
// leading terms of ideal rows, where "leading" means largest in the
// monomial order. That choice makes the canonical form of a class the
// order-minimal combination surviving reduction.
class FiniteCdga {
 public:
  // Inspection cap: degrees 0..cap+1 are materialized. Reads the
  // RHT_MAX_DEGREE environment variable (integer >= 2); defaults to 4.
  static int default_cap();
  // cap < 0 means default_cap(). Throws std::invalid_argument on bad data
  // (inhomogeneous relations, differential not degree +1 / weight 0, d^2
  // nonzero, d of a relation outside the ideal).
  static FiniteCdga build(Presentation p, int cap = -1);

  const Presentation& pres() const { return pres_; }
  const GenList& gens() const { return pres_.gens(); }
  int cap() const { return cap_; }
  bool weighted() const { return weighted_; }
  // True when every degree above the cap is provably zero (all generators
  // in degree 1 and degree cap+1 already reduces to nothing).
  bool vanishes_above_cap() const { return vanishes_; }

  // Dimension of the quotient in a degree. Degrees above cap+1 are only
  // answerable when vanishes_above_cap(); otherwise std::out_of_range.
  std::size_t dim(int deg) const;
  const std::vector<Monomial>& monomials(int deg) const;
  const std::vector<std::size_t>& basis_positions(int deg) const;
  const Monomial& basis_monomial(int deg, std::size_t i) const;
  std::string basis_label(int deg, std::size_t i) const;
  int basis_weight(int deg, std::size_t i) const;
  Element basis_element(int deg, std::size_t i) const;

  // Canonical form: ideal reduction applied to every homogeneous part.
  Element reduce(Element e) const;
  // Basis coordinates of a (possibly unreduced) element of pure degree.
  VecQ coords(int deg, const Element& e) const;
  Element from_coords(int deg, const VecQ& c) const;

  Element d(const Element& e) const;
  Element multiply(const Element& a, const Element& b) const;

  // Differential in basis coordinates: dim(deg+1) x dim(deg).
  MatrixQ d_matrix(int deg) const;

  // Weight blocks of the canonical basis (requires weighted()); the
  // differential preserves weight, so it restricts to each block.
  std::vector<int> weights_in(int deg) const;
  std::vector<std::size_t> block(int deg, int w) const;
  // d from block(deg, w) to block(deg+1, w), in block coordinates.
  MatrixQ d_matrix_block(int deg, int w) const;

 private:
  struct DegreeData {
    std::vector<Monomial> monos;           // ascending monomial order
    std::vector<VecQ> red_rows;            // ideal rref rows, full coords
    std::vector<std::size_t> red_pivots;   // pivot position per row, descending
    std::vector<std::size_t> basis;        // non-pivot positions, ascending
    std::vector<std::size_t> basis_index;  // position -> basis slot (npos if pivot)
  };

  const DegreeData& at(int deg) const;
  std::size_t mono_position(int deg, const Monomial& m) const;
  VecQ mono_coords(int deg, const Element& e) const;  // over all monomials
  void reduce_coords(int deg, VecQ& v) const;
  Element d_raw(const Element& e) const;  // free-algebra Leibniz expansion
  // Routes a raw free-algebra result: reduce when materialized, zero when
  // provably zero, throw otherwise.
  Element route(Element raw) const;

  Presentation pres_;
  int cap_ = 0;
  bool weighted_ = false;
  bool vanishes_ = false;
  std::vector<DegreeData> degs_;  // index = degree, 0..cap+1
};

// Algebra map determined on generators; validated to kill the source
// relations and commute with the differentials.
struct Morphism {
  const FiniteCdga* src = nullptr;
  const FiniteCdga* dst = nullptr;
  std::vector<Element> images;  // per source generator, element of dst
};

Morphism make_morphism(const FiniteCdga& src, const FiniteCdga& dst,
                       const std::map<std::string, Element>& images);
// the morphism points at both algebras, so temporaries are rejected
Morphism make_morphism(FiniteCdga&&, const FiniteCdga&,
                       const std::map<std::string, Element>&) = delete;
Morphism make_morphism(const FiniteCdga&, FiniteCdga&&,
                       const std::map<std::string, Element>&) = delete;
Element apply_morphism(const Morphism& f, const Element& e);

// The source presentation tensored with an acyclic two-generator piece
// (t in degree 1, s = dt in degree 2, both weight 1 when the source is
// weighted). Fresh names derive from "t"/"s" by appending underscores.
struct AcyclicExtension {
  Presentation pres;
  std::string t, s;
};
AcyclicExtension tensor_acyclic(const Presentation& p);

}  // namespace rht
