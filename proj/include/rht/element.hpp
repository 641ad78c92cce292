#pragma once

#include "rht/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rht {

struct Generator {
  std::string name;
  int degree = 1;
  int weight = 0;  // 0 = no weight assigned
};

using GenList = std::vector<Generator>;

// Product of generators, canonical form = indices sorted ascending. Odd
// generators never repeat (their square is zero); even ones may.
struct Monomial {
  std::vector<std::size_t> idx;

  bool operator==(const Monomial& o) const { return idx == o.idx; }
  bool operator<(const Monomial& o) const { return idx < o.idx; }

  int degree(const GenList& gens) const;
  int weight(const GenList& gens) const;
  std::string str(const GenList& gens) const;  // factors joined by '^'; "1" when empty
};

// Sorts the factors, tracking the Koszul sign: swapping adjacent odd factors
// flips the sign. Returns nullopt when an odd generator repeats (the term
// is zero).
std::optional<std::pair<Monomial, int>> canonical_monomial(
    std::vector<std::size_t> idx, const GenList& gens);

// Q-linear combination of canonical monomials. The map ordering is the
// lexicographic monomial order used everywhere (printing, coordinate
// vectors, reduction pivots).
class Element {
 public:
  Element() = default;

  static Element term(Monomial m, Scalar c);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, Scalar c);  // merges; drops zero results

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Scalar& c) const;
  Element& operator+=(const Element& o);
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  // Graded-commutative product; needs generator degrees for the signs.
  static Element multiply(const Element& a, const Element& b,
                          const GenList& gens);

  // Degree/weight when every term agrees; nullopt for 0 or mixed elements.
  std::optional<int> degree(const GenList& gens) const;
  std::optional<int> weight(const GenList& gens) const;

  std::string str(const GenList& gens) const;

 private:
  std::map<Monomial, Scalar> terms_;
};

}  // namespace rht
