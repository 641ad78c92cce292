#pragma once

#include "rht/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace rht {

// Monomial in the parameter variables: sorted (variable, exponent) pairs.
struct ParamMono {
  std::vector<std::pair<std::size_t, int>> exps;

  bool operator==(const ParamMono& o) const { return exps == o.exps; }
  bool operator<(const ParamMono& o) const { return exps < o.exps; }
  int total_degree() const;
};

// Exact polynomial over Q in countably many parameters. Small and dense in
// the term map; parameter counts stay in the dozens for everything in scope.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar c);  // implicit: constants embed
  static Poly var(std::size_t id);

  const std::map<ParamMono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // the constant term (zero polynomial included); meaningful alone only
  // when is_constant()
  Scalar constant_value() const;
  int degree() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);

  // substitute a polynomial for one variable
  Poly subst(std::size_t var, const Poly& value) const;
  // full evaluation; unassigned variables count as 0
  Scalar eval(const std::map<std::size_t, Scalar>& point) const;

  std::vector<std::size_t> vars() const;  // sorted, distinct
  // constant + linear part when the polynomial is affine, nullopt otherwise
  std::optional<std::pair<Scalar, std::map<std::size_t, Scalar>>> affine_form()
      const;

  std::string str(
      const std::function<std::string(std::size_t)>& name = default_name) const;
  static std::string default_name(std::size_t id);

 private:
  void add(const ParamMono& m, const Scalar& c);
  std::map<ParamMono, Scalar> terms_;
};

using PolyVec = std::vector<Poly>;

}  // namespace rht
