#pragma once

#include "json.hpp"
#include "rht/graded_lie.hpp"
#include "rht/hall.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rht {

// Formal bracket expression over named generators: either a generator
// leaf or a bracket of two subexpressions. Immutable; copies share
// structure.
class LieExpr {
 public:
  static LieExpr gen(std::string name);
  static LieExpr bracket(LieExpr left, LieExpr right);

  bool is_gen() const { return !gen_.empty(); }
  const std::string& gen_name() const;  // leaf only
  const LieExpr& left() const;          // bracket only
  const LieExpr& right() const;         // bracket only
  std::size_t length() const { return length_; }
  bool contains(const std::string& name) const;
  std::string str() const;  // e.g. "[[X1,Y1],X2]"

 private:
  LieExpr() = default;
  std::string gen_;
  std::shared_ptr<const LieExpr> l_, r_;
  std::size_t length_ = 1;
};

struct LieTerm {
  Scalar coeff;
  LieExpr expr;
};
// Linear combination of bracket expressions.
using LieElement = std::vector<LieTerm>;

struct LieGen {
  std::string name;
  int weight = 1;
};

// Finitely presented Lie algebra over the rationals: weighted generators
// plus relations given as elements of the free Lie algebra on them.
// Relations may mix bracket lengths (as happens for a dual presentation
// whose defining relation expresses one generator by brackets of the
// others); the lower-central-series operations below require each relation
// to be length-homogeneous and reject presentations where one is not.
class LiePresentation {
 public:
  std::string label;

  std::size_t add_generator(const std::string& name, int weight = 1);
  void add_relation(LieElement r);

  const std::vector<LieGen>& gens() const { return gens_; }
  const std::vector<LieElement>& relations() const { return rels_; }
  bool has_generator(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

  nlohmann::json to_json() const;
  static LiePresentation from_json(const nlohmann::json& j);

 private:
  std::vector<LieGen> gens_;
  std::vector<LieElement> rels_;
};

// Dimensions of the lower-central-series layers (bracket lengths 1..max)
// of the presented algebra: free layer modulo the ideal spanned degreewise
// by the relations and their brackets with generators.
std::vector<std::size_t> lcs_layer_dims(const LiePresentation& p,
                                        std::size_t max_length);

// The same quotient as a concrete graded Lie algebra with chosen basis
// representatives per layer. Layer-1 representatives keep their generator
// names; deeper ones are named L<layer>_<i>. Weights are inherited from
// the generators (summed over bracket leaves).
GradedLie lcs_quotient(const LiePresentation& p, std::size_t max_length);

// Rewrites every relation through the substitution name := value (the
// generator itself stays). With value = -name this is a sign change of
// basis.
LiePresentation substitute_generator(const LiePresentation& p,
                                     const std::string& name,
                                     const LieElement& value);

// Removes a generator defined by one of the relations (the first relation
// where it appears as a bare linear term and nowhere else). The defining
// relation is consumed, the rest are rewritten, re-expanded in the Hall
// basis, and dropped when they expand to zero or lie in the degreewise
// ideal span of the remaining ones.
LiePresentation eliminate_generator(const LiePresentation& p,
                                    const std::string& name);

// Positional comparison: generator counts and weights agree and the
// relation ideals agree layer by layer (so normalization differences and
// redundant-relation choices do not matter). Requires length-homogeneous
// relations on both sides.
bool lie_presentations_equal(const LiePresentation& a,
                             const LiePresentation& b);

// Sorted canonical display strings, one per relation: each relation is
// expanded in the Hall basis, written layers-ascending with terms in basis
// order, and scaled so its first nonzero coefficient is 1. Two
// presentations on the same generator list produce the same vector
// exactly when their relation lists agree up to order, scalar multiples,
// and Hall normalization.
std::vector<std::string> normalized_relation_strings(const LiePresentation& p);

// Presentation with generators X1..Xk, Y1..Yk of weight 1 and Z of weight
// 2, relations [Z,Xi] = [Z,Yi] = 0 and sum_j [[Xj,Yj],Xi] =
// sum_j [[Xj,Yj],Yi] = 0.
LiePresentation lie_main_theorem(int k);

// "lie-main:k" -> lie_main_theorem(k)
std::optional<LiePresentation> parse_lie_preset(const std::string& id);

// Graded comparison of the two presented algebras through their
// lower-central-series quotients up to the given length.
LieCompareReport lie_graded_compare(const LiePresentation& a,
                                    const LiePresentation& b,
                                    std::size_t max_length,
                                    std::size_t budget = 10000);

}  // namespace rht
