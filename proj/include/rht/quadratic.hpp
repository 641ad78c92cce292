#pragma once

#include "rht/cdga.hpp"
#include "rht/lie.hpp"
#include "rht/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace rht {

// Quadratic(-linear) presentation data of an algebra generated in degree
// one: a named basis of the generating space V, a spanning set of the
// relation subspace R of V(x)V (tensor a(x)b stored at coordinate a*n+b),
// and a linear map phi: V(x)V -> V whose restriction to R carries the
// linear correction of each relation. For the data of a differential
// algebra, phi is the transpose of the antisymmetric lift of the
// differential V -> V(x)V, and it vanishes on the graded-commutativity
// part of R.
struct QuadraticData {
  std::string label;
  std::vector<std::string> names;
  std::vector<int> weights;      // per generator, >= 1
  std::vector<VecQ> relations;   // rows of size n*n spanning R
  std::vector<VecQ> phi;         // n*n rows of size n; empty means zero
};

// Quadratic data of a finite algebra generated in degree 1: V = the
// generators, R = the kernel of the multiplication V(x)V -> A^2 (so R
// contains the commutativity and square elements automatically), phi from
// the presentation differential. Generators outside degree 1 are
// rejected.
QuadraticData quadratic_data(const FiniteCdga& alg);

// Quadratic data of the degree-<=2 truncation of the Chevalley-Eilenberg
// algebra of a presented Lie algebra: R is the annihilator of the
// embedded length-2 relation layers (hence contains the full symmetric
// part), phi is zero. Relations must be length-homogeneous; layers of
// length other than 2 do not enter.
QuadraticData quadratic_data_from_lie(const LiePresentation& p);

// Koszul-dual Lie presentation. Computes the annihilator I-perp of
// span(R) under the pairing <a(x)b, xi(x)eta> = <a,xi><b,eta> (no Koszul
// sign), verifies every annihilator vector is antisymmetric (which the
// commutativity part of R forces), and emits one relation per annihilator
// basis vector alpha:
//     sum_{a<b} alpha_ab [xi_a, xi_b]  -  sum_{a,b} alpha_ab phi(a(x)b).
// Dual generators keep the source order and weights; dual_names overrides
// the names (empty keeps the source names). Rejects data whose R misses a
// commutativity element or whose phi fails to vanish on one.
LiePresentation quadratic_dual(
    const QuadraticData& q,
    const std::vector<std::string>& dual_names = {});

// Conventional dual-basis names X1..Xk, Y1..Yk for 2k symplectically
// paired generators, optionally extended by Z, W for the two central
// generators of the weighted model.
std::vector<std::string> symplectic_dual_names(int k);
std::vector<std::string> extended_dual_names(int k);

// One rewriting rule over two-letter tensor words: the leading word
// rewrites to a combination of strictly smaller words. Rules whose
// leading word is non-ascending in the chosen order are the ones forced
// by commutativity (squares and transpositions).
struct RewriteRule {
  std::array<std::size_t, 2> lead{};
  std::map<std::array<std::size_t, 2>, Scalar> rhs;
  bool commutativity = false;
};

struct CriticalMonomial {
  std::array<std::size_t, 3> word{};
  // true when both overlapping rules are non-commutativity rules
  bool interesting = false;
  bool confluent = false;
  std::string left_normal_form;
  std::string right_normal_form;
};

struct ConfluenceReport {
  bool confluent = false;
  std::vector<RewriteRule> rules;
  std::vector<CriticalMonomial> criticals;
};

// Rewriting-method check at weight 3. Orients span(R) by the given
// generator order (the reduced row echelon form over two-letter words
// sorted descending, so each leading word rewrites to smaller normal
// words), enumerates every overlap word a(x)b(x)c whose halves are both
// leading words, rewrites each overlap both ways to its normal form, and
// reports per-overlap confluence plus the overall verdict. `order` lists
// generator indices from smallest to largest; empty means declaration
// order.
ConfluenceReport confluence_check(const QuadraticData& q,
                                  const std::vector<std::size_t>& order = {});

}  // namespace rht
