#pragma once

#include "rht/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace rht {

// Finite-dimensional nilpotent Lie algebra with a bracket-length grading:
// layer 1 holds the generators, [layer p, layer q] lands in layer p+q.
// Weights are an optional second attribute carried along for comparisons.
struct GradedLie {
  std::vector<std::size_t> layer_dims;  // dims of layers 1, 2, ...
  std::vector<std::string> names;       // flattened basis, layer-major
  std::vector<int> layer_of;            // 1-based layer per basis element
  std::vector<int> weights;             // 0 where unweighted
  // [e_i, e_j] for i < j, as full-basis coordinate vectors
  std::map<std::pair<std::size_t, std::size_t>, VecQ> bracket;

  std::size_t dim() const { return names.size(); }
  VecQ bracket_of(std::size_t i, std::size_t j) const;  // any pair
  // bilinear extension to coordinate vectors
  VecQ bracket_vec(const VecQ& x, const VecQ& y) const;
  bool jacobi_holds() const;
};

// Graded-isomorphism test: layer dimensions first, then a search over
// signed permutations of the generator layer, each extended layer by layer
// through the bracket pairing. An exhausted search is inconclusive (a
// non-monomial change of basis could still exist), and searches larger
// than the budget are not attempted.
enum class LieCompare { isomorphic, distinct, undecided };
struct LieCompareReport {
  LieCompare result = LieCompare::undecided;
  std::string detail;
};
LieCompareReport lie_graded_compare(const GradedLie& a, const GradedLie& b,
                                    std::size_t budget = 10000);

}  // namespace rht
