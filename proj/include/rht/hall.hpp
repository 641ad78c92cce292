#pragma once

#include "rht/scalar.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rht {

// One element of a Hall basis: a generator (length 1) or a bracket of two
// earlier basis elements (length >= 2).
struct HallElem {
  std::size_t left = 0;   // basis index, length >= 2 only
  std::size_t right = 0;  // basis index, length >= 2 only
  std::size_t gen = 0;    // generator id, length == 1 only
  std::size_t length = 1;
};

// Hall basis of the free Lie algebra on n generators, up to a bracket
// length cap. The family is the standard left-normed Hall set: elements
// are ordered by length and then by construction, generators come first in
// declaration order, and [u, v] belongs to the family iff u > v and u is
// either a generator or a bracket [x, y] with y <= v. Per-length counts
// match the Witt formula.
//
// Construction is immutable; expand() memoizes behind a lock, so shared
// concurrent queries are safe.
class HallBasis {
 public:
  HallBasis(std::size_t n, std::size_t max_length);

  std::size_t generators() const { return n_; }
  std::size_t max_length() const { return maxlen_; }
  std::size_t size() const { return elems_.size(); }
  const HallElem& elem(std::size_t i) const { return elems_[i]; }
  std::size_t offset(std::size_t len) const;  // first index of that length
  std::size_t count(std::size_t len) const;

  // index of the family element [a, b], when that bracket is one
  std::optional<std::size_t> pair_index(std::size_t a, std::size_t b) const;

  // [a, b] rewritten over the basis by antisymmetry and the Jacobi
  // identity (memoized collection). The result lives in the layer of
  // length len(a) + len(b), which must be within the cap.
  std::map<std::size_t, Scalar> expand(std::size_t a, std::size_t b) const;

  std::string str(std::size_t i,
                  const std::vector<std::string>& names) const;

 private:
  std::map<std::size_t, Scalar> expand_raw(std::size_t a, std::size_t b,
                                           int depth) const;

  std::size_t n_ = 0;
  std::size_t maxlen_ = 0;
  std::vector<HallElem> elems_;
  std::vector<std::size_t> offsets_;  // size maxlen_ + 1
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_idx_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>,
                   std::map<std::size_t, Scalar>>
      memo_;
};

// Dimension of the length-w layer of the free Lie algebra on n generators:
// (1/w) sum over d | w of mobius(d) * n^(w/d).
std::size_t witt_dimension(std::size_t n, std::size_t w);

}  // namespace rht
