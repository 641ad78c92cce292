#include "rht/hall.hpp"

#include <stdexcept>

namespace rht {

HallBasis::HallBasis(std::size_t n, std::size_t max_length)
    : n_(n), maxlen_(max_length) {
  if (n == 0) throw std::invalid_argument("HallBasis: need a generator");
  if (max_length == 0)
    throw std::invalid_argument("HallBasis: need a positive length cap");
  offsets_.push_back(0);
  for (std::size_t g = 0; g < n; ++g) {
    HallElem e;
    e.gen = g;
    e.length = 1;
    elems_.push_back(e);
  }
  for (std::size_t len = 2; len <= max_length; ++len) {
    offsets_.push_back(elems_.size());
    const std::size_t shorter = offsets_.back();
    for (std::size_t v = 0; v < shorter; ++v)
      for (std::size_t u = v + 1; u < shorter; ++u) {
        if (elems_[u].length + elems_[v].length != len) continue;
        if (elems_[u].length > 1 && elems_[u].right > v) continue;
        HallElem e;
        e.left = u;
        e.right = v;
        e.length = len;
        pair_idx_.emplace(std::pair(u, v), elems_.size());
        elems_.push_back(e);
      }
  }
  offsets_.push_back(elems_.size());
}

std::size_t HallBasis::offset(std::size_t len) const {
  if (len < 1 || len > maxlen_)
    throw std::out_of_range("HallBasis: length outside the cap");
  return offsets_[len - 1];
}

std::size_t HallBasis::count(std::size_t len) const {
  return offsets_[len] - offset(len);
}

std::optional<std::size_t> HallBasis::pair_index(std::size_t a,
                                                 std::size_t b) const {
  auto it = pair_idx_.find({a, b});
  if (it == pair_idx_.end()) return std::nullopt;
  return it->second;
}

std::map<std::size_t, Scalar> HallBasis::expand(std::size_t a,
                                                std::size_t b) const {
  if (a >= size() || b >= size())
    throw std::out_of_range("HallBasis: no such element");
  if (elems_[a].length + elems_[b].length > maxlen_)
    throw std::invalid_argument("HallBasis: bracket exceeds the length cap");
  std::lock_guard<std::mutex> lock(mu_);
  return expand_raw(a, b, 0);
}

std::map<std::size_t, Scalar> HallBasis::expand_raw(std::size_t a,
                                                    std::size_t b,
                                                    int depth) const {
  // The collection below always terminates: recursion either lowers the
  // total length or keeps it while the Hall order strictly increases on
  // one side. The depth guard exists to turn any violation of that
  // argument into a loud failure instead of a hang.
  if (depth > 100000)
    throw std::logic_error("HallBasis: expansion recursion ran away");
  if (a == b) return {};
  if (a < b) {
    auto m = expand_raw(b, a, depth + 1);
    for (auto& [i, c] : m) c = -c;
    return m;
  }
  if (auto it = memo_.find(std::pair(a, b)); it != memo_.end())
    return it->second;
  if (auto idx = pair_index(a, b)) return {{*idx, Scalar(1)}};

  // a = [x, y] with y > b, so [[x, y], b] = [x, [y, b]] + [[x, b], y]
  const std::size_t x = elems_[a].left, y = elems_[a].right;
  if (elems_[a].length == 1 || y <= b)
    throw std::logic_error("HallBasis: family element missing");
  std::map<std::size_t, Scalar> out;
  for (const auto& [t, c] : expand_raw(y, b, depth + 1))
    for (const auto& [r, c2] : expand_raw(x, t, depth + 1)) out[r] += c * c2;
  for (const auto& [s, c] : expand_raw(x, b, depth + 1))
    for (const auto& [r, c2] : expand_raw(s, y, depth + 1)) out[r] += c * c2;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  memo_.emplace(std::pair(a, b), out);
  return out;
}

std::string HallBasis::str(std::size_t i,
                           const std::vector<std::string>& names) const {
  if (names.size() != n_)
    throw std::invalid_argument("HallBasis: one name per generator");
  const HallElem& e = elems_[i];
  if (e.length == 1) return names[e.gen];
  return "[" + str(e.left, names) + "," + str(e.right, names) + "]";
}

std::size_t witt_dimension(std::size_t n, std::size_t w) {
  if (n == 0 || w == 0)
    throw std::invalid_argument("witt_dimension: positive arguments only");
  auto mobius = [](std::size_t d) -> int {
    int sign = 1;
    for (std::size_t p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      sign = -sign;
    }
    if (d > 1) sign = -sign;
    return sign;
  };
  Scalar sum = 0;
  for (std::size_t d = 1; d <= w; ++d) {
    if (w % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    Scalar power = 1;
    for (std::size_t i = 0; i < w / d; ++i) power *= Scalar(n);
    sum += mu * power;
  }
  sum /= Scalar(w);
  if (denominator(sum) != 1)
    throw std::logic_error("witt_dimension: non-integer result");
  return numerator(sum).convert_to<std::size_t>();
}

}  // namespace rht
