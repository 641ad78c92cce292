#include "rht/element.hpp"

namespace rht {

int Monomial::degree(const GenList& gens) const {
  int d = 0;
  for (auto i : idx) d += gens[i].degree;
  return d;
}

int Monomial::weight(const GenList& gens) const {
  int w = 0;
  for (auto i : idx) w += gens[i].weight;
  return w;
}

std::string Monomial::str(const GenList& gens) const {
  if (idx.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += '^';
    s += gens[idx[k]].name;
  }
  return s;
}

std::optional<std::pair<Monomial, int>> canonical_monomial(
    std::vector<std::size_t> idx, const GenList& gens) {
  int sign = 1;
  // insertion sort; each adjacent swap of two odd factors flips the sign
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      if (gens[idx[j - 1]].degree % 2 && gens[idx[j]].degree % 2) sign = -sign;
      std::swap(idx[j - 1], idx[j]);
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i] && gens[idx[i]].degree % 2) return std::nullopt;
  return std::make_pair(Monomial{std::move(idx)}, sign);
}

Element Element::term(Monomial m, Scalar c) {
  Element e;
  e.add_term(m, std::move(c));
  return e;
}

void Element::add_term(const Monomial& m, Scalar c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Element Element::operator-() const {
  Element r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Scalar& c) const {
  Element r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element Element::multiply(const Element& a, const Element& b,
                          const GenList& gens) {
  Element r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      std::vector<std::size_t> idx = ma.idx;
      idx.insert(idx.end(), mb.idx.begin(), mb.idx.end());
      auto canon = canonical_monomial(std::move(idx), gens);
      if (!canon) continue;
      r.add_term(canon->first, ca * cb * canon->second);
    }
  return r;
}

std::optional<int> Element::degree(const GenList& gens) const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int md = m.degree(gens);
    if (!d) d = md;
    else if (*d != md) return std::nullopt;
  }
  return d;
}

std::optional<int> Element::weight(const GenList& gens) const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) {
    const int mw = m.weight(gens);
    if (!w) w = mw;
    else if (*w != mw) return std::nullopt;
  }
  return w;
}

std::string Element::str(const GenList& gens) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (first) {
      if (neg) s += '-';
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    if (m.idx.empty()) {
      s += scalar_to_string(mag);
    } else if (mag == 1) {
      s += m.str(gens);
    } else {
      s += scalar_to_string(mag) + "*" + m.str(gens);
    }
  }
  return s;
}

}  // namespace rht
