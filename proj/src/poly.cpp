#include "rht/poly.hpp"

#include <algorithm>

namespace rht {

int ParamMono::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps) d += e;
  return d;
}

Poly::Poly(Scalar c) {
  if (c != 0) terms_.emplace(ParamMono{}, std::move(c));
}

Poly Poly::var(std::size_t id) {
  Poly p;
  p.terms_.emplace(ParamMono{{{id, 1}}}, Scalar(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
}

Scalar Poly::constant_value() const {
  auto it = terms_.find(ParamMono{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Poly::add(const ParamMono& m, const Scalar& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      // merge sorted exponent lists
      ParamMono m;
      auto ia = ma.exps.begin(), ib = mb.exps.begin();
      while (ia != ma.exps.end() || ib != mb.exps.end()) {
        if (ib == mb.exps.end() || (ia != ma.exps.end() && ia->first < ib->first))
          m.exps.push_back(*ia++);
        else if (ia == ma.exps.end() || ib->first < ia->first)
          m.exps.push_back(*ib++);
        else {
          m.exps.emplace_back(ia->first, ia->second + ib->second);
          ++ia;
          ++ib;
        }
      }
      r.add(m, ca * cb);
    }
  return r;
}

Poly Poly::subst(std::size_t var, const Poly& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int exp = 0;
    ParamMono rest;
    for (const auto& [v, e] : m.exps) {
      if (v == var) exp = e;
      else rest.exps.emplace_back(v, e);
    }
    Poly piece;
    piece.terms_.emplace(rest, c);
    for (int i = 0; i < exp; ++i) piece = piece * value;
    r += piece;
  }
  return r;
}

Scalar Poly::eval(const std::map<std::size_t, Scalar>& point) const {
  Scalar out = 0;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (const auto& [var, e] : m.exps) {
      auto it = point.find(var);
      const Scalar x = it == point.end() ? Scalar(0) : it->second;
      if (x == 0) {
        v = 0;
        break;
      }
      for (int i = 0; i < e; ++i) v *= x;
    }
    out += v;
  }
  return out;
}

std::vector<std::size_t> Poly::vars() const {
  std::vector<std::size_t> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exps)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Scalar, std::map<std::size_t, Scalar>>>
Poly::affine_form() const {
  Scalar c0 = 0;
  std::map<std::size_t, Scalar> lin;
  for (const auto& [m, c] : terms_) {
    if (m.exps.empty()) c0 = c;
    else if (m.exps.size() == 1 && m.exps.front().second == 1)
      lin[m.exps.front().first] = c;
    else
      return std::nullopt;
  }
  return std::make_pair(std::move(c0), std::move(lin));
}

std::string Poly::default_name(std::size_t id) {
  return "t" + std::to_string(id);
}

std::string Poly::str(
    const std::function<std::string(std::size_t)>& name) const {
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
    std::string ms;
    for (const auto& [v, e] : m.exps) {
      if (!ms.empty()) ms += '*';
      ms += name(v);
      if (e > 1) ms += "^" + std::to_string(e);
    }
    if (ms.empty()) s += scalar_to_string(mag);
    else if (mag == 1) s += ms;
    else s += scalar_to_string(mag) + "*" + ms;
  }
  return s;
}

}  // namespace rht
