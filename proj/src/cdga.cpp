#include "rht/cdga.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace rht {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

void gen_monomials(const GenList& gens, std::size_t min_index, int remaining,
                   std::vector<std::size_t>& cur, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial{cur});
    return;
  }
  for (std::size_t i = min_index; i < gens.size(); ++i) {
    if (gens[i].degree > remaining) continue;
    cur.push_back(i);
    const std::size_t next = gens[i].degree % 2 ? i + 1 : i;
    gen_monomials(gens, next, remaining - gens[i].degree, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int FiniteCdga::default_cap() {
  if (const char* env = std::getenv("RHT_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 2 && v <= 64) return static_cast<int>(v);
  }
  return 4;
}

const FiniteCdga::DegreeData& FiniteCdga::at(int deg) const {
  return degs_[static_cast<std::size_t>(deg)];
}

std::size_t FiniteCdga::mono_position(int deg, const Monomial& m) const {
  const auto& monos = at(deg).monos;
  auto it = std::lower_bound(monos.begin(), monos.end(), m);
  if (it == monos.end() || !(*it == m))
    throw std::logic_error("monomial not enumerated in its degree");
  return static_cast<std::size_t>(it - monos.begin());
}

VecQ FiniteCdga::mono_coords(int deg, const Element& e) const {
  VecQ v(at(deg).monos.size());
  for (const auto& [m, c] : e.terms()) v[mono_position(deg, m)] = c;
  return v;
}

void FiniteCdga::reduce_coords(int deg, VecQ& v) const {
  const auto& dd = at(deg);
  for (std::size_t r = 0; r < dd.red_rows.size(); ++r) {
    const std::size_t p = dd.red_pivots[r];
    if (v[p] == 0) continue;
    const Scalar f = v[p];
    const VecQ& row = dd.red_rows[r];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
}

Element FiniteCdga::route(Element raw) const {
  std::map<int, Element> parts;
  for (const auto& [m, c] : raw.terms())
    parts[m.degree(gens())].add_term(m, c);
  Element out;
  for (auto& [deg, part] : parts) {
    if (deg <= cap_ + 1) {
      VecQ v = mono_coords(deg, part);
      reduce_coords(deg, v);
      const auto& monos = at(deg).monos;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out.add_term(monos[j], v[j]);
    } else if (vanishes_) {
      // provably zero above the cap
    } else {
      throw std::out_of_range("operation leaves the materialized degree range (degree " +
                              std::to_string(deg) + " > cap+1)");
    }
  }
  return out;
}

Element FiniteCdga::reduce(Element e) const { return route(std::move(e)); }

std::size_t FiniteCdga::dim(int deg) const {
  if (deg < 0) return 0;
  if (deg <= cap_ + 1) return at(deg).basis.size();
  if (vanishes_) return 0;
  throw std::out_of_range("dimension not materialized beyond cap+1");
}

const std::vector<Monomial>& FiniteCdga::monomials(int deg) const {
  if (deg < 0 || deg > cap_ + 1)
    throw std::out_of_range("degree not materialized");
  return at(deg).monos;
}

const std::vector<std::size_t>& FiniteCdga::basis_positions(int deg) const {
  if (deg < 0 || deg > cap_ + 1)
    throw std::out_of_range("degree not materialized");
  return at(deg).basis;
}

const Monomial& FiniteCdga::basis_monomial(int deg, std::size_t i) const {
  return at(deg).monos[at(deg).basis[i]];
}

std::string FiniteCdga::basis_label(int deg, std::size_t i) const {
  return basis_monomial(deg, i).str(gens());
}

int FiniteCdga::basis_weight(int deg, std::size_t i) const {
  return basis_monomial(deg, i).weight(gens());
}

Element FiniteCdga::basis_element(int deg, std::size_t i) const {
  return Element::term(basis_monomial(deg, i), 1);
}

VecQ FiniteCdga::coords(int deg, const Element& e) const {
  if (deg < 0 || deg > cap_ + 1) {
    if (vanishes_ && deg > cap_ + 1 && route(e).is_zero()) return VecQ{};
    throw std::out_of_range("coords: degree not materialized");
  }
  for (const auto& [m, c] : e.terms())
    if (m.degree(gens()) != deg)
      throw std::invalid_argument("coords: element not homogeneous of degree " +
                                  std::to_string(deg));
  VecQ v = mono_coords(deg, e);
  reduce_coords(deg, v);
  const auto& dd = at(deg);
  VecQ out(dd.basis.size());
  for (std::size_t i = 0; i < dd.basis.size(); ++i) out[i] = v[dd.basis[i]];
  return out;
}

Element FiniteCdga::from_coords(int deg, const VecQ& c) const {
  const auto& dd = at(deg);
  if (c.size() != dd.basis.size())
    throw std::invalid_argument("from_coords: wrong length");
  Element e;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) e.add_term(dd.monos[dd.basis[i]], c[i]);
  return e;
}

Element FiniteCdga::d_raw(const Element& e) const {
  Element out;
  const auto& G = gens();
  const auto& diff = pres_.differential();
  for (const auto& [m, c] : e.terms()) {
    int sgn = 1;
    for (std::size_t j = 0; j < m.idx.size(); ++j) {
      const std::size_t gi = m.idx[j];
      const Element& dg = diff[gi];
      if (!dg.is_zero()) {
        Monomial prefix{std::vector<std::size_t>(m.idx.begin(), m.idx.begin() + j)};
        Monomial suffix{std::vector<std::size_t>(m.idx.begin() + j + 1, m.idx.end())};
        Element piece = Element::multiply(Element::term(prefix, c * sgn), dg, G);
        piece = Element::multiply(piece, Element::term(suffix, 1), G);
        out += piece;
      }
      if (G[gi].degree % 2) sgn = -sgn;
    }
  }
  return out;
}

Element FiniteCdga::d(const Element& e) const { return route(d_raw(e)); }

Element FiniteCdga::multiply(const Element& a, const Element& b) const {
  return route(Element::multiply(a, b, gens()));
}

MatrixQ FiniteCdga::d_matrix(int deg) const {
  const std::size_t nc = dim(deg);
  const std::size_t nr = dim(deg + 1);
  MatrixQ m(nr, nc);
  if (nr == 0) return m;
  for (std::size_t j = 0; j < nc; ++j) {
    VecQ col = coords(deg + 1, d(basis_element(deg, j)));
    for (std::size_t i = 0; i < nr; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<int> FiniteCdga::weights_in(int deg) const {
  if (!weighted_) throw std::logic_error("weights_in: algebra is not weighted");
  std::vector<int> ws;
  for (std::size_t i = 0; i < dim(deg); ++i) {
    const int w = basis_weight(deg, i);
    if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
  }
  std::sort(ws.begin(), ws.end());
  return ws;
}

std::vector<std::size_t> FiniteCdga::block(int deg, int w) const {
  if (!weighted_) throw std::logic_error("block: algebra is not weighted");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(deg); ++i)
    if (basis_weight(deg, i) == w) out.push_back(i);
  return out;
}

MatrixQ FiniteCdga::d_matrix_block(int deg, int w) const {
  const auto src = block(deg, w);
  const auto dst = deg + 1 <= cap_ + 1 ? block(deg + 1, w)
                                       : std::vector<std::size_t>{};
  if (deg + 1 > cap_ + 1 && !vanishes_)
    throw std::out_of_range("d_matrix_block: target degree not materialized");
  MatrixQ m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Element de = d(basis_element(deg, src[j]));
    if (de.is_zero()) continue;
    VecQ col = coords(deg + 1, de);
    // d preserves weight, so the image is supported on the same block
    for (std::size_t i = 0; i < dst.size(); ++i) {
      m.at(i, j) = col[dst[i]];
      col[dst[i]] = 0;
    }
    if (!is_zero(col))
      throw std::logic_error("d_matrix_block: differential left its weight block");
  }
  return m;
}

FiniteCdga FiniteCdga::build(Presentation p, int cap) {
  FiniteCdga a;
  a.cap_ = cap < 0 ? default_cap() : cap;
  if (a.cap_ < 2) throw std::invalid_argument("cap must be at least 2");
  a.pres_ = std::move(p);
  a.weighted_ = a.pres_.weighted();
  const auto& G = a.pres_.gens();

  for (const auto& g : G)
    if (g.degree > a.cap_)
      throw std::invalid_argument("generator '" + g.name +
                                  "' exceeds the inspection cap");

  // relations: homogeneous, inside the materialized range
  for (const auto& r : a.pres_.relations()) {
    auto deg = r.degree(G);
    if (!deg || *deg < 1)
      throw std::invalid_argument("relation '" + r.str(G) +
                                  "' is not homogeneous of positive degree");
    if (*deg > a.cap_)
      throw std::invalid_argument("relation '" + r.str(G) +
                                  "' exceeds the inspection cap");
    if (a.weighted_ && !r.weight(G))
      throw std::invalid_argument("relation '" + r.str(G) +
                                  "' is not weight-homogeneous");
  }
  // differential: degree +1, weight preserved
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Element& dg = a.pres_.differential()[i];
    if (dg.is_zero()) continue;
    auto deg = dg.degree(G);
    if (!deg || *deg != G[i].degree + 1)
      throw std::invalid_argument("d(" + G[i].name +
                                  ") must be homogeneous of degree " +
                                  std::to_string(G[i].degree + 1));
    if (a.weighted_) {
      auto w = dg.weight(G);
      if (!w || *w != G[i].weight)
        throw std::invalid_argument("d(" + G[i].name +
                                    ") must preserve the weight " +
                                    std::to_string(G[i].weight));
    }
  }

  // materialize degrees 0..cap+1
  a.degs_.resize(static_cast<std::size_t>(a.cap_) + 2);
  for (int n = 0; n <= a.cap_ + 1; ++n) {
    auto& dd = a.degs_[static_cast<std::size_t>(n)];
    std::vector<std::size_t> cur;
    gen_monomials(G, 0, n, cur, dd.monos);

    // ideal span rows: every relation times every complementary monomial
    const std::size_t nm = dd.monos.size();
    MatrixQ rows;  // reversed coordinates: column j <-> monomial nm-1-j
    for (const auto& r : a.pres_.relations()) {
      const int dr = *r.degree(G);
      if (dr > n) continue;
      for (const auto& m : a.degs_[static_cast<std::size_t>(n - dr)].monos) {
        Element prod = Element::multiply(r, Element::term(m, 1), G);
        if (prod.is_zero()) continue;
        VecQ row(nm);
        for (const auto& [pm, c] : prod.terms()) {
          auto it = std::lower_bound(dd.monos.begin(), dd.monos.end(), pm);
          row[nm - 1 - static_cast<std::size_t>(it - dd.monos.begin())] = c;
        }
        rows.append_row(std::move(row));
      }
    }
    if (rows.rows() > 0) {
      auto rr = rref(std::move(rows));
      for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        VecQ normal(nm);
        for (std::size_t j = 0; j < nm; ++j) normal[nm - 1 - j] = rr.mat.at(i, j);
        dd.red_rows.push_back(std::move(normal));
        dd.red_pivots.push_back(nm - 1 - rr.pivots[i]);
      }
    }
    dd.basis_index.assign(nm, npos);
    std::vector<bool> is_pivot(nm, false);
    for (auto p_ : dd.red_pivots) is_pivot[p_] = true;
    for (std::size_t j = 0; j < nm; ++j)
      if (!is_pivot[j]) {
        dd.basis_index[j] = dd.basis.size();
        dd.basis.push_back(j);
      }
  }

  bool all_deg1 = !G.empty();
  for (const auto& g : G) all_deg1 = all_deg1 && g.degree == 1;
  a.vanishes_ = all_deg1 && a.degs_.back().basis.empty();

  // the differential must preserve the relation ideal
  for (const auto& r : a.pres_.relations())
    if (!a.route(a.d_raw(r)).is_zero())
      throw std::invalid_argument("d(" + r.str(G) +
                                  ") does not lie in the relation ideal");
  // d*d vanishes on generators, hence everywhere by the Leibniz rule
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Element dg = a.route(a.pres_.differential()[i]);
    if (!a.route(a.d_raw(dg)).is_zero())
      throw std::invalid_argument("d^2(" + G[i].name + ") is nonzero");
  }

  // Leibniz consistency of the reduced operations. In a free algebra this
  // is the definition of d, so only quotients are swept.
  if (!a.pres_.relations().empty()) {
    for (int da = 1; da + 2 <= a.cap_ + 1; ++da)
      for (int db = da; da + db + 1 <= a.cap_ + 1; ++db) {
        const std::size_t na = a.dim(da), nb = a.dim(db);
        bool ok = true;
        const long long total = static_cast<long long>(na * nb);
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
        for (long long t = 0; t < total; ++t) {
          const std::size_t i = static_cast<std::size_t>(t) / nb;
          const std::size_t j = static_cast<std::size_t>(t) % nb;
          const Element x = a.basis_element(da, i);
          const Element y = a.basis_element(db, j);
          const Element lhs = a.d(a.multiply(x, y));
          Element rhs = a.multiply(a.d(x), y);
          const Element xdy = a.multiply(x, a.d(y));
          rhs += da % 2 ? -xdy : xdy;
          ok = ok && lhs == rhs;
        }
        if (!ok)
          throw std::invalid_argument(
              "Leibniz consistency failed in degrees (" + std::to_string(da) +
              ", " + std::to_string(db) + ")");
      }
  }
  return a;
}

Morphism make_morphism(const FiniteCdga& src, const FiniteCdga& dst,
                       const std::map<std::string, Element>& images) {
  Morphism f;
  f.src = &src;
  f.dst = &dst;
  const auto& G = src.gens();
  for (const auto& g : G) {
    auto it = images.find(g.name);
    if (it == images.end())
      throw std::invalid_argument("morphism: no image for generator '" +
                                  g.name + "'");
    Element img = dst.reduce(it->second);
    if (!img.is_zero()) {
      auto deg = img.degree(dst.gens());
      if (!deg || *deg != g.degree)
        throw std::invalid_argument("morphism: image of '" + g.name +
                                    "' must be homogeneous of degree " +
                                    std::to_string(g.degree));
    }
    f.images.push_back(std::move(img));
  }
  for (const auto& [name, img] : images)
    if (!src.pres().has_generator(name))
      throw std::invalid_argument("morphism: unknown generator '" + name + "'");
  // relations map to zero
  for (const auto& r : src.pres().relations())
    if (!apply_morphism(f, r).is_zero())
      throw std::invalid_argument("morphism: relation '" + r.str(G) +
                                  "' does not map to zero");
  // commutes with the differentials on generators
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Element lhs = apply_morphism(f, src.pres().differential()[i]);
    const Element rhs = dst.d(f.images[i]);
    if (!(lhs == rhs))
      throw std::invalid_argument("morphism: does not commute with d on '" +
                                  G[i].name + "'");
  }
  return f;
}

Element apply_morphism(const Morphism& f, const Element& e) {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element acc = Element::term(Monomial{}, c);
    for (auto gi : m.idx) acc = f.dst->multiply(acc, f.images[gi]);
    out += acc;
  }
  return f.dst->reduce(std::move(out));
}

AcyclicExtension tensor_acyclic(const Presentation& p) {
  AcyclicExtension ext;
  ext.pres = p;
  ext.t = "t";
  while (ext.pres.has_generator(ext.t)) ext.t += "_";
  ext.s = "s";
  while (ext.pres.has_generator(ext.s)) ext.s += "_";
  const int w = p.weighted() ? 1 : 0;
  ext.pres.add_generator(ext.t, 1, w);
  ext.pres.add_generator(ext.s, 2, w);
  ext.pres.set_differential(ext.t, ext.pres.gen(ext.s));
  if (!ext.pres.label.empty()) ext.pres.label += " (x) acyclic";
  return ext;
}

}  // namespace rht
