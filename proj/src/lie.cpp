#include "rht/lie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rht {

namespace {

bool vec_zero(const VecQ& v) {
  for (const Scalar& c : v)
    if (c != 0) return false;
  return true;
}

void axpy(VecQ& acc, const Scalar& c, const VecQ& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

bool all_weighted(const GradedLie& g) {
  if (g.dim() == 0) return false;
  for (int w : g.weights)
    if (w == 0) return false;
  return true;
}

}  // namespace

VecQ GradedLie::bracket_of(std::size_t i, std::size_t j) const {
  if (i == j) return VecQ(dim());
  if (i > j) {
    VecQ v = bracket_of(j, i);
    for (Scalar& c : v) c = -c;
    return v;
  }
  auto it = bracket.find({i, j});
  if (it == bracket.end()) return VecQ(dim());
  return it->second;
}

VecQ GradedLie::bracket_vec(const VecQ& x, const VecQ& y) const {
  VecQ out(dim());
  for (const auto& [pair, vec] : bracket) {
    const auto [i, j] = pair;
    const Scalar c = x[i] * y[j] - x[j] * y[i];
    if (c != 0) axpy(out, c, vec);
  }
  return out;
}

bool GradedLie::jacobi_holds() const {
  const std::size_t n = dim();
  std::vector<VecQ> units(n, VecQ(n));
  for (std::size_t i = 0; i < n; ++i) units[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        VecQ sum = bracket_vec(bracket_of(i, j), units[l]);
        axpy(sum, Scalar(1), bracket_vec(bracket_of(j, l), units[i]));
        axpy(sum, Scalar(1), bracket_vec(bracket_of(l, i), units[j]));
        if (!vec_zero(sum)) return false;
      }
  return true;
}

LieCompareReport lie_graded_compare(const GradedLie& a, const GradedLie& b,
                                    std::size_t budget) {
  LieCompareReport rep;

  std::vector<std::size_t> da = a.layer_dims, db = b.layer_dims;
  while (!da.empty() && da.back() == 0) da.pop_back();
  while (!db.empty() && db.back() == 0) db.pop_back();
  if (da != db) {
    std::size_t s = 0;
    while (s < da.size() && s < db.size() && da[s] == db[s]) ++s;
    const std::size_t va = s < da.size() ? da[s] : 0;
    const std::size_t vb = s < db.size() ? db[s] : 0;
    rep.result = LieCompare::distinct;
    rep.detail = "layer dimensions differ (layer " + std::to_string(s + 1) +
                 ": " + std::to_string(va) + " vs " + std::to_string(vb) +
                 ")";
    return rep;
  }
  if (da.empty()) {
    rep.result = LieCompare::isomorphic;
    rep.detail = "both trivial";
    return rep;
  }

  const std::size_t depth = da.size();
  const bool weighted = all_weighted(a) && all_weighted(b);

  // layer start offsets (basis is layer-major)
  std::vector<std::size_t> off(depth + 1, 0);
  for (std::size_t s = 0; s < depth; ++s) off[s + 1] = off[s] + da[s];
  const std::size_t n = off[depth];

  if (weighted) {
    for (std::size_t s = 0; s < depth; ++s) {
      std::vector<int> wa, wb;
      for (std::size_t i = off[s]; i < off[s + 1]; ++i) {
        wa.push_back(a.weights[i]);
        wb.push_back(b.weights[i]);
      }
      std::sort(wa.begin(), wa.end());
      std::sort(wb.begin(), wb.end());
      if (wa != wb) {
        rep.result = LieCompare::distinct;
        rep.detail =
            "weight multisets differ in layer " + std::to_string(s + 1);
        return rep;
      }
    }
  }

  if (depth == 1) {
    // abelian on both sides: dimension (and weight) match settles it
    rep.result = LieCompare::isomorphic;
    rep.detail = "abelian, matching generator data";
    return rep;
  }

  const std::size_t n1 = da[0];
  std::size_t cost = 1;
  for (std::size_t i = 2; i <= n1 && cost <= budget; ++i) cost *= i;
  for (std::size_t i = 0; i < n1 && cost <= budget; ++i) cost *= 2;
  if (cost > budget) {
    rep.result = LieCompare::undecided;
    rep.detail = "search budget exceeded";
    return rep;
  }

  // coefficient columns of [e_i, e_j] inside its target layer of a
  auto layer_coords = [&](const VecQ& full, std::size_t s) {
    VecQ c(full.begin() + static_cast<std::ptrdiff_t>(off[s - 1]),
           full.begin() + static_cast<std::ptrdiff_t>(off[s]));
    for (std::size_t t = 0; t < full.size(); ++t)
      if (full[t] != 0 &&
          (t < off[s - 1] || t >= off[s]))
        throw std::logic_error("lie_graded_compare: bracket not layer-graded");
    return c;
  };

  std::vector<std::size_t> perm(n1);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t tried = 0;

  do {
    if (weighted) {
      bool wok = true;
      for (std::size_t i = 0; i < n1 && wok; ++i)
        wok = a.weights[i] == b.weights[perm[i]];
      if (!wok) continue;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << n1); ++mask) {
      ++tried;
      std::vector<VecQ> img(n, VecQ(n));
      for (std::size_t i = 0; i < n1; ++i)
        img[i][perm[i]] = (mask >> i) & 1 ? Scalar(-1) : Scalar(1);

      bool ok = true;
      for (std::size_t s = 2; s <= depth && ok; ++s) {
        // determine images of a's layer-s basis from lower-layer brackets
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (a.layer_of[i] + a.layer_of[j] == static_cast<int>(s))
              pairs.push_back({i, j});
        MatrixQ c(pairs.size(), da[s - 1]);
        MatrixQ rhs(pairs.size(), n);
        for (std::size_t r = 0; r < pairs.size(); ++r) {
          const auto [i, j] = pairs[r];
          c.row(r) = layer_coords(a.bracket_of(i, j), s);
          rhs.row(r) = b.bracket_vec(img[i], img[j]);
        }
        const LinearSolver solver(c);
        for (std::size_t col = 0; col < n && ok; ++col) {
          VecQ rcol(pairs.size());
          for (std::size_t r = 0; r < pairs.size(); ++r)
            rcol[r] = rhs.at(r, col);
          auto x = solver.solve(rcol);
          if (!x) {
            ok = false;
            break;
          }
          for (std::size_t t = 0; t < da[s - 1]; ++t)
            img[off[s - 1] + t][col] = (*x)[t];
        }
      }
      if (!ok) continue;

      // full verification of the candidate map
      MatrixQ m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) m.at(t, i) = img[i][t];
      if (rank(m) != n) continue;
      bool verified = true;
      for (std::size_t i = 0; i < n && verified; ++i)
        for (std::size_t j = i + 1; j < n && verified; ++j)
          verified = m.apply(a.bracket_of(i, j)) == b.bracket_vec(img[i], img[j]);
      if (verified && weighted)
        for (std::size_t i = 0; i < n && verified; ++i)
          for (std::size_t t = 0; t < n && verified; ++t)
            if (img[i][t] != 0) verified = a.weights[i] == b.weights[t];
      if (verified) {
        rep.result = LieCompare::isomorphic;
        rep.detail = "isomorphism found after " + std::to_string(tried) +
                     " candidate(s)";
        return rep;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  rep.result = LieCompare::undecided;
  rep.detail = "signed-permutation search exhausted";
  return rep;
}

// ---------------------------------------------------------------------------
// LieExpr

LieExpr LieExpr::gen(std::string name) {
  if (name.empty())
    throw std::invalid_argument("LieExpr: empty generator name");
  LieExpr e;
  e.gen_ = std::move(name);
  return e;
}

LieExpr LieExpr::bracket(LieExpr left, LieExpr right) {
  LieExpr e;
  e.length_ = left.length_ + right.length_;
  e.l_ = std::make_shared<const LieExpr>(std::move(left));
  e.r_ = std::make_shared<const LieExpr>(std::move(right));
  return e;
}

const std::string& LieExpr::gen_name() const {
  if (!is_gen()) throw std::logic_error("LieExpr: not a generator");
  return gen_;
}

const LieExpr& LieExpr::left() const {
  if (is_gen()) throw std::logic_error("LieExpr: generator has no factors");
  return *l_;
}

const LieExpr& LieExpr::right() const {
  if (is_gen()) throw std::logic_error("LieExpr: generator has no factors");
  return *r_;
}

bool LieExpr::contains(const std::string& name) const {
  if (is_gen()) return gen_ == name;
  return l_->contains(name) || r_->contains(name);
}

std::string LieExpr::str() const {
  if (is_gen()) return gen_;
  return "[" + l_->str() + "," + r_->str() + "]";
}

// ---------------------------------------------------------------------------
// LiePresentation

namespace {

void validate_expr(const LiePresentation& p, const LieExpr& x) {
  if (x.is_gen()) {
    if (!p.has_generator(x.gen_name()))
      throw std::invalid_argument("LiePresentation: unknown generator " +
                                  x.gen_name());
    return;
  }
  validate_expr(p, x.left());
  validate_expr(p, x.right());
}

}  // namespace

std::size_t LiePresentation::add_generator(const std::string& name,
                                           int weight) {
  if (name.empty())
    throw std::invalid_argument("LiePresentation: empty generator name");
  if (has_generator(name))
    throw std::invalid_argument("LiePresentation: duplicate generator " +
                                name);
  if (weight < 1)
    throw std::invalid_argument("LiePresentation: weights must be positive");
  gens_.push_back({name, weight});
  return gens_.size() - 1;
}

void LiePresentation::add_relation(LieElement r) {
  LieElement clean;
  for (auto& t : r) {
    if (t.coeff == 0) continue;
    validate_expr(*this, t.expr);
    clean.push_back(std::move(t));
  }
  if (clean.empty())
    throw std::invalid_argument("LiePresentation: empty relation");
  rels_.push_back(std::move(clean));
}

bool LiePresentation::has_generator(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name == name) return true;
  return false;
}

std::size_t LiePresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw std::out_of_range("LiePresentation: unknown generator " + name);
}

namespace {

nlohmann::json expr_to_json(const LieExpr& x) {
  if (x.is_gen()) return x.gen_name();
  return nlohmann::json::array({expr_to_json(x.left()),
                                expr_to_json(x.right())});
}

LieExpr expr_from_json(const nlohmann::json& j) {
  if (j.is_string()) return LieExpr::gen(j.get<std::string>());
  if (j.is_object() && j.contains("bracket"))
    return expr_from_json(j.at("bracket"));
  if (j.is_array() && j.size() == 2)
    return LieExpr::bracket(expr_from_json(j.at(0)), expr_from_json(j.at(1)));
  throw std::invalid_argument(
      "LiePresentation: expression must be a name or a pair");
}

Scalar coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  throw std::invalid_argument(
      "LiePresentation: coefficient must be an integer or a string");
}

}  // namespace

nlohmann::json LiePresentation::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : gens_)
    j["generators"].push_back({{"name", g.name}, {"weight", g.weight}});
  j["relations"] = nlohmann::json::array();
  for (const auto& r : rels_) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& t : r)
      jr.push_back({{"coeff", scalar_to_string(t.coeff)},
                    {"expr", expr_to_json(t.expr)}});
    j["relations"].push_back(std::move(jr));
  }
  return j;
}

LiePresentation LiePresentation::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") ||
      !j.at("generators").is_array())
    throw std::invalid_argument(
        "LiePresentation: need an object with a generator list");
  LiePresentation p;
  if (j.contains("label")) p.label = j.at("label").get<std::string>();
  for (const auto& jg : j.at("generators")) {
    if (!jg.is_object() || !jg.contains("name"))
      throw std::invalid_argument("LiePresentation: generator needs a name");
    p.add_generator(jg.at("name").get<std::string>(),
                    jg.contains("weight") ? jg.at("weight").get<int>() : 1);
  }
  if (j.contains("relations")) {
    if (!j.at("relations").is_array())
      throw std::invalid_argument("LiePresentation: relations must be a list");
    for (const auto& jr : j.at("relations")) {
      if (!jr.is_array())
        throw std::invalid_argument(
            "LiePresentation: each relation is a list of terms");
      LieElement r;
      for (const auto& jt : jr) {
        if (!jt.is_object() || !jt.contains("expr"))
          throw std::invalid_argument(
              "LiePresentation: each term needs an expression");
        r.push_back({jt.contains("coeff") ? coeff_from_json(jt.at("coeff"))
                                          : Scalar(1),
                     expr_from_json(jt.at("expr"))});
      }
      p.add_relation(std::move(r));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// lower central series of a presented algebra

namespace {

// expansion of a bracket expression over the Hall basis (generator leaves
// map to the layer-1 elements in declaration order)
std::map<std::size_t, Scalar> expand_expr(const HallBasis& hb,
                                          const LiePresentation& p,
                                          const LieExpr& x) {
  if (x.is_gen()) return {{p.index_of(x.gen_name()), Scalar(1)}};
  const auto l = expand_expr(hb, p, x.left());
  const auto r = expand_expr(hb, p, x.right());
  std::map<std::size_t, Scalar> out;
  for (const auto& [i, ci] : l)
    for (const auto& [j, cj] : r)
      for (const auto& [t, c] : hb.expand(i, j)) out[t] += ci * cj * c;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// dense per-length layer vectors of an element; lengths above the basis
// cap are skipped (they cannot influence layers within the cap)
std::map<std::size_t, VecQ> element_layers(const HallBasis& hb,
                                           const LiePresentation& p,
                                           const LieElement& e) {
  std::map<std::size_t, VecQ> out;
  for (const auto& t : e) {
    const std::size_t len = t.expr.length();
    if (len > hb.max_length()) continue;
    VecQ& v = out.try_emplace(len, VecQ(hb.count(len))).first->second;
    for (const auto& [idx, c] : expand_expr(hb, p, t.expr))
      v[idx - hb.offset(len)] += t.coeff * c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = vec_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

// single tree length of a relation, or nullopt when lengths are mixed
std::optional<std::size_t> relation_length(const LieElement& e) {
  std::size_t len = 0;
  for (const auto& t : e) {
    if (len == 0)
      len = t.expr.length();
    else if (len != t.expr.length())
      return std::nullopt;
  }
  return len;
}

struct IdealData {
  // per length 1..max: independent rows spanning the ideal layer
  std::vector<std::vector<VecQ>> basis;
  std::vector<std::size_t> dims;  // quotient dimensions per length
};

IdealData ideal_closure(const HallBasis& hb, const LiePresentation& p,
                        const std::vector<const LieElement*>& rels,
                        std::size_t maxlen) {
  std::vector<std::vector<VecQ>> bylen(maxlen);
  for (const LieElement* r : rels) {
    if (!relation_length(*r))
      throw std::invalid_argument(
          "LiePresentation: relation mixes bracket lengths");
    for (auto& [len, v] : element_layers(hb, p, *r)) {
      // layers longer than the requested closure depth cannot influence
      // it: bracketing with generators only increases length
      if (len > maxlen) continue;
      bylen[len - 1].push_back(std::move(v));
    }
  }
  const std::size_t n = p.gens().size();
  IdealData out;
  out.basis.resize(maxlen);
  out.dims.resize(maxlen);
  for (std::size_t len = 1; len <= maxlen; ++len) {
    RowSpan span(hb.count(len));
    auto add = [&](const VecQ& v) {
      if (span.add(v)) out.basis[len - 1].push_back(v);
    };
    for (const auto& v : bylen[len - 1]) add(v);
    if (len >= 2)
      for (std::size_t g = 0; g < n; ++g)
        for (const VecQ& w : out.basis[len - 2]) {
          VecQ v(hb.count(len));
          for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] == 0) continue;
            for (const auto& [r, c] :
                 hb.expand(g, hb.offset(len - 1) + t))
              v[r - hb.offset(len)] += w[t] * c;
          }
          add(v);
        }
    out.dims[len - 1] = hb.count(len) - span.rank();
  }
  return out;
}

std::vector<const LieElement*> all_relations(const LiePresentation& p) {
  std::vector<const LieElement*> rels;
  for (const auto& r : p.relations()) rels.push_back(&r);
  return rels;
}

int hall_weight(const HallBasis& hb, const LiePresentation& p,
                std::size_t i) {
  const HallElem& e = hb.elem(i);
  if (e.length == 1) return p.gens()[e.gen].weight;
  return hall_weight(hb, p, e.left) + hall_weight(hb, p, e.right);
}

LieExpr hall_tree(const HallBasis& hb, const LiePresentation& p,
                  std::size_t i) {
  const HallElem& e = hb.elem(i);
  if (e.length == 1) return LieExpr::gen(p.gens()[e.gen].name);
  return LieExpr::bracket(hall_tree(hb, p, e.left),
                          hall_tree(hb, p, e.right));
}

}  // namespace

std::vector<std::size_t> lcs_layer_dims(const LiePresentation& p,
                                        std::size_t max_length) {
  if (max_length == 0)
    throw std::invalid_argument("lcs_layer_dims: need a positive length cap");
  if (p.gens().empty()) return std::vector<std::size_t>(max_length, 0);
  const HallBasis hb(p.gens().size(), max_length);
  return ideal_closure(hb, p, all_relations(p), max_length).dims;
}

GradedLie lcs_quotient(const LiePresentation& p, std::size_t max_length) {
  if (max_length == 0)
    throw std::invalid_argument("lcs_quotient: need a positive length cap");
  GradedLie g;
  if (p.gens().empty()) {
    g.layer_dims.assign(max_length, 0);
    return g;
  }
  const HallBasis hb(p.gens().size(), max_length);
  const IdealData ideal = ideal_closure(hb, p, all_relations(p), max_length);

  std::vector<std::vector<VecQ>> reps(max_length);
  std::vector<std::size_t> gstart(max_length + 1, 0);
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<VecQ> units(hb.count(len), VecQ(hb.count(len)));
    for (std::size_t i = 0; i < units.size(); ++i) units[i][i] = 1;
    reps[len - 1] = quotient_representatives(units, ideal.basis[len - 1]);
    g.layer_dims.push_back(reps[len - 1].size());
    gstart[len] = gstart[len - 1] + reps[len - 1].size();
    for (std::size_t i = 0; i < reps[len - 1].size(); ++i) {
      const VecQ& v = reps[len - 1][i];
      std::size_t support = 0;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (v[t] != 0) support = hb.offset(len) + t;
      g.names.push_back(len == 1
                            ? p.gens()[hb.elem(support).gen].name
                            : "L" + std::to_string(len) + "_" +
                                  std::to_string(i + 1));
      g.layer_of.push_back(static_cast<int>(len));
      g.weights.push_back(hall_weight(hb, p, support));
    }
  }

  // quotient brackets: expand representative pairs and express the result
  // in ideal + representative coordinates of the target layer
  std::vector<std::unique_ptr<LinearSolver>> solvers(max_length + 1);
  auto solver_for = [&](std::size_t s) -> LinearSolver& {
    if (!solvers[s]) {
      const auto& ib = ideal.basis[s - 1];
      const auto& rp = reps[s - 1];
      MatrixQ m(hb.count(s), ib.size() + rp.size());
      for (std::size_t c = 0; c < ib.size(); ++c)
        for (std::size_t r = 0; r < hb.count(s); ++r) m.at(r, c) = ib[c][r];
      for (std::size_t c = 0; c < rp.size(); ++c)
        for (std::size_t r = 0; r < hb.count(s); ++r)
          m.at(r, ib.size() + c) = rp[c][r];
      solvers[s] = std::make_unique<LinearSolver>(m);
    }
    return *solvers[s];
  };

  for (std::size_t pl = 1; pl <= max_length; ++pl)
    for (std::size_t ql = pl; pl + ql <= max_length; ++ql) {
      const std::size_t s = pl + ql;
      for (std::size_t i = 0; i < reps[pl - 1].size(); ++i)
        for (std::size_t j = (pl == ql ? i + 1 : std::size_t{0});
             j < reps[ql - 1].size(); ++j) {
          VecQ v(hb.count(s));
          const VecQ& a = reps[pl - 1][i];
          const VecQ& b = reps[ql - 1][j];
          for (std::size_t ta = 0; ta < a.size(); ++ta) {
            if (a[ta] == 0) continue;
            for (std::size_t tb = 0; tb < b.size(); ++tb) {
              if (b[tb] == 0) continue;
              for (const auto& [r, c] : hb.expand(hb.offset(pl) + ta,
                                                  hb.offset(ql) + tb))
                v[r - hb.offset(s)] += a[ta] * b[tb] * c;
            }
          }
          if (vec_zero(v)) continue;
          auto x = solver_for(s).solve(v);
          if (!x)
            throw std::logic_error("lcs_quotient: bracket left the span");
          VecQ full(gstart[max_length]);
          bool nonzero = false;
          const std::size_t nideal = ideal.basis[s - 1].size();
          for (std::size_t t = 0; t < reps[s - 1].size(); ++t) {
            full[gstart[s - 1] + t] = (*x)[nideal + t];
            if (full[gstart[s - 1] + t] != 0) nonzero = true;
          }
          if (nonzero)
            g.bracket.emplace(std::pair(gstart[pl - 1] + i,
                                        gstart[ql - 1] + j),
                              std::move(full));
        }
    }
  return g;
}

// ---------------------------------------------------------------------------
// substitution, elimination, comparison

namespace {

LieElement subst_expr(const LieExpr& x, const std::string& name,
                      const LieElement& value) {
  if (x.is_gen()) {
    if (x.gen_name() == name) return value;
    return {{Scalar(1), x}};
  }
  const LieElement l = subst_expr(x.left(), name, value);
  const LieElement r = subst_expr(x.right(), name, value);
  LieElement out;
  for (const auto& a : l)
    for (const auto& b : r)
      out.push_back({a.coeff * b.coeff, LieExpr::bracket(a.expr, b.expr)});
  return out;
}

LieElement subst_element(const LieElement& e, const std::string& name,
                         const LieElement& value) {
  LieElement out;
  for (const auto& t : e)
    for (auto& s : subst_expr(t.expr, name, value)) {
      const Scalar c = t.coeff * s.coeff;
      if (c != 0) out.push_back({c, std::move(s.expr)});
    }
  return out;
}

std::size_t max_term_length(const std::vector<LieElement>& rels) {
  std::size_t len = 0;
  for (const auto& r : rels)
    for (const auto& t : r) len = std::max(len, t.expr.length());
  return len;
}

// hall-normalized element from per-layer vectors
LieElement normalized_element(const HallBasis& hb, const LiePresentation& p,
                              const std::map<std::size_t, VecQ>& layers) {
  LieElement out;
  for (const auto& [len, v] : layers)
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t] != 0)
        out.push_back({v[t], hall_tree(hb, p, hb.offset(len) + t)});
  return out;
}

}  // namespace

LiePresentation substitute_generator(const LiePresentation& p,
                                     const std::string& name,
                                     const LieElement& value) {
  if (!p.has_generator(name))
    throw std::invalid_argument("substitute_generator: unknown generator " +
                                name);
  for (const auto& t : value) validate_expr(p, t.expr);
  LiePresentation q;
  q.label = p.label;
  for (const auto& g : p.gens()) q.add_generator(g.name, g.weight);
  for (const auto& r : p.relations()) {
    LieElement s = subst_element(r, name, value);
    if (!s.empty()) q.add_relation(std::move(s));
  }
  return q;
}

LiePresentation eliminate_generator(const LiePresentation& p,
                                    const std::string& name) {
  if (!p.has_generator(name))
    throw std::invalid_argument("eliminate_generator: unknown generator " +
                                name);

  // the defining relation: `name` as a bare linear term and nowhere else
  std::size_t defining = p.relations().size();
  Scalar lead;
  for (std::size_t i = 0; i < p.relations().size() && defining == p.relations().size(); ++i) {
    const LieElement& r = p.relations()[i];
    bool bare = false, elsewhere = false;
    Scalar c;
    for (const auto& t : r) {
      if (t.expr.is_gen() && t.expr.gen_name() == name) {
        bare = true;
        c = t.coeff;
      } else if (t.expr.contains(name)) {
        elsewhere = true;
      }
    }
    if (bare && !elsewhere) {
      defining = i;
      lead = c;
    }
  }
  if (defining == p.relations().size())
    throw std::invalid_argument(
        "eliminate_generator: no defining relation for " + name);

  LieElement value;
  for (const auto& t : p.relations()[defining])
    if (!(t.expr.is_gen() && t.expr.gen_name() == name))
      value.push_back({-t.coeff / lead, t.expr});

  LiePresentation q;
  q.label = p.label;
  for (const auto& g : p.gens())
    if (g.name != name) q.add_generator(g.name, g.weight);

  std::vector<LieElement> rels;
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    if (i == defining) continue;
    LieElement s = subst_element(p.relations()[i], name, value);
    if (!s.empty()) rels.push_back(std::move(s));
  }
  if (rels.empty() || q.gens().empty()) return q;

  const HallBasis hb(q.gens().size(), max_term_length(rels));

  // expansions; drop relations that are identically zero
  std::vector<std::map<std::size_t, VecQ>> layers;
  std::vector<LieElement> live;
  for (auto& r : rels) {
    auto l = element_layers(hb, q, r);
    if (l.empty()) continue;
    layers.push_back(std::move(l));
    live.push_back(std::move(r));
  }

  // drop relations implied by the rest (checked degreewise through the
  // ideal closure of the others; mixed-length relations are kept as-is)
  std::vector<bool> kept(live.size(), true);
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (layers[i].size() != 1) continue;
    const auto& [len, v] = *layers[i].begin();
    std::vector<const LieElement*> others;
    for (std::size_t j = 0; j < live.size(); ++j)
      if (j != i && kept[j] && relation_length(live[j]))
        others.push_back(&live[j]);
    const IdealData ideal = ideal_closure(hb, q, others, len);
    RowSpan span(hb.count(len));
    for (const auto& w : ideal.basis[len - 1]) span.add(w);
    if (span.contains(v)) kept[i] = false;
  }

  for (std::size_t i = 0; i < live.size(); ++i)
    if (kept[i]) q.add_relation(normalized_element(hb, q, layers[i]));
  return q;
}

bool lie_presentations_equal(const LiePresentation& a,
                             const LiePresentation& b) {
  if (a.gens().size() != b.gens().size()) return false;
  for (std::size_t i = 0; i < a.gens().size(); ++i)
    if (a.gens()[i].weight != b.gens()[i].weight) return false;
  const std::size_t len =
      std::max(max_term_length(a.relations()), max_term_length(b.relations()));
  if (len == 0) return a.relations().empty() == b.relations().empty();
  const HallBasis hb(a.gens().size(), len);
  const IdealData ia = ideal_closure(hb, a, all_relations(a), len);
  const IdealData ib = ideal_closure(hb, b, all_relations(b), len);
  for (std::size_t l = 1; l <= len; ++l) {
    if (ia.dims[l - 1] != ib.dims[l - 1]) return false;
    RowSpan span(hb.count(l));
    for (const auto& v : ia.basis[l - 1]) span.add(v);
    for (const auto& v : ib.basis[l - 1])
      if (!span.contains(v)) return false;
  }
  return true;
}

std::vector<std::string> normalized_relation_strings(
    const LiePresentation& p) {
  std::vector<std::string> out;
  if (p.relations().empty()) return out;
  const std::size_t len =
      std::max<std::size_t>(max_term_length(p.relations()), 1);
  const HallBasis hb(p.gens().size(), len);
  std::vector<std::string> names;
  for (const auto& g : p.gens()) names.push_back(g.name);
  for (const auto& r : p.relations()) {
    const auto layers = element_layers(hb, p, r);
    Scalar lead = 0;
    for (const auto& [l, v] : layers) {
      for (const auto& c : v)
        if (c != 0) {
          lead = c;
          break;
        }
      if (lead != 0) break;
    }
    if (lead == 0) {
      out.push_back("0");
      continue;
    }
    std::string s;
    for (const auto& [l, v] : layers)
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        const Scalar c = v[t] / lead;
        if (s.empty())
          s += c < 0 ? "-" : "";
        else
          s += c < 0 ? " - " : " + ";
        const Scalar mag = c < 0 ? Scalar(-c) : c;
        if (mag != 1) s += scalar_to_string(mag) + "*";
        s += hb.str(hb.offset(l) + t, names);
      }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LiePresentation lie_main_theorem(int k) {
  if (k < 1)
    throw std::invalid_argument("lie_main_theorem: k must be >= 1");
  LiePresentation p;
  p.label = "lie-main:" + std::to_string(k);
  for (int i = 1; i <= k; ++i)
    p.add_generator("X" + std::to_string(i), 1);
  for (int i = 1; i <= k; ++i)
    p.add_generator("Y" + std::to_string(i), 1);
  p.add_generator("Z", 2);
  const LieExpr z = LieExpr::gen("Z");
  auto X = [](int i) { return LieExpr::gen("X" + std::to_string(i)); };
  auto Y = [](int i) { return LieExpr::gen("Y" + std::to_string(i)); };
  for (int i = 1; i <= k; ++i) {
    p.add_relation({{Scalar(1), LieExpr::bracket(z, X(i))}});
    p.add_relation({{Scalar(1), LieExpr::bracket(z, Y(i))}});
  }
  for (int i = 1; i <= k; ++i) {
    LieElement rx, ry;
    for (int j = 1; j <= k; ++j) {
      const LieExpr xy = LieExpr::bracket(X(j), Y(j));
      rx.push_back({Scalar(1), LieExpr::bracket(xy, X(i))});
      ry.push_back({Scalar(1), LieExpr::bracket(xy, Y(i))});
    }
    p.add_relation(std::move(rx));
    p.add_relation(std::move(ry));
  }
  return p;
}

std::optional<LiePresentation> parse_lie_preset(const std::string& id) {
  const std::string head = "lie-main:";
  if (id.rfind(head, 0) != 0) return std::nullopt;
  const std::string tail = id.substr(head.size());
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  int k = 0;
  try {
    k = std::stoi(tail);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (k < 1) return std::nullopt;
  return lie_main_theorem(k);
}

LieCompareReport lie_graded_compare(const LiePresentation& a,
                                    const LiePresentation& b,
                                    std::size_t max_length,
                                    std::size_t budget) {
  return lie_graded_compare(lcs_quotient(a, max_length),
                            lcs_quotient(b, max_length), budget);
}

}  // namespace rht
