#include "rht/massey.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace rht {

namespace {

constexpr int kNoWeight = std::numeric_limits<int>::min();

struct ParamInfo {
  int target_weight = kNoWeight;  // weight a pure entry would carry
  int vec_weight = kNoWeight;     // weight of the attached closed vector
};

// Shared state of the parametrized family of defining systems.
struct Family {
  const Cohomology* h = nullptr;
  const FiniteCdga* alg = nullptr;
  std::size_t k = 0;
  std::size_t dim1 = 0, dim2 = 0;
  std::vector<std::vector<VecQ>> mult;  // A^1 basis pair -> A^2 coordinates
  std::optional<LinearSolver> ls;       // d : A^1 -> A^2
  std::vector<VecQ> ker;                // closed degree-one vectors
  std::vector<int> ker_w;
  std::vector<std::vector<PolyVec>> ent;  // entries, A^1 coordinates
  std::vector<ParamInfo> pinfo;
  std::vector<int> input_w;
  bool probe_ok = false;  // weighted algebra and weight-pure inputs
  std::vector<Poly> residual;
  std::size_t created = 0, eliminated = 0;
  bool undefined = false;
  Poly witness;
};

PolyVec mul_entries(const Family& f, const PolyVec& x, const PolyVec& y) {
  PolyVec out(f.dim2);
  for (std::size_t a = 0; a < f.dim1; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < f.dim1; ++b) {
      if (y[b].is_zero()) continue;
      const VecQ& sc = f.mult[a][b];
      Poly prod;
      bool have = false;
      for (std::size_t c = 0; c < f.dim2; ++c) {
        if (sc[c] == 0) continue;
        if (!have) {
          prod = x[a] * y[b];
          have = true;
        }
        out[c] += Poly(sc[c]) * prod;
      }
    }
  }
  return out;
}

void subst_everywhere(Family& f, std::vector<Poly>& work, std::size_t var,
                      const Poly& val) {
  for (auto& row : f.ent)
    for (PolyVec& e : row)
      for (Poly& p : e) p = p.subst(var, val);
  for (Poly& c : work) c = c.subst(var, val);
  // parked constraints may simplify under the substitution: requeue them
  for (Poly& c : f.residual) work.push_back(c.subst(var, val));
  f.residual.clear();
}

// Drains the constraint queue: zero constraints vanish, nonzero constants
// mean no defining system exists, affine ones are eliminated exactly by
// substitution (newest parameter first), anything else is parked.
void process_constraints(Family& f, std::vector<Poly>& work) {
  while (!work.empty() && !f.undefined) {
    Poly c = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    if (c.is_constant()) {
      f.undefined = true;
      f.witness = std::move(c);
      return;
    }
    auto aff = c.affine_form();
    if (!aff) {
      f.residual.push_back(std::move(c));
      continue;
    }
    auto it = aff->second.rbegin();
    const std::size_t var = it->first;
    const Scalar coeff = it->second;
    Poly val{Scalar(-aff->first / coeff)};
    for (const auto& [v, cv] : aff->second)
      if (v != var) val += Poly(Scalar(-cv / coeff)) * Poly::var(v);
    subst_everywhere(f, work, var, val);
    ++f.eliminated;
  }
}

// d(x_{ij}) = -sum_q x_{iq} x_{q+1,j}: particular solution through the
// fixed elimination of d, plus a fresh parameter along every closed vector.
void solve_entry(Family& f, std::size_t i, std::size_t j,
                 std::vector<Poly>& work) {
  PolyVec rhs(f.dim2);
  for (std::size_t q = i; q < j; ++q) {
    PolyVec part = mul_entries(f, f.ent[i][q], f.ent[q + 1][j]);
    for (std::size_t c = 0; c < f.dim2; ++c) rhs[c] += -part[c];
  }
  const LinearSolver& ls = *f.ls;
  const MatrixQ& t = ls.transform();
  PolyVec x(f.dim1);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Poly tb;
    for (std::size_t c = 0; c < f.dim2; ++c) {
      const Scalar& s = t.at(r, c);
      if (s == 0 || rhs[c].is_zero()) continue;
      tb += Poly(s) * rhs[c];
    }
    if (r < ls.rank())
      x[ls.pivots()[r]] = std::move(tb);
    else if (!tb.is_zero())
      work.push_back(std::move(tb));
  }
  int target = kNoWeight;
  if (f.probe_ok) {
    target = 0;
    for (std::size_t q = i; q <= j; ++q) target += f.input_w[q];
  }
  for (std::size_t v = 0; v < f.ker.size(); ++v) {
    const std::size_t id = f.created++;
    f.pinfo.push_back({target, f.ker_w[v]});
    for (std::size_t c = 0; c < f.dim1; ++c)
      if (f.ker[v][c] != 0) x[c] += Poly(f.ker[v][c]) * Poly::var(id);
  }
  f.ent[i][j] = std::move(x);
  process_constraints(f, work);
}

bool all_zero(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

// The triviality ladder. Every verdict is exact over Q (and stays valid
// over any extension field, since the deciding linear algebra is rational).
void decide(MasseyOutcome& out, const Family& f) {
  const PolyVec& v = out.value;
  auto finish = [&](MasseyVerdict vd, const char* by, std::string note = "") {
    out.verdict = vd;
    out.decided_by = by;
    if (!note.empty()) out.notes.push_back(std::move(note));
  };

  if (all_zero(v)) return finish(MasseyVerdict::trivial, "identically-zero");

  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].is_constant() && !v[i].is_zero())
      return finish(MasseyVerdict::nontrivial, "constant-coordinate",
                    "coordinate of [" + f.h->label(2, i) +
                        "] is the nonzero constant " +
                        scalar_to_string(v[i].constant_value()));

  // all coordinates affine: zero membership is one exact linear solve
  {
    bool affine = true;
    std::vector<std::pair<Scalar, std::map<std::size_t, Scalar>>> forms;
    forms.reserve(v.size());
    for (const Poly& p : v) {
      auto a = p.affine_form();
      if (!a) {
        affine = false;
        break;
      }
      forms.push_back(std::move(*a));
    }
    if (affine) {
      std::set<std::size_t> varset;
      for (const auto& fm : forms)
        for (const auto& [var, c] : fm.second) varset.insert(var);
      std::vector<std::size_t> vars(varset.begin(), varset.end());
      MatrixQ m(v.size(), vars.size());
      VecQ b(v.size());
      for (std::size_t i = 0; i < forms.size(); ++i) {
        b[i] = -forms[i].first;
        for (std::size_t jv = 0; jv < vars.size(); ++jv) {
          auto it = forms[i].second.find(vars[jv]);
          if (it != forms[i].second.end()) m.at(i, jv) = it->second;
        }
      }
      const bool hits_zero = solve(m, b).has_value();
      return finish(hits_zero ? MasseyVerdict::trivial
                              : MasseyVerdict::nontrivial,
                    "linear-system",
                    hits_zero ? "a parameter choice reaches zero"
                              : "no parameter choice reaches zero");
    }
  }

  // weight-pure restriction: drop every parameter whose closed vector does
  // not carry the entry's forced weight; if nothing survives, the pure
  // subfamily realizes zero
  if (f.probe_ok) {
    PolyVec r = v;
    for (std::size_t id = 0; id < f.pinfo.size(); ++id)
      if (f.pinfo[id].vec_weight != f.pinfo[id].target_weight)
        for (Poly& p : r) p = p.subst(id, Poly());
    if (all_zero(r))
      return finish(MasseyVerdict::trivial, "weight-restriction",
                    "the weight-pure subfamily has identically zero value");
  }

  // point probes: the origin, then a solution of the affine subsystem
  if (is_zero(out.constant_part))
    return finish(MasseyVerdict::trivial, "point-probe",
                  "zero at the origin of parameter space");
  {
    std::set<std::size_t> varset;
    std::vector<std::pair<Scalar, std::map<std::size_t, Scalar>>> forms;
    for (const Poly& p : v) {
      auto a = p.affine_form();
      if (!a) continue;
      for (const auto& [var, c] : a->second) varset.insert(var);
      forms.push_back(std::move(*a));
    }
    if (!forms.empty()) {
      std::vector<std::size_t> vars(varset.begin(), varset.end());
      MatrixQ m(forms.size(), vars.size());
      VecQ b(forms.size());
      for (std::size_t i = 0; i < forms.size(); ++i) {
        b[i] = -forms[i].first;
        for (std::size_t jv = 0; jv < vars.size(); ++jv) {
          auto it = forms[i].second.find(vars[jv]);
          if (it != forms[i].second.end()) m.at(i, jv) = it->second;
        }
      }
      if (auto sol = solve(m, b)) {
        std::map<std::size_t, Scalar> point;
        for (std::size_t jv = 0; jv < vars.size(); ++jv)
          point[vars[jv]] = (*sol)[jv];
        bool zero = true;
        for (const Poly& p : v)
          if (p.eval(point) != 0) {
            zero = false;
            break;
          }
        if (zero)
          return finish(MasseyVerdict::trivial, "point-probe",
                        "zero at a solved parameter point");
      }
    }
  }

  // greedy elimination: a variable occurring in exactly one plain linear
  // term of a coordinate can be solved out; if everything cancels, any
  // assignment of the remaining parameters reaches zero
  {
    PolyVec w = v;
    bool progress = true;
    int guard = 0;
    while (progress && guard++ < 64) {
      progress = false;
      for (std::size_t i = 0; i < w.size() && !progress; ++i) {
        const Poly& p = w[i];
        if (p.is_zero()) continue;
        for (std::size_t var : p.vars()) {
          bool isolated = true;
          Scalar a(0);
          for (const auto& [mono, coeff] : p.terms()) {
            bool has = false;
            for (const auto& [mv, me] : mono.exps)
              if (mv == var && me > 0) has = true;
            if (!has) continue;
            if (mono.exps.size() == 1 && mono.exps[0] == std::pair(var, 1))
              a = coeff;
            else {
              isolated = false;
              break;
            }
          }
          if (!isolated || a == 0) continue;
          Poly rest = p + Poly(Scalar(-a)) * Poly::var(var);
          Poly val = Poly(Scalar(Scalar(-1) / a)) * rest;
          for (Poly& q : w) q = q.subst(var, val);
          progress = true;
          break;
        }
      }
    }
    if (all_zero(w))
      return finish(MasseyVerdict::trivial, "substitution",
                    "coordinates cancel after solving parameters out");
  }

  finish(MasseyVerdict::undecided, "",
         "no decision procedure applied; verdict left open");
}

}  // namespace

std::string massey_param_name(std::size_t id) {
  return "p" + std::to_string(id);
}

const char* to_string(MasseyStatus s) {
  switch (s) {
    case MasseyStatus::defined:
      return "defined";
    case MasseyStatus::undefined:
      return "undefined";
    default:
      return "undecided";
  }
}

const char* to_string(MasseyVerdict v) {
  switch (v) {
    case MasseyVerdict::trivial:
      return "trivial";
    case MasseyVerdict::nontrivial:
      return "nontrivial";
    default:
      return "undecided";
  }
}

MasseyOutcome massey_product(const Cohomology& h,
                             const std::vector<VecQ>& inputs) {
  const FiniteCdga& alg = h.algebra();
  const std::size_t k = inputs.size();
  if (k < 3)
    throw std::invalid_argument("massey_product: need at least three classes");
  const std::size_t nh1 = h.dim(1);
  for (const VecQ& c : inputs)
    if (c.size() != nh1)
      throw std::invalid_argument(
          "massey_product: class coordinates have the wrong size");

  MasseyOutcome out;
  out.length = k;
  for (const VecQ& c : inputs) {
    std::size_t nz = 0, last = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) {
        ++nz;
        last = i;
      }
    if (nz == 1 && c[last] == 1)
      out.labels.push_back(h.label(1, last));
    else
      out.labels.push_back(h.class_element(1, c).str(alg.gens()));
  }

  Family f;
  f.h = &h;
  f.alg = &alg;
  f.k = k;
  f.dim1 = alg.dim(1);
  f.dim2 = alg.dim(2);

  f.mult.assign(f.dim1, std::vector<VecQ>(f.dim1));
  for (std::size_t a = 0; a < f.dim1; ++a)
    for (std::size_t b = 0; b < f.dim1; ++b)
      f.mult[a][b] = alg.coords(
          2, alg.multiply(alg.basis_element(1, a), alg.basis_element(1, b)));

  const MatrixQ d1 = alg.d_matrix(1);
  f.ls.emplace(d1);
  f.ker = kernel_basis(d1);
  f.ker_w.assign(f.ker.size(), kNoWeight);
  if (alg.weighted()) {
    for (std::size_t v = 0; v < f.ker.size(); ++v) {
      int w = kNoWeight;
      bool pure = true;
      for (std::size_t c = 0; c < f.dim1; ++c) {
        if (f.ker[v][c] == 0) continue;
        const int bw = alg.basis_weight(1, c);
        if (w == kNoWeight)
          w = bw;
        else if (w != bw)
          pure = false;
      }
      if (pure && w != kNoWeight) f.ker_w[v] = w;
    }
  }

  f.input_w.assign(k, kNoWeight);
  f.probe_ok = alg.weighted();
  f.ent.assign(k, std::vector<PolyVec>(k));
  for (std::size_t q = 0; q < k; ++q) {
    const VecQ rep = alg.coords(1, h.class_element(1, inputs[q]));
    PolyVec e(f.dim1);
    for (std::size_t c = 0; c < f.dim1; ++c)
      if (rep[c] != 0) e[c] = Poly(rep[c]);
    f.ent[q][q] = std::move(e);
    if (alg.weighted()) {
      int w = kNoWeight;
      bool pure = true;
      for (std::size_t i = 0; i < nh1; ++i) {
        if (inputs[q][i] == 0) continue;
        const int cw = h.weight(1, i);
        if (w == kNoWeight)
          w = cw;
        else if (w != cw)
          pure = false;
      }
      if (!pure || w == kNoWeight) f.probe_ok = false;
      f.input_w[q] = w;
    }
  }

  std::vector<Poly> work;
  for (std::size_t len = 1; len < k && !f.undefined; ++len)
    for (std::size_t i = 0; i + len < k && !f.undefined; ++i) {
      const std::size_t j = i + len;
      if (i == 0 && j == k - 1) continue;  // the product itself, not an entry
      solve_entry(f, i, j, work);
    }

  if (f.undefined) {
    out.status = MasseyStatus::undefined;
    out.residual_constraints.push_back(f.witness);
    out.decided_by = "constraint";
    out.notes.push_back("solvability constraint " +
                        f.witness.str(massey_param_name) +
                        " = 0 is unsatisfiable; no defining system exists");
    return out;
  }
  if (!f.residual.empty()) {
    out.status = MasseyStatus::undecided;
    out.residual_constraints = f.residual;
    out.notes.push_back(
        "nonlinear solvability constraints remain; existence of a defining "
        "system was not settled");
    return out;
  }

  out.status = MasseyStatus::defined;
  out.param_count = f.created - f.eliminated;

  PolyVec g2(f.dim2);
  for (std::size_t q = 0; q + 1 < k; ++q) {
    PolyVec part = mul_entries(f, f.ent[0][q], f.ent[q + 1][k - 1]);
    for (std::size_t c = 0; c < f.dim2; ++c) g2[c] += -part[c];
  }

  const MatrixQ d2 = alg.d_matrix(2);
  for (std::size_t r = 0; r < d2.rows(); ++r) {
    Poly s;
    for (std::size_t c = 0; c < f.dim2; ++c) {
      if (d2.at(r, c) == 0 || g2[c].is_zero()) continue;
      s += Poly(d2.at(r, c)) * g2[c];
    }
    if (!s.is_zero())
      throw std::logic_error("massey_product: representative is not closed");
  }

  const std::size_t nh2 = h.dim(2);
  out.value.assign(nh2, Poly());
  std::set<ParamMono> monos;
  for (const Poly& p : g2)
    for (const auto& [m, c] : p.terms()) monos.insert(m);
  for (const ParamMono& m : monos) {
    VecQ vec(f.dim2);
    for (std::size_t c = 0; c < f.dim2; ++c) {
      auto it = g2[c].terms().find(m);
      if (it != g2[c].terms().end()) vec[c] = it->second;
    }
    const VecQ hc = h.class_coords(2, alg.from_coords(2, vec));
    Poly mono_poly{Scalar(1)};
    for (const auto& [var, exp] : m.exps)
      for (int t = 0; t < exp; ++t) mono_poly = mono_poly * Poly::var(var);
    for (std::size_t i = 0; i < nh2; ++i)
      if (hc[i] != 0) out.value[i] += Poly(hc[i]) * mono_poly;
  }
  out.constant_part.assign(nh2, Scalar(0));
  for (std::size_t i = 0; i < nh2; ++i)
    out.constant_part[i] = out.value[i].eval({});

  decide(out, f);
  return out;
}

MasseyOutcome massey_product_classes(const Cohomology& h,
                                     const std::vector<std::size_t>& tuple) {
  std::vector<VecQ> inputs;
  inputs.reserve(tuple.size());
  for (std::size_t t : tuple) {
    if (t >= h.dim(1))
      throw std::invalid_argument("massey_product: class index out of range");
    VecQ c(h.dim(1));
    c[t] = 1;
    inputs.push_back(std::move(c));
  }
  return massey_product(h, inputs);
}

std::optional<AffineSet> value_affine_set(const MasseyOutcome& o) {
  if (o.status != MasseyStatus::defined) return std::nullopt;
  AffineSet s;
  s.base = o.constant_part;
  std::set<std::size_t> varset;
  std::vector<std::map<std::size_t, Scalar>> lin(o.value.size());
  for (std::size_t i = 0; i < o.value.size(); ++i) {
    auto a = o.value[i].affine_form();
    if (!a) return std::nullopt;
    for (const auto& [var, c] : a->second) varset.insert(var);
    lin[i] = std::move(a->second);
  }
  for (std::size_t var : varset) {
    VecQ d(o.value.size());
    for (std::size_t i = 0; i < o.value.size(); ++i) {
      auto it = lin[i].find(var);
      if (it != lin[i].end()) d[i] = it->second;
    }
    s.dirs.push_back(std::move(d));
  }
  return s;
}

bool affine_sets_equal(const AffineSet& a, const AffineSet& b) {
  if (a.base.size() != b.base.size()) return false;
  RowSpan sa(a.base.size());
  for (const VecQ& d : a.dirs) sa.add(d);
  RowSpan sb(b.base.size());
  for (const VecQ& d : b.dirs) sb.add(d);
  if (sa.rank() != sb.rank()) return false;
  for (const VecQ& d : b.dirs)
    if (!sa.contains(d)) return false;
  VecQ diff(a.base.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.base[i] - b.base[i];
  return sa.contains(diff);
}

AffineSet map_affine_set(const MatrixQ& m, const AffineSet& s) {
  AffineSet out;
  out.base = m.apply(s.base);
  for (const VecQ& d : s.dirs) out.dirs.push_back(m.apply(d));
  return out;
}

NaturalityReport massey_naturality(const Cohomology& hs, const Cohomology& ht,
                                   const Morphism& f,
                                   const std::vector<std::size_t>& tuple) {
  NaturalityReport r;
  r.qis = one_qis_check(hs, ht, f);
  r.src = massey_product_classes(hs, tuple);
  std::vector<VecQ> dst_inputs;
  dst_inputs.reserve(tuple.size());
  for (std::size_t t : tuple) {
    VecQ col(ht.dim(1));
    for (std::size_t i = 0; i < ht.dim(1); ++i)
      col[i] = r.qis.h1_matrix.at(i, t);
    dst_inputs.push_back(std::move(col));
  }
  r.dst = massey_product(ht, dst_inputs);
  auto s0 = value_affine_set(r.src);
  auto s1 = value_affine_set(r.dst);
  r.applicable = r.qis.ok && s0.has_value() && s1.has_value();
  if (!r.applicable) {
    r.detail = "comparison needs the map to transport degree <= 2 structure "
               "and both value sets to be affine";
    return r;
  }
  r.natural = affine_sets_equal(map_affine_set(r.qis.h2_matrix, *s0), *s1);
  r.detail = r.natural ? "value sets agree under the induced map"
                       : "value sets differ under the induced map";
  return r;
}

std::vector<SweepRow> massey_sweep(const Cohomology& h, int len) {
  if (len < 3)
    throw std::invalid_argument("massey_sweep: length must be at least 3");
  const std::size_t n = h.dim(1);
  std::size_t total = 1;
  for (int i = 0; i < len; ++i) total *= n;
  std::vector<SweepRow> rows(total);
  // independent tuples written to disjoint slots: deterministic output
#pragma omp parallel for schedule(dynamic, 4)
  for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
    std::vector<std::size_t> tuple(len);
    std::size_t rem = static_cast<std::size_t>(idx);
    for (int p = len - 1; p >= 0; --p) {
      tuple[p] = rem % n;
      rem /= n;
    }
    MasseyOutcome o = massey_product_classes(h, tuple);
    rows[idx] = {std::move(tuple), o.status, o.verdict, o.decided_by};
  }
  return rows;
}

}  // namespace rht
