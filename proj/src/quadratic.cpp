#include "rht/quadratic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rht {

namespace {

bool vec_zero(const VecQ& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// commutativity element a(x)b + b(x)a (or the square a(x)a)
VecQ comm_element(std::size_t n, std::size_t a, std::size_t b) {
  VecQ v(n * n);
  v[a * n + b] += 1;
  v[b * n + a] += 1;
  return v;
}

std::string word_str(const std::vector<std::string>& names,
                     const std::size_t* word, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    if (i) s += "\xE2\x8A\x97";  // tensor sign
    s += names[word[i]];
  }
  return s;
}

}  // namespace

QuadraticData quadratic_data(const FiniteCdga& alg) {
  const Presentation& pres = alg.pres();
  const std::size_t n = pres.gens().size();
  for (const auto& g : pres.gens())
    if (g.degree != 1)
      throw std::invalid_argument(
          "quadratic_data: generator " + g.name + " is not of degree 1");

  QuadraticData q;
  q.label = pres.label;
  for (const auto& g : pres.gens()) {
    q.names.push_back(g.name);
    q.weights.push_back(g.weight > 0 ? g.weight : 1);
  }

  // R = kernel of the multiplication V(x)V -> A^2
  const std::size_t h2 = alg.dim(2);
  MatrixQ mult(h2, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element ga = pres.gen(pres.gens()[a].name);
    for (std::size_t b = 0; b < n; ++b) {
      const Element gb = pres.gen(pres.gens()[b].name);
      const VecQ col = alg.coords(2, alg.multiply(ga, gb));
      for (std::size_t r = 0; r < h2; ++r) mult.at(r, a * n + b) = col[r];
    }
  }
  q.relations = kernel_basis(mult);

  // phi = transpose of the antisymmetric lift of the differential
  q.phi.assign(n * n, VecQ(n));
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Element& dx = pres.differential()[i];
    for (const auto& [m, c] : dx.terms()) {
      if (m.idx.size() != 2 || m.idx[0] == m.idx[1])
        throw std::logic_error(
            "quadratic_data: differential term is not a two-generator "
            "monomial");
      const std::size_t a = m.idx[0], b = m.idx[1];
      q.phi[a * n + b][i] += c / 2;
      q.phi[b * n + a][i] -= c / 2;
      any = true;
    }
  }
  if (!any) q.phi.clear();
  return q;
}

QuadraticData quadratic_data_from_lie(const LiePresentation& p) {
  const std::size_t n = p.gens().size();
  QuadraticData q;
  q.label = "ce:" + p.label;
  for (const auto& g : p.gens()) {
    q.names.push_back(g.name);
    q.weights.push_back(g.weight > 0 ? g.weight : 1);
  }

  // embedded length-2 relation layers: [x, y] -> x(x)y - y(x)x
  std::vector<VecQ> embedded;
  for (const auto& r : p.relations()) {
    std::size_t len = 0;
    for (const auto& t : r) {
      if (len == 0)
        len = t.expr.length();
      else if (len != t.expr.length())
        throw std::invalid_argument(
            "quadratic_data_from_lie: relation mixes bracket lengths");
    }
    if (len != 2) continue;
    VecQ v(n * n);
    for (const auto& t : r) {
      const std::size_t a = p.index_of(t.expr.left().gen_name());
      const std::size_t b = p.index_of(t.expr.right().gen_name());
      v[a * n + b] += t.coeff;
      v[b * n + a] -= t.coeff;
    }
    if (!vec_zero(v)) embedded.push_back(std::move(v));
  }

  if (embedded.empty()) {
    for (std::size_t i = 0; i < n * n; ++i) {
      VecQ v(n * n);
      v[i] = 1;
      q.relations.push_back(std::move(v));
    }
  } else {
    q.relations = kernel_basis(MatrixQ::from_rows(std::move(embedded)));
  }
  return q;
}

LiePresentation quadratic_dual(const QuadraticData& q,
                               const std::vector<std::string>& dual_names) {
  const std::size_t n = q.names.size();
  if (n == 0) throw std::invalid_argument("quadratic_dual: empty data");
  if (q.weights.size() != n)
    throw std::invalid_argument("quadratic_dual: weight count mismatch");
  for (const auto& r : q.relations)
    if (r.size() != n * n)
      throw std::invalid_argument("quadratic_dual: relation size mismatch");
  if (!q.phi.empty()) {
    if (q.phi.size() != n * n)
      throw std::invalid_argument("quadratic_dual: phi row count mismatch");
    for (const auto& row : q.phi)
      if (row.size() != n)
        throw std::invalid_argument("quadratic_dual: phi row size mismatch");
  }
  if (!dual_names.empty() && dual_names.size() != n)
    throw std::invalid_argument("quadratic_dual: dual name count mismatch");

  // the commutativity part must be present in R, and phi must kill it
  RowSpan span(n * n);
  for (const auto& r : q.relations) span.add(r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (!span.contains(comm_element(n, a, b)))
        throw std::invalid_argument(
            "quadratic_dual: commutativity element " + q.names[a] + "(x)" +
            q.names[b] + " missing from R");
      if (!q.phi.empty()) {
        VecQ sum = q.phi[a * n + b];
        for (std::size_t x = 0; x < n; ++x) sum[x] += q.phi[b * n + a][x];
        if (!vec_zero(sum))
          throw std::invalid_argument(
              "quadratic_dual: phi does not vanish on the commutativity "
              "element " +
              q.names[a] + "(x)" + q.names[b]);
      }
    }

  const std::vector<VecQ> ann =
      kernel_basis(MatrixQ::from_rows(q.relations));
  for (const auto& alpha : ann)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        if (alpha[a * n + b] != -alpha[b * n + a])
          throw std::logic_error(
              "quadratic_dual: annihilator vector is not antisymmetric");

  const std::vector<std::string>& out_names =
      dual_names.empty() ? q.names : dual_names;
  LiePresentation out;
  out.label = q.label.empty() ? "dual" : "dual:" + q.label;
  for (std::size_t i = 0; i < n; ++i)
    out.add_generator(out_names[i], q.weights[i] > 0 ? q.weights[i] : 1);

  for (const auto& alpha : ann) {
    LieElement rel;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (alpha[a * n + b] != 0)
          rel.push_back({alpha[a * n + b],
                         LieExpr::bracket(LieExpr::gen(out_names[a]),
                                          LieExpr::gen(out_names[b]))});
    if (!q.phi.empty()) {
      VecQ lin(n);
      for (std::size_t ab = 0; ab < n * n; ++ab) {
        if (alpha[ab] == 0) continue;
        for (std::size_t x = 0; x < n; ++x)
          lin[x] += alpha[ab] * q.phi[ab][x];
      }
      for (std::size_t x = 0; x < n; ++x)
        if (lin[x] != 0)
          rel.push_back({-lin[x], LieExpr::gen(out_names[x])});
    }
    if (!rel.empty()) out.add_relation(std::move(rel));
  }
  return out;
}

std::vector<std::string> symplectic_dual_names(int k) {
  if (k < 1)
    throw std::invalid_argument("symplectic_dual_names: k must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("X" + std::to_string(i));
  for (int i = 1; i <= k; ++i) names.push_back("Y" + std::to_string(i));
  return names;
}

std::vector<std::string> extended_dual_names(int k) {
  std::vector<std::string> names = symplectic_dual_names(k);
  names.push_back("Z");
  names.push_back("W");
  return names;
}

// ---------------------------------------------------------------------------
// rewriting-method confluence check

namespace {

using Word3 = std::array<std::size_t, 3>;
using Combo3 = std::map<Word3, Scalar>;

void combo_add(Combo3& combo, const Word3& w, const Scalar& c) {
  auto it = combo.try_emplace(w, 0).first;
  it->second += c;
  if (it->second == 0) combo.erase(it);
}

std::string combo_str(const Combo3& combo,
                      const std::vector<std::string>& names) {
  if (combo.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : combo) {
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    const Scalar mag = c < 0 ? Scalar(-c) : c;
    if (mag != 1) s += scalar_to_string(mag) + "*";
    s += word_str(names, w.data(), 3);
  }
  return s;
}

}  // namespace

ConfluenceReport confluence_check(const QuadraticData& q,
                                  const std::vector<std::size_t>& order) {
  const std::size_t n = q.names.size();
  if (n == 0)
    throw std::invalid_argument("confluence_check: empty data");
  for (const auto& r : q.relations)
    if (r.size() != n * n)
      throw std::invalid_argument(
          "confluence_check: relation size mismatch");

  // position of each generator in the chosen order
  std::vector<std::size_t> pos(n);
  if (order.empty()) {
    for (std::size_t i = 0; i < n; ++i) pos[i] = i;
  } else {
    if (order.size() != n)
      throw std::invalid_argument(
          "confluence_check: order must list every generator");
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      if (order[r] >= n || seen[order[r]])
        throw std::invalid_argument(
            "confluence_check: order is not a permutation");
      seen[order[r]] = true;
      pos[order[r]] = r;
    }
  }

  // columns sorted by word rank descending, so rref pivots are the
  // largest words of their rows and the remainder is strictly smaller
  std::vector<std::size_t> cols(n * n);
  for (std::size_t i = 0; i < n * n; ++i) cols[i] = i;
  auto rank_of = [&](std::size_t ab) {
    return pos[ab / n] * n + pos[ab % n];
  };
  std::sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
    return rank_of(x) > rank_of(y);
  });

  MatrixQ m(q.relations.size(), n * n);
  for (std::size_t r = 0; r < q.relations.size(); ++r)
    for (std::size_t j = 0; j < n * n; ++j)
      m.at(r, j) = q.relations[r][cols[j]];
  const RrefResult red = rref(std::move(m));

  ConfluenceReport report;
  std::map<std::array<std::size_t, 2>, std::size_t> by_lead;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    RewriteRule rule;
    const std::size_t lead = cols[red.pivots[r]];
    rule.lead = {lead / n, lead % n};
    rule.commutativity = pos[rule.lead[0]] >= pos[rule.lead[1]];
    for (std::size_t j = red.pivots[r] + 1; j < n * n; ++j) {
      const Scalar& c = red.mat.at(r, j);
      if (c != 0)
        rule.rhs[{cols[j] / n, cols[j] % n}] = -c;
    }
    by_lead[rule.lead] = report.rules.size();
    report.rules.push_back(std::move(rule));
  }

  // one rewriting step wherever a leading word occurs; the rule right-hand
  // sides contain only normal two-letter words, so each step strictly
  // decreases the word order and normalization terminates
  auto normalize = [&](Combo3 combo) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = combo.begin(); it != combo.end(); ++it) {
        const Word3 w = it->first;
        const Scalar c = it->second;
        auto left = by_lead.find({w[0], w[1]});
        if (left != by_lead.end()) {
          combo.erase(it);
          for (const auto& [pair, cc] : report.rules[left->second].rhs)
            combo_add(combo, {pair[0], pair[1], w[2]}, c * cc);
          changed = true;
          break;
        }
        auto right = by_lead.find({w[1], w[2]});
        if (right != by_lead.end()) {
          combo.erase(it);
          for (const auto& [pair, cc] : report.rules[right->second].rhs)
            combo_add(combo, {w[0], pair[0], pair[1]}, c * cc);
          changed = true;
          break;
        }
      }
    }
    return combo;
  };

  report.confluent = true;
  for (const auto& r1 : report.rules) {
    for (const auto& r2 : report.rules) {
      if (r1.lead[1] != r2.lead[0]) continue;
      CriticalMonomial crit;
      crit.word = {r1.lead[0], r1.lead[1], r2.lead[1]};
      crit.interesting = !r1.commutativity && !r2.commutativity;

      Combo3 left, right;
      for (const auto& [pair, cc] : r1.rhs)
        combo_add(left, {pair[0], pair[1], crit.word[2]}, cc);
      for (const auto& [pair, cc] : r2.rhs)
        combo_add(right, {crit.word[0], pair[0], pair[1]}, cc);
      left = normalize(std::move(left));
      right = normalize(std::move(right));

      crit.confluent = left == right;
      crit.left_normal_form = combo_str(left, q.names);
      crit.right_normal_form = combo_str(right, q.names);
      if (!crit.confluent) report.confluent = false;
      report.criticals.push_back(std::move(crit));
    }
  }
  return report;
}

}  // namespace rht
