#include "rht/sullivan.hpp"

#include <stdexcept>
#include <utility>

namespace rht {

SullivanTower::SullivanTower(const Cohomology& target, int max_stages)
    : target_(&target) {
  if (max_stages < 1)
    throw std::invalid_argument("SullivanTower: need at least one stage");

  // stage 1: free on duals of H^1, zero differential
  Presentation p;
  p.label = "stage 1";
  const std::size_t n1 = target.dim(1);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n1; ++j) {
    std::string nm = "v1_" + std::to_string(j + 1);
    p.add_generator(nm, 1, target.weight(1, j));
    images_.emplace(nm, target.rep(1, j));
    names.push_back(std::move(nm));
  }
  algs_.push_back(
      std::make_unique<FiniteCdga>(FiniteCdga::build(std::move(p), 2)));
  added_.push_back(std::move(names));

  while (true) {
    const FiniteCdga& st = *algs_.back();
    const Cohomology hs(st);
    const Morphism f = stage_map(stages());

    MatrixQ m(target.dim(2), hs.dim(2));
    for (std::size_t j = 0; j < hs.dim(2); ++j) {
      const VecQ col = target.class_coords(2, apply_morphism(f, hs.rep(2, j)));
      for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
    }
    std::vector<VecQ> ker = kernel_basis(m);
    kdims_.push_back(ker.size());
    kernels_.push_back(ker);
    if (ker.empty()) {
      stabilized_ = true;
      break;
    }
    if (static_cast<int>(stages()) >= max_stages) break;

    const std::size_t s1 = stages() + 1;
    Presentation np = st.pres();
    np.label = "stage " + std::to_string(s1);
    std::vector<std::string> added;
    for (std::size_t j = 0; j < ker.size(); ++j) {
      std::string nm =
          "v" + std::to_string(s1) + "_" + std::to_string(j + 1);
      int w = 0;
      if (st.weighted()) {
        for (std::size_t c = 0; c < ker[j].size(); ++c)
          if (ker[j][c] != 0) {
            if (w == 0)
              w = hs.weight(2, c);
            else if (w != hs.weight(2, c))
              throw std::logic_error(
                  "SullivanTower: kernel class not weight-pure");
          }
      }
      np.add_generator(nm, 1, w);
      const Element dv = hs.class_element(2, ker[j]);
      np.set_differential(nm, dv);
      auto prim = target.primitive(2, apply_morphism(f, dv));
      if (!prim)
        throw std::logic_error(
            "SullivanTower: kernel class image is not exact");
      images_.emplace(nm, std::move(*prim));
      added.push_back(std::move(nm));
    }
    algs_.push_back(
        std::make_unique<FiniteCdga>(FiniteCdga::build(std::move(np), 2)));
    added_.push_back(std::move(added));
  }
}

const FiniteCdga& SullivanTower::stage(std::size_t s) const {
  if (s < 1 || s > algs_.size())
    throw std::out_of_range("SullivanTower: no such stage");
  return *algs_[s - 1];
}

const std::vector<std::string>& SullivanTower::added(std::size_t s) const {
  if (s < 1 || s > added_.size())
    throw std::out_of_range("SullivanTower: no such stage");
  return added_[s - 1];
}

std::size_t SullivanTower::kernel_dim(std::size_t s) const {
  if (s < 1 || s > kdims_.size())
    throw std::out_of_range("SullivanTower: no such stage");
  return kdims_[s - 1];
}

std::vector<std::size_t> SullivanTower::v_sequence() const {
  std::vector<std::size_t> v;
  for (const auto& a : added_) v.push_back(a.size());
  v.push_back(kdims_.back());
  return v;
}

const Element& SullivanTower::image(const std::string& gen) const {
  auto it = images_.find(gen);
  if (it == images_.end())
    throw std::out_of_range("SullivanTower: unknown generator " + gen);
  return it->second;
}

Morphism SullivanTower::stage_map(std::size_t s) const {
  const FiniteCdga& st = stage(s);
  std::map<std::string, Element> im;
  for (const auto& g : st.gens()) im[g.name] = image(g.name);
  return make_morphism(st, target_->algebra(), im);
}

GradedLie dual_lie(const SullivanTower& t) {
  GradedLie g;
  const FiniteCdga& top = t.stage(t.stages());
  const Presentation& p = top.pres();
  const GenList& gens = p.gens();

  // the flattened dual basis is exactly the generator list, stage-major
  for (std::size_t s = 1; s <= t.stages(); ++s) {
    g.layer_dims.push_back(t.added(s).size());
    for (const std::string& nm : t.added(s)) {
      g.names.push_back(nm);
      g.layer_of.push_back(static_cast<int>(s));
    }
  }
  if (g.names.size() != gens.size())
    throw std::logic_error("dual_lie: stage generators out of sync");
  g.weights.assign(g.dim(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].name != g.names[i])
      throw std::logic_error("dual_lie: stage generators out of sync");
    g.weights[i] = gens[i].weight;
  }

  const auto& diff = p.differential();
  for (std::size_t v = 0; v < gens.size(); ++v) {
    for (const auto& [mono, c] : diff[v].terms()) {
      if (mono.idx.size() != 2)
        throw std::logic_error("dual_lie: differential is not quadratic");
      const std::size_t a = mono.idx[0], b = mono.idx[1];
      if (g.layer_of[a] + g.layer_of[b] != g.layer_of[v]) continue;
      auto [it, fresh] = g.bracket.try_emplace(std::pair(a, b), VecQ());
      if (fresh) it->second.assign(g.dim(), Scalar(0));
      it->second[v] += c;
    }
  }
  for (auto it = g.bracket.begin(); it != g.bracket.end();) {
    bool zero = true;
    for (const Scalar& c : it->second)
      if (c != 0) {
        zero = false;
        break;
      }
    it = zero ? g.bracket.erase(it) : std::next(it);
  }

  if (!g.jacobi_holds())
    throw std::logic_error("dual_lie: Jacobi identity failed");
  return g;
}

}  // namespace rht
