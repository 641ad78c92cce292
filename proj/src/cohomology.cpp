#include "rht/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace rht {

namespace {

// expand block-coordinate vectors to full degree coordinates
VecQ expand(const VecQ& v, const std::vector<std::size_t>& block,
            std::size_t full) {
  VecQ out(full);
  for (std::size_t i = 0; i < v.size(); ++i) out[block[i]] = v[i];
  return out;
}

}  // namespace

Cohomology::Cohomology(const FiniteCdga& a) : a_(&a) {
  h_.resize(static_cast<std::size_t>(a.cap()) + 1);
  for (int q = 0; q <= a.cap(); ++q) {
    auto& H = h_[static_cast<std::size_t>(q)];
    const std::size_t full = a.dim(q);

    // blocks: per weight when weighted, one global block otherwise
    std::vector<std::pair<int, std::vector<std::size_t>>> blocks;
    if (a.weighted()) {
      for (int w : a.weights_in(q)) blocks.emplace_back(w, a.block(q, w));
    } else {
      std::vector<std::size_t> all(full);
      for (std::size_t i = 0; i < full; ++i) all[i] = i;
      blocks.emplace_back(0, std::move(all));
    }

    for (const auto& [w, blk] : blocks) {
      MatrixQ dq = a.weighted() ? a.d_matrix_block(q, w) : a.d_matrix(q);
      auto kernel = kernel_basis(dq);

      std::vector<VecQ> bnd;
      if (q >= 1) {
        MatrixQ dprev =
            a.weighted() ? a.d_matrix_block(q - 1, w) : a.d_matrix(q - 1);
        RowSpan span(dprev.rows());
        for (std::size_t j = 0; j < dprev.cols(); ++j) {
          VecQ col(dprev.rows());
          for (std::size_t i = 0; i < dprev.rows(); ++i) col[i] = dprev.at(i, j);
          if (!is_zero(col) && span.add(col)) bnd.push_back(std::move(col));
        }
      }
      auto reps = quotient_representatives(kernel, bnd);
      for (auto& r : reps) {
        H.reps.push_back(expand(r, blk, full));
        H.elems.push_back(a.from_coords(q, H.reps.back()));
        H.weights.push_back(w);
      }
      for (auto& b : bnd) H.boundaries.push_back(expand(b, blk, full));
    }
  }
}

const Cohomology::DegreeH& Cohomology::at(int q) const {
  if (q < 0 || q > a_->cap()) throw std::out_of_range("cohomology degree");
  return h_[static_cast<std::size_t>(q)];
}

std::size_t Cohomology::dim(int q) const {
  if (q < 0) return 0;
  if (q > a_->cap()) {
    if (a_->vanishes_above_cap()) return 0;
    throw std::out_of_range("cohomology degree beyond cap");
  }
  return at(q).reps.size();
}

const Element& Cohomology::rep(int q, std::size_t i) const {
  return at(q).elems[i];
}

std::string Cohomology::label(int q, std::size_t i) const {
  return at(q).elems[i].str(a_->gens());
}

int Cohomology::weight(int q, std::size_t i) const { return at(q).weights[i]; }

std::map<int, std::size_t> Cohomology::weight_histogram(int q) const {
  std::map<int, std::size_t> out;
  for (int w : at(q).weights) ++out[w];
  return out;
}

std::vector<std::size_t> Cohomology::classes_of_weight(int q, int w) const {
  std::vector<std::size_t> out;
  const auto& H = at(q);
  for (std::size_t i = 0; i < H.weights.size(); ++i)
    if (H.weights[i] == w) out.push_back(i);
  return out;
}

std::optional<std::size_t> Cohomology::find_label(
    int q, const std::string& label_str) const {
  const auto& H = at(q);
  for (std::size_t i = 0; i < H.elems.size(); ++i)
    if (H.elems[i].str(a_->gens()) == label_str) return i;
  return std::nullopt;
}

bool Cohomology::is_closed(int q, const Element& e) const {
  (void)q;
  return a_->d(e).is_zero();
}

bool Cohomology::is_exact(int q, const Element& e) const {
  const Element r = a_->reduce(e);
  if (r.is_zero()) return true;
  return membership(at(q).boundaries, a_->coords(q, r)).has_value();
}

std::optional<Element> Cohomology::primitive(int q, const Element& e) const {
  const Element r = a_->reduce(e);
  if (r.is_zero()) return Element();
  MatrixQ dprev = a_->d_matrix(q - 1);
  auto x = solve(dprev, a_->coords(q, r));
  if (!x) return std::nullopt;
  return a_->from_coords(q - 1, *x);
}

VecQ Cohomology::class_coords(int q, const Element& cocycle) const {
  const Element r = a_->reduce(cocycle);
  if (!a_->d(r).is_zero())
    throw std::invalid_argument("class_coords: element is not closed");
  const auto& H = at(q);
  VecQ target = a_->coords(q, r);
  if (is_zero(target)) return VecQ(H.reps.size());
  // solve [reps | boundaries] * x = target; the class part is unique
  std::vector<VecQ> cols = H.reps;
  for (const auto& b : H.boundaries) cols.push_back(b);
  auto x = membership(cols, target);
  if (!x) throw std::logic_error("closed element outside Z = H + B");
  return VecQ(x->begin(), x->begin() + static_cast<long>(H.reps.size()));
}

Element Cohomology::class_element(int q, const VecQ& coords) const {
  const auto& H = at(q);
  if (coords.size() != H.reps.size())
    throw std::invalid_argument("class_element: wrong length");
  Element e;
  for (std::size_t i = 0; i < coords.size(); ++i)
    e += H.elems[i] * coords[i];
  return a_->reduce(e);
}

VecQ Cohomology::cup(int p, std::size_t i, int q, std::size_t j) const {
  return class_coords(p + q, a_->multiply(rep(p, i), rep(q, j)));
}

OneQisReport one_qis_check(const Cohomology& src, const Cohomology& dst,
                           const Morphism& f) {
  OneQisReport rep;
  auto induced = [&](int q) {
    MatrixQ m(dst.dim(q), src.dim(q));
    for (std::size_t j = 0; j < src.dim(q); ++j) {
      VecQ col = dst.class_coords(q, apply_morphism(f, src.rep(q, j)));
      for (std::size_t i = 0; i < dst.dim(q); ++i) m.at(i, j) = col[i];
    }
    return m;
  };
  rep.h1_matrix = induced(1);
  rep.h2_matrix = induced(2);
  const std::size_t r1 = rank(rep.h1_matrix);
  rep.h1_iso = r1 == src.dim(1) && r1 == dst.dim(1);
  rep.h2_injective = rank(rep.h2_matrix) == src.dim(2);
  rep.ok = rep.h1_iso && rep.h2_injective;
  return rep;
}

std::vector<PurityReport> purity_report(const Cohomology& h) {
  std::vector<PurityReport> out;
  for (int q = 0; q <= h.algebra().cap(); ++q) {
    PurityReport r;
    r.degree = q;
    r.weights = h.weight_histogram(q);
    r.pure = r.weights.size() <= 1;
    out.push_back(std::move(r));
  }
  return out;
}

WeightCertificate weight_certificate(const Cohomology& h, int len) {
  WeightCertificate c;
  c.len = len;
  if (!h.weighted()) {
    c.reason = "algebra carries no weight grading";
    return c;
  }
  if (len < 2) {
    c.reason = "products need length at least 2";
    return c;
  }
  if (h.dim(1) == 0) {
    c.reason = "H^1 is zero";
    return c;
  }
  auto h1 = h.weight_histogram(1);
  c.min_h1_weight = h1.begin()->first;
  if (h.dim(2) == 0) {
    c.applicable = true;
    c.reason = "H^2 is zero; every product class vanishes";
    return c;
  }
  auto h2 = h.weight_histogram(2);
  c.max_h2_weight = h2.rbegin()->first;
  if (static_cast<long>(len) * c.min_h1_weight > c.max_h2_weight) {
    c.applicable = true;
    c.reason = "value weight >= " + std::to_string(len) + "*" +
               std::to_string(c.min_h1_weight) +
               " exceeds every H^2 weight (max " +
               std::to_string(c.max_h2_weight) + ")";
  } else {
    c.reason = "weight bound " + std::to_string(len) + "*" +
               std::to_string(c.min_h1_weight) +
               " does not clear the top H^2 weight " +
               std::to_string(c.max_h2_weight);
  }
  return c;
}

}  // namespace rht
