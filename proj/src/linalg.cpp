#include "rht/linalg.hpp"

#include <omp.h>

#include <stdexcept>

namespace rht {

MatrixQ MatrixQ::from_rows(std::vector<VecQ> rows) {
  MatrixQ m;
  if (!rows.empty()) m.cols_ = rows.front().size();
  for (auto& r : rows) {
    if (r.size() != m.cols_)
      throw std::invalid_argument("from_rows: ragged rows");
  }
  m.rows_ = std::move(rows);
  return m;
}

void MatrixQ::append_row(VecQ r) {
  if (rows_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("append_row: bad width");
  rows_.push_back(std::move(r));
}

MatrixQ MatrixQ::transposed() const {
  MatrixQ t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

VecQ MatrixQ::apply(const VecQ& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: bad length");
  VecQ y(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (rows_[i][j] != 0 && x[j] != 0) acc += rows_[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

// Shared elimination skeleton; `parallel` toggles the OpenMP row kernel.
// Pivot selection is sequential and identical in both paths, and each row
// update touches a distinct row, so results agree entry for entry.
RrefResult rref_impl(MatrixQ m, bool parallel) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m.at(p, c) == 0) ++p;
    if (p == nr) continue;
    std::swap(m.row(p), m.row(r));
    if (m.at(r, c) != 1) {
      const Scalar inv = m.at(r, c);
      auto& pr = m.row(r);
      for (std::size_t j = c; j < nc; ++j)
        if (pr[j] != 0) pr[j] /= inv;
    }
    const VecQ& pr = m.row(r);
    const long long nrl = static_cast<long long>(nr);
#pragma omp parallel for schedule(dynamic, 16) if (parallel && nr >= 64)
    for (long long ii = 0; ii < nrl; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r || m.at(i, c) == 0) continue;
      const Scalar f = m.at(i, c);
      auto& row = m.row(i);
      for (std::size_t j = c; j < nc; ++j)
        if (pr[j] != 0) row[j] -= f * pr[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

RrefResult rref(MatrixQ m) { return rref_impl(std::move(m), true); }

namespace reference {
RrefResult rref_serial(MatrixQ m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m.at(p, c) == 0) ++p;
    if (p == nr) continue;
    std::swap(m.row(p), m.row(r));
    const Scalar inv = m.at(r, c);
    for (std::size_t j = c; j < nc; ++j)
      if (m.at(r, j) != 0) m.at(r, j) /= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Scalar f = m.at(i, c);
      for (std::size_t j = c; j < nc; ++j)
        if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}
}  // namespace reference

std::size_t rank(const MatrixQ& m) { return rref(m).pivots.size(); }

std::vector<VecQ> kernel_basis(const MatrixQ& m) {
  const std::size_t nc = m.cols();
  auto rr = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<VecQ> basis;
  for (std::size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    VecQ v(nc);
    v[c] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = -rr.mat.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<VecQ> solve(const MatrixQ& a, const VecQ& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: bad rhs length");
  MatrixQ aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto rr = rref(std::move(aug));
  for (auto c : rr.pivots)
    if (c == a.cols()) return std::nullopt;
  VecQ x(a.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    x[rr.pivots[i]] = rr.mat.at(i, a.cols());
  return x;
}

std::optional<VecQ> membership(const std::vector<VecQ>& basis, const VecQ& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<VecQ>(VecQ{}) : std::nullopt;
  const std::size_t dim = basis.front().size();
  if (v.size() != dim) throw std::invalid_argument("membership: bad length");
  MatrixQ a(dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != dim)
      throw std::invalid_argument("membership: ragged basis");
    for (std::size_t i = 0; i < dim; ++i) a.at(i, j) = basis[j][i];
  }
  return solve(a, v);
}

std::vector<VecQ> quotient_representatives(const std::vector<VecQ>& ambient,
                                           const std::vector<VecQ>& sub) {
  std::size_t cols = 0;
  if (!ambient.empty()) cols = ambient.front().size();
  else if (!sub.empty()) cols = sub.front().size();
  RowSpan ambient_span(cols);
  for (const auto& v : ambient) ambient_span.add(v);
  RowSpan span(cols);
  for (const auto& v : sub) {
    if (!ambient_span.contains(v))
      throw std::logic_error(
          "quotient_representatives: sub vector outside ambient span");
    span.add(v);
  }
  std::vector<VecQ> reps;
  for (const auto& v : ambient)
    if (span.add(v)) reps.push_back(v);
  return reps;
}

LinearSolver::LinearSolver(const MatrixQ& a) : nrows_(a.rows()), ncols_(a.cols()) {
  // rref of [A | I]; the right block becomes T with T*A in rref.
  MatrixQ aug(nrows_, ncols_ + nrows_);
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t j = 0; j < ncols_; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, ncols_ + i) = 1;
  }
  // Restrict pivoting to the A-columns: run the elimination manually so the
  // identity block never produces pivots.
  const std::size_t nr = nrows_, nc = ncols_ + nrows_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols_ && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && aug.at(p, c) == 0) ++p;
    if (p == nr) continue;
    std::swap(aug.row(p), aug.row(r));
    const Scalar inv = aug.at(r, c);
    for (std::size_t j = 0; j < nc; ++j)
      if (aug.at(r, j) != 0) aug.at(r, j) /= inv;
    const VecQ& pr = aug.row(r);
    const long long nrl = static_cast<long long>(nr);
#pragma omp parallel for schedule(dynamic, 16) if (nr >= 64)
    for (long long ii = 0; ii < nrl; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r || aug.at(i, c) == 0) continue;
      const Scalar f = aug.at(i, c);
      auto& row = aug.row(i);
      for (std::size_t j = 0; j < nc; ++j)
        if (pr[j] != 0) row[j] -= f * pr[j];
    }
    pivots_.push_back(c);
    ++r;
  }
  t_ = MatrixQ(nrows_, nrows_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < nrows_; ++j) t_.at(i, j) = aug.at(i, ncols_ + j);
}

std::optional<VecQ> LinearSolver::solve(const VecQ& b) const {
  if (b.size() != nrows_) throw std::invalid_argument("LinearSolver: bad rhs");
  VecQ tb = t_.apply(b);
  for (std::size_t i = rank(); i < nrows_; ++i)
    if (tb[i] != 0) return std::nullopt;
  VecQ x(ncols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = tb[i];
  return x;
}

bool RowSpan::add(const VecQ& v) {
  auto res = reduce(v);
  if (!res) return false;
  auto [w, lead] = std::move(*res);
  // keep rows ordered by leading column; back-reduce existing rows
  for (auto& r : rows_)
    if (r[lead] != 0) {
      const Scalar f = r[lead];
      for (std::size_t j = 0; j < cols_; ++j)
        if (w[j] != 0) r[j] -= f * w[j];
    }
  std::size_t pos = 0;
  while (pos < rows_.size() && lead_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(w));
  lead_.insert(lead_.begin() + pos, lead);
  return true;
}

std::optional<std::pair<VecQ, std::size_t>> RowSpan::reduce(VecQ v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSpan: bad length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v[lead_[i]] == 0) continue;
    const Scalar f = v[lead_[i]];
    for (std::size_t j = 0; j < cols_; ++j)
      if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
  }
  for (std::size_t j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      const Scalar inv = v[j];
      for (std::size_t t = j; t < cols_; ++t)
        if (v[t] != 0) v[t] /= inv;
      return std::make_pair(std::move(v), j);
    }
  return std::nullopt;
}

}  // namespace rht
