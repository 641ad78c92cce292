#pragma once

#include "rht/cdga.hpp"

#include <map>
#include <string>
#include <vector>

namespace rht {

// Cohomology of a materialized algebra in degrees 0..cap. When the algebra
// is weighted the computation runs block by block, which keeps the linear
// algebra small and makes every representative weight-pure. Representatives
// are deterministic: kernel vectors in their natural order, greedily
// completing the boundary space.
class Cohomology {
 public:
  explicit Cohomology(const FiniteCdga& a);
  // holds a pointer to the algebra, so it must outlive this object
  explicit Cohomology(FiniteCdga&&) = delete;

  const FiniteCdga& algebra() const { return *a_; }
  bool weighted() const { return a_->weighted(); }

  std::size_t dim(int q) const;
  const Element& rep(int q, std::size_t i) const;
  // bare representative string, e.g. "g" or "u1^gc"
  std::string label(int q, std::size_t i) const;
  int weight(int q, std::size_t i) const;  // 0 when unweighted
  std::map<int, std::size_t> weight_histogram(int q) const;
  std::vector<std::size_t> classes_of_weight(int q, int w) const;

  // index of the class whose label matches exactly, if any
  std::optional<std::size_t> find_label(int q, const std::string& label) const;

  // coordinates of a cocycle's class in the chosen basis of H^q;
  // throws std::invalid_argument when the element is not closed.
  VecQ class_coords(int q, const Element& cocycle) const;
  Element class_element(int q, const VecQ& coords) const;

  bool is_closed(int q, const Element& e) const;
  bool is_exact(int q, const Element& e) const;
  // a primitive: an element of degree q-1 with d(primitive) = e
  std::optional<Element> primitive(int q, const Element& e) const;

  // cup product of two classes, as a class coordinate vector in H^{p+q}
  VecQ cup(int p, std::size_t i, int q, std::size_t j) const;

 private:
  struct DegreeH {
    std::vector<VecQ> reps;        // full A^q basis coordinates
    std::vector<Element> elems;
    std::vector<int> weights;
    std::vector<VecQ> boundaries;  // basis of im(d) in A^q coordinates
  };
  const DegreeH& at(int q) const;

  const FiniteCdga* a_;
  std::vector<DegreeH> h_;
};

// Whether a map is an isomorphism on H^1 and injective on H^2: the
// condition under which degree-<=2 structure transports faithfully.
struct OneQisReport {
  bool h1_iso = false;
  bool h2_injective = false;
  bool ok = false;
  MatrixQ h1_matrix;  // dst-dim x src-dim
  MatrixQ h2_matrix;
};
OneQisReport one_qis_check(const Cohomology& src, const Cohomology& dst,
                           const Morphism& f);

// Weight purity of each cohomology degree.
struct PurityReport {
  int degree = 0;
  bool pure = false;
  std::map<int, std::size_t> weights;
};
std::vector<PurityReport> purity_report(const Cohomology& h);

// Weight bound for length-len products of degree-one classes: when
// len * (minimal H^1 weight) exceeds every weight occurring in H^2, any
// such product class is forced to vanish.
struct WeightCertificate {
  bool applicable = false;
  int len = 0;
  int min_h1_weight = 0;
  int max_h2_weight = 0;
  std::string reason;
};
WeightCertificate weight_certificate(const Cohomology& h, int len);

}  // namespace rht
