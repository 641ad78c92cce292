#pragma once

#include "rht/element.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace rht {

// Finitely presented graded-commutative differential algebra over Q:
// free graded-commutative algebra on the generators, modulo the two-sided
// ideal spanned by the relations, with the differential determined on
// generators and extended by the Leibniz rule. This class only collects
// the data; FiniteCdga::build materializes and validates it.
class Presentation {
 public:
  std::string label;  // optional display name, carried through JSON

  std::size_t add_generator(const std::string& name, int degree,
                            int weight = 0);
  void add_relation(Element r);
  void set_differential(const std::string& name, Element dg);

  bool has_generator(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws if absent
  Element gen(const std::string& name) const;
  // product of named generators, canonicalized (signs applied)
  Element mono(const std::vector<std::string>& names) const;

  const GenList& gens() const { return gens_; }
  const std::vector<Element>& relations() const { return relations_; }
  // indexed by generator; zero where unset
  const std::vector<Element>& differential() const { return diff_; }

  // true when every generator carries a positive weight
  bool weighted() const;

  nlohmann::json to_json() const;
  static Presentation from_json(const nlohmann::json& j);

  nlohmann::json element_to_json(const Element& e) const;
  Element element_from_json(const nlohmann::json& j,
                            const std::string& path) const;

 private:
  GenList gens_;
  std::vector<Element> relations_;
  std::vector<Element> diff_;
};

}  // namespace rht
