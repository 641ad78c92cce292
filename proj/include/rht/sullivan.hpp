#pragma once

#include "rht/cohomology.hpp"
#include "rht/graded_lie.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rht {

// Tower of free degree-one stages under a target algebra. Stage 1 is free
// on duals of H^1 of the target with zero differential; stage s+1 adds one
// degree-one generator per kernel class of H^2(stage s) -> H^2(target),
// with the differential sending the new generator to a representative of
// the class it kills and the stage map sending it to a primitive of that
// representative's image. Generators added at stage s are named vs_1,
// vs_2, ... and inherit the weight of the class they are dual to.
//
// The target cohomology must outlive the tower.
class SullivanTower {
 public:
  // Builds stages until the kernel is empty (stabilized) or max_stages
  // stages exist. The final stage's kernel dimension is computed either
  // way, so the next stage's generator count is known without building it.
  SullivanTower(const Cohomology& target, int max_stages);
  // holds a pointer to the target, so it must outlive this object
  SullivanTower(Cohomology&&, int) = delete;

  const Cohomology& target() const { return *target_; }
  std::size_t stages() const { return algs_.size(); }
  bool stabilized() const { return stabilized_; }
  const FiniteCdga& stage(std::size_t s) const;                // 1-based
  const std::vector<std::string>& added(std::size_t s) const;  // 1-based
  // kernel of H^2(stage s) -> H^2(target): the number of generators
  // stage s+1 adds
  std::size_t kernel_dim(std::size_t s) const;

  // generators added per stage, continued by the final kernel dimension:
  // the next stage's count, 0 exactly when the tower stabilized
  std::vector<std::size_t> v_sequence() const;

  // image of a tower generator in the target algebra
  const Element& image(const std::string& gen) const;
  Morphism stage_map(std::size_t s) const;

 private:
  const Cohomology* target_;
  std::vector<std::unique_ptr<FiniteCdga>> algs_;
  std::vector<std::vector<std::string>> added_;
  std::vector<std::size_t> kdims_;
  std::vector<std::vector<VecQ>> kernels_;  // kernel vectors per stage
  std::map<std::string, Element> images_;
  bool stabilized_ = false;
};

// Dual graded Lie algebra of the tower: one basis element per tower
// generator, in its stage layer; [a*, b*] picks up the coefficient of ab
// in each differential, restricted to the layer pairing. The Jacobi
// identity is verified and violation throws std::logic_error.
GradedLie dual_lie(const SullivanTower& t);

}  // namespace rht
