#pragma once

#include "rht/cohomology.hpp"
#include "rht/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rht {

// One parametrized family covers every defining system at once: each
// entry is a particular solution (a fixed linear operator applied to its
// right-hand side) plus fresh parameters along the closed degree-one
// vectors. Solvability obstructions surface as polynomial constraints on
// the parameters; linear ones are eliminated exactly by substitution.
enum class MasseyStatus { defined, undefined, undecided };
enum class MasseyVerdict { trivial, nontrivial, undecided };

struct MasseyOutcome {
  MasseyStatus status = MasseyStatus::undecided;
  MasseyVerdict verdict = MasseyVerdict::undecided;
  std::size_t length = 0;
  std::vector<std::string> labels;      // printable input classes
  std::size_t param_count = 0;          // free parameters of the family
  PolyVec value;                        // H^2 coordinates of the product set
  VecQ constant_part;                   // value at the all-zero parameter point
  std::vector<Poly> residual_constraints;  // nonempty only when not defined
  std::string decided_by;               // which ladder step settled it
  std::vector<std::string> notes;
};

std::string massey_param_name(std::size_t id);
const char* to_string(MasseyStatus s);
const char* to_string(MasseyVerdict v);

// inputs as H^1 class coordinate vectors (general combinations allowed)
MasseyOutcome massey_product(const Cohomology& h,
                             const std::vector<VecQ>& inputs);
// convenience: tuples of basis classes
MasseyOutcome massey_product_classes(const Cohomology& h,
                                     const std::vector<std::size_t>& tuple);

// Affine description of the value set, available when every coordinate is
// affine in the parameters (always the case for triple products).
struct AffineSet {
  VecQ base;
  std::vector<VecQ> dirs;
};
std::optional<AffineSet> value_affine_set(const MasseyOutcome& o);
bool affine_sets_equal(const AffineSet& a, const AffineSet& b);
AffineSet map_affine_set(const MatrixQ& m, const AffineSet& s);

// Naturality of a triple product along a map: the source value set must
// push forward onto the target value set through the induced H^2 map.
struct NaturalityReport {
  OneQisReport qis;
  MasseyOutcome src;
  MasseyOutcome dst;
  bool applicable = false;  // both defined with affine value sets
  bool natural = false;
  std::string detail;
};
NaturalityReport massey_naturality(const Cohomology& hs, const Cohomology& ht,
                                   const Morphism& f,
                                   const std::vector<std::size_t>& tuple);

// Every length-len tuple of basis classes, in lexicographic tuple order.
struct SweepRow {
  std::vector<std::size_t> tuple;
  MasseyStatus status;
  MasseyVerdict verdict;
  std::string decided_by;
};
std::vector<SweepRow> massey_sweep(const Cohomology& h, int len);

}  // namespace rht
