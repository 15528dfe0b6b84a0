#ifndef HGCALC_PROPERTIES_HPP
#define HGCALC_PROPERTIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hgcalc/operators.hpp"

namespace hgcalc {

struct PropertyOutcome {
  std::string name;
  bool passed = true;
  int checks = 0;
  // Serialized instance and inputs of the first failing check.
  std::string counterexample;
};

struct PropertyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyOutcome> outcomes;

  bool passed() const;
  std::string to_text() const;
};

// The gradient/adjoint pairs exercised by the duality properties. Replaceable
// so that a deliberately broken operator can be shown to be caught.
struct OperatorTable {
  std::function<HyperarcFunction(const OrientedHypergraph&, const WeightAssignment&,
                                 const OperatorConfig&, const VertexFunction&)>
      vertex_gradient = hgcalc::vertex_gradient;
  std::function<VertexFunction(const OrientedHypergraph&, const WeightAssignment&,
                               const OperatorConfig&, const HyperarcFunction&)>
      vertex_adjoint = hgcalc::vertex_adjoint;
  std::function<VertexFunction(const OrientedHypergraph&, const WeightAssignment&,
                               const OperatorConfig&, const HyperarcFunction&)>
      hyperarc_gradient = hgcalc::hyperarc_gradient;
  std::function<HyperarcFunction(const OrientedHypergraph&, const WeightAssignment&,
                                 const OperatorConfig&, const VertexFunction&)>
      hyperarc_adjoint = hgcalc::hyperarc_adjoint;
};

// duality, composition, reduction, presets, tensor, representation, or all.
const std::vector<std::string_view>& property_suite_names();

// Random properties run `trials` seeded trials each; fixed fixtures always run once.
// Trial k of the property named p runs on derive_seed(seed, fnv1a(p) + k).
PropertyReport run_property_suite(std::string_view suite, std::uint64_t seed, int trials,
                                  const OperatorTable& ops = {});

// |a - b| <= max(abs_floor, rel * scale) where scale is the largest magnitude in a and b.
bool close_enough(const std::vector<double>& a, const std::vector<double>& b, double rel = 1e-9,
                  double abs_floor = 1e-12);
bool close_enough(double a, double b, double rel = 1e-9, double abs_floor = 1e-12);

}  // namespace hgcalc

#endif
