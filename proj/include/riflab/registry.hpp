#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riflab/kernels.hpp"

namespace riflab {

struct ExpectedValue {
  double value = 0.0;
  double tol = 0.0;
  std::string note;
};

struct Expected {
  std::optional<ExpectedValue> K1, K2;
  std::optional<ExpectedValue> hp_threshold;
  /// Isotropic D_alpha membership holds exactly for alpha below this.
  std::optional<ExpectedValue> dirichlet_cutoff;
  /// Same, for the series of 1/p.
  std::optional<ExpectedValue> inverse_dirichlet_cutoff;
  std::optional<AglerVectors> agler;
  std::string agler_note;
  std::optional<RationalFn> pick;
  std::string pick_note;
};

struct RegistryEntry {
  std::string name;
  std::string description;
  BiPoly p;
  Bidegree degree;
  Expected expected;

  Rif rif() const { return make_rif(p, degree); }
};

const std::vector<RegistryEntry>& registry();
/// Throws Error(invalid_argument) for an unknown name.
const RegistryEntry& registry_entry(const std::string& name);

}  // namespace riflab
