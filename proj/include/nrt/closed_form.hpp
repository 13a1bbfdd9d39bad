#pragma once

#include <optional>

#include "nrt/algebra.hpp"

namespace nrt {

/// Integer reduced cohomology of the space of real non-resultant systems.
struct RealCohomologyResult {
  GradedGroup reduced;
  bool complement_empty = false;
  /// Number of path components; absent when the complement is empty.
  std::optional<int> component_count;

  friend bool operator==(const RealCohomologyResult&, const RealCohomologyResult&) = default;
};

/// Degree d of a complex binary form and the multiplicity bound m.
struct MDiscParams {
  int d = 0;
  int m = 0;
};

RealCohomologyResult real_cohomology(const DegreeProfile& profile);

/// Reduced rational cohomology of the complex non-resultant space (n > 1).
/// Throws ComplexComplementEmpty for a single form.
GradedGroup complex_cohomology(const DegreeProfile& profile);

/// Reduced rational cohomology of the complement of the m-discriminant.
/// Throws InvalidMDisc unless m >= 2 and d >= m.
GradedGroup m_discriminant_cohomology(const MDiscParams& params);

// The two regimes separately, without the d-range dispatch; they must agree
// at d = 2m - 1.
GradedGroup m_discriminant_large_degree(int m);
GradedGroup m_discriminant_small_degree(int d, int m);

/// Number of path components of the real complement, or nullopt if empty.
std::optional<int> predicted_b0_real(const DegreeProfile& profile);

/// Adds a rank-one summand in degree zero (reduced -> ordinary cohomology).
GradedGroup unreduce(const GradedGroup& reduced);

}  // namespace nrt
