#include "nrt/closed_form.hpp"

#include <string>

#include "nrt/error.hpp"

namespace nrt {

RealCohomologyResult real_cohomology(const DegreeProfile& profile) {
  RealCohomologyResult result;
  const int d1 = profile.d(1);
  const int d2 = profile.d(2);
  const int d3 = profile.d(3);
  const int total = profile.total_dim();

  if (profile.n() == 1 && d1 % 2 == 1) {
    // Every odd-degree binary form has a real root line.
    result.complement_empty = true;
    return result;
  }

  for (int p = 1; p <= d3; ++p) {
    const int area = young_area(profile, p);
    if (parity_index(profile, p) % 2 == 0) {
      result.reduced.put(area - 2 * p, FinAbGroup::free(1));
      result.reduced.put(area - 2 * p + 1, FinAbGroup::free(1));
    } else {
      result.reduced.put(area - 2 * p + 1, FinAbGroup::cyclic(2));
    }
  }

  if ((d1 - d2) % 2 != 0) {
    result.reduced.put(total - d1 - d2 - 2, FinAbGroup::free(1));
  } else {
    result.reduced.put(total - d1 - d2 - 1, FinAbGroup::free(d2 - d3 + 1));
    if (d2 != d3) result.reduced.put(total - d1 - d2 - 2, FinAbGroup::free(d2 - d3));
  }

  result.component_count = result.reduced.at(0).free_rank() + 1;
  return result;
}

GradedGroup complex_cohomology(const DegreeProfile& profile) {
  const int n = profile.n();
  if (n < 2) {
    throw Error(ErrorCode::ComplexComplementEmpty,
                "a single complex binary form of positive degree always has a root");
  }
  return GradedGroup{{2 * n - 3, FinAbGroup::free(1)},
                     {2 * n - 1, FinAbGroup::free(1)},
                     {4 * n - 4, FinAbGroup::free(1)}};
}

GradedGroup m_discriminant_large_degree(int m) {
  return GradedGroup{{2 * m - 3, FinAbGroup::free(1)},
                     {2 * m - 1, FinAbGroup::free(1)},
                     {4 * m - 4, FinAbGroup::free(1)}};
}

GradedGroup m_discriminant_small_degree(int d, int m) {
  return GradedGroup{{2 * m - 3, FinAbGroup::free(1)},
                     {2 * m - 1, FinAbGroup::free(1)},
                     {2 * d - 2, FinAbGroup::free(1)}};
}

GradedGroup m_discriminant_cohomology(const MDiscParams& params) {
  if (params.m < 2 || params.d < params.m) {
    throw Error(ErrorCode::InvalidMDisc, "need m >= 2 and d >= m, got d=" +
                                             std::to_string(params.d) +
                                             " m=" + std::to_string(params.m));
  }
  if (params.d >= 2 * params.m) return m_discriminant_large_degree(params.m);
  return m_discriminant_small_degree(params.d, params.m);
}

std::optional<int> predicted_b0_real(const DegreeProfile& profile) {
  return real_cohomology(profile).component_count;
}

GradedGroup unreduce(const GradedGroup& reduced) {
  return graded_put(reduced, 0, FinAbGroup::free(1));
}

}  // namespace nrt
