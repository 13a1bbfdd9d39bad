#include <set>

#include "doctest.h"
#include "nrt/closed_form.hpp"
#include "nrt/error.hpp"

using namespace nrt;

namespace {

const FinAbGroup Z = FinAbGroup::free(1);
const FinAbGroup Z2 = FinAbGroup::cyclic(2);

FinAbGroup Zr(int r) { return FinAbGroup::free(r); }

// Every non-increasing degree list with n entries, each in [1, max_degree].
void enumerate_profiles(int n, int max_degree, std::vector<int>& prefix,
                        std::vector<DegreeProfile>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.emplace_back(prefix);
    return;
  }
  const int cap = prefix.empty() ? max_degree : prefix.back();
  for (int d = 1; d <= cap; ++d) {
    prefix.push_back(d);
    enumerate_profiles(n, max_degree, prefix, out);
    prefix.pop_back();
  }
}

std::vector<DegreeProfile> profiles_up_to(int max_n, int max_degree) {
  std::vector<DegreeProfile> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> prefix;
    enumerate_profiles(n, max_degree, prefix, out);
  }
  return out;
}

GradedGroup q_dims(std::initializer_list<int> dims) {
  GradedGroup g;
  for (int k : dims) g = graded_sum(g, GradedGroup{{k, Z}});
  return g;
}

}  // namespace

TEST_CASE("real: two forms of equal parity") {
  const auto r = real_cohomology(DegreeProfile{7, 3});
  CHECK_FALSE(r.complement_empty);
  CHECK(r.reduced == GradedGroup{{0, Zr(3)}, {1, Zr(4)}});
  CHECK(r.component_count == 4);
}

TEST_CASE("real: two forms of different parity") {
  const auto r = real_cohomology(DegreeProfile{6, 3});
  CHECK(r.reduced == GradedGroup{{0, Z}});
  CHECK(r.component_count == 2);
}

TEST_CASE("real: a single form") {
  const auto even = real_cohomology(DegreeProfile{4});
  CHECK(even.reduced == GradedGroup{{0, Z}});
  CHECK(even.component_count == 2);

  const auto odd = real_cohomology(DegreeProfile{3});
  CHECK(odd.complement_empty);
  CHECK(odd.reduced.empty());
  CHECK_FALSE(odd.component_count.has_value());
  CHECK_FALSE(predicted_b0_real(DegreeProfile{3}).has_value());
}

TEST_CASE("real: three quadrics") {
  // p=1: Y even, Z at 1 and 2.  p=2: Y = 3, Z/2 at 3.  Part B: Z at 4.
  const auto r = real_cohomology(DegreeProfile{2, 2, 2});
  CHECK(r.reduced == GradedGroup{{1, Z}, {2, Z}, {3, Z2}, {4, Z}});
  CHECK(r.component_count == 1);
}

TEST_CASE("real: hand evaluations with frozen columns") {
  // (3,2,1): D=9, p=1: N=3, Y=#{3,1}=2 even -> Z at 1,2.
  // Part B: d1-d2 odd -> Z at 9-5-2 = 2.
  CHECK(real_cohomology(DegreeProfile{3, 2, 1}).reduced == GradedGroup{{1, Z}, {2, Zr(2)}});
  // (4,2,1): D=10, p=1: N=3, Y=#{1}=1 odd -> Z/2 at 2.
  // Part B: d1-d2 even, d2 != d3 -> Z^2 at 3 and Z at 2.
  CHECK(real_cohomology(DegreeProfile{4, 2, 1}).reduced == GradedGroup{{2, direct_sum(Z, Z2)}, {3, Zr(2)}});
}

TEST_CASE("predicted component counts") {
  CHECK(predicted_b0_real(DegreeProfile{7, 3}) == 4);
  CHECK(predicted_b0_real(DegreeProfile{6, 3}) == 2);
  CHECK(predicted_b0_real(DegreeProfile{2, 2, 2}) == 1);
}

TEST_CASE("unreduced view") {
  CHECK(unreduce(GradedGroup{{0, Zr(3)}, {1, Zr(4)}}) == GradedGroup{{0, Zr(4)}, {1, Zr(4)}});
  CHECK(unreduce(GradedGroup{{2, Z2}}) == GradedGroup{{0, Z}, {2, Z2}});
}

TEST_CASE("real: structural invariants over all small profiles") {
  for (const auto& profile : profiles_up_to(5, 7)) {
    CAPTURE(profile.to_string());
    const auto r = real_cohomology(profile);
    const int n = profile.n();
    CHECK(r.complement_empty == (n == 1 && profile.d(1) % 2 == 1));
    if (r.complement_empty) continue;

    REQUIRE(r.component_count.has_value());
    CHECK(*r.component_count == r.reduced.at(0).free_rank() + 1);
    CHECK(r.reduced.at(0).torsion().empty());

    std::set<int> torsion_dims;
    for (int p = 1; p <= profile.d(3); ++p) {
      if (parity_index(profile, p) % 2 == 1) torsion_dims.insert(young_area(profile, p) - 2 * p + 1);
    }
    for (const auto& [dim, group] : r.reduced.entries()) {
      if (n >= 3) CHECK(dim >= n - 2);
      for (auto order : group.torsion()) CHECK(order == 2);
      if (!group.torsion().empty()) CHECK(torsion_dims.count(dim) == 1);
    }

    if (n == 2) {
      const int d1 = profile.d(1), d2 = profile.d(2);
      if ((d1 - d2) % 2 == 0) {
        CHECK(r.reduced == GradedGroup{{0, Zr(d2)}, {1, Zr(d2 + 1)}});
      } else {
        CHECK(r.reduced == GradedGroup{{0, Z}});
      }
    }
    if (n == 1) CHECK(r.reduced == GradedGroup{{0, Z}});
  }
}

TEST_CASE("complex") {
  CHECK(complex_cohomology(DegreeProfile{2, 2}) == q_dims({1, 3, 4}));
  CHECK(complex_cohomology(DegreeProfile{2, 2, 2}) == q_dims({3, 5, 8}));
  CHECK(complex_cohomology(DegreeProfile{5, 1, 1, 1}) == q_dims({5, 7, 12}));
  try {
    complex_cohomology(DegreeProfile{4});
    FAIL("n = 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ComplexComplementEmpty);
  }
  for (const auto& profile : profiles_up_to(6, 4)) {
    if (profile.n() < 2) continue;
    const auto g = complex_cohomology(profile);
    int total = 0;
    for (const auto& [dim, group] : g.entries()) total += group.free_rank();
    CHECK(total == 3);
    CHECK(euler_char_q(g) == -1);
  }
}

TEST_CASE("m-discriminants") {
  CHECK(m_discriminant_cohomology({5, 2}) == q_dims({1, 3, 4}));
  CHECK(m_discriminant_cohomology({3, 2}) == q_dims({1, 3, 4}));
  CHECK(m_discriminant_cohomology({2, 2}) == q_dims({1, 3, 2}));
  CHECK(m_discriminant_cohomology({4, 3}) == q_dims({3, 5, 6}));
  CHECK(m_discriminant_cohomology({9, 3}) == q_dims({3, 5, 8}));
  for (MDiscParams bad : {MDiscParams{1, 2}, MDiscParams{5, 1}, MDiscParams{3, 4}}) {
    try {
      m_discriminant_cohomology(bad);
      FAIL("invalid parameters accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidMDisc);
    }
  }
  for (int m = 2; m <= 8; ++m) {
    CHECK(m_discriminant_large_degree(m) == m_discriminant_small_degree(2 * m - 1, m));
    CHECK(m_discriminant_cohomology({2 * m - 1, m}) == m_discriminant_large_degree(m));
  }
}
