#include <set>

#include "doctest.h"
#include "nrt/closed_form.hpp"
#include "nrt/error.hpp"
#include "nrt/spectral.hpp"

using namespace nrt;

namespace {

const FinAbGroup Z = FinAbGroup::free(1);
const FinAbGroup Z2 = FinAbGroup::cyclic(2);

using CellMap = std::map<Cell, FinAbGroup>;

CellMap groups_of(const SpectralPage& page) {
  CellMap out;
  for (const auto& [cell, entry] : page.entries) out.emplace(cell, entry.group);
  return out;
}

std::vector<DegreeProfile> profiles_up_to(int max_n, int max_degree) {
  std::vector<DegreeProfile> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int n) -> void {
    if (static_cast<int>(prefix.size()) == n) {
      out.emplace_back(prefix);
      return;
    }
    const int cap = prefix.empty() ? max_degree : prefix.back();
    for (int d = 1; d <= cap; ++d) {
      prefix.push_back(d);
      self(self, n);
      prefix.pop_back();
    }
  };
  for (int n = 1; n <= max_n; ++n) rec(rec, n);
  return out;
}

}  // namespace

TEST_CASE("first leaf, two forms of different parity") {
  // Hand tally with D = 11: N = 2,4,6,8,9,10,11 and Y odd on columns 1..4 and 6.
  const auto page = build_real_e1(DegreeProfile{6, 3});
  const CellMap expected{
      {{1, 8}, Z2}, {{2, 7}, Z2}, {{3, 6}, Z2}, {{4, 5}, Z2},
      {{5, 5}, Z},  {{5, 6}, Z},  {{6, 5}, Z2}, {{7, 5}, Z},
  };
  CHECK(groups_of(page) == expected);
  CHECK(page.entries.at({7, 5}).provenance == Provenance::LastColumn);
  CHECK(page.entries.at({4, 5}).provenance == Provenance::TwistedColumn);
  CHECK(page.entries.at({5, 6}).provenance == Provenance::OrientableColumn);
  CHECK(page.leaf == 1);
}

TEST_CASE("first leaf, two forms of equal parity") {
  // D = 12: N = 2,4,6,8,9,10,11,12; Y = 2,0,2,0,1,0,1.
  const auto page = build_real_e1(DegreeProfile{7, 3});
  const CellMap expected{
      {{1, 9}, Z}, {{1, 10}, Z}, {{2, 8}, Z}, {{2, 9}, Z}, {{3, 7}, Z},  {{3, 8}, Z},
      {{4, 6}, Z}, {{4, 7}, Z},  {{5, 6}, Z2}, {{6, 6}, Z}, {{6, 7}, Z}, {{7, 6}, Z2},
      {{8, 6}, Z},
  };
  CHECK(groups_of(page) == expected);
}

TEST_CASE("first leaf, a single even form") {
  const auto page = build_real_e1(DegreeProfile{4});
  const CellMap expected{
      {{1, 3}, Z}, {{1, 4}, Z}, {{2, 3}, Z2}, {{3, 3}, Z}, {{3, 4}, Z}, {{4, 3}, Z2}, {{5, 3}, Z},
  };
  CHECK(groups_of(page) == expected);
}

TEST_CASE("first leaf shape over many profiles") {
  for (const auto& profile : profiles_up_to(4, 8)) {
    CAPTURE(profile.to_string());
    const auto page = build_real_e1(profile);
    const int d1 = profile.d(1);
    std::map<int, std::vector<std::pair<int, FinAbGroup>>> columns;
    for (const auto& [cell, entry] : page.entries) {
      CHECK_FALSE(entry.group.is_zero());
      CHECK(cell.p >= 1);
      CHECK(cell.p <= d1 + 1);
      columns[cell.p].emplace_back(cell.q, entry.group);
    }
    for (int p = 1; p <= d1; ++p) {
      const auto& column = columns[p];
      int rank = 0;
      for (const auto& [q, g] : column) {
        rank += g.free_rank();
        for (auto t : g.torsion()) CHECK(t == 2);
      }
      CHECK(rank <= 2);
      if (parity_index(profile, p) % 2 == 0) {
        REQUIRE(column.size() == 2);
        CHECK(column[0].second == Z);
        CHECK(column[1].second == Z);
        CHECK(column[1].first == column[0].first + 1);
      } else {
        REQUIRE(column.size() == 1);
        CHECK(column[0].second == Z2);
      }
    }
    REQUIRE(columns[d1 + 1].size() == 1);
    CHECK(columns[d1 + 1][0].first == d1 - 1);
    CHECK(columns[d1 + 1][0].second == Z);
    CHECK_NOTHROW(validate_real_e1(page));
  }
}

TEST_CASE("cascade survivors") {
  const auto odd = run_real_cascade(build_real_e1(DegreeProfile{6, 3}));
  CHECK(groups_of(odd.final) == CellMap{{{5, 5}, Z}});
  CHECK(odd.final.is_infinite());

  const auto even = run_real_cascade(build_real_e1(DegreeProfile{7, 3}));
  const CellMap expected_even{
      {{1, 9}, Z}, {{1, 10}, Z}, {{2, 8}, Z}, {{2, 9}, Z}, {{3, 7}, Z}, {{3, 8}, Z}, {{4, 6}, Z},
  };
  CHECK(groups_of(even.final) == expected_even);

  const auto single = run_real_cascade(build_real_e1(DegreeProfile{4}));
  CHECK(groups_of(single.final) == CellMap{{{1, 3}, Z}});
}

TEST_CASE("cascade kill records for the odd case") {
  const auto report = run_real_cascade(build_real_e1(DegreeProfile{6, 3}));
  std::set<std::pair<Cell, Cell>> odd_cascade;
  for (const auto& k : report.killed) {
    if (k.rule == CascadeRule::OddCascadeEpimorphism) {
      CHECK(k.source == Cell{5, 5});
      CHECK_FALSE(k.source_dies);
      CHECK(k.target.p + k.target.q == 9);
      CHECK(k.leaf == 5 - k.target.p);
      odd_cascade.insert({k.source, k.target});
    }
  }
  CHECK(odd_cascade.size() == 3);
}

TEST_CASE("frozen columns survive untouched") {
  for (const auto& profile : profiles_up_to(4, 7)) {
    const auto report = run_real_cascade(build_real_e1(profile));
    for (const auto& [cell, entry] : report.initial.entries) {
      if (cell.p <= profile.d(3)) CHECK(report.final.at(cell) == entry.group);
    }
  }
}

TEST_CASE("cascade conservation") {
  for (const auto& profile : profiles_up_to(4, 8)) {
    CAPTURE(profile.to_string());
    const auto report = run_real_cascade(build_real_e1(profile));
    int initial_rank = 0, initial_torsion = 0, final_rank = 0, final_torsion = 0;
    for (const auto& [cell, e] : report.initial.entries) {
      initial_rank += e.group.free_rank();
      initial_torsion += static_cast<int>(e.group.torsion().size());
    }
    for (const auto& [cell, e] : report.final.entries) {
      final_rank += e.group.free_rank();
      final_torsion += static_cast<int>(e.group.torsion().size());
      CHECK(report.initial.at(cell) == e.group);
    }
    int epis = 0, isos = 0;
    std::set<Cell> removed;
    for (const auto& k : report.killed) {
      CHECK(k.source.p - k.target.p == k.leaf);
      CHECK(k.target.q - k.source.q == k.leaf - 1);
      if (k.rule == CascadeRule::TailIsomorphism) {
        ++isos;
        CHECK(k.source_dies);
        CHECK(report.initial.at(k.source) == Z);
        CHECK(report.initial.at(k.target) == Z);
        removed.insert(k.source);
      } else {
        ++epis;
        CHECK_FALSE(k.source_dies);
        CHECK(report.initial.at(k.target) == Z2);
      }
      CHECK(removed.insert(k.target).second);
    }
    CHECK(final_rank + 2 * isos == initial_rank);
    CHECK(final_torsion + epis == initial_torsion);
    // Every first-leaf entry is either kept or accounted for by a record.
    for (const auto& [cell, e] : report.initial.entries) {
      CHECK((report.final.entries.count(cell) == 1) != (removed.count(cell) == 1));
    }
    const auto listed = removed_cells(report);
    CHECK(std::set<Cell>(listed.begin(), listed.end()) == removed);
  }
}

TEST_CASE("survivor provenance") {
  const auto report = run_real_cascade(build_real_e1(DegreeProfile{6, 3}));
  CHECK(report.final.entries.at({5, 5}).provenance == Provenance::Survivor);
}

TEST_CASE("malformed pages are rejected") {
  auto page = build_real_e1(DegreeProfile{6, 3});
  page.entries.erase({6, 5});
  CHECK_THROWS_AS(validate_real_e1(page), Error);
  try {
    run_real_cascade(page);
    FAIL("malformed page accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedPage);
  }

  auto extra = build_real_e1(DegreeProfile{4});
  extra.entries[{2, 4}] = PageEntry{Z, Provenance::OrientableColumn};
  CHECK_THROWS_AS(run_real_cascade(extra), Error);

  auto wrong_leaf = build_real_e1(DegreeProfile{4});
  wrong_leaf.leaf = 2;
  CHECK_THROWS_AS(validate_real_e1(wrong_leaf), Error);
}

TEST_CASE("borel-moore assembly") {
  CHECK(assemble_borel_moore(run_real_cascade(build_real_e1(DegreeProfile{6, 3}))) == GradedGroup{{10, Z}});
  CHECK(assemble_borel_moore(run_real_cascade(build_real_e1(DegreeProfile{7, 3}))) ==
        GradedGroup{{10, FinAbGroup::free(4)}, {11, FinAbGroup::free(3)}});
  CHECK(assemble_borel_moore(run_real_cascade(build_real_e1(DegreeProfile{4}))) == GradedGroup{{4, Z}});
}

TEST_CASE("alexander duality") {
  CHECK(alexander_dual(GradedGroup{{10, Z}}, 11) == GradedGroup{{0, Z}});
  CHECK(alexander_dual(GradedGroup{{4, Z}}, 5) == GradedGroup{{0, Z}});
  CHECK(alexander_dual(GradedGroup{}, 7).empty());
  CHECK(alexander_dual(GradedGroup{{3, Z2}, {1, Z}}, 6) == GradedGroup{{2, Z2}, {4, Z}});
  try {
    alexander_dual(GradedGroup{{5, Z}}, 5);
    FAIL("negative dimension accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DualityOutOfRange);
  }
}

TEST_CASE("spectral pipeline matches the closed form on small profiles") {
  for (const auto& profile : profiles_up_to(3, 6)) {
    CAPTURE(profile.to_string());
    CHECK(spectral_real_cohomology(profile) == real_cohomology(profile));
  }
}

TEST_CASE("euler characteristic anchors") {
  CHECK(page_euler_char(build_real_e1(DegreeProfile{6, 3})) == 1);
  CHECK(euler_char_q(real_cohomology(DegreeProfile{6, 3}).reduced) == 1);
  CHECK(page_euler_char(build_real_e1(DegreeProfile{7, 3})) == 1);
  CHECK(euler_char_q(real_cohomology(DegreeProfile{7, 3}).reduced) == -1);
}

TEST_CASE("complex first leaf") {
  const auto page = build_complex_e1(DegreeProfile{3, 3});
  CHECK(groups_of(page) == CellMap{{{1, 11}, Z}, {{1, 13}, Z}, {{2, 9}, Z}});
  CHECK(page.kind == PageKind::Complex);

  const auto linear = build_complex_e1(DegreeProfile{1, 1});
  CHECK(groups_of(linear) == CellMap{{{1, 3}, Z}, {{1, 5}, Z}, {{2, 1}, Z}});
  CHECK(run_complex_cascade(linear) == GradedGroup{{1, Z}, {3, Z}, {4, Z}});

  CHECK(run_complex_cascade(build_complex_e1(DegreeProfile{3, 3})) == GradedGroup{{1, Z}, {3, Z}, {4, Z}});
  CHECK(run_complex_cascade(build_complex_e1(DegreeProfile{2, 2, 2})) == GradedGroup{{3, Z}, {5, Z}, {8, Z}});

  try {
    build_complex_e1(DegreeProfile{5});
    FAIL("n = 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ComplexComplementEmpty);
  }
  CHECK_THROWS_AS(run_complex_cascade(build_real_e1(DegreeProfile{2, 2})), Error);
}

TEST_CASE("complex pipeline matches the closed form") {
  for (const auto& profile : profiles_up_to(5, 5)) {
    if (profile.n() < 2) continue;
    CAPTURE(profile.to_string());
    const auto page = build_complex_e1(profile);
    CHECK(page.entries.size() == 3);
    CHECK(run_complex_cascade(page) == complex_cohomology(profile));
  }
}
