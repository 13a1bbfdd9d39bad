#include "nrt/spectral.hpp"

#include <algorithm>
#include <string>

#include "nrt/error.hpp"

namespace nrt {

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::OrientableColumn: return "orientable-column";
    case Provenance::TwistedColumn: return "twisted-column";
    case Provenance::LastColumn: return "last-column";
    case Provenance::ComplexConfig: return "complex-config";
    case Provenance::Survivor: return "survivor";
  }
  return "unknown";
}

std::string_view to_string(PageKind kind) {
  return kind == PageKind::Real ? "real" : "complex";
}

std::string_view to_string(CascadeRule rule) {
  switch (rule) {
    case CascadeRule::TailEpimorphism: return "tail-epi";
    case CascadeRule::TailIsomorphism: return "tail-iso";
    case CascadeRule::OddCascadeEpimorphism: return "odd-cascade-epi";
  }
  return "unknown";
}

FinAbGroup SpectralPage::at(Cell cell) const {
  auto it = entries.find(cell);
  return it == entries.end() ? FinAbGroup{} : it->second.group;
}

namespace {

void put_entry(SpectralPage& page, Cell cell, const FinAbGroup& group, Provenance provenance) {
  auto [it, inserted] = page.entries.emplace(cell, PageEntry{group, provenance});
  if (!inserted) it->second.group = direct_sum(it->second.group, group);
}

bool is_integers(const FinAbGroup& g) { return g == FinAbGroup::free(1); }
bool is_z2(const FinAbGroup& g) { return g == FinAbGroup::cyclic(2); }

// Non-trivial differentials of leaf r on the current page. The pattern is
// forced: the tail columns p > d_2 repeat the single-form sequence, the
// columns p <= d_3 are frozen, and for d_1 - d_2 odd the generator at
// (d_2+2, d_1-1) maps onto every Z/2 of its anti-diagonal above the frozen
// block (no 2-torsion in degree one of the complement).
std::vector<KillRecord> differentials_at(const SpectralPage& page, int r) {
  const DegreeProfile& profile = page.profile;
  const int d1 = profile.d(1);
  const int d2 = profile.d(2);
  const int frozen = profile.d(3);
  std::vector<KillRecord> out;

  auto consider = [&](Cell source, Cell target, CascadeRule rule, bool iso) {
    if (!is_integers(page.at(source))) return;
    const FinAbGroup target_group = page.at(target);
    if (iso ? !is_integers(target_group) : !is_z2(target_group)) return;
    out.push_back(KillRecord{source, target, r, rule, iso});
  };

  if (r == 1 || r == 2) {
    for (int p = d1 + 1; p > d2; --p) {
      if ((d1 - p) % 2 == 0) continue;
      const Cell source{p, d1 - 1};
      if (r == 1 && p - 1 > d2) {
        consider(source, Cell{p - 1, d1 - 1}, CascadeRule::TailEpimorphism, false);
      }
      if (r == 2 && p - 2 > d2) {
        consider(source, Cell{p - 2, d1}, CascadeRule::TailIsomorphism, true);
      }
    }
  }

  if ((d1 - d2) % 2 != 0 && r >= 2) {
    const Cell source{d2 + 2, d1 - 1};
    const Cell target{d2 + 2 - r, d1 - 2 + r};
    if (target.p > frozen) consider(source, target, CascadeRule::OddCascadeEpimorphism, false);
  }
  return out;
}

}  // namespace

SpectralPage build_real_e1(const DegreeProfile& profile) {
  SpectralPage page{PageKind::Real, profile, 1, {}};
  const int d1 = profile.d(1);
  const int total = profile.total_dim();
  for (int p = 1; p <= d1; ++p) {
    const int fibre = total - young_area(profile, p);
    if (parity_index(profile, p) % 2 == 0) {
      put_entry(page, {p, fibre + p - 1}, FinAbGroup::free(1), Provenance::OrientableColumn);
      put_entry(page, {p, fibre + p - 2}, FinAbGroup::free(1), Provenance::OrientableColumn);
    } else {
      put_entry(page, {p, fibre + p - 2}, FinAbGroup::cyclic(2), Provenance::TwistedColumn);
    }
  }
  put_entry(page, {d1 + 1, d1 - 1}, FinAbGroup::free(1), Provenance::LastColumn);
  return page;
}

void validate_real_e1(const SpectralPage& page) {
  if (page.kind != PageKind::Real || page.leaf != 1) {
    throw Error(ErrorCode::MalformedPage, "expected a real first leaf");
  }
  if (page.entries != build_real_e1(page.profile).entries) {
    throw Error(ErrorCode::MalformedPage,
                "page does not match the first-leaf census for " + page.profile.to_string());
  }
}

CascadeReport run_real_cascade(const SpectralPage& page) {
  validate_real_e1(page);
  CascadeReport report{page, page, {}};
  SpectralPage& current = report.final;

  const int last_leaf = page.profile.d(1) + 1;
  for (int r = 1; r <= last_leaf; ++r) {
    current.leaf = r;
    for (const KillRecord& record : differentials_at(current, r)) {
      current.entries.erase(record.target);
      if (record.source_dies) {
        current.entries.erase(record.source);
      } else {
        current.entries.at(record.source).provenance = Provenance::Survivor;
      }
      report.killed.push_back(record);
    }
  }
  current.leaf = kLeafInfinity;
  return report;
}

GradedGroup assemble_borel_moore(const SpectralPage& final_page) {
  GradedGroup out;
  for (const auto& [cell, entry] : final_page.entries) out.put(cell.total(), entry.group);
  return out;
}

GradedGroup assemble_borel_moore(const CascadeReport& report) {
  return assemble_borel_moore(report.final);
}

GradedGroup alexander_dual(const GradedGroup& borel_moore, int ambient_dim) {
  GradedGroup out;
  for (const auto& [k, group] : borel_moore.entries()) {
    const int i = ambient_dim - k - 1;
    if (i < 0) {
      throw Error(ErrorCode::DualityOutOfRange,
                  "degree " + std::to_string(k) + " in ambient dimension " +
                      std::to_string(ambient_dim));
    }
    out.put(i, group);
  }
  return out;
}

RealCohomologyResult spectral_real_cohomology(const DegreeProfile& profile) {
  const GradedGroup bm = assemble_borel_moore(run_real_cascade(build_real_e1(profile)));
  const int total = profile.total_dim();
  RealCohomologyResult result;
  // Fundamental class of the whole ambient space: nothing is left outside.
  if (bm == GradedGroup{{total, FinAbGroup::free(1)}}) {
    result.complement_empty = true;
    return result;
  }
  result.reduced = alexander_dual(bm, total);
  result.component_count = result.reduced.at(0).free_rank() + 1;
  return result;
}

std::int64_t page_euler_char(const SpectralPage& page) {
  std::int64_t chi = 0;
  for (const auto& [cell, entry] : page.entries) {
    chi += (cell.total() % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(entry.group.free_rank());
  }
  return chi;
}

std::vector<Cell> removed_cells(const CascadeReport& report) {
  std::vector<Cell> out;
  for (const KillRecord& record : report.killed) {
    out.push_back(record.target);
    if (record.source_dies) out.push_back(record.source);
  }
  return out;
}

namespace {

// Non-zero rational Borel-Moore homology of the configuration spaces B(CP^1, p)
// with coefficients in the sign local system: (p, degree).
constexpr std::pair<int, int> kSignedConfigurationHomology[] = {{1, 0}, {1, 2}, {2, 2}};

}  // namespace

SpectralPage build_complex_e1(const DegreeProfile& profile) {
  if (profile.n() < 2) {
    throw Error(ErrorCode::ComplexComplementEmpty,
                "a single complex binary form of positive degree always has a root");
  }
  SpectralPage page{PageKind::Complex, profile, 1, {}};
  const int d1 = profile.d(1);
  const int total = profile.total_dim();
  for (const auto& [p, degree] : kSignedConfigurationHomology) {
    if (p > d1) continue;
    const int q = degree + 2 * (total - young_area(profile, p)) - 1;
    put_entry(page, {p, q}, FinAbGroup::free(1), Provenance::ComplexConfig);
  }
  // The cone over the d_1-fold self-join of CP^1 is acyclic except when d_1 = 1.
  if (d1 == 1) put_entry(page, {2, 1}, FinAbGroup::free(1), Provenance::LastColumn);
  return page;
}

GradedGroup run_complex_cascade(const SpectralPage& page) {
  if (page.kind != PageKind::Complex) {
    throw Error(ErrorCode::MalformedPage, "expected a complex page");
  }
  if (page.profile.n() < 2) {
    throw Error(ErrorCode::ComplexComplementEmpty, "complex complement of a single form");
  }
  for (const auto& [source, a] : page.entries) {
    for (const auto& [target, b] : page.entries) {
      const int r = source.p - target.p;
      if (r >= 1 && target.q == source.q + r - 1) {
        throw Error(ErrorCode::MalformedPage,
                    "entries at (" + std::to_string(source.p) + "," + std::to_string(source.q) +
                        ") and (" + std::to_string(target.p) + "," + std::to_string(target.q) +
                        ") can be joined by a differential");
      }
    }
  }
  SpectralPage final_page = page;
  final_page.leaf = kLeafInfinity;
  return alexander_dual(assemble_borel_moore(final_page), 2 * page.profile.total_dim());
}

}  // namespace nrt
