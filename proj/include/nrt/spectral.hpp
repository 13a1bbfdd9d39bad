#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string_view>
#include <vector>

#include "nrt/algebra.hpp"
#include "nrt/closed_form.hpp"

namespace nrt {

/// Position (p, q) in a spectral page; p is the filtration index, i.e. the
/// number of root lines shared by the systems of that stratum.
struct Cell {
  int p = 0;
  int q = 0;

  int total() const noexcept { return p + q; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Where an entry of a page came from.
enum class Provenance {
  OrientableColumn,  // column with orientable coefficient bundle: two copies of Z
  TwistedColumn,     // non-orientable coefficient bundle: a single Z/2
  LastColumn,        // the open disc over the zero system
  ComplexConfig,     // complex stratum over a configuration space of CP^1
  Survivor,          // source of a non-trivial differential, kept as its kernel
};

enum class PageKind { Real, Complex };

std::string_view to_string(Provenance provenance);
std::string_view to_string(PageKind kind);

inline constexpr int kLeafInfinity = std::numeric_limits<int>::max();

struct PageEntry {
  FinAbGroup group;
  Provenance provenance = Provenance::OrientableColumn;

  friend bool operator==(const PageEntry&, const PageEntry&) = default;
};

/// Sparse leaf E^r of the filtration spectral sequence of the resolved
/// resultant variety. Zero groups are never stored.
struct SpectralPage {
  PageKind kind = PageKind::Real;
  DegreeProfile profile;
  int leaf = 1;
  std::map<Cell, PageEntry> entries;

  FinAbGroup at(Cell cell) const;
  bool is_infinite() const noexcept { return leaf == kLeafInfinity; }

  friend bool operator==(const SpectralPage&, const SpectralPage&) = default;
};

enum class CascadeRule {
  TailEpimorphism,      // d_1 : Z -> Z/2 in the single-form tail
  TailIsomorphism,      // d_2 : Z -> Z in the single-form tail
  OddCascadeEpimorphism,  // d_r : Z -> Z/2 from (d_2+2, d_1-1), d_1 - d_2 odd
};

std::string_view to_string(CascadeRule rule);

/// One non-trivial differential d_r: source -> target.
struct KillRecord {
  Cell source;
  Cell target;
  int leaf = 1;
  CascadeRule rule = CascadeRule::TailEpimorphism;
  /// Isomorphisms kill both ends; epimorphisms onto Z/2 kill only the target.
  bool source_dies = false;

  friend bool operator==(const KillRecord&, const KillRecord&) = default;
};

struct CascadeReport {
  SpectralPage initial;
  SpectralPage final;
  std::vector<KillRecord> killed;
};

SpectralPage build_real_e1(const DegreeProfile& profile);

/// Throws MalformedPage unless page is exactly the real E^1 of its profile.
void validate_real_e1(const SpectralPage& page);

/// Runs the differentials leaf by leaf until the page stabilises.
CascadeReport run_real_cascade(const SpectralPage& page);

/// Borel-Moore homology of the resultant variety: diagonals of the final page
/// summed directly.
GradedGroup assemble_borel_moore(const SpectralPage& final_page);
GradedGroup assemble_borel_moore(const CascadeReport& report);

/// H~^i(R^N \ X) = H_{N-i-1}^{BM}(X). Throws DualityOutOfRange if a non-zero
/// group would land in a negative degree.
GradedGroup alexander_dual(const GradedGroup& borel_moore, int ambient_dim);

/// Full real pipeline: E^1, cascade, assembly, duality.
RealCohomologyResult spectral_real_cohomology(const DegreeProfile& profile);

/// Sum of (-1)^(p+q) rank over the page.
std::int64_t page_euler_char(const SpectralPage& page);

/// Cells removed by a cascade (targets, plus sources of isomorphisms).
std::vector<Cell> removed_cells(const CascadeReport& report);

/// Throws ComplexComplementEmpty for n = 1.
SpectralPage build_complex_e1(const DegreeProfile& profile);

/// Checks that no differential can connect two entries of the complex page,
/// then assembles and dualizes in the real ambient dimension 2D. Returns the
/// reduced rational cohomology of the complex complement.
GradedGroup run_complex_cascade(const SpectralPage& page);

}  // namespace nrt
