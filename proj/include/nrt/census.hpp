#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "nrt/algebra.hpp"
#include "nrt/forms.hpp"

namespace nrt {

/// Which component-separating invariant applies to a profile:
///   Winding  two forms of equal degree parity, index of the circle map;
///   Parity   two forms of opposite parity, zeros of the odd form counted
///            mod 2 inside the region where the even form is positive;
///   Sign     one form of even degree, 1 if positive and 0 if negative.
enum class InvariantKind { Winding, Parity, Sign };

std::string_view to_string(InvariantKind kind);

/// Throws UnsupportedProfileForCensus for n >= 3 or an empty complement.
InvariantKind invariant_kind_for(const DegreeProfile& profile);

/// Throws the usual forms errors (OnResultantVariety, NonSquarefree, ...).
int evaluate_invariant(InvariantKind kind, const PolySystem& system);

/// Values the invariant can take on the complement, ascending.
std::vector<int> legal_values(const DegreeProfile& profile);

/// One explicit system per legal value.
std::map<int, PolySystem> constructed_witnesses(const DegreeProfile& profile);

struct SamplingOptions {
  std::uint64_t seed = 42;
  int bound = 12;
  /// Accepted samples in total.
  int count = 2000;
  /// The merged result is deterministic for a fixed (seed, workers).
  int workers = 4;
};

/// Uniform integer systems with coefficients in [-bound, bound], skipping any
/// draw with a zero form or a common real root line.
class ComplementSampler {
public:
  ComplementSampler(DegreeProfile profile, std::uint64_t seed, int worker, int bound);

  PolySystem next();
  std::int64_t rejected() const noexcept { return rejected_; }

private:
  PolySystem draw();

  DegreeProfile profile_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> coeff_;
  std::int64_t rejected_ = 0;
};

/// `count` accepted systems from worker 0's stream.
std::vector<PolySystem> sample_complement(const DegreeProfile& profile, std::uint64_t seed, int bound,
                                          int count);

struct ComponentReport {
  DegreeProfile profile;
  InvariantKind kind = InvariantKind::Winding;
  /// invariant value -> number of samples
  std::map<int, std::int64_t> observed;
  std::map<int, PolySystem> witnesses;
  /// Values whose witness was built rather than sampled.
  std::set<int> constructed;
  int predicted_b0 = 0;
  std::int64_t accepted_samples = 0;
  std::int64_t rejected_samples = 0;
  std::uint64_t seed = 0;
  int bound = 0;
  int workers = 0;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/// Throws UnsupportedProfileForCensus.
ComponentReport component_census(const DegreeProfile& profile, const SamplingOptions& options = {});

struct CensusVerdict {
  bool observed_values_legal = false;
  /// Every stored witness re-evaluates to its key and lies off the variety.
  bool witnesses_verified = false;
  bool every_legal_value_realized = false;
  int sampled_classes = 0;
  /// Distinct values among samples and witnesses together.
  int realized_classes = 0;

  bool ok(int predicted_b0) const {
    return observed_values_legal && witnesses_verified && every_legal_value_realized &&
           realized_classes == predicted_b0;
  }
};

CensusVerdict check_report(const ComponentReport& report);

}  // namespace nrt
