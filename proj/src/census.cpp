#include "nrt/census.hpp"

#include <exception>
#include <thread>

#include "nrt/closed_form.hpp"
#include "nrt/error.hpp"

namespace nrt {

std::string_view to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Winding: return "winding";
    case InvariantKind::Parity: return "parity";
    case InvariantKind::Sign: return "sign";
  }
  return "unknown";
}

InvariantKind invariant_kind_for(const DegreeProfile& profile) {
  if (profile.n() >= 3) {
    throw Error(ErrorCode::UnsupportedProfileForCensus,
                "no separating invariant is available for " + std::to_string(profile.n()) + " forms");
  }
  if (profile.n() == 1) {
    if (profile.d(1) % 2 != 0) {
      throw Error(ErrorCode::UnsupportedProfileForCensus, "the complement is empty for " + profile.to_string());
    }
    return InvariantKind::Sign;
  }
  return (profile.d(1) - profile.d(2)) % 2 == 0 ? InvariantKind::Winding : InvariantKind::Parity;
}

int evaluate_invariant(InvariantKind kind, const PolySystem& system) {
  switch (kind) {
    case InvariantKind::Winding:
      return winding_index(system.forms.at(0), system.forms.at(1));
    case InvariantKind::Parity: {
      const BinaryForm& a = system.forms.at(0);
      const BinaryForm& b = system.forms.at(1);
      const bool a_odd = a.degree() % 2 != 0;
      if (a_odd == (b.degree() % 2 != 0)) {
        throw Error(ErrorCode::ParityMismatch, "parity invariant needs one odd and one even form");
      }
      const BinaryForm& odd = a_odd ? a : b;
      const BinaryForm& even = a_odd ? b : a;
      return real_root_count(odd, &even) % 2;
    }
    case InvariantKind::Sign: {
      const BinaryForm& f = system.forms.at(0);
      if (in_resultant_variety(system)) {
        throw Error(ErrorCode::OnResultantVariety, "the form has a real root line");
      }
      // Rootless, so a_0 = f(1, 0) is non-zero and carries the global sign.
      return f.coeffs().front() > 0 ? 1 : 0;
    }
  }
  return 0;
}

std::vector<int> legal_values(const DegreeProfile& profile) {
  if (invariant_kind_for(profile) != InvariantKind::Winding) return {0, 1};
  std::vector<int> out;
  for (int k = -profile.d(2); k <= profile.d(2); k += 2) out.push_back(k);
  return out;
}

std::map<int, PolySystem> constructed_witnesses(const DegreeProfile& profile) {
  std::map<int, PolySystem> out;
  switch (invariant_kind_for(profile)) {
    case InvariantKind::Winding:
      for (int k : legal_values(profile)) out.emplace(k, witness_system(profile.d(1), profile.d(2), k));
      break;
    case InvariantKind::Parity: {
      // odd form x (x^2+y^2)^j has the single root line x = 0; the even form
      // is +-(x^2+y^2)^i, so the count there is 1 or 0.
      const bool first_odd = profile.d(1) % 2 != 0;
      const int odd_degree = first_odd ? profile.d(1) : profile.d(2);
      const int even_degree = first_odd ? profile.d(2) : profile.d(1);
      const BinaryForm odd = form_mul(BinaryForm{1, 0}, radius_power((odd_degree - 1) / 2));
      for (int value : {0, 1}) {
        BinaryForm even = form_scale(radius_power(even_degree / 2), value == 1 ? 1 : -1);
        out.emplace(value, first_odd ? PolySystem{{odd, even}} : PolySystem{{even, odd}});
      }
      break;
    }
    case InvariantKind::Sign:
      for (int value : {0, 1}) {
        out.emplace(value, PolySystem{{form_scale(radius_power(profile.d(1) / 2), value == 1 ? 1 : -1)}});
      }
      break;
  }
  return out;
}

ComplementSampler::ComplementSampler(DegreeProfile profile, std::uint64_t seed, int worker, int bound)
    : profile_(std::move(profile)), coeff_(-bound, bound) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  rng_.seed(seq);
}

PolySystem ComplementSampler::draw() {
  PolySystem system;
  for (int d : profile_.degrees()) {
    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) coeffs.emplace_back(coeff_(rng_));
    system.forms.emplace_back(std::move(coeffs));
  }
  return system;
}

PolySystem ComplementSampler::next() {
  for (;;) {
    PolySystem system = draw();
    bool degenerate = false;
    for (const auto& f : system.forms) degenerate = degenerate || f.is_zero();
    if (degenerate || in_resultant_variety(system)) {
      ++rejected_;
      continue;
    }
    return system;
  }
}

std::vector<PolySystem> sample_complement(const DegreeProfile& profile, std::uint64_t seed, int bound,
                                          int count) {
  ComplementSampler sampler(profile, seed, 0, bound);
  std::vector<PolySystem> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

namespace {

struct WorkerResult {
  std::map<int, std::int64_t> observed;
  std::map<int, PolySystem> first_seen;
  std::int64_t accepted = 0;
  std::int64_t rejected = 0;
};

WorkerResult run_worker(const DegreeProfile& profile, InvariantKind kind, const SamplingOptions& options,
                        int worker, int quota) {
  WorkerResult result;
  ComplementSampler sampler(profile, options.seed, worker, options.bound);
  std::int64_t unusable = 0;
  while (result.accepted < quota) {
    PolySystem system = sampler.next();
    int value = 0;
    try {
      value = evaluate_invariant(kind, system);
    } catch (const Error& e) {
      // A repeated real root of the odd form: measure zero, logged as rejected.
      if (e.code() != ErrorCode::NonSquarefree) throw;
      ++unusable;
      continue;
    }
    ++result.accepted;
    ++result.observed[value];
    result.first_seen.emplace(value, std::move(system));
  }
  result.rejected = sampler.rejected() + unusable;
  return result;
}

}  // namespace

ComponentReport component_census(const DegreeProfile& profile, const SamplingOptions& options) {
  const InvariantKind kind = invariant_kind_for(profile);
  const int workers = std::max(1, options.workers);

  std::vector<WorkerResult> results(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) {
      const int quota = options.count / workers + (w < options.count % workers ? 1 : 0);
      threads.emplace_back([&, w, quota] {
        try {
          results[static_cast<std::size_t>(w)] = run_worker(profile, kind, options, w, quota);
        } catch (...) {
          failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  ComponentReport report{profile, kind, {}, {}, {}, 0, 0, 0, options.seed, options.bound, workers};
  report.predicted_b0 = predicted_b0_real(profile).value_or(0);
  for (auto& result : results) {
    for (const auto& [value, count] : result.observed) report.observed[value] += count;
    for (auto& [value, system] : result.first_seen) report.witnesses.emplace(value, std::move(system));
    report.accepted_samples += result.accepted;
    report.rejected_samples += result.rejected;
  }
  for (auto& [value, system] : constructed_witnesses(profile)) {
    if (report.witnesses.emplace(value, std::move(system)).second) report.constructed.insert(value);
  }
  return report;
}

CensusVerdict check_report(const ComponentReport& report) {
  CensusVerdict verdict;
  const std::vector<int> legal = legal_values(report.profile);
  const std::set<int> legal_set(legal.begin(), legal.end());

  verdict.observed_values_legal = true;
  for (const auto& [value, count] : report.observed) {
    if (count > 0 && !legal_set.contains(value)) verdict.observed_values_legal = false;
  }
  verdict.sampled_classes = static_cast<int>(report.observed.size());

  verdict.witnesses_verified = true;
  std::set<int> realized;
  for (const auto& [value, count] : report.observed) realized.insert(value);
  for (const auto& [value, system] : report.witnesses) {
    bool ok = false;
    try {
      ok = system.profile() == report.profile && !in_resultant_variety(system) &&
           evaluate_invariant(report.kind, system) == value;
    } catch (const Error&) {
      ok = false;
    }
    verdict.witnesses_verified = verdict.witnesses_verified && ok;
    if (ok) realized.insert(value);
  }
  verdict.realized_classes = static_cast<int>(realized.size());
  verdict.every_legal_value_realized =
      std::all_of(legal.begin(), legal.end(), [&](int v) { return realized.contains(v); });
  return verdict;
}

}  // namespace nrt
