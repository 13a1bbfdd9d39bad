#include "nrt/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nrt/error.hpp"

namespace nrt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::ComplexComplementEmpty: return "ComplexComplementEmpty";
    case ErrorCode::InvalidMDisc: return "InvalidMDisc";
    case ErrorCode::MalformedPage: return "MalformedPage";
    case ErrorCode::DualityOutOfRange: return "DualityOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NonSquarefree: return "NonSquarefree";
    case ErrorCode::PredicateVanishesAtRoot: return "PredicateVanishesAtRoot";
    case ErrorCode::OnResultantVariety: return "OnResultantVariety";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::IllegalIndex: return "IllegalIndex";
    case ErrorCode::UnsupportedProfileForCensus: return "UnsupportedProfileForCensus";
  }
  return "Unknown";
}

DegreeProfile::DegreeProfile(std::span<const int> raw) : degrees_(raw.begin(), raw.end()) {
  if (degrees_.empty()) throw Error(ErrorCode::EmptyProfile, "at least one degree is required");
  for (int d : degrees_) {
    if (d < 1) {
      throw Error(ErrorCode::NonPositiveDegree, "degree " + std::to_string(d) + " is not >= 1");
    }
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  for (int d : degrees_) total_dim_ += d + 1;
}

DegreeProfile::DegreeProfile(std::initializer_list<int> raw)
    : DegreeProfile(std::span<const int>(raw.begin(), raw.size())) {}

int DegreeProfile::d(int k) const noexcept {
  if (k < 1 || k > n()) return 0;
  return degrees_[static_cast<std::size_t>(k - 1)];
}

std::string DegreeProfile::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < degrees_.size(); ++i) out << (i ? "," : "") << degrees_[i];
  out << ')';
  return out.str();
}

int young_area(const DegreeProfile& profile, int p) {
  int area = 0;
  for (int d : profile.degrees()) area += std::min(d + 1, p);
  return area;
}

int parity_index(const DegreeProfile& profile, int p) {
  int count = 0;
  for (int d : profile.degrees()) {
    if (d >= p && (d - p) % 2 == 0) ++count;
  }
  return count;
}

FinAbGroup::FinAbGroup(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw std::invalid_argument("negative free rank");
  // Z/1 is trivial; anything below that is not a cyclic order.
  std::erase_if(torsion_, [](std::int64_t t) { return t == 1; });
  for (auto t : torsion_) {
    if (t < 1) throw std::invalid_argument("torsion order must be >= 2");
  }
  std::sort(torsion_.begin(), torsion_.end());
}

std::string FinAbGroup::to_string(const std::string& base) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << base;
    if (free_rank_ > 1) out << '^' << free_rank_;
    first = false;
  }
  for (auto t : torsion_) {
    out << (first ? "" : " + ") << base << '/' << t;
    first = false;
  }
  return out.str();
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<std::int64_t> torsion = a.torsion();
  torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
  return FinAbGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

GradedGroup::GradedGroup(std::initializer_list<std::pair<const int, FinAbGroup>> entries) {
  for (const auto& [dim, g] : entries) put(dim, g);
}

void GradedGroup::put(int dim, const FinAbGroup& g) {
  if (g.is_zero()) return;
  auto it = entries_.find(dim);
  if (it == entries_.end()) {
    entries_.emplace(dim, g);
  } else {
    it->second = direct_sum(it->second, g);
  }
}

FinAbGroup GradedGroup::at(int dim) const {
  auto it = entries_.find(dim);
  return it == entries_.end() ? FinAbGroup{} : it->second;
}

GradedGroup graded_sum(const GradedGroup& a, const GradedGroup& b) {
  GradedGroup out = a;
  for (const auto& [dim, g] : b.entries()) out.put(dim, g);
  return out;
}

GradedGroup graded_put(GradedGroup g, int dim, const FinAbGroup& group) {
  g.put(dim, group);
  return g;
}

std::int64_t euler_char_q(const GradedGroup& g) {
  std::int64_t chi = 0;
  for (const auto& [dim, group] : g.entries()) {
    chi += (dim % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(group.free_rank());
  }
  return chi;
}

std::vector<std::pair<int, int>> poincare_polynomial(const GradedGroup& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [dim, group] : g.entries()) {
    if (group.free_rank() > 0) out.emplace_back(dim, group.free_rank());
  }
  return out;
}

}  // namespace nrt
