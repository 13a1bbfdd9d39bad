#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nrt {

/// Degree sequence d_1 >= ... >= d_n of a system of binary forms.
///
/// Degrees beyond n read as zero through d(k); the closed-form evaluators rely
/// on that so the n = 1 and n = 2 cases need no special handling.
class DegreeProfile {
public:
  /// Sorts non-increasing. Throws EmptyProfile / NonPositiveDegree.
  explicit DegreeProfile(std::span<const int> raw);
  DegreeProfile(std::initializer_list<int> raw);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int n() const noexcept { return static_cast<int>(degrees_.size()); }
  int total_dim() const noexcept { return total_dim_; }

  /// 1-based; zero for k > n.
  int d(int k) const noexcept;

  std::string to_string() const;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

private:
  std::vector<int> degrees_;
  int total_dim_ = 0;
};

/// Area of the Young diagram (d_1+1, ..., d_n+1) left of column p+1, i.e.
/// sum of min(d_i + 1, p). Codimension of the systems vanishing on p lines.
int young_area(const DegreeProfile& profile, int p);

/// Number of d_i >= p with d_i of the same parity as p.
int parity_index(const DegreeProfile& profile, int p);

/// Finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_k, kept canonical
/// (torsion orders ascending, each >= 2). Also used for Q-vector spaces, in
/// which case torsion is always empty.
class FinAbGroup {
public:
  FinAbGroup() = default;
  FinAbGroup(int free_rank, std::vector<std::int64_t> torsion);

  static FinAbGroup zero() { return {}; }
  static FinAbGroup free(int rank) { return FinAbGroup(rank, {}); }
  static FinAbGroup cyclic(std::int64_t order) { return FinAbGroup(0, {order}); }

  int free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return free_rank_ == 0 && torsion_.empty(); }

  /// "Z^3 + Z/2", "Z", "0"; base is "Z" or "Q".
  std::string to_string(const std::string& base = "Z") const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// Dimension -> group, with zero groups never stored.
class GradedGroup {
public:
  using Map = std::map<int, FinAbGroup>;

  GradedGroup() = default;
  GradedGroup(std::initializer_list<std::pair<const int, FinAbGroup>> entries);

  /// Direct-sums g into degree dim.
  void put(int dim, const FinAbGroup& g);

  FinAbGroup at(int dim) const;
  const Map& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
  Map entries_;
};

GradedGroup graded_sum(const GradedGroup& a, const GradedGroup& b);
GradedGroup graded_put(GradedGroup g, int dim, const FinAbGroup& group);

/// Rational Euler characteristic; torsion contributes nothing.
std::int64_t euler_char_q(const GradedGroup& g);

/// (dim, Q-rank) for every dimension with non-zero rank, ascending.
std::vector<std::pair<int, int>> poincare_polynomial(const GradedGroup& g);

}  // namespace nrt
