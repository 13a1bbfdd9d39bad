#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nrt/algebra.hpp"
#include "nrt/spectral.hpp"

namespace nrt::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBatchPartial = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text grid of a page: columns p, rows q (descending), cells Z, Z^r, Z/2, or a dot.
std::string render_page(const SpectralPage& page);

std::string render_graded(const GradedGroup& g, const std::string& prefix, const std::string& base);

}  // namespace nrt::cli
