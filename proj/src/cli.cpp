#include "nrt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nrt/census.hpp"
#include "nrt/closed_form.hpp"
#include "nrt/error.hpp"
#include "nrt/serialize.hpp"

namespace nrt::cli {

namespace {

struct Flags {
  std::vector<int> degrees;
  bool json = false;
  bool unreduced = false;
  std::string leaf = "1";
  std::string page_kind = "real";
  int samples = 2000;
  int bound = 12;
  std::uint64_t seed = 42;
  int workers = 4;
  int d = 0;
  int m = 0;
  int index = 0;
  std::string batch_file;
  std::string batch_kind = "real";
};

std::string cell_text(const FinAbGroup& g, const std::string& base) {
  return g.is_zero() ? "·" : g.to_string(base);
}

// Display width of a UTF-8 string (the dot is one column, two bytes).
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

int cmd_real(const Flags& flags, std::ostream& out) {
  const DegreeProfile profile(flags.degrees);
  const RealCohomologyResult result = real_cohomology(profile);
  if (flags.json) {
    out << real_result_to_json(profile, result, flags.unreduced).dump() << '\n';
    return kExitOk;
  }
  out << "real non-resultant systems " << profile.to_string() << ", D = " << profile.total_dim() << '\n';
  if (result.complement_empty) {
    out << "complement is empty\n";
    return kExitOk;
  }
  if (flags.unreduced) {
    out << render_graded(unreduce(result.reduced), "H^", "Z");
  } else {
    out << render_graded(result.reduced, "H~^", "Z");
  }
  out << "components: " << *result.component_count << '\n';
  return kExitOk;
}

int cmd_complex(const Flags& flags, std::ostream& out) {
  const DegreeProfile profile(flags.degrees);
  const GradedGroup reduced = complex_cohomology(profile);
  if (flags.json) {
    out << complex_result_to_json(profile, reduced, flags.unreduced).dump() << '\n';
    return kExitOk;
  }
  out << "complex non-resultant systems " << profile.to_string() << ", D = " << profile.total_dim()
      << " (rational coefficients)\n";
  out << (flags.unreduced ? render_graded(unreduce(reduced), "H^", "Q") : render_graded(reduced, "H~^", "Q"));
  return kExitOk;
}

int cmd_mdisc(const Flags& flags, std::ostream& out) {
  const MDiscParams params{flags.d, flags.m};
  const GradedGroup reduced = m_discriminant_cohomology(params);
  if (flags.json) {
    out << mdisc_result_to_json(params, reduced, flags.unreduced).dump() << '\n';
    return kExitOk;
  }
  out << "complement of the m-discriminant, d = " << params.d << ", m = " << params.m
      << " (rational coefficients)\n";
  out << (flags.unreduced ? render_graded(unreduce(reduced), "H^", "Q") : render_graded(reduced, "H~^", "Q"));
  return kExitOk;
}

int cmd_page(const Flags& flags, std::ostream& out) {
  const DegreeProfile profile(flags.degrees);
  const bool infinite = flags.leaf == "inf";
  if (flags.page_kind == "complex") {
    SpectralPage page = build_complex_e1(profile);
    if (infinite) {
      run_complex_cascade(page);  // checks that every differential vanishes
      page.leaf = kLeafInfinity;
    }
    out << (flags.json ? to_json(page).dump() + "\n" : render_page(page));
    return kExitOk;
  }
  const SpectralPage first = build_real_e1(profile);
  if (!infinite) {
    out << (flags.json ? to_json(first).dump() + "\n" : render_page(first));
    return kExitOk;
  }
  const CascadeReport report = run_real_cascade(first);
  if (flags.json) {
    Json doc = to_json(report.final);
    Json killed = Json::array();
    for (const auto& record : report.killed) killed.push_back(to_json(record));
    doc["killed"] = std::move(killed);
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << render_page(report.final);
  for (const auto& record : report.killed) {
    out << "d_" << record.leaf << ": (" << record.source.p << "," << record.source.q << ") -> ("
        << record.target.p << "," << record.target.q << ") " << (record.source_dies ? "iso" : "onto Z/2")
        << " [" << to_string(record.rule) << "]\n";
  }
  return kExitOk;
}

int cmd_verify(const Flags& flags, std::ostream& out) {
  const DegreeProfile profile(flags.degrees);
  SamplingOptions options;
  options.count = flags.samples;
  options.bound = flags.bound;
  options.seed = flags.seed;
  options.workers = flags.workers;
  const ComponentReport report = component_census(profile, options);
  const CensusVerdict verdict = check_report(report);
  const bool ok = verdict.ok(report.predicted_b0);

  if (flags.json) {
    Json doc = to_json(report);
    doc["verdict"] = {{"observed_values_legal", verdict.observed_values_legal},
                      {"witnesses_verified", verdict.witnesses_verified},
                      {"every_legal_value_realized", verdict.every_legal_value_realized},
                      {"sampled_classes", verdict.sampled_classes},
                      {"realized_classes", verdict.realized_classes},
                      {"verified", ok}};
    out << doc.dump() << '\n';
  } else {
    out << "census for " << profile.to_string() << ": invariant " << to_string(report.kind) << ", "
        << report.accepted_samples << " accepted, " << report.rejected_samples << " rejected, seed "
        << report.seed << ", bound " << report.bound << ", workers " << report.workers << '\n';
    for (const auto& [value, count] : report.observed) out << "  value " << value << ": " << count << " samples\n";
    out << "witnesses:\n";
    for (const auto& [value, system] : report.witnesses) {
      out << "  value " << value << ": (";
      for (std::size_t i = 0; i < system.forms.size(); ++i) out << (i ? ", " : "") << system.forms[i].to_string();
      out << ")" << (report.constructed.contains(value) ? " [constructed]" : " [sampled]") << '\n';
    }
    out << "predicted components: " << report.predicted_b0 << ", sampled classes: " << verdict.sampled_classes
        << ", realized classes: " << verdict.realized_classes << '\n';
    out << (ok ? "verified" : "MISMATCH") << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_witness(const Flags& flags, std::ostream& out) {
  if (flags.degrees.size() != 2) throw CLI::ValidationError("witness needs exactly two degrees d1 d2");
  const int d1 = flags.degrees[0];
  const int d2 = flags.degrees[1];
  const PolySystem system = witness_system(d1, d2, flags.index);
  const int winding = winding_index(system.forms[0], system.forms[1]);
  const bool member = in_resultant_variety(system);
  const bool ok = winding == flags.index && !member;
  if (flags.json) {
    out << Json{{"version", kSchemaVersion},
                {"degrees", {d1, d2}},
                {"index", flags.index},
                {"forms", to_json(system)},
                {"winding", winding},
                {"in_resultant_variety", member}}
               .dump()
        << '\n';
  } else {
    out << "f1 = " << system.forms[0].to_string() << '\n';
    out << "f2 = " << system.forms[1].to_string() << '\n';
    out << "winding index: " << winding << (ok ? " (verified)" : " (MISMATCH)") << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

std::optional<std::vector<int>> parse_degree_line(const std::string& line, std::string& error) {
  std::istringstream tokens(line);
  std::vector<int> degrees;
  std::string token;
  while (tokens >> token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      error = "not an integer: '" + token + "'";
      return std::nullopt;
    }
    degrees.push_back(value);
  }
  return degrees;
}

int cmd_batch(const Flags& flags, std::ostream& out, std::ostream& err) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (flags.batch_file != "-") {
    file.open(flags.batch_file);
    if (!file) {
      err << "cannot open batch file '" << flags.batch_file << "'\n";
      return kExitUsage;
    }
    in = &file;
  }
  bool any_failed = false;
  std::string line;
  for (int line_no = 1; std::getline(*in, line); ++line_no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string error;
    try {
      auto degrees = parse_degree_line(line, error);
      if (degrees) {
        const DegreeProfile profile(*degrees);
        Json doc = flags.batch_kind == "complex"
                       ? complex_result_to_json(profile, complex_cohomology(profile), flags.unreduced)
                       : real_result_to_json(profile, real_cohomology(profile), flags.unreduced);
        doc["line"] = line_no;
        out << doc.dump() << '\n';
        continue;
      }
    } catch (const Error& e) {
      error = e.what();
    }
    any_failed = true;
    err << "line " << line_no << ": " << error << '\n';
    out << Json{{"version", kSchemaVersion}, {"line", line_no}, {"error", error}}.dump() << '\n';
  }
  return any_failed ? kExitBatchPartial : kExitOk;
}

}  // namespace

std::string render_graded(const GradedGroup& g, const std::string& prefix, const std::string& base) {
  std::ostringstream out;
  if (g.empty()) {
    out << prefix << "* = 0\n";
    return out.str();
  }
  for (const auto& [dim, group] : g.entries()) out << prefix << dim << " = " << group.to_string(base) << '\n';
  return out.str();
}

std::string render_page(const SpectralPage& page) {
  const std::string base = page.kind == PageKind::Real ? "Z" : "Q";
  std::ostringstream out;
  out << "E^" << (page.is_infinite() ? std::string("inf") : std::to_string(page.leaf)) << " page, "
      << to_string(page.kind) << " systems " << page.profile.to_string() << '\n';
  if (page.entries.empty()) {
    out << "(all entries vanish)\n";
    return out.str();
  }
  int p_max = page.profile.d(1) + 1;
  int q_min = page.entries.begin()->first.q;
  int q_max = q_min;
  for (const auto& [cell, entry] : page.entries) {
    p_max = std::max(p_max, cell.p);
    q_min = std::min(q_min, cell.q);
    q_max = std::max(q_max, cell.q);
  }
  std::size_t width = 3;
  for (const auto& [cell, entry] : page.entries) width = std::max(width, entry.group.to_string(base).size());
  const std::size_t label = std::max<std::size_t>(3, std::to_string(q_max).size());

  for (int q = q_max; q >= q_min; --q) {
    out << pad_left(std::to_string(q), label) << " |";
    for (int p = 1; p <= p_max; ++p) out << ' ' << pad_left(cell_text(page.at(Cell{p, q}), base), width);
    out << '\n';
  }
  out << std::string(label, '-') << "-+" << std::string(static_cast<std::size_t>(p_max) * (width + 1), '-') << '\n';
  out << pad_left("q/p", label) << " |";
  for (int p = 1; p <= p_max; ++p) out << ' ' << pad_left(std::to_string(p), width);
  out << '\n';
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of spaces of non-resultant systems of binary forms", "nrt"};
  app.require_subcommand(1);
  Flags flags;

  auto add_degrees = [&](CLI::App* sub) {
    sub->add_option("degrees", flags.degrees, "degrees d_1 ... d_n (any order)")->required();
  };

  auto* real = app.add_subcommand("real", "integer cohomology of real non-resultant systems");
  add_degrees(real);
  real->add_flag("--json", flags.json, "emit JSON");
  real->add_flag("--unreduced", flags.unreduced, "show unreduced cohomology");

  auto* complex = app.add_subcommand("complex", "rational cohomology of complex non-resultant systems");
  add_degrees(complex);
  complex->add_flag("--json", flags.json, "emit JSON");
  complex->add_flag("--unreduced", flags.unreduced, "show unreduced cohomology");

  auto* mdisc = app.add_subcommand("mdisc", "rational cohomology of the complement of the m-discriminant");
  mdisc->add_option("--d", flags.d, "degree of the form")->required();
  mdisc->add_option("--m", flags.m, "multiplicity bound")->required();
  mdisc->add_flag("--json", flags.json, "emit JSON");
  mdisc->add_flag("--unreduced", flags.unreduced, "show unreduced cohomology");

  auto* page = app.add_subcommand("page", "print a leaf of the spectral sequence");
  page->add_option("kind", flags.page_kind, "real or complex")
      ->required()
      ->check(CLI::IsMember({"real", "complex"}));
  add_degrees(page);
  page->add_option("--leaf", flags.leaf, "1 or inf")->check(CLI::IsMember({"1", "inf"}));
  page->add_flag("--json", flags.json, "emit JSON");

  auto* verify = app.add_subcommand("verify", "sample the complement and count components (n <= 2)");
  add_degrees(verify);
  verify->add_option("--samples", flags.samples, "accepted samples")->check(CLI::PositiveNumber);
  verify->add_option("--bound", flags.bound, "coefficient bound")->check(CLI::PositiveNumber);
  verify->add_option("--seed", flags.seed, "RNG seed")->envname("NRT_SEED");
  verify->add_option("--workers", flags.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", flags.json, "emit JSON");

  auto* witness = app.add_subcommand("witness", "explicit system with a prescribed winding index");
  add_degrees(witness);
  witness->add_option("--index", flags.index, "winding index k")->required();
  witness->add_flag("--json", flags.json, "emit JSON");

  auto* batch = app.add_subcommand("batch", "one profile per line in, one JSON line out");
  batch->add_option("file", flags.batch_file, "profile list, '-' for stdin")->required();
  batch->add_option("--kind", flags.batch_kind, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  batch->add_flag("--unreduced", flags.unreduced, "include unreduced cohomology");

  std::vector<std::string> storage{"nrt"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (real->parsed()) return cmd_real(flags, out);
    if (complex->parsed()) return cmd_complex(flags, out);
    if (mdisc->parsed()) return cmd_mdisc(flags, out);
    if (page->parsed()) return cmd_page(flags, out);
    if (verify->parsed()) return cmd_verify(flags, out);
    if (witness->parsed()) return cmd_witness(flags, out);
    if (batch->parsed()) return cmd_batch(flags, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nrt::cli
