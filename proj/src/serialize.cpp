#include "nrt/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace nrt {

Json to_json(const FinAbGroup& g) {
  return Json{{"rank", g.free_rank()}, {"torsion", g.torsion()}};
}

FinAbGroup group_from_json(const Json& j) {
  return FinAbGroup(j.at("rank").get<int>(), j.at("torsion").get<std::vector<std::int64_t>>());
}

Json to_json(const GradedGroup& g) {
  Json out = Json::array();
  for (const auto& [dim, group] : g.entries()) {
    Json entry{{"dim", dim}};
    entry.update(to_json(group));
    out.push_back(std::move(entry));
  }
  return out;
}

GradedGroup graded_from_json(const Json& j) {
  GradedGroup out;
  for (const auto& entry : j) out.put(entry.at("dim").get<int>(), group_from_json(entry));
  return out;
}

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

Json to_json(const BinaryForm& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

BinaryForm form_from_json(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return BinaryForm(std::move(coeffs));
}

Json to_json(const PolySystem& s) {
  Json out = Json::array();
  for (const auto& f : s.forms) out.push_back(to_json(f));
  return out;
}

PolySystem system_from_json(const Json& j) {
  PolySystem out;
  for (const auto& f : j) out.forms.push_back(form_from_json(f));
  return out;
}

Json to_json(const DegreeProfile& p) { return Json(p.degrees()); }

DegreeProfile profile_from_json(const Json& j) { return DegreeProfile(j.get<std::vector<int>>()); }

Json real_result_to_json(const DegreeProfile& profile, const RealCohomologyResult& result, bool unreduced) {
  Json out{{"version", kSchemaVersion},
           {"profile", to_json(profile)},
           {"field", "Z"},
           {"reduced", to_json(result.reduced)},
           {"empty", result.complement_empty},
           {"components", result.component_count ? Json(*result.component_count) : Json(nullptr)}};
  if (unreduced && !result.complement_empty) out["unreduced"] = to_json(nrt::unreduce(result.reduced));
  return out;
}

RealResultDocument real_result_from_json(const Json& j) {
  if (j.at("version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
  RealCohomologyResult result;
  result.reduced = graded_from_json(j.at("reduced"));
  result.complement_empty = j.at("empty").get<bool>();
  if (!j.at("components").is_null()) result.component_count = j.at("components").get<int>();
  return {profile_from_json(j.at("profile")), std::move(result)};
}

Json complex_result_to_json(const DegreeProfile& profile, const GradedGroup& reduced, bool unreduced) {
  Json out{{"version", kSchemaVersion},
           {"profile", to_json(profile)},
           {"field", "Q"},
           {"reduced", to_json(reduced)},
           {"empty", false},
           {"components", reduced.at(0).free_rank() + 1}};
  if (unreduced) out["unreduced"] = to_json(nrt::unreduce(reduced));
  return out;
}

Json mdisc_result_to_json(const MDiscParams& params, const GradedGroup& reduced, bool unreduced) {
  Json out{{"version", kSchemaVersion},
           {"mdisc", {{"d", params.d}, {"m", params.m}}},
           {"field", "Q"},
           {"reduced", to_json(reduced)},
           {"empty", false},
           {"components", reduced.at(0).free_rank() + 1}};
  if (unreduced) out["unreduced"] = to_json(nrt::unreduce(reduced));
  return out;
}

namespace {

Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::OrientableColumn, Provenance::TwistedColumn, Provenance::LastColumn,
                 Provenance::ComplexConfig, Provenance::Survivor}) {
    if (to_string(p) == s) return p;
  }
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

CascadeRule rule_from_string(const std::string& s) {
  for (auto r : {CascadeRule::TailEpimorphism, CascadeRule::TailIsomorphism, CascadeRule::OddCascadeEpimorphism}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown cascade rule '" + s + "'");
}

Json leaf_to_json(int leaf) { return leaf == kLeafInfinity ? Json("inf") : Json(leaf); }

int leaf_from_json(const Json& j) { return j.is_string() ? kLeafInfinity : j.get<int>(); }

Json cell_to_json(Cell c) { return Json::array({c.p, c.q}); }

Cell cell_from_json(const Json& j) { return Cell{j.at(0).get<int>(), j.at(1).get<int>()}; }

}  // namespace

Json to_json(const SpectralPage& page) {
  Json entries = Json::array();
  for (const auto& [cell, entry] : page.entries) {
    Json e{{"p", cell.p}, {"q", cell.q}};
    e.update(to_json(entry.group));
    e["provenance"] = std::string(to_string(entry.provenance));
    entries.push_back(std::move(e));
  }
  return Json{{"version", kSchemaVersion},
              {"kind", std::string(to_string(page.kind))},
              {"profile", to_json(page.profile)},
              {"field", page.kind == PageKind::Real ? "Z" : "Q"},
              {"leaf", leaf_to_json(page.leaf)},
              {"entries", std::move(entries)}};
}

SpectralPage page_from_json(const Json& j) {
  SpectralPage page{j.at("kind").get<std::string>() == "real" ? PageKind::Real : PageKind::Complex,
                    profile_from_json(j.at("profile")), leaf_from_json(j.at("leaf")), {}};
  for (const auto& e : j.at("entries")) {
    page.entries.emplace(Cell{e.at("p").get<int>(), e.at("q").get<int>()},
                         PageEntry{group_from_json(e), provenance_from_string(e.at("provenance").get<std::string>())});
  }
  return page;
}

Json to_json(const KillRecord& record) {
  return Json{{"source", cell_to_json(record.source)},
              {"target", cell_to_json(record.target)},
              {"leaf", record.leaf},
              {"rule", std::string(to_string(record.rule))},
              {"source_dies", record.source_dies}};
}

KillRecord kill_record_from_json(const Json& j) {
  return KillRecord{cell_from_json(j.at("source")), cell_from_json(j.at("target")), j.at("leaf").get<int>(),
                    rule_from_string(j.at("rule").get<std::string>()), j.at("source_dies").get<bool>()};
}

Json to_json(const CascadeReport& report) {
  Json killed = Json::array();
  for (const auto& record : report.killed) killed.push_back(to_json(record));
  return Json{{"initial", to_json(report.initial)}, {"final", to_json(report.final)}, {"killed", std::move(killed)}};
}

CascadeReport cascade_from_json(const Json& j) {
  CascadeReport report{page_from_json(j.at("initial")), page_from_json(j.at("final")), {}};
  for (const auto& record : j.at("killed")) report.killed.push_back(kill_record_from_json(record));
  return report;
}

Json to_json(const ComponentReport& report) {
  Json observed = Json::array();
  for (const auto& [value, count] : report.observed) observed.push_back({{"value", value}, {"count", count}});
  Json witnesses = Json::array();
  for (const auto& [value, system] : report.witnesses) {
    witnesses.push_back(
        {{"value", value}, {"forms", to_json(system)}, {"constructed", report.constructed.contains(value)}});
  }
  return Json{{"version", kSchemaVersion},
              {"profile", to_json(report.profile)},
              {"invariant", std::string(to_string(report.kind))},
              {"observed", std::move(observed)},
              {"witnesses", std::move(witnesses)},
              {"predicted_b0", report.predicted_b0},
              {"accepted_samples", report.accepted_samples},
              {"rejected_samples", report.rejected_samples},
              {"seed", report.seed},
              {"bound", report.bound},
              {"workers", report.workers}};
}

ComponentReport report_from_json(const Json& j) {
  InvariantKind kind = InvariantKind::Winding;
  const auto name = j.at("invariant").get<std::string>();
  for (auto k : {InvariantKind::Winding, InvariantKind::Parity, InvariantKind::Sign}) {
    if (to_string(k) == name) kind = k;
  }
  ComponentReport report{profile_from_json(j.at("profile")), kind, {}, {}, {}};
  for (const auto& o : j.at("observed")) report.observed[o.at("value").get<int>()] = o.at("count").get<std::int64_t>();
  for (const auto& w : j.at("witnesses")) {
    const int value = w.at("value").get<int>();
    report.witnesses.emplace(value, system_from_json(w.at("forms")));
    if (w.at("constructed").get<bool>()) report.constructed.insert(value);
  }
  report.predicted_b0 = j.at("predicted_b0").get<int>();
  report.accepted_samples = j.at("accepted_samples").get<std::int64_t>();
  report.rejected_samples = j.at("rejected_samples").get<std::int64_t>();
  report.seed = j.at("seed").get<std::uint64_t>();
  report.bound = j.at("bound").get<int>();
  report.workers = j.at("workers").get<int>();
  return report;
}

}  // namespace nrt
