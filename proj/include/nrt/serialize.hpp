#pragma once

#include "json.hpp"

#include "nrt/algebra.hpp"
#include "nrt/census.hpp"
#include "nrt/closed_form.hpp"
#include "nrt/forms.hpp"
#include "nrt/spectral.hpp"

namespace nrt {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

/// [{"dim":0,"rank":3,"torsion":[]}, ...], ascending by dim.
Json to_json(const GradedGroup& g);
GradedGroup graded_from_json(const Json& j);

/// Exact integers: a JSON number when it fits in 64 bits, a decimal string otherwise.
Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);
Json to_json(const PolySystem& s);
PolySystem system_from_json(const Json& j);

Json to_json(const DegreeProfile& p);
DegreeProfile profile_from_json(const Json& j);

/// {"version":1,"profile":[7,3],"field":"Z","reduced":[...],"empty":false,"components":4}
/// plus "unreduced":[...] when requested and the complement is non-empty.
Json real_result_to_json(const DegreeProfile& profile, const RealCohomologyResult& result, bool unreduced = false);

struct RealResultDocument {
  DegreeProfile profile;
  RealCohomologyResult result;
};
RealResultDocument real_result_from_json(const Json& j);

/// Rational results: {"version":1,"profile":[...],"field":"Q","reduced":[...]}.
Json complex_result_to_json(const DegreeProfile& profile, const GradedGroup& reduced, bool unreduced = false);
Json mdisc_result_to_json(const MDiscParams& params, const GradedGroup& reduced, bool unreduced = false);

Json to_json(const SpectralPage& page);
SpectralPage page_from_json(const Json& j);
Json to_json(const KillRecord& record);
KillRecord kill_record_from_json(const Json& j);
Json to_json(const CascadeReport& report);
CascadeReport cascade_from_json(const Json& j);

Json to_json(const ComponentReport& report);
ComponentReport report_from_json(const Json& j);

}  // namespace nrt
