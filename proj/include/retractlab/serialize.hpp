#pragma once

#include <json.hpp>

#include "retractlab/endo.hpp"
#include "retractlab/free_algebra.hpp"
#include "retractlab/retracts.hpp"
#include "retractlab/theorem_lab.hpp"

namespace retractlab {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers while they fit in 64 bits, otherwise "num/den" strings.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// {"elemX": "<poly in y>"}, {"elemY": "<poly in x>"} or
/// {"affine": {"m": [[a, b], [c, d]], "b": [e, f]}}.
Json move_to_json(const ElementaryMove& m);
ElementaryMove move_from_json(const Json& j);

Json tame_to_json(const TameAuto& t);
TameAuto tame_from_json(const Json& j);

Json endo_to_json(const Endo& e);

/// {"p": ..., "s": ..., "t": ...}
Json certificate_to_json(const Poly2& p, const UniPoly& s, const UniPoly& t);

Json degree_to_json(const Degree& d);
Json case_report_to_json(const CaseReport& r);
Json reduction_to_json(const ReductionOutcome& o);
Json experiment_to_json(const ExperimentReport& r);
Json example1_to_json(const Example1Report& r);

}  // namespace retractlab
