#pragma once

#include <string>

#include "json.hpp"
#include "morrey/norms.hpp"
#include "morrey/space.hpp"
#include "morrey/verdict.hpp"
#include "morrey/witness.hpp"

namespace morrey {

using ordered_json = nlohmann::ordered_json;

// Numbers that may be infinite travel as the string "inf".
double number_from_json(const ordered_json& v, const char* what);
ordered_json number_to_json(double v);

PhiSpec phi_from_json(const ordered_json& j, int d);
ordered_json phi_to_json(const PhiSpec& phi);

SpaceSpec space_from_json(const ordered_json& j);
ordered_json space_to_json(const SpaceSpec& spec);

DyadicSeq seq_from_json(const ordered_json& j);
ordered_json seq_to_json(const DyadicSeq& seq);

NormParams params_from_json(const ordered_json& j, int* d_out);

ordered_json verdict_to_json(const Verdict& v);
ordered_json probe_to_json(const ProbeReport& r);

}  // namespace morrey
