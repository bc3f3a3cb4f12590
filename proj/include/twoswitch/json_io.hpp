#pragma once

#include <json.hpp>

#include "twoswitch/census.hpp"
#include "twoswitch/forests.hpp"
#include "twoswitch/realization.hpp"
#include "twoswitch/split.hpp"
#include "twoswitch/two_switch.hpp"

namespace twoswitch {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Census4& c);
ordered_json to_json(const CountSummary& s);
ordered_json to_json(const ActivityReport& r);
ordered_json to_json(const SplitAnalysis& a);
ordered_json to_json(const std::vector<TwoSwitch>& seq); // arrays of [a,b,c,d]
std::vector<TwoSwitch> switches_from_json(const ordered_json& j);
ordered_json to_json(const UnicyclicDecomposition& d);
/// {sequence, filter, vertices: [graph6...], edges: [[i,j]...]}
ordered_json to_json(const RealizationGraph& rg);
std::string to_dot(const RealizationGraph& rg);

} // namespace twoswitch
