#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kecore/budget.hpp"
#include "kecore/graph.hpp"

namespace kecore::cli {

/// Every invariant of one graph as a JSON record; the text rendering is
/// derived from the same record.
nlohmann::json analyze(const Graph& g, const std::string& graph_id, const Budget& budget);

std::string render_analysis(const nlohmann::json& report);

}  // namespace kecore::cli
