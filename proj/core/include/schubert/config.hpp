#pragma once

#include <string>

#include "schubert/budget.hpp"

namespace schubert {

// INI-style budget file: `key = value` lines, '#' or ';' comments. Keys:
// p_max, tensor_entries, exterior_cells, series_slack. Unknown keys are
// rejected so typos do not silently run with defaults.
Budget parse_budget_file(const std::string& path);
Budget parse_budget_text(const std::string& text);

}  // namespace schubert
