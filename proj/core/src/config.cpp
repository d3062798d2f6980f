#include "schubert/config.hpp"

#include <fstream>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Budget parse_budget_text(const std::string& text) {
    Budget budget;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') continue;  // section headers carry no data
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        long long parsed;
        try {
            parsed = std::stoll(value);
        } catch (const std::exception&) {
            throw input_error("config line " + std::to_string(lineno) + ": bad value '" + value + "'");
        }
        if (parsed < 1) throw input_error("config line " + std::to_string(lineno) + ": value must be positive");
        if (key == "p_max") budget.p_max = static_cast<int>(parsed);
        else if (key == "tensor_entries") budget.tensor_entries = parsed;
        else if (key == "exterior_cells") budget.exterior_cells = static_cast<int>(parsed);
        else if (key == "series_slack") budget.series_slack = static_cast<int>(parsed);
        else throw input_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return budget;
}

Budget parse_budget_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_budget_text(text.str());
}

}  // namespace schubert
