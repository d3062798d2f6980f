#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Malformed user input (bad partition string, non-square matrix, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size budget (p_max, tensor entries, exterior cells) was exceeded.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schubert
