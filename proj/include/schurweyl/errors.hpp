#pragma once

#include <stdexcept>
#include <string>

namespace schurweyl {

// Input exceeds a documented size cap (particle count, dimension, ...).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine failed to converge or an exact identity broke down.
class numerical_failure_error : public std::runtime_error {
public:
    explicit numerical_failure_error(const std::string& what) : std::runtime_error(what) {}
};

// A vector that must be usable as a quantum state has (near-)zero norm.
class degenerate_state_error : public std::invalid_argument {
public:
    explicit degenerate_state_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file or document (distinct from semantically invalid values).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schurweyl
