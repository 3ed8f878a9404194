#pragma once

#include <stdexcept>
#include <string>

namespace tollkit {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (graph6, edge lists, CLI graph specs).
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// Distance/toll invariants are only defined on connected graphs; operations
// that need connectivity throw this on disconnected input.
struct disconnected_error : error {
    explicit disconnected_error(const std::string& what) : error(what) {}
};

} // namespace tollkit
