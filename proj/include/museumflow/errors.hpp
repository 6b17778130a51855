#pragma once

#include <stdexcept>
#include <string>

namespace museumflow {

// Invalid generator/operation parameters (odd k, bad probability, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by path-length queries on a disconnected graph unless the caller
// opted into largest-component mode.
class DisconnectedGraphError : public std::runtime_error {
public:
    explicit DisconnectedGraphError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario config problems; message always names the offending key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace museumflow
