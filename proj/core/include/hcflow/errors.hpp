#pragma once

#include <stdexcept>
#include <string>

namespace hcflow {

// Principal-curvature vector left the admissibility cone (or sits on its
// boundary within tolerance).
class ConeError : public std::runtime_error {
public:
    explicit ConeError(const std::string& what) : std::runtime_error(what) {}
};

// Geometric evaluation on invalid data (non-positive height, point below
// the equator, ...).
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Initial surface failed one of the admission hypotheses.
class InadmissibleInitialData : public std::runtime_error {
public:
    InadmissibleInitialData(const std::string& what, int node,
                            std::string quantity, double value, double bound)
        : std::runtime_error(what),
          node(node),
          quantity(std::move(quantity)),
          value(value),
          bound(bound) {}

    int node;
    std::string quantity;
    double value;
    double bound;
};

// Time step could not be accepted even after the maximum number of halvings.
class StepFailure : public std::runtime_error {
public:
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

// Configuration file rejected; carries line/field diagnostics.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line, std::string field)
        : std::runtime_error(what), line(line), field(std::move(field)) {}

    int line;        // 0 when not tied to a specific line
    std::string field;
};

}  // namespace hcflow
