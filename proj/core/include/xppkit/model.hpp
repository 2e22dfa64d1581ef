#ifndef XPPKIT_MODEL_HPP
#define XPPKIT_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xppkit/errors.hpp"

namespace xpp {

enum class VarClass { Temporal, Dynamical, Auxiliary };

/// Parsed `.ode` model: variable/parameter names and hard-coded options.
/// Right-hand sides are kept verbatim and never evaluated.
struct Model {
    // name -> class, in declaration order; the synthetic temporal variable
    // `t` comes first, dynamical variables precede auxiliary ones.
    std::vector<std::pair<std::string, VarClass>> variables;
    std::vector<std::pair<std::string, double>> parameters;
    // `@` option lines, stored verbatim.
    std::vector<std::pair<std::string, std::string>> settings;
    // verbatim right-hand sides keyed by variable name (dynamical and aux)
    std::vector<std::pair<std::string, std::string>> equations;

    std::vector<std::string> dynamical_names() const;
    std::vector<std::string> auxiliary_names() const;
    std::size_t dynamical_count() const;

    bool has_variable(std::string_view name) const;
    // Exact match first, then a case-insensitive fallback with a warning.
    std::optional<double> parameter(std::string_view name, Warnings* warnings = nullptr) const;

    bool operator==(const Model&) const = default;
};

Model parse_model(std::string_view source, Warnings* warnings = nullptr);

/// Canonical re-emitter for the supported grammar subset.
/// parse_model(serialize_model(m)) == m.
std::string serialize_model(const Model& m);

} // namespace xpp

#endif
