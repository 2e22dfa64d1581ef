#ifndef XPPKIT_TABLES_HPP
#define XPPKIT_TABLES_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "xppkit/model.hpp"

namespace xpp {

/// Whitespace-delimited simulation table; column order is time, dynamical,
/// then auxiliary variables, matching the model declaration order.
struct SimulationTable {
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    std::size_t row_count = 0;

    const std::vector<double>* column(std::string_view name) const;
};

SimulationTable parse_data(const Model& model, std::string_view source);

using Point2 = std::array<double, 2>;
using Polyline2 = std::vector<Point2>;

/// Nullclines of two variables named in the file name (`[text]_x_y.dat`).
/// Each family is a list of polyline segments.
struct NullclinePair {
    std::string x_var;
    std::string y_var;
    std::vector<Polyline2> nc_x; // nullcline-index 1
    std::vector<Polyline2> nc_y; // nullcline-index 2
};

/// `filename` is the bare file name (used only to extract the variable pair).
NullclinePair parse_nullclines_text(std::string_view filename, std::string_view source);

/// Reads the file at `path`.
NullclinePair parse_nullclines(const std::string& path);

} // namespace xpp

#endif
