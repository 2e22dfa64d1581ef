#ifndef XPPKIT_FREEZE_HPP
#define XPPKIT_FREEZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "xppkit/autorepo.hpp"
#include "xppkit/model.hpp"

namespace xpp {

/// One line of a freeze `.dat` diagram snapshot.
struct FreezeRow {
    double x = 0, y_lower = 0, y_upper = 0;
    int type = 0;   // TYP code of the point
    int branch = 0; // 1-based branch index
    bool operator==(const FreezeRow&) const = default;
};

/// XPPAUT-loadable snapshot of a 1P diagram (Graphic stuff -> Freeze ->
/// Bif.Diag). Columns: x, y-lower, y-upper, type, branch. Default axes are
/// the main parameter and the first dynamical variable. Throws
/// TwoParameterDiagram for 2P diagrams.
std::string write_points(const Model& model, const BifurcationDiagram& bd,
                         std::optional<std::pair<std::string, std::string>> var_pair = {});

std::vector<FreezeRow> parse_freeze(std::string_view source);

} // namespace xpp

#endif
