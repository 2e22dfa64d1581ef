#include "xppkit/freeze.hpp"

#include "util.hpp"

namespace xpp {

std::string write_points(const Model& model, const BifurcationDiagram& bd,
                         std::optional<std::pair<std::string, std::string>> var_pair) {
    if (bd.is_two_parameter())
        throw Error(ErrorKind::TwoParameterDiagram,
                    "freeze export is defined for one-parameter diagrams only");

    std::string x_name = var_pair ? var_pair->first : bd.params[0];
    std::string y_name = var_pair ? var_pair->second : model.dynamical_names().front();

    int x_hot = -1;
    for (std::size_t i = 0; i < bd.hot.size(); ++i)
        if (bd.hot[i] == x_name) x_hot = static_cast<int>(i);
    if (x_hot < 0) throw Error(ErrorKind::UnknownAxisName, "'" + x_name + "'");

    int y_dyn = -1;
    auto dyn = model.dynamical_names();
    for (std::size_t i = 0; i < dyn.size(); ++i)
        if (dyn[i] == y_name) y_dyn = static_cast<int>(i);
    if (y_dyn < 0) throw Error(ErrorKind::UnknownAxisName, "'" + y_name + "'");

    std::string out;
    int bi = 0;
    for (const auto& branch : bd.branches) {
        ++bi;
        for (const auto& p : branch.points) {
            const auto& s = p.u[y_dyn];
            double lo = p.is_periodic() ? s.lower : s.initial;
            double hi = p.is_periodic() ? s.upper : s.initial;
            out += detail::fmt_g15(p.par_values[x_hot]);
            out += ' ';
            out += detail::fmt_g15(lo);
            out += ' ';
            out += detail::fmt_g15(hi);
            out += ' ';
            out += std::to_string(p.typ);
            out += ' ';
            out += std::to_string(bi);
            out += '\n';
        }
    }
    return out;
}

std::vector<FreezeRow> parse_freeze(std::string_view source) {
    std::vector<FreezeRow> rows;
    detail::LineReader reader{source};
    while (auto line = reader.next()) {
        auto cells = detail::split_ws(*line);
        if (cells.size() != 5)
            throw Error(ErrorKind::ColumnCountMismatch,
                        "expected 5 columns, got " + std::to_string(cells.size()),
                        reader.line_no);
        FreezeRow row;
        auto num = [&](std::string_view c) {
            auto v = detail::parse_number(c);
            if (!v)
                throw Error(ErrorKind::NonNumericCell, "'" + std::string(c) + "'",
                            reader.line_no);
            return *v;
        };
        row.x = num(cells[0]);
        row.y_lower = num(cells[1]);
        row.y_upper = num(cells[2]);
        row.type = static_cast<int>(num(cells[3]));
        row.branch = static_cast<int>(num(cells[4]));
        rows.push_back(row);
    }
    return rows;
}

} // namespace xpp
