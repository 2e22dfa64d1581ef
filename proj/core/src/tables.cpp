#include "xppkit/tables.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include "util.hpp"

namespace xpp {

using detail::parse_number;
using detail::split_char;
using detail::split_ws;
using detail::trim;

const std::vector<double>* SimulationTable::column(std::string_view name) const {
    for (const auto& [n, v] : columns)
        if (n == name) return &v;
    return nullptr;
}

SimulationTable parse_data(const Model& model, std::string_view source) {
    std::vector<std::string> names;
    names.push_back("t");
    for (const auto& n : model.dynamical_names()) names.push_back(n);
    for (const auto& n : model.auxiliary_names()) names.push_back(n);

    SimulationTable table;
    for (const auto& n : names) table.columns.emplace_back(n, std::vector<double>{});

    detail::LineReader reader{source};
    while (auto line = reader.next()) {
        auto cells = split_ws(*line);
        if (cells.size() != names.size())
            throw Error(ErrorKind::ColumnCountMismatch,
                        "expected " + std::to_string(names.size()) + " columns, found "
                            + std::to_string(cells.size()),
                        reader.line_no);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto v = parse_number(cells[c]);
            if (!v)
                throw Error(ErrorKind::NonNumericCell,
                            "column " + std::to_string(c + 1) + ": '" + std::string(cells[c])
                                + "'",
                            reader.line_no);
            table.columns[c].second.push_back(*v);
        }
        ++table.row_count;
    }
    if (table.row_count == 0)
        throw Error(ErrorKind::EmptyFile, "no data rows");
    return table;
}

namespace {

// `[text]_x_y.dat` -> (x, y); the last two underscore tokens win.
std::pair<std::string, std::string> vars_from_filename(std::string_view filename) {
    auto dot = filename.rfind('.');
    std::string_view stem = (dot == std::string_view::npos) ? filename : filename.substr(0, dot);
    auto tokens = split_char(stem, '_');
    if (tokens.size() < 3 || tokens[tokens.size() - 1].empty()
        || tokens[tokens.size() - 2].empty())
        throw Error(ErrorKind::BadFilename,
                    "cannot extract two variable tokens from '" + std::string(filename) + "'");
    return {std::string(tokens[tokens.size() - 2]), std::string(tokens[tokens.size() - 1])};
}

} // namespace

NullclinePair parse_nullclines_text(std::string_view filename, std::string_view source) {
    NullclinePair nc;
    std::tie(nc.x_var, nc.y_var) = vars_from_filename(filename);

    // body rows: x y index, index in {1,2}; index changes or blank lines
    // break segments
    int current_index = 0;
    Polyline2 segment;
    auto flush = [&]() {
        if (segment.empty()) return;
        (current_index == 1 ? nc.nc_x : nc.nc_y).push_back(std::move(segment));
        segment.clear();
    };

    detail::LineReader reader{source};
    while (auto raw = reader.next_raw()) {
        auto line = trim(*raw);
        if (line.empty()) {
            flush();
            current_index = 0;
            continue;
        }
        if (line.front() == '#') continue;
        auto cells = split_ws(line);
        if (cells.size() != 3)
            throw Error(ErrorKind::BadRow, "expected 3 columns", reader.line_no);
        auto x = parse_number(cells[0]);
        auto y = parse_number(cells[1]);
        auto idx = parse_number(cells[2]);
        if (!x || !y || !idx || (*idx != 1 && *idx != 2))
            throw Error(ErrorKind::BadRow,
                        "bad row '" + std::string(line) + "'", reader.line_no);
        int index = static_cast<int>(*idx);
        if (index != current_index) {
            flush();
            current_index = index;
        }
        segment.push_back({*x, *y});
    }
    flush();
    return nc;
}

NullclinePair parse_nullclines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto slash = path.find_last_of("/\\");
    std::string filename = (slash == std::string::npos) ? path : path.substr(slash + 1);
    return parse_nullclines_text(filename, buf.str());
}

} // namespace xpp
