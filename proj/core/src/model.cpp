#include "xppkit/model.hpp"

#include <algorithm>

#include "util.hpp"

namespace xpp {

using detail::iequals;
using detail::parse_number;
using detail::split_char;
using detail::trim;

std::vector<std::string> Model::dynamical_names() const {
    std::vector<std::string> out;
    for (const auto& [name, cls] : variables)
        if (cls == VarClass::Dynamical) out.push_back(name);
    return out;
}

std::vector<std::string> Model::auxiliary_names() const {
    std::vector<std::string> out;
    for (const auto& [name, cls] : variables)
        if (cls == VarClass::Auxiliary) out.push_back(name);
    return out;
}

std::size_t Model::dynamical_count() const {
    return static_cast<std::size_t>(
        std::count_if(variables.begin(), variables.end(),
                      [](const auto& v) { return v.second == VarClass::Dynamical; }));
}

bool Model::has_variable(std::string_view name) const {
    for (const auto& [n, cls] : variables)
        if (n == name) return true;
    return false;
}

std::optional<double> Model::parameter(std::string_view name, Warnings* warnings) const {
    for (const auto& [n, v] : parameters)
        if (n == name) return v;
    for (const auto& [n, v] : parameters) {
        if (iequals(n, name)) {
            warn(warnings, "parameter '" + std::string(name)
                               + "' matched case-insensitively to '" + n + "'");
            return v;
        }
    }
    return std::nullopt;
}

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct Builder {
    Model m;
    Warnings* warnings;

    void check_fresh(std::string_view name, long line) {
        for (const auto& [n, cls] : m.variables)
            if (n == name)
                throw Error(ErrorKind::DuplicateName, "'" + std::string(name) + "'", line);
        for (const auto& [n, v] : m.parameters)
            if (n == name)
                throw Error(ErrorKind::DuplicateName, "'" + std::string(name) + "'", line);
    }

    void add_parameter(std::string_view decl, long line) {
        auto eq = decl.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::MalformedDeclaration,
                        "expected name=value in '" + std::string(decl) + "'", line);
        auto name = trim(decl.substr(0, eq));
        auto value_text = trim(decl.substr(eq + 1));
        if (!valid_name(name))
            throw Error(ErrorKind::MalformedDeclaration,
                        "bad parameter name '" + std::string(name) + "'", line);
        auto value = parse_number(value_text);
        if (!value)
            throw Error(ErrorKind::MalformedDeclaration,
                        "bad numeric value '" + std::string(value_text) + "'", line);
        check_fresh(name, line);
        m.parameters.emplace_back(std::string(name), *value);
    }

    void add_variable(std::string_view name, VarClass cls, std::string_view rhs, long line) {
        if (!valid_name(name))
            throw Error(ErrorKind::MalformedDeclaration,
                        "bad variable name '" + std::string(name) + "'", line);
        check_fresh(name, line);
        m.variables.emplace_back(std::string(name), cls);
        m.equations.emplace_back(std::string(name), std::string(trim(rhs)));
    }
};

} // namespace

Model parse_model(std::string_view source, Warnings* warnings) {
    Builder b{{}, warnings};
    b.m.variables.emplace_back("t", VarClass::Temporal);

    detail::LineReader reader{source};
    while (auto line_opt = reader.next()) {
        std::string_view line = *line_opt;
        long ln = reader.line_no;

        if (iequals(line, "done")) break;

        if (line.front() == '@') {
            for (auto part : split_char(trim(line.substr(1)), ',')) {
                part = trim(part);
                if (part.empty()) continue;
                auto eq = part.find('=');
                if (eq == std::string_view::npos)
                    throw Error(ErrorKind::MalformedDeclaration,
                                "expected key=value after '@' in '" + std::string(part) + "'", ln);
                b.m.settings.emplace_back(std::string(trim(part.substr(0, eq))),
                                          std::string(trim(part.substr(eq + 1))));
            }
            continue;
        }

        auto first_ws = line.find_first_of(" \t");
        std::string_view keyword = line.substr(0, first_ws);

        if (iequals(keyword, "par") || iequals(keyword, "param")) {
            if (first_ws == std::string_view::npos)
                throw Error(ErrorKind::MalformedDeclaration, "empty 'par' line", ln);
            for (auto part : split_char(trim(line.substr(first_ws)), ','))
                b.add_parameter(trim(part), ln);
            continue;
        }
        if (iequals(keyword, "aux")) {
            if (first_ws == std::string_view::npos)
                throw Error(ErrorKind::MalformedDeclaration, "empty 'aux' line", ln);
            auto rest = trim(line.substr(first_ws));
            auto eq = rest.find('=');
            if (eq == std::string_view::npos)
                throw Error(ErrorKind::MalformedDeclaration,
                            "expected name=expression in '" + std::string(rest) + "'", ln);
            b.add_variable(trim(rest.substr(0, eq)), VarClass::Auxiliary,
                           rest.substr(eq + 1), ln);
            continue;
        }
        if (iequals(keyword, "init") || iequals(keyword, "wiener") || iequals(keyword, "table")) {
            warn(warnings, "line " + std::to_string(ln) + ": '" + std::string(keyword)
                               + "' declarations are recognized but skipped");
            continue;
        }

        // ODE forms: x'=rhs  or  dx/dt=rhs
        auto eq = line.find('=');
        if (eq != std::string_view::npos) {
            auto lhs = trim(line.substr(0, eq));
            auto rhs = line.substr(eq + 1);
            if (lhs.size() >= 2 && lhs.back() == '\'') {
                b.add_variable(trim(lhs.substr(0, lhs.size() - 1)), VarClass::Dynamical, rhs, ln);
                continue;
            }
            if (lhs.size() > 4 && (lhs[0] == 'd' || lhs[0] == 'D')
                && iequals(lhs.substr(lhs.size() - 3), "/dt")) {
                b.add_variable(trim(lhs.substr(1, lhs.size() - 4)), VarClass::Dynamical, rhs, ln);
                continue;
            }
        }

        throw Error(ErrorKind::MalformedDeclaration,
                    "unrecognized line '" + std::string(line) + "'", ln);
    }

    // dynamical variables must precede auxiliaries; reorder never happens in
    // valid XPPAUT files, so a violation is a parse error
    bool seen_aux = false;
    for (const auto& [name, cls] : b.m.variables) {
        if (cls == VarClass::Auxiliary) seen_aux = true;
        if (cls == VarClass::Dynamical && seen_aux)
            throw Error(ErrorKind::MalformedDeclaration,
                        "dynamical variable '" + name + "' declared after an aux variable");
    }

    if (b.m.dynamical_count() == 0)
        throw Error(ErrorKind::EmptyModel, "no dynamical variable found");
    return std::move(b.m);
}

std::string serialize_model(const Model& m) {
    std::string out;
    auto rhs_of = [&](const std::string& name) -> const std::string& {
        static const std::string empty;
        for (const auto& [n, rhs] : m.equations)
            if (n == name) return rhs;
        return empty;
    };

    for (const auto& [name, value] : m.parameters)
        out += "par " + name + "=" + detail::fmt_g15(value) + "\n";
    for (const auto& [name, cls] : m.variables) {
        if (cls == VarClass::Dynamical)
            out += name + "'=" + rhs_of(name) + "\n";
    }
    for (const auto& [name, cls] : m.variables) {
        if (cls == VarClass::Auxiliary)
            out += "aux " + name + "=" + rhs_of(name) + "\n";
    }
    for (const auto& [key, value] : m.settings)
        out += "@ " + key + "=" + value + "\n";
    out += "done\n";
    return out;
}

} // namespace xpp
