#include "xppkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace xpp {

namespace {

std::vector<std::array<double, 2>> point_eigs(const ContinuationPoint& p, bool sorted) {
    std::vector<std::array<double, 2>> eig(p.eig_real.size());
    for (std::size_t k = 0; k < eig.size(); ++k) eig[k] = {p.eig_real[k], p.eig_imag[k]};
    if (sorted) {
        std::sort(eig.begin(), eig.end(), [](const auto& a, const auto& b) {
            if (a[0] != b[0]) return a[0] < b[0];
            return a[1] < b[1]; // deterministic tie-break
        });
    }
    return eig;
}

} // namespace

const std::vector<std::vector<double>>* Surface::field(const std::string& name) const {
    for (const auto& [n, cols] : fields)
        if (n == name) return &cols;
    return nullptr;
}

EigenData get_eig(const BifurcationDiagram& bd, bool sorted) {
    EigenData out;
    for (const auto& branch : bd.branches) {
        std::vector<std::vector<std::array<double, 2>>> rows;
        rows.reserve(branch.points.size());
        for (const auto& p : branch.points) rows.push_back(point_eigs(p, sorted));
        out.per_branch.push_back(std::move(rows));
    }
    for (const auto& lp : bd.labeled_points) {
        std::vector<std::array<double, 2>> row;
        double bi = static_cast<double>(lp.branch_index);
        row.push_back({bi, bi});
        for (const auto& e : point_eigs(lp.point, sorted)) row.push_back(e);
        out.per_label.push_back(std::move(row));
    }
    return out;
}

std::vector<Trajectory> get_trj(const BifurcationDiagram& bd) {
    std::vector<Trajectory> out;
    for (const auto& lp : bd.labeled_points)
        if (lp.orbit) out.push_back(*lp.orbit);
    if (out.empty())
        throw Error(ErrorKind::NoOrbits,
                    "diagram " + bd.name + " has no labeled point with an orbit");
    return out;
}

double average_over_orbit(const Trajectory& trj, const Expression& integrand,
                          const Env& extra_env, Warnings* warnings) {
    Env env;
    for (const auto& [name, value] : extra_env) env[name] = value;
    for (const auto& [name, value] : trj.params) {
        if (extra_env.count(name))
            warn(warnings, "'" + name + "' bound both by the trajectory and externally; "
                               "the trajectory value wins");
        env[name] = value;
    }
    env["T"] = trj.period;

    const std::size_t n = trj.t.size();
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [name, samples] : trj.samples) env[name] = samples[i];
        values[i] = integrand.eval(env, warnings);
    }

    // trapezoid on the de-normalized grid t*T, divided by T
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double dt = (trj.t[i + 1] - trj.t[i]) * trj.period;
        integral += 0.5 * (values[i] + values[i + 1]) * dt;
    }
    return integral / trj.period;
}

ZeroAverageResult find_zero_average(std::span<const Trajectory> trajectories,
                                    const std::string& param, const Expression& integrand,
                                    const Env& extra_env, Warnings* warnings) {
    if (trajectories.empty())
        throw Error(ErrorKind::NoOrbits, "no trajectories to average over");

    ZeroAverageResult out;
    for (const auto& trj : trajectories) {
        double c = 0;
        bool found = false;
        for (const auto& [name, value] : trj.params) {
            if (name == param) {
                c = value;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorKind::UnknownName,
                        "parameter '" + param + "' not carried by trajectory "
                            + trj.source_label);
        out.c.push_back(c);
        out.J.push_back(average_over_orbit(trj, integrand, extra_env, warnings));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < out.J.size(); ++i)
        if (std::abs(out.J[i]) < std::abs(out.J[best])) best = i;
    out.label = trajectories[best].source_label;
    return out;
}

Surface build_manifold(std::span<const Trajectory> trajectories,
                       std::span<const std::string> vars,
                       std::span<const std::string> pars) {
    if (trajectories.empty())
        throw Error(ErrorKind::NoOrbits, "no trajectories to concatenate");

    const std::size_t n_samples = trajectories.front().t.size();
    for (const auto& trj : trajectories)
        if (trj.t.size() != n_samples)
            throw Error(ErrorKind::GridLengthMismatch,
                        trj.source_label + " has " + std::to_string(trj.t.size())
                            + " samples, expected " + std::to_string(n_samples));

    Surface surface;
    surface.n_samples = n_samples;
    surface.n_trajectories = trajectories.size();

    for (const auto& var : vars) {
        std::vector<std::vector<double>> cols;
        cols.reserve(trajectories.size());
        for (const auto& trj : trajectories) {
            const auto* samples = trj.sample(var);
            if (!samples)
                throw Error(ErrorKind::UnknownName,
                            "variable '" + var + "' not present in " + trj.source_label);
            cols.push_back(*samples);
        }
        surface.fields.emplace_back(var, std::move(cols));
    }
    for (const auto& par : pars) {
        std::vector<std::vector<double>> cols;
        cols.reserve(trajectories.size());
        for (const auto& trj : trajectories) {
            double value = 0;
            bool found = false;
            for (const auto& [name, v] : trj.params) {
                if (name == par) {
                    value = v;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error(ErrorKind::UnknownName,
                            "parameter '" + par + "' not carried by " + trj.source_label);
            cols.emplace_back(n_samples, value);
        }
        surface.fields.emplace_back(par, std::move(cols));
    }
    return surface;
}

std::vector<std::pair<std::string, std::vector<double>>>
slow_manifold_projection(std::span<const Trajectory> trajectories,
                         std::span<const std::string> vars) {
    auto surface = build_manifold(trajectories, vars);
    std::vector<std::pair<std::string, std::vector<double>>> out;
    for (const auto& [name, cols] : surface.fields) {
        std::vector<double> last;
        last.reserve(cols.size());
        for (const auto& col : cols) last.push_back(col.back());
        out.emplace_back(name, std::move(last));
    }
    return out;
}

} // namespace xpp
