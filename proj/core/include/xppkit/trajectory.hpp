#ifndef XPPKIT_TRAJECTORY_HPP
#define XPPKIT_TRAJECTORY_HPP

#include <string>
#include <utility>
#include <vector>

namespace xpp {

/// A periodic orbit or BVP solution attached to a labeled point.
/// `t` is the normalized-by-period time grid on [0,1].
struct Trajectory {
    std::vector<double> t;
    // dynamical-variable name -> samples, same length as t
    std::vector<std::pair<std::string, std::vector<double>>> samples;
    // hot-parameter snapshot at the labeled point
    std::vector<std::pair<std::string, double>> params;
    double period = 0.0;
    std::string source_label; // PTi_TYP name of the owning labeled point

    const std::vector<double>* sample(const std::string& name) const {
        for (const auto& [n, v] : samples)
            if (n == name) return &v;
        return nullptr;
    }
    bool has_param(const std::string& name) const {
        for (const auto& [n, v] : params)
            if (n == name) return true;
        return false;
    }

    bool operator==(const Trajectory&) const = default;
};

} // namespace xpp

#endif
