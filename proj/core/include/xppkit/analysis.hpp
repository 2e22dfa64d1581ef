#ifndef XPPKIT_ANALYSIS_HPP
#define XPPKIT_ANALYSIS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "xppkit/autorepo.hpp"
#include "xppkit/expr.hpp"
#include "xppkit/trajectory.hpp"

namespace xpp {

/// Eigenvalue exponentials / Floquet multipliers pulled out of a diagram.
struct EigenData {
    // per_branch[b][p][k] = (real, imag) of eigenvalue k at point p of branch b
    std::vector<std::vector<std::vector<std::array<double, 2>>>> per_branch;
    // per_label[r][0] = (branch index, branch index); per_label[r][1..n] = eigenvalues
    std::vector<std::vector<std::array<double, 2>>> per_label;
};

/// When sorted, eigenvalues are ordered by ascending real part per point,
/// ties broken by ascending imaginary part; imaginary parts co-permuted.
EigenData get_eig(const BifurcationDiagram& bd, bool sorted = true);

/// Extracts every orbit-carrying labeled point, in labeled-point order.
/// Throws NoOrbits when none carries one.
std::vector<Trajectory> get_trj(const BifurcationDiagram& bd);

/// (1/T) * trapezoid integral of the integrand over the de-normalized grid
/// t*T. Identifiers resolve against samples, params, T, then extra_env;
/// a collision resolves in favor of the trajectory with a warning.
double average_over_orbit(const Trajectory& trj, const Expression& integrand,
                          const Env& extra_env = {}, Warnings* warnings = nullptr);

struct ZeroAverageResult {
    std::vector<double> c; // per-trajectory value of `param`
    std::vector<double> J; // per-trajectory average
    std::string label;     // source_label of the trajectory minimizing |J|
};

ZeroAverageResult find_zero_average(std::span<const Trajectory> trajectories,
                                    const std::string& param, const Expression& integrand,
                                    const Env& extra_env = {}, Warnings* warnings = nullptr);

/// Trajectory family concatenated into per-field nTS x nS matrices
/// (sample-index by trajectory-index); columns of parameter matrices are
/// constant.
struct Surface {
    std::size_t n_samples = 0;      // nTS
    std::size_t n_trajectories = 0; // nS
    // field name -> columns[j] = trajectory j (each of length nTS)
    std::vector<std::pair<std::string, std::vector<std::vector<double>>>> fields;

    const std::vector<std::vector<double>>* field(const std::string& name) const;
};

Surface build_manifold(std::span<const Trajectory> trajectories,
                       std::span<const std::string> vars,
                       std::span<const std::string> pars = {});

/// Terminal values only: for each variable, the last sample of every
/// trajectory (length nS).
std::vector<std::pair<std::string, std::vector<double>>>
slow_manifold_projection(std::span<const Trajectory> trajectories,
                         std::span<const std::string> vars);

} // namespace xpp

#endif
