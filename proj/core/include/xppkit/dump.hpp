#ifndef XPPKIT_DUMP_HPP
#define XPPKIT_DUMP_HPP

#include <string>
#include <vector>

#include "xppkit/analysis.hpp"
#include "xppkit/autorepo.hpp"
#include "xppkit/tables.hpp"

namespace xpp {

// Loss-free JSON dumps (schema in docs/formats.md).
std::string dump_json(const AutoRepo& repo);
std::string dump_json(const SimulationTable& table);
std::string dump_json(const Surface& surface);
std::string dump_json(const std::vector<std::pair<std::string, std::vector<double>>>& curves);

AutoRepo autorepo_from_json(const std::string& text);

// CSV flattenings, one structure per call, header row first.
std::string csv_of_table(const SimulationTable& table);
std::string csv_of_branch(const Branch& branch, const std::vector<std::string>& hot,
                          const std::vector<std::string>& dynamical);
std::string csv_of_trajectory(const Trajectory& trj);
std::string csv_of_surface_field(const std::string& name,
                                 const std::vector<std::vector<double>>& columns);

} // namespace xpp

#endif
