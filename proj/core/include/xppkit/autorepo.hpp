#ifndef XPPKIT_AUTOREPO_HPP
#define XPPKIT_AUTOREPO_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xppkit/errors.hpp"
#include "xppkit/model.hpp"
#include "xppkit/trajectory.hpp"

namespace xpp {

struct UzCondition {
    int index = 0; // 1..9
    std::string param;
    double threshold = 0.0;
    bool operator==(const UzCondition&) const = default;
};

struct ContinuationSettings {
    int npts = 0;
    // numeric settings in canonical key order (NTST, NPR, ... ymax)
    std::vector<std::pair<std::string, double>> num;
    std::vector<UzCondition> uz;

    std::optional<double> numeric(std::string_view key) const;
    bool operator==(const ContinuationSettings&) const = default;
};

/// Branch classification per the (TPar, TYP) code pairs.
enum class BranchClass { SEQ, UEQ, SLC, ULC, BVP, UZ, SN, SNPO, HB, TR, BP, PD };

/// Type tag of a labeled point.
enum class PointTag { HB = 1, SN, PD, SNPO, TR, EP, UZ };

const char* branch_class_name(BranchClass c);
const char* point_tag_name(PointTag t);

/// One continuation point as stored in the `.auto` stream.
struct ContinuationPoint {
    int branch_no = 0;
    int tpar = 0;
    int typ = 0;
    int lab = 0;      // XPPAUT label; 0 for unlabeled points
    int lab_typ = 0;  // PointTag code when lab != 0, else 0
    int ip1 = 0;      // 1-based hot index of the main continuation parameter
    int ip2 = 0;      // secondary continuation parameter, 0 in 1P runs
    int idx = 0;      // absolute 1-based index within the diagram
    std::vector<double> par_values; // one per hot parameter
    double l2 = 0.0;
    std::optional<double> period; // absent for EQ points

    struct VarStats {
        double initial = 0, upper = 0, lower = 0, average = 0;
        bool operator==(const VarStats&) const = default;
    };
    std::vector<VarStats> u; // one per dynamical variable

    std::vector<double> eig_real;
    std::vector<double> eig_imag;

    bool is_periodic() const { return typ == 3 || typ == 4 || typ == 8; }
    bool operator==(const ContinuationPoint&) const = default;
};

struct Branch {
    BranchClass cls{};
    std::string name; // Bi_CLASS
    std::vector<ContinuationPoint> points;
    bool operator==(const Branch&) const = default;
};

struct LabeledPoint {
    ContinuationPoint point;
    int lab = 0;
    PointTag tag{};
    std::string name;     // PTi_TYP
    int branch_index = 0; // 1-based index of the owning branch
    std::optional<Trajectory> orbit;
    bool operator==(const LabeledPoint&) const = default;
};

struct BifurcationDiagram {
    std::string name;                // BDi_Par1[_Par2]
    std::vector<std::string> params; // 1 or 2 continuation parameter names
    std::vector<std::string> hot;    // hot parameter names (par_values order)
    std::vector<Branch> branches;
    std::vector<LabeledPoint> labeled_points;

    bool is_two_parameter() const { return params.size() == 2; }
    const Branch* branch(std::string_view name) const;
    const LabeledPoint* labeled_point(std::string_view name) const;
    std::size_t point_count() const;
    bool operator==(const BifurcationDiagram&) const = default;
};

struct AutoRepo {
    ContinuationSettings settings;
    std::vector<std::string> hot; // <= 8 hot parameter names
    std::vector<BifurcationDiagram> diagrams;
    std::string report; // parse progress + per-diagram summary

    const BifurcationDiagram* diagram(std::string_view name) const;
    bool operator==(const AutoRepo& o) const {
        return settings == o.settings && hot == o.hot && diagrams == o.diagrams;
    }
};

/// Exact (TPar, TYP) -> CLASS lookup; throws UnknownTypePair otherwise.
BranchClass classify(int tpar, int typ);

/// Maximal runs of consecutive points sharing (tpar, typ); a change of
/// branch_no also forces a split. Branch names restart at B1_ per call.
std::vector<Branch> segment_branches(std::span<const ContinuationPoint> points);

struct DiagramRange {
    std::vector<std::string> params;
    std::size_t begin = 0, end = 0; // [begin, end) into the point stream
};

std::vector<DiagramRange> split_diagrams(std::span<const ContinuationPoint> points,
                                         std::span<const std::string> hot);

/// Raw special-solution record from the third file section.
struct SolutionRecord {
    int label = 0;
    std::vector<double> t;
    std::vector<std::vector<double>> rows; // per sample, one value per dynamical var
};

/// Attaches orbits to LC/BVP labeled points of the eligible diagrams (the
/// last 1P diagram and any 2P diagrams after it). Orphan labels and labels
/// in earlier diagrams produce warnings; a repeated label is an error.
void attach_special_solutions(const Model& model, AutoRepo& repo,
                              const std::vector<SolutionRecord>& solutions,
                              Warnings* warnings = nullptr);

struct ParseAutoOptions {
    bool load_labeled_points = true;
    bool load_trajectories = true;
};

AutoRepo parse_auto(const Model& model, std::string_view source,
                    ParseAutoOptions options = {}, Warnings* warnings = nullptr);

/// Canonical serializer; byte-inverse of parse_auto on canonical files.
std::string serialize_auto(const Model& model, const AutoRepo& repo);

} // namespace xpp

#endif
