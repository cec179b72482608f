#pragma once

#include "paramcont/axioms.hpp"
#include "paramcont/core.hpp"

namespace paramcont {

/// Finite-resolution continuity measurements of a utility field.
struct ModulusReport {
    std::vector<double> innermost_osc;               // per alternative, max over nodes
    std::vector<std::vector<double>> per_depth_osc;  // [alternative][depth]
    int worst_node = -1;  // node attaining the overall innermost maximum
};

struct ObstructionReport {
    int resolution = 0;
    double gap = 0.0;  // max achievable min |f| over the target nodes
    std::vector<std::pair<int, double>> series;  // (resolution, gap)
    std::vector<double> node_bounds;             // max |f| per node
    std::vector<int> forced_zero;  // nodes that must carry f = 0 despite lying
                                   // off the indifference set
    bool obstructed = false;
    std::string note;
};

AxiomReport check_representation(const UtilityField& u, const PreferenceField& field,
                                 double tolerance = 0.0);

/// Finite analogue of the necessity direction: wherever U passes the
/// continuity check at the given schedule, CD must pass too.
AxiomReport cd_necessity(const UtilityField& u, const PreferenceField& field,
                         const SampledSpace& space, const std::vector<double>& schedule);

ModulusReport modulus_report(const UtilityField& u, const SampledSpace& space);

/// Per-depth max oscillation across all alternatives and nodes; the zero-slack
/// schedule a value function is held to.
std::vector<double> measured_schedule(const UtilityField& u, const SampledSpace& space);

/// Interval propagation: tightest per-node upper bounds on |f| for functions
/// vanishing on `zero_set`, subject to oscillation <= bounds[d] over every
/// depth-d neighborhood of each constraint node. Returns +inf where no
/// constraint chain reaches.
std::vector<double> propagate_gap_bounds(const SampledSpace& space,
                                         const std::vector<char>& zero_set,
                                         const std::vector<char>& constraint_nodes,
                                         const std::vector<double>& bounds);

/// Quantitative obstruction on the triple split: the best achievable
/// middle-layer gap for functions vanishing exactly on I x {0,1}, under an
/// oscillation budget of `osc_rate` per unit base-interval width on the
/// neighborhoods of top-layer nodes. Reports gap(m), gap(2m), gap(4m).
ObstructionReport triple_split_obstruction(int m, double interval_lo, double interval_hi,
                                           double osc_rate);

/// Obstruction demonstration on an arbitrary non-perfectly-normal space with
/// a closed node set F carrying indifference: propagates the schedule bounds
/// and reports nodes forced to zero off F.
ObstructionReport example2_demo(const SampledSpace& space, const std::vector<int>& F,
                                const std::vector<double>& schedule);

}  // namespace paramcont
