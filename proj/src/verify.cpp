#include "paramcont/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paramcont/spaces.hpp"

namespace paramcont {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double oscillation(const std::vector<double>& values, const std::vector<int>& nodes) {
    double lo = kInf, hi = -kInf;
    for (int y : nodes) {
        lo = std::min(lo, values[y]);
        hi = std::max(hi, values[y]);
    }
    return hi - lo;
}

}  // namespace

AxiomReport check_representation(const UtilityField& u, const PreferenceField& field,
                                 double tolerance) {
    AxiomReport report;
    report.axiom = Axiom::Representation;
    if (u.alt_count() != field.alt_count || u.node_count() != field.node_count()) {
        throw InputError("utility field and preference field shapes differ");
    }
    const int J = field.alt_count;
    for (int x = 0; x < field.node_count(); ++x) {
        for (int a = 0; a < J; ++a) {
            for (int b = a + 1; b < J; ++b) {
                const double diff = u.values[b][x] - u.values[a][x];
                if (field.strict_at(x, a, b) && !(diff > tolerance)) {
                    report.witnesses.push_back(
                        {x, a, b, -1, -1, "a<b stored but U(b)-U(a) not positive"});
                } else if (field.strict_at(x, b, a) && !(-diff > tolerance)) {
                    report.witnesses.push_back(
                        {x, b, a, -1, -1, "b<a stored but U(a)-U(b) not positive"});
                } else if (field.indiff_at(x, a, b) && std::fabs(diff) > tolerance) {
                    report.witnesses.push_back(
                        {x, a, b, -1, -1, "indifference stored but values differ"});
                }
            }
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

AxiomReport cd_necessity(const UtilityField& u, const PreferenceField& field,
                         const SampledSpace& space, const std::vector<double>& schedule) {
    AxiomReport report;
    report.axiom = Axiom::CdNecessity;
    if (static_cast<int>(schedule.size()) != space.depth()) {
        throw InputError("schedule length must equal neighborhood depth");
    }
    const AxiomReport cd = check_cd(field, space);
    std::vector<char> cd_fails(space.node_count(), 0);
    for (const Witness& w : cd.witnesses) cd_fails[w.node] = 1;

    for (int x = 0; x < space.node_count(); ++x) {
        bool u_continuous = true;
        const auto& nbs = space.nodes[x].neighborhoods;
        for (int a = 0; a < u.alt_count() && u_continuous; ++a) {
            for (std::size_t d = 0; d < nbs.size(); ++d) {
                if (oscillation(u.values[a], nbs[d]) > schedule[d]) {
                    u_continuous = false;
                    break;
                }
            }
        }
        if (u_continuous && cd_fails[x]) {
            report.witnesses.push_back(
                {x, -1, -1, -1, -1, "U continuous at node yet CD fails there"});
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

ModulusReport modulus_report(const UtilityField& u, const SampledSpace& space) {
    if (u.node_count() != space.node_count()) {
        throw InputError("utility field and space node counts differ");
    }
    ModulusReport report;
    const int A = u.alt_count();
    const int depth = space.depth();
    report.innermost_osc.assign(A, 0.0);
    report.per_depth_osc.assign(A, std::vector<double>(depth, 0.0));
    double overall = -1.0;
    for (int a = 0; a < A; ++a) {
        for (int x = 0; x < space.node_count(); ++x) {
            const auto& nbs = space.nodes[x].neighborhoods;
            for (int d = 0; d < depth; ++d) {
                const double osc = oscillation(u.values[a], nbs[d]);
                report.per_depth_osc[a][d] = std::max(report.per_depth_osc[a][d], osc);
            }
            const double inner = oscillation(u.values[a], nbs.back());
            if (inner > report.innermost_osc[a]) report.innermost_osc[a] = inner;
            if (inner > overall) {
                overall = inner;
                report.worst_node = x;
            }
        }
    }
    return report;
}

std::vector<double> measured_schedule(const UtilityField& u, const SampledSpace& space) {
    const ModulusReport report = modulus_report(u, space);
    std::vector<double> schedule(space.depth(), 0.0);
    for (const auto& row : report.per_depth_osc) {
        for (std::size_t d = 0; d < row.size(); ++d) {
            schedule[d] = std::max(schedule[d], row[d]);
        }
    }
    return schedule;
}

std::vector<double> propagate_gap_bounds(const SampledSpace& space,
                                         const std::vector<char>& zero_set,
                                         const std::vector<char>& constraint_nodes,
                                         const std::vector<double>& bounds) {
    const int n = space.node_count();
    if (static_cast<int>(bounds.size()) != space.depth()) {
        throw InputError("bounds length must equal neighborhood depth");
    }
    std::vector<double> u(n, kInf);
    for (int x = 0; x < n; ++x) {
        if (zero_set[x]) u[x] = 0.0;
    }
    // Bellman-Ford style sweeps to the fixpoint: within any constrained
    // neighborhood, no value may exceed the neighborhood minimum plus its
    // oscillation budget.
    bool changed = true;
    int guard = 0;
    while (changed && guard++ <= n * space.depth() + 2) {
        changed = false;
        for (int c = 0; c < n; ++c) {
            if (!constraint_nodes[c]) continue;
            const auto& nbs = space.nodes[c].neighborhoods;
            for (std::size_t d = 0; d < nbs.size(); ++d) {
                double mn = kInf;
                for (int y : nbs[d]) mn = std::min(mn, u[y]);
                if (mn == kInf) continue;
                const double cap = mn + bounds[d];
                for (int y : nbs[d]) {
                    if (u[y] > cap) {
                        u[y] = cap;
                        changed = true;
                    }
                }
            }
        }
    }
    return u;
}

ObstructionReport triple_split_obstruction(int m, double interval_lo, double interval_hi,
                                           double osc_rate) {
    if (m < 2) throw InputError("triple_split_obstruction: m < 2");
    if (!(interval_lo < interval_hi)) {
        throw InputError("triple_split_obstruction: degenerate interval");
    }

    auto gap_at = [&](int res, ObstructionReport* fill) {
        SplitSpec spec;
        spec.resolution = res;
        spec.layers = SplitSpec::Layers::Three;
        const SampledSpace space = triple_split(spec);
        const double step = 1.0 / (res - 1);
        const double tol = 1e-9;

        std::vector<char> zero(space.node_count(), 0);
        std::vector<char> constraint(space.node_count(), 0);
        std::vector<int> targets;
        int in_interval = 0;
        for (int i = 0; i < res; ++i) {
            const double t = static_cast<double>(i) / (res - 1);
            const bool inside = t >= interval_lo - tol && t <= interval_hi + tol;
            if (inside) {
                ++in_interval;
                zero[3 * i] = 1;      // (t, 0)
                zero[3 * i + 2] = 1;  // (t, 1)
                targets.push_back(3 * i + 1);
            }
            constraint[3 * i + 2] = 1;  // oscillation budgets bind on the top layer
        }
        if (in_interval < 2) {
            throw InputError(
                "triple_split_obstruction: interval holds fewer than 2 samples at m = " +
                std::to_string(res));
        }

        // Base widths of the declared top-layer neighborhoods: 2 steps, 1
        // step, and the successor column for the innermost pair.
        std::vector<double> bounds(space.depth());
        for (int d = 0; d < space.depth(); ++d) {
            const int k = std::max(space.depth() - 1 - d, 1);
            bounds[d] = osc_rate * k * step;
        }

        const std::vector<double> u =
            propagate_gap_bounds(space, zero, constraint, bounds);
        double gap = kInf;
        for (int t : targets) gap = std::min(gap, u[t]);
        if (fill) {
            fill->resolution = res;
            fill->node_bounds = u;
            for (int x = 0; x < space.node_count(); ++x) {
                if (!zero[x] && u[x] == 0.0) fill->forced_zero.push_back(x);
            }
        }
        return gap;
    };

    ObstructionReport report;
    report.gap = gap_at(m, &report);
    report.series = {{m, report.gap},
                     {2 * m, gap_at(2 * m, nullptr)},
                     {4 * m, gap_at(4 * m, nullptr)}};
    report.obstructed = true;
    report.note =
        "middle-layer gap decays with resolution under a fixed oscillation "
        "rate; no positive gap survives refinement";
    return report;
}

ObstructionReport example2_demo(const SampledSpace& space, const std::vector<int>& F,
                                const std::vector<double>& schedule) {
    if (space.perfectly_normal) {
        throw InputError("example2_demo requires a space flagged perfectly_normal=false");
    }
    if (F.empty() || static_cast<int>(F.size()) >= space.node_count()) {
        throw InputError("example2_demo: F must be nonempty and proper");
    }
    std::vector<char> zero(space.node_count(), 0);
    for (int x : F) {
        if (x < 0 || x >= space.node_count()) {
            throw InputError("example2_demo: unknown node id in F");
        }
        zero[x] = 1;
    }
    std::vector<char> constraint(space.node_count(), 1);
    ObstructionReport report;
    report.resolution = space.node_count();
    report.node_bounds = propagate_gap_bounds(space, zero, constraint, schedule);

    double gap = kInf;
    for (int x = 0; x < space.node_count(); ++x) {
        if (zero[x]) continue;
        gap = std::min(gap, report.node_bounds[x]);
        if (report.node_bounds[x] == 0.0) report.forced_zero.push_back(x);
    }
    report.gap = gap;
    report.obstructed = !report.forced_zero.empty();
    report.note = report.obstructed
                      ? "sign exactness is impossible: some strict-preference node is "
                        "forced to utility difference zero by the schedule"
                      : "best achievable strict-region gap under the schedule";
    return report;
}

}  // namespace paramcont
