#include "paramcont/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paramcont/axioms.hpp"

namespace paramcont {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_config(const BuildConfig& cfg, int alt_count) {
    if (!(cfg.strict_gap_fraction > 0.0 && cfg.strict_gap_fraction < 0.5)) {
        throw InputError("strict_gap_fraction must lie in (0, 0.5)");
    }
    if (cfg.smoothing_rounds < 0) throw InputError("smoothing_rounds must be >= 0");
    if (cfg.urysohn_terms < 1) throw InputError("urysohn_terms must be >= 1");
    if (!cfg.enumeration_order.empty()) {
        std::vector<int> sorted = cfg.enumeration_order;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < alt_count; ++i) {
            if (i >= static_cast<int>(sorted.size()) || sorted[i] != i) {
                throw InputError("enumeration_order is not a permutation");
            }
        }
        if (static_cast<int>(sorted.size()) != alt_count) {
            throw InputError("enumeration_order is not a permutation");
        }
    }
}

// Distance from a node to a sampled node set; +inf for the empty set.
double set_distance(const SampledSpace& space, int node, const std::vector<char>& member) {
    double best = kInf;
    for (int j = 0; j < space.node_count(); ++j) {
        if (member[j]) best = std::min(best, space.dist(node, j));
    }
    return best;
}

// Truncated series sum 2^-n f_n with f_n(x) = d(x,F) / (d(x,F) + d(x, X\G_n)),
// G_n = {x : d(x,F) < 1/n}. Zero exactly on F, positive off it.
std::vector<double> urysohn_series(const SampledSpace& space,
                                   const std::vector<char>& zero_set, int terms) {
    const int n = space.node_count();
    std::vector<double> dist_f(n);
    for (int x = 0; x < n; ++x) dist_f[x] = set_distance(space, x, zero_set);

    std::vector<double> f(n, 0.0);
    double weight = 1.0;
    for (int term = 1; term <= terms; ++term) {
        weight *= 0.5;
        const double radius = 1.0 / term;
        std::vector<char> complement(n, 0);  // X \ G_n
        bool complement_empty = true;
        for (int x = 0; x < n; ++x) {
            if (dist_f[x] >= radius) {
                complement[x] = 1;
                complement_empty = false;
            }
        }
        for (int x = 0; x < n; ++x) {
            double fn;
            if (dist_f[x] == 0.0) {
                fn = 0.0;
            } else if (complement_empty || dist_f[x] == kInf) {
                fn = 1.0;
            } else {
                const double dc = set_distance(space, x, complement);
                fn = dist_f[x] / (dist_f[x] + dc);
            }
            f[x] += weight * fn;
        }
    }
    return f;
}

}  // namespace

UtilityField build_urysohn_pair(const PreferenceField& field, const SampledSpace& space,
                                const BuildConfig& cfg) {
    validate_config(cfg, field.alt_count);
    if (field.alt_count != 2) throw InputError("build_urysohn_pair requires J = 2");
    if (!space.metric || !space.metrizable) {
        throw InputError("build_urysohn_pair requires a metric space");
    }
    if (AxiomReport asy = check_asymmetry(field); !asy.passed) {
        throw InputError("build_urysohn_pair precondition failed: axiom Asy");
    }
    if (AxiomReport cd = check_cd(field, space); !cd.passed) {
        throw InputError("build_urysohn_pair precondition failed: axiom CD");
    }

    const int n = space.node_count();
    std::vector<char> not_ab(n), not_ba(n);  // F sets for the two signed parts
    for (int x = 0; x < n; ++x) {
        not_ab[x] = field.strict_at(x, 0, 1) ? 0 : 1;  // {x : b weakly below a}
        not_ba[x] = field.strict_at(x, 1, 0) ? 0 : 1;
    }
    const std::vector<double> pos = urysohn_series(space, not_ab, cfg.urysohn_terms);
    const std::vector<double> neg = urysohn_series(space, not_ba, cfg.urysohn_terms);

    UtilityField u;
    u.provenance = Provenance::Urysohn;
    u.values.assign(2, std::vector<double>(n, 0.0));
    for (int x = 0; x < n; ++x) {
        if (field.strict_at(x, 0, 1)) {
            u.values[1][x] = pos[x];
        } else if (field.strict_at(x, 1, 0)) {
            u.values[1][x] = -neg[x];
        }
    }
    return u;
}

EnvelopePair compute_envelopes(int j, const std::vector<int>& prior,
                               const UtilityField& partial, const PreferenceField& field,
                               const SampledSpace& space) {
    const int n = space.node_count();
    EnvelopePair env;
    env.g.resize(n);
    env.h.resize(n);
    env.strict_mask.resize(n);
    for (int x = 0; x < n; ++x) {
        ExtReal g = ExtReal::neg_inf();
        ExtReal h = ExtReal::pos_inf();
        for (int k : prior) {
            const ExtReal v = ExtReal::finite(partial.values[k][x]);
            if (field.weak_at(x, k, j) && g < v) g = v;
            if (field.weak_at(x, j, k) && v < h) h = v;
        }
        if (h < g) throw EnvelopeError(x);
        env.g[x] = g;
        env.h[x] = h;
        env.strict_mask[x] = (g < h) ? 1 : 0;
    }
    return env;
}

std::vector<double> insert_between(const EnvelopePair& env, const SampledSpace& space,
                                   const BuildConfig& cfg) {
    const int n = space.node_count();
    const double gamma = cfg.strict_gap_fraction;
    if (!(gamma > 0.0 && gamma < 0.5)) {
        throw InputError("strict_gap_fraction must lie in (0, 0.5)");
    }

    double max_abs = 0.0;
    bool any_finite = false;
    for (int x = 0; x < n; ++x) {
        if (env.g[x].is_finite()) {
            any_finite = true;
            max_abs = std::max(max_abs, std::fabs(env.g[x].value));
        }
        if (env.h[x].is_finite()) {
            any_finite = true;
            max_abs = std::max(max_abs, std::fabs(env.h[x].value));
        }
    }
    const double M = any_finite ? 1.0 + max_abs : 1.0;

    std::vector<double> lo(n), hi(n), f(n);
    for (int x = 0; x < n; ++x) {
        const double gt = env.g[x].is_finite() ? std::max(env.g[x].value, -M) : -M;
        const double ht = env.h[x].is_finite() ? std::min(env.h[x].value, M) : M;
        lo[x] = gt;
        hi[x] = ht;
        f[x] = 0.5 * (gt + ht);
    }

    auto project = [&](int x, double v) {
        if (!env.strict_mask[x]) return lo[x];  // g = h: pinned
        const double delta = gamma * (hi[x] - lo[x]);
        return std::clamp(v, lo[x] + delta, hi[x] - delta);
    };
    for (int x = 0; x < n; ++x) f[x] = project(x, f[x]);

    std::vector<double> next(n);
    for (int round = 0; round < cfg.smoothing_rounds; ++round) {
        for (int x = 0; x < n; ++x) {
            const auto& nb = space.innermost(x);
            double sum = 0.0;
            for (int y : nb) sum += f[y];
            next[x] = project(x, sum / static_cast<double>(nb.size()));
        }
        f.swap(next);
    }
    return f;
}

UtilityField build_representation(const PreferenceField& field, const SampledSpace& space,
                                  const BuildConfig& cfg, BuildTrace* trace) {
    validate_config(cfg, field.alt_count);
    if (field.node_count() != space.node_count()) {
        throw InputError("preference field and space node counts differ");
    }
    if (AxiomReport r = check_asymmetry(field); !r.passed) {
        throw InputError("build_representation precondition failed: axiom Asy (node " +
                         std::to_string(r.witnesses.front().node) + ")");
    }
    if (AxiomReport r = check_negative_transitivity(field); !r.passed) {
        throw InputError("build_representation precondition failed: axiom NT (node " +
                         std::to_string(r.witnesses.front().node) + ")");
    }
    if (AxiomReport r = check_cd(field, space); !r.passed) {
        throw InputError("build_representation precondition failed: axiom CD (node " +
                         std::to_string(r.witnesses.front().node) + ")");
    }
    if (!space.perfectly_normal) {
        throw InputError(
            "build_representation requires a space flagged perfectly_normal");
    }

    const int J = field.alt_count;
    const int n = space.node_count();
    std::vector<int> order = cfg.enumeration_order;
    if (order.empty()) {
        order.resize(J);
        for (int i = 0; i < J; ++i) order[i] = i;
    }

    UtilityField u;
    u.provenance = Provenance::Inductive;
    u.values.assign(J, std::vector<double>(n, 0.0));
    if (J == 0) return u;

    std::vector<int> prior = {order[0]};  // first alternative sits at 0
    for (int step = 1; step < J; ++step) {
        const int j = order[step];
        EnvelopePair env = compute_envelopes(j, prior, u, field, space);
        if (trace) {
            for (int x = 0; x < n; ++x) {
                ++trace->envelope_nodes;
                bool prior_indiff = false;
                for (int k : prior) {
                    if (field.indiff_at(x, k, j)) {
                        prior_indiff = true;
                        break;
                    }
                }
                const bool collapsed = (env.g[x] == env.h[x]);
                if (collapsed != prior_indiff) ++trace->collapse_mismatches;
                if (env.strict_mask[x] && env.g[x].is_finite() && env.h[x].is_finite()) {
                    const double gap = env.h[x].value - env.g[x].value;
                    if (!trace->min_strict_gap_set || gap < trace->min_strict_gap) {
                        trace->min_strict_gap = gap;
                        trace->min_strict_gap_set = true;
                    }
                }
            }
        }
        u.values[j] = insert_between(env, space, cfg);
        prior.push_back(j);
    }
    return u;
}

}  // namespace paramcont
