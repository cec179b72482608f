#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "paramcont/builder.hpp"
#include "paramcont/spaces.hpp"
#include "paramcont/verify.hpp"

using namespace paramcont;

namespace {

SampledSpace grid_line(int m) {
    GridSpec spec;
    spec.bounds = {{0.0, 1.0}};
    spec.resolution = {m};
    return grid_box(spec);
}

// Independent straight-line evaluation of the truncated Urysohn series at one
// node, given the distances to the zero set for every node.
double series_oracle(const std::vector<double>& dist_f, int x,
                     const std::vector<std::vector<double>>& metric, int terms) {
    double f = 0.0;
    double weight = 1.0;
    const int n = static_cast<int>(dist_f.size());
    for (int term = 1; term <= terms; ++term) {
        weight *= 0.5;
        std::vector<int> complement;
        for (int y = 0; y < n; ++y) {
            if (dist_f[y] >= 1.0 / term) complement.push_back(y);
        }
        double fn;
        if (dist_f[x] == 0.0) {
            fn = 0.0;
        } else if (complement.empty()) {
            fn = 1.0;
        } else {
            double dc = std::numeric_limits<double>::infinity();
            for (int y : complement) dc = std::min(dc, metric[x][y]);
            fn = dist_f[x] / (dist_f[x] + dc);
        }
        f += weight * fn;
    }
    return f;
}

}  // namespace

TEST_CASE("build_urysohn_pair: total indifference gives the zero function") {
    const SampledSpace space = grid_line(4);
    const PreferenceField field = PreferenceField::empty(4, 2);
    const UtilityField u = build_urysohn_pair(field, space);
    CHECK(u.provenance == Provenance::Urysohn);
    for (int x = 0; x < 4; ++x) {
        CHECK(u.values[0][x] == 0.0);
        CHECK(u.values[1][x] == 0.0);
    }
}

TEST_CASE("build_urysohn_pair: frozen series value at an isolated strict node") {
    const SampledSpace space = grid_line(5);
    PreferenceField field = PreferenceField::empty(5, 2);
    field.set_strict(4, 0, 1);  // a < b exactly at x = 1.0
    const UtilityField u = build_urysohn_pair(field, space);

    std::vector<double> dist_f(5);  // F = {0, 0.25, 0.5, 0.75}
    for (int x = 0; x < 5; ++x) {
        double best = std::numeric_limits<double>::infinity();
        for (int y = 0; y < 4; ++y) best = std::min(best, space.dist(x, y));
        dist_f[x] = best;
    }
    const double expected = series_oracle(dist_f, 4, *space.metric, 32);
    CHECK(expected == doctest::Approx(1.0 - std::ldexp(1.0, -32)).epsilon(1e-15));
    CHECK(u.values[1][4] == doctest::Approx(expected).epsilon(1e-15));
    for (int x = 0; x < 4; ++x) CHECK(u.values[1][x] == 0.0);
}

TEST_CASE("build_urysohn_pair: sign pattern matches the preference field") {
    const SampledSpace space = grid_line(9);
    PreferenceField field = PreferenceField::empty(9, 2);
    for (int x = 0; x < 9; ++x) {
        const double t = space.nodes[x].coords[0];
        if (t < 0.3) field.set_strict(x, 0, 1);
        if (t > 0.8) field.set_strict(x, 1, 0);
    }
    const UtilityField u = build_urysohn_pair(field, space);
    for (int x = 0; x < 9; ++x) {
        const double diff = u.values[1][x] - u.values[0][x];
        if (field.strict_at(x, 0, 1)) CHECK(diff > 0.0);
        if (field.strict_at(x, 1, 0)) CHECK(diff < 0.0);
        if (field.indiff_at(x, 0, 1)) CHECK(diff == 0.0);
    }
    CHECK(check_representation(u, field).passed);
}

TEST_CASE("build_urysohn_pair preconditions") {
    const SampledSpace space = grid_line(3);
    CHECK_THROWS_AS(build_urysohn_pair(PreferenceField::empty(3, 3), space), InputError);

    PreferenceField sym = PreferenceField::empty(3, 2);
    sym.set_strict(0, 0, 1);
    sym.set_strict(0, 1, 0);
    CHECK_THROWS_AS(build_urysohn_pair(sym, space), InputError);

    SplitSpec sspec;
    sspec.resolution = 3;
    const SampledSpace split = split_interval(sspec);  // no metric
    CHECK_THROWS_AS(build_urysohn_pair(PreferenceField::empty(6, 2), split), InputError);
}

TEST_CASE("compute_envelopes basic cases") {
    const SampledSpace space = line_window_space(2);
    UtilityField partial;
    partial.values = {{0.0, 0.0}, {1.0, 1.0}};
    const std::vector<int> prior = {0, 1};

    // 2 ~ 1 at node 0: both envelopes touch U(1, .).
    PreferenceField tie = PreferenceField::empty(2, 3);
    tie.set_strict(0, 0, 2);
    tie.set_strict(1, 0, 2);
    const EnvelopePair env_tie = compute_envelopes(2, prior, partial, tie, space);
    CHECK(env_tie.g[0] == ExtReal::finite(1.0));
    CHECK(env_tie.h[0] == ExtReal::finite(1.0));
    CHECK(env_tie.strict_mask[0] == 0);

    // 0 < 2 < 1: strictly sandwiched.
    PreferenceField mid = PreferenceField::empty(2, 3);
    for (int x = 0; x < 2; ++x) {
        mid.set_strict(x, 0, 2);
        mid.set_strict(x, 2, 1);
        mid.set_strict(x, 0, 1);
    }
    const EnvelopePair env_mid = compute_envelopes(2, prior, partial, mid, space);
    CHECK(env_mid.g[0] == ExtReal::finite(0.0));
    CHECK(env_mid.h[0] == ExtReal::finite(1.0));
    CHECK(env_mid.strict_mask[0] == 1);

    // j top-ranked: empty upper contact set.
    PreferenceField top = PreferenceField::empty(2, 3);
    for (int x = 0; x < 2; ++x) {
        top.set_strict(x, 0, 2);
        top.set_strict(x, 1, 2);
        top.set_strict(x, 0, 1);
    }
    const EnvelopePair env_top = compute_envelopes(2, prior, partial, top, space);
    CHECK(env_top.g[0] == ExtReal::finite(1.0));
    CHECK(env_top.h[0] == ExtReal::pos_inf());
}

TEST_CASE("compute_envelopes reports sandwich inconsistencies") {
    const SampledSpace space = line_window_space(2);
    UtilityField partial;
    partial.values = {{0.0, 0.0}, {1.0, 1.0}};
    // 1 weakly below 2 and 2 weakly below 0 forces g = 1 > 0 = h at node 0.
    PreferenceField bad = PreferenceField::empty(2, 3);
    bad.set_strict(0, 1, 2);
    bad.set_strict(0, 2, 0);
    CHECK_THROWS_AS(compute_envelopes(2, {0, 1}, partial, bad, space), EnvelopeError);
}

TEST_CASE("insert_between: collapsed node is pinned exactly") {
    const SampledSpace space = line_window_space(3);
    EnvelopePair env;
    env.g = {ExtReal::finite(1.0), ExtReal::finite(1.0), ExtReal::finite(1.0)};
    env.h = env.g;
    env.strict_mask = {0, 0, 0};
    const std::vector<double> f = insert_between(env, space);
    for (double v : f) CHECK(v == 1.0);
}

TEST_CASE("insert_between: 3-node hand trace of clamp and midpoint") {
    const SampledSpace space = line_window_space(3);
    EnvelopePair env;
    env.g = {ExtReal::neg_inf(), ExtReal::finite(0.0), ExtReal::neg_inf()};
    env.h = {ExtReal::pos_inf(), ExtReal::finite(0.0), ExtReal::finite(2.0)};
    env.strict_mask = {1, 0, 1};

    BuildConfig cfg;
    cfg.smoothing_rounds = 0;
    // M = 3, clamped envelopes (-3,0,-3) / (3,0,2), midpoints (0,0,-0.5); the
    // gamma-boxes [-1.5,1.5] and [-1.75,0.75] leave the midpoints in place.
    const std::vector<double> f0 = insert_between(env, space, cfg);
    CHECK(f0[0] == doctest::Approx(0.0));
    CHECK(f0[1] == 0.0);
    CHECK(f0[2] == doctest::Approx(-0.5));

    cfg.smoothing_rounds = 10;
    const std::vector<double> f = insert_between(env, space, cfg);
    CHECK(f[0] >= -1.5);
    CHECK(f[0] <= 1.5);
    CHECK(f[1] == 0.0);  // pinned through every round
    CHECK(f[2] >= -1.75);
    CHECK(f[2] <= 0.75);
}

TEST_CASE("insert_between confines strict nodes to the gamma box every round") {
    const SampledSpace space = line_window_space(5);
    EnvelopePair env;
    env.g.assign(5, ExtReal::finite(0.0));
    env.h.assign(5, ExtReal::finite(1.0));
    env.strict_mask.assign(5, 1);
    for (int rounds = 0; rounds <= 12; ++rounds) {
        BuildConfig cfg;
        cfg.smoothing_rounds = rounds;
        for (double v : insert_between(env, space, cfg)) {
            CHECK(v >= 0.25);
            CHECK(v <= 0.75);
        }
    }
}

TEST_CASE("build_representation: J=1 sits at zero") {
    const SampledSpace space = grid_line(3);
    const UtilityField u = build_representation(PreferenceField::empty(3, 1), space);
    CHECK(u.alt_count() == 1);
    for (double v : u.values[0]) CHECK(v == 0.0);
}

TEST_CASE("build_representation: J=2 sign pattern agrees with the Urysohn pair") {
    const SampledSpace space = grid_line(7);
    PreferenceField field = PreferenceField::empty(7, 2);
    for (int x = 0; x < 7; ++x) {
        const double t = space.nodes[x].coords[0];
        if (t < 0.4) field.set_strict(x, 0, 1);
        if (t > 0.7) field.set_strict(x, 1, 0);
    }
    const UtilityField uu = build_urysohn_pair(field, space);
    const UtilityField ui = build_representation(field, space);
    CHECK(ui.provenance == Provenance::Inductive);
    for (int x = 0; x < 7; ++x) {
        auto sign = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
        CHECK(sign(uu.values[1][x] - uu.values[0][x]) ==
              sign(ui.values[1][x] - ui.values[0][x]));
    }
}

TEST_CASE("build_representation: hand-traced J=3 instance on two nodes") {
    // Two isolated nodes: chain 0 < 1 < 2 at node 0, total indifference at 1.
    SampledSpace space;
    space.perfectly_normal = true;
    for (int i = 0; i < 2; ++i) {
        SpaceNode node;
        node.id = i;
        node.coords = {static_cast<double>(i)};
        node.neighborhoods = {{i}, {i}, {i}};
        space.nodes.push_back(std::move(node));
    }
    PreferenceField field = PreferenceField::empty(2, 3);
    field.set_strict(0, 0, 1);
    field.set_strict(0, 1, 2);
    field.set_strict(0, 0, 2);

    BuildTrace trace;
    const UtilityField u = build_representation(field, space, {}, &trace);
    // Step 1 inserts alt 1 above 0 (midpoint of [0, M]); step 2 above both.
    CHECK(u.values[0][0] == 0.0);
    CHECK(u.values[1][0] == doctest::Approx(0.5));
    CHECK(u.values[2][0] == doctest::Approx(1.0));
    CHECK(u.values[0][1] == 0.0);
    CHECK(u.values[1][1] == 0.0);
    CHECK(u.values[2][1] == 0.0);
    CHECK(trace.envelope_nodes == 4);
    CHECK(trace.sandwich_violations == 0);
    CHECK(trace.collapse_mismatches == 0);
    CHECK(represents_at(u, field, 0));
    CHECK(represents_at(u, field, 1));
}

TEST_CASE("build_representation honors the enumeration order and rejects bad ones") {
    const SampledSpace space = grid_line(3);
    PreferenceField field = PreferenceField::empty(3, 3);
    for (int x = 0; x < 3; ++x) {
        field.set_strict(x, 0, 1);
        field.set_strict(x, 1, 2);
        field.set_strict(x, 0, 2);
    }
    BuildConfig cfg;
    cfg.enumeration_order = {2, 0, 1};
    const UtilityField u = build_representation(field, space, cfg);
    for (int x = 0; x < 3; ++x) CHECK(represents_at(u, field, x));
    CHECK(u.values[2][0] == 0.0);  // first in the enumeration sits at zero

    cfg.enumeration_order = {0, 0, 1};
    CHECK_THROWS_AS(build_representation(field, space, cfg), InputError);
    cfg.enumeration_order = {0, 1};
    CHECK_THROWS_AS(build_representation(field, space, cfg), InputError);
}

TEST_CASE("build_representation preconditions name the failing axiom") {
    const SampledSpace space = grid_line(2);
    PreferenceField nt = PreferenceField::empty(2, 3);
    nt.set_strict(0, 0, 1);  // NT fails via unrelated alternative 2
    try {
        build_representation(nt, space);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("NT") != std::string::npos);
    }

    SplitSpec tspec;
    tspec.resolution = 2;
    tspec.layers = SplitSpec::Layers::Three;
    const SampledSpace triple = triple_split(tspec);
    CHECK_THROWS_AS(build_representation(PreferenceField::empty(6, 2), triple),
                    InputError);  // not perfectly normal
}
