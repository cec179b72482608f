#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "paramcont/builder.hpp"
#include "paramcont/maxtheorem.hpp"
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

// Two nodes, each seeing both in every neighborhood.
SampledSpace glued_pair() {
    SampledSpace space;
    space.perfectly_normal = true;
    for (int i = 0; i < 2; ++i) {
        SpaceNode node;
        node.id = i;
        node.coords = {static_cast<double>(i)};
        node.neighborhoods = {{0, 1}, {0, 1}, {0, 1}};
        space.nodes.push_back(std::move(node));
    }
    return space;
}

}  // namespace

TEST_CASE("check_representation accepts builder output and flags corruptions") {
    const SampledSpace space = grid_line(5);
    PreferenceField field = PreferenceField::empty(5, 3);
    for (int x = 0; x < 5; ++x) {
        field.set_strict(x, 0, 1);
        field.set_strict(x, 1, 2);
        field.set_strict(x, 0, 2);
    }
    UtilityField u = build_representation(field, space);
    CHECK(check_representation(u, field).passed);

    u.values[1][2] = u.values[0][2];  // tie where 0 < 1 is stored
    const AxiomReport report = check_representation(u, field);
    CHECK_FALSE(report.passed);
    REQUIRE_FALSE(report.witnesses.empty());
    CHECK(report.witnesses[0].node == 2);
}

TEST_CASE("check_representation: reversed field witnesses every strict pair") {
    UtilityField u;
    u.values = {{0.0, 0.0}, {1.0, 1.0}};
    PreferenceField reversed = PreferenceField::empty(2, 2);
    reversed.set_strict(0, 1, 0);
    reversed.set_strict(1, 1, 0);
    const AxiomReport report = check_representation(u, reversed);
    CHECK(report.witnesses.size() == 2);
}

TEST_CASE("cd_necessity: built U on a grid satisfies the implication") {
    const SampledSpace space = grid_line(6);
    PreferenceField field = PreferenceField::empty(6, 2);
    for (int x = 0; x < 3; ++x) field.set_strict(x, 0, 1);
    const UtilityField u = build_representation(field, space);
    const std::vector<double> schedule = measured_schedule(u, space);
    CHECK(cd_necessity(u, field, space, schedule).passed);
}

TEST_CASE("cd_necessity contrapositive on a sign-crossing jump") {
    const SampledSpace space = glued_pair();
    PreferenceField field = PreferenceField::empty(2, 2);
    field.set_strict(0, 1, 0);  // U(b,.) - U(a,.) = (-1, +1)
    field.set_strict(1, 0, 1);
    UtilityField u;
    u.values = {{0.0, 0.0}, {-1.0, 1.0}};
    // CD fails at both nodes, but U is discontinuous there under the
    // schedule, so the implication "U continuous => CD" has no witness.
    CHECK_FALSE(check_cd(field, space).passed);
    CHECK(cd_necessity(u, field, space, {0.5, 0.5, 0.5}).passed);

    // Constant U and constant preferences: both sides pass.
    UtilityField flat;
    flat.values = {{0.0, 0.0}, {1.0, 1.0}};
    PreferenceField constant = PreferenceField::empty(2, 2);
    constant.set_strict(0, 0, 1);
    constant.set_strict(1, 0, 1);
    CHECK(check_cd(constant, space).passed);
    CHECK(cd_necessity(flat, constant, space, {0.5, 0.5, 0.5}).passed);
}

TEST_CASE("modulus_report: constant field has zero oscillation") {
    const SampledSpace space = grid_line(4);
    UtilityField u;
    u.values = {{1.0, 1.0, 1.0, 1.0}};
    const ModulusReport report = modulus_report(u, space);
    CHECK(report.innermost_osc == std::vector<double>{0.0});
    for (double v : report.per_depth_osc[0]) CHECK(v == 0.0);
}

TEST_CASE("modulus_report: coordinate function oscillates by one step per window") {
    const int m = 5;
    const SampledSpace space = grid_line(m);
    UtilityField u;
    u.values.resize(1);
    for (int x = 0; x < m; ++x) u.values[0].push_back(space.nodes[x].coords[0]);
    const ModulusReport report = modulus_report(u, space);
    // The radius-r ball spans one lattice step each way; the innermost balls
    // are singletons.
    CHECK(report.per_depth_osc[0][0] == doctest::Approx(0.5));
    CHECK(report.innermost_osc[0] == 0.0);
}

TEST_CASE("modulus_report: oscillation is monotone in neighborhood depth") {
    const SampledSpace space = line_window_space(9);
    UtilityField u;
    u.values.resize(1);
    for (int x = 0; x < 9; ++x) u.values[0].push_back(std::sin(2.5 * x));
    const ModulusReport report = modulus_report(u, space);
    for (std::size_t d = 1; d < report.per_depth_osc[0].size(); ++d) {
        CHECK(report.per_depth_osc[0][d] <= report.per_depth_osc[0][d - 1]);
    }
}

TEST_CASE("measured_schedule is the tightest passing schedule") {
    const SampledSpace space = line_window_space(7);
    UtilityField u;
    u.values.resize(2);
    for (int x = 0; x < 7; ++x) {
        u.values[0].push_back(0.3 * x);
        u.values[1].push_back(std::cos(1.7 * x));
    }
    const std::vector<double> schedule = measured_schedule(u, space);
    for (int a = 0; a < 2; ++a) {
        CHECK(check_value_continuity(u.values[a], space, schedule).passed);
    }
    // Shaving any depth breaks at least one alternative.
    for (int d = 0; d < space.depth(); ++d) {
        std::vector<double> shaved = schedule;
        shaved[d] -= 1e-9;
        bool any_fail = false;
        for (int a = 0; a < 2; ++a) {
            any_fail = any_fail ||
                       !check_value_continuity(u.values[a], space, shaved).passed;
        }
        CHECK(any_fail);
    }
}

TEST_CASE("propagate_gap_bounds: hand instance") {
    const SampledSpace space = line_window_space(4);
    std::vector<char> zero = {1, 0, 0, 0};
    std::vector<char> constraint = {1, 1, 1, 1};
    const std::vector<double> u =
        propagate_gap_bounds(space, zero, constraint, {3.0, 2.0, 1.0});
    CHECK(u[0] == 0.0);
    // Node 1 sits in node 0's innermost window: at most 0 + 1. Node 2 shares
    // node 1's innermost window with node 0, so it is also capped at 0 + 1,
    // and node 3 at one more innermost budget above that.
    CHECK(u[1] == doctest::Approx(1.0));
    CHECK(u[2] == doctest::Approx(1.0));
    CHECK(u[3] == doctest::Approx(2.0));
}

TEST_CASE("triple_split_obstruction: hand value at m=3, I=[0.5,1], beta=0.1") {
    const ObstructionReport report = triple_split_obstruction(3, 0.5, 1.0, 0.1);
    CHECK(report.resolution == 3);
    CHECK(report.gap == doctest::Approx(0.05));
    REQUIRE(report.series.size() == 3);
    CHECK(report.series[0].first == 3);
    CHECK(report.series[1].first == 6);
    CHECK(report.series[2].first == 12);
    CHECK(report.series[1].second <= report.series[0].second);
    CHECK(report.series[2].second <= report.series[1].second);
    CHECK(report.obstructed);
}

TEST_CASE("triple_split_obstruction: zero schedule forces a zero gap") {
    const ObstructionReport report = triple_split_obstruction(4, 0.3, 0.9, 0.0);
    CHECK(report.gap == 0.0);
    CHECK_FALSE(report.forced_zero.empty());
}

TEST_CASE("triple_split_obstruction rejects intervals with fewer than 2 samples") {
    CHECK_THROWS_AS(triple_split_obstruction(3, 0.1, 0.2, 0.1), InputError);
}

TEST_CASE("example2_demo flags forced zeros on the triple split") {
    SplitSpec spec;
    spec.resolution = 5;
    spec.layers = SplitSpec::Layers::Three;
    const SampledSpace space = triple_split(spec);
    // F = I x {0, 1} for I = [0.25, 0.75]: columns 1..3.
    std::vector<int> F;
    for (int i = 1; i <= 3; ++i) {
        F.push_back(3 * i);
        F.push_back(3 * i + 2);
    }
    const ObstructionReport report = example2_demo(space, F, {0.0, 0.0, 0.0});
    CHECK(report.obstructed);
    // Middle-layer nodes over the interior of I are forced to zero.
    bool middle_forced = false;
    for (int x : report.forced_zero) middle_forced = middle_forced || x == 3 * 2 + 1;
    CHECK(middle_forced);

    // Positive-control direction: a singleton F on the isolated middle layer
    // obstructs nothing.
    const ObstructionReport isolated = example2_demo(space, {3 * 2 + 1}, {0.1, 0.1, 0.1});
    CHECK_FALSE(isolated.obstructed);

    GridSpec gspec;
    gspec.bounds = {{0.0, 1.0}};
    gspec.resolution = {4};
    const SampledSpace grid = grid_box(gspec);
    CHECK_THROWS_AS(example2_demo(grid, {0}, {0.1, 0.1, 0.1}), InputError);
}
