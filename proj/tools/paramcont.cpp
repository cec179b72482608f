// paramcont: construct, verify, and exploit utility representations of
// parameter-dependent preferences on sampled spaces.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paramcont/builder.hpp"
#include "paramcont/io.hpp"
#include "paramcont/maxtheorem.hpp"
#include "paramcont/spaces.hpp"
#include "paramcont/verify.hpp"

namespace {

using paramcont::io::Json;

constexpr const char* kVersion = "paramcont 1.0.0";

struct Manifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> input_digests;
    Json config = Json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void add_input(const std::string& path) {
        input_digests.emplace_back(path,
                                   paramcont::io::content_digest(paramcont::io::read_file(path)));
    }

    void emit(const std::string& out_path) const {
        Json j;
        j["artifact"] = kVersion;
        j["command"] = command;
        Json inputs = Json::object();
        for (const auto& [path, digest] : input_digests) inputs[path] = digest;
        j["inputs"] = std::move(inputs);
        j["config"] = config;
        const auto elapsed = std::chrono::steady_clock::now() - start;
        j["duration_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        paramcont::io::save_json(out_path + ".manifest.json", j);
    }
};

void write_output(const Json& j, const std::string& out, const Manifest& manifest) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        paramcont::io::save_json(out, j);
        manifest.emit(out);
    }
}

std::vector<int> parse_order(const std::string& text) {
    std::vector<int> order;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) order.push_back(std::stoi(item));
    }
    return order;
}

int run_space(const std::string& kind, const std::vector<double>& bounds_flat,
              std::vector<int> res, int m, const std::string& a_path,
              const std::string& b_path, const std::string& out, Manifest& manifest) {
    paramcont::SampledSpace space;
    if (kind == "grid") {
        paramcont::GridSpec spec;
        if (bounds_flat.empty() || bounds_flat.size() % 2 != 0) {
            throw paramcont::InputError("grid: --bounds takes lo hi pairs");
        }
        for (std::size_t i = 0; i + 1 < bounds_flat.size(); i += 2) {
            spec.bounds.emplace_back(bounds_flat[i], bounds_flat[i + 1]);
        }
        if (res.empty()) throw paramcont::InputError("grid: --res required");
        spec.resolution = std::move(res);
        space = paramcont::grid_box(spec);
        manifest.config = {{"kind", "grid"}, {"bounds", bounds_flat}, {"res", spec.resolution}};
    } else if (kind == "split" || kind == "triple-split") {
        paramcont::SplitSpec spec;
        spec.resolution = m;
        spec.layers = (kind == "split") ? paramcont::SplitSpec::Layers::Two
                                        : paramcont::SplitSpec::Layers::Three;
        space = (kind == "split") ? paramcont::split_interval(spec)
                                  : paramcont::triple_split(spec);
        manifest.config = {{"kind", kind}, {"m", m}};
    } else if (kind == "product") {
        manifest.add_input(a_path);
        manifest.add_input(b_path);
        const auto s1 = paramcont::io::space_from_json(paramcont::io::load_json(a_path));
        const auto s2 = paramcont::io::space_from_json(paramcont::io::load_json(b_path));
        space = paramcont::product_space(s1, s2);
        manifest.config = {{"kind", "product"}};
    } else {
        throw paramcont::InputError("unknown space kind '" + kind + "'");
    }

    const paramcont::ValidationReport report = paramcont::validate_space(space);
    if (!report.valid()) {
        for (const auto& v : report.violations) std::cerr << "invalid space: " << v << "\n";
        return 1;
    }
    write_output(paramcont::io::space_to_json(space), out, manifest);
    return 0;
}

int run_check(const std::string& space_path, const std::string& prefs_path,
              const std::string& axiom, const std::string& out, Manifest& manifest) {
    manifest.add_input(space_path);
    manifest.add_input(prefs_path);
    const auto space = paramcont::io::space_from_json(paramcont::io::load_json(space_path));
    const auto [field, alts] =
        paramcont::io::prefs_from_json(paramcont::io::load_json(prefs_path));
    manifest.config = {{"axiom", axiom}};

    std::vector<paramcont::AxiomReport> reports;
    if (axiom == "asy" || axiom == "all") reports.push_back(paramcont::check_asymmetry(field));
    if (axiom == "nt" || axiom == "all") {
        reports.push_back(paramcont::check_negative_transitivity(field));
    }
    if (axiom == "cd" || axiom == "all") reports.push_back(paramcont::check_cd(field, space));
    if (axiom == "jc" || axiom == "all") reports.push_back(paramcont::check_jc(field, space));
    if (axiom == "lhc" || axiom == "all") {
        reports.push_back(paramcont::preference_correspondence_lhc(field, space));
    }
    if (reports.empty()) throw paramcont::InputError("unknown axiom '" + axiom + "'");

    Json j = Json::array();
    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        j.push_back(paramcont::io::axiom_report_to_json(r));
    }
    write_output(j, out, manifest);
    return all_passed ? 0 : 1;
}

int run_build(const std::string& space_path, const std::string& prefs_path,
              const std::string& method, const std::string& order, int rounds,
              double gamma, int terms, const std::string& out, Manifest& manifest) {
    manifest.add_input(space_path);
    manifest.add_input(prefs_path);
    const auto space = paramcont::io::space_from_json(paramcont::io::load_json(space_path));
    const auto [field, alts] =
        paramcont::io::prefs_from_json(paramcont::io::load_json(prefs_path));

    paramcont::BuildConfig cfg;
    cfg.smoothing_rounds = rounds;
    cfg.strict_gap_fraction = gamma;
    cfg.urysohn_terms = terms;
    if (!order.empty()) cfg.enumeration_order = parse_order(order);
    manifest.config = {{"method", method},
                       {"order", order},
                       {"rounds", rounds},
                       {"gamma", gamma},
                       {"terms", terms}};

    paramcont::UtilityField u;
    if (method == "urysohn") {
        u = paramcont::build_urysohn_pair(field, space, cfg);
    } else if (method == "inductive") {
        u = paramcont::build_representation(field, space, cfg);
    } else {
        throw paramcont::InputError("unknown build method '" + method + "'");
    }
    write_output(paramcont::io::utility_to_json(u), out, manifest);
    return 0;
}

int run_maximize(const std::string& utility_path, const std::string& space_path,
                 const std::string& constraint, const std::string& grid_path,
                 const std::string& alts_path, double tie_tol, const std::string& out,
                 const std::string& csv, Manifest& manifest) {
    manifest.add_input(utility_path);
    manifest.add_input(space_path);
    const auto space = paramcont::io::space_from_json(paramcont::io::load_json(space_path));
    const auto u = paramcont::io::utility_from_json(paramcont::io::load_json(utility_path));
    manifest.config = {{"constraint", constraint}, {"tie_tolerance", tie_tol}};

    paramcont::Correspondence corr;
    if (constraint == "budget") {
        manifest.add_input(grid_path);
        manifest.add_input(alts_path);
        const auto grid =
            paramcont::io::pw_grid_from_json(paramcont::io::load_json(grid_path));
        const auto alts = paramcont::io::alts_from_json(paramcont::io::load_json(alts_path));
        corr = paramcont::budget_correspondence(grid, alts);
    } else if (constraint == "full") {
        std::vector<int> all(u.alt_count());
        for (int a = 0; a < u.alt_count(); ++a) all[a] = a;
        corr.sets.assign(space.node_count(), all);
    } else {
        throw paramcont::InputError("unknown constraint '" + constraint + "'");
    }

    const auto result = paramcont::value_and_argmax(u, corr, tie_tol);
    const auto schedule = paramcont::measured_schedule(u, space);
    const auto uhc_constraint = paramcont::check_uhc(corr, space);
    const auto uhc_argmax = paramcont::check_uhc(result.argmax, space);
    const auto value_cont =
        paramcont::check_value_continuity(result.value, space, schedule);

    Json j;
    j["V"] = result.value;
    j["C"] = result.argmax.sets;
    j["constraint_sets"] = corr.sets;
    j["reports"] = {{"constraint_uhc", paramcont::io::axiom_report_to_json(uhc_constraint)},
                    {"argmax_uhc", paramcont::io::axiom_report_to_json(uhc_argmax)},
                    {"value_continuity", paramcont::io::axiom_report_to_json(value_cont)}};
    j["schedule"] = schedule;
    write_output(j, out, manifest);
    if (!csv.empty()) {
        paramcont::io::write_file(csv, paramcont::io::value_csv(result.value, space));
    }
    return (uhc_constraint.passed && uhc_argmax.passed && value_cont.passed) ? 0 : 1;
}

int run_demo_lemma(int m, const std::string& out, Manifest& manifest) {
    if (m < 2 || m > 12) throw paramcont::InputError("demo lemma-lhc: m must be in [2, 12]");
    manifest.config = {{"demo", "lemma-lhc"}, {"m", m}};
    const paramcont::SampledSpace space = paramcont::line_window_space(m);

    // All nonempty-valued correspondences into 2^{a,b} - {}: 3 choices per node.
    const std::vector<std::vector<int>> choices = {{0}, {1}, {0, 1}};
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;

    long long both_pass = 0;
    Json counterexamples = Json::array();
    for (long long code = 0; code < total; ++code) {
        paramcont::Correspondence corr;
        long long c = code;
        bool constant = true;
        for (int i = 0; i < m; ++i) {
            corr.sets.push_back(choices[c % 3]);
            c /= 3;
            if (i > 0 && corr.sets[i] != corr.sets[0]) constant = false;
        }
        if (paramcont::check_uhc(corr, space).passed &&
            paramcont::check_lhc(corr, space).passed) {
            ++both_pass;
            if (!constant) counterexamples.push_back(corr.sets);
        }
    }

    Json j;
    j["m"] = m;
    j["correspondences"] = total;
    j["uhc_and_lhc"] = both_pass;
    j["counterexamples"] = counterexamples;
    j["lemma_holds"] = counterexamples.empty();
    write_output(j, out, manifest);
    return counterexamples.empty() ? 0 : 1;
}

int run_obstruct(int m, double lo, double hi, double beta, const std::string& out,
                 const std::string& csv, Manifest& manifest) {
    manifest.config = {{"m", m}, {"interval", {lo, hi}}, {"beta", beta}};
    const auto report = paramcont::triple_split_obstruction(m, lo, hi, beta);
    write_output(paramcont::io::obstruction_report_to_json(report), out, manifest);
    if (!csv.empty()) {
        paramcont::io::write_file(csv, paramcont::io::obstruction_csv(report));
    }
    return 0;
}

int run_report_modulus(const std::string& utility_path, const std::string& space_path,
                       const std::string& out, const std::string& csv,
                       Manifest& manifest) {
    manifest.add_input(utility_path);
    manifest.add_input(space_path);
    const auto space = paramcont::io::space_from_json(paramcont::io::load_json(space_path));
    const auto u = paramcont::io::utility_from_json(paramcont::io::load_json(utility_path));
    const auto report = paramcont::modulus_report(u, space);
    write_output(paramcont::io::modulus_report_to_json(report), out, manifest);
    if (!csv.empty()) {
        paramcont::io::write_file(csv, paramcont::io::modulus_csv(report, space, u));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parametric-continuity toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Manifest manifest;
    {
        std::ostringstream os;
        for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
        manifest.command = os.str();
    }

    // space
    auto* sp = app.add_subcommand("space", "construct a sampled parameter space");
    std::string sp_kind, sp_a, sp_b, sp_out;
    std::vector<double> sp_bounds;
    std::vector<int> sp_res;
    int sp_m = 4;
    sp->add_option("kind", sp_kind, "grid|split|triple-split|product")->required();
    sp->add_option("--bounds", sp_bounds, "lo hi pairs, one per dimension");
    sp->add_option("--res", sp_res, "points per dimension");
    sp->add_option("--m", sp_m, "samples of [0,1] per layer");
    sp->add_option("--a", sp_a, "left factor space file");
    sp->add_option("--b", sp_b, "right factor space file");
    sp->add_option("--out", sp_out, "output space JSON");

    // check
    auto* ck = app.add_subcommand("check", "run axiom checkers");
    std::string ck_space, ck_prefs, ck_axiom = "all", ck_out;
    ck->add_option("--space", ck_space)->required();
    ck->add_option("--prefs", ck_prefs)->required();
    ck->add_option("--axiom", ck_axiom, "asy|nt|cd|jc|lhc|all");
    ck->add_option("--out", ck_out, "output report JSON");

    // build
    auto* bd = app.add_subcommand("build", "construct a utility representation");
    std::string bd_space, bd_prefs, bd_method = "inductive", bd_order, bd_out;
    int bd_rounds = 10, bd_terms = 32;
    double bd_gamma = 0.25;
    bd->add_option("--space", bd_space)->required();
    bd->add_option("--prefs", bd_prefs)->required();
    bd->add_option("--out", bd_out)->required();
    bd->add_option("--method", bd_method, "inductive|urysohn");
    bd->add_option("--order", bd_order, "comma-separated enumeration order");
    bd->add_option("--rounds", bd_rounds, "smoothing rounds");
    bd->add_option("--gamma", bd_gamma, "strict gap fraction in (0, 0.5)");
    bd->add_option("--terms", bd_terms, "series terms for the urysohn method");

    // maximize
    auto* mx = app.add_subcommand("maximize", "value function and argmax correspondence");
    std::string mx_utility, mx_space, mx_constraint = "budget", mx_grid, mx_alts, mx_out,
                mx_csv;
    double mx_tie = 0.0;
    mx->add_option("--utility", mx_utility)->required();
    mx->add_option("--space", mx_space)->required();
    mx->add_option("--constraint", mx_constraint, "budget|full");
    mx->add_option("--grid", mx_grid, "price-wealth grid JSON");
    mx->add_option("--alts", mx_alts, "alternative set JSON (with embedding)");
    mx->add_option("--tie-tolerance", mx_tie);
    mx->add_option("--out", mx_out);
    mx->add_option("--csv", mx_csv, "value function CSV");

    // demo
    auto* dm = app.add_subcommand("demo", "exhaustive demonstrations");
    std::string dm_kind, dm_out;
    int dm_m = 6;
    dm->add_option("kind", dm_kind, "lemma-lhc")->required();
    dm->add_option("--m", dm_m);
    dm->add_option("--out", dm_out);

    // obstruct
    auto* ob = app.add_subcommand("obstruct", "representation obstruction reports");
    std::string ob_kind, ob_out, ob_csv;
    int ob_m = 16;
    std::vector<double> ob_interval = {0.4, 0.6};
    double ob_beta = 0.1;
    ob->add_option("kind", ob_kind, "triple-split")->required();
    ob->add_option("--m", ob_m);
    ob->add_option("--interval", ob_interval)->expected(2);
    ob->add_option("--beta", ob_beta, "oscillation rate per unit base width");
    ob->add_option("--out", ob_out);
    ob->add_option("--csv", ob_csv, "gap decay series CSV");

    // report
    auto* rp = app.add_subcommand("report", "measurement reports");
    std::string rp_kind, rp_utility, rp_space, rp_out, rp_csv;
    rp->add_option("kind", rp_kind, "modulus")->required();
    rp->add_option("--utility", rp_utility)->required();
    rp->add_option("--space", rp_space)->required();
    rp->add_option("--out", rp_out);
    rp->add_option("--csv", rp_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) {
            return run_space(sp_kind, sp_bounds, sp_res, sp_m, sp_a, sp_b, sp_out, manifest);
        }
        if (ck->parsed()) return run_check(ck_space, ck_prefs, ck_axiom, ck_out, manifest);
        if (bd->parsed()) {
            return run_build(bd_space, bd_prefs, bd_method, bd_order, bd_rounds, bd_gamma,
                             bd_terms, bd_out, manifest);
        }
        if (mx->parsed()) {
            return run_maximize(mx_utility, mx_space, mx_constraint, mx_grid, mx_alts,
                                mx_tie, mx_out, mx_csv, manifest);
        }
        if (dm->parsed()) {
            if (dm_kind != "lemma-lhc") {
                throw paramcont::InputError("unknown demo '" + dm_kind + "'");
            }
            return run_demo_lemma(dm_m, dm_out, manifest);
        }
        if (ob->parsed()) {
            if (ob_kind != "triple-split") {
                throw paramcont::InputError("unknown obstruction '" + ob_kind + "'");
            }
            return run_obstruct(ob_m, ob_interval[0], ob_interval[1], ob_beta, ob_out,
                                ob_csv, manifest);
        }
        if (rp->parsed()) {
            if (rp_kind != "modulus") {
                throw paramcont::InputError("unknown report '" + rp_kind + "'");
            }
            return run_report_modulus(rp_utility, rp_space, rp_out, rp_csv, manifest);
        }
    } catch (const paramcont::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const paramcont::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
