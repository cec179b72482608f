#include "paramcont/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace paramcont::io {

namespace {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Urysohn: return "urysohn";
        case Provenance::Inductive: return "inductive";
        case Provenance::External: return "external";
    }
    return "external";
}

Provenance provenance_from(const std::string& s) {
    if (s == "urysohn") return Provenance::Urysohn;
    if (s == "inductive") return Provenance::Inductive;
    if (s == "external") return Provenance::External;
    throw InputError("unknown provenance '" + s + "'");
}

}  // namespace

Json space_to_json(const SampledSpace& space) {
    Json j;
    j["nodes"] = Json::array();
    for (const SpaceNode& node : space.nodes) {
        Json n;
        n["id"] = node.id;
        n["coords"] = node.coords;
        n["neighborhoods"] = node.neighborhoods;
        j["nodes"].push_back(std::move(n));
    }
    if (space.metric) j["metric"] = *space.metric;
    j["flags"] = {{"metrizable", space.metrizable},
                  {"perfectly_normal", space.perfectly_normal}};
    return j;
}

SampledSpace space_from_json(const Json& j) {
    SampledSpace space;
    if (!j.contains("nodes") || !j["nodes"].is_array()) {
        throw InputError("space file: missing 'nodes' array");
    }
    for (const auto& n : j["nodes"]) {
        SpaceNode node;
        node.id = n.at("id").get<int>();
        node.coords = n.at("coords").get<std::vector<double>>();
        node.neighborhoods = n.at("neighborhoods").get<std::vector<std::vector<int>>>();
        space.nodes.push_back(std::move(node));
    }
    if (j.contains("metric")) {
        space.metric = j["metric"].get<std::vector<std::vector<double>>>();
    }
    if (j.contains("flags")) {
        space.metrizable = j["flags"].value("metrizable", false);
        space.perfectly_normal = j["flags"].value("perfectly_normal", false);
    }
    return space;
}

Json alts_to_json(const AlternativeSet& alts) {
    Json j;
    j["labels"] = alts.labels;
    if (alts.embedding) j["embedding"] = *alts.embedding;
    return j;
}

AlternativeSet alts_from_json(const Json& j) {
    AlternativeSet alts;
    alts.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("embedding")) {
        alts.embedding = j["embedding"].get<std::vector<std::vector<long long>>>();
        if (alts.embedding->size() != alts.labels.size()) {
            throw InputError("alternatives: embedding size differs from labels");
        }
    }
    for (std::size_t a = 0; a < alts.labels.size(); ++a) {
        for (std::size_t b = a + 1; b < alts.labels.size(); ++b) {
            if (alts.labels[a] == alts.labels[b]) {
                throw InputError("alternatives: duplicate label '" + alts.labels[a] + "'");
            }
            if (alts.embedding && (*alts.embedding)[a] == (*alts.embedding)[b]) {
                throw InputError("alternatives: duplicate embedded bundle");
            }
        }
        if (alts.embedding) {
            for (long long v : (*alts.embedding)[a]) {
                if (v < 0) throw InputError("alternatives: negative bundle component");
            }
        }
    }
    return alts;
}

Json prefs_to_json(const PreferenceField& field, const AlternativeSet& alts,
                   const std::string& space_ref) {
    Json j;
    j["space"] = space_ref;
    j["alternatives"] = alts_to_json(alts);
    Json strict = Json::object();
    for (int x = 0; x < field.node_count(); ++x) {
        Json pairs = Json::array();
        for (int a = 0; a < field.alt_count; ++a) {
            for (int b = 0; b < field.alt_count; ++b) {
                if (a != b && field.strict_at(x, a, b)) {
                    pairs.push_back(Json::array({a, b}));
                }
            }
        }
        strict[std::to_string(x)] = std::move(pairs);
    }
    j["strict"] = std::move(strict);
    return j;
}

std::pair<PreferenceField, AlternativeSet> prefs_from_json(const Json& j) {
    AlternativeSet alts = alts_from_json(j.at("alternatives"));
    const auto& strict = j.at("strict");
    int max_node = -1;
    for (auto it = strict.begin(); it != strict.end(); ++it) {
        max_node = std::max(max_node, std::stoi(it.key()));
    }
    PreferenceField field = PreferenceField::empty(max_node + 1, alts.count());
    for (auto it = strict.begin(); it != strict.end(); ++it) {
        const int x = std::stoi(it.key());
        for (const auto& pair : it.value()) {
            const int a = pair.at(0).get<int>();
            const int b = pair.at(1).get<int>();
            if (a < 0 || b < 0 || a >= alts.count() || b >= alts.count()) {
                throw InputError("preference file: alternative index out of range at node " +
                                 std::to_string(x));
            }
            if (a == b) {
                throw InputError("preference file: reflexive strict pair at node " +
                                 std::to_string(x));
            }
            field.set_strict(x, a, b);
        }
    }
    return {std::move(field), std::move(alts)};
}

Json utility_to_json(const UtilityField& u) {
    Json j;
    Json values = Json::object();
    for (int a = 0; a < u.alt_count(); ++a) {
        values[std::to_string(a)] = u.values[a];
    }
    j["values"] = std::move(values);
    j["provenance"] = provenance_name(u.provenance);
    return j;
}

UtilityField utility_from_json(const Json& j) {
    UtilityField u;
    const auto& values = j.at("values");
    u.values.resize(values.size());
    for (auto it = values.begin(); it != values.end(); ++it) {
        const int a = std::stoi(it.key());
        if (a < 0 || a >= static_cast<int>(values.size())) {
            throw InputError("utility file: non-contiguous alternative keys");
        }
        u.values[a] = it.value().get<std::vector<double>>();
    }
    for (const auto& row : u.values) {
        if (row.size() != u.values.front().size()) {
            throw InputError("utility file: ragged value rows");
        }
        for (double v : row) {
            if (!std::isfinite(v)) throw InputError("utility file: non-finite value");
        }
    }
    u.provenance = provenance_from(j.value("provenance", "external"));
    return u;
}

Json pw_grid_to_json(const PriceWealthGrid& grid) {
    Json j;
    j["prices"] = grid.prices;
    j["wealth"] = grid.wealth;
    return j;
}

PriceWealthGrid pw_grid_from_json(const Json& j) {
    PriceWealthGrid grid;
    grid.prices = j.at("prices").get<std::vector<std::vector<double>>>();
    grid.wealth = j.at("wealth").get<std::vector<double>>();
    if (grid.prices.size() != grid.wealth.size()) {
        throw InputError("price-wealth grid: prices and wealth lengths differ");
    }
    return grid;
}

Json axiom_report_to_json(const AxiomReport& report) {
    Json j;
    j["axiom"] = axiom_name(report.axiom);
    j["passed"] = report.passed;
    Json witnesses = Json::array();
    for (const Witness& w : report.witnesses) {
        Json wj;
        wj["node"] = w.node;
        if (w.a >= 0) wj["a"] = w.a;
        if (w.b >= 0) wj["b"] = w.b;
        if (w.c >= 0) wj["c"] = w.c;
        if (w.neighbor >= 0) wj["neighbor"] = w.neighbor;
        if (!w.detail.empty()) wj["detail"] = w.detail;
        witnesses.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(witnesses);
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

Json modulus_report_to_json(const ModulusReport& report) {
    Json j;
    j["innermost_oscillation"] = report.innermost_osc;
    j["per_depth_oscillation"] = report.per_depth_osc;
    j["worst_node"] = report.worst_node;
    return j;
}

Json obstruction_report_to_json(const ObstructionReport& report) {
    Json j;
    j["resolution"] = report.resolution;
    j["gap"] = report.gap;
    Json series = Json::array();
    for (const auto& [m, gap] : report.series) {
        series.push_back({{"m", m}, {"gap", gap}});
    }
    j["series"] = std::move(series);
    Json bounds = Json::array();
    for (double b : report.node_bounds) {
        if (std::isinf(b)) {
            bounds.push_back("unbounded");
        } else {
            bounds.push_back(b);
        }
    }
    j["node_bounds"] = std::move(bounds);
    j["forced_zero"] = report.forced_zero;
    j["obstructed"] = report.obstructed;
    j["note"] = report.note;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << contents;
}

Json load_json(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

void save_json(const std::string& path, const Json& j) {
    write_file(path, j.dump(2) + "\n");
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string modulus_csv(const ModulusReport& report, const SampledSpace& space,
                        const UtilityField& u) {
    std::ostringstream os;
    os << "node_id,alt,depth,oscillation\n";
    for (int a = 0; a < u.alt_count(); ++a) {
        for (int x = 0; x < space.node_count(); ++x) {
            const auto& nbs = space.nodes[x].neighborhoods;
            for (std::size_t d = 0; d < nbs.size(); ++d) {
                double lo = u.values[a][x], hi = lo;
                for (int y : nbs[d]) {
                    lo = std::min(lo, u.values[a][y]);
                    hi = std::max(hi, u.values[a][y]);
                }
                os << x << "," << a << "," << d << "," << Json(hi - lo).dump() << "\n";
            }
        }
    }
    return os.str();
}

std::string obstruction_csv(const ObstructionReport& report) {
    std::ostringstream os;
    os << "m,gap\n";
    for (const auto& [m, gap] : report.series) {
        os << m << "," << Json(gap).dump() << "\n";
    }
    return os.str();
}

std::string value_csv(const std::vector<double>& value, const SampledSpace& space) {
    std::ostringstream os;
    os << "node_id";
    const std::size_t dims = space.nodes.empty() ? 0 : space.nodes.front().coords.size();
    for (std::size_t d = 0; d < dims; ++d) os << ",coord" << d;
    os << ",V\n";
    for (int x = 0; x < space.node_count(); ++x) {
        os << x;
        for (double c : space.nodes[x].coords) os << "," << Json(c).dump();
        os << "," << Json(value[x]).dump() << "\n";
    }
    return os.str();
}

}  // namespace paramcont::io
