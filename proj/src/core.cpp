#include "paramcont/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace paramcont {

namespace {

std::string fmt_nodes(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

}  // namespace

ValidationReport validate_space(const SampledSpace& space) {
    ValidationReport report;
    const int n = space.node_count();

    for (int i = 0; i < n; ++i) {
        const SpaceNode& node = space.nodes[i];
        if (node.id != i) {
            report.violations.push_back("node at index " + std::to_string(i) +
                                        " has id " + std::to_string(node.id) +
                                        " (ids must be contiguous and zero-based)");
        }
        if (node.neighborhoods.empty()) {
            report.violations.push_back("node " + std::to_string(node.id) +
                                        " has no neighborhoods");
            continue;
        }
        for (std::size_t d = 0; d < node.neighborhoods.size(); ++d) {
            const auto& nb = node.neighborhoods[d];
            if (std::find(nb.begin(), nb.end(), node.id) == nb.end()) {
                report.violations.push_back("node " + std::to_string(node.id) +
                                            " missing from own neighborhood (depth " +
                                            std::to_string(d) + ")");
            }
            for (int id : nb) {
                if (id < 0 || id >= n) {
                    report.violations.push_back(
                        "node " + std::to_string(node.id) + " neighborhood depth " +
                        std::to_string(d) + " references unknown node " +
                        std::to_string(id));
                }
            }
        }
        // Nesting: N_1 contains N_2 contains ...
        for (std::size_t d = 1; d < node.neighborhoods.size(); ++d) {
            std::set<int> outer(node.neighborhoods[d - 1].begin(),
                                node.neighborhoods[d - 1].end());
            for (int id : node.neighborhoods[d]) {
                if (!outer.count(id)) {
                    report.violations.push_back(
                        "node " + std::to_string(node.id) +
                        " neighborhoods not nested at depth " + std::to_string(d) +
                        " (node " + std::to_string(id) + " not in outer set)");
                    break;
                }
            }
        }
    }

    if (space.metric) {
        const auto& m = *space.metric;
        if (static_cast<int>(m.size()) != n) {
            report.violations.push_back("metric table size does not match node count");
        } else {
            bool shape_ok = true;
            for (const auto& row : m) {
                if (static_cast<int>(row.size()) != n) {
                    report.violations.push_back("metric table is not square");
                    shape_ok = false;
                    break;
                }
            }
            if (shape_ok) {
                for (int i = 0; i < n; ++i) {
                    if (m[i][i] != 0.0) {
                        report.violations.push_back("metric d(" + std::to_string(i) +
                                                    "," + std::to_string(i) +
                                                    ") != 0");
                    }
                    for (int j = i + 1; j < n; ++j) {
                        if (m[i][j] != m[j][i]) {
                            report.violations.push_back(
                                "metric not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
                        }
                        if (m[i][j] <= 0.0) {
                            report.violations.push_back(
                                "metric d(" + std::to_string(i) + "," +
                                std::to_string(j) + ") not positive");
                        }
                    }
                }
                const double tol = 1e-12;
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        for (int k = 0; k < n; ++k) {
                            if (m[i][k] > m[i][j] + m[j][k] + tol) {
                                report.violations.push_back(
                                    "triangle inequality " + fmt_nodes(i, j, k));
                            }
                        }
                    }
                }
            }
        }
    }
    if (space.metrizable && !space.metric) {
        report.violations.push_back("metrizable flag set but no metric present");
    }
    return report;
}

DerivedRelations derived_relations(const PreferenceField& field, int node) {
    if (node < 0 || node >= field.node_count()) {
        throw InputError("derived_relations: unknown node id " + std::to_string(node));
    }
    DerivedRelations rel;
    const int J = field.alt_count;
    for (int a = 0; a < J; ++a) {
        for (int b = 0; b < J; ++b) {
            if (a != b && field.strict_at(node, a, b)) rel.strict.emplace_back(a, b);
            if (field.indiff_at(node, a, b)) rel.indiff.emplace_back(a, b);
            if (field.weak_at(node, a, b)) rel.weak.emplace_back(a, b);
        }
    }
    return rel;
}

bool represents_at(const UtilityField& u, const PreferenceField& field, int node,
                   double tolerance) {
    const int J = field.alt_count;
    for (int a = 0; a < J; ++a) {
        for (int b = 0; b < J; ++b) {
            if (a == b) continue;
            const double diff = u.values[b][node] - u.values[a][node];
            const bool value_strict = diff > tolerance;
            const bool value_tie = std::fabs(diff) <= tolerance;
            if (field.strict_at(node, a, b) && !value_strict) return false;
            if (field.indiff_at(node, a, b) && a < b && !value_tie) return false;
        }
    }
    return true;
}

}  // namespace paramcont
