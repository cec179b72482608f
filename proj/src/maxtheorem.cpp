#include "paramcont/maxtheorem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paramcont {

std::vector<int> budget(const std::vector<double>& prices, double wealth,
                        const AlternativeSet& alts) {
    if (!alts.embedding) throw InputError("budget requires an embedded alternative set");
    const auto& bundles = *alts.embedding;
    if (bundles.empty()) throw InputError("budget: empty alternative set");
    const std::size_t goods = bundles.front().size();
    if (prices.size() != goods) {
        throw InputError("budget: price dimension does not match embedding");
    }
    for (double p : prices) {
        if (!(p > 0.0)) throw InputError("budget: prices must be strictly positive");
    }
    if (!(wealth > 0.0)) throw InputError("budget: wealth must be strictly positive");

    // Soundness of the truncation: the scaled unit bundle floor(w / p_i) e_i
    // lies in the full lattice budget, so the stored set must reach it.
    for (std::size_t i = 0; i < goods; ++i) {
        long long cap = 0;
        for (const auto& bundle : bundles) cap = std::max(cap, bundle[i]);
        const long long reach = static_cast<long long>(std::floor(wealth / prices[i]));
        if (reach > cap) {
            throw TruncationError(
                "truncated alternative set misses budget-feasible bundles: good " +
                std::to_string(i) + " reaches " + std::to_string(reach) +
                " units but truncation stops at " + std::to_string(cap));
        }
    }

    std::vector<int> feasible;
    for (int a = 0; a < static_cast<int>(bundles.size()); ++a) {
        double cost = 0.0;
        for (std::size_t i = 0; i < goods; ++i) {
            cost += prices[i] * static_cast<double>(bundles[a][i]);
        }
        if (cost <= wealth) feasible.push_back(a);
    }
    if (feasible.empty()) {
        throw InputError("budget set is empty at (p, w); correspondence values must be nonempty");
    }
    return feasible;
}

Correspondence budget_correspondence(const PriceWealthGrid& grid,
                                     const AlternativeSet& alts) {
    Correspondence corr;
    corr.sets.reserve(grid.node_count());
    for (int x = 0; x < grid.node_count(); ++x) {
        corr.sets.push_back(budget(grid.prices[x], grid.wealth[x], alts));
    }
    return corr;
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

AxiomReport check_uhc(const Correspondence& corr, const SampledSpace& space) {
    AxiomReport report;
    report.axiom = Axiom::UHC;
    if (corr.node_count() != space.node_count()) {
        throw InputError("correspondence and space node counts differ");
    }
    for (int x = 0; x < space.node_count(); ++x) {
        if (corr.sets[x].empty()) {
            throw InputError("correspondence value empty at node " + std::to_string(x));
        }
        bool ok = false;
        for (const auto& nb : space.nodes[x].neighborhoods) {
            bool all = true;
            for (int y : nb) {
                if (!subset_of(corr.sets[y], corr.sets[x])) {
                    all = false;
                    break;
                }
            }
            if (all) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            int failing = -1;
            for (int y : space.innermost(x)) {
                if (!subset_of(corr.sets[y], corr.sets[x])) {
                    failing = y;
                    break;
                }
            }
            report.witnesses.push_back(
                {x, -1, -1, -1, failing, "no neighborhood maps into subsets of F(x)"});
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

AxiomReport check_lhc(const Correspondence& corr, const SampledSpace& space) {
    AxiomReport report;
    report.axiom = Axiom::LHC;
    if (corr.node_count() != space.node_count()) {
        throw InputError("correspondence and space node counts differ");
    }
    for (int x = 0; x < space.node_count(); ++x) {
        if (corr.sets[x].empty()) {
            throw InputError("correspondence value empty at node " + std::to_string(x));
        }
        for (int a : corr.sets[x]) {
            bool ok = false;
            for (const auto& nb : space.nodes[x].neighborhoods) {
                bool all = true;
                for (int y : nb) {
                    if (!std::binary_search(corr.sets[y].begin(), corr.sets[y].end(), a)) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                int failing = -1;
                for (int y : space.innermost(x)) {
                    if (!std::binary_search(corr.sets[y].begin(), corr.sets[y].end(), a)) {
                        failing = y;
                        break;
                    }
                }
                report.witnesses.push_back(
                    {x, a, -1, -1, failing, "member drops out of F nearby"});
            }
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

ValueArgmax value_and_argmax(const UtilityField& u, const Correspondence& corr,
                             double tie_tolerance) {
    ValueArgmax out;
    const int n = corr.node_count();
    out.value.resize(n);
    out.argmax.sets.resize(n);
    for (int x = 0; x < n; ++x) {
        const auto& set = corr.sets[x];
        if (set.empty()) {
            throw InputError("correspondence value empty at node " + std::to_string(x));
        }
        double best = -std::numeric_limits<double>::infinity();
        for (int a : set) {
            if (a < 0 || a >= u.alt_count()) {
                throw InputError("utility field does not cover alternative " +
                                 std::to_string(a));
            }
            best = std::max(best, u.values[a][x]);
        }
        out.value[x] = best;
        for (int a : set) {
            if (u.values[a][x] >= best - tie_tolerance) out.argmax.sets[x].push_back(a);
        }
    }
    return out;
}

AxiomReport check_value_continuity(const std::vector<double>& value,
                                   const SampledSpace& space,
                                   const std::vector<double>& schedule) {
    AxiomReport report;
    report.axiom = Axiom::ValueContinuity;
    if (static_cast<int>(value.size()) != space.node_count()) {
        throw InputError("value vector and space node counts differ");
    }
    if (static_cast<int>(schedule.size()) != space.depth()) {
        throw InputError("schedule length must equal neighborhood depth");
    }
    for (int x = 0; x < space.node_count(); ++x) {
        const auto& nbs = space.nodes[x].neighborhoods;
        for (std::size_t d = 0; d < nbs.size(); ++d) {
            double lo = value[x], hi = value[x];
            for (int y : nbs[d]) {
                lo = std::min(lo, value[y]);
                hi = std::max(hi, value[y]);
            }
            if (hi - lo > schedule[d]) {
                report.witnesses.push_back(
                    {x, -1, -1, -1, static_cast<int>(d),
                     "oscillation " + std::to_string(hi - lo) + " exceeds schedule"});
            }
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

}  // namespace paramcont
