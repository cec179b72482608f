#pragma once

#include "paramcont/axioms.hpp"
#include "paramcont/core.hpp"

namespace paramcont {

/// Per-node positive price vectors and wealth over a sampled parameter space.
struct PriceWealthGrid {
    std::vector<std::vector<double>> prices;  // [node][good]
    std::vector<double> wealth;               // [node]

    int node_count() const { return static_cast<int>(wealth.size()); }
};

/// The truncated alternative set is too small to contain the full budget set;
/// the compactness premise would be checked against the wrong set.
struct TruncationError : Error {
    using Error::Error;
};

/// Bundles with p . a <= w among the stored embedding. Errors if the
/// truncation provably misses lattice bundles inside the budget (w / p_i
/// exceeds the stored coordinate range) or if the budget comes out empty.
std::vector<int> budget(const std::vector<double>& prices, double wealth,
                        const AlternativeSet& alts);

Correspondence budget_correspondence(const PriceWealthGrid& grid,
                                     const AlternativeSet& alts);

/// Discrete-alternatives u.h.c.: at x, some declared neighborhood maps into
/// subsets of the value at x.
AxiomReport check_uhc(const Correspondence& corr, const SampledSpace& space);

/// Discrete-alternatives l.h.c.: every member of the value at x persists
/// throughout some declared neighborhood.
AxiomReport check_lhc(const Correspondence& corr, const SampledSpace& space);

struct ValueArgmax {
    std::vector<double> value;  // V per node
    Correspondence argmax;      // C per node
};

ValueArgmax value_and_argmax(const UtilityField& u, const Correspondence& corr,
                             double tie_tolerance = 0.0);

/// Oscillation of V over every declared neighborhood, depth k bounded by
/// schedule[k].
AxiomReport check_value_continuity(const std::vector<double>& value,
                                   const SampledSpace& space,
                                   const std::vector<double>& schedule);

}  // namespace paramcont
