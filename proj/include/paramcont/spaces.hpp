#pragma once

#include "paramcont/core.hpp"

namespace paramcont {

/// Regular lattice over a box, with Euclidean metric and nested metric-ball
/// neighborhoods of radii r, r/2, r/4 (r = one lattice step).
struct GridSpec {
    std::vector<std::pair<double, double>> bounds;  // (lo, hi) per dimension
    std::vector<int> resolution;                    // points per dimension, >= 2
    int depth = 3;
};

/// Sampling of [0,1] x_lex {0,1} (layers == Two) or [0,1] x_lex {0,1/2,1}
/// (layers == Three) at m points per layer.
struct SplitSpec {
    enum class Layers { Two, Three };
    int resolution = 2;  // m >= 2
    Layers layers = Layers::Two;
    int depth = 3;
};

SampledSpace grid_box(const GridSpec& spec);
SampledSpace split_interval(const SplitSpec& spec);
SampledSpace triple_split(const SplitSpec& spec);
SampledSpace product_space(const SampledSpace& s1, const SampledSpace& s2);

/// m samples of [0,1] with index-window neighborhoods (radii 3, 2, 1): no
/// sampled point is isolated, matching [0,1] itself. This is the sampling the
/// hemicontinuity demos run on.
SampledSpace line_window_space(int m);

}  // namespace paramcont
