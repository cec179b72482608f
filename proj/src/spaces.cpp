#include "paramcont/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace paramcont {

namespace {

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        s += diff * diff;
    }
    return std::sqrt(s);
}

}  // namespace

SampledSpace grid_box(const GridSpec& spec) {
    const int dims = static_cast<int>(spec.bounds.size());
    if (dims == 0) throw InputError("grid_box: no dimensions");
    std::vector<int> res = spec.resolution;
    if (static_cast<int>(res.size()) == 1 && dims > 1) res.assign(dims, res[0]);
    if (static_cast<int>(res.size()) != dims) {
        throw InputError("grid_box: resolution count does not match dimensions");
    }
    std::vector<double> step(dims);
    for (int d = 0; d < dims; ++d) {
        const auto [lo, hi] = spec.bounds[d];
        if (!(lo < hi)) throw InputError("grid_box: bounds must satisfy lo < hi");
        if (res[d] < 2) throw InputError("grid_box: resolution < 2");
        step[d] = (hi - lo) / (res[d] - 1);
    }

    SampledSpace space;
    space.metrizable = true;
    space.perfectly_normal = true;

    long long total = 1;
    for (int d = 0; d < dims; ++d) total *= res[d];

    std::vector<int> idx(dims, 0);
    for (long long i = 0; i < total; ++i) {
        SpaceNode node;
        node.id = static_cast<int>(i);
        node.coords.resize(dims);
        for (int d = 0; d < dims; ++d) {
            node.coords[d] = spec.bounds[d].first + step[d] * idx[d];
        }
        space.nodes.push_back(std::move(node));
        for (int d = dims - 1; d >= 0; --d) {
            if (++idx[d] < res[d]) break;
            idx[d] = 0;
        }
    }

    const int n = space.node_count();
    auto& metric = space.metric.emplace(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            metric[i][j] = euclid(space.nodes[i].coords, space.nodes[j].coords);
        }
    }

    const double r = *std::min_element(step.begin(), step.end());
    for (int i = 0; i < n; ++i) {
        double radius = r;
        for (int d = 0; d < spec.depth; ++d) {
            std::vector<int> ball;
            for (int j = 0; j < n; ++j) {
                if (metric[i][j] <= radius * (1.0 + 1e-12)) ball.push_back(j);
            }
            space.nodes[i].neighborhoods.push_back(std::move(ball));
            radius *= 0.5;
        }
    }
    return space;
}

SampledSpace split_interval(const SplitSpec& spec) {
    const int m = spec.resolution;
    if (m < 2) throw InputError("split_interval: resolution < 2");
    SampledSpace space;
    space.metrizable = false;
    space.perfectly_normal = true;

    // id = 2*i + s, coords = (i/(m-1), s)
    for (int i = 0; i < m; ++i) {
        for (int s = 0; s < 2; ++s) {
            SpaceNode node;
            node.id = 2 * i + s;
            node.coords = {static_cast<double>(i) / (m - 1), static_cast<double>(s)};
            space.nodes.push_back(std::move(node));
        }
    }

    auto column_range = [&](int y, int from, int to) {
        // {y} plus both layers of sample columns [from, to], clipped.
        std::vector<int> set = {y};
        for (int j = std::max(from, 0); j <= std::min(to, m - 1); ++j) {
            set.push_back(2 * j);
            set.push_back(2 * j + 1);
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        return set;
    };

    for (int i = 0; i < m; ++i) {
        // Layer 1: successor-side basic sets ((t, t + k*step] x {0,1}) u {y}.
        {
            SpaceNode& node = space.nodes[2 * i + 1];
            for (int d = 0; d < spec.depth; ++d) {
                const int k = std::max(spec.depth - 1 - d, 1);
                node.neighborhoods.push_back(column_range(node.id, i + 1, i + k));
            }
        }
        // Layer 0: predecessor side.
        {
            SpaceNode& node = space.nodes[2 * i];
            for (int d = 0; d < spec.depth; ++d) {
                const int k = std::max(spec.depth - 1 - d, 1);
                node.neighborhoods.push_back(column_range(node.id, i - k, i - 1));
            }
        }
    }
    return space;
}

SampledSpace triple_split(const SplitSpec& spec) {
    const int m = spec.resolution;
    if (m < 2) throw InputError("triple_split: resolution < 2");
    SampledSpace space;
    space.metrizable = false;
    space.perfectly_normal = false;

    // id = 3*i + layer, layer 0 -> s=0, 1 -> s=1/2, 2 -> s=1.
    const double layer_coord[3] = {0.0, 0.5, 1.0};
    for (int i = 0; i < m; ++i) {
        for (int l = 0; l < 3; ++l) {
            SpaceNode node;
            node.id = 3 * i + l;
            node.coords = {static_cast<double>(i) / (m - 1), layer_coord[l]};
            space.nodes.push_back(std::move(node));
        }
    }

    auto column_range_all = [&](int y, int from, int to) {
        std::vector<int> set = {y};
        for (int j = std::max(from, 0); j <= std::min(to, m - 1); ++j) {
            for (int l = 0; l < 3; ++l) set.push_back(3 * j + l);
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        return set;
    };
    auto column_pair = [&](int y, int j) {
        // {y} plus the outer-layer pair of column j (the middle point of a
        // neighboring column is not forced into the innermost set).
        std::vector<int> set = {y};
        if (j >= 0 && j < m) {
            set.push_back(3 * j);
            set.push_back(3 * j + 2);
        }
        std::sort(set.begin(), set.end());
        return set;
    };

    for (int i = 0; i < m; ++i) {
        // Middle layer: isolated points.
        {
            SpaceNode& node = space.nodes[3 * i + 1];
            node.neighborhoods.assign(spec.depth, {node.id});
        }
        // Top layer (s=1): successor side; non-innermost sets carry all three
        // layers of their base interval.
        {
            SpaceNode& node = space.nodes[3 * i + 2];
            for (int d = 0; d + 1 < spec.depth; ++d) {
                const int k = std::max(spec.depth - 1 - d, 1);
                node.neighborhoods.push_back(column_range_all(node.id, i + 1, i + k));
            }
            node.neighborhoods.push_back(column_pair(node.id, i + 1));
        }
        // Bottom layer (s=0): predecessor side.
        {
            SpaceNode& node = space.nodes[3 * i];
            for (int d = 0; d + 1 < spec.depth; ++d) {
                const int k = std::max(spec.depth - 1 - d, 1);
                node.neighborhoods.push_back(column_range_all(node.id, i - k, i - 1));
            }
            node.neighborhoods.push_back(column_pair(node.id, i - 1));
        }
    }
    return space;
}

SampledSpace product_space(const SampledSpace& s1, const SampledSpace& s2) {
    SampledSpace space;
    const int n1 = s1.node_count();
    const int n2 = s2.node_count();
    const int d1 = s1.depth();
    const int d2 = s2.depth();
    const int depth = std::max(d1, d2);

    auto nbhd_at = [](const SampledSpace& s, int node, int d) -> const std::vector<int>& {
        const auto& list = s.nodes[node].neighborhoods;
        // Shorter lists cycle at their innermost set.
        const int idx = std::min(d, static_cast<int>(list.size()) - 1);
        return list[idx];
    };

    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            SpaceNode node;
            node.id = i * n2 + j;
            node.coords = s1.nodes[i].coords;
            node.coords.insert(node.coords.end(), s2.nodes[j].coords.begin(),
                               s2.nodes[j].coords.end());
            for (int d = 0; d < depth; ++d) {
                std::vector<int> set;
                for (int a : nbhd_at(s1, i, d)) {
                    for (int b : nbhd_at(s2, j, d)) {
                        set.push_back(a * n2 + b);
                    }
                }
                std::sort(set.begin(), set.end());
                node.neighborhoods.push_back(std::move(set));
            }
            space.nodes.push_back(std::move(node));
        }
    }

    if (s1.metric && s2.metric) {
        auto& metric =
            space.metric.emplace(n1 * n2, std::vector<double>(n1 * n2, 0.0));
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n2; ++j) {
                for (int k = 0; k < n1; ++k) {
                    for (int l = 0; l < n2; ++l) {
                        metric[i * n2 + j][k * n2 + l] =
                            (*s1.metric)[i][k] + (*s2.metric)[j][l];
                    }
                }
            }
        }
    }

    space.metrizable = s1.metrizable && s2.metrizable;
    space.perfectly_normal = (s1.metrizable && s2.perfectly_normal) ||
                             (s2.metrizable && s1.perfectly_normal);
    return space;
}

SampledSpace line_window_space(int m) {
    if (m < 2) throw InputError("line_window_space: resolution < 2");
    SampledSpace space;
    space.metrizable = true;
    space.perfectly_normal = true;
    for (int i = 0; i < m; ++i) {
        SpaceNode node;
        node.id = i;
        node.coords = {static_cast<double>(i) / (m - 1)};
        for (int radius = 3; radius >= 1; --radius) {
            std::vector<int> window;
            for (int j = std::max(i - radius, 0); j <= std::min(i + radius, m - 1); ++j) {
                window.push_back(j);
            }
            node.neighborhoods.push_back(std::move(window));
        }
        space.nodes.push_back(std::move(node));
    }
    const int n = m;
    auto& metric = space.metric.emplace(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            metric[i][j] = std::fabs(space.nodes[i].coords[0] - space.nodes[j].coords[0]);
        }
    }
    return space;
}

}  // namespace paramcont
