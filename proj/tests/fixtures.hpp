#pragma once

#include <string>
#include <vector>

#include "wtreereg/wgraph.hpp"

namespace fixtures {

using wtreereg::WeightedEdge;
using wtreereg::WeightedGraph;

inline std::vector<std::string> xs(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

// spine x1..x5, heavy x2x3, two legs of length 2 hanging off x3
inline WeightedGraph tree_a() {
    return WeightedGraph(xs(9), {{"x1", "x2", 1}, {"x2", "x3", 2}, {"x3", "x4", 1}, {"x4", "x5", 1},
                                 {"x3", "x6", 1}, {"x6", "x7", 1}, {"x3", "x8", 1}, {"x8", "x9", 1}});
}

// spine x1..x4 with heavy x1x2 (3) and x3x4 (2), three legs of length 2 at x2
inline WeightedGraph tree_b() {
    return WeightedGraph(xs(10), {{"x1", "x2", 3}, {"x2", "x3", 1}, {"x3", "x4", 2}, {"x2", "x5", 1}, {"x5", "x6", 1},
                                  {"x2", "x7", 1}, {"x7", "x8", 1}, {"x2", "x9", 1}, {"x9", "x10", 1}});
}

// spine x1..x4, whiskers y1,y2 at x2 and z1 at x3
inline WeightedGraph caterpillar_k4(int w1 = 1, int w2 = 2, int w3 = 1) {
    return WeightedGraph({"x1", "x2", "x3", "x4", "y1", "y2", "z1"},
                         {{"x1", "x2", w1}, {"x2", "x3", w2}, {"x3", "x4", w3}, {"x2", "y1", 1}, {"x2", "y2", 1},
                          {"x3", "z1", 1}});
}

// heavy x1x2 and x3x4 pin the spine to x1..x4; a two-level branch hangs off x2
inline WeightedGraph depth_two_k4() {
    return WeightedGraph({"x1", "x2", "x3", "x4", "y1", "z1", "z2"},
                         {{"x1", "x2", 2}, {"x2", "x3", 1}, {"x3", "x4", 2}, {"x2", "y1", 1}, {"y1", "z1", 1},
                          {"y1", "z2", 1}});
}

inline WeightedGraph star(int leaves, const std::string& centre = "c") {
    std::vector<std::string> v{centre};
    std::vector<WeightedEdge> e;
    for (int i = 1; i <= leaves; ++i) {
        v.push_back("l" + std::to_string(i));
        e.push_back({centre, v.back(), 1});
    }
    return WeightedGraph(v, e);
}

// centre with three legs of length 2
inline WeightedGraph spider3() {
    return WeightedGraph({"c", "a1", "a2", "b1", "b2", "d1", "d2"},
                         {{"c", "a1", 1}, {"a1", "a2", 1}, {"c", "b1", 1}, {"b1", "b2", 1}, {"c", "d1", 1},
                          {"d1", "d2", 1}});
}

}  // namespace fixtures
