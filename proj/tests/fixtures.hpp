#ifndef SGC_TESTS_FIXTURES_HPP
#define SGC_TESTS_FIXTURES_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc::fixtures {

inline SignedGraph k1() { return SignedGraph::make(1, {}); }

inline SignedGraph positive_k2() {
    return SignedGraph::make(2, {{0, 1, Sign::positive}});
}

inline SignedGraph negative_k2() {
    return SignedGraph::make(2, {{0, 1, Sign::negative}});
}

inline SignedGraph all_positive_kn(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::positive});
    return SignedGraph::make(n, edges);
}

/// Complete graph on 4k vertices, matching {2i, 2i+1} negative, rest positive.
inline SignedGraph k4k_negative_matching(int k) {
    const int n = 4 * k;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool matched = v == u + 1 && u % 2 == 0;
            edges.push_back({u, v, matched ? Sign::negative : Sign::positive});
        }
    }
    return SignedGraph::make(n, edges);
}

/// Graph A: K6 made of two all-positive triangles {0,1,2} and {3,4,5} with
/// all nine cross edges negative (the all-negative join of two positive
/// triangles). Up to relabeling this is the unique K6 signature with chi = 6,
/// maximum deficiency 3, and exceptional that also accepts the reference
/// coloration below; an exhaustive sweep of all 2^15 K6 signatures confirms
/// uniqueness.
inline SignedGraph graph_a() {
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u) {
        for (int v = u + 1; v < 6; ++v) {
            const bool same_triangle = (u < 3) == (v < 3);
            edges.push_back({u, v, same_triangle ? Sign::positive : Sign::negative});
        }
    }
    return SignedGraph::make(6, edges);
}

/// Reference coloration for graph A, vertex order 0..5.
inline std::vector<int> graph_a_coloring() { return {1, -2, 3, 3, 1, -2}; }

/// Graph B fixture. The sign of edge (2,5) is the one unsettled input;
/// `edge_25_positive` selects the resolution. Only the positive resolution
/// attains chi = 4, M = 2, exceptional.
inline SignedGraph graph_b(bool edge_25_positive) {
    std::vector<Edge> edges = {
        {1, 4, Sign::positive},
        {2, 5, edge_25_positive ? Sign::positive : Sign::negative},
        {0, 1, Sign::negative}, {0, 3, Sign::negative}, {3, 4, Sign::negative},
        {0, 4, Sign::negative}, {1, 3, Sign::negative}, {1, 2, Sign::negative},
        {4, 5, Sign::negative}, {2, 4, Sign::negative}, {1, 5, Sign::negative},
    };
    return SignedGraph::make(6, edges);
}

inline std::vector<int> graph_b_coloring() { return {1, 2, 2, 1, 1, 1}; }

}  // namespace sgc::fixtures

#endif
