#include "sgc/signed_graph.hpp"

#include <algorithm>
#include <sstream>

namespace sgc {

SignedGraph SignedGraph::make(int order, const std::vector<Edge>& edges) {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    SignedGraph g;
    g.order_ = order;
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        int u = e.u, v = e.v;
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= order) {
            throw std::invalid_argument("endpoint out of range: (" +
                                        std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ")");
        }
        g.edges_.push_back({u, v, e.sign});
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) {
                  return std::pair{a.u, a.v} < std::pair{b.u, b.v};
              });
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i - 1].u == g.edges_[i].u && g.edges_[i - 1].v == g.edges_[i].v) {
            throw std::invalid_argument("duplicate pair (" +
                                        std::to_string(g.edges_[i].u) + ", " +
                                        std::to_string(g.edges_[i].v) + ")");
        }
    }
    g.build_adjacency();
    return g;
}

void SignedGraph::build_adjacency() {
    adj_.assign(order_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back({e.v, e.sign});
        adj_[e.v].push_back({e.u, e.sign});
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

std::optional<Sign> SignedGraph::sign_of(int u, int v) const {
    if (u < 0 || v < 0 || u >= order_ || v >= order_) return std::nullopt;
    for (auto [w, s] : adj_[u]) {
        if (w == v) return s;
    }
    return std::nullopt;
}

SignedGraph SignedGraph::switched(const std::vector<int>& vertex_set) const {
    std::vector<char> in(order_, 0);
    for (int v : vertex_set) {
        if (v < 0 || v >= order_) {
            throw std::invalid_argument("switch vertex out of range: " + std::to_string(v));
        }
        in[v] = 1;
    }
    std::vector<Edge> flipped = edges_;
    for (Edge& e : flipped) {
        if (in[e.u] != in[e.v]) e.sign = -e.sign;
    }
    return make(order_, flipped);
}

std::string SignedGraph::signature() const {
    std::ostringstream out;
    out << order_;
    for (const Edge& e : edges_) {
        out << ';' << e.u << ',' << e.v << ',' << sign_char(e.sign);
    }
    return out.str();
}

SignedGraph sigma_star_join(const SignedGraph& g1, const SignedGraph& g2,
                            const std::map<std::pair<int, int>, Sign>& cross_signs) {
    const int offset = g1.order();
    std::vector<Edge> edges = g1.edges();
    for (const Edge& e : g2.edges()) {
        edges.push_back({e.u + offset, e.v + offset, e.sign});
    }
    for (int u = 0; u < g1.order(); ++u) {
        for (int v = 0; v < g2.order(); ++v) {
            auto it = cross_signs.find({u, v});
            if (it == cross_signs.end()) {
                throw std::invalid_argument("missing cross pair (" + std::to_string(u) +
                                            ", " + std::to_string(v) + ")");
            }
            edges.push_back({u, v + offset, it->second});
        }
    }
    return SignedGraph::make(g1.order() + g2.order(), edges);
}

static SignedGraph constant_join(const SignedGraph& g1, const SignedGraph& g2, Sign s) {
    std::map<std::pair<int, int>, Sign> cross;
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) cross[{u, v}] = s;
    return sigma_star_join(g1, g2, cross);
}

SignedGraph all_positive_join(const SignedGraph& g1, const SignedGraph& g2) {
    return constant_join(g1, g2, Sign::positive);
}

SignedGraph all_negative_join(const SignedGraph& g1, const SignedGraph& g2) {
    return constant_join(g1, g2, Sign::negative);
}

}  // namespace sgc
