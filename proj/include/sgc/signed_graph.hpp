#ifndef SGC_SIGNED_GRAPH_HPP
#define SGC_SIGNED_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgc {

enum class Sign : std::int8_t { positive = +1, negative = -1 };

inline Sign operator-(Sign s) {
    return s == Sign::positive ? Sign::negative : Sign::positive;
}

inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

struct Edge {
    int u;  // u < v always
    int v;
    Sign sign;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph with a +/- sign on every edge. Vertices are 0..order()-1.
/// Immutable after construction; all operations return new graphs.
class SignedGraph {
public:
    SignedGraph() = default;

    /// Validates and canonicalizes the edge list (endpoints swapped to u < v,
    /// edges sorted). Throws std::invalid_argument on loops, duplicate pairs,
    /// or out-of-range endpoints.
    static SignedGraph make(int order, const std::vector<Edge>& edges);

    int order() const { return order_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sign of the edge {u, v}, or nullopt if not adjacent.
    std::optional<Sign> sign_of(int u, int v) const;

    /// Neighbors of v as (neighbor, sign) pairs, ascending by neighbor.
    const std::vector<std::pair<int, Sign>>& neighbors(int v) const {
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Flip the sign of every edge with exactly one endpoint in vertex_set.
    SignedGraph switched(const std::vector<int>& vertex_set) const;

    /// Canonical text key (order + sorted signed edge list); used for
    /// memoization and equality.
    std::string signature() const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, Sign>>> adj_;

    void build_adjacency();
};

/// Disjoint union of g1 and g2 (g2's vertices shifted by g1.order()) plus
/// every cross edge (u, v+offset), signed by cross_signs. Throws if a cross
/// pair is missing from the map.
SignedGraph sigma_star_join(const SignedGraph& g1, const SignedGraph& g2,
                            const std::map<std::pair<int, int>, Sign>& cross_signs);

SignedGraph all_positive_join(const SignedGraph& g1, const SignedGraph& g2);
SignedGraph all_negative_join(const SignedGraph& g1, const SignedGraph& g2);

}  // namespace sgc

#endif
