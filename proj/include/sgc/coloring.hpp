#ifndef SGC_COLORING_HPP
#define SGC_COLORING_HPP

#include <optional>
#include <set>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc {

/// The canonical symmetric palette M_n: {+-1..+-k} when n = 2k,
/// {+-1..+-k, 0} when n = 2k+1. M_1 = {0}.
class ColorSet {
public:
    explicit ColorSet(int n);

    int size() const { return n_; }
    int k() const { return n_ / 2; }
    bool includes_zero() const { return n_ % 2 == 1; }
    bool contains(int color) const;

    /// Members in ascending integer order.
    std::vector<int> members() const;

    friend bool operator==(const ColorSet&, const ColorSet&) = default;

private:
    int n_;
};

ColorSet minimal_color_set(int n);

/// Total integer labeling of the vertices of some graph, optionally measured
/// against a declared ColorSet.
struct Coloration {
    std::vector<int> colors;  // indexed by vertex
    std::optional<ColorSet> declared_set;

    int color_of(int v) const { return colors[v]; }
    std::set<int> image() const { return {colors.begin(), colors.end()}; }
    int distinct_colors() const { return static_cast<int>(image().size()); }
};

/// True iff every positive edge has differing endpoint colors and every
/// negative edge has endpoint colors that are not negatives of each other.
bool is_proper(const SignedGraph& g, const Coloration& kappa);

/// Count and set of cs members absent from kappa's image. Throws if kappa
/// uses a color outside cs.
std::pair<int, std::set<int>> deficiency(const Coloration& kappa, const ColorSet& cs);

}  // namespace sgc

#endif
