#include "sgc/coloring.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sgc {

ColorSet::ColorSet(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("color set size must be positive");
}

bool ColorSet::contains(int color) const {
    if (color == 0) return includes_zero();
    return std::abs(color) <= k();
}

std::vector<int> ColorSet::members() const {
    std::vector<int> out;
    out.reserve(n_);
    for (int c = -k(); c <= k(); ++c) {
        if (c == 0 && !includes_zero()) continue;
        out.push_back(c);
    }
    return out;
}

ColorSet minimal_color_set(int n) { return ColorSet(n); }

bool is_proper(const SignedGraph& g, const Coloration& kappa) {
    if (static_cast<int>(kappa.colors.size()) != g.order()) {
        throw std::invalid_argument("coloration is not total on V(g)");
    }
    for (const Edge& e : g.edges()) {
        const int cu = kappa.colors[e.u];
        const int cv = kappa.colors[e.v];
        if (e.sign == Sign::positive ? cu == cv : cu == -cv) return false;
    }
    return true;
}

std::pair<int, std::set<int>> deficiency(const Coloration& kappa, const ColorSet& cs) {
    std::set<int> image;
    for (int c : kappa.colors) {
        if (!cs.contains(c)) {
            throw std::invalid_argument("color " + std::to_string(c) +
                                        " outside the color set");
        }
        image.insert(c);
    }
    std::set<int> unused;
    for (int c : cs.members()) {
        if (!image.count(c)) unused.insert(c);
    }
    return {static_cast<int>(unused.size()), unused};
}

}  // namespace sgc
