#include "sgc/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace sgc {
namespace {

std::vector<int> degree_order(const SignedGraph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    return order;
}

bool compatible(const SignedGraph& g, const std::vector<int>& colors,
                const std::vector<char>& assigned, int v, int c) {
    for (auto [w, s] : g.neighbors(v)) {
        if (!assigned[w]) continue;
        if (s == Sign::positive ? colors[w] == c : colors[w] == -c) return false;
    }
    return true;
}

struct SearchState {
    const SignedGraph& g;
    const std::vector<int>& order;
    std::vector<int> colors;
    std::vector<char> assigned;
    std::vector<int> use_count;  // parallel to palette
    int distinct = 0;
    int max_distinct = 0;
};

bool search(SearchState& st, const std::vector<int>& palette, std::size_t pos) {
    if (pos == st.order.size()) return true;
    const int v = st.order[pos];
    const int remaining = static_cast<int>(st.order.size() - pos);
    (void)remaining;
    for (std::size_t i = 0; i < palette.size(); ++i) {
        const int c = palette[i];
        const bool fresh = st.use_count[i] == 0;
        if (fresh && st.distinct == st.max_distinct) continue;
        if (!compatible(st.g, st.colors, st.assigned, v, c)) continue;
        st.colors[v] = c;
        st.assigned[v] = 1;
        ++st.use_count[i];
        if (fresh) ++st.distinct;
        if (search(st, palette, pos + 1)) return true;
        --st.use_count[i];
        if (fresh) --st.distinct;
        st.assigned[v] = 0;
    }
    return false;
}

bool exists_coloring(const SignedGraph& g, const std::vector<int>& palette,
                     int max_distinct, const std::vector<int>& order,
                     std::vector<int>* out) {
    SearchState st{g, order, std::vector<int>(g.order(), 0),
                   std::vector<char>(g.order(), 0),
                   std::vector<int>(palette.size(), 0), 0, max_distinct};
    if (!search(st, palette, 0)) return false;
    if (out) *out = st.colors;
    return true;
}

std::vector<int> index_order(const SignedGraph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// Enumerates proper colorations using exactly `target_distinct` colors, up to
// sign-respecting renaming: absolute values are introduced in order 1, 2, ...
// with the positive sign first, and 0 (when allowed) may appear at any point.
// Calls `on_complete` for each canonical coloration; stops early when it
// returns false. Returns false iff some callback returned false.
struct CanonicalEnum {
    const SignedGraph& g;
    std::vector<int> order;
    bool allow_zero;
    int max_abs;
    int target_distinct;
    std::vector<int> colors;
    std::vector<char> assigned;
    std::vector<int> used;  // colors currently in use, with multiplicity via counts
    std::map<int, int> use_count;
    int max_abs_used = 0;

    bool run(const std::function<bool(const std::vector<int>&)>& on_complete) {
        return step(0, on_complete);
    }

    bool try_color(int c, std::size_t pos,
                   const std::function<bool(const std::vector<int>&)>& on_complete) {
        const int v = order[pos];
        if (!compatible(g, colors, assigned, v, c)) return true;
        const bool fresh = use_count.find(c) == use_count.end();
        if (fresh && static_cast<int>(distinct()) == target_distinct) return true;
        colors[v] = c;
        assigned[v] = 1;
        ++use_count[c];
        const int prev_max = max_abs_used;
        max_abs_used = std::max(max_abs_used, std::abs(c));
        const bool keep_going = step(pos + 1, on_complete);
        --use_count[c];
        if (use_count[c] == 0) use_count.erase(c);
        max_abs_used = prev_max;
        assigned[v] = 0;
        return keep_going;
    }

    std::size_t distinct() const { return use_count.size(); }

    bool step(std::size_t pos, const std::function<bool(const std::vector<int>&)>& on_complete) {
        if (pos == order.size()) {
            if (static_cast<int>(distinct()) != target_distinct) return true;
            return on_complete(colors);
        }
        const int remaining = static_cast<int>(order.size() - pos);
        if (static_cast<int>(distinct()) + remaining < target_distinct) return true;
        // Already-used colors.
        std::vector<int> in_use;
        in_use.reserve(use_count.size());
        for (auto& [c, n] : use_count) in_use.push_back(c);
        for (int c : in_use) {
            if (!try_color(c, pos, on_complete)) return false;
        }
        // Fresh colors, canonically: 0, negatives of used positives, next abs.
        if (allow_zero && !use_count.count(0)) {
            if (!try_color(0, pos, on_complete)) return false;
        }
        for (int c : in_use) {
            if (c > 0 && !use_count.count(-c)) {
                if (!try_color(-c, pos, on_complete)) return false;
            }
        }
        if (max_abs_used + 1 <= max_abs) {
            if (!try_color(max_abs_used + 1, pos, on_complete)) return false;
        }
        return true;
    }
};

// Every used color appears on both endpoints of some negative edge.
bool all_colors_negatively_pinned(const SignedGraph& g, const std::vector<int>& colors) {
    std::set<int> used(colors.begin(), colors.end());
    for (const Edge& e : g.edges()) {
        if (e.sign == Sign::negative && colors[e.u] == colors[e.v]) {
            used.erase(colors[e.u]);
        }
    }
    return used.empty();
}

}  // namespace

bool colorable_within(const SignedGraph& g, int n, int max_distinct) {
    const auto palette = minimal_color_set(n).members();
    const auto order = degree_order(g);
    return exists_coloring(g, palette, max_distinct, order, nullptr);
}

int chromatic_number(const SignedGraph& g) {
    if (g.order() < 1) throw std::invalid_argument("chromatic number of an empty graph");
    for (int n = 1; n <= 2 * g.order(); ++n) {
        if (colorable_within(g, n, n)) return n;
    }
    throw std::logic_error("unreachable: every graph is 2|V|-colorable");
}

std::pair<int, Coloration> max_deficiency(const SignedGraph& g, int chi) {
    const auto palette = minimal_color_set(chi).members();
    for (int t = 1; t <= chi; ++t) {
        if (!exists_coloring(g, palette, t, degree_order(g), nullptr)) continue;
        // Lexicographically least witness: vertex order 0..n-1, colors ascending.
        std::vector<int> witness;
        exists_coloring(g, palette, t, index_order(g), &witness);
        return {chi - t, Coloration{witness, minimal_color_set(chi)}};
    }
    throw std::logic_error("no proper coloration into M_chi; chi is wrong");
}

bool is_exceptional(const SignedGraph& g, int chi, int max_def,
                    ExceptionalityReading reading) {
    if (chi % 2 != 0) {
        throw std::invalid_argument("exceptionality is defined only for even chi");
    }
    const int t = chi - max_def;
    CanonicalEnum en{
        g,
        degree_order(g),
        /*allow_zero=*/reading == ExceptionalityReading::normalized,
        /*max_abs=*/reading == ExceptionalityReading::normalized ? t : chi / 2,
        t,
        std::vector<int>(g.order(), 0),
        std::vector<char>(g.order(), 0),
        {},
        {}};
    // Exceptional iff no t-coloration violates the pinning property.
    return en.run([&](const std::vector<int>& colors) {
        return all_colors_negatively_pinned(g, colors);
    });
}

std::optional<AvoidableColorWitness> find_avoidable_color_witness(
    const SignedGraph& g, int chi, int max_def) {
    if (chi % 2 != 0) {
        throw std::invalid_argument("avoidable-color witness needs even chi");
    }
    const int t = chi - max_def;
    const auto palette = minimal_color_set(chi).members();
    std::optional<AvoidableColorWitness> result;

    // Lex-order DFS over M_chi; stop at the first coloration with an
    // avoidable color.
    struct Frame {
        const SignedGraph& g;
        const std::vector<int>& palette;
        std::vector<int> colors;
        std::vector<char> assigned;
        std::vector<int> use_count;
        int distinct = 0;
        int max_distinct;
    } st{g, palette, std::vector<int>(g.order(), 0),
         std::vector<char>(g.order(), 0), std::vector<int>(palette.size(), 0),
         0, t};

    std::function<bool(int)> dfs = [&](int pos) -> bool {
        if (pos == g.order()) {
            // Find the avoidable color with smallest (|a|, negative last).
            std::set<int> used(st.colors.begin(), st.colors.end());
            std::set<int> pinned;
            for (const Edge& e : g.edges()) {
                if (st.colors[e.u] == st.colors[e.v]) pinned.insert(st.colors[e.u]);
            }
            int best = 0;
            bool found = false;
            for (int a : used) {
                if (pinned.count(a)) continue;
                if (!found || std::pair{std::abs(a), a < 0} < std::pair{std::abs(best), best < 0}) {
                    best = a;
                    found = true;
                }
            }
            if (!found) return false;
            result = AvoidableColorWitness{
                Coloration{st.colors, minimal_color_set(chi)}, best};
            return true;
        }
        for (std::size_t i = 0; i < palette.size(); ++i) {
            const int c = palette[i];
            const bool fresh = st.use_count[i] == 0;
            if (fresh && st.distinct == st.max_distinct) continue;
            if (!compatible(g, st.colors, st.assigned, pos, c)) continue;
            st.colors[pos] = c;
            st.assigned[pos] = 1;
            ++st.use_count[i];
            if (fresh) ++st.distinct;
            if (dfs(pos + 1)) return true;
            --st.use_count[i];
            if (fresh) --st.distinct;
            st.assigned[pos] = 0;
        }
        return false;
    };
    dfs(0);
    return result;
}

GraphStats compute_stats(const SignedGraph& g) {
    GraphStats stats;
    stats.chi = chromatic_number(g);
    auto [m, witness] = max_deficiency(g, stats.chi);
    stats.max_def = m;
    stats.min_coloration = witness;
    stats.deficiency_set = deficiency(witness, minimal_color_set(stats.chi)).second;
    stats.exceptional_defined = stats.chi % 2 == 0;
    stats.exceptional =
        stats.exceptional_defined && is_exceptional(g, stats.chi, stats.max_def);
    return stats;
}

}  // namespace sgc
