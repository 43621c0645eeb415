#ifndef SGC_SOLVER_HPP
#define SGC_SOLVER_HPP

#include <optional>
#include <set>

#include "sgc/coloring.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

/// Exact (chi, M, exceptionality) bundle plus the witness coloration the
/// constructive procedures consume.
struct GraphStats {
    int chi = 0;
    int max_def = 0;
    bool exceptional = false;       // meaningful only when exceptional_defined
    bool exceptional_defined = false;  // false when chi is odd
    Coloration min_coloration;      // proper, chi - max_def colors of M_chi,
                                    // lexicographically least such vector
    std::set<int> deficiency_set;   // M_chi members unused by min_coloration
};

struct AvoidableColorWitness {
    Coloration coloration;  // chi - max_def colors inside M_chi
    int color_a = 0;        // used color with no monochromatic edge
};

/// Which color universe the exceptionality quantifier ranges over.
/// Normalized: all colorations using exactly t = chi - M distinct colors,
/// renamed into {+-1..+-t, 0}. Narrow: colorations inside M_chi only.
enum class ExceptionalityReading { normalized, narrow };

/// Least n such that g has a proper coloration into M_n. Exact backtracking;
/// vertices in descending-degree order. Throws on order 0.
int chromatic_number(const SignedGraph& g);

/// M(g) = chi - (minimum distinct colors over proper colorations into M_chi),
/// plus the lexicographically least witness attaining it.
std::pair<int, Coloration> max_deficiency(const SignedGraph& g, int chi);

/// True iff every proper coloration of g using exactly chi - max_def distinct
/// colors (over the reading's universe) has each used color on both endpoints
/// of some negative edge. Throws if chi is odd.
bool is_exceptional(const SignedGraph& g, int chi, int max_def,
                    ExceptionalityReading reading = ExceptionalityReading::normalized);

/// A proper coloration inside M_chi with exactly chi - max_def colors whose
/// color_a class has no monochromatic edge; nullopt when none exists.
/// Requires even chi.
std::optional<AvoidableColorWitness> find_avoidable_color_witness(
    const SignedGraph& g, int chi, int max_def);

/// Full stats bundle (exceptionality under the normalized reading).
GraphStats compute_stats(const SignedGraph& g);

/// True iff a proper coloration of g into M_n exists using at most
/// max_distinct distinct colors. Exposed for tests and sweeps.
bool colorable_within(const SignedGraph& g, int n, int max_distinct);

}  // namespace sgc

#endif
