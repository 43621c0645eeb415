#ifndef SGC_RECOLOR_HPP
#define SGC_RECOLOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgc/coloring.hpp"
#include "sgc/signed_graph.hpp"
#include "sgc/solver.hpp"

namespace sgc {

/// Class-relabeling primitives.
/// type1: i-class -> r (r != 0)
/// type2: i-class -> 0 (i-class must be monochromatic-edge-free; caller checks)
/// type3: i-class -> r, (-i)-class -> -r (r != 0)
/// type4: i-class -> r1, (-i)-class -> r2 (r1, r2 != 0, r1 != -r2)
struct Replacement {
    enum class Kind { type1, type2, type3, type4 };
    Kind kind;
    int source = 0;   // i
    int target1 = 0;  // r / r1 (0 for type2)
    int target2 = 0;  // r2 (type4) or implied -r (type3)

    static Replacement type1(int i, int r);
    static Replacement type2(int i);
    static Replacement type3(int i, int r);
    static Replacement type4(int i, int r1, int r2);
};

/// Record of which dispatch case the constructive join colorer applied.
struct CaseTrace {
    std::string case_id;  // chi1-dominant, exception, M2zero-1.1 ... M2pos-2.3
    int chi1 = 0, chi2 = 0, M1 = 0, M2 = 0;
    bool exc1 = false, exc2 = false;
    bool swapped = false;  // inputs exchanged to enforce M1 >= M2
    std::vector<int> x_labels;  // deficiency labels x_1..x_M1
    std::vector<int> y_labels;  // y_1..y_M2
    std::vector<Replacement> replacements;
    int palette_size = 0;  // target color-set size
};

/// Thrown when a dispatch precondition fails, e.g. a required avoidable-color
/// witness is unavailable. Carries the trace assembled so far.
struct JoinColoringError : std::runtime_error {
    CaseTrace trace;
    JoinColoringError(const std::string& what, CaseTrace t)
        : std::runtime_error(what), trace(std::move(t)) {}
};

/// Relabel exactly the named color classes; the vertex partition into classes
/// is unchanged. Throws on violated target constraints or missing sources.
Coloration apply_replacement(const Coloration& kappa, const Replacement& rep);

/// Assign each color class of kappa (classes ordered by class color
/// ascending) a distinct target. Targets must be nonzero with pairwise
/// distinct absolute values; properness is preserved.
Coloration remap_into_palette(const Coloration& kappa, const std::vector<int>& targets);

/// The constructive colorer for the all-positive join: dispatches to the
/// case-by-case recoloration procedures and returns a proper coloration of
/// all_positive_join(g1, g2) whose declared color set is the predicted
/// minimal set, plus the CaseTrace. Witnesses are computed on demand when a
/// 2.1a/2.1b case needs one; absence surfaces as JoinColoringError.
std::pair<Coloration, CaseTrace> color_positive_join(
    const SignedGraph& g1, const SignedGraph& g2,
    const GraphStats& stats1, const GraphStats& stats2,
    const std::optional<AvoidableColorWitness>& witness1 = std::nullopt,
    const std::optional<AvoidableColorWitness>& witness2 = std::nullopt);

}  // namespace sgc

#endif
