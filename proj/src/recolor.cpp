#include "sgc/recolor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "sgc/theorem.hpp"

namespace sgc {
namespace {

std::map<int, std::vector<int>> color_classes(const Coloration& kappa) {
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < static_cast<int>(kappa.colors.size()); ++v) {
        classes[kappa.colors[v]].push_back(v);
    }
    return classes;
}

Coloration apply_color_map(const Coloration& kappa, const std::map<int, int>& plan) {
    Coloration out = kappa;
    out.declared_set.reset();
    for (int& c : out.colors) {
        auto it = plan.find(c);
        if (it != plan.end()) c = it->second;
    }
    return out;
}

// Deficiency labels ordered by increasing absolute value, positive first.
std::vector<int> sorted_labels(const std::set<int>& colors) {
    std::vector<int> out(colors.begin(), colors.end());
    std::sort(out.begin(), out.end(), [](int a, int b) {
        return std::pair{std::abs(a), a < 0} < std::pair{std::abs(b), b < 0};
    });
    return out;
}

// Positive c with both c and -c in `used`, excluding absolute values in
// `consumed`, ascending.
std::vector<int> whole_pairs(const std::set<int>& used, const std::set<int>& consumed_abs) {
    std::vector<int> out;
    for (int c : used) {
        if (c <= 0) continue;
        if (consumed_abs.count(c)) continue;
        if (used.count(-c)) out.push_back(c);
    }
    return out;
}

// Sign-respecting renaming of a witness coloration so that color_a becomes 1;
// swaps the absolute values |a| and 1 and fixes signs accordingly.
Coloration rename_witness_to_one(const AvoidableColorWitness& w) {
    const int a = w.color_a;
    const int aa = std::abs(a);
    const int s = a > 0 ? 1 : -1;
    Coloration out = w.coloration;
    for (int& c : out.colors) {
        const int ab = std::abs(c);
        const int cs = c > 0 ? 1 : -1;
        if (ab == aa) {
            c = cs * s * 1;
        } else if (ab == 1) {
            c = cs * s * aa;
        }
    }
    return out;
}

struct Construction {
    std::vector<int> colors_a;  // role A: the side with M1 >= M2
    std::vector<int> colors_b;
    std::vector<Replacement> reps;
};

void push_type1(std::map<int, int>& plan, std::vector<Replacement>& reps, int from, int to) {
    plan[from] = to;
    reps.push_back(Replacement::type1(from, to));
}

void push_type3(std::map<int, int>& plan, std::vector<Replacement>& reps, int c, int r) {
    plan[c] = r;
    plan[-c] = -r;
    reps.push_back(Replacement::type3(c, r));
}

void push_type4(std::map<int, int>& plan, std::vector<Replacement>& reps, int c,
                int r1, int r2) {
    plan[c] = r1;
    plan[-c] = r2;
    reps.push_back(Replacement::type4(c, r1, r2));
}

}  // namespace

Replacement Replacement::type1(int i, int r) {
    if (r == 0) throw std::invalid_argument("type1 target must be nonzero");
    return {Kind::type1, i, r, 0};
}

Replacement Replacement::type2(int i) {
    if (i == 0) throw std::invalid_argument("type2 source must be nonzero");
    return {Kind::type2, i, 0, 0};
}

Replacement Replacement::type3(int i, int r) {
    if (i == 0) throw std::invalid_argument("type3 source must be nonzero");
    if (r == 0) throw std::invalid_argument("type3 target must be nonzero");
    return {Kind::type3, i, r, -r};
}

Replacement Replacement::type4(int i, int r1, int r2) {
    if (i == 0) throw std::invalid_argument("type4 source must be nonzero");
    if (r1 == 0 || r2 == 0) throw std::invalid_argument("type4 targets must be nonzero");
    if (r1 == -r2) throw std::invalid_argument("type4 forbids r1 == -r2");
    return {Kind::type4, i, r1, r2};
}

Coloration apply_replacement(const Coloration& kappa, const Replacement& rep) {
    const auto image = kappa.image();
    auto require_source = [&](int c) {
        if (!image.count(c)) {
            throw std::invalid_argument("source color " + std::to_string(c) +
                                        " not in the coloration's image");
        }
    };
    std::map<int, int> plan;
    switch (rep.kind) {
        case Replacement::Kind::type1:
            require_source(rep.source);
            plan[rep.source] = rep.target1;
            break;
        case Replacement::Kind::type2:
            require_source(rep.source);
            plan[rep.source] = 0;
            break;
        case Replacement::Kind::type3:
        case Replacement::Kind::type4:
            require_source(rep.source);
            require_source(-rep.source);
            plan[rep.source] = rep.target1;
            plan[-rep.source] = rep.target2;
            break;
    }
    return apply_color_map(kappa, plan);
}

Coloration remap_into_palette(const Coloration& kappa, const std::vector<int>& targets) {
    std::set<int> abs_seen;
    for (int t : targets) {
        if (t == 0) throw std::invalid_argument("palette target 0 is not allowed");
        if (!abs_seen.insert(std::abs(t)).second) {
            throw std::invalid_argument("palette targets must have distinct absolute values");
        }
    }
    const auto classes = color_classes(kappa);
    if (targets.size() < classes.size()) {
        throw std::invalid_argument("too few palette targets for the color classes");
    }
    std::map<int, int> plan;
    std::size_t i = 0;
    for (const auto& [c, verts] : classes) plan[c] = targets[i++];
    return apply_color_map(kappa, plan);
}

namespace {

// ---- the per-case procedures ------------------------------------------------
//
// Role A is the side with the larger maximum deficiency. Throughout:
//   kA = floor(chiA / 2), x = deficiency labels of kappa_A (|.| ascending,
//   positive first), y = same for kappa_B.

struct CaseContext {
    const SignedGraph& ga;
    const SignedGraph& gb;
    const GraphStats& sa;
    const GraphStats& sb;
    int chiA, chiB, MA, MB, kA, kB, lb;
};

Construction build_L41(const CaseContext& c, CaseTrace& trace) {
    Construction out;
    out.colors_a = c.sa.min_coloration.colors;
    const auto targets = sorted_labels(c.sa.deficiency_set);
    const Coloration remapped = remap_into_palette(c.sb.min_coloration, targets);
    out.colors_b = remapped.colors;
    const auto classes = color_classes(c.sb.min_coloration);
    std::size_t i = 0;
    for (const auto& [col, verts] : classes) {
        out.reps.push_back(Replacement::type1(col, targets[i++]));
    }
    trace.x_labels = targets;
    return out;
}

Construction build_L42(const CaseContext& c, CaseTrace& trace) {
    Construction out;
    out.colors_a = c.sa.min_coloration.colors;
    const auto x = sorted_labels(c.sa.deficiency_set);
    const auto y = sorted_labels(c.sb.deficiency_set);
    trace.x_labels = x;
    trace.y_labels = y;

    const auto used = c.sb.min_coloration.image();
    std::map<int, int> plan;
    std::set<int> consumed;
    for (int j = 0; j < c.MB; ++j) {  // skipped automatically when MB == 0
        push_type1(plan, out.reps, -y[j], x[j]);
        consumed.insert(std::abs(y[j]));
    }
    const auto pairs = whole_pairs(used, consumed);
    const int q4 = (c.MA - c.MB - 1) / 2;
    int i = 0;
    for (; i < q4; ++i) {
        push_type4(plan, out.reps, pairs[i], x[c.MB + 2 * i], x[c.MB + 2 * i + 1]);
    }
    for (int j = 0; i < static_cast<int>(pairs.size()); ++i, ++j) {
        push_type3(plan, out.reps, pairs[i], c.kA + 1 + j);
    }
    out.colors_b = apply_color_map(c.sb.min_coloration, plan).colors;
    return out;
}

Construction build_M2zero_1x(const CaseContext& c, CaseTrace& trace, bool both_odd) {
    // Cases 1.1 and 1.2: MA even, Sigma_2 colored with the full M_chiB set.
    Construction out;
    out.colors_a = c.sa.min_coloration.colors;
    const auto x = sorted_labels(c.sa.deficiency_set);
    trace.x_labels = x;

    std::map<int, int> plan;
    for (int i = 1; i <= c.MA / 2; ++i) {
        push_type1(plan, out.reps, i, x[2 * i - 2]);
        push_type1(plan, out.reps, -i, x[2 * i - 1]);
    }
    for (int i = c.MA / 2 + 1; i <= c.kB; ++i) {
        push_type3(plan, out.reps, i, c.kA + (i - c.MA / 2));
    }
    if (both_odd) {
        const int z = c.kA + c.kB - c.MA / 2 + 1;
        std::map<int, int> plan_a{{0, z}};
        out.reps.push_back(Replacement::type1(0, z));
        out.colors_a = apply_color_map(c.sa.min_coloration, plan_a).colors;
        push_type1(plan, out.reps, 0, -z);
    }
    out.colors_b = apply_color_map(c.sb.min_coloration, plan).colors;
    return out;
}

Construction build_M2zero_21a(const CaseContext& c, CaseTrace& trace,
                              const Coloration& kappa_a) {
    Construction out;
    std::map<int, int> plan_a{{1, 0}};
    out.reps.push_back(Replacement::type2(1));
    out.colors_a = apply_color_map(kappa_a, plan_a).colors;
    const auto x = sorted_labels(
        deficiency(kappa_a, minimal_color_set(c.chiA)).second);
    trace.x_labels = x;

    std::map<int, int> plan;
    push_type1(plan, out.reps, -1, x[0]);
    const int m = (c.MA + 1) / 2;
    for (int j = 2; j <= m; ++j) {
        push_type1(plan, out.reps, j, x[2 * j - 3]);
        push_type1(plan, out.reps, -j, x[2 * j - 2]);
    }
    for (int j = m + 1; j <= c.kB; ++j) {
        push_type3(plan, out.reps, j, c.kA + (j - m));
    }
    out.colors_b = apply_color_map(c.sb.min_coloration, plan).colors;
    return out;
}

Construction build_M2zero_21b(const CaseContext& c, CaseTrace& trace,
                              const Coloration& kappa_b) {
    Construction out;
    out.colors_a = c.sa.min_coloration.colors;
    const auto x = sorted_labels(c.sa.deficiency_set);
    trace.x_labels = x;

    std::map<int, int> plan;
    plan[1] = 0;
    out.reps.push_back(Replacement::type2(1));
    push_type1(plan, out.reps, -1, x[c.MA - 1]);
    const int m = (c.MA + 1) / 2;
    for (int j = 2; j <= m; ++j) {
        push_type1(plan, out.reps, j, x[2 * j - 4]);
        push_type1(plan, out.reps, -j, x[2 * j - 3]);
    }
    for (int j = m + 1; j <= c.kB; ++j) {
        push_type3(plan, out.reps, j, c.kA + (j - m));
    }
    out.colors_b = apply_color_map(kappa_b, plan).colors;
    return out;
}

Construction build_M2zero_22(const CaseContext& c, CaseTrace& trace) {
    Construction out;
    const auto x = sorted_labels(c.sa.deficiency_set);
    trace.x_labels = x;
    std::map<int, int> plan_a{{0, -(c.kA + 1)}};
    out.reps.push_back(Replacement::type1(0, -(c.kA + 1)));
    out.colors_a = apply_color_map(c.sa.min_coloration, plan_a).colors;

    std::map<int, int> plan;
    const int m = (c.MA + 1) / 2;
    for (int j = 1; j < m; ++j) {
        push_type1(plan, out.reps, j, x[2 * j - 2]);
        push_type1(plan, out.reps, -j, x[2 * j - 1]);
    }
    push_type4(plan, out.reps, m, x[c.MA - 1], c.kA + 1);
    for (int j = m + 1; j <= c.kB; ++j) {
        push_type3(plan, out.reps, j, c.kA + 1 + (j - m));
    }
    out.colors_b = apply_color_map(c.sb.min_coloration, plan).colors;
    return out;
}

Construction build_M2zero_23(const CaseContext& c, CaseTrace& trace) {
    Construction out;
    out.colors_a = c.sa.min_coloration.colors;
    const auto x = sorted_labels(c.sa.deficiency_set);
    trace.x_labels = x;

    std::map<int, int> plan;
    for (int j = 1; j <= (c.MA - 1) / 2; ++j) {
        push_type1(plan, out.reps, j, x[2 * j - 2]);
        push_type1(plan, out.reps, -j, x[2 * j - 1]);
    }
    push_type1(plan, out.reps, 0, x[c.MA - 1]);
    for (int j = (c.MA + 1) / 2; j <= c.kB; ++j) {
        push_type3(plan, out.reps, j, c.kA + (j - (c.MA - 1) / 2));
    }
    out.colors_b = apply_color_map(c.sb.min_coloration, plan).colors;
    return out;
}

// M2 > 0 cases. kappa_a / kappa_b default to the stats witnesses; 2.1a / 2.1b
// substitute an avoidable-color witness (renamed so a = 1) on one side.
struct PosPlan {
    bool zero_a_to = false;
    int zero_a_target = 0;          // type 1 on Sigma_1's 0-class
    bool a_to_zero_on_a = false;    // type 2 on Sigma_1 (2.1a)
    bool a_to_zero_on_b = false;    // type 2 on Sigma_2 (2.1b)
    bool zero_b_first = false;      // Sigma_2 0-class target, applied before singles
    int zero_b_target = 0;
    int extra_pair_targets = 0;     // 0: none, 1: append color a, 2: (x_MA, kA+1)
    int fresh_base = 0;             // first type-3 absolute value minus 1
    int q4_end = 0;                 // last x index (1-based) fed to type 4 pairs
};

Construction build_M2pos(const CaseContext& c, CaseTrace& trace,
                         const Coloration& kappa_a, const Coloration& kappa_b,
                         const PosPlan& p) {
    Construction out;
    const auto x = sorted_labels(deficiency(kappa_a, minimal_color_set(c.chiA)).second);
    const auto y = sorted_labels(deficiency(kappa_b, minimal_color_set(c.chiB)).second);
    trace.x_labels = x;
    trace.y_labels = y;

    std::map<int, int> plan_a;
    if (p.a_to_zero_on_a) {
        plan_a[1] = 0;
        out.reps.push_back(Replacement::type2(1));
    }
    if (p.zero_a_to) {
        plan_a[0] = p.zero_a_target;
        out.reps.push_back(Replacement::type1(0, p.zero_a_target));
    }
    out.colors_a = apply_color_map(kappa_a, plan_a).colors;

    std::map<int, int> plan;
    std::set<int> consumed;
    if (p.a_to_zero_on_b) {
        plan[1] = 0;
        out.reps.push_back(Replacement::type2(1));
        push_type1(plan, out.reps, -1, x[c.MA - 1]);
        consumed.insert(1);
    }
    if (p.zero_b_first) {
        push_type1(plan, out.reps, 0, p.zero_b_target);
    }
    for (int j = 0; j < c.MB; ++j) {
        push_type1(plan, out.reps, -y[j], x[j]);
        consumed.insert(std::abs(y[j]));
    }
    const auto pairs = whole_pairs(kappa_b.image(), consumed);

    // Type 4 block: pairs consume x_{MB+1}..x_{q4_end} two at a time, plus the
    // color a itself in case 2.1a.
    std::vector<int> t4;
    for (int j = c.MB; j < p.q4_end; ++j) t4.push_back(x[j]);
    if (p.extra_pair_targets == 1) t4.push_back(1);
    const int q4 = static_cast<int>(t4.size()) / 2;
    int i = 0;
    for (; i < q4; ++i) {
        push_type4(plan, out.reps, pairs[i], t4[2 * i], t4[2 * i + 1]);
    }
    if (p.extra_pair_targets == 2) {
        push_type4(plan, out.reps, pairs[i], x[c.MA - 1], c.kA + 1);
        ++i;
    }
    for (int j = 1; i < static_cast<int>(pairs.size()); ++i, ++j) {
        push_type3(plan, out.reps, pairs[i], p.fresh_base + j);
    }
    out.colors_b = apply_color_map(kappa_b, plan).colors;
    return out;
}

std::optional<AvoidableColorWitness> obtain_witness(
    const SignedGraph& g, const GraphStats& st,
    const std::optional<AvoidableColorWitness>& provided) {
    if (provided) return provided;
    return find_avoidable_color_witness(g, st.chi, st.max_def);
}

void check_result(const SignedGraph& join, const Coloration& kappa, int palette_size,
                  int side_split, const CaseTrace& trace) {
    const ColorSet cs = minimal_color_set(palette_size);
    for (int c : kappa.colors) {
        if (!cs.contains(c)) {
            throw std::logic_error("case " + trace.case_id + ": color " +
                                   std::to_string(c) + " outside M_" +
                                   std::to_string(palette_size));
        }
    }
    if (!is_proper(join, kappa)) {
        throw std::logic_error("case " + trace.case_id + ": constructed coloration improper");
    }
    std::set<int> left(kappa.colors.begin(), kappa.colors.begin() + side_split);
    for (int i = side_split; i < static_cast<int>(kappa.colors.size()); ++i) {
        if (left.count(kappa.colors[i])) {
            throw std::logic_error("case " + trace.case_id +
                                   ": color shared across the join partition");
        }
    }
}

}  // namespace

std::pair<Coloration, CaseTrace> color_positive_join(
    const SignedGraph& g1, const SignedGraph& g2,
    const GraphStats& stats1, const GraphStats& stats2,
    const std::optional<AvoidableColorWitness>& witness1,
    const std::optional<AvoidableColorWitness>& witness2) {
    for (const auto* st : {&stats1, &stats2}) {
        if (st->max_def > st->chi / 2) {
            throw std::invalid_argument("stats inconsistent: M > floor(chi/2)");
        }
    }
    if (!is_proper(g1, stats1.min_coloration) || !is_proper(g2, stats2.min_coloration)) {
        throw std::invalid_argument("stats inconsistent with graphs");
    }

    const bool swapped = stats1.max_def < stats2.max_def;
    const SignedGraph& ga = swapped ? g2 : g1;
    const SignedGraph& gb = swapped ? g1 : g2;
    const GraphStats& sa = swapped ? stats2 : stats1;
    const GraphStats& sb = swapped ? stats1 : stats2;
    const auto& wa = swapped ? witness2 : witness1;
    const auto& wb = swapped ? witness1 : witness2;

    CaseContext c{ga, gb, sa, sb,
                  sa.chi, sb.chi, sa.max_def, sb.max_def,
                  sa.chi / 2, sb.chi / 2,
                  sa.chi + sb.chi - sa.max_def - sb.max_def};

    CaseTrace trace;
    trace.chi1 = c.chiA;
    trace.chi2 = c.chiB;
    trace.M1 = c.MA;
    trace.M2 = c.MB;
    trace.exc1 = sa.exceptional;
    trace.exc2 = sb.exceptional;
    trace.swapped = swapped;

    const JoinPrediction pred = predicted_chromatic(sa.chi, sa.max_def, sa.exceptional,
                                                    sb.chi, sb.max_def, sb.exceptional);
    trace.palette_size = pred.value;

    const bool both_even = c.chiA % 2 == 0 && c.chiB % 2 == 0;
    const bool one_m_odd = (c.MA + c.MB) % 2 == 1;

    Construction built;
    if (c.chiA >= c.lb) {
        trace.case_id = "chi1-dominant";
        built = build_L41(c, trace);
    } else if (both_even && one_m_odd && sa.exceptional && sb.exceptional) {
        trace.case_id = "exception";
        built = build_L42(c, trace);
    } else if (c.MB == 0) {
        if (c.MA % 2 == 0) {
            const bool both_odd = c.chiA % 2 == 1 && c.chiB % 2 == 1;
            trace.case_id = both_odd ? "M2zero-1.2" : "M2zero-1.1";
            built = build_M2zero_1x(c, trace, both_odd);
        } else if (both_even) {
            std::optional<AvoidableColorWitness> w;
            if (!sa.exceptional && (w = obtain_witness(ga, sa, wa))) {
                trace.case_id = "M2zero-2.1a";
                built = build_M2zero_21a(c, trace, rename_witness_to_one(*w));
            } else if (!sb.exceptional && (w = obtain_witness(gb, sb, wb))) {
                trace.case_id = "M2zero-2.1b";
                built = build_M2zero_21b(c, trace, rename_witness_to_one(*w));
            } else {
                trace.case_id = "M2zero-2.1";
                throw JoinColoringError("no avoidable-color witness inside M_chi on either side",
                                        trace);
            }
        } else if (c.chiA % 2 == 1 && c.chiB % 2 == 0) {
            trace.case_id = "M2zero-2.2";
            built = build_M2zero_22(c, trace);
        } else {
            trace.case_id = "M2zero-2.3";
            built = build_M2zero_23(c, trace);
        }
    } else {
        if ((c.MA - c.MB) % 2 == 0) {
            const bool both_odd = c.chiA % 2 == 1 && c.chiB % 2 == 1;
            PosPlan p;
            p.q4_end = c.MA;
            if (both_odd) {
                trace.case_id = "M2pos-1.1";
                p.zero_a_to = true;
                p.zero_a_target = c.kA + 1;
                p.zero_b_first = true;
                p.zero_b_target = -(c.kA + 1);
                p.fresh_base = c.kA + 1;
            } else {
                trace.case_id = "M2pos-1.2";
                p.fresh_base = c.kA;
            }
            built = build_M2pos(c, trace, sa.min_coloration, sb.min_coloration, p);
        } else if (both_even) {
            std::optional<AvoidableColorWitness> w;
            if (!sa.exceptional && (w = obtain_witness(ga, sa, wa))) {
                trace.case_id = "M2pos-2.1a";
                PosPlan p;
                p.a_to_zero_on_a = true;
                p.q4_end = c.MA;
                p.extra_pair_targets = 1;
                p.fresh_base = c.kA;
                built = build_M2pos(c, trace, rename_witness_to_one(*w),
                                    sb.min_coloration, p);
            } else if (!sb.exceptional && (w = obtain_witness(gb, sb, wb))) {
                trace.case_id = "M2pos-2.1b";
                PosPlan p;
                p.a_to_zero_on_b = true;
                p.q4_end = c.MA - 1;
                p.fresh_base = c.kA;
                built = build_M2pos(c, trace, sa.min_coloration,
                                    rename_witness_to_one(*w), p);
            } else {
                trace.case_id = "M2pos-2.1";
                throw JoinColoringError("no avoidable-color witness inside M_chi on either side",
                                        trace);
            }
        } else if (c.chiA % 2 == 1 && c.chiB % 2 == 0) {
            trace.case_id = "M2pos-2.2";
            PosPlan p;
            p.zero_a_to = true;
            p.zero_a_target = -(c.kA + 1);
            p.q4_end = c.MA - 1;
            p.extra_pair_targets = 2;
            p.fresh_base = c.kA + 1;
            built = build_M2pos(c, trace, sa.min_coloration, sb.min_coloration, p);
        } else {
            trace.case_id = "M2pos-2.3";
            PosPlan p;
            p.zero_b_first = true;
            p.zero_b_target = 0;  // placeholder; set below from x labels
            p.q4_end = c.MA - 1;
            p.fresh_base = c.kA;
            const auto x = sorted_labels(sa.deficiency_set);
            p.zero_b_target = x[c.MA - 1];
            built = build_M2pos(c, trace, sa.min_coloration, sb.min_coloration, p);
        }
    }

    trace.replacements = built.reps;

    // Assemble in the callers' vertex order: g1's block first.
    Coloration result;
    result.declared_set = minimal_color_set(pred.value);
    if (!swapped) {
        result.colors = built.colors_a;
        result.colors.insert(result.colors.end(), built.colors_b.begin(),
                             built.colors_b.end());
    } else {
        result.colors = built.colors_b;
        result.colors.insert(result.colors.end(), built.colors_a.begin(),
                             built.colors_a.end());
    }

    const SignedGraph join = all_positive_join(g1, g2);
    check_result(join, result, pred.value, g1.order(), trace);
    return {result, trace};
}

}  // namespace sgc
