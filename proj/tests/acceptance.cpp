// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// hard failure. Witness-unavailable counts are reported, not failed.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sgc/io.hpp"
#include "sgc/recolor.hpp"
#include "sgc/solver.hpp"
#include "sgc/theorem.hpp"

using namespace sgc;
using namespace sgc::fixtures;

namespace {

int failures = 0;

void result(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion
              << ": " << detail << "\n";
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// Criterion 4 size schedule: 500 pairs, 4 <= |V1|+|V2| <= 8.
struct SizeJob {
    int n1, n2, count;
};
const std::vector<SizeJob> kRandomJobs = {
    {2, 2, 63}, {2, 3, 63}, {3, 3, 63}, {2, 4, 63},
    {3, 4, 62}, {4, 4, 62}, {3, 5, 62}, {2, 6, 62},
};

VerificationReport run_random_sweep(std::uint64_t seed_base) {
    VerificationReport merged;
    for (std::size_t j = 0; j < kRandomJobs.size(); ++j) {
        const auto& job = kRandomJobs[j];
        auto part = verify_random(job.count, job.n1, job.n2, seed_base + j);
        merged.agree_count += part.agree_count;
        merged.mismatch_count += part.mismatch_count;
        merged.witness_unavailable_count += part.witness_unavailable_count;
        for (auto& rec : part.pairs) merged.pairs.push_back(std::move(rec));
        for (auto& f : part.findings) merged.findings.push_back(std::move(f));
    }
    return merged;
}

}  // namespace

int main() {
    // ---- Criterion 1: Graph A fixture.
    {
        const auto start = std::chrono::steady_clock::now();
        const auto a = graph_a();
        const auto st = compute_stats(a);
        const Coloration reference{graph_a_coloring(), {}};
        const auto [def, def_set] = deficiency(reference, ColorSet(6));
        const double secs = seconds_since(start);
        const bool pass = st.chi == 6 && st.max_def == 3 && st.exceptional_defined &&
                          st.exceptional && is_proper(a, reference) && def == 3 &&
                          secs < 10.0;
        std::ostringstream d;
        d << "graph A chi=" << st.chi << " M=" << st.max_def
          << " exceptional=" << (st.exceptional ? "yes" : "no")
          << " reference-coloration proper=" << (is_proper(a, reference) ? "yes" : "no")
          << " deficiency=" << def << " (" << secs << " s)";
        result(1, pass, d.str());
    }

    // ---- Criterion 2: complete graphs on 4k vertices with a negative
    // perfect matching, k = 1 and k = 2.
    {
        const auto start = std::chrono::steady_clock::now();
        const auto st4 = compute_stats(k4k_negative_matching(1));
        const auto st8 = compute_stats(k4k_negative_matching(2));
        const double secs = seconds_since(start);
        const bool pass = st4.chi == 2 && st4.max_def == 0 && st4.exceptional &&
                          st8.chi == 4 && st8.max_def == 0 && st8.exceptional &&
                          secs < 60.0;
        std::ostringstream d;
        d << "K4 chi=" << st4.chi << " M=" << st4.max_def
          << " exc=" << st4.exceptional << "; K8 chi=" << st8.chi
          << " M=" << st8.max_def << " exc=" << st8.exceptional << " (" << secs
          << " s)";
        result(2, pass, d.str());
    }

    // ---- Criterion 3: exhaustive sweep, all ordered pairs up to 3 vertices
    // per side. The report is reused by criteria 5, 6, and 8.
    VerificationReport exhaustive;
    {
        const auto start = std::chrono::steady_clock::now();
        exhaustive = verify_exhaustive(3, 3);
        const double secs = seconds_since(start);
        const bool pass = exhaustive.mismatch_count == 0 && secs < 600.0;
        std::ostringstream d;
        d << exhaustive.pairs.size() << " pairs, theorem mismatches="
          << exhaustive.mismatch_count << " (" << secs << " s)";
        result(3, pass, d.str());
    }

    // ---- Criterion 4: 500 seeded random pairs, byte-identical on re-run.
    // Genuine formula counterexamples exist once a side has an odd chromatic
    // number: such a graph may use fewer than chi - M distinct colors inside
    // the join's larger even color set, where its minimal-set accounting does
    // not transfer. Smallest instance: positive K2 joined with the 4-vertex
    // graph (01+, 02+, 03-, 12-, 13+, 23-), predicted 5, actual 4.
    VerificationReport random_sweep;
    {
        random_sweep = run_random_sweep(20240801);
        const auto rerun = run_random_sweep(20240801);
        const std::string t1 = report_to_text(random_sweep);
        const std::string t2 = report_to_text(rerun);
        const bool pass = random_sweep.pairs.size() == 500 &&
                          random_sweep.mismatch_count == 0 && t1 == t2;
        std::ostringstream d;
        d << random_sweep.pairs.size() << " pairs, theorem mismatches="
          << random_sweep.mismatch_count
          << ", re-run byte-identical=" << (t1 == t2 ? "yes" : "no");
        for (const auto& rec : random_sweep.pairs) {
            if (rec.predicted != rec.brute_force) {
                std::cout << "  finding theorem-mismatch g1=" << rec.id1
                          << " g2=" << rec.id2 << " chi=(" << rec.chi1 << ","
                          << rec.chi2 << ") M=(" << rec.M1 << "," << rec.M2
                          << ") predicted=" << rec.predicted
                          << " brute=" << rec.brute_force << "\n";
            }
        }
        result(4, pass, d.str());
    }

    // ---- Criterion 5: constructive colorer over criteria 3 + 4.
    {
        int construction_mismatches = 0;
        int witness_unavailable = 0;
        int dispatched = 0;
        for (const auto* rep : {&exhaustive, &random_sweep}) {
            for (const auto& rec : rep->pairs) {
                if (rec.constructive_size == -2) ++construction_mismatches;
                else if (rec.constructive_size == -1) ++witness_unavailable;
                else {
                    ++dispatched;
                    if (rec.constructive_size != rec.predicted) ++construction_mismatches;
                }
            }
        }
        const bool pass = construction_mismatches == 0;
        std::ostringstream d;
        d << dispatched << " dispatched, construction mismatches="
          << construction_mismatches
          << ", witness-unavailable findings=" << witness_unavailable
          << (witness_unavailable > 0 ? " (documented finding, not a failure)" : "");
        result(5, pass, d.str());
    }

    // ---- Criterion 6: chi of the join never drops below
    // chi1 + chi2 - M1 - M2. Fails on the same odd-chi pairs as criterion 4:
    // the bound's proof assumes every proper coloration of a part uses at
    // least chi - M colors, which only holds inside that part's own minimal
    // color set.
    {
        int violations = 0;
        for (const auto* rep : {&exhaustive, &random_sweep}) {
            for (const auto& rec : rep->pairs) {
                const int lb = join_lower_bound(rec.chi1, rec.M1, rec.chi2, rec.M2);
                if (rec.brute_force < lb) {
                    ++violations;
                    std::cout << "  finding lower-bound-violation g1=" << rec.id1
                              << " g2=" << rec.id2 << " bound=" << lb
                              << " brute=" << rec.brute_force << "\n";
                }
            }
        }
        std::ostringstream d;
        d << "lower-bound violations=" << violations << " over "
          << exhaustive.pairs.size() + random_sweep.pairs.size() << " pairs";
        result(6, violations == 0, d.str());
    }

    // ---- Criterion 7: in every minimal coloration of maximum deficiency,
    // each missing color i has -i on both ends of some negative edge.
    {
        int violations = 0;
        int graphs_checked = 0;
        for (int n = 1; n <= 4; ++n) {
            for (const auto& g : enumerate_signed_graphs(n)) {
                const int chi = chromatic_number(g);
                if (chi % 2 != 0) continue;
                const int m = max_deficiency(g, chi).first;
                if (m == 0) continue;
                ++graphs_checked;
                const int t = chi - m;
                const auto universe = oracle::canonical_set(chi);
                oracle::for_each_assignment(
                    g.order(), universe, [&](const std::vector<int>& colors) {
                        if (!oracle::proper(g, colors) ||
                            oracle::distinct(colors) != t)
                            return true;
                        const std::set<int> used(colors.begin(), colors.end());
                        for (int i : universe) {
                            if (i == 0 || used.count(i)) continue;
                            bool pinned = false;
                            for (const Edge& e : g.edges()) {
                                if (e.sign == Sign::negative &&
                                    colors[e.u] == -i && colors[e.v] == -i) {
                                    pinned = true;
                                    break;
                                }
                            }
                            if (!used.count(-i) || !pinned) {
                                ++violations;
                                return false;
                            }
                        }
                        return true;
                    });
            }
        }
        std::ostringstream d;
        d << graphs_checked << " graphs with even chi and M > 0, violations="
          << violations;
        result(7, violations == 0, d.str());
    }

    // ---- Criterion 8: all-negative join has the same chi; switching
    // invariance of chi and M.
    {
        int neg_join_mismatches = 0;
        for (const auto& rec : exhaustive.pairs) {
            if (rec.neg_join_chi != rec.brute_force) ++neg_join_mismatches;
        }
        // Chi is a switching invariant; M is not. Negating colors on the
        // switched side can grow the used-color set: negative K2 (M = 1)
        // switches at one vertex to positive K2 (M = 0). The M sub-check is
        // kept and fails on exactly such pairs.
        int chi_violations = 0;
        int m_violations = 0;
        std::mt19937_64 rng(808);
        for (int n = 1; n <= 4; ++n) {
            for (const auto& g : enumerate_signed_graphs(n)) {
                const int chi = chromatic_number(g);
                const int m = max_deficiency(g, chi).first;
                for (int trial = 0; trial < 50; ++trial) {
                    std::vector<int> a;
                    for (int v = 0; v < n; ++v) {
                        if (rng() % 2) a.push_back(v);
                    }
                    const auto sw = g.switched(a);
                    const int chi_s = chromatic_number(sw);
                    if (chi_s != chi) ++chi_violations;
                    if (max_deficiency(sw, chi_s).first != m) ++m_violations;
                }
            }
        }
        std::ostringstream d;
        d << "negative-join chi mismatches=" << neg_join_mismatches
          << ", chi switching violations=" << chi_violations
          << ", M switching violations=" << m_violations;
        result(8, neg_join_mismatches == 0 && chi_violations == 0 && m_violations == 0,
               d.str());
    }

    // ---- Criterion 9: deficiency sets hold at most one of {i, -i};
    // M <= floor(chi/2). Checked over every maximum-deficiency minimal
    // coloration, not just the stored witness.
    {
        int violations = 0;
        for (int n = 1; n <= 4; ++n) {
            for (const auto& g : enumerate_signed_graphs(n)) {
                const int chi = chromatic_number(g);
                const int m = max_deficiency(g, chi).first;
                if (m > chi / 2) {
                    ++violations;
                    continue;
                }
                const int t = chi - m;
                const auto universe = oracle::canonical_set(chi);
                oracle::for_each_assignment(
                    g.order(), universe, [&](const std::vector<int>& colors) {
                        if (!oracle::proper(g, colors) ||
                            oracle::distinct(colors) != t)
                            return true;
                        const std::set<int> used(colors.begin(), colors.end());
                        for (int i : universe) {
                            if (i <= 0) continue;
                            if (!used.count(i) && !used.count(-i)) {
                                ++violations;
                                return false;
                            }
                        }
                        return true;
                    });
            }
        }
        std::ostringstream d;
        d << "structural violations=" << violations << " over all graphs up to 4 vertices";
        result(9, violations == 0, d.str());
    }

    // ---- Criterion 10: narrow vs normalized exceptionality readings, plus
    // a widened-universe oracle cross-check and the ambiguous fixture probe.
    {
        int divergences = 0;
        int oracle_disagreements = 0;
        for (int n = 1; n <= 4; ++n) {
            for (const auto& g : enumerate_signed_graphs(n)) {
                const int chi = chromatic_number(g);
                if (chi % 2 != 0) continue;
                const int m = max_deficiency(g, chi).first;
                const bool narrow =
                    is_exceptional(g, chi, m, ExceptionalityReading::narrow);
                const bool normalized =
                    is_exceptional(g, chi, m, ExceptionalityReading::normalized);
                if (narrow != normalized) {
                    ++divergences;
                    // Witness: an unpinned coloration in whichever universe
                    // deems the graph non-exceptional.
                    const int tt = chi - m;
                    std::vector<int> universe;
                    if (normalized) {
                        universe = oracle::canonical_set(chi);
                    } else {
                        for (int c = -tt; c <= tt; ++c) universe.push_back(c);
                    }
                    std::vector<int> witness;
                    oracle::for_each_assignment(
                        g.order(), universe, [&](const std::vector<int>& colors) {
                            if (oracle::proper(g, colors) &&
                                oracle::distinct(colors) == tt &&
                                !oracle::pinned_everywhere(g, colors)) {
                                witness = colors;
                                return false;
                            }
                            return true;
                        });
                    std::cout << "  finding reading-divergence graph="
                              << g.signature() << " narrow=" << narrow
                              << " normalized=" << normalized << " witness=";
                    for (std::size_t i = 0; i < witness.size(); ++i)
                        std::cout << (i ? "," : "") << witness[i];
                    std::cout << "\n";
                }
                const int t = chi - m;
                std::vector<int> wide;
                for (int c = -(t + 2); c <= t + 2; ++c) wide.push_back(c);
                if (normalized != oracle::exceptional_over(g, t, wide))
                    ++oracle_disagreements;
            }
        }
        // Ambiguous six-vertex fixture: probe both edge resolutions, record
        // which matches (chi, M, exceptional) = (4, 2, true). Informational.
        for (bool positive : {true, false}) {
            const auto b = graph_b(positive);
            const auto st = compute_stats(b);
            const bool matches = st.chi == 4 && st.max_def == 2 &&
                                 st.exceptional_defined && st.exceptional;
            std::cout << "  info graph B (edge 2-5 "
                      << (positive ? "positive" : "negative") << "): chi=" << st.chi
                      << " M=" << st.max_def << " exceptional="
                      << (st.exceptional_defined ? (st.exceptional ? "yes" : "no")
                                                 : "undefined")
                      << " matches-expected=" << (matches ? "yes" : "no")
                      << ", reference coloration proper="
                      << (is_proper(b, Coloration{graph_b_coloring(), {}}) ? "yes"
                                                                           : "no")
                      << "\n";
        }
        std::ostringstream d;
        d << "reading divergences=" << divergences
          << ", widened-universe oracle disagreements=" << oracle_disagreements;
        result(10, divergences == 0 && oracle_disagreements == 0, d.str());
    }

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED"
                                : "ACCEPTANCE FAILED")
              << " (" << failures << " failing criteria)\n";
    return failures == 0 ? 0 : 1;
}
