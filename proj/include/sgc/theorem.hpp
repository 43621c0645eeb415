#ifndef SGC_THEOREM_HPP
#define SGC_THEOREM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sgc/recolor.hpp"
#include "sgc/signed_graph.hpp"
#include "sgc/solver.hpp"

namespace sgc {

struct JoinPrediction {
    int value = 0;
    bool exception_applied = false;
    int lower_bound = 0;
};

/// chi1 + chi2 - M1 - M2.
int join_lower_bound(int chi1, int M1, int chi2, int M2);

/// The join chromatic-number formula: max{chi1 + chi2 - M1 - M2, chi1}, the
/// first argument bumped by 1 exactly when both chi are even, exactly one of
/// M1, M2 is odd, and both graphs are exceptional. Symmetric in its two stat
/// bundles. Throws on inconsistent stats (M > floor(chi/2)).
JoinPrediction predicted_chromatic(int chi1, int M1, bool exc1,
                                   int chi2, int M2, bool exc2);

/// Every assignment of {absent, +, -} to the C(n,2) vertex pairs, in a fixed
/// lexicographic order. Guarded to n <= 5.
std::vector<SignedGraph> enumerate_signed_graphs(int n);

/// Each pair independently present with p_edge, negative with p_negative
/// given present. Deterministic for a fixed seed.
SignedGraph random_signed_graph(int n, double p_edge, double p_negative,
                                std::uint64_t seed);

struct Finding {
    std::string kind;  // theorem-mismatch, neg-join-mismatch,
                       // construction-mismatch, witness-unavailable,
                       // reading-divergence
    std::string detail;
};

struct PairRecord {
    std::string id1, id2;  // graph signatures
    int chi1 = 0, M1 = 0;
    bool exc1 = false;
    int chi2 = 0, M2 = 0;
    bool exc2 = false;
    int predicted = 0;
    bool exception_applied = false;
    int brute_force = 0;
    int neg_join_chi = 0;
    int constructive_size = -1;  // -1: not run (precondition failure logged)
    std::string case_id;
    bool agree = false;
    std::vector<Finding> findings;
};

struct VerificationReport {
    std::vector<PairRecord> pairs;
    int agree_count = 0;
    int mismatch_count = 0;          // theorem-mismatch findings
    int witness_unavailable_count = 0;
    std::vector<Finding> findings;   // concatenation over pairs
};

/// Memoized per-graph stats keyed by canonical signature.
class StatsCache {
public:
    const GraphStats& get(const SignedGraph& g);

private:
    std::map<std::string, GraphStats> cache_;
};

/// Solve one join pair every way: exact stats per side, formula prediction,
/// brute-force chi of the all-positive join, chi of the all-negative join,
/// and the constructive colorer. Guarded to a combined order of 9.
PairRecord verify_pair(const SignedGraph& g1, const SignedGraph& g2, StatsCache& cache);

/// All ordered pairs with n1 in 1..max1 and n2 in 1..max2 vertices.
VerificationReport verify_exhaustive(int max1, int max2);

/// count seeded random pairs with orders n1, n2.
VerificationReport verify_random(int count, int n1, int n2, std::uint64_t seed);

}  // namespace sgc

#endif
