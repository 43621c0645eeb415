#include "sgc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sgc {
namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

SignedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int order = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (order < 0) {
            std::string tag;
            int n;
            if (!(fields >> tag >> n) || tag != "sg" || n < 0) {
                parse_error(lineno, "expected header 'sg <order>'");
            }
            order = n;
            continue;
        }
        int u, v;
        std::string s;
        if (!(fields >> u >> v >> s) || (s != "+" && s != "-")) {
            parse_error(lineno, "expected '<u> <v> <+|->'");
        }
        if (u == v) parse_error(lineno, "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= order || v >= order) {
            parse_error(lineno, "endpoint out of range");
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            parse_error(lineno, "duplicate pair (" + std::to_string(key.first) + ", " +
                                    std::to_string(key.second) + ")");
        }
        edges.push_back({u, v, s == "+" ? Sign::positive : Sign::negative});
    }
    if (order < 0) throw std::invalid_argument("missing 'sg <order>' header");
    return SignedGraph::make(order, edges);
}

std::string print_graph(const SignedGraph& g) {
    std::ostringstream out;
    out << "sg " << g.order() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
    }
    return out.str();
}

SignedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string export_dot(const SignedGraph& g, const std::optional<Coloration>& kappa) {
    if (kappa && static_cast<int>(kappa->colors.size()) != g.order()) {
        throw std::invalid_argument("coloration is not total on V(g)");
    }
    std::ostringstream out;
    out << "graph sg {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (kappa) out << " [label=\"" << v << ": " << kappa->colors[v] << "\"]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v << " [style="
            << (e.sign == Sign::positive ? "solid" : "dashed") << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "report-version 1\n";
    out << "pairs " << report.pairs.size() << '\n';
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        const PairRecord& r = report.pairs[i];
        out << "pair " << i
            << " g1=" << r.id1 << " g2=" << r.id2
            << " chi1=" << r.chi1 << " M1=" << r.M1 << " exc1=" << (r.exc1 ? 1 : 0)
            << " chi2=" << r.chi2 << " M2=" << r.M2 << " exc2=" << (r.exc2 ? 1 : 0)
            << " predicted=" << r.predicted
            << " exception=" << (r.exception_applied ? 1 : 0)
            << " brute=" << r.brute_force
            << " neg_join=" << r.neg_join_chi
            << " constructive=" << r.constructive_size
            << " case=" << (r.case_id.empty() ? "-" : r.case_id)
            << " agree=" << (r.agree ? 1 : 0) << '\n';
    }
    for (const Finding& f : report.findings) {
        out << "finding " << f.kind << " " << f.detail << '\n';
    }
    out << "summary agree=" << report.agree_count
        << " theorem_mismatch=" << report.mismatch_count
        << " witness_unavailable=" << report.witness_unavailable_count << '\n';
    return out.str();
}

}  // namespace sgc
