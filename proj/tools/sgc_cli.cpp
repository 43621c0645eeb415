#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sgc/io.hpp"
#include "sgc/recolor.hpp"
#include "sgc/solver.hpp"
#include "sgc/theorem.hpp"

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact signed-graph coloring toolkit"};
    app.require_subcommand(1);

    std::string file1, file2, coloring_file;
    std::string join_sign = "+";

    auto* stats_cmd = app.add_subcommand("stats", "chi, M, deficiency set, exceptionality");
    stats_cmd->add_option("file", file1)->required();

    auto* join_cmd = app.add_subcommand("join", "emit the join of two graphs");
    join_cmd->add_option("file1", file1)->required();
    join_cmd->add_option("file2", file2)->required();
    join_cmd->add_option("--sign", join_sign)->check(CLI::IsMember({"+", "-"}));

    auto* color_cmd = app.add_subcommand("color-join", "constructive all-positive join coloration");
    color_cmd->add_option("file1", file1)->required();
    color_cmd->add_option("file2", file2)->required();

    int rand_count = 0;
    std::uint64_t seed = 0;
    std::vector<int> ex_ns, size_ns;
    auto* verify_cmd = app.add_subcommand("verify", "theorem verification sweep");
    auto* ex_opt = verify_cmd->add_option("--exhaustive", ex_ns, "max orders n1 n2")
                       ->expected(2);
    auto* rand_opt = verify_cmd->add_option("--random", rand_count, "pair count");
    auto* size_opt = verify_cmd->add_option("--size", size_ns, "orders n1 n2")
                         ->expected(2);
    verify_cmd->add_option("--seed", seed);

    auto* dot_cmd = app.add_subcommand("export-dot", "DOT output, dashed negative edges");
    dot_cmd->add_option("file", file1)->required();
    dot_cmd->add_option("--coloring", coloring_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*stats_cmd) {
            const auto g = sgc::load_graph_file(file1);
            const auto st = sgc::compute_stats(g);
            std::cout << "chi=" << st.chi << " M=" << st.max_def << " exceptional="
                      << (!st.exceptional_defined ? "n/a" : st.exceptional ? "yes" : "no")
                      << '\n';
            std::cout << "deficiency_set="
                      << join_ints({st.deficiency_set.begin(), st.deficiency_set.end()})
                      << '\n';
            std::cout << "min_coloration=" << join_ints(st.min_coloration.colors) << '\n';
            return 0;
        }
        if (*join_cmd) {
            const auto g1 = sgc::load_graph_file(file1);
            const auto g2 = sgc::load_graph_file(file2);
            const auto j = join_sign == "+" ? sgc::all_positive_join(g1, g2)
                                            : sgc::all_negative_join(g1, g2);
            std::cout << sgc::print_graph(j);
            return 0;
        }
        if (*color_cmd) {
            const auto g1 = sgc::load_graph_file(file1);
            const auto g2 = sgc::load_graph_file(file2);
            const auto s1 = sgc::compute_stats(g1);
            const auto s2 = sgc::compute_stats(g2);
            try {
                auto [kappa, trace] = sgc::color_positive_join(g1, g2, s1, s2);
                std::cout << "case_id=" << trace.case_id
                          << " palette_size=" << trace.palette_size
                          << " swapped=" << (trace.swapped ? 1 : 0) << '\n';
                std::cout << "coloration=" << join_ints(kappa.colors) << '\n';
                std::cout << "x_labels=" << join_ints(trace.x_labels) << '\n';
                std::cout << "y_labels=" << join_ints(trace.y_labels) << '\n';
            } catch (const sgc::JoinColoringError& e) {
                std::cout << "case_id=" << e.trace.case_id << " error=" << e.what() << '\n';
                return 1;
            }
            return 0;
        }
        if (*verify_cmd) {
            sgc::VerificationReport report;
            if (ex_opt->count()) {
                report = sgc::verify_exhaustive(ex_ns[0], ex_ns[1]);
            } else if (rand_opt->count()) {
                if (!size_opt->count()) {
                    std::cerr << "verify --random needs --size n1 n2\n";
                    return 1;
                }
                report = sgc::verify_random(rand_count, size_ns[0], size_ns[1], seed);
            } else {
                std::cerr << "verify needs --exhaustive or --random\n";
                return 1;
            }
            std::cout << sgc::report_to_text(report);
            return report.mismatch_count > 0 ? 2 : 0;
        }
        if (*dot_cmd) {
            const auto g = sgc::load_graph_file(file1);
            std::optional<sgc::Coloration> kappa;
            if (!coloring_file.empty()) {
                std::ifstream in(coloring_file);
                if (!in) throw std::runtime_error("cannot open " + coloring_file);
                sgc::Coloration k;
                int c;
                while (in >> c) k.colors.push_back(c);
                kappa = std::move(k);
            }
            std::cout << sgc::export_dot(g, kappa);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
