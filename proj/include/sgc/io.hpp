#ifndef SGC_IO_HPP
#define SGC_IO_HPP

#include <optional>
#include <string>

#include "sgc/coloring.hpp"
#include "sgc/signed_graph.hpp"
#include "sgc/theorem.hpp"

namespace sgc {

/// GraphFile format: header "sg <order>", then one "<u> <v> <+|->" line per
/// edge, 0-based indices. '#' comment lines and blank lines are ignored.
/// Malformed input is reported with its line number.
SignedGraph parse_graph(const std::string& text);
std::string print_graph(const SignedGraph& g);

SignedGraph load_graph_file(const std::string& path);

/// DOT export: solid edges for positive, dashed for negative; vertex labels
/// show colors when kappa is given.
std::string export_dot(const SignedGraph& g,
                       const std::optional<Coloration>& kappa = std::nullopt);

/// Line-oriented report serialization; deterministic field order.
std::string report_to_text(const VerificationReport& report);

}  // namespace sgc

#endif
