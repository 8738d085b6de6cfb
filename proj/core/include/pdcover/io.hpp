#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "pdcover/baseline.hpp"
#include "pdcover/family.hpp"
#include "pdcover/graph.hpp"
#include "pdcover/solver.hpp"
#include "pdcover/witness.hpp"

namespace pdcover {

enum class OutputFormat { kText, kJson };

// Graph text format:
//   line 1: "n m"
//   then m lines: "u v cost capacity", cost as num/den (or a plain integer),
//   capacity optional with default 1. '#' starts a comment.
Graph read_graph(std::istream& in, const std::string& source);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

// Explicit family text format:
//   line 1: "n count"
//   then count lines, one member per line as a sorted vertex list.
ExplicitFamily read_family(std::istream& in, const std::string& source);
ExplicitFamily read_family_file(const std::string& path);
std::string write_family(const ExplicitFamily& fam);

// Two-section instance file for deficient-cut covering: the usual "n m"
// header, a "#base" marker before the fixed edges, then "#candidates" before
// the purchasable ones. m counts edge lines across both sections.
struct NmcSections {
  Graph base;
  Graph candidates;
};
NmcSections read_nmc_sections(std::istream& in, const std::string& source);
NmcSections read_nmc_sections_file(const std::string& path);
std::string write_nmc_sections(const Graph& base, const Graph& candidates);

// Self-contained certificate: solution, per-set duals, iteration log and
// totals, enough to re-verify the run independently. `extras` lets callers
// attach instance statistics; keys are emitted in sorted order.
std::string certificate_text(const SolveResult& r, const Graph& g,
                             const std::map<std::string, std::string>& extras = {});
std::string certificate_json(const SolveResult& r, const Graph& g,
                             const std::map<std::string, std::string>& extras = {});

std::string verification_report_text(const VerificationReport& rep);
std::string verification_report_json(const VerificationReport& rep);

std::string baseline_text(const BaselineResult& r);
std::string baseline_json(const BaselineResult& r);

std::string format_vertex_set(const VertexSet& s);

}  // namespace pdcover
