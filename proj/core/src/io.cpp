#include "pdcover/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pdcover/errors.hpp"

namespace pdcover {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct LineReader {
  std::istream& in;
  std::string source;
  int line_no = 0;

  // Next line that still has content after comment stripping; the raw line is
  // stored so section markers remain visible to callers that want them.
  std::optional<std::string> next_raw() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(strip_comment(line)).empty() || is_marker(line)) return line;
    }
    return std::nullopt;
  }

  static bool is_marker(const std::string& line) {
    const std::string t = trim(line);
    return t == "#base" || t == "#candidates";
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(source, line_no, msg);
  }
};

int parse_int(const LineReader& r, const std::string& tok, int lo, int hi,
              const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (v < lo || v > hi)
      r.fail(std::string(what) + " " + tok + " outside [" +
             std::to_string(lo) + "," + std::to_string(hi) + "]");
    return static_cast<int>(v);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    r.fail(std::string("malformed ") + what + " '" + tok + "'");
  }
}

std::pair<int, int> read_header(LineReader& r, const char* second_name) {
  auto line = r.next_raw();
  if (!line) r.fail("missing header line");
  const auto toks = tokens_of(strip_comment(*line));
  if (toks.size() != 2) r.fail("header must be two integers");
  const int n = parse_int(r, toks[0], 0, kMaxVertices, "vertex count");
  const int m = parse_int(r, toks[1], 0, 1 << 20, second_name);
  return {n, m};
}

void add_edge_line(LineReader& r, Graph& g, const std::vector<std::string>& toks) {
  if (toks.size() < 3 || toks.size() > 4)
    r.fail("edge line must be 'u v cost [capacity]'");
  const int n = g.vertex_count();
  const int u = parse_int(r, toks[0], 0, n - 1, "vertex id");
  const int v = parse_int(r, toks[1], 0, n - 1, "vertex id");
  Rational cost;
  try {
    cost = parse_rational(toks[2]);
  } catch (const Error& e) {
    r.fail(e.what());
  }
  if (cost < 0) r.fail("negative edge cost");
  std::int64_t cap = 1;
  if (toks.size() == 4) cap = parse_int(r, toks[3], 1, 1 << 20, "capacity");
  try {
    g.add_edge(u, v, cost, cap);
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
  LineReader r{in, source};
  const auto [n, m] = read_header(r, "edge count");
  Graph g(n);
  for (int t = 0; t < m; ++t) {
    auto line = r.next_raw();
    if (!line) r.fail("expected " + std::to_string(m) + " edge lines, got " +
                      std::to_string(t));
    add_edge_line(r, g, tokens_of(strip_comment(*line)));
  }
  if (auto extra = r.next_raw()) r.fail("trailing content after edge list");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_graph(in, path);
}

std::string write_graph(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    os << e.u << ' ' << e.v << ' ' << format_rational(e.cost) << ' '
       << e.capacity << '\n';
  return os.str();
}

ExplicitFamily read_family(std::istream& in, const std::string& source) {
  LineReader r{in, source};
  const auto [n, count] = read_header(r, "member count");
  ExplicitFamily fam(n);
  for (int t = 0; t < count; ++t) {
    auto line = r.next_raw();
    if (!line) r.fail("expected " + std::to_string(count) +
                      " member lines, got " + std::to_string(t));
    const auto toks = tokens_of(strip_comment(*line));
    if (toks.empty()) r.fail("empty family member");
    VertexSet s = VertexSet::empty_set(n);
    for (const auto& tok : toks)
      s = s.with(parse_int(r, tok, 0, n - 1, "vertex id"));
    if (s.is_full()) r.fail("the full set cannot be a member");
    if (fam.contains(s)) r.fail("duplicate member " + s.to_string());
    fam.add(s);
  }
  if (auto extra = r.next_raw()) r.fail("trailing content after member list");
  return fam;
}

ExplicitFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_family(in, path);
}

std::string write_family(const ExplicitFamily& fam) {
  std::ostringstream os;
  os << fam.ground_set_size() << ' ' << fam.size() << '\n';
  for (const auto& s : fam.members()) {
    bool first = true;
    for (int v : s.elements()) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

NmcSections read_nmc_sections(std::istream& in, const std::string& source) {
  LineReader r{in, source};
  const auto [n, m] = read_header(r, "edge count");
  Graph base(n);
  Graph candidates(n);
  enum class Section { kNone, kBase, kCandidates };
  Section section = Section::kNone;
  int edges_read = 0;
  while (auto line = r.next_raw()) {
    const std::string t = trim(*line);
    if (t == "#base") {
      section = Section::kBase;
      continue;
    }
    if (t == "#candidates") {
      section = Section::kCandidates;
      continue;
    }
    const auto toks = tokens_of(strip_comment(*line));
    if (toks.empty()) continue;
    if (section == Section::kNone)
      r.fail("edge line before a #base or #candidates marker");
    if (++edges_read > m) r.fail("more edge lines than the header announced");
    add_edge_line(r, section == Section::kBase ? base : candidates, toks);
  }
  if (edges_read != m)
    r.fail("expected " + std::to_string(m) + " edge lines, got " +
           std::to_string(edges_read));
  return NmcSections{std::move(base), std::move(candidates)};
}

NmcSections read_nmc_sections_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_nmc_sections(in, path);
}

std::string write_nmc_sections(const Graph& base, const Graph& candidates) {
  std::ostringstream os;
  os << base.vertex_count() << ' '
     << base.edge_count() + candidates.edge_count() << '\n';
  os << "#base\n";
  for (const Edge& e : base.edges())
    os << e.u << ' ' << e.v << ' ' << format_rational(e.cost) << ' '
       << e.capacity << '\n';
  os << "#candidates\n";
  for (const Edge& e : candidates.edges())
    os << e.u << ' ' << e.v << ' ' << format_rational(e.cost) << ' '
       << e.capacity << '\n';
  return os.str();
}

std::string format_vertex_set(const VertexSet& s) { return s.to_string(); }

namespace {

json set_to_json(const VertexSet& s) { return json(s.elements()); }

json certificate_to_json(const SolveResult& r, const Graph& g,
                         const std::map<std::string, std::string>& extras) {
  json j;
  j["format"] = "pdcover-certificate";
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["solution"]["edges"] = r.solution.ids();
  j["solution"]["cost"] = format_rational(r.cost);
  j["phase1_edges"] = r.phase1_edges;
  j["dual"]["total"] = format_rational(r.dual_total);
  j["dual"]["values"] = json::array();
  for (const auto& [s, y] : r.duals.y) {
    json entry;
    entry["set"] = set_to_json(s);
    entry["y"] = format_rational(y);
    j["dual"]["values"].push_back(entry);
  }
  j["iterations"] = json::array();
  for (const auto& it : r.iterations) {
    json entry;
    entry["index"] = it.index;
    entry["epsilon"] = format_rational(it.epsilon);
    entry["added_edge"] = it.added_edge;
    entry["cores"] = json::array();
    for (const auto& c : it.cores) entry["cores"].push_back(set_to_json(c));
    j["iterations"].push_back(entry);
  }
  if (!extras.empty()) j["extras"] = extras;
  return j;
}

}  // namespace

std::string certificate_text(const SolveResult& r, const Graph& g,
                             const std::map<std::string, std::string>& extras) {
  std::ostringstream os;
  os << "pdcover certificate\n";
  os << "n: " << g.vertex_count() << "\n";
  os << "m: " << g.edge_count() << "\n";
  os << "solution:";
  for (int e : r.solution.ids()) os << ' ' << e;
  os << "\ncost: " << format_rational(r.cost) << "\n";
  os << "dual-total: " << format_rational(r.dual_total) << "\n";
  os << "duals: " << r.duals.y.size() << "\n";
  for (const auto& [s, y] : r.duals.y)
    os << "  " << s.to_string() << " " << format_rational(y) << "\n";
  os << "iterations: " << r.iterations.size() << "\n";
  for (const auto& it : r.iterations) {
    os << "  " << it.index << ": eps=" << format_rational(it.epsilon)
       << " add=" << it.added_edge << " cores=" << it.cores.size();
    for (const auto& c : it.cores) os << ' ' << c.to_string();
    os << "\n";
  }
  for (const auto& [k, v] : extras) os << k << ": " << v << "\n";
  return os.str();
}

std::string certificate_json(const SolveResult& r, const Graph& g,
                             const std::map<std::string, std::string>& extras) {
  return certificate_to_json(r, g, extras).dump(2) + "\n";
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

json verification_to_json(const VerificationReport& rep) {
  json j;
  j["format"] = "pdcover-verification";
  j["dual_feasible"] = rep.dual_feasible;
  j["solution_tight"] = rep.solution_tight;
  j["coverage"] = rep.coverage_ok;
  j["solution_minimal"] = rep.solution_minimal;
  if (rep.weak_duality_ok)
    j["weak_duality"] = *rep.weak_duality_ok;
  else
    j["weak_duality"] = nullptr;
  j["violations"] = rep.violation_count();
  j["snapshots_total"] = rep.snapshots.size();
  j["snapshots_supported"] = rep.snapshots_supported;
  j["max_chain_supported"] = rep.max_ell_supported;
  j["max_chain_unsupported"] = rep.max_ell_unsupported;
  j["snapshots"] = json::array();
  for (const auto& s : rep.snapshots) {
    json e;
    e["iteration"] = s.iteration;
    e["cores"] = s.core_count;
    e["cover_size"] = s.cover_size;
    e["minimal_cover"] = s.minimal_cover_ok;
    e["witness"] = s.witness_ok;
    e["beta_monotone"] = s.beta_monotone_ok;
    e["hypothesis"] = s.hypothesis_ok;
    e["degree_lhs"] = s.core_degree.lhs;
    e["degree_bound"] = s.core_degree.bound;
    e["degree_pass"] = s.core_degree.pass;
    e["tree_edges"] = s.tree_bound.edge_count;
    e["tree_bound"] = s.tree_bound.bound;
    e["tree_pass"] = s.tree_bound.pass;
    e["child_gap"] = s.child_gap_ok;
    e["crossing_core"] = s.crossing_core_ok;
    e["max_chain"] = s.max_ell;
    e["chain_violations"] = s.chain_lemma.violations;
    e["unsupported_chains"] = s.chain_lemma.unsupported_chains;
    if (!s.failure.empty()) e["failure"] = s.failure;
    j["snapshots"].push_back(e);
  }
  return j;
}

}  // namespace

std::string verification_report_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "pdcover verification report\n";
  os << "dual-feasible: " << yn(rep.dual_feasible) << "\n";
  os << "solution-tight: " << yn(rep.solution_tight) << "\n";
  os << "coverage: " << yn(rep.coverage_ok) << "\n";
  os << "solution-minimal: " << yn(rep.solution_minimal) << "\n";
  os << "weak-duality: "
     << (rep.weak_duality_ok ? yn(*rep.weak_duality_ok) : "n/a") << "\n";
  os << "violations: " << rep.violation_count() << "\n";
  os << "snapshots: " << rep.snapshots.size() << " (" << rep.snapshots_supported
     << " within the core-cover hypothesis)\n";
  os << "max-chain-length: " << rep.max_ell_supported << " supported, "
     << rep.max_ell_unsupported << " outside-hypothesis\n";
  for (const auto& s : rep.snapshots) {
    os << "snapshot " << s.iteration << ": cores=" << s.core_count
       << " cover=" << s.cover_size << " hypothesis=" << yn(s.hypothesis_ok)
       << " degree=" << s.core_degree.lhs << "<=" << s.core_degree.bound
       << (s.core_degree.pass ? "" : " VIOLATED") << " tree="
       << s.tree_bound.edge_count << "<=" << s.tree_bound.bound
       << (s.tree_bound.pass ? "" : " VIOLATED") << " chain-max=" << s.max_ell
       << " witness=" << yn(s.witness_ok) << " beta=" << yn(s.beta_monotone_ok)
       << " gap=" << yn(s.child_gap_ok) << " crossing="
       << yn(s.crossing_core_ok) << "\n";
    for (const auto& v : s.chain_lemma.violations)
      os << "  violation: " << v << "\n";
    for (const auto& v : s.chain_lemma.unsupported_chains)
      os << "  outside-hypothesis: " << v << "\n";
    if (!s.failure.empty()) os << "  failure: " << s.failure << "\n";
  }
  return os.str();
}

std::string verification_report_json(const VerificationReport& rep) {
  return verification_to_json(rep).dump(2) + "\n";
}

std::string baseline_text(const BaselineResult& r) {
  std::ostringstream os;
  os << "pdcover baseline\n";
  os << "feasible: " << yn(r.feasible) << "\n";
  if (r.feasible) {
    os << "opt-cost: " << format_rational(r.opt_cost) << "\n";
    os << "opt-set:";
    for (int e : r.opt_set.ids()) os << ' ' << e;
    os << "\n";
  }
  return os.str();
}

std::string baseline_json(const BaselineResult& r) {
  json j;
  j["format"] = "pdcover-baseline";
  j["feasible"] = r.feasible;
  if (r.feasible) {
    j["opt_cost"] = format_rational(r.opt_cost);
    j["opt_set"] = r.opt_set.ids();
  }
  return j.dump(2) + "\n";
}

}  // namespace pdcover
