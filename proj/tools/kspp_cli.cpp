// kspp: exact desk-scale checks of the k-strong parity property, its
// component-counting criterion, and the size/spectral sufficient conditions.
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kspp/enumerate.hpp"
#include "kspp/graph_io.hpp"
#include "kspp/kernels.hpp"
#include "kspp/ledger.hpp"
#include "kspp/parity.hpp"
#include "kspp/random_graphs.hpp"
#include "kspp/spectral.hpp"
#include "kspp/theorems.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitSatisfied = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitParse = 3;
constexpr int kExitUsage = 4;

std::string fmt_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// clamp a double to 12 significant digits so JSON output is stable and
// matches the CSV formatting contract
double round_g12(double v) { return std::strtod(fmt_g12(v).c_str(), nullptr); }

ordered_json bits_json(const kspp::VertexSet& s) {
  ordered_json a = ordered_json::array();
  for (int v : s.bits()) a.push_back(v);
  return a;
}

std::string bits_text(const kspp::VertexSet& s) {
  std::string out = "[";
  bool first = true;
  for (int v : s.bits()) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

struct CommonOpts {
  int k = 2;
  kspp::OracleBudget budget;
  kspp::PowerOptions power;
  double eps_borderline = 1e-9;
  std::string kernel = "auto";
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-k,--k", o.k, "even k >= 2 of the parity property")->capture_default_str();
  cmd->add_option("--max-n-condition", o.budget.max_condition_vertices,
                  "largest order for the 2^n subset sweep")->capture_default_str();
  cmd->add_option("--max-m-definition", o.budget.max_definition_edges,
                  "largest size for the 2^m spanning-subgraph sweep")->capture_default_str();
  cmd->add_option("--max-iter", o.power.max_iter, "power-iteration cap")->capture_default_str();
  cmd->add_option("--tol", o.power.tol, "power-iteration residual tolerance")
      ->capture_default_str();
  cmd->add_option("--eps-borderline", o.eps_borderline,
                  "half-width of the spectral too-close-to-call band")->capture_default_str();
  cmd->add_option("--kernel", o.kernel, "vector kernels: auto|scalar|avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))->capture_default_str();
}

int apply_kernel_choice(const std::string& kernel) {
  if (kernel == "auto") {
    kspp::kernels::force_kernels(std::nullopt);
    return 0;
  }
  if (!kspp::kernels::force_kernels(kernel)) {
    std::cerr << "kernel variant '" << kernel << "' unavailable on this machine\n";
    return kExitUsage;
  }
  return 0;
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string first;
  while (std::getline(is, first)) {
    auto pos = first.find_first_not_of(" \t\r");
    if (pos != std::string::npos) {
      first = first.substr(pos);
      break;
    }
    first.clear();
  }
  if (first.empty()) return false;
  long long a, b;
  std::string extra;
  std::istringstream ls(first);
  return static_cast<bool>(ls >> a >> b) && !(ls >> extra);
}

std::string first_graph6_line(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw kspp::ParseError("input contains no graph");
}

// Combined verdict: the component-counting criterion is authoritative on
// connected graphs, the definition sweep on disconnected ones; either may
// be over budget, in which case the other decides if it can.
struct Verdicts {
  kspp::CrossValidation cv;
  std::string kspp = "budget";  // satisfied | violated | budget
  std::string witness;          // textual S=[...] / X=[...]
};

Verdicts combined_verdict(const kspp::Graph& g, int k, const kspp::OracleBudget& budget) {
  Verdicts v;
  v.cv = kspp::kspp_cross_validate(g, k, budget);
  auto use_condition = [&]() {
    v.kspp = v.cv.condition->satisfied ? "satisfied" : "violated";
    if (!v.cv.condition->satisfied) v.witness = "S=" + bits_text(v.cv.condition->witness_s);
  };
  auto use_definition = [&]() {
    bool sat = v.cv.definition.outcome == kspp::DefinitionOutcome::satisfied;
    v.kspp = sat ? "satisfied" : "violated";
    if (!sat) v.witness = "X=" + bits_text(v.cv.definition.witness_x);
  };
  bool def_decided = v.cv.definition.outcome != kspp::DefinitionOutcome::budget_exceeded;
  if (v.cv.in_theorem_scope) {
    if (v.cv.condition) use_condition();
    else if (def_decided) use_definition();
  } else {
    if (def_decided) use_definition();
    else if (v.cv.condition) use_condition();  // still a valid certificate either way
  }
  return v;
}

ordered_json condition_json(const std::optional<kspp::ConditionVerdict>& c) {
  if (!c) return ordered_json{{"outcome", "budget"}};
  ordered_json j;
  j["outcome"] = c->satisfied ? "satisfied" : "violated";
  if (!c->satisfied) {
    j["witness_s"] = bits_json(c->witness_s);
    j["components"] = c->components;
    j["bound"] = c->bound;
  }
  return j;
}

ordered_json definition_json(const kspp::DefinitionVerdict& d) {
  ordered_json j;
  switch (d.outcome) {
    case kspp::DefinitionOutcome::satisfied: j["outcome"] = "satisfied"; break;
    case kspp::DefinitionOutcome::violated: j["outcome"] = "violated"; break;
    case kspp::DefinitionOutcome::budget_exceeded: j["outcome"] = "budget"; return j;
  }
  j["served_count"] = d.served_count;
  if (d.outcome == kspp::DefinitionOutcome::violated) j["witness_x"] = bits_json(d.witness_x);
  return j;
}

ordered_json estimate_json(const kspp::SpectralEstimate& e) {
  ordered_json j;
  j["value"] = round_g12(e.value);
  j["converged"] = e.converged;
  j["iterations"] = e.iterations;
  j["residual"] = round_g12(e.residual);
  if (e.disconnected) j["disconnected"] = true;
  return j;
}

ordered_json audit_json(const kspp::TheoremReport& r) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["outcome"] = kspp::to_string(r.outcome);
  j["premise_met"] = r.premise_met;
  if (!r.premise_met) {
    j["failed_premise"] = r.failed_premise;
    return j;
  }
  j["threshold"] = r.threshold ? r.threshold->str() : "";
  if (std::string(r.theorem) == "size") {
    j["measured_edges"] = r.measured_edges;
    j["extremal_match"] = r.extremal_match;
  } else {
    j["measured_q"] = round_g12(r.measured_q);
    j["borderline"] = r.borderline;
  }
  j["triggered"] = r.triggered;
  j["property"] = r.property ? condition_json(r.property) : ordered_json("skipped");
  return j;
}

// ---------------------------------------------------------------- check ---

struct CheckArgs {
  CommonOpts common;
  std::string path;
  std::string inline_g6;
  std::string format = "auto";
};

int run_check(const CheckArgs& a) {
  if (int rc = apply_kernel_choice(a.common.kernel)) return rc;
  kspp::Graph g;
  std::string id;
  try {
    if (!a.inline_g6.empty()) {
      id = a.inline_g6;
      g = kspp::parse_graph6(a.inline_g6);
    } else {
      std::string text;
      if (a.path == "-") {
        text = read_stream(std::cin);
      } else {
        std::ifstream in(a.path, std::ios::binary);
        if (!in) {
          std::cerr << "cannot open " << a.path << "\n";
          return kExitParse;
        }
        text = read_stream(in);
      }
      bool as_edge_list = a.format == "edgelist" ||
                          (a.format == "auto" && looks_like_edge_list(text));
      if (as_edge_list) {
        std::istringstream is(text);
        g = kspp::read_edge_list(is);
        id = a.path;
      } else {
        id = first_graph6_line(text);
        g = kspp::parse_graph6(id);
      }
    }
    if (g.vertex_count() < 1) throw kspp::ParseError("empty graph unsupported");
  } catch (const kspp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    auto v = combined_verdict(g, a.common.k, a.common.budget);
    auto q = kspp::q_spectral_radius(g, a.common.power);
    auto rho = kspp::a_spectral_radius(g, a.common.power);

    ordered_json out;
    out["input"] = id;
    out["n"] = g.vertex_count();
    out["e"] = g.edge_count();
    out["delta"] = g.min_degree();
    out["connected"] = g.is_connected();
    out["k"] = a.common.k;
    out["condition"] = condition_json(v.cv.condition);
    out["definition"] = definition_json(v.cv.definition);
    out["oracles_comparable"] = v.cv.comparable;
    if (v.cv.comparable) out["oracles_agree"] = v.cv.agree;
    out["q"] = estimate_json(q);
    out["rho"] = estimate_json(rho);
    if (g.vertex_count() >= 2) out["q_edge_bound"] = kspp::q_edge_bound(g).str();
    out["size_theorem"] = audit_json(kspp::audit_size_theorem(g, a.common.k, a.common.budget));
    out["spectral_theorem"] = audit_json(kspp::audit_spectral_theorem(
        g, a.common.k, a.common.eps_borderline, a.common.power, a.common.budget));
    out["verdict"] = v.kspp == "budget" ? "undetermined" : v.kspp;
    if (!v.witness.empty()) out["witness"] = v.witness;
    std::cout << out.dump(2) << "\n";

    if (v.kspp == "satisfied") return kExitSatisfied;
    if (v.kspp == "violated") return kExitViolated;
    return kExitUndetermined;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ----------------------------------------------------------------- scan ---

struct ScanArgs {
  CommonOpts common;
  std::string path;
  std::string output;
  int jobs = 1;
};

struct ScanRecord {
  bool parse_failed = false;
  std::string error;
  std::string graph_id;
  int n = 0;
  std::int64_t e = 0;
  int delta = 0;
  double q = 0;
  std::string kspp;
  std::string witness;
  std::string thm12;
  std::string thm13;
  bool counterexample = false;
  bool undetermined = false;
  bool disagreement = false;
};

ScanRecord scan_one(const std::string& line, const CommonOpts& o) {
  ScanRecord r;
  r.graph_id = line;
  kspp::Graph g;
  try {
    g = kspp::parse_graph6(line);
    if (g.vertex_count() < 1) throw kspp::ParseError("empty graph unsupported");
  } catch (const kspp::ParseError& e) {
    r.parse_failed = true;
    r.error = e.what();
    return r;
  }
  r.n = g.vertex_count();
  r.e = g.edge_count();
  r.delta = g.min_degree();
  auto v = combined_verdict(g, o.k, o.budget);
  r.kspp = v.kspp;
  r.witness = v.witness;
  if (v.cv.comparable && !v.cv.agree) r.disagreement = true;
  r.q = kspp::q_spectral_radius(g, o.power).value;
  auto a12 = kspp::audit_size_theorem(g, o.k, o.budget);
  auto a13 = kspp::audit_spectral_theorem(g, o.k, o.eps_borderline, o.power, o.budget);
  r.thm12 = kspp::to_string(a12.outcome);
  r.thm13 = kspp::to_string(a13.outcome);
  r.counterexample = a12.outcome == kspp::AuditOutcome::counterexample ||
                     a13.outcome == kspp::AuditOutcome::counterexample;
  r.undetermined = r.kspp == "budget" ||
                   a12.outcome == kspp::AuditOutcome::undetermined ||
                   a13.outcome == kspp::AuditOutcome::undetermined;
  return r;
}

std::string csv_row(const ScanRecord& r) {
  std::ostringstream os;
  os << r.graph_id << ',' << r.n << ',' << r.e << ',' << r.delta << ',' << fmt_g12(r.q) << ','
     << r.kspp << ',' << r.witness << ',' << r.thm12 << ',' << r.thm13;
  return os.str();
}

int run_scan(const ScanArgs& a) {
  if (int rc = apply_kernel_choice(a.common.kernel)) return rc;
  std::vector<std::string> lines;
  {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (a.path != "-") {
      file.open(a.path, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open " << a.path << "\n";
        return kExitParse;
      }
      in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }

  std::vector<ScanRecord> records(lines.size());
  int jobs = std::max(1, a.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < lines.size(); ++i) records[i] = scan_one(lines[i], a.common);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= lines.size()) break;
        records[i] = scan_one(lines[i], a.common);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostream* out = &std::cout;
  std::ofstream file_out;
  if (!a.output.empty()) {
    file_out.open(a.output, std::ios::binary);
    if (!file_out) {
      std::cerr << "cannot open " << a.output << " for writing\n";
      return kExitUsage;
    }
    out = &file_out;
  }

  *out << "graph_id,n,e,delta,q,kspp,witness,thm12,thm13\n";
  std::int64_t counterexamples = 0, undetermined = 0, skipped = 0, disagreements = 0;
  std::int64_t satisfied = 0, violated = 0;
  std::vector<std::string> counterexample_rows;
  for (const auto& r : records) {
    if (r.parse_failed) {
      ++skipped;
      std::cerr << "skipped " << r.graph_id << ": " << r.error << "\n";
      continue;
    }
    std::string row = csv_row(r);
    *out << row << "\n";
    if (r.kspp == "satisfied") ++satisfied;
    if (r.kspp == "violated") ++violated;
    if (r.counterexample) {
      ++counterexamples;
      counterexample_rows.push_back(row);
    }
    if (r.undetermined) ++undetermined;
    if (r.disagreement) ++disagreements;
  }

  std::cerr << "scanned " << (records.size() - skipped) << " graphs (" << satisfied
            << " satisfied, " << violated << " violated), " << counterexamples
            << " counterexamples, " << undetermined << " undetermined, " << skipped
            << " skipped, " << disagreements << " oracle disagreements\n";
  for (const auto& row : counterexample_rows) std::cerr << "COUNTEREXAMPLE " << row << "\n";

  if (counterexamples > 0) return kExitViolated;
  if (undetermined > 0 || skipped > 0) return kExitUndetermined;
  return kExitSatisfied;
}

// ------------------------------------------------------------- extremal ---

struct ExtremalArgs {
  CommonOpts common;
  int n = 0, delta = 0;
  std::string graph_output;
};

int run_extremal(const ExtremalArgs& a) {
  if (int rc = apply_kernel_choice(a.common.kernel)) return rc;
  int k = a.common.k;
  kspp::Graph g;
  std::int64_t formula = 0;
  try {
    g = kspp::build_extremal_graph(a.n, a.delta, k);
    formula = kspp::extremal_edge_count(a.n, a.delta, k);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ordered_json out;
  out["n"] = a.n;
  out["delta"] = a.delta;
  out["k"] = k;
  std::string graph_text;
  if (a.n <= 62) {
    graph_text = kspp::write_graph6(g);
    out["graph6"] = graph_text;
  } else {
    std::ostringstream es;
    kspp::write_edge_list(g, es);
    graph_text = es.str();
    out["edge_list"] = graph_text;
    out["notice"] = "order exceeds the graph6 single-byte cap; emitted as edge list";
  }
  out["edge_count_formula"] = formula;
  out["edge_count_construction"] = g.edge_count();
  out["counts_match"] = formula == g.edge_count();
  out["min_degree"] = g.min_degree();
  out["size_premise"] = kspp::size_theorem_order_premise(a.n, a.delta, k);
  out["recognized"] = kspp::is_extremal_graph(g, k);

  kspp::VertexSet apexes(g.vertex_count());
  std::int64_t apex_deg_sum = 0;
  for (int v = 0; v < a.delta; ++v) {
    apexes.set(v);
    apex_deg_sum += g.degree(v);
  }
  auto parts = kspp::components_after_removal(g, apexes);
  std::int64_t bound = apex_deg_sum - static_cast<std::int64_t>(k) * a.delta + 1;
  ordered_json targeted;
  targeted["s_vertices"] = bits_json(apexes);
  targeted["components"] = parts.count;
  targeted["bound"] = bound;
  targeted["violated"] = parts.count > bound;
  out["universal_set_check"] = targeted;

  try {
    auto verdict = kspp::kspp_condition(g, k, a.common.budget);
    out["condition"] = condition_json(verdict);
  } catch (const kspp::BudgetError& e) {
    out["condition"] = ordered_json{{"outcome", "budget"}, {"detail", e.what()}};
  }

  if (!a.graph_output.empty()) {
    std::ofstream gf(a.graph_output, std::ios::binary);
    if (!gf) {
      std::cerr << "cannot open " << a.graph_output << " for writing\n";
      return kExitUsage;
    }
    gf << graph_text;
    if (a.n <= 62) gf << "\n";
  }
  std::cout << out.dump(2) << "\n";
  return kExitSatisfied;
}

// ------------------------------------------------------------ enumerate ---

struct EnumerateArgs {
  int n = 4;
  int cap = 7;
  std::string output;
};

int run_enumerate(const EnumerateArgs& a) {
  std::ostream* out = &std::cout;
  std::ofstream file_out;
  if (!a.output.empty()) {
    file_out.open(a.output, std::ios::binary);
    if (!file_out) {
      std::cerr << "cannot open " << a.output << " for writing\n";
      return kExitUsage;
    }
    out = &file_out;
  }
  try {
    std::int64_t count = kspp::enumerate_connected_labeled(
        a.n, [&](const kspp::Graph& g) { *out << kspp::write_graph6(g) << "\n"; }, a.cap);
    std::cerr << "n=" << a.n << " connected labeled graphs: " << count << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitSatisfied;
}

// -------------------------------------------------------- verify-proofs ---

struct VerifyArgs {
  std::vector<int> ks{2, 4};
  int delta_span = 5;   // delta in [k+1, k+delta_span]
  int n_span = 6;       // n from minimal valid to minimal+n_span
  int chain_n_max = 20;
  int lemma_s_max = 3, lemma_t_max = 4, lemma_p_max = 3, lemma_n_max = 14;
  int q_samples = 200;
  int q_n_max = 20;
  std::uint64_t seed = 12345;
  double tol = 1e-10;
  std::string output;
  bool self_check_fault = false;
};

struct CheckTally {
  std::int64_t holds = 0, fails = 0, not_applicable = 0;
  std::vector<std::string> failures;
  void add(bool ok, const std::string& what) {
    if (ok) ++holds;
    else {
      ++fails;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
  void absorb(const kspp::CheckCounts& c) {
    holds += c.holds;
    fails += c.fails;
    not_applicable += c.not_applicable;
    for (const auto& f : c.failures)
      if (failures.size() < 20) failures.push_back(f);
  }
  ordered_json json() const {
    ordered_json j;
    j["holds"] = holds;
    j["fails"] = fails;
    j["not_applicable"] = not_applicable;
    if (!failures.empty()) j["failures"] = failures;
    return j;
  }
};

std::string tuple_tag(std::initializer_list<std::int64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

int run_verify_proofs(const VerifyArgs& a) {
  std::map<std::string, CheckTally> tallies;

  for (int k : a.ks) {
    if (k < 2 || k % 2 != 0) {
      std::cerr << "error: k must be even and >= 2\n";
      return kExitUsage;
    }
  }

  for (int k : a.ks) {
    for (int delta = k + 1; delta <= k + a.delta_span; ++delta) {
      std::int64_t gstar_min = static_cast<std::int64_t>(delta - k + 1) * delta + 2;

      // padded-family gap identity across its full s range
      auto& padded = tallies["padded_gap_identity"];
      for (int s = 1; s <= delta; ++s) {
        std::int64_t fam_min = s + static_cast<std::int64_t>(delta + 1 - s) *
                                       (static_cast<std::int64_t>(delta - k) * s + 1) + 1;
        std::int64_t n_min = std::max(gstar_min, fam_min);
        for (std::int64_t n = n_min; n <= n_min + a.n_span; ++n) {
          auto rep = kspp::verify_padded_gap_identity(static_cast<int>(n), delta, k, s);
          if (!rep.applicable) ++padded.not_applicable;
          else padded.add(rep.holds, "padded identity fails at " + rep.context);
        }
      }

      // singleton-family gap identity, covering both deep-removal subcases
      auto& single = tallies["singleton_gap_identity"];
      for (int s = 1; s <= delta + 2 * k + 4; ++s) {
        std::int64_t fam_min = s + static_cast<std::int64_t>(delta - k) * s + 1 + 1;
        std::int64_t n_min = std::max(gstar_min, fam_min);
        for (std::int64_t n = n_min; n <= n_min + a.n_span; ++n) {
          auto rep = kspp::verify_singleton_gap_identity(static_cast<int>(n), delta, k, s);
          if (!rep.applicable) ++single.not_applicable;
          else single.add(rep.holds, "singleton identity fails at " + rep.context);
        }
      }

      // closed form of the cubic at s=1
      auto& atone = tallies["cubic_at_one_consistency"];
      for (std::int64_t n = gstar_min; n <= gstar_min + a.n_span; ++n) {
        std::int64_t direct = kspp::gap_cubic_value(1, n, delta, k);
        std::int64_t closed = kspp::gap_cubic_at_one(n, delta, k);
        if (a.self_check_fault && n == gstar_min && delta == k + 1) closed += 1;
        atone.add(direct == closed,
                  "cubic(1) mismatch at " + tuple_tag({n, delta, k}) + ": " +
                      std::to_string(direct) + " vs " + std::to_string(closed));
      }

      // monotonicity of the cubic on [1, delta]
      auto& mono = tallies["cubic_monotonicity"];
      {
        std::int64_t inner = static_cast<std::int64_t>(delta) * delta + (2 - k) * delta - 2 * k - 1;
        std::int64_t gate = (inner * inner) / (6 * (delta - k)) + delta + k + 1;  // floor; +1 covers it
        for (std::int64_t n = gate; n <= gate + a.n_span + 1; ++n) {
          auto rep = kspp::verify_gap_cubic_monotone(static_cast<int>(n), delta, k);
          if (!rep.applicable) ++mono.not_applicable;
          else mono.add(rep.holds, "cubic not monotone at " + tuple_tag({n, delta, k}));
        }
      }

      // deep-removal floor: linear gap >= 1 at s >= delta+2k+4, minimal n
      auto& floor1 = tallies["linear_floor_deep"];
      for (int s = delta + 2 * k + 4; s <= delta + 2 * k + 8; ++s) {
        for (int pad = 0; pad <= 3; ++pad) {
          std::int64_t n = static_cast<std::int64_t>(delta - k + 1) * s + 2 + pad;
          std::int64_t gv = kspp::gap_linear_value(s, n, delta, k);
          floor1.add(gv >= 1, "deep floor fails at " + tuple_tag({n, delta, k, s}) + ": " +
                                  std::to_string(gv));
        }
      }

      // shallow-removal floor: linear gap >= 2 for delta+1 <= s <= delta+2k+3
      auto& floor2 = tallies["linear_floor_shallow"];
      for (int s = delta + 1; s <= delta + 2 * k + 3; ++s) {
        std::int64_t n0 = static_cast<std::int64_t>(delta) * delta + 4 * delta - k * k + 6;
        for (int pad = 0; pad <= 3; ++pad) {
          std::int64_t gv = kspp::gap_linear_value(s, n0 + pad, delta, k);
          floor2.add(gv >= 2, "shallow floor fails at " + tuple_tag({n0 + pad, delta, k, s}) +
                                  ": " + std::to_string(gv));
        }
      }
    }

    // violation budget chains (shallow/deep cases plus the all-removed bound)
    auto chain = kspp::verify_violation_budget_chain(k, a.chain_n_max);
    tallies["violation_budget_chain"].absorb(chain.counts);
  }

  // three-way algebraic agreement of the violation edge budget
  {
    auto& forms = tallies["edge_budget_forms"];
    for (int k = 2; k <= 8; k += 2)
      for (int n = 0; n <= 12; ++n)
        for (int s = 0; s <= 12; ++s)
          for (int t = 0; t <= 12; ++t) {
            auto f = kspp::violation_edge_budget(n, s, t, k);
            forms.add(f.direct == f.in_n && f.direct == f.in_s,
                      "edge budget forms disagree at " + tuple_tag({n, s, t, k}));
          }
  }

  // union-of-cliques maximization, exhaustive over the small grid
  {
    auto& lemma = tallies["clique_union_maximum"];
    for (int s = 0; s <= a.lemma_s_max; ++s)
      for (int t = 2; t <= a.lemma_t_max; ++t)
        for (int p = 1; p <= a.lemma_p_max; ++p)
          for (int n = s + p * t; n <= a.lemma_n_max; ++n)
            lemma.absorb(kspp::verify_clique_union_maximum(s, p, t, n).counts);
  }

  // eigenvalue upper bound on random connected graphs
  {
    auto& qb = tallies["q_upper_bound_random"];
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<int> npick(2, a.q_n_max);
    std::uniform_real_distribution<double> ppick(0.2, 0.9);
    for (int i = 0; i < a.q_samples; ++i) {
      int n = npick(rng);
      auto g = kspp::random_connected_graph(rng, n, ppick(rng));
      auto rep = kspp::verify_q_upper_bound(g, a.tol);
      if (!rep.determined) ++qb.not_applicable;
      else qb.add(rep.holds, "q exceeds edge bound on sample " + std::to_string(i));
    }
  }

  ordered_json out;
  std::int64_t fails_total = 0;
  ordered_json checks;
  for (const auto& [name, tally] : tallies) {
    checks[name] = tally.json();
    fails_total += tally.fails;
  }
  out["checks"] = checks;
  out["fails_total"] = fails_total;

  std::ostream* os = &std::cout;
  std::ofstream file_out;
  if (!a.output.empty()) {
    file_out.open(a.output, std::ios::binary);
    if (!file_out) {
      std::cerr << "cannot open " << a.output << " for writing\n";
      return kExitUsage;
    }
    os = &file_out;
  }
  *os << out.dump(2) << "\n";
  return fails_total == 0 ? kExitSatisfied : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact laboratory for the k-strong parity property"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "evaluate one graph against both oracles");
  check->add_option("input", check_args.path, "graph file (graph6 or edge list), '-' for stdin");
  check->add_option("--g6", check_args.inline_g6, "inline graph6 text instead of a file");
  check->add_option("--format", check_args.format, "input format: auto|g6|edgelist")
      ->check(CLI::IsMember({"auto", "g6", "edgelist"}))->capture_default_str();
  add_common_flags(check, check_args.common);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "scan a graph6 corpus, one CSV record per graph");
  scan->add_option("corpus", scan_args.path, "graph6 file, one graph per line, '-' for stdin")
      ->required();
  scan->add_option("-o,--output", scan_args.output, "write CSV here instead of stdout");
  scan->add_option("-j,--jobs", scan_args.jobs, "worker threads")->capture_default_str();
  add_common_flags(scan, scan_args.common);

  ExtremalArgs ext_args;
  auto* ext = app.add_subcommand("extremal", "emit and audit the extremal configuration");
  ext->add_option("-n,--n", ext_args.n, "order")->required();
  ext->add_option("-d,--delta", ext_args.delta, "minimum degree parameter")->required();
  ext->add_option("--graph-output", ext_args.graph_output, "also write the raw graph here");
  add_common_flags(ext, ext_args.common);

  EnumerateArgs enum_args;
  auto* enu = app.add_subcommand("enumerate", "emit all connected labeled graphs of an order");
  enu->add_option("-n,--n", enum_args.n, "order")->required();
  enu->add_option("--cap", enum_args.cap, "guard cap on the order")->capture_default_str();
  enu->add_option("-o,--output", enum_args.output, "write graph6 lines here instead of stdout");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-proofs", "run the exact proof-ledger sweeps");
  verify->add_option("-k,--k", verify_args.ks, "k values to sweep")->capture_default_str();
  verify->add_option("--delta-span", verify_args.delta_span, "delta from k+1 to k+span")
      ->capture_default_str();
  verify->add_option("--n-span", verify_args.n_span, "orders swept above each minimal n")
      ->capture_default_str();
  verify->add_option("--chain-n-max", verify_args.chain_n_max, "order cap for the case chains")
      ->capture_default_str();
  verify->add_option("--lemma-s-max", verify_args.lemma_s_max)->capture_default_str();
  verify->add_option("--lemma-t-max", verify_args.lemma_t_max)->capture_default_str();
  verify->add_option("--lemma-p-max", verify_args.lemma_p_max)->capture_default_str();
  verify->add_option("--lemma-n-max", verify_args.lemma_n_max)->capture_default_str();
  verify->add_option("--q-samples", verify_args.q_samples, "random graphs for the q bound")
      ->capture_default_str();
  verify->add_option("--q-n-max", verify_args.q_n_max)->capture_default_str();
  verify->add_option("--seed", verify_args.seed)->capture_default_str();
  verify->add_option("--tol", verify_args.tol)->capture_default_str();
  verify->add_option("-o,--output", verify_args.output, "write the JSON report here");
  verify->add_flag("--self-check-fault", verify_args.self_check_fault,
                   "inject a deliberate polynomial fault (negative-path testing)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed()) {
    if (check_args.path.empty() && check_args.inline_g6.empty()) {
      std::cerr << "check needs an input file or --g6\n";
      return kExitUsage;
    }
    return run_check(check_args);
  }
  if (scan->parsed()) return run_scan(scan_args);
  if (ext->parsed()) return run_extremal(ext_args);
  if (enu->parsed()) return run_enumerate(enum_args);
  if (verify->parsed()) return run_verify_proofs(verify_args);
  return kExitUsage;
}
