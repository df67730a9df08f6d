#include "fdiag/acceptance.hpp"
#include "fdiag/chambers.hpp"
#include "fdiag/config.hpp"
#include "fdiag/enumerate.hpp"
#include "fdiag/invariants.hpp"
#include "fdiag/poly.hpp"
#include "fdiag/table1.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace fdiag;

std::vector<long long> parse_csv(const std::string& s, const char* what) {
  std::vector<long long> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(errc::invalid_query, std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  return out;
}

// "i:count[,i:count...]" -> sparse (order, count) pairs
std::vector<std::pair<long long, long long>> parse_sparse(const std::string& s,
                                                          const char* what) {
  std::vector<std::pair<long long, long long>> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const std::size_t colon = tok.find(':');
    if (colon == std::string::npos)
      fail(errc::invalid_query, std::string(what) + ": expected i:count, got '" + tok + "'");
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string a = tok.substr(0, colon), b = tok.substr(colon + 1);
      const long long order = std::stoll(a, &u1);
      const long long count = std::stoll(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(tok);
      out.push_back({order, count});
    } catch (const std::exception&) {
      fail(errc::invalid_query, std::string(what) + ": expected i:count, got '" + tok + "'");
    }
  }
  return out;
}

struct output_target {
  std::ofstream file;
  std::ostream* out = &std::cout;
  explicit output_target(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) fail(errc::invalid_query, "cannot open output file: " + path);
      out = &file;
    }
  }
  std::ostream& stream() { return *out; }
};

void emit_json(std::ostream& out, const json& j, const std::string& format) {
  if (format == "jsonl")
    out << j.dump() << "\n";
  else
    out << j.dump(2) << "\n";
}

std::string spaced(const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ' ';
    out += label[i];
  }
  return out;
}

json mv_to_json(const multiplicity_vector& mv) {
  auto sparse = [](const std::vector<std::pair<long long, long long>>& m) {
    json a = json::array();
    for (const auto& [order, count] : m) a.push_back(json::array({order, count}));
    return a;
  };
  return json{{"alpha", sparse(mv.alpha)},
              {"beta", sparse(mv.beta)},
              {"alpha_tilde", sparse(mv.alpha_tilde)},
              {"beta_tilde", sparse(mv.beta_tilde)},
              {"compact", mv.compact("alpha") + "," + mv.compact("beta") + "," +
                              mv.compact("alpha_tilde") + "," + mv.compact("beta_tilde")}};
}

int cmd_invariant(const run_config& cfg, const invariant_query& q, bool list_diagrams) {
  check_invariant_query(q);
  output_target target(cfg.output);
  std::ostream& out = target.stream();
  budget_meter meter{cfg.budgets};
  Int total = 0;
  long long count = 0;
  if (list_diagrams) {
    Int running = 0;
    const enumeration_query eq{q.a, q.g, q.k, canonical_x(q), y_multiset(q)};
    const diagram_sum s =
        enumerate_diagrams(eq, meter, [&](const floor_diagram& d, const Int& mu) {
          running += mu;
          const json line = json{{"diagram", diagram_to_json(d)},
                                 {"mu", int_to_json(mu)},
                                 {"running_total", int_to_json(running)}};
          out << line.dump() << "\n";
        });
    total = s.total;
    count = s.count;
  } else {
    total = compute_N(q, meter);
  }
  if (cfg.format == "json" || cfg.format == "jsonl") {
    json j{{"a", q.a}, {"b", q.b}, {"k", q.k}, {"g", q.g}, {"N", int_to_json(total)}};
    if (list_diagrams) j["diagrams"] = count;
    emit_json(out, j, cfg.format);
  } else {
    out << "N = " << total.str() << "\n";
  }
  return 0;
}

int cmd_f(const run_config& cfg, long long a, long long k, long long g,
          const std::string& x_str, const std::string& y_str) {
  const std::vector<long long> x = parse_csv(x_str, "--x");
  const std::vector<long long> y = parse_csv(y_str, "--y");
  output_target target(cfg.output);
  std::ostream& out = target.stream();
  budget_meter meter{cfg.budgets};
  const Int value = compute_F(a, k, g, x, y, meter);
  const multiplicity_vector mv = multiplicity_vector_of(x, y);
  const long long b = mv.weighted_sum_right();
  const std::string resolved = "N_" + std::to_string(g) + "^{" + mv.compact("alpha") + "," +
                               mv.compact("beta") + "," + mv.compact("alpha_tilde") + "," +
                               mv.compact("beta_tilde") + "}(" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(k) + ")";
  std::string label;
  if (x.size() == 2 && y.size() == 1) {
    try {
      label = chamber_label(lambda_point{x, y}, k);
    } catch (const error&) {
      // on a wall or out of scope: no label
    }
  }
  if (cfg.format == "json" || cfg.format == "jsonl") {
    json j{{"F", int_to_json(value)}, {"a", a},          {"b", b},
           {"k", k},                  {"g", g},          {"x", x},
           {"y", y},                  {"query", resolved}};
    j["multiplicities"] = mv_to_json(mv);
    if (!label.empty()) j["label"] = label;
    emit_json(out, j, cfg.format);
  } else {
    out << "F = " << value.str() << "\n";
    out << "query: " << resolved << "\n";
    if (!label.empty()) out << "chamber: " << spaced(label) << "\n";
  }
  return 0;
}

json point_to_json(const lambda_point& p, const Int& v) {
  return json{{"x", p.x}, {"y", p.y}, {"F", int_to_json(v)}};
}

int cmd_chamber_poly(const run_config& cfg, long long a, long long k, long long g,
                     long long n1, long long n2, const std::string& sig_str,
                     const std::string& point_str) {
  const arrangement arr = build_arrangement(n1, n2, a, k);
  std::string sig;
  if (!point_str.empty()) {
    const std::vector<long long> vals = parse_csv(point_str, "--point");
    if (static_cast<long long>(vals.size()) != n1 + n2)
      fail(errc::invalid_query, "--point needs n1 + n2 coordinates");
    lambda_point p;
    p.x.assign(vals.begin(), vals.begin() + n1);
    p.y.assign(vals.begin() + n1, vals.end());
    sig = signature_of(arr, p);
  } else {
    sig = sig_str;
    if (sig.size() != arr.forms.size())
      fail(errc::invalid_query,
           "--signature needs one '+'/'-' per wall (" + std::to_string(arr.forms.size()) +
               " walls here)");
    for (char c : sig)
      if (c != '+' && c != '-')
        fail(errc::invalid_query, "--signature characters must be '+' or '-'");
  }
  budget_meter meter{cfg.budgets};
  const chamber_piece piece =
      chamber_polynomial(a, k, g, n1, n2, sig, cfg.seed, meter, cfg.box_bound, cfg.workers);
  const parity_report rep = degree_parity_report(piece, a, g, n2, k);
  output_target target(cfg.output);
  std::ostream& out = target.stream();
  if (cfg.format == "latex") {
    out << poly_to_latex(piece.poly) << "\n";
  } else if (cfg.format == "json" || cfg.format == "jsonl") {
    json j{{"a", a},   {"k", k},   {"g", g},
           {"n1", n1}, {"n2", n2}, {"signature", sig},
           {"poly", poly_to_json(piece.poly)}};
    j["thin"] = piece.thin;
    j["degree"] = rep.zero ? json(nullptr) : json(rep.degree);
    j["expected_degree"] = rep.expected_degree;
    j["degree_ok"] = rep.degree_ok;
    j["parity_checked"] = rep.parity_checked;
    j["parity_ok"] = rep.parity_ok;
    if (!rep.note.empty()) j["note"] = rep.note;
    json ev = json::array(), ho = json::array();
    for (const auto& [p, v] : piece.evidence) ev.push_back(point_to_json(p, v));
    for (const auto& [p, v] : piece.holdout) ho.push_back(point_to_json(p, v));
    j["evidence"] = ev;
    j["holdout"] = ho;
    emit_json(out, j, cfg.format);
  } else {
    out << "signature: " << sig << "\n";
    out << "polynomial: " << poly_to_text(piece.poly) << "\n";
    if (rep.zero)
      out << "degree = 0 (zero polynomial; nonzero pieces have degree " << rep.expected_degree
          << ")\n";
    else
      out << "degree = " << rep.degree << " (expected " << rep.expected_degree << ", "
          << (rep.degree_ok ? "ok" : "MISMATCH") << ")\n";
    if (rep.parity_checked)
      out << "parity: " << (rep.parity_ok ? "homogeneous" : "MIXED") << "\n";
    else if (!rep.note.empty())
      out << "parity: " << rep.note << "\n";
    out << "evidence: " << piece.evidence.size() << " interpolation points, "
        << piece.holdout.size() << " held-out checks\n";
  }
  return 0;
}

int emit_suites(const run_config& cfg, const std::vector<suite_result>& results) {
  output_target target(cfg.output);
  std::ostream& out = target.stream();
  bool all = true;
  for (const suite_result& r : results) all = all && r.pass;
  if (cfg.format == "text" || cfg.format == "latex") {
    for (const suite_result& r : results)
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
  } else {
    json arr = json::array();
    for (const suite_result& r : results) arr.push_back(suite_to_json(r));
    emit_json(out, json{{"pass", all}, {"suites", arr}}, cfg.format);
  }
  return all ? 0 : 1;
}

int cmd_verify_table1(const run_config& cfg, long long k_filter, long long g_filter) {
  std::vector<long long> ks = {1, 2}, gs = {0, 1};
  if (k_filter >= 0) ks = {k_filter};
  if (g_filter >= 0) gs = {g_filter};
  output_target target(cfg.output);
  std::ostream& out = target.stream();
  bool all = true;
  json rows = json::array();
  std::vector<std::string> lines;
  for (long long k : ks)
    for (long long g : gs)
      for (const std::string& label : table1_labels()) {
        budget_meter meter{cfg.budgets};
        const table1_report rep =
            verify_table1(label, k, g, cfg.seed, meter, cfg.box_bound, cfg.workers);
        all = all && rep.equal;
        rows.push_back(json{{"label", rep.label},
                            {"k", rep.k},
                            {"g", rep.g},
                            {"mode", rep.mode},
                            {"equal", rep.equal},
                            {"points_used", rep.points_used},
                            {"detail", rep.detail}});
        lines.push_back((rep.equal ? "[PASS] " : "[FAIL] ") + rep.label +
                        " k=" + std::to_string(rep.k) + " g=" + std::to_string(rep.g) +
                        " (" + rep.mode + ", " + std::to_string(rep.points_used) +
                        " points)" + (rep.detail.empty() ? "" : ": " + rep.detail));
      }
  if (cfg.format == "text" || cfg.format == "latex") {
    for (const std::string& line : lines) out << line << "\n";
    out << (all ? "PASS" : "FAIL") << "\n";
  } else {
    emit_json(out, json{{"pass", all}, {"rows", rows}}, cfg.format);
  }
  return all ? 0 : 1;
}

int exit_code_of(errc c) {
  switch (c) {
    case errc::budget_exceeded:
      return 3;
    case errc::sampling_failure:
      return 4;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact floor-diagram counts on Hirzebruch surfaces, their chamber polynomials, "
               "and the verification suites"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  long long box_bound = 0, max_templates = 0, max_lattice_points = 0;
  int workers = 0;
  std::string format, output, config_path;
  auto* seed_opt = app.add_option("--seed", seed, "random seed (default 42)");
  auto* box_opt = app.add_option("--box-bound", box_bound, "sampling box half-width (0: default)");
  auto* mt_opt = app.add_option("--max-templates", max_templates, "template budget");
  auto* mlp_opt = app.add_option("--max-lattice-points", max_lattice_points, "work budget");
  auto* fmt_opt = app.add_option("--format", format, "text | json | jsonl | latex");
  auto* out_opt = app.add_option("--output", output, "write to file instead of stdout");
  auto* workers_opt = app.add_option("--workers", workers, "worker threads (0: all cores)");
  auto* cfg_opt = app.add_option("--config", config_path, "key=value config file");

  auto* inv = app.add_subcommand("invariant", "count marked floor diagrams N");
  inv->fallthrough();
  long long ia = 1, ib = 0, ik = 0, ig = 0;
  std::string alpha_s, beta_s, alpha_t_s, beta_t_s;
  bool list_diagrams = false;
  inv->add_option("--a", ia, "number of floors")->required();
  inv->add_option("--b", ib, "fiber class coefficient");
  inv->add_option("--k", ik, "Hirzebruch index");
  inv->add_option("--g", ig, "genus");
  inv->add_option("--alpha", alpha_s, "fixed left contacts, i:count[,i:count...]");
  inv->add_option("--beta", beta_s, "moving left contacts, i:count[,...]");
  inv->add_option("--alpha-tilde", alpha_t_s, "fixed right contacts, i:count[,...]");
  inv->add_option("--beta-tilde", beta_t_s, "moving right contacts, i:count[,...]");
  inv->add_flag("--list-diagrams", list_diagrams, "stream diagram JSON lines");

  auto* fc = app.add_subcommand("f", "evaluate F at a lattice point");
  fc->fallthrough();
  long long fa = 1, fk = 0, fg = 0;
  std::string x_s, y_s;
  fc->add_option("--a", fa, "number of floors")->required();
  fc->add_option("--k", fk, "Hirzebruch index");
  fc->add_option("--g", fg, "genus");
  fc->add_option("--x", x_s, "fixed-end divergences, comma separated");
  fc->add_option("--y", y_s, "moving-end divergences, comma separated");

  auto* cp = app.add_subcommand("chamber-poly", "interpolate the chamber piece of F");
  cp->fallthrough();
  long long ca = 1, ck = 0, cg = 0, cn1 = 1, cn2 = 1;
  std::string sig_s, point_s;
  cp->add_option("--a", ca, "number of floors")->required();
  cp->add_option("--k", ck, "Hirzebruch index");
  cp->add_option("--g", cg, "genus");
  cp->add_option("--n1", cn1, "number of x coordinates")->required();
  cp->add_option("--n2", cn2, "number of y coordinates")->required();
  auto* sig_opt = cp->add_option("--signature", sig_s, "wall signs, one '+'/'-' per wall");
  auto* point_opt = cp->add_option("--point", point_s, "lattice point, n1+n2 comma-separated values");
  sig_opt->excludes(point_opt);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->fallthrough();
  ver->require_subcommand(1);
  auto* v_paper = ver->add_subcommand("paper-values", "fixed reference counts and the example diagram");
  v_paper->fallthrough();
  auto* v_table = ver->add_subcommand("table1", "closed-form chamber table rows");
  v_table->fallthrough();
  long long t_k = -1, t_g = -1;
  v_table->add_option("--k", t_k, "restrict to one k (default: 1 and 2)");
  v_table->add_option("--g", t_g, "restrict to one genus (default: 0 and 1)");
  auto* v_dp = ver->add_subcommand("degree-parity", "piece degree and parity across the sweep grid");
  v_dp->fallthrough();
  bool gamma_only = false;
  v_dp->add_flag("--gamma-only", gamma_only, "check only the vertex-multiplicity polynomials");
  auto* v_recip = ver->add_subcommand("reciprocity", "weighted Ehrhart reciprocity");
  v_recip->fallthrough();
  auto* v_ie = ver->add_subcommand("inclusion-exclusion", "weighted count identity");
  v_ie->fallthrough();
  long long ie_trials = 100;
  v_ie->add_option("--trials", ie_trials, "number of random configurations");
  auto* v_oracle = ver->add_subcommand("oracle", "fast enumeration vs brute force");
  v_oracle->fallthrough();
  long long oracle_trials = 50;
  v_oracle->add_option("--trials", oracle_trials, "number of random queries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    run_config cfg = default_config();
    if (cfg_opt->count()) cfg = load_config_file(config_path, cfg);
    if (seed_opt->count()) cfg.seed = seed;
    if (box_opt->count()) cfg.box_bound = box_bound;
    if (mt_opt->count()) cfg.budgets.max_templates = max_templates;
    if (mlp_opt->count()) cfg.budgets.max_lattice_points = max_lattice_points;
    if (fmt_opt->count()) cfg.format = format;
    else if (*ver) cfg.format = "json";
    if (out_opt->count()) cfg.output = output;
    if (workers_opt->count()) cfg.workers = workers;
    check_config(cfg);

    if (*inv) {
      invariant_query q;
      q.a = ia, q.b = ib, q.k = ik, q.g = ig;
      q.mv.alpha = parse_sparse(alpha_s, "--alpha");
      q.mv.beta = parse_sparse(beta_s, "--beta");
      q.mv.alpha_tilde = parse_sparse(alpha_t_s, "--alpha-tilde");
      q.mv.beta_tilde = parse_sparse(beta_t_s, "--beta-tilde");
      return cmd_invariant(cfg, q, list_diagrams);
    }
    if (*fc) return cmd_f(cfg, fa, fk, fg, x_s, y_s);
    if (*cp) {
      if (!sig_opt->count() && !point_opt->count())
        fail(errc::invalid_query, "chamber-poly needs --signature or --point");
      return cmd_chamber_poly(cfg, ca, ck, cg, cn1, cn2, sig_s, point_s);
    }
    if (*v_paper)
      return emit_suites(cfg, {verify_reference_values(), verify_example_diagram()});
    if (*v_table) return cmd_verify_table1(cfg, t_k, t_g);
    if (*v_dp) {
      if (gamma_only) return emit_suites(cfg, {verify_gamma()});
      const sweep_outcome sweep = run_degree_parity_sweep(cfg.seed, cfg.workers);
      return emit_suites(cfg, {verify_degree(sweep), verify_parity(sweep, cfg.seed, cfg.workers)});
    }
    if (*v_recip) return emit_suites(cfg, {verify_reciprocity(cfg.seed, cfg.workers)});
    if (*v_ie) return emit_suites(cfg, {verify_inclusion_exclusion(ie_trials, cfg.seed)});
    if (*v_oracle) return emit_suites(cfg, {verify_oracle(oracle_trials, cfg.seed)});
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_of(e.code);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
