// csh: chromatic symmetric homology in q-degree zero.
//
// Subcommands: homology, restrict, csf, scan, family, conjectures.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "csh/chain_complex.hpp"
#include "csh/csf.hpp"
#include "csh/homology.hpp"
#include "csh/scan.hpp"
#include "csh/snf.hpp"
#include "json.hpp"

using namespace csh;
using ordered_json = nlohmann::ordered_json;

namespace {

struct graph_input {
  std::string builtin;
  std::string g6;
  std::string edges_file;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--builtin", builtin, "named graph (K1..K6, K33, C3..C7, star4..star7, G1..G8)");
    cmd->add_option("--g6", g6, "graph6 string");
    cmd->add_option("--edges", edges_file, "edge-list file: first line n, then 'i j' lines");
  }

  graph resolve() const {
    int given = !builtin.empty() + !g6.empty() + !edges_file.empty();
    if (given != 1) throw domain_error("exactly one of --builtin/--g6/--edges is required");
    if (!builtin.empty()) return builtin_graph(builtin);
    if (!g6.empty()) return parse_graph6(g6);
    return read_edge_list_file(edges_file);
  }
};

std::string cache_dir_from(const std::string& flag_value) {
  const char* env = std::getenv("CSH_CACHE");
  if (env && *env) return env;
  return flag_value;
}

ordered_json graph_json(const graph& g) {
  ordered_json edges = ordered_json::array();
  for (auto& [a, b] : g.edges) edges.push_back({a, b});
  return edges;
}

ordered_json homology_json(const graph& g, const std::vector<homology_group>& hs) {
  ordered_json out;
  out["graph"] = graph_json(g);
  out["n"] = g.n;
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < hs.size(); ++i) {
    ordered_json h;
    h["i"] = i;
    h["free"] = hs[i].free_rank;
    h["torsion"] = hs[i].torsion;
    arr.push_back(h);
  }
  out["H"] = arr;
  return out;
}

partition parse_shape(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
  return partition(parts);
}

int run_homology(const graph_input& in, int max_degree, i64 fast_torsion_p, i64 budget,
                 const std::string& cache_dir) {
  graph g = in.resolve();
  if (g.n > 7) throw size_error("full homology is capped at n = 7; larger graphs need reduction techniques this tool does not implement");
  std::ostringstream params;
  params << "deg=" << max_degree << ",fast=" << fast_torsion_p << ",budget=" << budget;
  result_cache cache(cache_dir);
  std::string key = result_cache::key_for(g, "homology", params.str());
  if (auto hit = cache.get(key)) {
    std::cout << *hit;
    return 0;
  }
  full_complex fc = build_full_complex(g, max_degree < 0 ? -1 : max_degree + 1, budget);
  ordered_json out;
  if (fast_torsion_p > 0) {
    // exact free ranks via rational ranks, torsion counted over GF(p)
    const integer_chain_complex& cc = fc.cc;
    int top = max_degree < 0 ? cc.top_degree() : std::min(max_degree, cc.top_degree());
    std::vector<int> rq(cc.top_degree() + 2, 0), rp(cc.top_degree() + 2, 0);
    for (int i = 1; i <= cc.top_degree(); ++i) {
      rq[i] = rank_exact(cc.boundaries[i]);
      rp[i] = rank_mod_p(cc.boundaries[i], fast_torsion_p);
    }
    out["graph"] = graph_json(g);
    out["n"] = g.n;
    out["prime"] = fast_torsion_p;
    ordered_json arr = ordered_json::array();
    for (int i = 0; i <= top; ++i) {
      ordered_json h;
      h["i"] = i;
      h["free"] = cc.dims[i] - rq[i] - (i + 1 <= cc.top_degree() ? rq[i + 1] : 0);
      bool prev_clean = rq[i] == rp[i];
      if (prev_clean)
        h["p_torsion_count"] = i + 1 <= cc.top_degree() ? rq[i + 1] - rp[i + 1] : 0;
      else
        h["p_torsion_count"] = nullptr;  // precondition failed; full SNF needed
      arr.push_back(h);
    }
    out["H"] = arr;
  } else {
    std::vector<homology_group> hs;
    if (max_degree < 0) {
      hs = homology(fc.cc);
    } else {
      for (int i = 0; i <= std::min(max_degree, fc.cc.top_degree()); ++i)
        hs.push_back(homology_at(fc.cc, i));
    }
    out = homology_json(g, hs);
  }
  std::string text = out.dump(2) + "\n";
  cache.put(key, text);
  std::cout << text;
  return 0;
}

int run_restrict(const graph_input& in, const std::string& shape_text, const std::string& order_text,
                 const std::string& out_dir) {
  graph g = in.resolve();
  partition lam = parse_shape(shape_text);
  listing_order ord = listing_order::bottom_row;
  if (order_text == "word")
    ord = listing_order::word_lex;
  else if (order_text != "def")
    throw domain_error("--order must be 'def' or 'word'");
  restricted_complex rc;
  try {
    rc = build_restricted_complex(g, lam, ord);
  } catch (const domain_error& e) {
    throw domain_error(std::string(e.what()) +
                       " (general shapes have no uniform generator choice; use the full complex "
                       "and isotype multiplicities instead)");
  }
  int rank_d1 = rank_exact(rc.cc.boundaries[1]);
  int rank_d2 = rank_exact(rc.cc.boundaries[2]);
  i64 mult = rc.cc.dims[1] - rank_d1 - rank_d2;

  ordered_json out;
  out["graph"] = graph_json(g);
  out["shape"] = lam.parts;
  out["order"] = order_text;
  out["dims"] = rc.cc.dims;
  out["dim_ker_d1"] = rc.cc.dims[1] - rank_d1;
  out["rank_d2"] = rank_d2;
  out["multiplicity"] = mult;

  if (mult > 0) {
    // homology generators: kernel vectors of d1 independent modulo im d2
    std::vector<std::vector<i64>> kernel = integer_kernel(rc.cc.boundaries[1]);
    ordered_json gens = ordered_json::array();
    int base_rank = rank_d2;
    sparse_matrix stacked(rc.cc.boundaries[2].nrows, 0);
    stacked.cols = rc.cc.boundaries[2].cols;
    stacked.ncols = rc.cc.boundaries[2].ncols;
    for (const std::vector<i64>& kv : kernel) {
      if ((i64)gens.size() >= mult) break;
      sparse_matrix trial = stacked;
      trial.ncols++;
      trial.cols.emplace_back();
      for (size_t r = 0; r < kv.size(); ++r)
        if (kv[r] != 0) trial.cols.back().emplace_back((int)r, kv[r]);
      int r = rank_exact(trial);
      if (r > base_rank) {
        base_rank = r;
        stacked = std::move(trial);
        std::string expr;
        for (size_t i = 0; i < kv.size(); ++i) {
          if (kv[i] == 0) continue;
          if (kv[i] > 0 && !expr.empty()) expr += "+";
          if (kv[i] == -1)
            expr += "-";
          else if (kv[i] != 1)
            expr += std::to_string(kv[i]);
          expr += rc.cc.labels[1][i];
        }
        gens.push_back(expr);
      }
    }
    out["generators"] = gens;
  }

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    auto dump = [&](const std::string& stem, const sparse_matrix& m,
                    const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
      std::ofstream mf(out_dir + "/" + stem + ".mtx");
      write_matrix_market(mf, m);
      std::ofstream lf(out_dir + "/" + stem + ".labels");
      lf << label_sidecar(rows, cols);
    };
    dump("d1", rc.cc.boundaries[1], rc.cc.labels[0], rc.cc.labels[1]);
    dump("d2", rc.cc.boundaries[2], rc.cc.labels[1], rc.cc.labels[2]);
    out["files"] = {out_dir + "/d1.mtx", out_dir + "/d1.labels", out_dir + "/d2.mtx",
                    out_dir + "/d2.labels"};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

ordered_json schur_json(const schur_expansion& x) {
  ordered_json out;
  out["n"] = x.n;
  ordered_json terms = ordered_json::array();
  // ascending lexicographic shape order, matching the documented schema
  for (auto& [lam, c] : x.coeffs) {
    if (c == 0) continue;
    ordered_json t;
    t["shape"] = lam.parts;
    t["coeff"] = c;
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

int run_csf(const graph_input& in, const std::string& cache_dir) {
  graph g = in.resolve();
  result_cache cache(cache_dir);
  std::string key = result_cache::key_for(g, "csf", "");
  if (auto hit = cache.get(key)) {
    std::cout << *hit;
    return 0;
  }
  std::string text = schur_json(csf_schur(g)).dump(2) + "\n";
  cache.put(key, text);
  std::cout << text;
  return 0;
}

int run_scan(const std::string& file, i64 p, int degree, int jobs, bool strict,
             const std::string& format, const std::string& cache_dir) {
  std::ifstream f(file);
  if (!f) throw parse_error("cannot open corpus file: " + file);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }

  result_cache cache(cache_dir);
  std::ostringstream params;
  params << "p=" << p << ",deg=" << degree;

  i64 warn_count = 0;
  ordered_json json_records = ordered_json::array();
  if (format == "csv") std::cout << "graph6,n,m,planar,h1_free,h1_2torsion,verdict\n";

  auto emit = [&](const scan_record& r) {
    if (format == "csv") {
      std::cout << r.csv_line() << "\n";
    } else {
      ordered_json j;
      j["graph6"] = r.graph6;
      j["n"] = r.n;
      j["m"] = r.m;
      j["planar"] = r.planar;
      j["h1_free"] = r.h1_free_rank;
      j["h1_2torsion"] = r.h1_two_torsion;
      j["verdict"] = r.verdict();
      json_records.push_back(j);
    }
    if (cache.enabled()) {
      try {
        graph g = parse_graph6(r.graph6);
        cache.put(result_cache::key_for(g, "scan", params.str()), r.csv_line());
      } catch (...) {
      }
    }
  };
  scan_summary summary =
      scan_corpus(lines, p, degree, jobs, emit, [&](size_t idx, const std::string& what) {
        ++warn_count;
        std::cerr << "warning: line " << idx + 1 << ": " << what << "\n";
      });

  if (format == "csv") {
    std::cerr << "scanned " << summary.total << " graphs, " << summary.torsion_count
              << " with torsion, " << summary.nonplanar_count << " nonplanar, "
              << summary.counterexamples << " counterexamples, " << summary.skipped
              << " skipped\n";
  } else {
    ordered_json out;
    out["records"] = json_records;
    ordered_json s;
    s["total"] = summary.total;
    s["torsion"] = summary.torsion_count;
    s["nonplanar"] = summary.nonplanar_count;
    s["counterexamples"] = summary.counterexamples;
    s["skipped"] = summary.skipped;
    out["summary"] = s;
    std::cout << out.dump(2) << "\n";
  }
  if (strict && summary.counterexamples > 0) return 1;
  return 0;
}

int run_family(const graph_input& in, int u, int v, int w, int z) {
  graph base = in.resolve();
  auto [a, b] = orellana_scott_pair(base, u, v, w, z);
  schur_expansion xa = csf_schur(a), xb = csf_schur(b);
  if (!(xa == xb)) throw consistency_error("constructed pair has different CSF");
  ordered_json out;
  ordered_json ja, jb;
  ja["graph6"] = encode_graph6(a);
  ja["edges"] = graph_json(a);
  ja["planar"] = is_planar(a);
  jb["graph6"] = encode_graph6(b);
  jb["edges"] = graph_json(b);
  jb["planar"] = is_planar(b);
  out["first"] = ja;
  out["second"] = jb;
  out["csf_equal"] = true;
  out["csf"] = schur_json(xa);
  std::cout << out.dump(2) << "\n";
  return 0;
}

ordered_json conjecture_report(const graph& g, i64 budget) {
  full_complex fc = build_full_complex(g, -1, budget);
  std::vector<homology_group> hs = homology(fc.cc);
  ordered_json out;
  out["graph6"] = encode_graph6(g);
  ordered_json ranks = ordered_json::array();
  for (auto& h : hs) ranks.push_back(h.free_rank);
  out["H_free_ranks"] = ranks;

  int top_nonzero = -1;
  for (size_t i = 0; i < hs.size(); ++i)
    if (!hs[i].is_trivial()) top_nonzero = (int)i;
  int span0 = top_nonzero + 1;
  out["span0"] = span0;

  // cycle rank formula, when the graph is a cycle
  bool is_cycle = g.n >= 3 && g.m() == g.n;
  if (is_cycle)
    for (int vdeg = 1; vdeg <= g.n && is_cycle; ++vdeg) {
      int deg = 0;
      for (auto& [x, y] : g.edges) deg += (x == vdeg) + (y == vdeg);
      if (deg != 2) is_cycle = false;
    }
  if (is_cycle && g.is_connected()) {
    bool ok = true;
    for (size_t i = 0; i < hs.size(); ++i)
      if (hs[i].free_rank != binomial(g.n - 1, (int)i) || !hs[i].torsion.empty()) ok = false;
    out["cycle_rank_formula"] = ok ? "pass" : "fail";
  } else {
    out["cycle_rank_formula"] = "n/a";
  }

  // span bounds n - b <= span0 <= n - 1
  int b = block_count(g);
  out["blocks"] = b;
  out["span_bounds"] = (g.n - b <= span0 && span0 <= g.n - 1) ? "pass" : "fail";

  // nonvanishing in 0..span0-1 and unimodality of free ranks
  bool nonvanishing = true;
  for (int i = 0; i < span0; ++i)
    if (hs[i].is_trivial()) nonvanishing = false;
  out["nonvanishing"] = nonvanishing ? "pass" : "fail";

  bool unimodal = true;
  {
    int i = 1;
    int k = (int)hs.size();
    while (i < k && hs[i].free_rank >= hs[i - 1].free_rank) ++i;
    while (i < k && hs[i].free_rank <= hs[i - 1].free_rank) ++i;
    unimodal = i == k;
  }
  out["unimodal"] = unimodal ? "pass" : "fail";
  return out;
}

int run_conjectures(const graph_input& in, const std::string& corpus_file, i64 budget) {
  if (!corpus_file.empty()) {
    std::ifstream f(corpus_file);
    if (!f) throw parse_error("cannot open corpus file: " + corpus_file);
    ordered_json arr = ordered_json::array();
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty()) continue;
      arr.push_back(conjecture_report(parse_graph6(line), budget));
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << conjecture_report(in.resolve(), budget).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic symmetric homology (q-degree zero) toolkit"};
  app.require_subcommand(1);

  // homology
  auto* cmd_h = app.add_subcommand("homology", "integral homology of the full complex");
  graph_input in_h;
  in_h.add_flags(cmd_h);
  int h_degree = -1;
  i64 h_fast = 0, h_budget = 200000;
  std::string h_cache;
  cmd_h->add_option("--degree", h_degree, "compute H_0..H_degree only");
  cmd_h->add_option("--fast-torsion", h_fast, "prime p: exact free ranks + GF(p) torsion counts");
  cmd_h->add_option("--budget", h_budget, "total chain-dimension budget (default 200000)");
  cmd_h->add_option("--cache", h_cache, "cache directory (env CSH_CACHE overrides)");

  // restrict
  auto* cmd_r = app.add_subcommand("restrict", "Specht-restricted complex for shape (2^k,1^(n-2k))");
  graph_input in_r;
  in_r.add_flags(cmd_r);
  std::string r_shape, r_order = "def", r_out;
  cmd_r->add_option("--shape", r_shape, "partition, e.g. 2,2,2")->required();
  cmd_r->add_option("--order", r_order, "generator listing convention: def | word");
  cmd_r->add_option("--out", r_out, "directory for MatrixMarket dumps + label sidecars");

  // csf
  auto* cmd_c = app.add_subcommand("csf", "chromatic symmetric function in the Schur basis");
  graph_input in_c;
  in_c.add_flags(cmd_c);
  std::string c_cache;
  cmd_c->add_option("--cache", c_cache, "cache directory (env CSH_CACHE overrides)");

  // scan
  auto* cmd_s = app.add_subcommand("scan", "torsion/planarity scan over a graph6 corpus");
  std::string s_file, s_format = "csv", s_cache;
  i64 s_prime = 2;
  int s_degree = 1, s_jobs = 2;
  bool s_strict = false;
  cmd_s->add_option("file", s_file, "graph6 corpus, one graph per line")->required();
  cmd_s->add_option("--prime", s_prime, "torsion prime (default 2)");
  cmd_s->add_option("--degree", s_degree, "homological degree (default 1)");
  cmd_s->add_option("--jobs", s_jobs, "worker threads");
  cmd_s->add_flag("--strict", s_strict, "exit nonzero on counterexample");
  cmd_s->add_option("--format", s_format, "csv | json");
  cmd_s->add_option("--cache", s_cache, "cache directory (env CSH_CACHE overrides)");

  // family
  auto* cmd_f = app.add_subcommand("family", "Orellana-Scott pair from a base graph");
  graph_input in_f;
  in_f.add_flags(cmd_f);
  std::vector<int> f_verts;
  cmd_f->add_option("uvwz", f_verts, "the four corner vertices u v w z")->expected(4);

  // conjectures
  auto* cmd_j = app.add_subcommand("conjectures", "evaluate the homology-profile conjectures");
  graph_input in_j;
  in_j.add_flags(cmd_j);
  std::string j_corpus;
  i64 j_budget = 200000;
  cmd_j->add_option("--corpus", j_corpus, "graph6 corpus file (instead of a single graph)");
  cmd_j->add_option("--budget", j_budget, "total chain-dimension budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_h->parsed()) return run_homology(in_h, h_degree, h_fast, h_budget, cache_dir_from(h_cache));
    if (cmd_r->parsed()) return run_restrict(in_r, r_shape, r_order, r_out);
    if (cmd_c->parsed()) return run_csf(in_c, cache_dir_from(c_cache));
    if (cmd_s->parsed())
      return run_scan(s_file, s_prime, s_degree, s_jobs, s_strict, s_format, cache_dir_from(s_cache));
    if (cmd_f->parsed()) {
      if (f_verts.size() != 4) throw domain_error("family needs u v w z");
      return run_family(in_f, f_verts[0], f_verts[1], f_verts[2], f_verts[3]);
    }
    if (cmd_j->parsed()) return run_conjectures(in_j, j_corpus, j_budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
