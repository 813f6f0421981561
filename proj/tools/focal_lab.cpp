// focal-lab: bounds, constructions, verification and exact search for
// focal-free hypergraphs and codes.
//
// Exit codes: 0 success / positive verdict, 1 semantic negative (witness
// found, failed criterion, not in catalog), 2 input or usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "focal/bounds.hpp"
#include "focal/designs.hpp"
#include "focal/detect.hpp"
#include "focal/json_io.hpp"
#include "focal/matching.hpp"
#include "focal/orthogonal_array.hpp"
#include "focal/packing.hpp"
#include "focal/repro.hpp"
#include "focal/search.hpp"

namespace {

using focal::BigInt;
using focal::BigRat;
using focal::Json;

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += " ";
    out += argv[i];
  }
  return out;
}

std::string g_command_line;
constexpr const char* kVersion = "0.1.0";

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// RFC-4180-style quoting
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    os << (i ? "," : "") << csv_field(row[i]);
  os << "\r\n";
}

void write_manifest(const std::string& artifact_path, Json parameters,
                    Json verification, double wall_seconds) {
  Json m;
  m["schema"] = "focal-lab/manifest-v1";
  m["command"] = g_command_line;
  m["version"] = kVersion;
  m["parameters"] = std::move(parameters);
  m["verification"] = std::move(verification);
  m["outputs"] = Json::array({artifact_path});
  m["wallTimeSeconds"] = wall_seconds;
  std::ofstream out(artifact_path + ".manifest.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest");
  out << m.dump(2) << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void print_bound_report(const focal::BoundReport& rep, bool as_json) {
  if (as_json) {
    std::cout << focal::bound_report_json(rep).dump(2) << "\n";
    return;
  }
  std::cout << (rep.code_side ? "code" : "hypergraph") << " bounds r=" << rep.r
            << " n=" << rep.n
            << (rep.code_side ? " q=" + std::to_string(rep.q)
                              : " k=" + std::to_string(rep.k))
            << "  t=" << rep.t << " lambda=" << rep.lambda
            << " m=" << rep.m.value().str()
            << (rep.m.conjectural ? " (conjectural)" : " (exact)") << "\n";
  for (const auto& v : rep.values) {
    std::cout << "  " << v.name << " = " << focal::rat_decimal(v.value)
              << " (floor " << focal::rat_floor(v.value).str() << ")"
              << (v.valid ? "" : "  [not valid: " + v.reason + "]")
              << (v.conjectural ? "  [conjectural m]" : "") << "\n";
  }
}

std::string proof_str(focal::Maximality m) { return focal::maximality_name(m); }

// ---- construction rows shared by `table` ----

struct BuiltObject {
  std::string source;
  std::size_t size = 0;
};

std::optional<BuiltObject> build_hypergraph_object(int r, int n, int k,
                                                   std::uint64_t seed) {
  const int t = focal::threshold_t(r, k);
  if (t >= 1 && t <= k)
    if (auto d = focal::design_small(n, k, t)) return BuiltObject{"design", d->size()};
  if (t >= 2 && k > t && n >= k)
    return BuiltObject{"greedyPacking",
                       focal::greedy_packing(n, k, t, seed).size()};
  return std::nullopt;
}

std::optional<BuiltObject> build_code_object(int r, int n, int q,
                                             std::uint64_t seed) {
  try {
    return BuiltObject{"oa", focal::focal_free_code_build(r, n, q).size()};
  } catch (const std::invalid_argument&) {
  }
  BigInt space = 1;
  for (int i = 0; i < n; ++i) space *= q;
  if (n >= 2 && space <= (BigInt(1) << 20))
    return BuiltObject{
        "inducedPacking",
        focal::focal_free_code_build_packing(r, n, q, seed, 2).size()};
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  g_command_line = join_args(argc, argv);
  CLI::App app{
      "focal-lab: bounds, constructions, verification and exact search for "
      "focal-free hypergraphs and codes"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  int threads = default_threads();
  app.add_option("--threads", threads,
                 "worker threads for restart batches (outputs do not depend "
                 "on this)")
      ->envname("FOCAL_LAB_THREADS");

  // ---- bounds ----
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate bound formulas");
  int b_r = 3, b_n = 0, b_k = 0, b_q = 0;
  bool b_json = false;
  long long b_mcap = 30;
  auto* bounds_h = bounds_cmd->add_subcommand("hypergraph", "f_r(n,k) bounds");
  bounds_h->add_option("--r", b_r)->required();
  bounds_h->add_option("--n", b_n)->required();
  bounds_h->add_option("--k", b_k)->required();
  bounds_h->add_flag("--json", b_json);
  bounds_h->add_option("--mcap", b_mcap,
                       "candidate cap for the exact matching number");
  auto* bounds_c = bounds_cmd->add_subcommand("code", "f_r^q(n) bounds");
  bounds_c->add_option("--r", b_r)->required();
  bounds_c->add_option("--n", b_n)->required();
  bounds_c->add_option("--q", b_q)->required();
  bounds_c->add_flag("--json", b_json);
  bounds_c->add_option("--mcap", b_mcap);

  // ---- mnum ----
  auto* mnum_cmd =
      app.add_subcommand("mnum", "Erdős matching numbers m(n,s,lambda)");
  int m_n = 0, m_s = 0, m_lambda = 0;
  bool m_exact = false, m_json = false;
  long long m_cap = 30;
  mnum_cmd->add_option("--n", m_n)->required();
  mnum_cmd->add_option("--s", m_s)->required();
  mnum_cmd->add_option("--lambda", m_lambda)->required();
  mnum_cmd->add_flag("--exact", m_exact, "force the brute-force oracle");
  mnum_cmd->add_flag("--json", m_json);
  mnum_cmd->add_option("--cap", m_cap, "brute-force candidate cap");

  // ---- construct ----
  auto* construct_cmd = app.add_subcommand("construct", "build objects");
  std::string out_path;
  std::uint64_t seed = 0;
  int restarts = 8;

  int c_t = 0, c_n = 0, c_q = 0, c_r = 3, c_k = 0, c_tt = 0;
  auto* con_oa = construct_cmd->add_subcommand("oa", "orthogonal array");
  con_oa->add_option("--t", c_t)->required();
  con_oa->add_option("--n", c_n)->required();
  con_oa->add_option("--q", c_q)->required();
  con_oa->add_option("--out", out_path);

  auto* con_code =
      construct_cmd->add_subcommand("code", "focal-free code from an OA");
  con_code->add_option("--r", c_r)->required();
  con_code->add_option("--n", c_n)->required();
  con_code->add_option("--q", c_q)->required();
  con_code->add_option("--out", out_path);

  auto* con_design = construct_cmd->add_subcommand("design", "catalog design");
  con_design->add_option("--n", c_n)->required();
  con_design->add_option("--k", c_k)->required();
  con_design->add_option("--t", c_tt)->required();
  con_design->add_option("--out", out_path);

  auto* con_packing =
      construct_cmd->add_subcommand("packing", "seeded greedy packing");
  con_packing->add_option("--n", c_n)->required();
  con_packing->add_option("--k", c_k)->required();
  con_packing->add_option("--t", c_tt)->required();
  con_packing->add_option("--seed", seed);
  con_packing->add_option("--out", out_path);

  auto* con_family = construct_cmd->add_subcommand(
      "family", "focal-free family via induced packings");
  con_family->add_option("--r", c_r)->required();
  con_family->add_option("--n", c_n)->required();
  con_family->add_option("--k", c_k)->required();
  con_family->add_option("--seed", seed);
  con_family->add_option("--restarts", restarts);
  con_family->add_option("--out", out_path);

  // ---- verify ----
  auto* verify_cmd =
      app.add_subcommand("verify", "decide focal-freeness of a file");
  std::string in_path;
  int v_r = 3;
  bool v_json = false;
  verify_cmd->add_option("--input,-i,input", in_path)->required();
  verify_cmd->add_option("--r", v_r)->required();
  verify_cmd->add_flag("--json", v_json);

  // ---- search ----
  auto* search_cmd = app.add_subcommand("search", "exact extremal search");
  int s_r = 3, s_n = 0, s_k = 0, s_q = 0;
  std::uint64_t s_budget = 2'000'000;
  long long s_cap = 40;
  bool s_json = false, s_seed_construction = true, s_bound_caps = true;
  auto* search_h = search_cmd->add_subcommand("hypergraph", "f_r(n,k)");
  search_h->add_option("--r", s_r)->required();
  search_h->add_option("--n", s_n)->required();
  search_h->add_option("--k", s_k)->required();
  search_h->add_option("--budget", s_budget, "node budget");
  search_h->add_option("--cap", s_cap, "candidate cap on C(n,k)");
  search_h->add_flag("--seed-construction,!--no-seed-construction",
                     s_seed_construction, "start from the best construction");
  search_h->add_flag("--bound-caps,!--no-bound-caps", s_bound_caps,
                     "close early against valid upper bounds");
  search_h->add_option("--seed", seed, "construction seed");
  search_h->add_flag("--json", s_json);
  auto* search_c = search_cmd->add_subcommand("code", "f_r^q(n)");
  search_c->add_option("--r", s_r)->required();
  search_c->add_option("--n", s_n)->required();
  search_c->add_option("--q", s_q)->required();
  search_c->add_option("--budget", s_budget);
  search_c->add_option("--cap", s_cap, "cap on q^n");
  search_c->add_flag("--seed-construction,!--no-seed-construction",
                     s_seed_construction);
  search_c->add_flag("--bound-caps,!--no-bound-caps", s_bound_caps);
  search_c->add_option("--seed", seed);
  search_c->add_flag("--json", s_json);

  // ---- table ----
  auto* table_cmd = app.add_subcommand("table", "parameter sweeps as CSV");
  int t_r = 3, t_k = 0, t_n = 0, from = 0, to = -1;
  std::string table_out;
  auto* table_h = table_cmd->add_subcommand("hypergraph", "sweep n");
  table_h->add_option("--r", t_r)->required();
  table_h->add_option("--k", t_k)->required();
  table_h->add_option("--n-from", from)->required();
  table_h->add_option("--n-to", to)->required();
  table_h->add_option("--out", table_out);
  auto* table_c = table_cmd->add_subcommand("code", "sweep q");
  table_c->add_option("--r", t_r)->required();
  table_c->add_option("--n", t_n)->required();
  table_c->add_option("--q-from", from)->required();
  table_c->add_option("--q-to", to)->required();
  table_c->add_option("--out", table_out);

  // ---- repro ----
  auto* repro_cmd =
      app.add_subcommand("repro", "run the acceptance criteria end to end");
  std::string suite;
  std::string repro_manifest;
  repro_cmd->add_option("suite", suite, "acceptance | quick")
      ->required()
      ->check(CLI::IsMember({"acceptance", "quick"}));
  repro_cmd->add_option("--manifest", repro_manifest,
                        "write the summary JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    // bounds
    if (bounds_h->parsed() || bounds_c->parsed()) {
      const focal::MatchingOptions mopt{BigInt(b_mcap)};
      auto rep = bounds_h->parsed()
                     ? focal::hypergraph_bounds(b_r, b_n, b_k, mopt)
                     : focal::code_bounds(b_r, b_n, b_q, mopt);
      print_bound_report(rep, b_json);
      return 0;
    }

    // mnum
    if (mnum_cmd->parsed()) {
      const focal::MatchingOptions mopt{BigInt(m_cap)};
      auto res = focal::m_resolve(m_n, m_s, m_lambda, mopt);
      if (m_exact && !res.exact_value)
        throw std::invalid_argument(
            "mnum --exact: candidate cap exceeded; raise --cap");
      if (m_json) {
        std::cout << focal::matching_json(res).dump(2) << "\n";
      } else {
        std::cout << "m(" << m_n << "," << m_s << "," << m_lambda
                  << ") = " << res.value().str() << " ["
                  << focal::regime_name(res.regime) << "]"
                  << (res.conjectural ? " (conjectural)" : "")
                  << "  franklBound=" << res.frankl.str()
                  << (res.hypothesis_holds ? "" : "  [n < s*lambda]") << "\n";
      }
      return 0;
    }

    // construct oa
    if (con_oa->parsed()) {
      Timer timer;
      auto oa = focal::oa_build(c_t, c_n, c_q);
      focal::QaryCode cols(oa.n, oa.q, oa.columns);
      if (out_path.empty()) {
        focal::write_code(std::cout, cols);
      } else {
        focal::write_code_file(out_path, cols);
        Json params{{"t", c_t}, {"n", c_n}, {"q", c_q}};
        write_manifest(out_path, params, focal::oa_certificate_json(oa.cert),
                       timer.seconds());
      }
      std::cerr << "OA(" << c_t << "," << c_n << "," << c_q << ") with "
                << oa.columns.size() << " columns; certificate "
                << (oa.cert.strength_full ? "full" : "sampled") << "\n";
      return 0;
    }

    // construct code
    if (con_code->parsed()) {
      Timer timer;
      auto code = focal::focal_free_code_build(c_r, c_n, c_q);
      const int d = focal::min_distance(code);
      if (out_path.empty()) {
        focal::write_code(std::cout, code);
      } else {
        focal::write_code_file(out_path, code);
        Json params{{"r", c_r}, {"n", c_n}, {"q", c_q}};
        Json verification{{"words", code.size()},
                          {"minDistance", d},
                          {"focalFree", true}};
        write_manifest(out_path, params, verification, timer.seconds());
      }
      std::cerr << "focal-free code with " << code.size()
                << " words, distance " << d << "\n";
      return 0;
    }

    // construct design
    if (con_design->parsed()) {
      Timer timer;
      auto d = focal::design_small(c_n, c_k, c_tt);
      if (!d) {
        std::cerr << "no (" << c_n << "," << c_k << "," << c_tt
                  << ")-design in the catalog\n";
        return 1;
      }
      if (out_path.empty()) {
        focal::write_family(std::cout, *d);
      } else {
        focal::write_family_file(out_path, *d);
        Json params{{"n", c_n}, {"k", c_k}, {"t", c_tt}};
        Json verification{{"blocks", d->size()}, {"exactCover", true}};
        write_manifest(out_path, params, verification, timer.seconds());
      }
      std::cerr << "design with " << d->size() << " blocks\n";
      return 0;
    }

    // construct packing
    if (con_packing->parsed()) {
      Timer timer;
      auto p = focal::greedy_packing(c_n, c_k, c_tt, seed);
      if (out_path.empty()) {
        focal::write_family(std::cout, p);
      } else {
        focal::write_family_file(out_path, p);
        Json params{{"n", c_n}, {"k", c_k}, {"t", c_tt}, {"seed", seed}};
        Json verification{{"edges", p.size()}, {"pairwiseBelowT", true}};
        write_manifest(out_path, params, verification, timer.seconds());
      }
      std::cerr << "packing with " << p.size() << " edges\n";
      return 0;
    }

    // construct family
    if (con_family->parsed()) {
      Timer timer;
      auto packing =
          focal::best_family_packing(c_r, c_n, c_k, seed, restarts, threads);
      auto fam = focal::family_of_packing(packing, c_n, c_k);
      const bool focal_free = !focal::find_focal(fam, c_r).has_value();
      if (!focal_free)
        throw std::logic_error("construct family: output not focal-free");
      if (out_path.empty()) {
        focal::write_family(std::cout, fam);
      } else {
        focal::write_family_file(out_path, fam);
        Json params{{"r", c_r},
                    {"n", c_n},
                    {"k", c_k},
                    {"seed", seed},
                    {"restarts", restarts}};
        Json verification{{"edges", fam.size()},
                          {"focalFree", true},
                          {"densityVsTarget", packing.density()}};
        write_manifest(out_path, params, verification, timer.seconds());
      }
      std::cerr << "focal-free family with " << fam.size()
                << " edges (density " << packing.density() << " of the "
                << "asymptotic target)\n";
      return 0;
    }

    // verify
    if (verify_cmd->parsed()) {
      std::ifstream in(in_path);
      if (!in) {
        std::cerr << "cannot open " << in_path << "\n";
        return 2;
      }
      std::string first;
      std::getline(in, first);
      in.seekg(0);
      std::optional<focal::FocalWitness> witness;
      if (first.rfind("#family", 0) == 0) {
        auto fam = focal::read_family(in);
        witness = focal::find_focal(fam, v_r);
      } else if (first.rfind("#code", 0) == 0) {
        auto code = focal::read_code(in);
        witness = focal::find_focal(code, v_r);
      } else {
        std::cerr << "line 1: expected a '#family' or '#code' header\n";
        return 2;
      }
      if (witness) {
        std::cout << focal::witness_json(*witness).dump(2) << "\n";
        return 1;
      }
      if (v_json) {
        Json ok{{"schema", "focal-lab/verify-v1"},
                {"r", v_r},
                {"focalFree", true}};
        std::cout << ok.dump(2) << "\n";
      } else {
        std::cout << "focal-free (r = " << v_r << ")\n";
      }
      return 0;
    }

    // search
    if (search_h->parsed() || search_c->parsed()) {
      focal::SearchOptions opt;
      opt.node_budget = s_budget;
      opt.seed_with_construction = s_seed_construction;
      opt.use_upper_bound_caps = s_bound_caps;
      opt.construction_seed = seed;
      if (search_h->parsed()) {
        opt.candidate_cap = BigInt(s_cap);
        auto res = focal::exact_f(s_r, s_n, s_k, opt);
        if (s_json) {
          std::cout << focal::search_json(res).dump(2) << "\n";
        } else {
          std::cout << "f_" << s_r << "(" << s_n << "," << s_k
                    << ") = " << res.optimum << " [" << proof_str(res.proof)
                    << ", nodes " << res.nodes_explored << "]\n";
        }
      } else {
        opt.word_cap = BigInt(s_cap) > (BigInt(1) << 20) ? BigInt(s_cap)
                                                         : (BigInt(1) << 20);
        auto res = focal::exact_f_code(s_r, s_n, s_q, opt);
        if (s_json) {
          std::cout << focal::search_json(res).dump(2) << "\n";
        } else {
          std::cout << "f_" << s_r << "^" << s_q << "(" << s_n
                    << ") = " << res.optimum << " [" << proof_str(res.proof)
                    << ", nodes " << res.nodes_explored << "]\n";
        }
      }
      return 0;
    }

    // table
    if (table_h->parsed() || table_c->parsed()) {
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!table_out.empty()) {
        file.open(table_out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + table_out);
        os = &file;
      }
      const bool code_side = table_c->parsed();
      const std::vector<std::string> names =
          code_side ? std::vector<std::string>{"ahCodeUpper", "thm35Upper",
                                               "thm16Exact",
                                               "ahCodeLowerPrimePower",
                                               "thm33Upper", "remark3Upper",
                                               "limitDensity"}
                    : std::vector<std::string>{"alonUpper", "cheapLowerAsym",
                                               "thm22Upper", "remark23Upper",
                                               "limitDensity"};
      std::vector<std::string> header{"side", "r",
                                      code_side ? "n" : "k",
                                      code_side ? "q" : "n",
                                      "t",
                                      "lambda",
                                      "m",
                                      "mRegime",
                                      "mConjectural"};
      for (const auto& nam : names) {
        header.push_back(nam);
        header.push_back(nam + "Floor");
        header.push_back(nam + "Valid");
      }
      header.insert(header.end(), {"construction", "constructionSource",
                                   "exact", "exactProof"});
      write_csv_row(*os, header);

      for (int x = from; x <= to; ++x) {
        focal::BoundReport rep =
            code_side ? focal::code_bounds(t_r, t_n, x)
                      : focal::hypergraph_bounds(t_r, x, t_k);
        std::vector<std::string> row{code_side ? "code" : "hypergraph",
                                     std::to_string(t_r),
                                     std::to_string(code_side ? t_n : t_k),
                                     std::to_string(x),
                                     std::to_string(rep.t),
                                     std::to_string(rep.lambda),
                                     rep.m.value().str(),
                                     focal::regime_name(rep.m.regime),
                                     rep.m.conjectural ? "true" : "false"};
        for (const auto& nam : names) {
          const auto* v = rep.find(nam);
          if (!v) {
            row.insert(row.end(), {"", "", ""});
            continue;
          }
          row.push_back(focal::rat_decimal(v->value));
          row.push_back(focal::rat_floor(v->value).str());
          row.push_back(v->valid ? "true" : "false");
        }
        // construction + exact value when cheap enough
        std::optional<BuiltObject> built =
            code_side ? build_code_object(t_r, t_n, x, 0)
                      : build_hypergraph_object(t_r, x, t_k, 0);
        row.push_back(built ? std::to_string(built->size) : "");
        row.push_back(built ? built->source : "");
        std::string exact, proof;
        if (!code_side && focal::binom(x, t_k) <= 40) {
          auto res = focal::exact_f(t_r, x, t_k);
          proof = proof_str(res.proof);
          if (res.proof != focal::Maximality::Timeout)
            exact = std::to_string(res.optimum);
        } else if (code_side) {
          BigInt space = 1;
          for (int i = 0; i < t_n; ++i) space *= x;
          if (space <= 4096) {
            auto res = focal::exact_f_code(t_r, t_n, x);
            proof = proof_str(res.proof);
            if (res.proof != focal::Maximality::Timeout)
              exact = std::to_string(res.optimum);
          }
        }
        row.push_back(exact);
        row.push_back(proof);
        write_csv_row(*os, row);
      }
      return 0;
    }

    // repro
    if (repro_cmd->parsed()) {
      auto results = focal::run_acceptance_suite(suite == "quick", &std::cout);
      if (!repro_manifest.empty()) {
        Json m;
        m["schema"] = "focal-lab/repro-v1";
        m["command"] = g_command_line;
        m["version"] = kVersion;
        m["suite"] = suite;
        Json arr = Json::array();
        for (const auto& r : results) {
          arr.push_back(Json{{"id", r.id},
                             {"name", r.name},
                             {"passed", r.passed},
                             {"detail", r.detail},
                             {"seconds", r.seconds}});
        }
        m["criteria"] = arr;
        m["allPassed"] = focal::all_passed(results);
        std::ofstream out(repro_manifest, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write manifest");
        out << m.dump(2) << "\n";
      }
      return focal::all_passed(results) ? 0 : 1;
    }

    std::cerr << "no subcommand\n";
    return 2;
  } catch (const focal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
