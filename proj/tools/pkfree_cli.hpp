#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "../vendor/CLI11.hpp"
#include "../vendor/json.hpp"
#include "pkfree/pkfree.hpp"

namespace pkfree::cli {

enum Exit : int {
  ok = 0,
  failed = 1,
  malformed = 2,
  witness = 3,
  budget = 4,
  impossible = 5,
};

using Json = nlohmann::ordered_json;

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

inline std::string join(const std::vector<Vertex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string join(const VertexSet& s) { return join(s.members()); }

struct Input {
  std::string bytes;
  Tournament tournament;
};

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw MalformedInput("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline Input read_input(const std::string& path, std::istream& in) {
  Input r{slurp(path, in), Tournament::transitive(0)};
  r.tournament = parse_tournament(r.bytes);
  return r;
}

inline Json trace_json(const Trace& t) {
  return Json{{"base_exits", t.base_exits},
              {"trivial_exits", t.trivial_exits},
              {"recursion_pairs", t.recursion_pairs},
              {"dense_pairs", t.dense_pairs.size()},
              {"degenerate_fallbacks", t.degenerate_fallbacks},
              {"unexpected_fallbacks", t.unexpected_fallbacks},
              {"witnesses", t.witnesses},
              {"smoothing_runs", t.smoothing_runs},
              {"smoothing_removed", t.smoothing_removed},
              {"strict_impossible", t.strict_impossible}};
}

// Flat key/value rendering of a report; nested objects become "a.b".
inline void print_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix + it.key();
    if (it->is_object()) {
      print_text(*it, out, key + ".");
    } else if (it->is_array()) {
      if (!it->empty() && (*it)[0].is_array()) {
        for (const auto& row : *it) {
          std::vector<Vertex> v = row.get<std::vector<Vertex>>();
          out << key << ": " << join(v) << '\n';
        }
      } else {
        out << key << ": " << join(it->get<std::vector<Vertex>>()) << '\n';
      }
    } else if (it->is_string()) {
      out << key << ": " << it->get<std::string>() << '\n';
    } else {
      out << key << ": " << it->dump() << '\n';
    }
  }
}

inline void emit(const Json& j, bool json, std::ostream& out) {
  if (json) out << j.dump() << '\n';
  else print_text(j, out);
}

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct RunOptions {
  std::size_t k = 0;
  std::string mode = "strict";
  std::string lambda = "1/4";
  bool json = false;
  std::string file;
};

inline ConstantSchedule schedule_of(const RunOptions& o) {
  Mode mode = o.mode == "relaxed" ? Mode::relaxed : Mode::strict;
  return schedule_for(o.k, mode, parse_rational(o.lambda));
}

inline Json report_head(const std::string& command, const Input& input, const RunOptions& o,
                        const ConstantSchedule& s) {
  Json j;
  j["command"] = command;
  j["digest"] = "sha256:" + sha256_hex(input.bytes);
  j["n"] = input.tournament.size();
  j["k"] = s.k_user;
  j["k_effective"] = s.k;
  j["mode"] = o.mode;
  j["lambda"] = to_string(s.lambda);
  return j;
}

inline int find_trans_command(const RunOptions& o, std::istream& in, std::ostream& out) {
  ConstantSchedule s = schedule_of(o);
  Input input = read_input(o.file, in);
  auto start = std::chrono::steady_clock::now();
  TransResult r = find_trans(input.tournament, s);
  double elapsed = ms_since(start);
  Json j = report_head("find-trans", input, o, s);
  int code = Exit::ok;
  if (r.has_witness()) {
    bool verified = check_pk_witness(input.tournament, *r.witness);
    j["result"] = "witness";
    j["witness"] = *r.witness;
    j["verified"] = verified;
    code = verified ? Exit::witness : Exit::failed;
  } else {
    bool verified = verify_trans_result(input.tournament, r);
    j["result"] = "transitive";
    j["vertices"] = r.vertices.members();
    j["size"] = r.vertices.size();
    j["verified"] = verified;
    code = verified ? Exit::ok : Exit::failed;
  }
  j["time_ms"] = elapsed;
  j["trace"] = trace_json(r.trace);
  emit(j, o.json, out);
  if (code == Exit::ok && s.strict() && r.trace.strict_impossible > 0) code = Exit::impossible;
  return code;
}

inline int color_command(const RunOptions& o, std::istream& in, std::ostream& out) {
  ConstantSchedule s = schedule_of(o);
  Input input = read_input(o.file, in);
  Trace trace;
  Json j = report_head("color", input, o, s);
  auto start = std::chrono::steady_clock::now();
  try {
    Coloring c = acyclic_coloring(input.tournament, s, &trace);
    double elapsed = ms_since(start);
    bool verified = verify_coloring(input.tournament, c);
    j["result"] = "coloring";
    j["classes"] = c.count();
    Json classes = Json::array();
    for (const auto& cls : c.classes) classes.push_back(cls.members());
    j["class"] = classes;
    j["verified"] = verified;
    j["time_ms"] = elapsed;
    j["trace"] = trace_json(trace);
    emit(j, o.json, out);
    if (!verified) return Exit::failed;
    return s.strict() && trace.strict_impossible > 0 ? Exit::impossible : Exit::ok;
  } catch (const PatternFound& e) {
    bool verified = check_pk_witness(input.tournament, e.witness());
    j["result"] = "witness";
    j["witness"] = e.witness();
    j["verified"] = verified;
    j["time_ms"] = ms_since(start);
    j["trace"] = trace_json(trace);
    emit(j, o.json, out);
    return verified ? Exit::witness : Exit::failed;
  }
}

struct BenchRow {
  std::size_t n;
  std::uint64_t seed;
  double time_ms;
  std::size_t out_size;
  std::size_t classes;
  int exit;
};

// One CSV row per (n, seed). Each cell repeats its run until min_ms of work
// has accumulated and reports the mean.
inline int bench_command(const RunOptions& o, const std::vector<std::size_t>& sizes, std::size_t seeds,
                         bool color, double min_ms, std::ostream& out) {
  ConstantSchedule s = schedule_of(o);
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes)
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
      Tournament t = random_tournament(n, seed);
      BenchRow row{n, seed, 0, 0, 0, Exit::ok};
      std::size_t reps = 0;
      double total = 0;
      do {
        auto start = std::chrono::steady_clock::now();
        if (color) {
          try {
            Trace trace;
            Coloring c = acyclic_coloring(t, s, &trace);
            row.classes = c.count();
            row.out_size = c.count() ? c.classes.front().size() : 0;
            row.exit = !verify_coloring(t, c) ? Exit::failed
                       : s.strict() && trace.strict_impossible ? Exit::impossible
                                                               : Exit::ok;
          } catch (const PatternFound& e) {
            row.out_size = e.witness().size();
            row.exit = Exit::witness;
          }
        } else {
          TransResult r = find_trans(t, s);
          if (r.has_witness()) {
            row.out_size = r.witness->size();
            row.exit = check_pk_witness(t, *r.witness) ? Exit::witness : Exit::failed;
          } else {
            row.out_size = r.vertices.size();
            row.exit = !verify_trans_result(t, r)                       ? Exit::failed
                       : s.strict() && r.trace.strict_impossible > 0 ? Exit::impossible
                                                                     : Exit::ok;
          }
        }
        total += ms_since(start);
        ++reps;
      } while (total < min_ms);
      row.time_ms = total / static_cast<double>(reps);
      rows.push_back(row);
    }
  std::sort(rows.begin(), rows.end(),
            [](const BenchRow& a, const BenchRow& b) { return std::tie(a.n, a.seed) < std::tie(b.n, b.seed); });
  out << "n,seed,mode,time_ms,out_size,classes,exit\n";
  int worst = Exit::ok;
  for (const auto& r : rows) {
    out << r.n << ',' << r.seed << ',' << o.mode << ',' << std::fixed << std::setprecision(4) << r.time_ms << ','
        << r.out_size << ',' << r.classes << ',' << r.exit << '\n';
    if (r.exit == Exit::failed) worst = Exit::failed;
  }
  return worst;
}

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (Vertex v : parse_vertex_list(text)) out.push_back(v);
  if (out.empty()) throw MalformedInput("--sizes is empty");
  return out;
}

inline Tournament read_tournament_file(const std::string& path) {
  std::istringstream none;
  return parse_tournament(slurp(path, none));
}

inline int run_impl(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"P_k-free tournament toolkit"};
  app.require_subcommand(1);

  RunOptions ro;
  std::size_t n = 0, depth = 0, tr_max = 0, seeds = 1;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = OracleBudget{}.max_nodes_pk_search;
  std::string base_file, factor_file, set_list, sets_file, c_text = "0", sizes_text;
  bool bench_color = false;
  double min_ms = 0;

  auto add_run = [&](CLI::App* sub, bool file) {
    sub->add_option("--k", ro.k, "pattern size k (>= 3)")->required();
    sub->add_option("--mode", ro.mode, "strict or relaxed")->check(CLI::IsMember({"strict", "relaxed"}));
    sub->add_option("--lambda", ro.lambda, "relaxed-mode lambda as p/q");
    sub->add_flag("--json", ro.json, "one JSON object per line");
    if (file) sub->add_option("file", ro.file, "tournament file (default stdin)");
  };

  auto* gen = app.add_subcommand("gen", "write a tournament to stdout");
  gen->require_subcommand(1);
  auto* gen_path = gen->add_subcommand("path", "path tournament P_k");
  gen_path->add_option("--k", ro.k)->required();
  auto* gen_random = gen->add_subcommand("random", "uniform random tournament");
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--seed", seed);
  auto* gen_product = gen->add_subcommand("product", "substitution product BASE x FACTOR");
  gen_product->add_option("--base", base_file)->required();
  gen_product->add_option("--factor", factor_file)->required();
  auto* gen_family = gen->add_subcommand("family", "F_depth over a base (file or P_k)");
  auto* fam_base = gen_family->add_option("--base", base_file);
  gen_family->add_option("--k", ro.k)->excludes(fam_base);
  gen_family->add_option("--depth", depth)->required();
  auto* gen_search = gen->add_subcommand("base-search", "random base with tr <= tr-max and no P_k");
  gen_search->add_option("--k", ro.k)->required();
  gen_search->add_option("--n", n)->required();
  gen_search->add_option("--tr-max", tr_max)->required();
  gen_search->add_option("--seeds", seeds);
  gen_search->add_option("--seed", seed, "first seed");
  gen_search->add_option("--budget", node_budget, "P_k search node budget");

  auto* ft = app.add_subcommand("find-trans", "extract a transitive subset");
  add_run(ft, true);
  auto* color = app.add_subcommand("color", "acyclic colouring by repeated extraction");
  add_run(color, true);

  auto* check = app.add_subcommand("check", "verify a property; exit 0 or 1");
  check->require_subcommand(1);
  auto* ck_trans = check->add_subcommand("transitive");
  ck_trans->add_option("--set", set_list)->required();
  ck_trans->add_option("file", ro.file);
  auto* ck_pk = check->add_subcommand("pk-free");
  ck_pk->add_option("--k", ro.k)->required();
  ck_pk->add_option("--budget", node_budget);
  ck_pk->add_option("file", ro.file);
  auto* ck_alpha = check->add_subcommand("alpha");
  ck_alpha->add_option("--lambda", ro.lambda)->required();
  ck_alpha->add_option("--c", c_text)->required();
  ck_alpha->add_option("--sets", sets_file)->required();
  ck_alpha->add_option("file", ro.file);
  auto* ck_smooth = check->add_subcommand("smooth");
  ck_smooth->add_option("--lambda", ro.lambda)->required();
  ck_smooth->add_option("--sets", sets_file)->required();
  ck_smooth->add_option("file", ro.file);

  auto* oracle = app.add_subcommand("oracle", "exact answers for small tournaments");
  oracle->require_subcommand(1);
  auto* or_trans = oracle->add_subcommand("max-trans");
  auto* or_dich = oracle->add_subcommand("dichromatic");
  auto* or_pk = oracle->add_subcommand("find-pk");
  or_pk->add_option("--k", ro.k)->required();
  or_pk->add_option("--budget", node_budget);
  auto* or_homog = oracle->add_subcommand("homog");
  for (auto* sub : {or_trans, or_dich, or_pk, or_homog}) sub->add_option("file", ro.file);

  auto* bench = app.add_subcommand("bench", "CSV timings on random tournaments");
  bench->add_option("--k", ro.k)->required();
  bench->add_option("--sizes", sizes_text)->required();
  bench->add_option("--seeds", seeds);
  bench->add_option("--mode", ro.mode)->check(CLI::IsMember({"strict", "relaxed"}));
  bench->add_option("--lambda", ro.lambda);
  bench->add_flag("--color", bench_color, "time acyclic_coloring instead of find_trans");
  bench->add_option("--min-ms", min_ms, "repeat each cell until this much time has passed");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return Exit::malformed;
  }

  OracleBudget budget;
  budget.max_nodes_pk_search = node_budget;

  if (gen->parsed()) {
    if (gen_path->parsed()) {
      if (ro.k < 1) throw PreconditionError("--k must be positive");
      out << serialize_tournament(path_tournament(ro.k));
    } else if (gen_random->parsed()) {
      out << serialize_tournament(random_tournament(n, seed));
    } else if (gen_product->parsed()) {
      out << serialize_tournament(substitution_product(read_tournament_file(base_file), read_tournament_file(factor_file)));
    } else if (gen_family->parsed()) {
      if (base_file.empty() && ro.k == 0) throw PreconditionError("family needs --base or --k");
      FamilySpec spec{base_file.empty() ? path_tournament(ro.k) : read_tournament_file(base_file), depth};
      out << serialize_tournament(family(spec));
    } else {
      BaseSearch r = search_base(ro.k, n, tr_max, seeds, seed, budget);
      if (!r.base) {
        err << "no base found in " << r.attempts << " seeds\n";
        return Exit::failed;
      }
      err << "seed " << r.seed << ", tr " << r.transitive_size << '\n';
      out << serialize_tournament(*r.base);
    }
    return Exit::ok;
  }

  if (ft->parsed()) return find_trans_command(ro, in, out);
  if (color->parsed()) return color_command(ro, in, out);
  if (bench->parsed()) return bench_command(ro, parse_sizes(sizes_text), seeds, bench_color, min_ms, out);

  Input input = read_input(ro.file, in);
  const Tournament& t = input.tournament;

  if (check->parsed()) {
    if (ck_trans->parsed()) {
      VertexSet x(parse_vertex_list(set_list));
      require_members(t, x);
      if (auto cyc = find_cycle3(t, x)) {
        out << "cycle: " << (*cyc)[0] << ',' << (*cyc)[1] << ',' << (*cyc)[2] << '\n';
        return Exit::failed;
      }
      out << "transitive\n";
      return Exit::ok;
    }
    if (ck_pk->parsed()) {
      if (auto w = find_pk_exhaustive(t, ro.k, budget)) {
        out << "witness: " << join(*w) << '\n';
        return Exit::failed;
      }
      out << "pk-free\n";
      return Exit::ok;
    }
    std::istringstream none;
    std::istringstream sets_text(slurp(sets_file, none));
    AlphaSequence theta(t, parse_sets(sets_text));
    Rational lambda = parse_rational(ro.lambda);
    AlphaReport rep = ck_alpha->parsed() ? check_alpha(theta, parse_rational(c_text), lambda) : check_smooth(theta, lambda);
    out << "min_relative_size: " << to_string(rep.min_relative_size) << '\n'
        << "min_pair_density: " << to_string(rep.min_pair_density) << '\n'
        << "worst_vertex_density: " << to_string(rep.worst_vertex_density) << '\n'
        << (rep.passed ? "pass" : "fail") << '\n';
    return rep.passed ? Exit::ok : Exit::failed;
  }

  if (or_trans->parsed()) {
    VertexSet best = max_transitive_exact(t, budget);
    out << best.size() << '\n' << join(best) << '\n';
  } else if (or_dich->parsed()) {
    DichromaticResult r = dichromatic_exact(t, budget);
    out << r.count << '\n';
    for (const auto& cls : r.coloring.classes) out << join(cls) << '\n';
  } else if (or_pk->parsed()) {
    if (auto w = find_pk_exhaustive(t, ro.k, budget)) {
      out << join(*w) << '\n';
      return Exit::witness;
    }
    out << "none\n";
  } else {
    auto sets = homogeneous_sets(t, budget);
    out << sets.size() << '\n';
    for (const auto& s : sets) out << join(s) << '\n';
  }
  return Exit::ok;
}

// Entry point shared by the binary and the tests. stdout gets data, err
// gets diagnostics.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(std::move(args), in, out, err);
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return Exit::malformed;
  } catch (const UnsupportedSize& e) {
    err << "unsupported: " << e.what() << '\n';
    return Exit::malformed;
  } catch (const PreconditionError& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return Exit::malformed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return Exit::budget;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return Exit::impossible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return Exit::failed;
  }
}

}  // namespace pkfree::cli
