#include "ybe/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ybe/brace.hpp"
#include "ybe/canonical.hpp"
#include "ybe/census.hpp"
#include "ybe/error.hpp"
#include "ybe/families.hpp"
#include "ybe/io.hpp"
#include "ybe/quotients.hpp"

namespace ybe::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string slurp(Context& c, const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << c.in.rdbuf();
    return ss.str();
  }
  return read_text_file(path);
}

Json load_json(Context& c, const std::string& path) { return parse_json(slurp(c, path)); }

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FormatError("expected a comma-separated integer list, got \"" + text + "\"");
    }
  }
  return out;
}

Json report_json(const SolutionReport& r) {
  Json j;
  j["valid"] = r.ok();
  j["nondegenerate"] = r.nondegenerate;
  j["involutive"] = r.involutive;
  j["ybe"] = r.ybe;
  j["failed_check"] = r.failed_check.empty() ? Json(nullptr) : Json(r.failed_check);
  j["witness"] = r.failing_witness ? Json(*r.failing_witness) : Json(nullptr);
  return j;
}

Json one_based(const Partition& p) {
  Json j = Json::array();
  for (const auto& block : p) {
    Json b = Json::array();
    for (point_t x : block) b.push_back(x + 1);
    j.push_back(std::move(b));
  }
  return j;
}

void print(Context& c, const Json& j) { c.out << j.dump() << '\n'; }

// Reads a solution file, reporting axiom failures with exit 3.
struct Loaded {
  std::optional<Solution> solution;
  SolutionReport report;
};

Loaded load_solution(Context& c, const std::string& path, bool cycle_set = false) {
  Json j = load_json(c, path);
  Loaded l;
  if (cycle_set) {
    Table dot = cycle_set_from_json(j);
    try {
      l.solution = from_cycle_set(dot);
      l.report = validate(l.solution->table());
    } catch (const AxiomError& e) {
      l.report.failed_check = e.what();
      l.report.failing_witness = e.witness();
    }
    return l;
  }
  SolutionInput in = solution_input_from_json(j);
  l.report = validate(in.sigma);
  if (l.report.ok()) l.solution = Solution::from_raw(in.sigma, std::move(in.labels));
  return l;
}

const Solution& require_valid(Context& c, const Loaded& l) {
  if (!l.solution) {
    Json j;
    j["report"] = report_json(l.report);
    print(c, j);
    throw AxiomError("input is not a solution: " + l.report.failed_check);
  }
  return *l.solution;
}

void print_claims(Context& c, const SquareClaims& claims) {
  const auto& h = claims.hypotheses;
  Json j;
  j["hypotheses"] = {{"t_unit", h.t_unit},         {"symmetric", h.symmetric},
                     {"orbit", h.orbit},           {"unit_shift", h.unit_shift},
                     {"distinct_shift", h.distinct_shift}, {"generates", h.generates},
                     {"cond_i", h.cond_i},         {"cond_ii", h.cond_ii},
                     {"non_constant", h.non_constant}, {"n_prime", h.n_prime}};
  j["indecomposable_irretractable"] = claims.indecomposable_irretractable;
  j["simple_guaranteed"] = claims.simple_guaranteed;
  j["reasons"] = claims.reasons;
  c.err << j.dump() << '\n';
}

int cmd_verify(Context& c, const std::string& path, bool cycle_set) {
  Loaded l = load_solution(c, path, cycle_set);
  print(c, report_json(l.report));
  return l.solution ? kOk : kAxiomFailure;
}

int cmd_analyze(Context& c, const std::string& path, bool cycle_set) {
  Loaded l = load_solution(c, path, cycle_set);
  const Solution& s = require_valid(c, l);
  Json j;
  j["report"] = report_json(l.report);
  j["n"] = s.size();
  j["sigma_cycles"] = sigma_cycles(s);
  PermGroup G = permutation_group(s);
  j["group_order"] = G.order();
  const bool indec = is_indecomposable(s);
  j["indecomposable"] = indec;
  j["irretractable"] = is_irretractable(s);
  j["primitive"] = is_primitive(s);
  j["square_free"] = is_square_free(s);
  j["simple"] = s.size() >= 2 && is_simple(s).simple;
  Json blocks = Json::array();
  if (indec)
    for (const auto& p : block_systems(s.sigmas(), s.size())) blocks.push_back(one_based(p));
  j["block_systems"] = std::move(blocks);
  auto mpl = multipermutation_level(s);
  j["multipermutation_level"] = mpl ? Json(*mpl) : Json(nullptr);
  print(c, j);
  return kOk;
}

int cmd_simple(Context& c, const std::string& path) {
  const Loaded l = load_solution(c, path);
  const Solution& s = require_valid(c, l);
  Json j;
  if (s.size() < 2) {
    j["simple"] = false;
    j["reason"] = "a solution of size 1 is not simple";
    print(c, j);
    return kNegative;
  }
  SimplicityVerdict v = is_simple(s);
  j["simple"] = v.simple;
  j["witness"] = v.witness ? congruence_to_json(*v.witness) : Json(nullptr);
  print(c, j);
  return v.simple ? kOk : kNegative;
}

int cmd_iso(Context& c, const std::string& a, const std::string& b) {
  const Loaded la = load_solution(c, a), lb = load_solution(c, b);
  const Solution& sa = require_valid(c, la);
  const Solution& sb = require_valid(c, lb);
  auto w = find_isomorphism(sa, sb);
  Json j;
  j["isomorphic"] = w.has_value();
  j["witness"] = w ? Json(*w) : Json(nullptr);
  print(c, j);
  return w ? kOk : kNegative;
}

int cmd_retract(Context& c, const std::string& path) {
  const Loaded l = load_solution(c, path);
  Retraction r = retract(require_valid(c, l));
  Json j;
  j["solution"] = solution_to_json(r.solution);
  j["class_map"] = r.class_map;
  print(c, j);
  return kOk;
}

int cmd_cover(Context& c, const std::string& path, point_t x, std::size_t cap) {
  const Loaded l = load_solution(c, path);
  const Solution& s = require_valid(c, l);
  if (x >= s.size()) throw FormatError("--x out of range");
  Covering cov = covering_solution(s, x, cap);
  PermGroup pi = fundamental_group(s, x, cap);
  Json j;
  j["group_order"] = cov.group.order();
  j["fundamental_group_order"] = pi.order();
  j["projection"] = cov.projection;
  j["solution"] = solution_to_json(cov.solution);
  print(c, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Set-theoretic solutions of the Yang-Baxter equation and left braces"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized internals (the defaults use none)");

  std::string file, file2;
  bool cycle_set = false;
  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "check the solution axioms");
  verify->add_option("file", file, "solution JSON, or - for stdin")->required();
  verify->add_flag("--cycle-set", cycle_set, "input is a cycle set {\"n\",\"dot\"}");
  verify->callback([&] { action = [&] { return cmd_verify(ctx, file, cycle_set); }; });

  auto* analyze = app.add_subcommand("analyze", "validate and evaluate every predicate");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--cycle-set", cycle_set);
  analyze->callback([&] { action = [&] { return cmd_analyze(ctx, file, cycle_set); }; });

  auto* construct = app.add_subcommand("construct", "build a solution from a family or fixture");
  construct->require_subcommand(1);
  std::int64_t n = 0, m = 0, t = 1, p = 0;
  std::string jlist, cycles;
  auto* sq = construct->add_subcommand("square", "sigma_(i,j)(k,l) = (tk+j, t(l - j_{tk+j-i}))");
  sq->add_option("--n", n)->required();
  sq->add_option("--t", t);
  sq->add_option("--j", jlist, "comma-separated j_0,...,j_{n-1}")->required();
  sq->callback([&] {
    action = [&] {
      SquareResult r = square_solution({n, t, parse_int_list(jlist)});
      print(ctx, solution_to_json(r.solution));
      print_claims(ctx, r.claims);
      return kOk;
    };
  });
  auto* rect = construct->add_subcommand("rect", "the family on Z/(mn) x nZ/(mn)");
  rect->add_option("--m", m)->required();
  rect->add_option("--n", n)->required();
  rect->callback([&] {
    action = [&] {
      print(ctx, solution_to_json(rectangular_solution(m, n)));
      return kOk;
    };
  });
  auto* p2 = construct->add_subcommand("p2", "order p^2 family with t of odd order");
  p2->add_option("--p", p)->required();
  p2->add_option("--t", t);
  p2->add_option("--j", jlist)->required();
  p2->callback([&] {
    action = [&] {
      print(ctx, solution_to_json(p2_solution(p, t, parse_int_list(jlist))));
      return kOk;
    };
  });
  auto* perm = construct->add_subcommand("perm", "every sigma_x equal to one permutation");
  perm->add_option("--n", n)->required();
  perm->add_option("--cycles", cycles, "1-based cycles, e.g. (1,2,3)")->required();
  perm->callback([&] {
    action = [&] {
      if (n < 1) throw FormatError("--n must be positive");
      print(ctx, solution_to_json(permutation_solution(Perm::parse(cycles, static_cast<std::size_t>(n)))));
      return kOk;
    };
  });
  std::string fixture_name;
  auto* fix = construct->add_subcommand("fixture", "a named fixture");
  fix->add_option("name", fixture_name)->required()->check(CLI::IsMember(fixture_names()));
  fix->callback([&] {
    action = [&] {
      print(ctx, solution_to_json(fixture(fixture_name)));
      return kOk;
    };
  });

  auto* simple = app.add_subcommand("simple-check", "exit 0 if simple, 1 with a congruence witness otherwise");
  simple->add_option("file", file)->required();
  simple->callback([&] { action = [&] { return cmd_simple(ctx, file); }; });

  auto* iso = app.add_subcommand("iso", "exit 0 with a witness if isomorphic, 1 otherwise");
  iso->add_option("a", file)->required();
  iso->add_option("b", file2)->required();
  iso->callback([&] { action = [&] { return cmd_iso(ctx, file, file2); }; });

  auto* ret = app.add_subcommand("retract", "quotient by sigma_x = sigma_y");
  ret->add_option("file", file)->required();
  ret->callback([&] { action = [&] { return cmd_retract(ctx, file); }; });

  point_t base = 0;
  std::size_t cap = kDefaultGroupCap;
  auto* cover = app.add_subcommand("cover", "covering solution over the permutation group");
  cover->add_option("file", file)->required();
  cover->add_option("--x", base, "0-based base point");
  cover->add_option("--cap", cap, "group order cap");
  cover->callback([&] { action = [&] { return cmd_cover(ctx, file, base, cap); }; });

  auto* brace = app.add_subcommand("brace", "left brace constructions");
  brace->require_subcommand(1);
  bool restrict = false;
  auto* asym = brace->add_subcommand("asym", "asymmetric product of order n^(n+1)");
  asym->add_option("--n", n)->required();
  asym->add_option("--j", jlist)->required();
  asym->add_flag("--restrict", restrict, "emit the solution on x_ij = (e_i, j) instead");
  asym->callback([&] {
    action = [&] {
      auto j = parse_int_list(jlist);
      if (restrict) {
        print(ctx, solution_to_json(AsymmetricForm(n, j).restricted_solution()));
      } else {
        print(ctx, brace_to_json(asymmetric_product(n, j).brace));
      }
      return kOk;
    };
  });
  std::size_t brace_cap = kDefaultBraceCap;
  auto* of_sol = brace->add_subcommand("of-solution", "brace on the permutation group of a solution");
  of_sol->add_option("file", file)->required();
  of_sol->add_option("--cap", brace_cap, "group order cap");
  of_sol->callback([&] {
    action = [&] {
      const Loaded l = load_solution(ctx, file);
      print(ctx, brace_to_json(permutation_brace(require_valid(ctx, l), brace_cap).brace));
      return kOk;
    };
  });
  auto* check = brace->add_subcommand("check", "validate brace tables");
  check->add_option("file", file)->required();
  check->callback([&] {
    action = [&] {
      auto [add, mul] = brace_tables_from_json(load_json(ctx, file));
      BraceCheck r = validate_brace(add, mul);
      Json j;
      j["valid"] = r.ok();
      j["violation"] = r.ok() ? Json(nullptr) : Json(r.violation);
      j["witness"] = r.ok() ? Json(nullptr) : Json(r.witness);
      if (r.ok()) {
        j["socle"] = socle(*r.brace);
        j["star_ideal"] = star_ideal(*r.brace);
      }
      print(ctx, j);
      return r.ok() ? kOk : kAxiomFailure;
    };
  });

  CensusSpec spec;
  std::string require, out_path;
  std::size_t max_tasks = 0;
  auto* census = app.add_subcommand("census", "isomorph-free enumeration, one JSON record per line");
  census->add_option("--n", spec.n)->required();
  census->add_option("--require", require, "indecomposable,irretractable,square_free,simple,block_form(p)");
  census->add_option("--jobs", spec.jobs);
  census->add_option("--out", out_path, "JSONL output file (default stdout)");
  census->add_option("--checkpoint", spec.checkpoint_path, "resumable state file");
  census->add_option("--split-depth", spec.split_depth, "rows fixed per task");
  census->add_option("--max-tasks", max_tasks, "stop after this many tasks");
  census->callback([&] {
    action = [&] {
      apply_constraints(spec, require);
      if (max_tasks > 0) spec.max_tasks = max_tasks;
      CensusResult r = enumerate(spec);
      std::ofstream f;
      if (!out_path.empty()) {
        f.open(out_path, std::ios::trunc);
        if (!f) throw FormatError("cannot write " + out_path);
      }
      std::ostream& o = out_path.empty() ? ctx.out : f;
      for (const auto& rec : r.records) o << record_to_json(rec).dump() << '\n';
      ctx.err << "classes: " << r.records.size() << ", tasks: " << r.tasks_done << "/" << r.tasks_total
              << (r.complete ? "" : " (partial; resume with the same --checkpoint)") << '\n';
      return kOk;
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  (void)seed;
  try {
    return action ? action() : kInputError;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    return kInputError;
  } catch (const CensusCheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
    return kInputError;
  } catch (const AxiomError& e) {
    err << "axiom failure: " << e.what();
    if (!e.witness().empty()) {
      err << " at";
      for (auto w : e.witness()) err << ' ' << w;
    }
    err << '\n';
    return kAxiomFailure;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace ybe::cli
