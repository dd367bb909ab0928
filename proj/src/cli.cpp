#include "rim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "rim/dp_solver.hpp"
#include "rim/errors.hpp"
#include "rim/gen1d.hpp"
#include "rim/gen2d.hpp"
#include "rim/io.hpp"
#include "rim/model.hpp"
#include "rim/nna.hpp"
#include "rim/oracle.hpp"

namespace rim {
namespace {

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  body(f);
  if (!f) throw InputError("error writing '" + path + "'");
}

// Writes to `path`, or to `out` when the path is empty.
void emit(std::ostream& out, const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
  } else {
    write_file(path, body);
  }
}

void write_dot(std::ostream& os, const DirectedGraph& g) {
  os << "digraph communication {\n";
  for (PointId p = 0; p < g.size(); ++p) os << "  " << p << ";\n";
  for (PointId p = 0; p < g.size(); ++p) {
    for (PointId q : g.out[p]) os << "  " << p << " -> " << q << ";\n";
  }
  os << "}\n";
}

std::string components_line(const std::vector<NnaComponent>& comps) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) ss << ' ';
    ss << '[' << comps[i].lo << ".." << comps[i].hi << "]@" << comps[i].sink;
  }
  return ss.str();
}

GridGraph load_grid(const std::string& path) {
  const auto raw = io::read_grid_file(path);
  std::vector<GridVertex> vs;
  for (auto [x, y] : raw) vs.push_back({x, y});
  return GridGraph::from_vertices(std::move(vs));
}

struct Options {
  // gen
  int family_param = 0;
  std::int64_t loglower_n = 0;
  std::size_t random_n = 0;
  std::int64_t random_max = 1000;
  std::uint64_t random_seed = 0;
  std::string side = "left";
  std::string output;
  std::string witness_out;
  // solve / check
  std::string method;
  std::string instance_path;
  std::string assignment_path;
  std::string dot_path;
  std::optional<std::size_t> cap;
  bool stats = false;
  bool trace = false;
  bool timing = false;
  std::optional<std::uint32_t> at;
  // reduce / ham
  std::string grid_path;
  std::string epsilon = "1/64";
  std::string roles_path;
  std::string points_out;
};

int run_gen_family(const Options& o, std::ostream& out, const FamilyInstance& fi,
                   const std::optional<ReceiverAssignment>& witness) {
  emit(out, o.output, [&](std::ostream& os) { io::write_points(os, fi.instance, fi.block_of); });
  if (!o.witness_out.empty()) {
    if (!witness) throw InputError("this family has no constructive witness");
    write_file(o.witness_out, [&](std::ostream& os) { io::write_assignment(os, *witness); });
  }
  return kExitOk;
}

int run_solve(const Options& o, std::ostream& out) {
  const auto any = io::read_points_file(o.instance_path);
  const auto started = std::chrono::steady_clock::now();
  std::optional<ReceiverAssignment> witness;
  std::uint32_t reported = 0;
  std::vector<std::pair<std::string, std::string>> extra;
  std::vector<std::string> trace_lines;
  const char* value_key = "optimum";

  if (const auto* inst2 = std::get_if<Instance2D>(&any)) {
    if (o.method != "oracle") throw InputError("method '" + o.method + "' needs a 1D instance");
    auto r = brute_force_2d(*inst2, o.cap.value_or(kDefaultOracleCap2D));
    reported = r.optimum;
    witness = std::move(r.witness);
  } else {
    const auto& inst = std::get<Instance1D>(any);
    if (o.method == "oracle") {
      auto r = brute_force_1d(inst, o.cap.value_or(kDefaultOracleCap1D));
      reported = r.optimum;
      witness = std::move(r.witness);
    } else if (o.method == "dp" || o.method == "dp-optsearch") {
      DpStats st;
      auto r = o.method == "dp" ? solve_exact(inst, &st) : solve_opt_search(inst, &st);
      reported = r.optimum;
      witness = std::move(r.witness);
      if (o.stats) {
        extra.emplace_back("subproblems", std::to_string(st.subproblems));
        extra.emplace_back("memo_hits", std::to_string(st.memo_hits));
        extra.emplace_back("child_pairs", std::to_string(st.child_pairs));
        extra.emplace_back("cap", std::to_string(st.cap));
      }
    } else if (o.method == "nna") {
      auto r = nna(inst, o.trace);
      value_key = "value";
      reported = interference(inst, r.assignment);
      witness = std::move(r.assignment);
      extra.emplace_back("rounds", std::to_string(r.rounds));
      for (std::size_t i = 0; i < r.trace.size(); ++i) {
        trace_lines.push_back("round " + std::to_string(i + 1) + ": " + components_line(r.trace[i]));
      }
    } else {
      throw InputError("unknown method '" + o.method + "'");
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;

  // Independent re-check of the witness before anything is printed.
  std::uint32_t recomputed = 0;
  bool valid = false;
  std::visit(
      [&](const auto& inst) {
        valid = is_valid(inst, *witness);
        recomputed = interference(inst, *witness);
      },
      any);
  if (!valid || recomputed != reported) {
    throw InvariantError("witness check failed: reported " + std::to_string(reported) + ", recomputed " +
                         std::to_string(recomputed) + (valid ? "" : ", witness invalid"));
  }

  out << "method: " << o.method << '\n';
  std::visit([&](const auto& inst) { out << "points: " << inst.size() << '\n'; }, any);
  out << value_key << ": " << reported << '\n';
  out << "valid: true\n";
  for (const auto& [k, v] : extra) out << k << ": " << v << '\n';
  if (o.timing) {
    out << "elapsed_ms: " << std::chrono::duration<double, std::milli>(elapsed).count() << '\n';
  }
  for (const auto& line : trace_lines) out << line << '\n';
  if (!o.dot_path.empty()) {
    write_file(o.dot_path, [&](std::ostream& os) {
      std::visit(
          [&](const auto& inst) {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, Instance1D>) {
              write_dot(os, communication_graph_1d(inst, *witness));
            } else {
              write_dot(os, communication_graph_2d(inst, *witness));
            }
          },
          any);
    });
  }
  if (o.witness_out.empty()) {
    io::write_assignment(out, *witness);
  } else {
    write_file(o.witness_out, [&](std::ostream& os) { io::write_assignment(os, *witness); });
    out << "witness_path: " << o.witness_out << '\n';
  }
  return kExitOk;
}

int run_check(const std::string& what, const Options& o, std::ostream& out) {
  if (what == "gadget") {
    const auto g = load_grid(o.instance_path);
    const Rational eps = Rational::parse(o.epsilon);
    const auto out_or_error = [&]() -> std::optional<GeometryReport> {
      try {
        const auto r = reduce(g, eps);
        return check_gadget_geometry(r);
      } catch (const InputError& e) {
        GeometryReport rep;
        rep.failures.emplace_back(e.what());
        return rep;
      }
    }();
    const auto& rep = *out_or_error;
    out << "gadgets: " << g.size() << '\n';
    out << "checks: " << rep.checks << '\n';
    for (const auto& f : rep.failures) out << "failure: " << f << '\n';
    out << "gadget: " << (rep.ok() ? "ok" : "fail") << '\n';
    return rep.ok() ? kExitOk : kExitRefused;
  }

  if (o.assignment_path.empty()) throw InputError("check " + what + " needs an assignment file");
  const auto any = io::read_points_file(o.instance_path);
  const auto n = io::read_assignment_file(o.assignment_path);
  auto as_1d = [&]() -> const Instance1D& {
    if (const auto* p = std::get_if<Instance1D>(&any)) return *p;
    throw InputError("check " + what + " needs a 1D instance");
  };

  if (what == "valid") {
    bool v = false;
    if (n.model() == Model::kAsym2D) {
      const Instance2D inst = std::holds_alternative<Instance2D>(any)
                                  ? std::get<Instance2D>(any)
                                  : Instance2D::from_line(std::get<Instance1D>(any));
      v = is_valid(inst, n);
    } else {
      v = is_valid(as_1d(), n);
    }
    out << "valid: " << (v ? "true" : "false") << '\n';
  } else if (what == "interference") {
    std::vector<std::uint32_t> prof;
    if (n.model() == Model::kAsym2D) {
      const Instance2D inst = std::holds_alternative<Instance2D>(any)
                                  ? std::get<Instance2D>(any)
                                  : Instance2D::from_line(std::get<Instance1D>(any));
      prof = interference_profile(inst, n);
    } else {
      prof = interference_profile(as_1d(), n);
    }
    if (o.at) {
      if (*o.at >= prof.size()) throw InputError("--at index out of range");
      out << "interference_at: " << prof[*o.at] << '\n';
    } else {
      out << "interference: " << *std::max_element(prof.begin(), prof.end()) << '\n';
    }
  } else if (what == "bst") {
    out << "bst: " << (has_bst_property(as_1d(), n) ? "true" : "false") << '\n';
  } else if (what == "bends") {
    out << "bends: " << count_bends(as_1d(), n) << '\n';
  } else if (what == "cross") {
    const auto edges = cross_edges(as_1d(), n);
    out << "cross_edges: " << edges.size() << '\n';
    for (const auto& e : edges) out << e.center << ' ' << e.boundary << '\n';
  } else {
    throw InputError("unknown check '" + what + "'");
  }
  return kExitOk;
}

int run_reduce(const Options& o, std::ostream& out) {
  const auto g = load_grid(o.grid_path);
  const auto r = reduce(g, Rational::parse(o.epsilon));
  emit(out, o.output, [&](std::ostream& os) { io::write_points(os, r.instance); });
  if (!o.roles_path.empty()) {
    write_file(o.roles_path, [&](std::ostream& os) {
      for (PointId p = 0; p < r.instance.size(); ++p) {
        const auto& v = g.vertex(r.gadget_of[p]);
        os << p << ' ' << v.x << ' ' << v.y << ' ' << role_name(r.role_of[p]) << '\n';
      }
    });
  }
  return kExitOk;
}

int run_ham_assign(const Options& o, std::ostream& out) {
  const auto g = load_grid(o.grid_path);
  const auto r = reduce(g, Rational::parse(o.epsilon));
  const auto path = find_ham_path(g);
  if (!path) {
    out << "ham_path: none\n";
    return kExitRefused;
  }
  const auto n = assignment_from_ham_path(r, *path);
  const bool valid = is_valid(r.instance, n);
  const auto value = interference(r.instance, n);
  const auto recovered = extract_connection_structure(r, n);
  if (recovered != hamiltonian_path_edges(g, *path)) {
    throw InvariantError("connection structure does not match the Hamiltonian path");
  }
  out << "ham_path:";
  for (const auto& v : *path) out << " (" << v.x << ',' << v.y << ')';
  out << '\n';
  out << "points: " << r.instance.size() << '\n';
  out << "valid: " << (valid ? "true" : "false") << '\n';
  out << "interference: " << value << '\n';
  if (!o.points_out.empty()) {
    write_file(o.points_out, [&](std::ostream& os) { io::write_points(os, r.instance); });
  }
  emit(out, o.output, [&](std::ostream& os) { io::write_assignment(os, n); });
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Receiver-interference minimization toolkit"};
  app.require_subcommand(1);
  Options o;
  std::string check_what;

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto* gen_p_cmd = gen->add_subcommand("p", "recursive doubling family P_i");
  gen_p_cmd->add_option("i", o.family_param, "level i")->required();
  gen_p_cmd->add_option("--side", o.side, "root side of the witness")->check(CLI::IsMember({"left", "right"}));
  auto* gen_q_cmd = gen->add_subcommand("q", "bend family Q_k");
  gen_q_cmd->add_option("k", o.family_param, "level k")->required();
  auto* gen_ll_cmd = gen->add_subcommand("loglower", "P_floor(log n) padded to n points");
  gen_ll_cmd->add_option("n", o.loglower_n, "point count")->required();
  auto* gen_rand_cmd = gen->add_subcommand("random", "distinct random integers");
  gen_rand_cmd->add_option("--n", o.random_n, "point count")->required();
  gen_rand_cmd->add_option("--seed", o.random_seed, "64-bit seed")->required();
  gen_rand_cmd->add_option("--max", o.random_max, "largest coordinate");
  for (auto* c : {gen_p_cmd, gen_q_cmd, gen_ll_cmd, gen_rand_cmd}) {
    c->add_option("-o,--output", o.output, "instance file (default: stdout)");
  }
  for (auto* c : {gen_p_cmd, gen_q_cmd}) {
    c->add_option("--with-witness", o.witness_out, "also write the constructive assignment");
  }

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("--method", o.method, "oracle|dp|dp-optsearch|nna")
      ->required()
      ->check(CLI::IsMember({"oracle", "dp", "dp-optsearch", "nna"}));
  solve->add_option("instance", o.instance_path, "point file")->required();
  solve->add_option("--witness", o.witness_out, "write the witness here instead of stdout");
  solve->add_option("--cap", o.cap, "oracle enumeration cap");
  solve->add_option("--dot", o.dot_path, "export the communication graph");
  solve->add_flag("--stats", o.stats, "print solver statistics");
  solve->add_flag("--trace", o.trace, "print per-round partitions (nna)");
  solve->add_flag("--timing", o.timing, "print elapsed time");

  auto* check = app.add_subcommand("check", "evaluate a predicate on an assignment");
  check->add_option("what", check_what, "valid|interference|bst|bends|cross|gadget")
      ->required()
      ->check(CLI::IsMember({"valid", "interference", "bst", "bends", "cross", "gadget"}));
  check->add_option("instance", o.instance_path, "point file (grid file for gadget)")->required();
  check->add_option("assignment", o.assignment_path, "assignment file");
  check->add_option("--epsilon", o.epsilon, "gadget epsilon");
  check->add_option("--at", o.at, "report interference at this point only");

  auto* red = app.add_subcommand("reduce", "grid graph to planar point set");
  red->add_option("grid", o.grid_path, "grid file")->required();
  red->add_option("--epsilon", o.epsilon, "gadget epsilon (a/b)");
  red->add_option("-o,--output", o.output, "point file (default: stdout)");
  red->add_option("--roles", o.roles_path, "role map sidecar");

  auto* ham = app.add_subcommand("ham", "Hamiltonian-path encoding");
  ham->require_subcommand(1);
  auto* ham_assign = ham->add_subcommand("assign", "find a Hamiltonian path and encode it");
  ham_assign->add_option("grid", o.grid_path, "grid file")->required();
  ham_assign->add_option("--epsilon", o.epsilon, "gadget epsilon (a/b)");
  ham_assign->add_option("-o,--output", o.output, "assignment file (default: stdout)");
  ham_assign->add_option("--points", o.points_out, "also write the reduced point file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (gen->parsed()) {
      if (gen_p_cmd->parsed()) {
        std::optional<ReceiverAssignment> w;
        if (!o.witness_out.empty()) {
          w = optimal_assignment_p(o.family_param, o.side == "left" ? RootSide::kLeft : RootSide::kRight);
        }
        return run_gen_family(o, out, gen_p(o.family_param), w);
      }
      if (gen_q_cmd->parsed()) {
        std::optional<ReceiverAssignment> w;
        if (!o.witness_out.empty()) w = optimal_assignment_q(o.family_param);
        return run_gen_family(o, out, gen_q(o.family_param), w);
      }
      if (gen_ll_cmd->parsed()) return run_gen_family(o, out, gen_log_lower(o.loglower_n), std::nullopt);
      return run_gen_family(o, out, gen_random(o.random_n, o.random_max, o.random_seed), std::nullopt);
    }
    if (solve->parsed()) return run_solve(o, out);
    if (check->parsed()) return run_check(check_what, o, out);
    if (red->parsed()) return run_reduce(o, out);
    if (ham_assign->parsed()) return run_ham_assign(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const RefusedError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitInput;
}

}  // namespace rim
