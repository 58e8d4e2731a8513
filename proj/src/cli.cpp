#include "pyramid/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "pyramid/io.hpp"

namespace pyramid {

namespace {

int solve_cmd(const std::string& inst_path, bool tree, std::size_t cap, std::ostream& out) {
  Instance inst = parse_instance(read_file(inst_path));
  SolveResult res = tree ? optimal_tree_routing(inst) : optimal_routing(inst, cap);
  if (!res.optimal) out << "TRUNCATED: best routing among the first " << cap << " enumerated\n";
  out << emit_routing(inst, res.routing);
  out << "cost " << format_rational(res.cost) << "\n";
  return 0;
}

int dominate_cmd(const std::string& inst_path, const std::string& rt_path, bool stats, std::ostream& out,
                 std::ostream& err) {
  Instance inst = parse_instance(read_file(inst_path));
  Routing rt = parse_routing(read_file(rt_path), inst);
  if (auto e = validate_routing(inst, rt)) throw ValidationError("invalid routing: " + *e);
  DominationStats st;
  Certificate cert = dominate(inst, rt, &st);
  out << emit_certificate(inst, cert, &rt);
  if (stats) {
    for (const auto& [step, n] : st.steps) err << step << " " << n << "\n";
  }
  return 0;
}

int verify_cmd(const std::string& inst_path, const std::string& rt_path, const std::string& cert_path,
               std::ostream& out) {
  Instance inst = parse_instance(read_file(inst_path));
  Routing rt = parse_routing(read_file(rt_path), inst);
  CertificateFile cf = parse_certificate(read_file(cert_path), inst);
  if (auto e = verify_certificate(inst, rt, cf.cert)) {
    out << "verification failed: " << *e << "\n";
    return 1;
  }
  if (cf.target_cost && *cf.target_cost != routing_cost(inst, rt)) {
    out << "verification failed: target-cost " << format_rational(*cf.target_cost) << " but the routing costs "
        << format_rational(routing_cost(inst, rt)) << "\n";
    return 1;
  }
  out << "certificate verified: " << cf.cert.entries.size() << " trees\n";
  return 0;
}

int classify_cmd(const std::string& inst_path, std::ostream& out) {
  Instance inst = parse_instance(read_file(inst_path));
  if (!inst.graph.is_connected()) throw InputError("graph is not connected");
  out << to_string(classify(inst.graph)) << "\n";
  auto bd = blocks(inst.graph);
  out << "blocks " << bd.blocks.size() << "\n";
  for (const auto& b : bd.blocks) {
    std::string cls = b.num_edges() <= 1 ? "bridge" : to_string(classify(b));
    out << "block";
    for (Vertex v : b.vertices()) out << " " << inst.name(v);
    out << " : " << cls << "\n";
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pyramidal routing solvers and domination certificates", "pyramid"};
  app.require_subcommand(1);

  std::string inst_path, rt_path, cert_path;
  bool tree = false, stats = false;
  std::size_t cap = 2'000'000;
  auto* solve = app.add_subcommand("solve", "optimal routing (or tree routing) of an instance");
  solve->add_option("instance", inst_path)->required();
  solve->add_flag("--tree", tree, "restrict to tree routings");
  solve->add_option("--cap", cap, "routing enumeration cap");

  auto* dom = app.add_subcommand("dominate", "certificate of tree routings dominating a routing");
  dom->add_option("instance", inst_path)->required();
  dom->add_option("routing", rt_path)->required();
  dom->add_flag("--stats", stats, "print construction steps to stderr");

  auto* ver = app.add_subcommand("verify", "check a certificate against a routing");
  ver->add_option("instance", inst_path)->required();
  ver->add_option("routing", rt_path)->required();
  ver->add_option("certificate", cert_path)->required();

  FamilyParams fp;
  fp.max_vertices = 5;
  auto* chk = app.add_subcommand("check", "exhaustive conjecture check over small instances");
  chk->add_option("--min-vertices", fp.min_vertices);
  chk->add_option("--max-vertices", fp.max_vertices);
  chk->add_option("--demand-max", fp.demand_max);
  chk->add_option("--total-max", fp.total_max, "bound on k, 0 for none");
  chk->add_option("--costs", fp.cost_draws, "random cost vectors per instance");
  chk->add_option("--cost-max", fp.cost_max);
  chk->add_option("--seed", fp.seed);
  chk->add_option("--routing-cap", fp.routing_cap);
  chk->add_flag("--allow-non-outerplanar", fp.allow_non_outerplanar);
  bool no_ext = false;
  chk->add_flag("--no-extremality", no_ext);

  auto* cls = app.add_subcommand("classify", "graph class and block structure");
  cls->add_option("instance", inst_path)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  try {
    if (*solve) return solve_cmd(inst_path, tree, cap, out);
    if (*dom) return dominate_cmd(inst_path, rt_path, stats, out, err);
    if (*ver) return verify_cmd(inst_path, rt_path, cert_path, out);
    if (*cls) return classify_cmd(inst_path, out);
    if (*chk) {
      fp.check_extremality = !no_ext;
      SearchReport rep = check_conjecture(fp);
      out << emit_report(rep);
      return rep.violations.empty() ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    err << "refused: " << e.what() << "\n";
    return 2;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pyramid
