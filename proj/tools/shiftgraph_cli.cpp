#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shiftgraph/acceptance.hpp"
#include "shiftgraph/aop.hpp"
#include "shiftgraph/coloring.hpp"
#include "shiftgraph/constructors.hpp"
#include "shiftgraph/invariants.hpp"
#include "shiftgraph/io.hpp"

using namespace shiftgraph;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 64;
constexpr int kSizeCap = 65;
constexpr int kInternal = 70;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << text;
}

UndirectedGraph underlying_of(const AnyGraph &g) {
  if (auto *d = std::get_if<AcyclicDigraph>(&g))
    return d->underlying();
  return std::get<UndirectedGraph>(g);
}

AcyclicDigraph directed_input(const std::string &path) {
  auto g = graph_from_json(read_file(path));
  if (auto *d = std::get_if<AcyclicDigraph>(&g))
    return *d;
  throw InputError(path + " must hold a directed graph (\"directed\": true)");
}

std::string length_text(const Length &l) { return l ? std::to_string(*l) : "inf"; }

ordered_json length_json(const Length &l) {
  return l ? ordered_json(*l) : ordered_json("inf");
}

struct GraphOutput {
  std::string out;
  std::string dot;

  void attach(CLI::App *cmd) {
    cmd->add_option("-o,--out", out, "Write the graph as JSON to this file (default: stdout)");
    cmd->add_option("--dot", dot, "Also write the graph in DOT format to this file");
  }

  template <class G> void emit(const G &g, const std::string &what) const {
    if (!dot.empty())
      write_file(dot, to_dot(g));
    if (out.empty()) {
      std::cout << to_json(g) << "\n";
      return;
    }
    write_file(out, to_json(g) + "\n");
    std::cout << what << ": " << g.order() << " vertices, " << g.size() << " edges -> " << out
              << "\n";
  }
};

void print_report(const std::string &title, const acceptance::Report &report, bool json) {
  if (json) {
    ordered_json j;
    j["recipe"] = title;
    j["passed"] = acceptance::all_passed(report);
    j["checks"] = ordered_json::array();
    for (const auto &c : report)
      j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << title << "\n";
  for (const auto &c : report)
    std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail
              << "\n";
  std::cout << (acceptance::all_passed(report) ? "all checks passed" : "some checks FAILED")
            << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Shift graphs, line digraphs, colorings and the AOP property"};
  app.require_subcommand(1);

  // gen
  auto *gen = app.add_subcommand("gen", "Construct a graph family");
  gen->require_subcommand(1);
  GraphOutput gen_out;
  int n = 0, k = 2, girth_g = 5;
  std::string in_path;

  auto *gen_tournament = gen->add_subcommand("tournament", "Acyclic tournament T_n (directed)");
  gen_tournament->add_option("--n", n, "Number of vertices")->required();
  gen_out.attach(gen_tournament);

  auto *gen_shift = gen->add_subcommand("shift", "Shift graph G_{n,k}");
  gen_shift->add_option("--n", n, "Ground set size")->required();
  gen_shift->add_option("--k", k, "Tuple length")->capture_default_str();
  gen_out.attach(gen_shift);

  auto *gen_zykov = gen->add_subcommand("zykov", "Zykov graph Z_n with its AOP orientation (directed)");
  gen_zykov->add_option("--n", n, "Index of the Zykov graph")->required();
  gen_out.attach(gen_zykov);

  auto *gen_gadget = gen->add_subcommand("gadget", "Odd-girth gadget on 2g vertices");
  gen_gadget->add_option("--g,--n", girth_g, "Odd cycle length")->capture_default_str();
  gen_out.attach(gen_gadget);

  auto *gen_girth5 = gen->add_subcommand("girth5", "Girth-5 construction over a base graph");
  gen_girth5->add_option("--in", in_path, "Base graph (default: Brinkmann graph)");
  gen_out.attach(gen_girth5);

  // derive
  auto *derive = app.add_subcommand("derive", "Line digraph constructions");
  derive->require_subcommand(1);
  GraphOutput derive_out;
  int times = 1;
  auto *derive_line = derive->add_subcommand("line", "Line digraph L(G)");
  derive_line->add_option("--in", in_path, "Directed input graph")->required();
  derive_out.attach(derive_line);
  auto *derive_iterate = derive->add_subcommand("iterate", "Iterated line digraph L^G(G)");
  derive_iterate->add_option("--in", in_path, "Directed input graph")->required();
  derive_iterate->add_option("--times", times, "Number of iterations")->required();
  derive_out.attach(derive_iterate);

  // check
  bool json = false;
  int chi_cap = kDefaultChromaticCap;
  auto *check = app.add_subcommand("check", "Report girth, odd girth, clique number, degeneracy, chi");
  check->add_option("--in", in_path, "Input graph")->required();
  check->add_option("--chi-cap", chi_cap, "Largest order for exact chromatic number")
      ->capture_default_str();
  check->add_flag("--json", json, "Machine-readable report");

  // color
  auto *color = app.add_subcommand("color", "Colorings");
  color->require_subcommand(1);
  std::string out_path, coloring_path, orient_path;
  int a = 2, b = 2;
  auto *color_log = color->add_subcommand("log", "Antichain log-coloring of L(G) from an exact coloring of G");
  color_log->add_option("--in", in_path, "Directed input graph")->required();
  color_log->add_option("-o,--out", out_path, "Write the coloring JSON to this file");
  color_log->add_flag("--json", json, "Machine-readable report");
  auto *color_kab = color->add_subcommand("kabfree", "Coloring of L(T') for K_{a,b}-free line digraphs");
  color_kab->add_option("--in", in_path, "Directed subdigraph of an acyclic tournament")->required();
  color_kab->add_option("--a", a, "K_{a,b} parameter a")->capture_default_str();
  color_kab->add_option("--b", b, "K_{a,b} parameter b")->capture_default_str();
  color_kab->add_option("-o,--out", out_path, "Write the coloring JSON to this file");
  color_kab->add_flag("--json", json, "Machine-readable report");
  auto *color_gr = color->add_subcommand("gallai-roy", "Translate between colorings and orientations");
  color_gr->require_subcommand(1);
  auto *gr_orient = color_gr->add_subcommand("to-orient", "Orient edges from lower to higher color");
  gr_orient->add_option("--in", in_path, "Input graph")->required();
  gr_orient->add_option("--coloring", coloring_path, "Coloring JSON (default: exact coloring)");
  gr_orient->add_option("-o,--out", out_path, "Write the orientation JSON to this file");
  auto *gr_color = color_gr->add_subcommand("to-color", "Color by longest directed path ending at each vertex");
  gr_color->add_option("--in", in_path, "Input graph")->required();
  gr_color->add_option("--orient", orient_path, "Orientation JSON")->required();
  gr_color->add_option("-o,--out", out_path, "Write the coloring JSON to this file");

  // aop
  auto *aop = app.add_subcommand("aop", "AOP verification and decision (exit 0 yes, 1 no, 2 timeout)");
  aop->require_subcommand(1);
  auto *aop_verify = aop->add_subcommand("verify", "Check one orientation");
  aop_verify->add_option("--in", in_path, "Input graph")->required();
  aop_verify->add_option("--orient", orient_path, "Orientation JSON")->required();
  aop_verify->add_flag("--json", json, "Machine-readable report");
  auto *aop_decide = aop->add_subcommand("decide", "Search for an AOP orientation");
  AopBudget budget;
  std::optional<double> seconds;
  aop_decide->add_option("--in", in_path, "Input graph")->required();
  aop_decide->add_option("--budget", budget.max_nodes, "Search node limit")->capture_default_str();
  aop_decide->add_option("--seconds", seconds, "Wall-clock limit");
  aop_decide->add_option("--threads", budget.threads, "Worker threads")->capture_default_str();
  aop_decide->add_option("-o,--out", out_path, "Write the witness orientation JSON to this file");
  aop_decide->add_flag("--json", json, "Machine-readable report");

  // repro
  auto *repro = app.add_subcommand("repro", "Run a reproduction recipe");
  std::string recipe;
  std::optional<int> rn, ra, rb, rg;
  std::uint64_t repro_budget = 1'000'000'000;
  repro->add_option("name", recipe, "Recipe")
      ->required()
      ->check(CLI::IsMember({"structure-obs", "log-color", "odd-girth-lemma", "kab",
                             "cycle-lemma", "gadget", "girth5", "zykov-aop", "g92-aop"}));
  repro->add_option("--n", rn, "n for kab / zykov-aop");
  repro->add_option("--a", ra, "a for kab");
  repro->add_option("--b", rb, "b for kab");
  repro->add_option("--g", rg, "iterations for zykov-aop");
  repro->add_option("--budget", repro_budget, "Node budget for g92-aop")->capture_default_str();
  repro->add_flag("--json", json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_tournament->parsed())
        gen_out.emit(acyclic_tournament(n), "T_" + std::to_string(n));
      else if (gen_shift->parsed())
        gen_out.emit(shift_graph(n, k), "G_{" + std::to_string(n) + "," + std::to_string(k) + "}");
      else if (gen_zykov->parsed())
        gen_out.emit(zykov(n).orientation.to_digraph(), "Z_" + std::to_string(n));
      else if (gen_gadget->parsed())
        gen_out.emit(odd_girth_gadget(girth_g), "gadget(" + std::to_string(girth_g) + ")");
      else if (gen_girth5->parsed()) {
        auto base = in_path.empty() ? brinkmann_graph()
                                    : underlying_of(graph_from_json(read_file(in_path)));
        gen_out.emit(girth5_non_aop(base), "girth-5 construction");
      }
      return 0;
    }

    if (derive->parsed()) {
      auto g = directed_input(in_path);
      if (derive_line->parsed())
        derive_out.emit(line_digraph(g).digraph, "L(G)");
      else
        derive_out.emit(iterate_line_digraph(g, times), "L^" + std::to_string(times) + "(G)");
      return 0;
    }

    if (check->parsed()) {
      auto any = graph_from_json(read_file(in_path));
      auto g = underlying_of(any);
      bool directed = std::holds_alternative<AcyclicDigraph>(any);
      auto gi = girth(g);
      auto og = odd_girth(g);
      bool tf = triangle_free(g);
      int omega = clique_number(g);
      int degen = degeneracy(g).degeneracy;
      std::optional<int> chi;
      if (g.order() <= chi_cap)
        chi = chromatic_number(g, chi_cap).first;
      if (json) {
        ordered_json j;
        j["vertices"] = g.order();
        j["edges"] = g.size();
        j["directed"] = directed;
        j["girth"] = length_json(gi);
        j["odd_girth"] = length_json(og);
        j["triangle_free"] = tf;
        j["clique_number"] = omega;
        j["degeneracy"] = degen;
        j["chromatic_number"] = chi ? ordered_json(*chi) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "vertices=" << g.order() << "\n"
                  << "edges=" << g.size() << "\n"
                  << "directed=" << (directed ? "true" : "false") << "\n"
                  << "girth=" << length_text(gi) << "\n"
                  << "odd_girth=" << length_text(og) << "\n"
                  << "triangle_free=" << (tf ? "true" : "false") << "\n"
                  << "clique_number=" << omega << "\n"
                  << "degeneracy=" << degen << "\n"
                  << "chromatic_number="
                  << (chi ? std::to_string(*chi) : "skipped (order above --chi-cap)") << "\n";
      }
      return 0;
    }

    if (color->parsed()) {
      auto emit_coloring = [&](const Coloring &c) {
        if (out_path.empty())
          std::cout << coloring_to_json(c) << "\n";
        else
          write_file(out_path, coloring_to_json(c) + "\n");
      };
      if (color_log->parsed()) {
        auto g = directed_input(in_path);
        auto base = chromatic_number(g.underlying()).second;
        auto c = log_color_line_digraph(g, base);
        if (json) {
          ordered_json j;
          j["base_colors"] = base.colors_used();
          j["k_star"] = k_star(base.colors_used());
          j["palette"] = c.palette();
          std::cout << j.dump(2) << "\n";
          if (!out_path.empty())
            write_file(out_path, coloring_to_json(c) + "\n");
        } else {
          if (!out_path.empty())
            std::cout << "base colors " << base.colors_used() << ", line palette "
                      << c.palette() << " -> " << out_path << "\n";
          emit_coloring(c);
        }
      } else if (color_kab->parsed()) {
        auto g = directed_input(in_path);
        auto r = color_kab_free(g, a, b);
        const auto &rep = r.report;
        auto h = r.line.digraph.underlying();
        if (json) {
          ordered_json j;
          j["a"] = rep.a;
          j["b"] = rep.b;
          j["line_vertices"] = h.order();
          j["left_side"] = rep.left_side.size();
          j["right_side"] = rep.right_side.size();
          j["left_colors"] = rep.left_colors;
          j["right_colors"] = rep.right_colors;
          j["base_colors"] = rep.base_colors;
          j["k_star"] = rep.k_star;
          j["final_palette"] = rep.final_palette;
          j["within_bounds"] = rep.within_bounds;
          if (rep.witness)
            j["witness"] = {{"center", rep.witness->center},
                            {"left", rep.witness->left},
                            {"right", rep.witness->right}};
          else
            j["witness"] = nullptr;
          std::cout << j.dump(2) << "\n";
          if (!out_path.empty())
            write_file(out_path, coloring_to_json(r.coloring) + "\n");
        } else {
          std::cerr << "L-side " << rep.left_colors << " colors, R-side " << rep.right_colors
                    << " colors, final palette " << rep.final_palette
                    << (rep.within_bounds ? " (within bounds)" : " (bounds exceeded, witness found)")
                    << "\n";
          emit_coloring(r.coloring);
        }
      } else if (gr_orient->parsed()) {
        auto g = underlying_of(graph_from_json(read_file(in_path)));
        auto c = coloring_path.empty() ? chromatic_number(g).second
                                       : coloring_from_json(g, read_file(coloring_path));
        auto o = coloring_to_orientation(g, c);
        if (out_path.empty())
          std::cout << orientation_to_json(o) << "\n";
        else
          write_file(out_path, orientation_to_json(o) + "\n");
      } else if (gr_color->parsed()) {
        auto g = underlying_of(graph_from_json(read_file(in_path)));
        auto o = orientation_from_json(g, read_file(orient_path));
        emit_coloring(orientation_to_coloring(o));
      }
      return 0;
    }

    if (aop_verify->parsed()) {
      auto g = underlying_of(graph_from_json(read_file(in_path)));
      auto o = orientation_from_json(g, read_file(orient_path));
      auto r = verify_aop(o);
      if (json) {
        ordered_json j;
        j["aop"] = r.ok;
        j["cycle"] = r.cycle;
        j["first_path"] = r.first_path;
        j["second_path"] = r.second_path;
        std::cout << j.dump(2) << "\n";
      } else if (r.ok) {
        std::cout << "verified: acyclic with at most one directed path per pair\n";
      } else {
        auto path = [](const std::vector<Vertex> &p) {
          std::string s;
          for (std::size_t i = 0; i < p.size(); ++i)
            s += (i ? " -> " : "") + std::to_string(p[i]);
          return s;
        };
        if (!r.cycle.empty())
          std::cout << "refuted: directed cycle " << path(r.cycle) << "\n";
        else
          std::cout << "refuted: two paths " << path(r.first_path) << " and "
                    << path(r.second_path) << "\n";
      }
      return r.ok ? 0 : 1;
    }

    if (aop_decide->parsed()) {
      auto g = underlying_of(graph_from_json(read_file(in_path)));
      budget.max_seconds = seconds;
      auto v = decide_aop(g, budget);
      if (v.witness && !out_path.empty())
        write_file(out_path, orientation_to_json(*v.witness) + "\n");
      if (json) {
        ordered_json j;
        j["status"] = to_string(v.status);
        j["nodes"] = v.stats.nodes;
        j["cycle_prunes"] = v.stats.cycle_prunes;
        j["double_path_prunes"] = v.stats.double_path_prunes;
        j["forced"] = v.stats.forced;
        j["witness"] = v.witness ? ordered_json::parse(orientation_to_json(*v.witness))
                                 : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(v.status) << " (" << v.stats.nodes << " nodes, "
                  << v.stats.cycle_prunes << " cycle prunes, " << v.stats.double_path_prunes
                  << " double-path prunes, " << v.stats.forced << " forced)\n";
        if (v.witness && out_path.empty())
          std::cout << orientation_to_json(*v.witness) << "\n";
      }
      switch (v.status) {
      case AopStatus::HasAOP:
        return 0;
      case AopStatus::NoAOP:
        return 1;
      case AopStatus::Timeout:
        return 2;
      }
    }

    if (repro->parsed()) {
      acceptance::Report report;
      std::string title;
      if (recipe == "structure-obs") {
        title = "shift-graph identity and line-digraph structure clauses";
        report = acceptance::shift_identity();
        for (auto &c : acceptance::structure_observations())
          report.push_back(c);
      } else if (recipe == "log-color") {
        title = "chromatic sandwich and constructive log-coloring";
        report = acceptance::chromatic_sandwich();
        for (auto &c : acceptance::log_coloring())
          report.push_back(c);
      } else if (recipe == "odd-girth-lemma") {
        title = "odd girth grows by two per line digraph";
        report = acceptance::odd_girth_lift();
      } else if (recipe == "kab") {
        if (rn || ra || rb) {
          int kn = rn.value_or(9), ka = ra.value_or(2), kb = rb.value_or(2);
          title = "K_{" + std::to_string(ka) + "," + std::to_string(kb) + "} pipeline on L(T_" +
                  std::to_string(kn) + ")";
          report = acceptance::kab_single(kn, ka, kb);
        } else {
          title = "K_{a,b}-free line digraph coloring";
          report = acceptance::kab_pipeline();
        }
      } else if (recipe == "cycle-lemma") {
        title = "orientations of C_k with a long directed path";
        report = acceptance::cycle_lemma();
      } else if (recipe == "gadget") {
        title = "odd-girth gadgets without the AOP property";
        report = acceptance::gadget_non_aop();
      } else if (recipe == "girth5") {
        title = "girth-5 construction over the Brinkmann graph";
        report = acceptance::girth5_construction();
      } else if (recipe == "zykov-aop") {
        if (rn || rg) {
          int zn = rn.value_or(4), zg = rg.value_or(1);
          title = "AOP pipeline for L^" + std::to_string(zg) + "(Z_" + std::to_string(zn) + ")";
          report = acceptance::zykov_single(zn, zg);
        } else {
          title = "Zykov graphs and their iterated line digraphs";
          report = acceptance::zykov_pipeline();
        }
      } else if (recipe == "g92-aop") {
        title = "shift graph G_{9,2} has no AOP orientation";
        report = acceptance::g92_non_aop(repro_budget);
      }
      print_report(title, report, json);
      return acceptance::all_passed(report) ? 0 : 1;
    }
  } catch (const SizeCapError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSizeCap;
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return 0;
}
