#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "symmine/engine.hpp"
#include "symmine/error.hpp"
#include "symmine/oracle.hpp"
#include "symmine/set_ops.hpp"

namespace {

using nlohmann::ordered_json;
using namespace symmine;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitOverflow = 3;

// "rectangle", "clique:4", or a path to a pattern file.
Pattern resolve_pattern(const std::string& spec) {
  static const char* names[] = {"triangle", "rectangle",      "pentagon", "tailed_triangle",
                                "hourglass", "house",         "clique",   "clique_minus",
                                "path",      "star"};
  std::string name = spec;
  int k = 0;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    try {
      size_t used = 0;
      k = std::stoi(spec.substr(colon + 1), &used);
      if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw InputError("bad pattern size in \"" + spec + "\"");
    }
  }
  for (const char* candidate : names) {
    if (name == candidate) return named_pattern(name, k);
  }
  std::ifstream in(spec);
  if (!in) throw IoError("cannot open pattern file: " + spec);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_pattern(text.str());
}

unsigned default_threads() {
  if (const char* env = std::getenv("SYMMINE_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

Graph load_graph(const std::string& path, bool orient) {
  LoadStats stats;
  Graph g = load_edge_list_file(path, &stats);
  if (stats.duplicate_edges || stats.self_loops) {
    std::cerr << "note: dropped " << stats.duplicate_edges << " duplicate edge(s) and "
              << stats.self_loops << " self-loop(s)\n";
  }
  if (orient) g = orient_reindex(g).graph;
  return g;
}

ordered_json relations_json(const PartialOrder& order) {
  ordered_json rels = ordered_json::array();
  for (const auto& [a, b] : order.relations) rels.push_back({a, b});
  return rels;
}

std::string relations_text(const PartialOrder& order) {
  std::string out = "{";
  for (size_t i = 0; i < order.relations.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(order.relations[i].first) + ">" +
           std::to_string(order.relations[i].second);
  }
  return out + "}";
}

std::string schedule_text(const Schedule& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

struct PlanRequest {
  std::string pattern_spec;
  bool no_restrictions = false;
  bool no_bounds = false;
  int schedule_index = -1;
  CostParams params;
};

// Schedule selection + lowering shared by compile and count.
Plan make_plan(const PlanRequest& req) {
  const Pattern pattern = resolve_pattern(req.pattern_spec);
  ScheduleChoice choice;
  if (req.schedule_index >= 0) {
    auto all = analyze_schedules(pattern, req.params);
    if (static_cast<size_t>(req.schedule_index) >= all.size()) {
      throw InputError("schedule index out of range; pattern has " +
                       std::to_string(all.size()) + " distinct schedules");
    }
    choice = std::move(all[req.schedule_index]);
  } else {
    choice = select_schedule(pattern, req.params).choice;
  }
  const PlanOptions options{!req.no_restrictions, !req.no_bounds};
  return compile_plan(pattern, choice.schedule, choice.restrictions, options);
}

int cmd_compile(const PlanRequest& req, bool as_json) {
  const Plan plan = make_plan(req);
  if (as_json) {
    std::cout << plan_to_json(plan).dump(2) << "\n";
  } else {
    std::cout << plan_pseudocode(plan) << "\n" << plan_to_json(plan).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_schedules(const std::string& pattern_spec, const CostParams& params,
                  bool all_valid, bool as_json) {
  const Pattern pattern = resolve_pattern(pattern_spec);
  const auto choices = analyze_schedules(pattern, params);
  size_t valid_total = 0;
  if (all_valid) valid_total = valid_schedules_recursive(pattern).size();

  if (as_json) {
    ordered_json j;
    j["pattern"] = {{"n", pattern.size()}, {"edges", pattern.edges()}};
    j["distinct"] = ordered_json::array();
    for (const auto& c : choices) {
      ordered_json cj;
      cj["schedule"] = c.schedule;
      cj["relations"] = relations_json(c.order);
      cj["parents"] = ordered_json::array();
      for (int parent : c.restrictions) {
        if (parent == kNoParent) {
          cj["parents"].push_back(nullptr);
        } else {
          cj["parents"].push_back(parent);
        }
      }
      ordered_json z = ordered_json::array(), cum = ordered_json::array();
      for (const auto& level : c.cost.per_level) {
        z.push_back(level.z);
        cum.push_back(level.cum_prob);
      }
      cj["z"] = std::move(z);
      cj["cum_prob"] = std::move(cum);
      cj["cost"] = c.cost.total;
      j["distinct"].push_back(std::move(cj));
    }
    if (all_valid) j["valid_total"] = valid_total;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  for (const auto& c : choices) {
    std::cout << schedule_text(c.schedule) << " relations=" << relations_text(c.order)
              << " parents=[";
    for (size_t i = 0; i < c.restrictions.size(); ++i) {
      if (i) std::cout << ",";
      if (c.restrictions[i] == kNoParent) {
        std::cout << "-";
      } else {
        std::cout << c.restrictions[i];
      }
    }
    std::cout << "] z=[";
    for (size_t i = 0; i < c.cost.per_level.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << c.cost.per_level[i].z;
    }
    std::cout << "] cum_prob=[";
    for (size_t i = 0; i < c.cost.per_level.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << c.cost.per_level[i].cum_prob;
    }
    std::cout << "] cost=" << c.cost.total << "\n";
  }
  std::cout << "distinct " << choices.size() << "\n";
  if (all_valid) std::cout << "valid " << valid_total << "\n";
  return kExitOk;
}

int cmd_count(const std::string& graph_path, const PlanRequest& req, bool orient,
              unsigned threads, bool as_json) {
  const Graph g = load_graph(graph_path, orient);
  const Plan plan = make_plan(req);
  const CountResult result = count_instances(g, plan, threads);
  if (as_json) {
    ordered_json j;
    j["count"] = result.count;
    j["wall_ms"] = result.wall_ms;
    j["schedule"] = plan.schedule;
    j["workers"] = threads;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << result.count << "\n";
  }
  return kExitOk;
}

int cmd_motifs(const std::string& graph_path, int size, const CostParams& params,
               bool orient, unsigned threads, bool as_json) {
  const Graph g = load_graph(graph_path, orient);
  const auto entries = motif_counts(g, size, params, threads);
  uint64_t total = 0;
  for (const auto& entry : entries) total = detail::checked_add(total, entry.count);
  if (as_json) {
    ordered_json j;
    j["size"] = size;
    j["motifs"] = ordered_json::array();
    for (const auto& entry : entries) {
      const std::string name = pattern_display_name(entry.pattern);
      j["motifs"].push_back({{"bits", adjacency_bits(entry.pattern)},
                             {"name", name.empty() ? ordered_json() : ordered_json(name)},
                             {"count", entry.count}});
    }
    j["total"] = total;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& entry : entries) {
      const std::string name = pattern_display_name(entry.pattern);
      std::cout << adjacency_bits(entry.pattern) << " " << (name.empty() ? "-" : name)
                << " " << entry.count << "\n";
    }
    std::cout << "total " << total << "\n";
  }
  return kExitOk;
}

int cmd_orient(const std::string& graph_path, const std::string& out_path) {
  const Graph g = load_graph(graph_path, false);
  const OrientResult oriented = orient_reindex(g);
  write_edge_list_file(oriented.graph, out_path);
  return kExitOk;
}

int cmd_oracle(const std::string& graph_path, const std::string& pattern_spec, bool as_json) {
  const Graph g = load_graph(graph_path, false);
  const Pattern pattern = resolve_pattern(pattern_spec);
  const uint64_t induced = oracle::induced_count(g, pattern);
  const uint64_t labeled = oracle::mapping_count(g, pattern, {});
  if (as_json) {
    ordered_json j;
    j["induced"] = induced;
    j["labeled"] = labeled;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "induced " << induced << "\n";
    std::cout << "labeled " << labeled << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern mining with automatic symmetry-breaking restrictions"};
  app.require_subcommand(1);

  std::string pattern_spec, graph_path, out_path;
  bool no_restrictions = false, no_bounds = false, orient = false;
  bool as_json = false, all_valid = false;
  int schedule_index = -1, motif_size = 0;
  unsigned threads = default_threads();
  CostParams params;

  const auto add_model_flags = [&params](CLI::App* cmd) {
    cmd->add_option("--model-n", params.n_model, "cost model graph size")
        ->capture_default_str();
    cmd->add_option("--model-d", params.d_model, "cost model average degree")
        ->capture_default_str();
  };

  CLI::App* compile = app.add_subcommand("compile", "lower a pattern to a set-operation plan");
  compile->add_option("--pattern", pattern_spec, "pattern name[:k] or file")->required();
  compile->add_flag("--no-restrictions", no_restrictions, "count every mapping");
  compile->add_flag("--no-bounds", no_bounds, "check restrictions without bounding set ops");
  compile->add_option("--schedule-index", schedule_index, "use the i-th distinct schedule");
  compile->add_flag("--json", as_json, "print only the plan JSON");
  add_model_flags(compile);

  CLI::App* schedules = app.add_subcommand("schedules", "list distinct schedules with costs");
  schedules->add_option("--pattern", pattern_spec, "pattern name[:k] or file")->required();
  schedules->add_flag("--all-valid", all_valid, "also count all valid schedules");
  schedules->add_flag("--json", as_json, "JSON output");
  add_model_flags(schedules);

  CLI::App* count = app.add_subcommand("count", "count induced instances in a graph");
  count->add_option("--graph", graph_path, "edge list file")->required();
  count->add_option("--pattern", pattern_spec, "pattern name[:k] or file")->required();
  count->add_flag("--orient", orient, "reindex by descending degree first");
  count->add_flag("--no-restrictions", no_restrictions, "count every mapping");
  count->add_flag("--no-bounds", no_bounds, "check restrictions without bounding set ops");
  count->add_option("--threads", threads, "worker count")->capture_default_str();
  count->add_option("--schedule-index", schedule_index, "use the i-th distinct schedule");
  count->add_flag("--json", as_json, "JSON output");
  add_model_flags(count);

  CLI::App* motifs = app.add_subcommand("motifs", "count every connected pattern of a size");
  motifs->add_option("--graph", graph_path, "edge list file")->required();
  motifs->add_option("--size", motif_size, "pattern size, 3..5")->required();
  motifs->add_flag("--orient", orient, "reindex by descending degree first");
  motifs->add_option("--threads", threads, "worker count")->capture_default_str();
  motifs->add_flag("--json", as_json, "JSON output");
  add_model_flags(motifs);

  CLI::App* orient_cmd = app.add_subcommand("orient", "write the degree-reindexed graph");
  orient_cmd->add_option("--graph", graph_path, "edge list file")->required();
  orient_cmd->add_option("--out", out_path, "output edge list file")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference counts");
  oracle_cmd->add_option("--graph", graph_path, "edge list file")->required();
  oracle_cmd->add_option("--pattern", pattern_spec, "pattern name[:k] or file")->required();
  oracle_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (threads == 0) threads = 1;
    const PlanRequest req{pattern_spec, no_restrictions, no_bounds, schedule_index, params};
    if (compile->parsed()) return cmd_compile(req, as_json);
    if (schedules->parsed()) return cmd_schedules(pattern_spec, params, all_valid, as_json);
    if (count->parsed()) return cmd_count(graph_path, req, orient, threads, as_json);
    if (motifs->parsed()) return cmd_motifs(graph_path, motif_size, params, orient, threads, as_json);
    if (orient_cmd->parsed()) return cmd_orient(graph_path, out_path);
    if (oracle_cmd->parsed()) return cmd_oracle(graph_path, pattern_spec, as_json);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CountOverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
