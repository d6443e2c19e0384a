#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symmine/engine.hpp"
#include "symmine/error.hpp"
#include "symmine/oracle.hpp"

namespace py = pybind11;
using namespace symmine;

namespace {

py::dict choice_to_dict(const ScheduleChoice& c) {
  py::dict d;
  d["schedule"] = c.schedule;
  d["relations"] = c.order.relations;
  d["orbit_sizes"] = c.order.orbit_sizes;
  py::list parents;
  for (int parent : c.restrictions) {
    if (parent == kNoParent) {
      parents.append(py::none());
    } else {
      parents.append(parent);
    }
  }
  d["parents"] = std::move(parents);
  py::list z, cum;
  for (const auto& level : c.cost.per_level) {
    z.append(level.z);
    cum.append(level.cum_prob);
  }
  d["z"] = std::move(z);
  d["cum_prob"] = std::move(cum);
  d["cost"] = c.cost.total;
  return d;
}

RestrictionMap parents_from_choice(const Pattern& p, int schedule_index,
                                   const CostParams& params, Schedule& schedule_out) {
  if (schedule_index < 0) {
    SelectedSchedule sel = select_schedule(p, params);
    schedule_out = sel.choice.schedule;
    return sel.choice.restrictions;
  }
  auto all = analyze_schedules(p, params);
  if (static_cast<size_t>(schedule_index) >= all.size()) {
    throw InputError("schedule index out of range");
  }
  schedule_out = all[schedule_index].schedule;
  return all[schedule_index].restrictions;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Induced pattern mining with symmetry-breaking ID restrictions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_IOError);
  py::register_exception<CountOverflowError>(m, "CountOverflowError", PyExc_OverflowError);

  py::class_<Pattern>(m, "Pattern")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Pattern::size)
      .def_property_readonly("edges", [](const Pattern& p) { return p.edges(); })
      .def("canonical_key", [](const Pattern& p) { return canonical_key(p); })
      .def("bits", [](const Pattern& p) { return adjacency_bits(p); })
      .def("name", [](const Pattern& p) { return pattern_display_name(p); })
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__repr__", [](const Pattern& p) {
        return "Pattern(n=" + std::to_string(p.size()) + ", bits=" + adjacency_bits(p) + ")";
      });

  m.def("parse_pattern", [](const std::string& text) { return parse_pattern(text); },
        py::arg("text"));
  m.def("named_pattern", &named_pattern, py::arg("name"), py::arg("k") = 0);
  m.def("connected_patterns", &connected_patterns, py::arg("k"));
  m.def("automorphisms",
        [](const Pattern& p) { return automorphisms(p).members; }, py::arg("pattern"));

  m.def("valid_schedules", [](const Pattern& p) { return valid_schedules_recursive(p); });
  m.def("distinct_schedules",
        [](const Pattern& p) { return distinct_schedules(p, automorphisms(p)); });
  m.def("schedules_equivalent",
        [](const Pattern& p, const Schedule& a, const Schedule& b) {
          return schedules_equivalent(automorphisms(p), a, b);
        });

  m.def(
      "analyze_schedules",
      [](const Pattern& p, double n_model, double d_model) {
        py::list out;
        for (const auto& c : analyze_schedules(p, {n_model, d_model})) {
          out.append(choice_to_dict(c));
        }
        return out;
      },
      py::arg("pattern"), py::arg("n_model") = 1000.0, py::arg("d_model") = 5.0);
  m.def(
      "select_schedule",
      [](const Pattern& p, double n_model, double d_model) {
        SelectedSchedule sel = select_schedule(p, {n_model, d_model});
        py::dict d = choice_to_dict(sel.choice);
        d["index"] = sel.index;
        return d;
      },
      py::arg("pattern"), py::arg("n_model") = 1000.0, py::arg("d_model") = 5.0);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "load", [](const std::string& path) { return load_edge_list_file(path); },
          py::arg("path"))
      .def_static(
          "from_edges",
          [](size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", [](const Graph& g, VertexId v) { return g.degree(v); })
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             auto span = g.neighbors(v);
             return std::vector<VertexId>(span.begin(), span.end());
           })
      .def("orient", [](const Graph& g) { return orient_reindex(g).graph; })
      .def("write",
           [](const Graph& g) {
             std::ostringstream out;
             write_edge_list(g, out);
             return out.str();
           })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Plan>(m, "Plan")
      .def_property_readonly("schedule", [](const Plan& p) { return p.schedule; })
      .def("to_json", [](const Plan& p) { return plan_to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return plan_from_json(nlohmann::json::parse(text));
                  })
      .def("pseudocode", &plan_pseudocode);

  m.def(
      "compile_plan",
      [](const Pattern& p, int schedule_index, bool use_restrictions, bool use_bounds,
         double n_model, double d_model) {
        Schedule schedule;
        RestrictionMap rm =
            parents_from_choice(p, schedule_index, {n_model, d_model}, schedule);
        return compile_plan(p, schedule, rm, {use_restrictions, use_bounds});
      },
      py::arg("pattern"), py::arg("schedule_index") = -1, py::arg("use_restrictions") = true,
      py::arg("use_bounds") = true, py::arg("n_model") = 1000.0, py::arg("d_model") = 5.0);

  m.def(
      "count",
      [](const Graph& g, const Plan& plan, unsigned workers) {
        return count_instances(g, plan, workers).count;
      },
      py::arg("graph"), py::arg("plan"), py::arg("workers") = 1);
  m.def(
      "count_pattern",
      [](const Graph& g, const Pattern& p, unsigned workers) {
        SelectedSchedule sel = select_schedule(p, {});
        const Plan plan = compile_plan(p, sel.choice.schedule, sel.choice.restrictions);
        return count_instances(g, plan, workers).count;
      },
      py::arg("graph"), py::arg("pattern"), py::arg("workers") = 1);
  m.def(
      "enumerate",
      [](const Graph& g, const Plan& plan, std::optional<uint64_t> limit) {
        return enumerate_instances(g, plan, limit);
      },
      py::arg("graph"), py::arg("plan"), py::arg("limit") = py::none());
  m.def(
      "motif_counts",
      [](const Graph& g, int k, unsigned workers) {
        py::list out;
        for (const auto& entry : motif_counts(g, k, {}, workers)) {
          py::dict d;
          d["bits"] = adjacency_bits(entry.pattern);
          const std::string name = pattern_display_name(entry.pattern);
          d["name"] = name.empty() ? py::object(py::none()) : py::object(py::str(name));
          d["count"] = entry.count;
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("graph"), py::arg("k"), py::arg("workers") = 1);

  m.def("oracle_induced_count", &oracle::induced_count, py::arg("graph"), py::arg("pattern"));
  m.def(
      "oracle_mapping_count",
      [](const Graph& g, const Pattern& p) { return oracle::mapping_count(g, p, {}); },
      py::arg("graph"), py::arg("pattern"));
}
