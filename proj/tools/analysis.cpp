#include "analysis.hpp"

#include <sstream>

#include "kecore/critical.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"
#include "kecore/theorem_lab.hpp"
#include "kecore/unicyclic.hpp"

namespace kecore::cli {

using nlohmann::json;

namespace {

std::string set_text(const json& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i].get<std::string>();
  }
  return out + "}";
}

}  // namespace

json analyze(const Graph& g, const std::string& graph_id, const Budget& budget) {
  const auto shape = classify_shape(g);
  const auto a = alpha(g, budget);
  const auto m = maximum_matching(g);
  const auto c = core(g, budget);
  const auto r = corona(g, budget);
  const auto k = ker(g, budget);
  const auto d_c = critical_difference_fast(g, budget);
  const auto defect = static_cast<std::int64_t>(r.size() + c.size()) -
                      2 * static_cast<std::int64_t>(a);

  json report = {
      {"graph_id", graph_id},
      {"n", g.order()},
      {"m", g.size()},
      {"shape",
       {{"connected", shape.connected},
        {"kind", std::string(to_string(shape.kind))},
        {"bipartite", shape.bipartite}}},
      {"alpha", a},
      {"mu", m.size()},
      {"maximum_matching", m.labels()},
      {"ke", a + m.size() == g.order()},
      {"core", to_json(c)},
      {"corona", to_json(r)},
      {"ker", to_json(k)},
      {"d_c", d_c},
      {"sum_defect", defect},
      {"unicyclic", nullptr},
  };
  if (shape.kind == ShapeKind::unicyclic) {
    const auto dec = decompose(g);
    json cycle = json::array();
    for (Vertex v : dec.cycle) cycle.push_back(g.label(v));
    json pendants = json::array();
    for (const auto& p : dec.pendants) {
      pendants.push_back({{"x", g.label(p.root)},
                          {"anchor", g.label(p.anchor)},
                          {"vertices", p.tree.all_vertices().labels()},
                          {"alpha", alpha(p.tree, budget)},
                          {"core", to_json(core(p.tree, budget))},
                          {"corona", to_json(corona(p.tree, budget))}});
    }
    const auto ke = classify_ke_unicyclic(g, budget);
    report["unicyclic"] = {{"cycle", std::move(cycle)},
                           {"n1", to_json(dec.attachments)},
                           {"cycle_edges_alpha_critical", ke.cycle_edges_alpha_critical},
                           {"pendants", std::move(pendants)}};
  }
  return report;
}

std::string render_analysis(const json& report) {
  std::ostringstream out;
  const auto& shape = report["shape"];
  out << "graph: " << report["graph_id"].get<std::string>() << "\n";
  out << "n: " << report["n"] << "\n";
  out << "m: " << report["m"] << "\n";
  out << "shape: " << (shape["connected"].get<bool>() ? "connected" : "disconnected") << " "
      << shape["kind"].get<std::string>() << " "
      << (shape["bipartite"].get<bool>() ? "bipartite" : "non-bipartite") << "\n";
  out << "alpha: " << report["alpha"] << "\n";
  out << "mu: " << report["mu"] << "\n";
  out << "maximum_matching: " << set_text(report["maximum_matching"]) << "\n";
  out << "ke: " << (report["ke"].get<bool>() ? "true" : "false") << "\n";
  out << "core: " << set_text(report["core"]) << "\n";
  out << "corona: " << set_text(report["corona"]) << "\n";
  out << "ker: " << set_text(report["ker"]) << "\n";
  out << "d_c: " << report["d_c"] << "\n";
  out << "sum_defect: " << report["sum_defect"] << "\n";
  const auto& uni = report["unicyclic"];
  if (!uni.is_null()) {
    out << "cycle:";
    for (const auto& v : uni["cycle"]) out << " " << v.get<std::string>();
    out << "\n";
    out << "n1: " << set_text(uni["n1"]) << "\n";
    out << "cycle_edges_alpha_critical: "
        << (uni["cycle_edges_alpha_critical"].get<bool>() ? "true" : "false") << "\n";
    for (const auto& p : uni["pendants"]) {
      out << "pendant " << p["x"].get<std::string>() << ": anchor "
          << p["anchor"].get<std::string>() << ", vertices " << set_text(p["vertices"])
          << ", alpha " << p["alpha"] << ", core " << set_text(p["core"]) << ", corona "
          << set_text(p["corona"]) << "\n";
    }
  }
  return out.str();
}

}  // namespace kecore::cli
