#include "output.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace raks::cli {

namespace {

using nlohmann::json;

const std::string& text_of(const SearchIndex& index, NodeId v) {
  const std::string& t = index.text.texts[v];
  return t.empty() ? index.graph.node_name(v) : t;
}

json node_json(const SearchIndex& index, NodeId v) {
  return {{"id", index.graph.node_name(v)}, {"text", text_of(index, v)}};
}

json echo_json(const QueryEcho& echo) {
  const SearchParams& p = echo.params;
  return {
      {"query", {{"central", echo.central}, {"marginal", echo.marginal}}},
      {"params",
       {{"alpha", echo.alpha},
        {"gamma", p.score.gamma},
        {"combination", to_string(p.score.combination)},
        {"topk", p.topk},
        {"beam", p.beam_width()},
        {"max_level", p.max_level},
        {"threads", p.threads},
        {"time_limit_s", p.time_limit_s},
        {"termination", to_string(p.termination)}}},
  };
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string edge_label(const SearchIndex& index, EdgeId e) {
  const OutEdge& edge = index.graph.edge(e);
  std::string label = index.graph.label_name(edge.label);
  if (edge.inverse) label += " (inv)";
  return label;
}

}  // namespace

const char* to_string(Combination c) {
  return c == Combination::additive ? "additive" : "multiplicative";
}

const char* to_string(Termination t) {
  return t == Termination::conservative ? "conservative" : "eager";
}

json result_document(const SearchIndex& index, const QueryEcho& echo,
                     const SearchOutput& output) {
  json doc = echo_json(echo);
  json results = json::array();
  for (const SearchResult& r : output.results) {
    json nodes = json::array();
    for (NodeId v : r.nodes) nodes.push_back(node_json(index, v));
    json edges = json::array();
    for (EdgeId e : r.edges) {
      const OutEdge& edge = index.graph.edge(e);
      edges.push_back({{"src", index.graph.node_name(index.graph.source(e))},
                       {"dst", index.graph.node_name(edge.target)},
                       {"label", index.graph.label_name(edge.label)},
                       {"inverse", edge.inverse},
                       {"fine_weight", index.weights.values[e]},
                       {"activation", index.activations.values[e]}});
    }
    results.push_back({{"rank", r.rank},
                       {"combined_score", r.combined_score},
                       {"central_score", r.central_score},
                       {"marginal_score", r.marginal_score ? json(*r.marginal_score) : json()},
                       {"tie_break", r.tie_break},
                       {"central_node", node_json(index, r.central_node)},
                       {"nodes", std::move(nodes)},
                       {"edges", std::move(edges)},
                       {"ptc", r.ptc}});
  }
  doc["results"] = std::move(results);
  doc["errors"] = json::array();
  doc["diagnostics"] = output.diagnostics;
  const SearchStats& s = output.stats;
  doc["stats"] = {{"central_levels", s.central_levels},
                  {"marginal_levels", s.marginal_levels},
                  {"central_seconds", s.central_seconds},
                  {"marginal_seconds", s.marginal_seconds},
                  {"central_graphs_identified", s.central_graphs_identified},
                  {"central_graphs_kept", s.central_graphs_kept},
                  {"rpgs_resolved", s.rpgs_resolved},
                  {"ptc_rejected", s.ptc_rejected},
                  {"central_stop", raks::to_string(s.central_stop)},
                  {"marginal_stop",
                   s.marginal_stop ? json(raks::to_string(*s.marginal_stop)) : json()}};
  return doc;
}

json error_document(const QueryEcho& echo, const std::vector<std::string>& errors) {
  json doc = echo_json(echo);
  doc["results"] = json::array();
  doc["errors"] = errors;
  return doc;
}

std::string to_dot(const SearchIndex& index, const std::vector<SearchResult>& results) {
  std::ostringstream out;
  for (const SearchResult& r : results) {
    out << "digraph result_" << r.rank << " {\n";
    out << "  label=" << dot_quote("rank " + std::to_string(r.rank) + ", score " +
                                   nlohmann::json(r.combined_score).dump())
        << ";\n";
    for (NodeId v : r.nodes) {
      out << "  " << dot_quote(index.graph.node_name(v)) << " [label=" << dot_quote(text_of(index, v));
      if (v == r.central_node) out << ", shape=doublecircle";
      if (std::binary_search(r.central_keyword_nodes.begin(), r.central_keyword_nodes.end(), v)) {
        out << ", style=filled";
      }
      out << "];\n";
    }
    for (EdgeId e : r.edges) {
      out << "  " << dot_quote(index.graph.node_name(index.graph.source(e))) << " -> "
          << dot_quote(index.graph.node_name(index.graph.edge(e).target))
          << " [label=" << dot_quote(edge_label(index, e)) << "];\n";
    }
    out << "}\n";
  }
  return out.str();
}

std::string to_text(const SearchIndex& index, const QueryEcho& echo, const SearchOutput& output) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) s += (s.empty() ? "" : ", ") + w;
    return s;
  };
  out << "central: " << join(echo.central) << "\n";
  if (!echo.marginal.empty()) out << "marginal: " << join(echo.marginal) << "\n";
  out << output.results.size() << " result(s)\n";
  for (const SearchResult& r : output.results) {
    out << "\n#" << r.rank << "  score " << r.combined_score << "  (central " << r.central_score;
    if (r.marginal_score) out << ", marginal " << *r.marginal_score;
    out << ", tie-break " << std::fixed << std::setprecision(4) << r.tie_break
        << std::defaultfloat << ")\n";
    out << "  central node: " << text_of(index, r.central_node) << " ["
        << index.graph.node_name(r.central_node) << "]\n";
    for (EdgeId e : r.edges) {
      out << "    " << index.graph.node_name(index.graph.source(e)) << " -" << edge_label(index, e)
          << "-> " << index.graph.node_name(index.graph.edge(e).target) << "  a="
          << index.activations.values[e] << "\n";
    }
  }
  for (const auto& d : output.diagnostics) out << "note: " << d << "\n";
  return out.str();
}

}  // namespace raks::cli
