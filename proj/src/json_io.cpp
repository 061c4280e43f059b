#include "mancalog/json_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace mancalog {

namespace {
using nlohmann::json;

void fail(std::vector<Diagnostic>& diags, const std::string& file, std::string msg) {
  diags.push_back({file, 0, 0, std::move(msg)});
}

}  // namespace

LoadResult load_network(const std::string& json_text, const std::string& file) {
  LoadResult res;
  json j = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    fail(res.diagnostics, file, "malformed JSON");
    return res;
  }
  if (!j.is_object()) {
    fail(res.diagnostics, file, "network file must be a JSON object");
    return res;
  }
  NetworkData data;
  if (j.contains("t_max")) {
    if (!j["t_max"].is_number_integer() || j["t_max"].get<int>() < 0) {
      fail(res.diagnostics, file, "t_max: must be a non-negative integer");
      return res;
    }
    data.t_max = j["t_max"].get<int>();
  }
  for (const char* key : {"fluent", "nonfluent"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) {
      fail(res.diagnostics, file, std::string(key) + ": must be an array of label names");
      return res;
    }
    for (const auto& item : j[key]) {
      if (!item.is_string()) {
        fail(res.diagnostics, file, std::string(key) + ": labels must be strings");
        return res;
      }
      if (!data.registry.add(item.get<std::string>(), std::string(key) == "fluent")) {
        fail(res.diagnostics, file,
             "label '" + item.get<std::string>() + "' listed as both fluent and non-fluent");
        return res;
      }
    }
  }
  if (!j.contains("nodes") || !j["nodes"].is_array()) {
    fail(res.diagnostics, file, "nodes: required array of node ids");
    return res;
  }
  for (const auto& item : j["nodes"]) {
    if (!item.is_string()) {
      fail(res.diagnostics, file, "nodes: ids must be strings");
      return res;
    }
    if (!data.network.add_node(item.get<std::string>())) {
      fail(res.diagnostics, file, "nodes: duplicate node '" + item.get<std::string>() + "'");
      return res;
    }
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      fail(res.diagnostics, file, "edges: must be an array of [from,to] pairs");
      return res;
    }
    for (const auto& item : j["edges"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
          !item[1].is_string()) {
        fail(res.diagnostics, file, "edges: each entry must be a [from,to] string pair");
        return res;
      }
      auto from = data.network.find_node(item[0].get<std::string>());
      auto to = data.network.find_node(item[1].get<std::string>());
      if (!from || !to) {
        fail(res.diagnostics, file,
             "edges: dangling endpoint in [" + item[0].get<std::string>() + "," +
                 item[1].get<std::string>() + "]");
        return res;
      }
      if (!data.network.add_edge(*from, *to)) {
        fail(res.diagnostics, file,
             "edges: duplicate edge [" + item[0].get<std::string>() + "," +
                 item[1].get<std::string>() + "]");
        return res;
      }
    }
  }
  res.data = std::move(data);
  return res;
}

namespace {

struct Row {
  int t;
  std::string comp;
  std::string label;
  std::string bound;
};

std::vector<Row> timeline_rows(const Interpretation& i, const Program& p,
                               bool sparse) {
  std::vector<Row> rows;
  for (int t = 0; t <= i.t_max(); ++t) {
    for (CompId c = 0; c < i.num_components(); ++c) {
      if (sparse) {
        for (const auto& [l, b] : i.world(t, c).entries())
          rows.push_back({t, p.network.comp_name(c), p.registry.name(l), b.to_string()});
      } else {
        for (LabelId l = 0; l < p.registry.size(); ++l)
          rows.push_back({t, p.network.comp_name(c), p.registry.name(l),
                          i.get(t, c, l).to_string()});
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.t, a.comp, a.label) < std::tie(b.t, b.comp, b.label);
  });
  return rows;
}

}  // namespace

std::string export_timeline(const Interpretation& i, const Program& p,
                            TimelineFormat format, bool sparse) {
  auto rows = timeline_rows(i, p, sparse);
  if (format == TimelineFormat::Csv) {
    std::ostringstream os;
    os << "t,component,label,bound\n";
    for (const Row& r : rows)
      os << r.t << "," << r.comp << "," << r.label << ",\"" << r.bound << "\"\n";
    return os.str();
  }
  json out = json::object();
  out["t_max"] = i.t_max();
  json arr = json::array();
  for (const Row& r : rows) {
    arr.push_back(json{{"t", r.t}, {"component", r.comp}, {"label", r.label},
                       {"bound", r.bound}});
  }
  out["rows"] = std::move(arr);
  return out.dump(2) + "\n";
}

std::optional<Interpretation> import_timeline_csv(const std::string& csv,
                                                  const Program& p,
                                                  std::string* error) {
  auto set_error = [&](const std::string& msg) {
    if (error) *error = msg;
    return std::nullopt;
  };
  Interpretation out(p.t_max, p.network.num_components());
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "t,component,label,bound")
    return set_error("missing or malformed header");
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto bad = [&] { return set_error("line " + std::to_string(lineno) + ": malformed row"); };
    size_t c1 = line.find(',');
    if (c1 == std::string::npos) return bad();
    size_t c2 = line.find(',', c1 + 1);
    if (c2 == std::string::npos) return bad();
    size_t c3 = line.find(',', c2 + 1);
    if (c3 == std::string::npos) return bad();
    int t;
    try {
      t = std::stoi(line.substr(0, c1));
    } catch (...) {
      return bad();
    }
    if (t < 0 || t > p.t_max) return bad();
    std::string comp = line.substr(c1 + 1, c2 - c1 - 1);
    std::string label = line.substr(c2 + 1, c3 - c2 - 1);
    std::string bound_text = line.substr(c3 + 1);
    if (bound_text.size() >= 2 && bound_text.front() == '"' && bound_text.back() == '"')
      bound_text = bound_text.substr(1, bound_text.size() - 2);
    auto bound = parse_bound_text(bound_text);
    if (!bound) return bad();
    auto l = p.registry.find(label);
    if (!l) return set_error("line " + std::to_string(lineno) + ": unknown label '" + label + "'");
    CompId comp_id = -1;
    if (comp.rfind("node:", 0) == 0) {
      auto v = p.network.find_node(comp.substr(5));
      if (v) comp_id = p.network.node_comp(*v);
    } else if (comp.rfind("edge:", 0) == 0) {
      auto arrow = comp.find("->");
      if (arrow != std::string::npos) {
        auto u = p.network.find_node(comp.substr(5, arrow - 5));
        auto v = p.network.find_node(comp.substr(arrow + 2));
        if (u && v) {
          auto e = p.network.find_edge(*u, *v);
          if (e) comp_id = p.network.edge_comp(*e);
        }
      }
    }
    if (comp_id < 0)
      return set_error("line " + std::to_string(lineno) + ": unknown component '" + comp + "'");
    out.set(t, comp_id, *l, *bound);
  }
  return out;
}

}  // namespace mancalog
