#include "mancalog/network.hpp"

#include <algorithm>

namespace mancalog {

std::optional<LabelId> LabelRegistry::add(const std::string& name, bool fluent) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    if (fluent_[it->second] != fluent) return std::nullopt;
    return it->second;
  }
  LabelId id = static_cast<LabelId>(names_.size());
  names_.push_back(name);
  fluent_.push_back(fluent);
  index_.emplace(name, id);
  return id;
}

std::optional<LabelId> LabelRegistry::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> Network::add_node(const std::string& name) {
  if (node_index_.count(name)) return std::nullopt;
  NodeId v = static_cast<NodeId>(node_names_.size());
  node_names_.push_back(name);
  node_index_.emplace(name, v);
  in_edges_.emplace_back();
  return v;
}

std::optional<int> Network::add_edge(NodeId from, NodeId to) {
  if (from < 0 || from >= num_nodes() || to < 0 || to >= num_nodes())
    return std::nullopt;
  auto key = std::make_pair(from, to);
  if (edge_index_.count(key)) return std::nullopt;
  int e = num_edges();
  edges_.push_back(key);
  edge_index_.emplace(key, e);
  in_edges_[to].emplace_back(from, e);
  return e;
}

std::optional<NodeId> Network::find_node(const std::string& name) const {
  auto it = node_index_.find(name);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Network::find_edge(NodeId from, NodeId to) const {
  auto it = edge_index_.find(std::make_pair(from, to));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::string Network::comp_name(CompId c) const {
  if (comp_is_node(c)) return "node:" + node_names_[c];
  const auto& [u, v] = edges_[comp_edge(c)];
  return "edge:" + node_names_[u] + "->" + node_names_[v];
}

int Network::max_in_degree() const {
  int m = 0;
  for (const auto& in : in_edges_) m = std::max(m, static_cast<int>(in.size()));
  return m;
}

}  // namespace mancalog
