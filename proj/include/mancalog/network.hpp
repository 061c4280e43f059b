#ifndef MANCALOG_NETWORK_HPP
#define MANCALOG_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mancalog {

using LabelId = int;
using NodeId = int;
// Components number nodes first, then edges: node v has id v, edge e has
// id num_nodes() + e.
using CompId = int;

/// The label set, partitioned into fluent and non-fluent labels.
class LabelRegistry {
public:
  // Returns the id of the label, adding it if new.  Returns nullopt if the
  // label already exists with the opposite fluency.
  std::optional<LabelId> add(const std::string& name, bool fluent);
  std::optional<LabelId> find(const std::string& name) const;

  bool is_fluent(LabelId id) const { return fluent_[id]; }
  const std::string& name(LabelId id) const { return names_[id]; }
  int size() const { return static_cast<int>(names_.size()); }

  bool operator==(const LabelRegistry& o) const {
    return names_ == o.names_ && fluent_ == o.fluent_;
  }

private:
  std::vector<std::string> names_;
  std::vector<bool> fluent_;
  std::unordered_map<std::string, LabelId> index_;
};

/// Directed graph; at most one edge per ordered node pair.
class Network {
public:
  // Returns the node index, or nullopt if the name is already taken.
  std::optional<NodeId> add_node(const std::string& name);
  // Returns the edge index, or nullopt for dangling endpoints, self loops
  // kept (the model allows them), or duplicate edges.
  std::optional<int> add_edge(NodeId from, NodeId to);

  std::optional<NodeId> find_node(const std::string& name) const;
  std::optional<int> find_edge(NodeId from, NodeId to) const;

  int num_nodes() const { return static_cast<int>(node_names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_components() const { return num_nodes() + num_edges(); }

  const std::string& node_name(NodeId v) const { return node_names_[v]; }
  const std::pair<NodeId, NodeId>& edge(int e) const { return edges_[e]; }

  CompId node_comp(NodeId v) const { return v; }
  CompId edge_comp(int e) const { return num_nodes() + e; }
  bool comp_is_node(CompId c) const { return c < num_nodes(); }
  NodeId comp_node(CompId c) const { return c; }
  int comp_edge(CompId c) const { return c - num_nodes(); }

  // "node:NAME" or "edge:FROM->TO"; the stable external component name.
  std::string comp_name(CompId c) const;

  // Inbound (source node, edge index) pairs of v.
  const std::vector<std::pair<NodeId, int>>& in_edges(NodeId v) const {
    return in_edges_[v];
  }
  int max_in_degree() const;

  bool operator==(const Network& o) const {
    return node_names_ == o.node_names_ && edges_ == o.edges_;
  }

private:
  std::vector<std::string> node_names_;
  std::unordered_map<std::string, NodeId> node_index_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::map<std::pair<NodeId, NodeId>, int> edge_index_;
  std::vector<std::vector<std::pair<NodeId, int>>> in_edges_;
};

}  // namespace mancalog

#endif
