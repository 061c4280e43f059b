#ifndef MANCALOG_INTERPRETATION_HPP
#define MANCALOG_INTERPRETATION_HPP

#include <vector>

#include "mancalog/bound.hpp"
#include "mancalog/network.hpp"

namespace mancalog {

/// Per-component, per-time label assignment.  Absent labels denote [0,1];
/// setting a label to [0,1] removes the entry, so equality is structural.
class World {
public:
  const Bound& get(LabelId label) const;
  void set(LabelId label, const Bound& b);
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<LabelId, Bound>>& entries() const { return entries_; }

  bool operator==(const World&) const = default;

private:
  std::vector<std::pair<LabelId, Bound>> entries_;  // sorted by label
};

/// Time-indexed map from components to worlds.  Defaults to the bottom
/// interpretation (everything [0,1]).
class Interpretation {
public:
  Interpretation() = default;
  Interpretation(int t_max, int num_components)
      : t_max_(t_max),
        num_comps_(num_components),
        worlds_(static_cast<size_t>(t_max + 1) * num_components) {}

  int t_max() const { return t_max_; }
  int num_components() const { return num_comps_; }

  World& world(int t, CompId c) { return worlds_[index(t, c)]; }
  const World& world(int t, CompId c) const { return worlds_[index(t, c)]; }

  const Bound& get(int t, CompId c, LabelId label) const {
    return worlds_[index(t, c)].get(label);
  }
  void set(int t, CompId c, LabelId label, const Bound& b) {
    worlds_[index(t, c)].set(label, b);
  }

  bool operator==(const Interpretation&) const = default;

private:
  size_t index(int t, CompId c) const {
    return static_cast<size_t>(t) * num_comps_ + c;
  }
  int t_max_ = 0;
  int num_comps_ = 0;
  std::vector<World> worlds_;
};

}  // namespace mancalog

#endif
