#include "mancalog/interpretation.hpp"

#include <algorithm>

namespace mancalog {

namespace {
const Bound kFull = Bound::full();

auto lower_bound_entry(std::vector<std::pair<LabelId, Bound>>& v, LabelId label) {
  return std::lower_bound(v.begin(), v.end(), label,
                          [](const auto& e, LabelId l) { return e.first < l; });
}
}  // namespace

const Bound& World::get(LabelId label) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const auto& e, LabelId l) { return e.first < l; });
  if (it == entries_.end() || it->first != label) return kFull;
  return it->second;
}

void World::set(LabelId label, const Bound& b) {
  auto it = lower_bound_entry(entries_, label);
  if (b.is_full()) {
    if (it != entries_.end() && it->first == label) entries_.erase(it);
    return;
  }
  if (it != entries_.end() && it->first == label) {
    it->second = b;
  } else {
    entries_.insert(it, {label, b});
  }
}

}  // namespace mancalog
