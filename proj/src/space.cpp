#include "ordmetric/space.hpp"

namespace ordmetric {

MetricTable<OrderPoint> m_s_table(const BottomedOrderedSet& S, const std::vector<std::string>& labels) {
  const PointSpace space(labels, labels);
  std::vector<OrderPoint> pos;
  pos.reserve(labels.size());
  for (const auto& l : labels) pos.push_back(OrderPoint{S.base().require(l)});
  Table<OrderPoint> t(space, OrderPoint{0});
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i != j) t.set(i, j, std::max(pos[i], pos[j]));
    }
  }
  return MetricTable<OrderPoint>::checked(std::move(t), Flavor::ultrametric);
}

}  // namespace ordmetric
