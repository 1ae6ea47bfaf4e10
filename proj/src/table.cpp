#include "ordmetric/table.hpp"

namespace ordmetric {

PointSpace::PointSpace(std::vector<std::string> points, const std::vector<std::string>& subset)
    : points_(std::move(points)), member_(points_.size(), false) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(points_[i], i).second) throw DomainError("duplicate point \"" + points_[i] + "\"");
  }
  for (const auto& label : subset) {
    const auto i = index(label);
    if (member_[i]) throw DomainError("point \"" + label + "\" listed twice in the subset");
    member_[i] = true;
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (member_[i]) subset_.push_back(i);
  }
}

std::optional<std::size_t> PointSpace::find(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PointSpace::index(const std::string& label) const {
  const auto i = find(label);
  if (!i) throw DomainError("unknown point \"" + label + "\"");
  return *i;
}

std::vector<std::string> PointSpace::subset_labels() const {
  std::vector<std::string> out;
  out.reserve(subset_.size());
  for (auto i : subset_) out.push_back(points_[i]);
  return out;
}

PointSpace PointSpace::subset_space() const {
  const auto labels = subset_labels();
  return PointSpace(labels, labels);
}

}  // namespace ordmetric
