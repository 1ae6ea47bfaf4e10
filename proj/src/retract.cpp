#include "ordmetric/retract.hpp"

namespace ordmetric {

void require_retraction(const Retraction& r, const PointSpace& space) {
  if (!(r.space == space)) throw DomainError("retraction lives on a different space");
  if (r.mapping.size() != space.size()) throw DomainError("retraction is not total");
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (r.mapping[x] >= space.size() || !space.in_subset(r.mapping[x])) {
      throw DomainError("retraction sends " + space.label(x) + " outside A");
    }
    if (space.in_subset(x) && r.mapping[x] != x) throw DomainError("retraction moves " + space.label(x) + " in A");
  }
}

}  // namespace ordmetric
