#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ordmetric/element.hpp"
#include "ordmetric/extend.hpp"
#include "ordmetric/table.hpp"

namespace ordmetric {

/// Seeded generator with a bounded draw that is identical on every platform
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Labels prefix0, prefix1, ...
std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n);

/// A random nonempty subset of the labels, in label order.
std::vector<std::string> random_subset(Rng& rng, const std::vector<std::string>& labels);

/// `points` distinct root-to-leaf paths in a tree of the given depth. The
/// branching factor is the least b >= 2 with b^depth >= points, plus one.
std::vector<std::vector<std::size_t>> random_paths(Rng& rng, std::size_t points, std::size_t depth);

/// d(x,y) = levels[ℓ] where ℓ is the length of the common prefix of the paths
/// of x and y. `levels` must be strictly descending and positive, with at
/// least depth entries.
MetricTable<Element> tree_ultrametric(const PointSpace& space, const std::vector<std::vector<std::size_t>>& paths,
                                      const std::vector<Element>& levels);

/// Strictly descending dyadic levels 2^-e, with e starting in [-1,1] and
/// growing by 1 or 2 per level.
std::vector<Element> random_dyadic_levels(Rng& rng, std::size_t depth);

/// A rational dyadic ultrametric on points x0..x{n-1} with a random nonempty
/// subset.
MetricTable<Element> random_ultrametric(Rng& rng, std::size_t points, std::size_t depth);

/// An ultrametric on `space` whose values are drawn from `levels` (strictly
/// descending): a random tree of depth min(levels.size(), 3) with a random
/// increasing choice of levels.
MetricTable<Element> random_ultrametric_on(Rng& rng, const PointSpace& space, const std::vector<Element>& levels);

/// A rational extension problem: an ultrametric h on X with values in the
/// chain, and an ultrametric d on A whose values all lie above the last
/// chain entry.
struct ExtensionInstance {
  MetricTable<Element> h;
  MetricTable<Element> d;
  GaugeChain chain;
};

/// X has between 1 and max_points points (at least 1) and a random nonempty
/// subset; chain entries are dyadic.
ExtensionInstance random_extension_instance(Rng& rng, std::size_t max_points);

/// Another ultrametric on A, fit for the same instance.
MetricTable<Element> random_partner(Rng& rng, const ExtensionInstance& inst);

}  // namespace ordmetric
