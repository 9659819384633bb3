#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gn {

// Direct sum of line bundles O(a_1) + ... + O(a_k), twists kept sorted so
// equal bundles compare equal.
struct SplitBundle {
  std::vector<int> twists;

  SplitBundle() = default;
  explicit SplitBundle(std::vector<int> tw) : twists(std::move(tw)) {
    if (twists.empty()) throw std::invalid_argument("SplitBundle: rank must be >= 1");
    std::sort(twists.begin(), twists.end());
  }

  static SplitBundle trivial(int rank, int twist = 0) {
    return SplitBundle(std::vector<int>(rank, twist));
  }

  int rank() const { return static_cast<int>(twists.size()); }
  long long c1() const { return std::accumulate(twists.begin(), twists.end(), 0LL); }
  SplitBundle dual() const {
    std::vector<int> tw;
    tw.reserve(twists.size());
    for (int a : twists) tw.push_back(-a);
    return SplitBundle(std::move(tw));
  }
  bool operator==(const SplitBundle& o) const { return twists == o.twists; }
};

// The tangent bundle of P^r; only its Chern data is ever needed directly,
// matrix-level work goes through the Euler presentation.
struct TangentBundle {
  int r;
  bool operator==(const TangentBundle& o) const { return r == o.r; }
};

using BundleRef = std::variant<SplitBundle, TangentBundle>;

inline long long firstChern(const BundleRef& b, int r) {
  if (std::holds_alternative<SplitBundle>(b)) return std::get<SplitBundle>(b).c1();
  (void)r;
  return std::get<TangentBundle>(b).r + 1;
}

inline int bundleRank(const BundleRef& b) {
  if (std::holds_alternative<SplitBundle>(b)) return std::get<SplitBundle>(b).rank();
  return std::get<TangentBundle>(b).r;
}

SplitBundle parseTwistList(const std::string& s);
std::string bundleToString(const SplitBundle& b);

}  // namespace gn
