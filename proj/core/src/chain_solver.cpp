#include "convexchain/chain_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace convexchain {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct StandardInstance {
  std::vector<double> xs, ys;   // mapped coordinates, sorted
  std::vector<int> original;    // sorted position -> original identity
};

// Map to standard position and sort by increasing x, ties by decreasing y
// (two points with equal x can never share a chain).
StandardInstance toStandardSorted(const ChainInstance& instance) {
  const AffineMap toStd = mapToStandard(instance.triangle);
  const int n = static_cast<int>(instance.points.size());
  std::vector<Point> mapped(n);
  for (int i = 0; i < n; ++i) mapped[i] = toStd(instance.points[i]);

  StandardInstance out;
  out.original.resize(n);
  std::iota(out.original.begin(), out.original.end(), 0);
  std::sort(out.original.begin(), out.original.end(), [&](int a, int b) {
    if (mapped[a].x != mapped[b].x) return mapped[a].x < mapped[b].x;
    return mapped[a].y > mapped[b].y;
  });
  out.xs.resize(n);
  out.ys.resize(n);
  for (int i = 0; i < n; ++i) {
    out.xs[i] = mapped[out.original[i]].x;
    out.ys[i] = mapped[out.original[i]].y;
  }
  return out;
}

// Frontier lists in sorted-position space; entry k-1 holds the minimal
// last-segment slope of length-k chains and the sorted position of the
// predecessor (-1 for the start vertex p0).
std::vector<std::vector<SlopeListEntry>> solveLists(
    const StandardInstance& si) {
  const int n = static_cast<int>(si.xs.size());
  std::vector<std::vector<SlopeListEntry>> lists(n);

  std::vector<double> candSlope(n + 2, kInf);
  std::vector<int> candPred(n + 2, -1);

  for (int i = 0; i < n; ++i) {
    const double qx = si.xs[i];
    const double qy = si.ys[i];
    int maxReach = 1;
    for (int j = 0; j < i; ++j) {
      // All usable slopes are negative: the closing segment to p2=(1,0)
      // has slope <= 0 and slopes increase along a chain.
      if (si.ys[j] <= qy || si.xs[j] == qx) continue;
      const auto& lj = lists[j];
      if (lj.empty()) continue;
      const double s = (qy - si.ys[j]) / (qx - si.xs[j]);
      // Largest k with lj[k-1].minSlope < s.
      int lo = 0, hi = static_cast<int>(lj.size());
      while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (lj[mid].minSlope < s)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (lo == 0) continue;
      const int reach = lo + 1;  // extend the length-lo chain at j
      if (s < candSlope[reach]) {
        candSlope[reach] = s;
        candPred[reach] = j;
        maxReach = std::max(maxReach, reach);
      }
    }

    auto& li = lists[i];
    if (qx > 0.0 && qy < 1.0) {
      // Length-1 chain p0 -> q.
      li.push_back({(qy - 1.0) / qx, -1});
      // A chain of length k reachable with slope s is also reachable at
      // every shorter length with the same slope: suffix minima.
      double run = kInf;
      int runPred = -1;
      std::vector<SlopeListEntry> tail;
      for (int k = maxReach; k >= 2; --k) {
        if (candSlope[k] < run) {
          run = candSlope[k];
          runPred = candPred[k];
        }
        if (run < kInf) tail.push_back({run, runPred});
      }
      li.insert(li.end(), tail.rbegin(), tail.rend());
    }
    for (int k = 2; k <= maxReach; ++k) {
      candSlope[k] = kInf;
      candPred[k] = -1;
    }
  }
  return lists;
}

Chain readOptimum(const StandardInstance& si,
                  const std::vector<std::vector<SlopeListEntry>>& lists) {
  const int n = static_cast<int>(si.xs.size());
  int bestLen = 0, bestAt = -1;
  for (int i = 0; i < n; ++i) {
    const auto& li = lists[i];
    if (li.empty() || si.xs[i] == 1.0) continue;
    const double closing = (0.0 - si.ys[i]) / (1.0 - si.xs[i]);
    int lo = 0, hi = static_cast<int>(li.size());
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (li[mid].minSlope < closing)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo > bestLen) {
      bestLen = lo;
      bestAt = i;
    }
  }

  Chain chain;
  chain.indices.resize(bestLen);
  int cur = bestAt, len = bestLen;
  while (cur >= 0) {
    chain.indices[len - 1] = si.original[cur];
    cur = lists[cur][len - 1].predecessor;
    --len;
  }
  return chain;
}

}  // namespace

ChainInstance::ChainInstance(Triangle tri, std::vector<Point> pts)
    : triangle(tri), points(std::move(pts)) {
  for (const Point& p : points) {
    if (!triangle.contains(p, 1e-9)) {
      throw std::invalid_argument(
          "ChainInstance: point outside the triangle");
    }
    if (p == triangle.v0() || p == triangle.v1() || p == triangle.v2()) {
      throw std::invalid_argument(
          "ChainInstance: point coincides with a triangle vertex");
    }
  }
}

bool isConvexChain(const ChainInstance& instance,
                   std::span<const int> indices) {
  std::vector<int> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw std::invalid_argument("isConvexChain: duplicate indices");
  }
  for (int i : idx) {
    if (i < 0 || i >= static_cast<int>(instance.points.size())) {
      throw std::out_of_range("isConvexChain: index out of range");
    }
  }
  if (idx.empty()) return true;

  const AffineMap toStd = mapToStandard(instance.triangle);
  std::vector<Point> pts;
  pts.reserve(idx.size() + 2);
  pts.push_back({0.0, 1.0});
  for (int i : idx) pts.push_back(toStd(instance.points[i]));
  std::sort(pts.begin() + 1, pts.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  pts.push_back({1.0, 0.0});

  double prev = -kInf;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].x == pts[i + 1].x) return false;
    const double s = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
    if (!(s > prev)) return false;
    prev = s;
  }
  return true;
}

std::vector<std::vector<SlopeListEntry>> computeSlopeLists(
    const ChainInstance& instance) {
  const StandardInstance si = toStandardSorted(instance);
  auto lists = solveLists(si);
  // Re-index to original identities.
  const int n = static_cast<int>(si.xs.size());
  std::vector<std::vector<SlopeListEntry>> out(n);
  for (int i = 0; i < n; ++i) {
    auto& entries = lists[i];
    for (auto& e : entries) {
      if (e.predecessor >= 0) e.predecessor = si.original[e.predecessor];
    }
    out[si.original[i]] = std::move(entries);
  }
  return out;
}

Chain longestChainExact(const ChainInstance& instance) {
  if (instance.points.empty()) return {};
  const StandardInstance si = toStandardSorted(instance);
  const auto lists = solveLists(si);
  return readOptimum(si, lists);
}

Chain longestChainBruteForce(const ChainInstance& instance) {
  const int n = static_cast<int>(instance.points.size());
  if (n > 20) {
    throw std::invalid_argument("longestChainBruteForce: more than 20 points");
  }
  const AffineMap toStd = mapToStandard(instance.triangle);
  std::vector<Point> mapped(n);
  for (int i = 0; i < n; ++i) mapped[i] = toStd(instance.points[i]);

  Chain best;
  std::vector<int> bestSortedIds;
  std::vector<int> idx;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < static_cast<int>(best.indices.size())) continue;
    idx.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    if (!isConvexChain(instance, idx)) continue;
    if (size > static_cast<int>(best.indices.size()) ||
        (size == static_cast<int>(best.indices.size()) &&
         idx < bestSortedIds)) {
      bestSortedIds = idx;
      // Report in chain order (increasing mapped x).
      std::sort(idx.begin(), idx.end(),
                [&](int a, int b) { return mapped[a].x < mapped[b].x; });
      best.indices = idx;
    }
  }
  return best;
}

Chain longestChainBanded(const ChainInstance& instance, double halfWidth) {
  if (!(halfWidth > 0.0)) {
    throw std::invalid_argument("longestChainBanded: halfWidth must be > 0");
  }
  const AffineMap toStd = mapToStandard(instance.triangle);
  std::vector<Point> kept;
  std::vector<int> keptIds;
  for (int i = 0; i < static_cast<int>(instance.points.size()); ++i) {
    if (distanceToParabolaArc(toStd(instance.points[i])) <= halfWidth) {
      kept.push_back(instance.points[i]);
      keptIds.push_back(i);
    }
  }
  ChainInstance sub(instance.triangle, std::move(kept));
  Chain chain = longestChainExact(sub);
  for (int& id : chain.indices) id = keptIds[id];
  return chain;
}

bool isConvexPosition(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return false;
  if (n < 3) return true;

  // Andrew monotone chain, strict turns only: collinear points get popped
  // and the hull ends up with fewer than n vertices.
  const auto build = [&](int orient) {
    std::vector<Point> hull;
    for (const Point& p : pts) {
      while (hull.size() >= 2 &&
             orientation(hull[hull.size() - 2], hull.back(), p) != orient) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    return hull;
  };
  const auto lower = build(+1);
  std::reverse(pts.begin(), pts.end());
  const auto upper = build(+1);
  const int hullVertices =
      static_cast<int>(lower.size() + upper.size()) - 2;
  return hullVertices == n;
}

}  // namespace convexchain
