#pragma once

#include <span>
#include <vector>

#include "convexchain/geometry.hpp"

namespace convexchain {

/// Point set inside a triangle, with stable integer identities (the index
/// into `points`). Points must lie in the closed triangle and may not
/// coincide with a vertex.
struct ChainInstance {
  ChainInstance(Triangle triangle, std::vector<Point> points);

  Triangle triangle;
  std::vector<Point> points;
};

/// Convex chain: indices into the instance's point list, ordered by
/// increasing x after mapping to standard position.
struct Chain {
  std::vector<int> indices;

  int length() const { return static_cast<int>(indices.size()); }
};

/// True iff the selected points, mapped to the standard triangle and sorted
/// by increasing x, have strictly increasing slopes along
/// p0 -> y1 -> ... -> yk -> p2. The empty selection is a chain of length 0.
/// Throws on duplicate indices.
bool isConvexChain(const ChainInstance& instance, std::span<const int> indices);

/// Per-point DP frontier: entry k holds the minimal last-segment slope over
/// chains of length k ending at the point, plus the predecessor identity
/// (-1 for the start vertex p0).
struct SlopeListEntry {
  double minSlope;
  int predecessor;
};

/// The DP state after processing every point, indexed like
/// instance.points. Exposed for validation; longestChainExact is the
/// user-facing entry.
std::vector<std::vector<SlopeListEntry>> computeSlopeLists(
    const ChainInstance& instance);

/// Longest convex chain by the quadratic slope-list dynamic program:
/// points are processed by increasing x, each point's frontier is built
/// from binary searches in its predecessors' frontiers, and the optimum is
/// read off against the closing segment to p2.
Chain longestChainExact(const ChainInstance& instance);

/// Exhaustive oracle over all subsets; at most 20 points. Ties are broken
/// toward the lexicographically smallest index list.
Chain longestChainBruteForce(const ChainInstance& instance);

/// Restricts the instance to points within halfWidth of the special
/// parabola (in standard position) and solves exactly on the survivors.
/// Always a valid chain of the original instance, never longer than the
/// exact optimum.
Chain longestChainBanded(const ChainInstance& instance, double halfWidth);

/// True iff every point is a vertex of the convex hull of the set (points
/// on an open hull edge disqualify the set).
bool isConvexPosition(std::span<const Point> points);

}  // namespace convexchain
