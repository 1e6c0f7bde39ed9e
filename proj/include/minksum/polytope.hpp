#pragma once

#include "minksum/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

namespace minksum {

/// Coordinate-wise exact sum of two points of equal dimension.
inline Point point_add(const Point& p, const Point& q) {
  if (p.size() != q.size()) {
    std::ostringstream msg;
    msg << "point dimension mismatch: " << p.size() << " vs " << q.size();
    throw InvalidInput(msg.str());
  }
  return p + q;
}

namespace detail {

// Returns the indices of `points` in lexicographic order.
inline std::vector<Index> lex_order(const std::vector<Point>& points) {
  std::vector<Index> order(points.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return lex_less(points[a], points[b]); });
  return order;
}

// Returns {i, j} with i < j for some coordinate-equal pair, or nullopt-like {-1, -1}.
inline std::pair<Index, Index> find_duplicate(const std::vector<Point>& points) {
  const auto order = lex_order(points);
  for (std::size_t s = 1; s < order.size(); ++s) {
    if (points_equal(points[order[s - 1]], points[order[s]])) {
      const Index i = std::min(order[s - 1], order[s]);
      const Index j = std::max(order[s - 1], order[s]);
      return {i, j};
    }
  }
  return {-1, -1};
}

}  // namespace detail

/// A polytope described as the convex hull of a finite point list.
/// The points need not all be extreme; duplicates are rejected outright so
/// that index-based results stay unambiguous.
class VPolytope {
 public:
  VPolytope(Index dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ < 1) throw InvalidInput("polytope dimension must be positive");
    if (points_.empty()) throw InvalidInput("polytope needs at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].size() != dim_) {
        std::ostringstream msg;
        msg << "point " << i << " has " << points_[i].size() << " coordinates, expected " << dim_;
        throw InvalidInput(msg.str());
      }
    }
    const auto dup = detail::find_duplicate(points_);
    if (dup.first >= 0) {
      std::ostringstream msg;
      msg << "duplicate point: rows " << dup.first << " and " << dup.second
          << " are coordinate-wise equal";
      throw InvalidInput(msg.str());
    }
  }

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(Index i) const { return points_.at(static_cast<std::size_t>(i)); }

 private:
  Index dim_;
  std::vector<Point> points_;
};

/// One candidate for a vertex of A + B: operand indices plus their exact sum.
struct CandidatePair {
  Index u = 0;
  Index v = 0;
  Point sum;
};

/// All k*l candidate sums in row-major order (u outer, v inner). Pairs with
/// coordinate-equal sums are both kept; they are distinct candidates.
inline std::vector<CandidatePair> candidate_sums(const VPolytope& A, const VPolytope& B) {
  if (A.dim() != B.dim()) {
    std::ostringstream msg;
    msg << "operand dimension mismatch: " << A.dim() << " vs " << B.dim();
    throw InvalidInput(msg.str());
  }
  std::vector<CandidatePair> pairs;
  pairs.reserve(static_cast<std::size_t>(A.size()) * static_cast<std::size_t>(B.size()));
  for (Index u = 0; u < A.size(); ++u) {
    for (Index v = 0; v < B.size(); ++v) {
      pairs.push_back(CandidatePair{u, v, A.point(u) + B.point(v)});
    }
  }
  return pairs;
}

}  // namespace minksum
