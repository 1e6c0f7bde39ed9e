#pragma once

#include "minksum/lp.hpp"
#include "minksum/polytope.hpp"
#include "minksum/types.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace minksum {

enum class Method { Separation, Uniqueness };

inline const char* to_string(Method m) {
  return m == Method::Separation ? "separation" : "uniqueness";
}

/// Hyperplane with ⟨gamma, p⟩ > gamma_uv for the tested point and
/// ⟨gamma, p⟩ <= gamma_uv for every other point. Proves extremeness.
struct SeparatingHyperplane {
  Vector gamma;
  Rational gamma_uv;
};

/// Second way of writing the tested sum as (convex combo of A's points) +
/// (convex combo of B's points). Proves the pair is not a vertex.
struct AlternativeDecomposition {
  Vector alpha;
  Vector beta;
};

/// Marker for a vertex verdict from the uniqueness test: the trivial
/// decomposition is the only one, there is no extra data to carry.
struct UniqueDecomposition {};

/// Convex weights over the other cloud points reproducing the tested point
/// (entry at the tested index is 0). Proves the point is not extreme.
struct ConvexCombinationWitness {
  Vector lambda;
};

using VertexCertificate = std::variant<SeparatingHyperplane, AlternativeDecomposition,
                                       UniqueDecomposition, ConvexCombinationWitness>;

/// Verdict for one point of a cloud, from the separation test.
struct PointVerdict {
  Index index = 0;
  bool is_vertex = false;
  Rational f_star{0};
  VertexCertificate certificate;
};

/// Verdict for one candidate pair (u, v).
struct PairVerdict {
  CandidatePair pair;
  bool is_vertex = false;
  Rational f_star{0};
  VertexCertificate certificate;
};

struct MinkowskiSumResult {
  VPolytope C;
  std::vector<PairVerdict> verdicts;                   // all k*l pairs, row-major
  std::vector<std::pair<Index, Index>> decomposition;  // (u, v) per vertex of C
};

namespace detail {

inline void validate_cloud(const std::vector<Point>& cloud, Index idx) {
  if (cloud.empty()) throw InvalidInput("point cloud is empty");
  const Index dim = cloud.front().size();
  if (dim < 1) throw InvalidInput("points must have dimension at least 1");
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (cloud[i].size() != dim) {
      std::ostringstream msg;
      msg << "cloud point " << i << " has dimension " << cloud[i].size() << ", expected " << dim;
      throw InvalidInput(msg.str());
    }
  }
  if (idx < 0 || idx >= static_cast<Index>(cloud.size())) {
    throw InvalidInput("cloud index out of range");
  }
}

}  // namespace detail

/// Inequality system of the separation test for cloud point `idx`: over the
/// free variables (gamma, gamma_uv), every other point must stay on the
/// nonpositive side while the tested point's slack is capped at 1.
/// Maximizing ⟨gamma, p_idx⟩ - gamma_uv then yields exactly 0 or 1.
inline InequalitySystem separation_system(const std::vector<Point>& cloud, Index idx) {
  detail::validate_cloud(cloud, idx);
  const Index N = static_cast<Index>(cloud.size());
  const Index n = cloud.front().size();

  InequalitySystem sys;
  sys.G = Matrix(N, n + 1);
  sys.h = Vector(N);
  for (Index j = 0; j < N; ++j) {
    for (Index t = 0; t < n; ++t) sys.G(j, t) = cloud[static_cast<std::size_t>(j)](t);
    sys.G(j, n) = -1;
    sys.h(j) = (j == idx) ? 1 : 0;
  }
  sys.objective = Vector(n + 1);
  for (Index t = 0; t < n; ++t) sys.objective(t) = cloud[static_cast<std::size_t>(idx)](t);
  sys.objective(n) = -1;
  return sys;
}

/// Standard-form LP of the uniqueness test for pair (u, v): weights
/// (alpha, beta) >= 0 with sum(alpha) = sum(beta) = 1 recombining a_u + b_v,
/// maximizing 2 - alpha_u - beta_v. The trivial decomposition makes it
/// feasible and the weight bounds make it bounded, so it always solves.
inline StandardFormLP uniqueness_lp(const VPolytope& A, const VPolytope& B, Index u, Index v) {
  if (A.dim() != B.dim()) {
    std::ostringstream msg;
    msg << "operand dimensions differ: " << A.dim() << " vs " << B.dim();
    throw InvalidInput(msg.str());
  }
  if (u < 0 || u >= A.size()) throw InvalidInput("index u out of range");
  if (v < 0 || v >= B.size()) throw InvalidInput("index v out of range");

  const Index n = A.dim();
  const Index k = A.size();
  const Index l = B.size();

  StandardFormLP lp;
  lp.A = Matrix::Zero(n + 2, k + l);
  for (Index i = 0; i < k; ++i) {
    for (Index t = 0; t < n; ++t) lp.A(t, i) = A.point(i)(t);
    lp.A(n, i) = 1;
  }
  for (Index j = 0; j < l; ++j) {
    for (Index t = 0; t < n; ++t) lp.A(t, k + j) = B.point(j)(t);
    lp.A(n + 1, k + j) = 1;
  }
  lp.b = Vector(n + 2);
  lp.b.head(n) = point_add(A.point(u), B.point(v));
  lp.b(n) = 1;
  lp.b(n + 1) = 1;
  lp.c = Vector::Zero(k + l);
  lp.c(u) = -1;
  lp.c(k + v) = -1;
  lp.objective_constant = 2;
  return lp;
}

/// Separation test: point `idx` is extreme in the cloud iff a strictly
/// separating hyperplane exists, i.e. iff the LP optimum is 1 rather than 0.
inline PointVerdict is_vertex_by_separation(const std::vector<Point>& cloud, Index idx) {
  const InequalitySystem sys = separation_system(cloud, idx);
  const StandardizedLP std_lp = from_inequalities(sys);
  const LPOutcome out = solve(std_lp);
  if (out.status != SolveStatus::Optimal) {
    throw InternalError("separation LP must be solvable (0 is feasible, 1 caps the objective)");
  }
  if (out.value != 0 && out.value != 1) {
    throw InternalError("separation LP optimum outside {0, 1}: " + format_rational(out.value));
  }

  PointVerdict verdict;
  verdict.index = idx;
  verdict.f_star = out.value;
  verdict.is_vertex = out.value > 0;
  if (verdict.is_vertex) {
    const Index n = cloud.front().size();
    const Vector y = std_lp.recover(out.solution);
    verdict.certificate = SeparatingHyperplane{y.head(n), y(n)};
  } else {
    verdict.certificate = ConvexCombinationWitness{out.duals};
  }
  return verdict;
}

/// Uniqueness test: the pair (u, v) gives a vertex of A + B iff no other
/// mixture of operand points reaches the same sum, i.e. iff the optimum of
/// the decomposition LP is exactly 0.
inline PairVerdict is_vertex_by_uniqueness(const VPolytope& A, const VPolytope& B, Index u,
                                           Index v) {
  const StandardFormLP lp = uniqueness_lp(A, B, u, v);
  const LPOutcome out = solve(lp);
  if (out.status != SolveStatus::Optimal) {
    std::ostringstream msg;
    msg << "uniqueness LP for pair (" << u << ", " << v << ") came back "
        << to_string(out.status) << "; the trivial decomposition should make it solvable";
    throw InternalError(msg.str());
  }
  if (out.value < 0 || out.value > 2) {
    throw InternalError("uniqueness LP optimum outside [0, 2]: " + format_rational(out.value));
  }

  const Index k = A.size();
  const Index l = B.size();
  PairVerdict verdict;
  verdict.pair = CandidatePair{u, v, point_add(A.point(u), B.point(v))};
  verdict.f_star = out.value;
  verdict.is_vertex = out.value == 0;
  if (verdict.is_vertex) {
    verdict.certificate = UniqueDecomposition{};
  } else {
    verdict.certificate = AlternativeDecomposition{out.solution.head(k), out.solution.tail(l)};
  }
  return verdict;
}

namespace detail {

// Runs fn(i) for i in [0, count), either inline or on `jobs` threads pulling
// indices from a shared counter. Results must be written to preassigned
// slots by the callers so the outcome is independent of scheduling.
template <typename Fn>
void for_each_index(Index count, int jobs, Fn&& fn) {
  if (jobs < 1) throw InvalidInput("worker count must be at least 1");
  const int workers = static_cast<int>(std::min<Index>(jobs, count));
  if (workers <= 1) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<Index> next{0};
  std::mutex err_mutex;
  std::exception_ptr error;
  auto body = [&]() {
    try {
      while (true) {
        const Index i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Classifies every candidate pair of A + B and assembles the vertex list.
/// Pair order (and therefore output order) is row-major in (u, v) no matter
/// how many workers run the classifications.
inline MinkowskiSumResult minkowski_sum(const VPolytope& A, const VPolytope& B,
                                        Method method = Method::Uniqueness, int jobs = 1) {
  const std::vector<CandidatePair> pairs = candidate_sums(A, B);
  const Index N = static_cast<Index>(pairs.size());
  std::vector<PairVerdict> verdicts(static_cast<std::size_t>(N));

  if (method == Method::Uniqueness) {
    detail::for_each_index(N, jobs, [&](Index i) {
      const CandidatePair& p = pairs[static_cast<std::size_t>(i)];
      verdicts[static_cast<std::size_t>(i)] = is_vertex_by_uniqueness(A, B, p.u, p.v);
    });
  } else {
    std::vector<Point> cloud;
    cloud.reserve(pairs.size());
    for (const CandidatePair& p : pairs) cloud.push_back(p.sum);
    detail::for_each_index(N, jobs, [&](Index i) {
      PointVerdict pv = is_vertex_by_separation(cloud, i);
      PairVerdict& out = verdicts[static_cast<std::size_t>(i)];
      out.pair = pairs[static_cast<std::size_t>(i)];
      out.is_vertex = pv.is_vertex;
      out.f_star = std::move(pv.f_star);
      out.certificate = std::move(pv.certificate);
    });
  }

  std::vector<Point> accepted;
  std::vector<std::pair<Index, Index>> decomposition;
  for (const PairVerdict& v : verdicts) {
    if (!v.is_vertex) continue;
    accepted.push_back(v.pair.sum);
    decomposition.emplace_back(v.pair.u, v.pair.v);
  }
  if (accepted.empty()) {
    throw InternalError("no pair accepted; at least the lexicographic minimum must be a vertex");
  }
  try {
    return MinkowskiSumResult{VPolytope(A.dim(), std::move(accepted)), std::move(verdicts),
                              std::move(decomposition)};
  } catch (const InvalidInput& e) {
    // Accepted sums can never collide (a vertex has one decomposition), so a
    // duplicate here is a classification bug, not bad input.
    throw InternalError(std::string("accepted vertex list is invalid: ") + e.what());
  }
}

struct ExtremePointsResult {
  std::vector<Point> kept;
  std::vector<PointVerdict> verdicts;
};

/// Drops every cloud point that is a convex combination of the others,
/// keeping input order.
inline ExtremePointsResult extreme_points(const std::vector<Point>& cloud) {
  detail::validate_cloud(cloud, 0);
  ExtremePointsResult result;
  result.verdicts.reserve(cloud.size());
  for (Index i = 0; i < static_cast<Index>(cloud.size()); ++i) {
    result.verdicts.push_back(is_vertex_by_separation(cloud, i));
    if (result.verdicts.back().is_vertex) {
      result.kept.push_back(cloud[static_cast<std::size_t>(i)]);
    }
  }
  return result;
}

namespace detail {

inline Rational cross2(const Point& o, const Point& a, const Point& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

}  // namespace detail

/// Monotone-chain convex hull in the plane over exact rationals. Returns the
/// extreme points only (no collinear interiors), counter-clockwise, starting
/// at the lexicographic minimum. Collinear input collapses to its endpoints.
inline std::vector<Point> convex_hull_2d(const std::vector<Point>& cloud) {
  detail::validate_cloud(cloud, 0);
  if (cloud.front().size() != 2) throw InvalidInput("hull oracle needs 2D points");

  std::vector<Point> pts = cloud;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), points_equal), pts.end());
  if (pts.size() <= 2) return pts;

  const std::size_t n = pts.size();
  std::vector<Point> hull(2 * n);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (h >= 2 && detail::cross2(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  const std::size_t lower = h + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (h >= lower && detail::cross2(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);  // last point repeats the first
  return hull;
}

/// Re-derives a point verdict from its certificate alone, by substitution.
inline bool check_point_certificate(const std::vector<Point>& cloud, const PointVerdict& verdict) {
  detail::validate_cloud(cloud, verdict.index);
  const Index N = static_cast<Index>(cloud.size());
  const Point& p = cloud[static_cast<std::size_t>(verdict.index)];

  if (const auto* sep = std::get_if<SeparatingHyperplane>(&verdict.certificate)) {
    if (!verdict.is_vertex || verdict.f_star <= 0) return false;
    if (sep->gamma.size() != p.size()) return false;
    if (sep->gamma.dot(p) - sep->gamma_uv != verdict.f_star) return false;
    for (Index j = 0; j < N; ++j) {
      if (j == verdict.index) continue;
      if (sep->gamma.dot(cloud[static_cast<std::size_t>(j)]) - sep->gamma_uv > 0) return false;
    }
    return true;
  }
  if (const auto* wit = std::get_if<ConvexCombinationWitness>(&verdict.certificate)) {
    if (verdict.is_vertex || verdict.f_star != 0) return false;
    if (wit->lambda.size() != N) return false;
    Rational total{0};
    Vector mix = Vector::Zero(p.size());
    for (Index j = 0; j < N; ++j) {
      const Rational& w = wit->lambda(j);
      if (w < 0) return false;
      if (j == verdict.index && w != 0) return false;
      total += w;
      mix += w * cloud[static_cast<std::size_t>(j)];
    }
    return total == 1 && points_equal(mix, p);
  }
  return false;  // remaining certificate kinds never apply to point verdicts
}

/// Re-derives a pair verdict from its certificate alone, by substitution.
inline bool check_pair_certificate(const VPolytope& A, const VPolytope& B,
                                   const PairVerdict& verdict) {
  const Index k = A.size();
  const Index l = B.size();
  const Index u = verdict.pair.u;
  const Index v = verdict.pair.v;
  if (A.dim() != B.dim() || u < 0 || u >= k || v < 0 || v >= l) return false;
  const Point sum = point_add(A.point(u), B.point(v));
  if (!points_equal(sum, verdict.pair.sum)) return false;

  if (const auto* sep = std::get_if<SeparatingHyperplane>(&verdict.certificate)) {
    if (!verdict.is_vertex || verdict.f_star <= 0) return false;
    if (sep->gamma.size() != A.dim()) return false;
    if (sep->gamma.dot(sum) - sep->gamma_uv != verdict.f_star) return false;
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < l; ++j) {
        if (i == u && j == v) continue;
        const Point other = point_add(A.point(i), B.point(j));
        if (sep->gamma.dot(other) - sep->gamma_uv > 0) return false;
      }
    }
    return true;
  }
  if (const auto* alt = std::get_if<AlternativeDecomposition>(&verdict.certificate)) {
    if (verdict.is_vertex || verdict.f_star <= 0) return false;
    if (alt->alpha.size() != k || alt->beta.size() != l) return false;
    Rational alpha_total{0}, beta_total{0};
    Vector mix = Vector::Zero(A.dim());
    for (Index i = 0; i < k; ++i) {
      if (alt->alpha(i) < 0) return false;
      alpha_total += alt->alpha(i);
      mix += alt->alpha(i) * A.point(i);
    }
    for (Index j = 0; j < l; ++j) {
      if (alt->beta(j) < 0) return false;
      beta_total += alt->beta(j);
      mix += alt->beta(j) * B.point(j);
    }
    if (alpha_total != 1 || beta_total != 1) return false;
    if (!points_equal(mix, sum)) return false;
    return Rational(2) - alt->alpha(u) - alt->beta(v) == verdict.f_star;
  }
  if (std::get_if<UniqueDecomposition>(&verdict.certificate) != nullptr) {
    return verdict.is_vertex && verdict.f_star == 0;
  }
  if (const auto* wit = std::get_if<ConvexCombinationWitness>(&verdict.certificate)) {
    // Weights refer to the row-major candidate cloud of all k*l sums.
    if (verdict.is_vertex || verdict.f_star != 0) return false;
    if (wit->lambda.size() != k * l) return false;
    const Index self = u * l + v;
    Rational total{0};
    Vector mix = Vector::Zero(A.dim());
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < l; ++j) {
        const Rational& w = wit->lambda(i * l + j);
        if (w < 0) return false;
        if (i * l + j == self && w != 0) return false;
        if (w == 0) continue;
        total += w;
        mix += w * point_add(A.point(i), B.point(j));
      }
    }
    return total == 1 && points_equal(mix, sum);
  }
  return false;
}

}  // namespace minksum
