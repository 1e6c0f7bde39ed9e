#pragma once

// Small builders shared by the test binaries.

#include <minksum/minksum.hpp>

#include <string>
#include <vector>

namespace test_util {

inline minksum::Point pt(const std::vector<long long>& coords) {
  minksum::Point p(static_cast<minksum::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    p(static_cast<minksum::Index>(i)) = minksum::Rational(coords[i]);
  }
  return p;
}

inline minksum::Point ptq(const std::vector<std::string>& coords) {
  minksum::Point p(static_cast<minksum::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    p(static_cast<minksum::Index>(i)) = minksum::parse_rational(coords[i]);
  }
  return p;
}

inline minksum::VPolytope poly(const std::vector<std::vector<long long>>& rows) {
  std::vector<minksum::Point> points;
  points.reserve(rows.size());
  for (const auto& row : rows) points.push_back(pt(row));
  return minksum::VPolytope(static_cast<minksum::Index>(rows.front().size()), std::move(points));
}

inline minksum::VPolytope polyq(const std::vector<std::vector<std::string>>& rows) {
  std::vector<minksum::Point> points;
  points.reserve(rows.size());
  for (const auto& row : rows) points.push_back(ptq(row));
  return minksum::VPolytope(static_cast<minksum::Index>(rows.front().size()), std::move(points));
}

inline minksum::Vector vec(const std::vector<std::string>& entries) { return ptq(entries); }

inline minksum::Matrix mat(const std::vector<std::vector<std::string>>& rows) {
  const auto r = static_cast<minksum::Index>(rows.size());
  const auto c = static_cast<minksum::Index>(rows.front().size());
  minksum::Matrix m(r, c);
  for (minksum::Index i = 0; i < r; ++i) {
    for (minksum::Index j = 0; j < c; ++j) {
      m(i, j) = minksum::parse_rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

// Set equality of point lists, ignoring order.
inline bool same_point_set(std::vector<minksum::Point> a, std::vector<minksum::Point> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), minksum::lex_less);
  std::sort(b.begin(), b.end(), minksum::lex_less);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!minksum::points_equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace test_util
