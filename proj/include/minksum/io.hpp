#pragma once

#include "minksum/minkowski.hpp"
#include "minksum/polytope.hpp"
#include "minksum/types.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minksum {

enum class Format { Text, Structured };

inline const char* to_string(Format f) { return f == Format::Text ? "text" : "structured"; }

inline Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "structured") return Format::Structured;
  throw InvalidInput("unknown format '" + std::string(name) + "', expected text or structured");
}

inline Method parse_method(std::string_view name) {
  if (name == "separation") return Method::Separation;
  if (name == "uniqueness") return Method::Uniqueness;
  throw InvalidInput("unknown method '" + std::string(name) +
                     "', expected separation or uniqueness");
}

namespace detail {

inline bool parse_size_token(const std::string& token, Index& out) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size() || value < 1) return false;
    out = static_cast<Index>(value);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

inline VPolytope parse_plain_polytope(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Index line_no = 0;
  Index dim = -1, count = -1;
  std::vector<Point> points;

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;

    std::ostringstream at;
    at << "line " << line_no << ": ";
    if (dim < 0) {
      if (tokens.size() != 2 || !parse_size_token(tokens[0], dim) ||
          !parse_size_token(tokens[1], count)) {
        throw ParseError(at.str() + "expected header 'dim count' with two positive integers");
      }
      continue;
    }
    if (static_cast<Index>(points.size()) == count) {
      throw ParseError(at.str() + "extra row after the declared " + std::to_string(count) +
                       " points");
    }
    if (static_cast<Index>(tokens.size()) != dim) {
      throw ParseError(at.str() + "expected " + std::to_string(dim) + " coordinates, got " +
                       std::to_string(tokens.size()));
    }
    Point p(dim);
    for (Index t = 0; t < dim; ++t) {
      try {
        p(t) = parse_rational(tokens[static_cast<std::size_t>(t)]);
      } catch (const ParseError& e) {
        throw ParseError(at.str() + e.what());
      }
    }
    points.push_back(std::move(p));
  }

  if (dim < 0) throw ParseError("no header line found");
  if (static_cast<Index>(points.size()) != count) {
    std::ostringstream msg;
    msg << "declared " << count << " points but found " << points.size();
    throw ParseError(msg.str());
  }
  try {
    return VPolytope(dim, std::move(points));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

inline Rational parse_json_coordinate(const nlohmann::json& value, Index row, Index col) {
  std::ostringstream at;
  at << "points[" << row << "][" << col << "]: ";
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(at.str() + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
  if (value.is_number_float()) {
    throw ParseError(at.str() + "write non-integer coordinates as strings, e.g. \"1/4\"");
  }
  throw ParseError(at.str() + "expected a string or an integer");
}

inline VPolytope parse_structured_polytope(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object with keys dim and points");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("missing or non-integer key 'dim'");
  }
  const long long dim_ll = doc["dim"].get<long long>();
  if (dim_ll < 1) throw ParseError("'dim' must be at least 1");
  const Index dim = static_cast<Index>(dim_ll);
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("missing or non-array key 'points'");
  }

  std::vector<Point> points;
  Index row = 0;
  for (const auto& row_json : doc["points"]) {
    if (!row_json.is_array() || static_cast<Index>(row_json.size()) != dim) {
      std::ostringstream msg;
      msg << "points[" << row << "]: expected an array of " << dim << " coordinates";
      throw ParseError(msg.str());
    }
    Point p(dim);
    for (Index t = 0; t < dim; ++t) {
      p(t) = parse_json_coordinate(row_json[static_cast<std::size_t>(t)], row, t);
    }
    points.push_back(std::move(p));
    ++row;
  }
  if (points.empty()) throw ParseError("'points' must not be empty");
  try {
    return VPolytope(dim, std::move(points));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

/// Reads a polytope from either format. A document whose first non-space
/// character is '{' is treated as structured JSON, anything else as the
/// plain "dim count + rows" text form with '#' comments.
inline VPolytope parse_polytope(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return detail::parse_structured_polytope(text);
    break;
  }
  return detail::parse_plain_polytope(text);
}

inline std::string format_polytope(const VPolytope& P, Format format = Format::Text) {
  if (format == Format::Text) {
    std::ostringstream out;
    out << P.dim() << ' ' << P.size() << '\n';
    for (Index i = 0; i < P.size(); ++i) {
      for (Index t = 0; t < P.dim(); ++t) {
        if (t > 0) out << ' ';
        out << format_rational(P.point(i)(t));
      }
      out << '\n';
    }
    return out.str();
  }
  nlohmann::ordered_json doc;
  doc["dim"] = P.dim();
  auto& rows = doc["points"] = nlohmann::ordered_json::array();
  for (Index i = 0; i < P.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Index t = 0; t < P.dim(); ++t) row.push_back(format_rational(P.point(i)(t)));
    rows.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

struct SumStats {
  Index k = 0;
  Index l = 0;
  Index candidates = 0;
  Index accepted = 0;
  Method method = Method::Uniqueness;
  double elapsed_seconds = 0.0;  // informational only, never emitted
};

struct SumReport {
  VPolytope vertices;
  std::vector<std::pair<Index, Index>> decompositions;
  SumStats stats;
};

inline SumReport make_report(const VPolytope& A, const VPolytope& B,
                             const MinkowskiSumResult& result, Method method,
                             double elapsed_seconds = 0.0) {
  SumStats stats;
  stats.k = A.size();
  stats.l = B.size();
  stats.candidates = A.size() * B.size();
  stats.accepted = result.C.size();
  stats.method = method;
  stats.elapsed_seconds = elapsed_seconds;
  if (stats.accepted != static_cast<Index>(result.decomposition.size())) {
    throw InternalError("vertex list and decomposition list disagree in length");
  }
  return SumReport{result.C, result.decomposition, stats};
}

/// Renders a report deterministically: the same result gives the same bytes
/// regardless of timing or worker count. The text form doubles as a plain
/// polytope file, with decomposition and stats carried in '#' comments.
inline std::string emit_report(const SumReport& report, Format format = Format::Text) {
  if (report.vertices.size() < 1) throw InternalError("a sum report cannot be empty");
  const SumStats& s = report.stats;
  if (format == Format::Text) {
    std::ostringstream out;
    out << format_polytope(report.vertices, Format::Text);
    out << "# decomposition\n";
    for (const auto& [u, v] : report.decompositions) out << "# " << u << ' ' << v << '\n';
    out << "# k=" << s.k << " l=" << s.l << " candidates=" << s.candidates
        << " accepted=" << s.accepted << " method=" << to_string(s.method) << '\n';
    return out.str();
  }
  nlohmann::ordered_json doc;
  doc["dim"] = report.vertices.dim();
  auto& rows = doc["points"] = nlohmann::ordered_json::array();
  for (Index i = 0; i < report.vertices.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Index t = 0; t < report.vertices.dim(); ++t) {
      row.push_back(format_rational(report.vertices.point(i)(t)));
    }
    rows.push_back(std::move(row));
  }
  auto& decomp = doc["decompositions"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : report.decompositions) {
    decomp.push_back(nlohmann::ordered_json::array({u, v}));
  }
  doc["stats"] = {{"k", s.k},
                  {"l", s.l},
                  {"candidates", s.candidates},
                  {"accepted", s.accepted},
                  {"method", to_string(s.method)}};
  return doc.dump(2) + "\n";
}

}  // namespace minksum
