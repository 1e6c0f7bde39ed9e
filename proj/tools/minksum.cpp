// Command-line front end: Minkowski sums, single-pair checks, extreme-point
// filtering, and the planar hull oracle, all over exact rationals.

#include <minksum/minksum.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw minksum::InvalidInput("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

minksum::VPolytope load_polytope(const std::string& path) {
  try {
    return minksum::parse_polytope(slurp(path));
  } catch (const minksum::ParseError& e) {
    throw minksum::ParseError(path + ": " + e.what());
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw minksum::InvalidInput("cannot write file '" + out_path + "'");
  out << text;
}

std::string join_coordinates(const minksum::Vector& v) {
  std::ostringstream out;
  for (minksum::Index t = 0; t < v.size(); ++t) {
    if (t > 0) out << ' ';
    out << minksum::format_rational(v(t));
  }
  return out.str();
}

int run_sum(const std::string& a_path, const std::string& b_path, const std::string& method_name,
            int jobs, const std::string& format_name, const std::string& out_path, bool timing) {
  const minksum::VPolytope A = load_polytope(a_path);
  const minksum::VPolytope B = load_polytope(b_path);
  const minksum::Method method = minksum::parse_method(method_name);

  const auto start = std::chrono::steady_clock::now();
  const minksum::MinkowskiSumResult result = minksum::minkowski_sum(A, B, method, jobs);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const minksum::SumReport report =
      minksum::make_report(A, B, result, method, elapsed.count());
  write_output(minksum::emit_report(report, minksum::parse_format(format_name)), out_path);
  if (timing) std::cerr << "elapsed " << elapsed.count() << "s\n";
  return 0;
}

int run_check(const std::string& a_path, const std::string& b_path, minksum::Index u,
              minksum::Index v, const std::string& method_name) {
  const minksum::VPolytope A = load_polytope(a_path);
  const minksum::VPolytope B = load_polytope(b_path);
  const minksum::Method method = minksum::parse_method(method_name);

  minksum::PairVerdict verdict;
  if (method == minksum::Method::Uniqueness) {
    verdict = minksum::is_vertex_by_uniqueness(A, B, u, v);
  } else {
    if (u < 0 || u >= A.size()) throw minksum::InvalidInput("index u out of range");
    if (v < 0 || v >= B.size()) throw minksum::InvalidInput("index v out of range");
    std::vector<minksum::Point> cloud;
    for (const auto& pair : minksum::candidate_sums(A, B)) cloud.push_back(pair.sum);
    const minksum::PointVerdict pv = minksum::is_vertex_by_separation(cloud, u * B.size() + v);
    verdict.pair = minksum::CandidatePair{u, v, cloud[static_cast<std::size_t>(pv.index)]};
    verdict.is_vertex = pv.is_vertex;
    verdict.f_star = pv.f_star;
    verdict.certificate = pv.certificate;
  }

  std::cout << "pair u=" << u << " v=" << v << '\n';
  std::cout << "sum = " << join_coordinates(verdict.pair.sum) << '\n';
  std::cout << "method = " << minksum::to_string(method) << '\n';
  std::cout << "f* = " << minksum::format_rational(verdict.f_star) << '\n';
  std::cout << "vertex = " << (verdict.is_vertex ? "yes" : "no") << '\n';
  if (const auto* sep = std::get_if<minksum::SeparatingHyperplane>(&verdict.certificate)) {
    std::cout << "gamma = " << join_coordinates(sep->gamma) << '\n';
    std::cout << "gamma_uv = " << minksum::format_rational(sep->gamma_uv) << '\n';
  } else if (const auto* alt =
                 std::get_if<minksum::AlternativeDecomposition>(&verdict.certificate)) {
    std::cout << "alpha = " << join_coordinates(alt->alpha) << '\n';
    std::cout << "beta = " << join_coordinates(alt->beta) << '\n';
  } else if (const auto* wit =
                 std::get_if<minksum::ConvexCombinationWitness>(&verdict.certificate)) {
    std::cout << "lambda = " << join_coordinates(wit->lambda) << '\n';
  } else {
    std::cout << "decomposition = unique\n";
  }
  return verdict.is_vertex ? 0 : 3;
}

int run_extreme(const std::string& points_path) {
  const minksum::VPolytope P = load_polytope(points_path);
  const minksum::ExtremePointsResult result = minksum::extreme_points(P.points());
  std::cout << P.dim() << ' ' << result.kept.size() << '\n';
  for (const auto& p : result.kept) std::cout << join_coordinates(p) << '\n';
  return 0;
}

int run_hull2d(const std::string& points_path) {
  const minksum::VPolytope P = load_polytope(points_path);
  const std::vector<minksum::Point> hull = minksum::convex_hull_2d(P.points());
  std::cout << P.dim() << ' ' << hull.size() << '\n';
  for (const auto& p : hull) std::cout << join_coordinates(p) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Minkowski sums of V-polytopes via rational linear programming"};
  app.require_subcommand(1);

  std::string a_path, b_path, points_path, out_path;
  std::string method_name = "uniqueness";
  std::string format_name = "text";
  int jobs = 1;
  long long u = 0, v = 0;
  bool timing = false;

  const auto method_check = CLI::IsMember({"separation", "uniqueness"});
  const auto format_check = CLI::IsMember({"text", "structured"});

  auto* sum = app.add_subcommand("sum", "Compute the vertex set of A + B");
  sum->add_option("--a", a_path, "V-polytope file for operand A")->required();
  sum->add_option("--b", b_path, "V-polytope file for operand B")->required();
  sum->add_option("--method", method_name, "Classification method")->check(method_check);
  sum->add_option("--jobs", jobs, "Worker threads for pair classification")
      ->check(CLI::PositiveNumber);
  sum->add_option("--format", format_name, "Output format")->check(format_check);
  sum->add_option("--out", out_path, "Write the report to a file instead of stdout");
  sum->add_flag("--timing", timing, "Print elapsed wall time to stderr");

  auto* check = app.add_subcommand("check", "Classify one candidate pair (exit 0 vertex, 3 not)");
  check->add_option("--a", a_path, "V-polytope file for operand A")->required();
  check->add_option("--b", b_path, "V-polytope file for operand B")->required();
  check->add_option("--u", u, "0-based row index into A's point list")
      ->required()
      ->check(CLI::NonNegativeNumber);
  check->add_option("--v", v, "0-based row index into B's point list")
      ->required()
      ->check(CLI::NonNegativeNumber);
  check->add_option("--method", method_name, "Classification method")->check(method_check);

  auto* extreme = app.add_subcommand("extreme", "Keep only the extreme points of a point list");
  extreme->add_option("--points", points_path, "V-polytope file")->required();

  auto* hull2d = app.add_subcommand("hull2d", "Planar convex hull, CCW from the lex minimum");
  hull2d->add_option("--points", points_path, "V-polytope file of 2D points")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sum->parsed()) {
      return run_sum(a_path, b_path, method_name, jobs, format_name, out_path, timing);
    }
    if (check->parsed()) {
      return run_check(a_path, b_path, static_cast<minksum::Index>(u),
                       static_cast<minksum::Index>(v), method_name);
    }
    if (extreme->parsed()) return run_extreme(points_path);
    return run_hull2d(points_path);
  } catch (const minksum::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const minksum::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
