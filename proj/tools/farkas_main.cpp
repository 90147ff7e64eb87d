// Command-line front end: decide / verify / reduce / bench.
//
// Exit codes: 0 feasible (or success), 1 infeasible, 2 input or solver
// error, 3 certificate invalid. Feasibility is data, not failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "farkas/certificate_io.hpp"
#include "farkas/kernels.hpp"
#include "farkas/log.hpp"
#include "farkas/oracle.hpp"
#include "farkas/problem_io.hpp"
#include "farkas/random_instances.hpp"
#include "farkas/reduction.hpp"

namespace {

using namespace farkas;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;
constexpr int kExitCertificateInvalid = 3;

Route parse_route(const std::string& name) {
  if (name == "primal") return Route::Primal;
  if (name == "dual") return Route::Dual;
  if (name == "both") return Route::Both;
  raise(ErrorCode::InvalidArgument, "route must be primal, dual or both (got '" + name + "')");
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string vector_literal(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt17(v[i]);
  }
  return s + "]";
}

int cmd_decide(const std::string& path, double rho, const std::string& route_name_,
               double tol, double grad_tol, std::size_t max_iter, const std::string& output) {
  FeasibilityProblem problem = read_problem_file(path, rho);
  SolverConfig cfg;
  if (tol > 0.0) cfg.feas_tol = tol;
  if (grad_tol > 0.0) cfg.grad_tol = grad_tol;
  if (max_iter > 0) cfg.max_iter = max_iter;
  Route route = parse_route(route_name_);

  DecideResult result = decide(problem, cfg, route);
  verify_certificate(problem, result.certificate);  // self-check before emitting

  CertificateDocument doc = CertificateDocument::from_result(problem, result);
  std::string text = doc.to_json();
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) raise(ErrorCode::InvalidArgument, "cannot open output file '" + output + "'");
    out << text;
  }
  log::info("decide %s: %s (route %s)", path.c_str(), doc.status.c_str(), doc.route.c_str());
  return is_feasible(result.certificate) ? kExitFeasible : kExitInfeasible;
}

int cmd_verify(const std::string& cert_path, const std::string& problem_path, bool with_oracle,
               double verify_tol) {
  std::ifstream in(cert_path);
  if (!in) raise(ErrorCode::ParseError, "cannot open certificate file '" + cert_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  CertificateDocument doc = CertificateDocument::parse_json(buf.str());

  FeasibilityProblem problem = read_problem_file(problem_path, doc.rho);
  if (doc.m != problem.m() || doc.n != problem.n())
    raise(ErrorCode::DimensionMismatch, "certificate dimensions do not match the problem file");

  Certificate cert = doc.to_certificate();
  DualIdentityReport ids = verify_certificate(problem, cert, verify_tol);
  std::cout << "certificate OK: status=" << doc.status;
  if (ids.z_identity_residual) std::cout << " z_residual=" << fmt17(*ids.z_identity_residual);
  if (ids.w_identity_residual)
    std::cout << " w_identity_residual=" << fmt17(*ids.w_identity_residual);
  std::cout << "\n";

  if (with_oracle) {
    oracle::OracleVerdict verdict = oracle::enumerate_feasibility(problem);
    std::cout << "oracle: " << (verdict.feasible ? "feasible" : "infeasible") << "\n";
    if (verdict.feasible != is_feasible(cert))
      raise(ErrorCode::CertificateInvalid, "oracle verdict contradicts certificate status");
  }
  return kExitFeasible;
}

int cmd_reduce(const std::string& path, double rho, bool emit_k, bool emit_xbar) {
  FeasibilityProblem problem = read_problem_file(path, rho);
  SolverConfig cfg;

  if (emit_k || emit_xbar) {
    // machine-readable blocks only, for piping
    ReducedSystems red = build_reduction(problem);
    if (emit_k) {
      for (std::size_t i = 0; i < red.basis.K.rows; ++i) {
        for (std::size_t j = 0; j < red.basis.K.cols; ++j)
          std::cout << (j ? " " : "") << fmt17(red.basis.K(i, j));
        std::cout << "\n";
      }
    }
    if (emit_xbar) {
      for (std::size_t j = 0; j < red.x_bar.size(); ++j)
        std::cout << (j ? " " : "") << fmt17(red.x_bar[j]);
      std::cout << "\n";
    }
    return kExitFeasible;
  }

  ReducedSystems red = build_reduction(problem);
  DiagramReport diagram = check_diagram(problem, cfg);
  std::cout << "m = " << problem.m() << ", n = " << problem.n() << ", nu = " << red.nu << "\n";
  if (red.nu == 0) std::cout << "nu = 0: the reduced primal system degenerates to 0 <= x_bar\n";
  std::cout << "x_bar = " << vector_literal(red.x_bar) << "\n";
  std::cout << "K (" << red.basis.K.rows << " x " << red.basis.K.cols << "):\n";
  for (std::size_t i = 0; i < red.basis.K.rows; ++i) {
    std::cout << "  [";
    for (std::size_t j = 0; j < red.basis.K.cols; ++j)
      std::cout << (j ? ", " : "") << fmt17(red.basis.K(i, j));
    std::cout << "]\n";
  }
  std::cout << "max |A K^T| = " << fmt17(diagram.null_product_residual) << "\n";
  auto mark = [](bool c) { return c ? "consistent" : "inconsistent"; };
  std::cout << "diagram:\n";
  std::cout << "  primal              (A x = b, x >= 0):              "
            << mark(diagram.primal_consistent) << "\n";
  std::cout << "  reduced primal      (K^T y <= x_bar):               "
            << mark(diagram.reduced_primal_consistent) << "\n";
  std::cout << "  alternative         (A^T u <= 0, b^T u = rho):      "
            << mark(diagram.alternative_consistent) << "\n";
  std::cout << "  reduced alternative (K v = 0, -x_bar^T v = rho, v >= 0): "
            << mark(diagram.reduced_alternative_consistent) << "\n";
  return kExitFeasible;
}

int cmd_bench(std::size_t m, std::size_t n, std::size_t count, std::uint64_t seed,
              const std::string& routes_csv, const std::string& kind, double rho) {
  std::vector<Route> routes;
  {
    std::stringstream ss(routes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) routes.push_back(parse_route(tok));
  }
  if (routes.empty()) raise(ErrorCode::InvalidArgument, "--routes must name at least one route");
  if (kind != "mixed" && kind != "feasible" && kind != "infeasible")
    raise(ErrorCode::InvalidArgument, "--kind must be mixed, feasible or infeasible");

  SolverConfig cfg;
  Rng rng(seed);
  std::printf("# bench m=%zu n=%zu count=%zu seed=%llu kind=%s\n", m, n, count,
              static_cast<unsigned long long>(seed), kind.c_str());
  std::printf("# time_ms is wall time and is excluded from determinism comparisons\n");
  std::printf("%-9s %-11s %-7s %-12s %-11s %s\n", "instance", "kind", "route", "verdict",
              "iterations", "time_ms");

  for (std::size_t i = 0; i < count; ++i) {
    bool feasible = kind == "mixed" ? (i % 2 == 0) : (kind == "feasible");
    FeasibilityProblem problem = random_instance(rng, m, n, feasible, rho);
    for (Route route : routes) {
      auto t0 = std::chrono::steady_clock::now();
      DecideResult result = decide(problem, cfg, route);
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::size_t iters = 0;
      for (const auto& r : result.reports) iters += r.iterations;
      std::printf("%-9zu %-11s %-7s %-12s %-11zu %.3f\n", i,
                  feasible ? "feasible" : "infeasible", route_name(route),
                  is_feasible(result.certificate) ? "feasible" : "infeasible", iters, ms);
    }
  }
  return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feasibility certificates for A x = b, x >= 0 via alternative-system residuals"};
  app.require_subcommand(1);

  std::string path, output, cert_path, problem_path;
  std::string route = "both", routes_csv = "dual,primal", kind = "mixed";
  double rho = 1.0, tol = 0.0, grad_tol = 0.0, verify_tol = default_verify_tol;
  std::size_t max_iter = 0, bench_m = 20, bench_n = 50, bench_count = 10;
  std::uint64_t seed = 1;
  bool with_oracle = false, emit_k = false, emit_xbar = false;

  auto* dec = app.add_subcommand("decide", "classify a problem file and emit a certificate");
  dec->add_option("problem", path, "problem file")->required();
  dec->add_option("--rho", rho, "positive constant of the alternative system (default 1)");
  dec->add_option("--route", route, "primal|dual|both (default both)");
  dec->add_option("--tol", tol, "feasibility threshold override");
  dec->add_option("--grad-tol", grad_tol, "stationarity threshold override");
  dec->add_option("--max-iter", max_iter, "iteration budget override");
  dec->add_option("--output", output, "write the certificate here instead of stdout");

  auto* ver = app.add_subcommand("verify", "check a certificate against a problem file");
  ver->add_option("certificate", cert_path, "certificate JSON")->required();
  ver->add_option("problem", problem_path, "problem file")->required();
  ver->add_flag("--oracle", with_oracle, "also cross-check with the enumeration oracle");
  ver->add_option("--tol", verify_tol, "verification tolerance (default 1e-7)");

  auto* red = app.add_subcommand("reduce", "null-space reduction and four-system diagram");
  red->add_option("problem", path, "problem file")->required();
  red->add_option("--rho", rho, "positive constant of the alternative system (default 1)");
  red->add_flag("--emit-k", emit_k, "print only the null-space basis rows (machine-readable)");
  red->add_flag("--emit-xbar", emit_xbar, "print only the particular solution (machine-readable)");

  auto* ben = app.add_subcommand("bench", "timing table over seeded random instances");
  ben->add_option("--m", bench_m, "rows (default 20)");
  ben->add_option("--n", bench_n, "columns (default 50)");
  ben->add_option("--count", bench_count, "instances (default 10)");
  ben->add_option("--seed", seed, "rng seed (default 1)");
  ben->add_option("--routes", routes_csv, "comma-separated routes (default dual,primal)");
  ben->add_option("--kind", kind, "mixed|feasible|infeasible (default mixed)");
  ben->add_option("--rho", rho, "positive constant of the alternative system (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (dec->parsed()) return cmd_decide(path, rho, route, tol, grad_tol, max_iter, output);
    if (ver->parsed()) return cmd_verify(cert_path, problem_path, with_oracle, verify_tol);
    if (red->parsed()) return cmd_reduce(path, rho, emit_k, emit_xbar);
    if (ben->parsed()) return cmd_bench(bench_m, bench_n, bench_count, seed, routes_csv, kind, rho);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", error_code_name(e.code()), e.what());
    return e.code() == ErrorCode::CertificateInvalid ? kExitCertificateInvalid : kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: E_INTERNAL: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
