#include "farkas/problem_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace farkas {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank_or_comment(line)) return true;
  }
  return false;
}

std::vector<double> parse_reals(const std::string& line, std::size_t expected, std::size_t lineno) {
  std::vector<double> vals;
  vals.reserve(expected);
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      raise(ErrorCode::ParseError,
            "line " + std::to_string(lineno) + ": token '" + tok + "' is not a real number");
    if (!std::isfinite(v))
      raise(ErrorCode::NonFiniteInput,
            "line " + std::to_string(lineno) + ": non-finite value '" + tok + "'");
    vals.push_back(v);
  }
  if (vals.size() != expected)
    raise(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(expected) + " values, found " +
                                     std::to_string(vals.size()));
  return vals;
}

}  // namespace

FeasibilityProblem parse_problem(std::istream& in, double rho) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno))
    raise(ErrorCode::ParseError, "empty problem file: missing 'm n' header");

  std::size_t m = 0, n = 0;
  {
    std::istringstream ss(line);
    long long mi = -1, ni = -1;
    std::string extra;
    if (!(ss >> mi >> ni) || (ss >> extra) || mi < 1 || ni < 1)
      raise(ErrorCode::ParseError,
            "line " + std::to_string(lineno) + ": header must be two positive integers 'm n'");
    m = static_cast<std::size_t>(mi);
    n = static_cast<std::size_t>(ni);
  }

  DenseMatrix A(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_data_line(in, line, lineno))
      raise(ErrorCode::ParseError, "unexpected end of file: expected row " + std::to_string(i + 1) +
                                       " of " + std::to_string(m));
    auto vals = parse_reals(line, n, lineno);
    for (std::size_t j = 0; j < n; ++j) A(i, j) = vals[j];
  }

  if (!next_data_line(in, line, lineno))
    raise(ErrorCode::ParseError, "unexpected end of file: expected right-hand side line");
  Vector b = parse_reals(line, m, lineno);

  if (next_data_line(in, line, lineno))
    raise(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing data after b");

  return FeasibilityProblem(std::move(A), std::move(b), rho);
}

FeasibilityProblem read_problem_file(const std::string& path, double rho) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open problem file '" + path + "'");
  return parse_problem(in, rho);
}

void write_problem(std::ostream& out, const DenseMatrix& A, const Vector& b) {
  char buf[64];
  out << A.rows << " " << A.cols << "\n";
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", A(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", b[i]);
    out << (i ? " " : "") << buf;
  }
  out << "\n";
}

}  // namespace farkas
