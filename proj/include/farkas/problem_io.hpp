#ifndef FARKAS_PROBLEM_IO_HPP
#define FARKAS_PROBLEM_IO_HPP

#include <iosfwd>
#include <string>

#include "farkas/alternatives.hpp"

namespace farkas {

// Problem file grammar:
//   - lines starting with '#' (and blank lines) are ignored
//   - header line: "m n"
//   - m lines with n entries each (rows of A)
//   - one line with m entries (b)
// Every token must parse as a finite real.
FeasibilityProblem parse_problem(std::istream& in, double rho = 1.0);
FeasibilityProblem read_problem_file(const std::string& path, double rho = 1.0);

// 17 significant digits, parses back bit-exact.
void write_problem(std::ostream& out, const DenseMatrix& A, const Vector& b);

}  // namespace farkas

#endif
