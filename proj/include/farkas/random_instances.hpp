#ifndef FARKAS_RANDOM_INSTANCES_HPP
#define FARKAS_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "farkas/alternatives.hpp"

namespace farkas {

// mt19937_64 plus hand-rolled uniform/normal transforms; std::*_distribution
// is implementation-defined, this is bit-reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }
  double uniform01() {  // in (0, 1]
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  double normal();  // Box-Muller
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

 private:
  std::mt19937_64 eng_;
};

// Standard-normal A. Feasible instances take b = A x0 with x0 >= 0 (a few
// components pinned to zero so boundary solutions occur); infeasible ones
// embed a unit Farkas witness with margins bounded away from zero, so no
// instance sits on the feasibility boundary. Full row rank is enforced by
// redraw.
FeasibilityProblem random_instance(Rng& rng, std::size_t m, std::size_t n, bool feasible,
                                   double rho = 1.0);

}  // namespace farkas

#endif
