#pragma once

#include <cmath>

#include "gsu/error.hpp"
#include "gsu/rng.hpp"

namespace gsu {

// Two-point extra-weight law: xi = u with probability p, else 0.
struct UncertaintyModel {
  double u = 0.0;
  double p = 0.0;

  void validate() const {
    if (!(u >= 0.0) || !std::isfinite(u)) throw Error(Errc::InvalidParams, "u must be finite and >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidParams, "p must lie in [0, 1]");
  }
};

// Fresh draw on every call; nothing is cached per edge.
inline double sample_xi(const UncertaintyModel& m, Rng& rng) {
  return bernoulli(rng, m.p) ? m.u : 0.0;
}

inline double expected_xi(const UncertaintyModel& m) { return m.u * m.p; }

// Mean of the minimum of c independent draws: the minimum is u only when all
// c draws are u.
inline double expected_eps(const UncertaintyModel& m, unsigned c) {
  if (c < 1) throw Error(Errc::InvalidParams, "expected_eps needs c >= 1");
  return m.u * std::pow(m.p, static_cast<double>(c));
}

}  // namespace gsu
