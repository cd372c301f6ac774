#pragma once

#include <complex>
#include <random>
#include <vector>

#include "thetasph/types.hpp"

namespace testutil {

using thetasph::Cplx;
using thetasph::CVec;
using thetasph::Vec;

inline double rel_err(Cplx got, Cplx want) {
  double scale = std::abs(want);
  if (scale < 1e-300) return std::abs(got - want);
  return std::abs(got - want) / scale;
}

// Deterministic RNG for property tests.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed = 0x5eed5eedULL) : gen(seed) {}
  double uniform(double a, double b) {
    std::uniform_real_distribution<double> d(a, b);
    return d(gen);
  }
  Cplx complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
    return Cplx(uniform(re_lo, re_hi), uniform(im_lo, im_hi));
  }
  CVec spectral(int rank, double re_lo = -2.0, double re_hi = 2.0, double im_lo = -2.0,
                double im_hi = 2.0) {
    CVec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = complex_in(re_lo, re_hi, im_lo, im_hi);
    return v;
  }
  Vec point(int rank, double lo, double hi) {
    Vec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = uniform(lo, hi);
    return v;
  }
};

}  // namespace testutil
