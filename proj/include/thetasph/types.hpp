#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetasph {

using Cplx = std::complex<double>;
using Vec  = std::vector<double>;   // coordinates in the fixed orthonormal basis
using CVec = std::vector<Cplx>;

inline CVec complexify(const Vec& v) {
  CVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Cplx(v[i], 0.0);
  return out;
}

inline Vec real_part(const CVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

inline Vec imag_part(const CVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].imag();
  return out;
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Cplx cdot(const CVec& a, const Vec& b) {
  Cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Bilinear (not Hermitian) pairing.
inline Cplx cdot(const CVec& a, const CVec& b) {
  Cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec axpy(double a, const Vec& x, const Vec& y) {  // a*x + y
  Vec out(y);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
  return out;
}

inline double norm2(const Vec& v) { return dot(v, v); }

// Thrown when a caller violates a documented precondition; the message names
// the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an evaluation hits a genuine singularity (pole, wall, divergence).
class SingularEvaluation : public std::domain_error {
 public:
  explicit SingularEvaluation(const std::string& what) : std::domain_error(what) {}
};

}  // namespace thetasph
