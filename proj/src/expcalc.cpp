#include "thetasph/expcalc.hpp"

#include <algorithm>
#include <cmath>

#include "thetasph/coeffs.hpp"

namespace thetasph::expcalc {

namespace {

constexpr double kZeroTol = 1e-14;

bool exponent_less(const CVec& a, const CVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() < b[i].real() - 1e-12) return true;
    if (a[i].real() > b[i].real() + 1e-12) return false;
    if (a[i].imag() < b[i].imag() - 1e-12) return true;
    if (a[i].imag() > b[i].imag() + 1e-12) return false;
  }
  return false;
}

bool exponent_eq(const CVec& a, const CVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-12) return false;
  return true;
}

// Rank-one helpers: exponents are scalars (1-component vectors).
double re1(const ExpSum::Term& t) { return t.exponent[0].real(); }

ExpSum delta_a1() {
  ExpSum d;
  d.terms.push_back({Cplx(1.0), {Cplx(1.0)}});
  d.terms.push_back({Cplx(-1.0), {Cplx(-1.0)}});
  return d;
}

ExpSum delta_prime_a1() {
  ExpSum d;
  d.terms.push_back({Cplx(1.0), {Cplx(1.0)}});
  d.terms.push_back({Cplx(1.0), {Cplx(-1.0)}});
  return d;
}

// d/dz on a rank-one numerator (denominator handled by callers).
ExpSum ddz(const ExpSum& es) {
  ExpSum out;
  out.denom_power = es.denom_power;
  for (const auto& t : es.terms) out.terms.push_back({t.coeff * t.exponent[0], t.exponent});
  return normalized(std::move(out));
}

// Exact division of a rank-one exponential polynomial by Delta = e^z - e^{-z}.
// Returns false when the division leaves a remainder.
bool divide_by_delta_a1(const ExpSum& num, ExpSum* quotient) {
  std::vector<ExpSum::Term> work = num.terms;
  if (work.empty()) {
    quotient->terms.clear();
    quotient->denom_power = num.denom_power;
    return true;
  }
  double min_expo = re1(work.front());
  for (const auto& t : work) min_expo = std::min(min_expo, re1(t));

  ExpSum q;
  q.denom_power = num.denom_power;
  int guard = 8 * static_cast<int>(num.terms.size()) + 256;
  while (!work.empty()) {
    if (--guard < 0) return false;
    // take the term with the largest exponent
    std::size_t best = 0;
    for (std::size_t i = 1; i < work.size(); ++i)
      if (re1(work[i]) > re1(work[best]) ||
          (re1(work[i]) == re1(work[best]) && work[i].exponent[0].imag() > work[best].exponent[0].imag()))
        best = i;
    ExpSum::Term top = work[best];
    if (re1(top) < min_expo - 1e-9) return false;  // descending past the original span: inexact
    CVec qe = {top.exponent[0] - 1.0};
    q.terms.push_back({top.coeff, qe});
    // subtract top.coeff * x^{e-1} * (x - x^{-1}) = top - top.coeff x^{e-2}
    work.erase(work.begin() + best);
    CVec tail = {top.exponent[0] - 2.0};
    bool merged = false;
    for (auto& t : work) {
      if (exponent_eq(t.exponent, tail)) {
        t.coeff += top.coeff;
        merged = true;
        break;
      }
    }
    if (!merged) work.push_back({top.coeff, tail});
    work.erase(std::remove_if(work.begin(), work.end(),
                              [](const ExpSum::Term& t) { return std::abs(t.coeff) <= kZeroTol; }),
               work.end());
  }
  *quotient = normalized(std::move(q));
  return true;
}

ExpSum reduce_denominator_a1(ExpSum es) {
  while (es.denom_power > 0) {
    ExpSum q;
    ExpSum num = es;
    num.denom_power = 0;
    if (!divide_by_delta_a1(num, &q)) break;
    q.denom_power = es.denom_power - 1;
    es = std::move(q);
  }
  return es;
}

void require_rank_one(const RootSystem& rs, const char* where) {
  if (rs.rank != 1) throw PreconditionError(std::string(where) + ": rank-one operator");
}

}  // namespace

ExpSum normalized(ExpSum a) {
  std::sort(a.terms.begin(), a.terms.end(),
            [](const ExpSum::Term& x, const ExpSum::Term& y) { return exponent_less(x.exponent, y.exponent); });
  std::vector<ExpSum::Term> out;
  for (const auto& t : a.terms) {
    if (!out.empty() && exponent_eq(out.back().exponent, t.exponent))
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const ExpSum::Term& t) { return std::abs(t.coeff) <= kZeroTol; }),
            out.end());
  a.terms = std::move(out);
  if (a.terms.empty()) a.denom_power = 0;
  return a;
}

ExpSum exp_term(const CVec& exponent, Cplx coeff) {
  ExpSum e;
  e.terms.push_back({coeff, exponent});
  return normalized(std::move(e));
}

ExpSum add(const ExpSum& a, const ExpSum& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.denom_power != b.denom_power)
    throw PreconditionError("ExpSum add: mismatched denominator powers");
  ExpSum out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return normalized(std::move(out));
}

ExpSum scale(const ExpSum& a, Cplx c) {
  ExpSum out = a;
  for (auto& t : out.terms) t.coeff *= c;
  return normalized(std::move(out));
}

ExpSum mul(const ExpSum& a, const ExpSum& b) {
  ExpSum out;
  out.denom_power = a.denom_power + b.denom_power;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      CVec e(ta.exponent);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += tb.exponent[i];
      out.terms.push_back({ta.coeff * tb.coeff, e});
    }
  return normalized(std::move(out));
}

Cplx eval(const RootSystem& rs, const ExpSum& es, const Vec& H) {
  Cplx num = 0.0;
  for (const auto& t : es.terms) num += t.coeff * std::exp(cdot(t.exponent, H));
  if (es.denom_power == 0) return num;
  Cplx delta = coeffs::weyl_denominator(rs, complexify(H));
  if (std::abs(delta) < 1e-300)
    throw SingularEvaluation("ExpSum eval: H lies on a wall (Delta = 0)");
  return num / std::pow(delta, es.denom_power);
}

ExpSum directional_derivative(const RootSystem& rs, const ExpSum& es, const Vec& alpha) {
  if (es.denom_power != 0)
    throw PreconditionError("directional_derivative: denominator power must be 0");
  ExpSum out;
  for (const auto& t : es.terms)
    out.terms.push_back({t.coeff * roots::lambda_alpha(rs, t.exponent, alpha), t.exponent});
  return normalized(std::move(out));
}

ExpSum a1_g_plus(const RootSystem& rs, const ExpSum& es) {
  require_rank_one(rs, "a1_g_plus");
  // f = g / Delta^k:  G+ f = -Delta^{-1} f' = -(g' Delta - k g Delta') / Delta^{k+2}
  const int k = es.denom_power;
  ExpSum g = es;
  g.denom_power = 0;
  ExpSum num = mul(ddz(g), delta_a1());
  if (k != 0) num = add(num, scale(mul(g, delta_prime_a1()), Cplx(-static_cast<double>(k))));
  num = scale(num, Cplx(-1.0));
  num.denom_power = k + 2;
  return reduce_denominator_a1(std::move(num));
}

ExpSum a1_g_minus(const RootSystem& rs, double m, const ExpSum& es) {
  require_rank_one(rs, "a1_g_minus");
  // f = g / Delta^k:  G-(m) f = (g' Delta + (m-1-k) Delta' g) / Delta^k
  const int k = es.denom_power;
  ExpSum g = es;
  g.denom_power = 0;
  ExpSum num = mul(ddz(g), delta_a1());
  num = add(num, scale(mul(g, delta_prime_a1()), Cplx(m - 1.0 - static_cast<double>(k))));
  num.denom_power = k;
  return reduce_denominator_a1(std::move(num));
}

ExpSum complex_theta_numerator(const RootSystem& rs, const ThetaSet& th, const CVec& lam) {
  ExpSum sum;
  for (const auto& w : roots::weyl_subgroup(rs, th)) sum = add(sum, exp_term(w.apply(lam)));
  for (const auto& a : rs.positive_roots) sum = directional_derivative(rs, sum, a);
  return sum;
}

Cplx complex_theta_closed_form(const RootSystem& rs, const ThetaSet& th, const CVec& lam,
                               const Vec& H) {
  for (const auto& a : rs.positive_roots)
    if (std::abs(roots::lambda_alpha(rs, lam, a)) < 1e-9)
      throw SingularEvaluation("complex_theta_closed_form: lambda_alpha = 0 (singular lambda)");
  Cplx delta = coeffs::weyl_denominator(rs, complexify(H));
  if (std::abs(delta) < 1e-12)
    throw SingularEvaluation("complex_theta_closed_form: H lies on a wall");
  ExpSum num = complex_theta_numerator(rs, th, lam);
  Cplx pi_lam = coeffs::pi_poly(rs, lam);
  auto m2 = coeffs::MultiplicityFunction::constant(rs, 2.0);
  double d = coeffs::d_theta(rs, m2, th);
  double sign = (std::llround(d) % 2 == 0) ? 1.0 : -1.0;
  return sign / (pi_lam * pi_lam) * eval(rs, num, H) / delta;
}

}  // namespace thetasph::expcalc
