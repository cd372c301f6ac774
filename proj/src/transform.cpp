#include "thetasph/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "thetasph/expcalc.hpp"

namespace thetasph::transform {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on Legendre
// polynomials; n <= a few hundred is plenty here.
void gauss_legendre(int n, std::vector<double>* x, std::vector<double>* w) {
  x->assign(n, 0.0);
  w->assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
      double dx = p0 / pp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    (*x)[i] = -xi;
    (*x)[n - 1 - i] = xi;
    (*w)[i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
    (*w)[n - 1 - i] = (*w)[i];
  }
}

void tensor_nodes(const Vec& lo, const Vec& hi, int n, std::vector<Vec>* nodes,
                  std::vector<double>* weights) {
  const int r = static_cast<int>(lo.size());
  std::vector<double> x, w;
  gauss_legendre(n, &x, &w);
  std::vector<int> idx(r, 0);
  nodes->clear();
  weights->clear();
  while (true) {
    Vec p(r);
    double wt = 1.0;
    for (int i = 0; i < r; ++i) {
      double a = lo[i], b = hi[i];
      p[i] = 0.5 * (a + b) + 0.5 * (b - a) * x[idx[i]];
      wt *= 0.5 * (b - a) * w[idx[i]];
    }
    nodes->push_back(std::move(p));
    weights->push_back(wt);
    int carry = r - 1;
    while (carry >= 0 && ++idx[carry] == n) idx[carry--] = 0;
    if (carry < 0) break;
  }
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1 || count < 256) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t b = t * chunk, e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back(body, b, e);
  }
  for (auto& th : pool) th.join();
}

bool is_constant_two(const MultiplicityFunction& m) {
  for (const auto& [n2, v] : m.orbits()) {
    (void)n2;
    if (std::abs(v - 2.0) > 1e-12) return false;
  }
  return true;
}

// Kernel for evaluating phi_Theta(m; lam, .) at many points H with lam fixed:
// the exponential-sum numerator is H-independent, so it is assembled once.
struct PhiKernel {
  enum class Mode { exponential, closed_form_m2, series } mode = Mode::series;
  std::vector<Cplx> coeff;
  std::vector<CVec> expo;
  Cplx scale{1.0, 0.0};
  // series fallback state
  const RootSystem* rs = nullptr;
  const MultiplicityFunction* m = nullptr;
  ThetaSet th;
  CVec lam;
  int N = 40;
};

PhiKernel make_phi_kernel(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                          const CVec& lam, int N) {
  PhiKernel k;
  k.rs = &rs;
  k.m = &m;
  k.th = th;
  k.lam = lam;
  k.N = N;
  if (m.zero()) {
    k.mode = PhiKernel::Mode::exponential;
    for (const auto& w : roots::weyl_subgroup(rs, th)) {
      k.coeff.push_back(1.0);
      k.expo.push_back(w.apply(lam));
    }
    return k;
  }
  if (is_constant_two(m)) {
    k.mode = PhiKernel::Mode::closed_form_m2;
    for (const auto& a : rs.positive_roots)
      if (std::abs(roots::lambda_alpha(rs, lam, a)) < 1e-9)
        throw SingularEvaluation("phi kernel: lambda_alpha = 0 (singular lambda)");
    auto num = expcalc::complex_theta_numerator(rs, th, lam);
    for (const auto& t : num.terms) {
      k.coeff.push_back(t.coeff);
      k.expo.push_back(t.exponent);
    }
    Cplx pi_lam = coeffs::pi_poly(rs, lam);
    auto m2 = coeffs::MultiplicityFunction::constant(rs, 2.0);
    double d = coeffs::d_theta(rs, m2, th);
    double sign = (std::llround(d) % 2 == 0) ? 1.0 : -1.0;
    k.scale = sign / (pi_lam * pi_lam);
    return k;
  }
  k.mode = PhiKernel::Mode::series;
  return k;
}

Cplx eval_phi_kernel(const PhiKernel& k, const Vec& H) {
  switch (k.mode) {
    case PhiKernel::Mode::exponential: {
      Cplx s = 0.0;
      for (std::size_t i = 0; i < k.coeff.size(); ++i) s += k.coeff[i] * std::exp(cdot(k.expo[i], H));
      return s;
    }
    case PhiKernel::Mode::closed_form_m2: {
      Cplx s = 0.0;
      for (std::size_t i = 0; i < k.coeff.size(); ++i) s += k.coeff[i] * std::exp(cdot(k.expo[i], H));
      double delta = 1.0;
      for (const auto& a : k.rs->positive_roots) delta *= 2.0 * std::sinh(dot(a, H));
      if (std::abs(delta) < 1e-300)
        throw SingularEvaluation("phi kernel: H lies on a wall");
      return k.scale * s / delta;
    }
    case PhiKernel::Mode::series:
      return sph::theta_spherical(*k.rs, *k.m, k.th, k.lam, H, k.N).value;
  }
  return 0.0;
}

// phi_Pi evaluator for inversion kernels (any chamber through W-invariance).
Cplx phi_pi_at(const RootSystem& rs, const MultiplicityFunction& m, const CVec& lam, const Vec& H,
               int N) {
  if (m.zero()) {
    Cplx s = 0.0;
    for (const auto& w : roots::weyl_group(rs)) s += std::exp(cdot(w.apply(lam), H));
    return s;
  }
  if (is_constant_two(m))
    return expcalc::complex_theta_closed_form(rs, roots::ThetaSet::full(rs.rank), lam, H);
  return sph::theta_spherical(rs, m, roots::ThetaSet::full(rs.rank), lam, H, N).value;
}

}  // namespace

RadialGrid radial_grid_chamber(const RootSystem& rs, const Vec& lo, const Vec& hi,
                               int points_per_dim) {
  RadialGrid g;
  g.lo = lo;
  g.hi = hi;
  g.full_space = false;
  tensor_nodes(lo, hi, points_per_dim, &g.nodes, &g.weights);
  for (const auto& p : g.nodes)
    if (!roots::is_dominant(rs, p, 0.0))
      throw PreconditionError("radial_grid_chamber: node outside the closed dominant chamber");
  double vol = 0.0;
  for (double w : g.weights) vol += w;
  (void)vol;
  return g;
}

RadialGrid radial_grid_full(const RootSystem& rs, double extent, int points_per_dim) {
  (void)rs;
  RadialGrid g;
  g.lo.assign(rs.rank, -extent);
  g.hi.assign(rs.rank, extent);
  g.full_space = true;
  tensor_nodes(g.lo, g.hi, points_per_dim, &g.nodes, &g.weights);
  return g;
}

SpectralGrid spectral_grid(const RootSystem& rs, double L, int points_per_dim, bool symmetrize) {
  SpectralGrid g;
  g.extent = L;
  const int r = rs.rank;
  if (points_per_dim % 2 != 0) ++points_per_dim;  // keep the axis free of zeros
  double h = 2.0 * L / points_per_dim;
  std::vector<double> axis(points_per_dim);
  for (int i = 0; i < points_per_dim; ++i) axis[i] = -L + (i + 0.5) * h;  // midpoint: no zeros
  std::vector<int> idx(r, 0);
  std::vector<Vec> raw;
  std::vector<double> raww;
  while (true) {
    Vec p(r);
    for (int i = 0; i < r; ++i) p[i] = axis[idx[i]];
    raw.push_back(std::move(p));
    raww.push_back(std::pow(h, r));
    int carry = r - 1;
    while (carry >= 0 && ++idx[carry] == points_per_dim) idx[carry--] = 0;
    if (carry < 0) break;
  }
  if (!symmetrize || rs.rank == 1) {
    g.nodes = std::move(raw);
    g.weights = std::move(raww);
    return g;
  }
  auto W = roots::weyl_group(rs);
  double inv = 1.0 / static_cast<double>(W.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (const auto& w : W) {
      g.nodes.push_back(w.apply(raw[i]));
      g.weights.push_back(raww[i] * inv);
    }
  return g;
}

CompactFunction box_bump(const Vec& lo, const Vec& hi) {
  CompactFunction f;
  f.lo = lo;
  f.hi = hi;
  f.eval = [lo, hi](const Vec& H) {
    double v = 1.0;
    for (std::size_t i = 0; i < H.size(); ++i) {
      double u = (2.0 * H[i] - lo[i] - hi[i]) / (hi[i] - lo[i]);
      if (std::abs(u) >= 1.0) return 0.0;
      v *= std::exp(-1.0 / (1.0 - u * u));
    }
    return v;
  };
  return f;
}

CompactFunction radial_bump(int rank, double r0, double r1) {
  CompactFunction f;
  f.lo.assign(rank, -r1);
  f.hi.assign(rank, r1);
  f.eval = [r0, r1](const Vec& H) {
    double r = std::sqrt(norm2(H));
    if (r <= r0 || r >= r1) return 0.0;
    double u = (2.0 * r - r0 - r1) / (r1 - r0);
    return std::exp(-1.0 / (1.0 - u * u));
  };
  f.smoothness = "smooth";
  return f;
}

CompactFunction symmetrized_bump(const RootSystem& rs, const ThetaSet& th,
                                 const CompactFunction& base) {
  auto sub = roots::weyl_subgroup(rs, th);
  CompactFunction f;
  // Bounding box of the orbit of the base box corners.
  f.lo.assign(rs.rank, 0.0);
  f.hi.assign(rs.rank, 0.0);
  for (const auto& w : sub) {
    Vec lo_img = w.apply(base.lo), hi_img = w.apply(base.hi);
    for (int i = 0; i < rs.rank; ++i) {
      f.lo[i] = std::min({f.lo[i], lo_img[i], hi_img[i]});
      f.hi[i] = std::max({f.hi[i], lo_img[i], hi_img[i]});
    }
  }
  auto base_eval = base.eval;
  f.eval = [sub, base_eval](const Vec& H) {
    double v = 0.0;
    for (const auto& w : sub) v += base_eval(w.apply(H));
    return v;
  };
  return f;
}

RadialPlan radial_plan(const RootSystem& rs, const MultiplicityFunction& m,
                       const CompactFunction& f, const RadialGrid& grid) {
  RadialPlan plan;
  plan.full_space = grid.full_space;
  double scale = 1.0;
  if (grid.full_space) scale = 1.0 / static_cast<double>(roots::weyl_group(rs).size());
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    double fv = f.eval(grid.nodes[k]);
    if (fv == 0.0) continue;
    double c = grid.weights[k] * fv * coeffs::delta_density(rs, m, grid.nodes[k]) * scale;
    plan.nodes.push_back(grid.nodes[k]);
    plan.coeff.push_back(Cplx(c, 0.0));
  }
  return plan;
}

Cplx theta_transform(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                     const RadialPlan& plan, const CVec& lam, int N) {
  PhiKernel kernel = make_phi_kernel(rs, m, th, lam, N);
  Cplx sum = 0.0;
  for (std::size_t k = 0; k < plan.nodes.size(); ++k)
    sum += plan.coeff[k] * eval_phi_kernel(kernel, plan.nodes[k]);
  return sum;
}

Cplx theta_transform(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                     const CompactFunction& f, const RadialGrid& grid, const CVec& lam, int N) {
  // W_Theta-invariance spot check on a few orbit pairs.
  auto sub = roots::weyl_subgroup(rs, th);
  if (sub.size() > 1) {
    for (int probe = 1; probe <= 3; ++probe) {
      Vec H(rs.rank);
      for (int i = 0; i < rs.rank; ++i)
        H[i] = grid.lo[i] + (grid.hi[i] - grid.lo[i]) * (0.17 + 0.23 * probe + 0.05 * i);
      double v0 = f.eval(H);
      double v1 = f.eval(sub[1].apply(H));
      double scale = std::max({std::abs(v0), std::abs(v1), 1e-6});
      if (std::abs(v0 - v1) > 1e-8 * scale && std::abs(v0 - v1) > 1e-10)
        throw PreconditionError("theta_transform: f is not W_Theta-invariant");
    }
  }
  return theta_transform(rs, m, th, radial_plan(rs, m, f, grid), lam, N);
}

double plancherel_density(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                          const Vec& t) {
  if (m.zero()) return 1.0;  // c == 1 convention at m = 0
  CVec lam(rs.rank);
  for (int i = 0; i < rs.rank; ++i) lam[i] = Cplx(0.0, t[i]);
  auto cp = coeffs::c_theta_plus(rs, m, th, lam);
  auto cm = coeffs::c_theta_minus(rs, m, th, lam);
  if (cp.is_pole || cm.is_pole) return 0.0;  // |c|^{-2} vanishes at c poles
  double mod = std::abs(cp.value * cm.value);
  if (mod == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (mod * mod);
}

Cplx invert(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
            const std::vector<Cplx>& spectral_values, const SpectralGrid& grid, const Vec& H,
            double kappa, int N, int* skipped) {
  if (spectral_values.size() != grid.nodes.size())
    throw PreconditionError("invert: spectral values not aligned with the grid");
  double d = coeffs::d_theta(rs, m, th);
  bool even = m.even();
  Cplx pref_even = (std::llround(d) % 2 == 0) ? 1.0 : -1.0;
  auto W = roots::weyl_group(rs);
  std::size_t wtheta = roots::weyl_subgroup(rs, th).size();
  const bool fast_m2 = is_constant_two(m);
  double delta_H = fast_m2 ? coeffs::weyl_denominator(rs, H) : 1.0;
  int skip_count = 0;
  Cplx sum = 0.0;
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    const Vec& t = grid.nodes[k];
    double density;
    if (fast_m2) {
      // |c_Theta(2; it)|^{-2} = prod_{alpha > 0} |lambda_alpha|^2
      density = 1.0;
      for (const auto& a : rs.positive_roots) {
        double la = dot(a, t) / rs.inner(a, a);
        density *= la * la;
      }
    } else {
      density = plancherel_density(rs, m, th, t);
    }
    if (!std::isfinite(density)) {
      ++skip_count;
      continue;
    }
    CVec minus_lam(rs.rank);
    for (int i = 0; i < rs.rank; ++i) minus_lam[i] = Cplx(0.0, -t[i]);
    Cplx e_val;
    if (m.zero()) {
      Cplx s = 0.0;
      for (const auto& w : W) s += std::exp(cdot(w.apply(minus_lam), H));
      e_val = pref_even * s;
    } else if (fast_m2) {
      // phi_Pi(2; mu, a) = sum_w det(w) e^{w mu (H)} / (pi(mu) Delta(H))
      Cplx s = 0.0;
      for (const auto& w : W) s += static_cast<double>(w.det) * std::exp(cdot(w.apply(minus_lam), H));
      e_val = pref_even * s / (coeffs::pi_poly(rs, minus_lam) * delta_H);
    } else if (even) {
      e_val = pref_even * phi_pi_at(rs, m, minus_lam, H, N);
    } else {
      e_val = sph::e_theta(rs, m, th, minus_lam, H, N);
    }
    sum += grid.weights[k] * spectral_values[k] * e_val * density;
  }
  if (skipped) *skipped = skip_count;
  return kappa * static_cast<double>(W.size()) / static_cast<double>(wtheta) * sum;
}

Cplx wave_packet(const RootSystem& rs, const MultiplicityFunction& m,
                 const std::vector<Cplx>& spectral_values, const SpectralGrid& grid, const Vec& H,
                 int N) {
  if (spectral_values.size() != grid.nodes.size())
    throw PreconditionError("wave_packet: spectral values not aligned with the grid");
  // decay check on the grid boundary
  double peak = 0.0, boundary = 0.0;
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    double mag = std::abs(spectral_values[k]);
    peak = std::max(peak, mag);
    double linf = 0.0;
    for (double x : grid.nodes[k]) linf = std::max(linf, std::abs(x));
    if (linf > 0.9 * grid.extent) boundary = std::max(boundary, mag);
  }
  if (peak > 0.0 && boundary > 1e-3 * peak)
    throw PreconditionError("wave_packet: spectral data does not decay on the grid boundary");

  auto full = roots::ThetaSet::full(rs.rank);
  auto W = roots::weyl_group(rs);
  const bool fast_m2 = is_constant_two(m);
  double delta_H = fast_m2 ? coeffs::weyl_denominator(rs, H) : 1.0;
  Cplx sum = 0.0;
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    const Vec& t = grid.nodes[k];
    double density;
    if (fast_m2) {
      density = 1.0;
      for (const auto& a : rs.positive_roots) {
        double la = dot(a, t) / rs.inner(a, a);
        density *= la * la;
      }
    } else {
      density = plancherel_density(rs, m, full, t);
    }
    if (!std::isfinite(density)) continue;
    CVec minus_lam(rs.rank);
    for (int i = 0; i < rs.rank; ++i) minus_lam[i] = Cplx(0.0, -t[i]);
    Cplx phi;
    if (fast_m2) {
      Cplx s = 0.0;
      for (const auto& w : W) s += static_cast<double>(w.det) * std::exp(cdot(w.apply(minus_lam), H));
      phi = s / (coeffs::pi_poly(rs, minus_lam) * delta_H);
    } else {
      phi = phi_pi_at(rs, m, minus_lam, H, N);
    }
    sum += grid.weights[k] * spectral_values[k] * phi * density;
  }
  return sum;
}

std::vector<Cplx> tabulate_transform(const RootSystem& rs, const MultiplicityFunction& m,
                                     const ThetaSet& th, const CompactFunction& f,
                                     const RadialGrid& rgrid, const SpectralGrid& sgrid, int N) {
  RadialPlan plan = radial_plan(rs, m, f, rgrid);
  std::vector<Cplx> out(sgrid.nodes.size());
  parallel_for(sgrid.nodes.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      CVec lam(rs.rank);
      for (int i = 0; i < rs.rank; ++i) lam[i] = Cplx(0.0, sgrid.nodes[k][i]);
      out[k] = theta_transform(rs, m, th, plan, lam, N);
    }
  });
  return out;
}

CompactFunction function_from_csv(const std::string& path, int rank) {
  if (rank < 1 || rank > 2)
    throw PreconditionError("function_from_csv: only ranks 1 and 2 are supported");
  std::ifstream in(path);
  if (!in) throw PreconditionError("function_from_csv: cannot open " + path);
  std::vector<Vec> pts;
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    Vec p(rank);
    double v;
    bool ok = true;
    for (int i = 0; i < rank; ++i)
      if (!(row >> p[i])) ok = false;
    if (!(row >> v)) ok = false;
    if (!ok) {
      if (pts.empty()) continue;  // header row
      throw PreconditionError("function_from_csv: malformed row: " + line);
    }
    pts.push_back(std::move(p));
    vals.push_back(v);
  }
  if (pts.empty()) throw PreconditionError("function_from_csv: no samples");

  // distinct sorted axis coordinates
  auto axis_of = [&](int dim) {
    std::vector<double> ax;
    for (const auto& p : pts) {
      bool seen = false;
      for (double x : ax) seen = seen || std::abs(x - p[dim]) < 1e-12;
      if (!seen) ax.push_back(p[dim]);
    }
    std::sort(ax.begin(), ax.end());
    return ax;
  };
  std::vector<std::vector<double>> axes;
  std::size_t grid_size = 1;
  for (int d = 0; d < rank; ++d) {
    axes.push_back(axis_of(d));
    grid_size *= axes.back().size();
  }
  if (grid_size != pts.size())
    throw PreconditionError("function_from_csv: samples do not form a tensor grid");
  auto locate = [](const std::vector<double>& ax, double x) {
    auto it = std::lower_bound(ax.begin(), ax.end(), x - 1e-12);
    if (it == ax.end() || std::abs(*it - x) > 1e-9) return -1;
    return static_cast<int>(it - ax.begin());
  };
  std::vector<double> table(grid_size, 0.0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    int idx = 0;
    for (int d = 0; d < rank; ++d) {
      int j = locate(axes[d], pts[k][d]);
      if (j < 0) throw PreconditionError("function_from_csv: samples do not form a tensor grid");
      idx = idx * static_cast<int>(axes[d].size()) + j;
    }
    table[idx] = vals[k];
  }

  CompactFunction f;
  f.lo.resize(rank);
  f.hi.resize(rank);
  for (int d = 0; d < rank; ++d) {
    f.lo[d] = axes[d].front();
    f.hi[d] = axes[d].back();
  }
  f.smoothness = "sampled";
  f.eval = [axes, table, rank](const Vec& H) -> double {
    std::vector<int> cell(rank);
    std::vector<double> frac(rank);
    for (int d = 0; d < rank; ++d) {
      const auto& ax = axes[d];
      if (H[d] < ax.front() || H[d] > ax.back()) return 0.0;
      auto it = std::upper_bound(ax.begin(), ax.end(), H[d]);
      int j = static_cast<int>(it - ax.begin()) - 1;
      j = std::min(std::max(j, 0), static_cast<int>(ax.size()) - 2);
      cell[d] = j;
      frac[d] = (H[d] - ax[j]) / (ax[j + 1] - ax[j]);
    }
    if (rank == 1) {
      double v0 = table[cell[0]], v1 = table[cell[0] + 1];
      return v0 + frac[0] * (v1 - v0);
    }
    int n1 = static_cast<int>(axes[1].size());
    auto at = [&](int i, int j) { return table[i * n1 + j]; };
    double v00 = at(cell[0], cell[1]), v01 = at(cell[0], cell[1] + 1);
    double v10 = at(cell[0] + 1, cell[1]), v11 = at(cell[0] + 1, cell[1] + 1);
    double a = v00 + frac[1] * (v01 - v00);
    double b = v10 + frac[1] * (v11 - v10);
    return a + frac[0] * (b - a);
  };
  return f;
}

double calibrate_kappa(const RootSystem& rs, const MultiplicityFunction& m, const ThetaSet& th,
                       const RadialGrid& rgrid, const SpectralGrid& sgrid,
                       const CompactFunction& reference, int N) {
  auto values = tabulate_transform(rs, m, th, reference, rgrid, sgrid, N);
  // Interior sample points of the radial box (inside the evaluation domain),
  // restricted to where the reference carries mass.
  std::vector<Vec> candidates;
  const int per_dim = (rs.rank == 1) ? 9 : 4;
  std::vector<int> idx(rs.rank, 0);
  while (true) {
    Vec p(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      double f0 = (idx[i] + 1.0) / (per_dim + 1.0);
      p[i] = rgrid.lo[i] + f0 * (rgrid.hi[i] - rgrid.lo[i]);
    }
    candidates.push_back(std::move(p));
    int carry = rs.rank - 1;
    while (carry >= 0 && ++idx[carry] == per_dim) idx[carry--] = 0;
    if (carry < 0) break;
  }
  double fmax = 0.0;
  for (const auto& p : candidates) fmax = std::max(fmax, std::abs(reference.eval(p)));
  std::vector<Vec> samples;
  for (const auto& p : candidates) {
    if (!roots::a_theta_contains(rs, th, p)) continue;
    if (std::abs(reference.eval(p)) >= 0.05 * fmax) samples.push_back(p);
  }
  double num = 0.0, den = 0.0;
  std::vector<double> fvals(samples.size());
  std::vector<Cplx> uvals(samples.size());
  parallel_for(samples.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      fvals[k] = reference.eval(samples[k]);
      uvals[k] = invert(rs, m, th, values, sgrid, samples[k], 1.0, N);
    }
  });
  for (std::size_t k = 0; k < samples.size(); ++k) {
    num += (std::conj(uvals[k]) * fvals[k]).real();
    den += std::norm(uvals[k]);
  }
  if (den <= 1e-30 || fmax <= 0.0)
    throw SingularEvaluation("calibrate_kappa: ill-conditioned fit (reference too small on samples)");
  double kappa = num / den;
  if (kappa <= 0.0)
    throw SingularEvaluation("calibrate_kappa: fitted scalar is not positive");
  return kappa;
}

}  // namespace thetasph::transform
