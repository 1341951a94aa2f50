#include "dickelab/sep_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dickelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Expectation of a Hermitian matrix in the product state, skipping the
// StateVector normalization check on the hot path.
class ProductObjective {
 public:
  explicit ProductObjective(const Operator& w) : w_(w.matrix()), n_(w.n_qubits()) {}

  double operator()(const std::vector<double>& theta, const std::vector<double>& phi) const {
    Vector psi = Vector::Ones(1);
    for (int q = 0; q < n_; ++q) {
      const auto i = static_cast<std::size_t>(q);
      const cplx a = std::cos(theta[i] / 2.0);
      const cplx b = std::polar(std::sin(theta[i] / 2.0), phi[i]);
      Vector next(psi.size() * 2);
      for (Eigen::Index k = 0; k < psi.size(); ++k) {
        next(2 * k) = psi(k) * a;
        next(2 * k + 1) = psi(k) * b;
      }
      psi = std::move(next);
    }
    return psi.dot(w_ * psi).real();
  }

  int n_qubits() const { return n_; }

 private:
  const Matrix& w_;
  int n_;
};

double wrap_2pi(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

// Maps an extended polar angle back into [0, pi]; theta and 2pi - theta with
// phi shifted by pi describe the same ray.
void canonicalize(double& theta, double& phi) {
  theta = wrap_2pi(theta);
  if (theta > kPi) {
    theta = kTwoPi - theta;
    phi = wrap_2pi(phi + kPi);
  } else {
    phi = wrap_2pi(phi);
  }
}

// Minimizes a 2pi-periodic f. The expectation is a + b cos t + c sin t along
// any single angle, so the best of 8 equispaced samples lies within pi/8 of
// the minimum and the +-pi/4 bracket around it is unimodal.
template <typename F>
std::pair<double, double> periodic_line_min(F&& f, double start) {
  constexpr int kGrid = 8;
  constexpr double kStep = kTwoPi / kGrid;
  double best_t = start;
  double best_v = f(start);
  for (int g = 1; g < kGrid; ++g) {
    const double t = start + g * kStep;
    const double v = f(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_t - kStep;
  double hi = best_t + kStep;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-11) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double t = f1 < f2 ? x1 : x2;
  const double v = std::min(f1, f2);
  if (v < best_v) return {t, v};
  return {best_t, best_v};
}

struct Descent {
  double value;
  std::vector<double> theta;
  std::vector<double> phi;
  bool converged;
};

Descent coordinate_descent(const ProductObjective& f, std::vector<double> theta, std::vector<double> phi,
                           double tol, int max_sweeps) {
  const auto n = theta.size();
  double value = f(theta, phi);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = value;
    for (std::size_t q = 0; q < n; ++q) {
      auto along_theta = [&](double t) {
        std::vector<double> th = theta;
        th[q] = t;
        return f(th, phi);
      };
      auto [t, v] = periodic_line_min(along_theta, theta[q]);
      if (v < value) {
        theta[q] = t;
        value = v;
      }
      auto along_phi = [&](double p) {
        std::vector<double> ph = phi;
        ph[q] = p;
        return f(theta, ph);
      };
      auto [p, vp] = periodic_line_min(along_phi, phi[q]);
      if (vp < value) {
        phi[q] = p;
        value = vp;
      }
      canonicalize(theta[q], phi[q]);
    }
    value = f(theta, phi);
    if (before - value < tol / 10.0) return {value, std::move(theta), std::move(phi), true};
  }
  return {value, std::move(theta), std::move(phi), false};
}

}  // namespace

void ProductStateParams::validate() const {
  if (theta.size() != phi.size()) throw std::invalid_argument("theta and phi lengths differ");
  dimension_of(static_cast<int>(theta.size()));
  for (double t : theta) {
    if (!(t >= 0.0 && t <= kPi)) throw std::invalid_argument("theta must lie in [0, pi]");
  }
  for (double p : phi) {
    if (!(p >= 0.0 && p < kTwoPi)) throw std::invalid_argument("phi must lie in [0, 2pi)");
  }
}

StateVector product_state(const ProductStateParams& params) {
  params.validate();
  Vector psi = Vector::Ones(1);
  for (std::size_t q = 0; q < params.theta.size(); ++q) {
    Vector single(2);
    single << std::cos(params.theta[q] / 2.0), std::polar(std::sin(params.theta[q] / 2.0), params.phi[q]);
    psi = kron(psi, single);
  }
  return StateVector::normalized(std::move(psi));
}

OracleReport minimize_witness(const Operator& w, const OracleConfig& config) {
  if (!w.is_hermitian()) throw std::invalid_argument("witness is not Hermitian");
  if (config.restarts < 1) throw std::invalid_argument("oracle needs at least one restart");
  if (config.samples < 0) throw std::invalid_argument("sample count must be nonnegative");

  const ProductObjective f(w);
  const auto n = static_cast<std::size_t>(w.n_qubits());
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> azimuth(0.0, kTwoPi);

  struct Candidate {
    double value;
    std::vector<double> theta;
    std::vector<double> phi;
  };
  const auto draws = static_cast<std::size_t>(std::max(config.samples, config.restarts));
  std::vector<Candidate> pool;
  pool.reserve(draws);
  for (std::size_t s = 0; s < draws; ++s) {
    Candidate c{0.0, std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t q = 0; q < n; ++q) {
      c.theta[q] = std::acos(unit(rng));
      c.phi[q] = wrap_2pi(azimuth(rng));
    }
    c.value = f(c.theta, c.phi);
    pool.push_back(std::move(c));
  }

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pool[a].value < pool[b].value; });

  OracleReport report;
  report.restarts = config.restarts;
  report.samples = config.samples;
  report.seed = config.seed;
  report.converged = true;
  report.min_value = pool[order.front()].value;
  report.argmin = {pool[order.front()].theta, pool[order.front()].phi};

  // Restarts are merged by (value, restart index): strict < keeps the
  // earliest restart on ties.
  for (int r = 0; r < config.restarts; ++r) {
    const Candidate& start = pool[order[static_cast<std::size_t>(r)]];
    Descent d = coordinate_descent(f, start.theta, start.phi, config.tol, config.max_sweeps);
    report.converged = report.converged && d.converged;
    if (d.value < report.min_value) {
      report.min_value = d.value;
      report.argmin = {std::move(d.theta), std::move(d.phi)};
    }
  }
  return report;
}

bool verify_witness(const Operator& w, const OracleConfig& config) {
  return minimize_witness(w, config).min_value >= -config.tol;
}

double coarse_grid_minimum(const Operator& w) {
  if (!w.is_hermitian()) throw std::invalid_argument("witness is not Hermitian");
  const int n = w.n_qubits();
  if (n > 4) throw std::invalid_argument("coarse grid scan is limited to four qubits");
  constexpr int kLevels = 5;
  std::array<Vector, kLevels * kLevels> singles;
  for (int a = 0; a < kLevels; ++a) {
    for (int b = 0; b < kLevels; ++b) {
      const double theta = kPi * a / (kLevels - 1);
      const double phi = kTwoPi * b / kLevels;
      Vector s(2);
      s << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
      singles[static_cast<std::size_t>(a * kLevels + b)] = s;
    }
  }
  const std::size_t per_qubit = singles.size();
  std::size_t total = 1;
  for (int q = 0; q < n; ++q) total *= per_qubit;

  double best = INFINITY;
  for (std::size_t code = 0; code < total; ++code) {
    Vector psi = Vector::Ones(1);
    std::size_t rest = code;
    for (int q = 0; q < n; ++q) {
      psi = kron(psi, singles[rest % per_qubit]);
      rest /= per_qubit;
    }
    best = std::min(best, psi.dot(w.matrix() * psi).real());
  }
  return best;
}

}  // namespace dickelab
