#include "mlspec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mlspec/error.hpp"

namespace mlspec {

namespace {

using LComplex = std::complex<long double>;

struct Horner {
  LComplex value;
  LComplex derivative;
  long double scale;  // sum |a_k| |z|^k
};

Horner horner(const std::vector<long double>& a, LComplex z) {
  LComplex p = a.back();
  LComplex dp = 0.0L;
  long double s = std::abs(a.back());
  const long double az = std::abs(z);
  for (size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    s = s * az + std::abs(a[k]);
  }
  return {p, dp, s};
}

long double backward_error(const std::vector<long double>& a, LComplex z) {
  const Horner h = horner(a, z);
  return h.scale == 0.0L ? 0.0L : std::abs(h.value) / h.scale;
}

std::vector<Complex> merge_clusters(std::vector<Complex> roots, double radius) {
  std::vector<int> owner(roots.size(), -1);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (owner[i] >= 0) continue;
    owner[i] = static_cast<int>(i);
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (owner[j] >= 0) continue;
      const double scale = std::max(1.0, std::abs(roots[i]));
      if (std::abs(roots[i] - roots[j]) <= radius * scale) owner[j] = static_cast<int>(i);
    }
  }
  std::vector<Complex> out(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    if (owner[i] != static_cast<int>(i)) continue;
    Complex sum = 0.0;
    int count = 0;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (owner[j] == static_cast<int>(i)) {
        sum += roots[j];
        ++count;
      }
    }
    const Complex mean = sum / static_cast<double>(count);
    for (size_t j = 0; j < roots.size(); ++j) {
      if (owner[j] == static_cast<int>(i)) out[j] = mean;
    }
  }
  return out;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const long double> ascending, double tol) {
  std::vector<long double> a(ascending.begin(), ascending.end());
  while (!a.empty() && a.back() == 0.0L) a.pop_back();
  if (a.empty()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");

  std::vector<Complex> roots;
  size_t zeros = 0;
  while (zeros < a.size() - 1 && a[zeros] == 0.0L) ++zeros;
  roots.assign(zeros, Complex(0.0, 0.0));
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));

  const size_t n = a.size() - 1;
  if (n == 0) return roots;
  const long double lead = a.back();
  for (auto& c : a) c /= lead;
  if (n == 1) {
    roots.emplace_back(static_cast<double>(-a[0]), 0.0);
    return roots;
  }

  // Start on a circle at the geometric mean of the root moduli, rotated off the
  // real axis so conjugate pairs separate from the first sweep.
  const long double radius = std::pow(std::abs(a[0]), 1.0L / static_cast<long double>(n));
  std::vector<LComplex> z(n);
  for (size_t k = 0; k < n; ++k) {
    const long double angle =
        2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<bool> done(n, false);
  int sweep = 0;
  for (; sweep < kMaxAberthSweeps; ++sweep) {
    bool all_done = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Horner h = horner(a, z[i]);
      if (h.value == 0.0L || std::abs(h.value) <= 4.0L * eps * h.scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      LComplex repulsion = 0.0L;
      for (size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      }
      LComplex newton = h.derivative == 0.0L ? LComplex(eps, eps) : h.value / h.derivative;
      const LComplex step = newton / (1.0L - newton * repulsion);
      z[i] -= step;
      if (std::abs(step) <= 4.0L * eps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }

  for (size_t i = 0; i < n; ++i) {
    const long double err = backward_error(a, z[i]);
    if (!(err < tol)) {
      throw Error(ErrorCode::NonConvergence, "root iteration stalled after " + std::to_string(sweep) +
                                                 " sweeps, backward error " + std::to_string(static_cast<double>(err)));
    }
  }

  std::vector<Complex> found;
  found.reserve(n);
  for (const auto& w : z) found.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  found = merge_clusters(std::move(found), 1e2 * tol);
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

std::vector<Complex> polynomial_roots(const UniPoly<Rational>& p, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  // Exact square-free split first: every factor then has simple roots, which
  // the iteration resolves to full precision, and multiplicities are exact.
  std::vector<Complex> out;
  const auto factors = square_free_decomposition(p);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    std::vector<long double> a;
    a.reserve(factors[i].coefficients().size());
    for (const Rational& c : factors[i].coefficients()) a.push_back(to_long_double(c));
    const auto simple = polynomial_roots(std::span<const long double>(a), tol);
    for (size_t rep = 0; rep <= i; ++rep) out.insert(out.end(), simple.begin(), simple.end());
  }
  return out;
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius) {
  std::vector<RootCluster> out;
  for (const Complex& z : roots) {
    auto it = std::find_if(out.begin(), out.end(), [&](const RootCluster& c) {
      return std::abs(c.value - z) <= radius * std::max(1.0, std::abs(z));
    });
    if (it == out.end()) {
      out.push_back({z, 1});
    } else {
      ++it->multiplicity;
    }
  }
  return out;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    double worst = 0.0;
    for (const Complex& x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& y : to) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace mlspec
