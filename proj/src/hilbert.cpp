#include "mlspec/hilbert.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "mlspec/error.hpp"

namespace mlspec {

namespace {

constexpr double kGeometryTolerance = 1e-12;

// Calls visit(indices) for every k-subset of {0, ..., n-1}.
void for_each_subset(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& visit) {
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (pos == k) {
      visit(idx);
      return;
    }
    for (size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

RealMatrix normal_rows(const std::vector<Halfspace>& hs, const std::vector<size_t>& idx, int dim) {
  RealMatrix a(static_cast<Eigen::Index>(idx.size()), dim);
  for (size_t r = 0; r < idx.size(); ++r) a.row(static_cast<Eigen::Index>(r)) = hs[idx[r]].normal.transpose();
  return a;
}

// A polyhedron {A x <= b} is bounded iff its recession cone {A d <= 0} is
// trivial. If A has full column rank that cone is pointed, and a nonzero cone
// has an extreme ray cut out by dim - 1 independent active constraints.
bool recession_cone_trivial(const std::vector<Halfspace>& hs, int dim) {
  if (hs.empty()) return false;
  RealMatrix all(static_cast<Eigen::Index>(hs.size()), dim);
  for (size_t i = 0; i < hs.size(); ++i) all.row(static_cast<Eigen::Index>(i)) = hs[i].normal.transpose();
  Eigen::FullPivLU<RealMatrix> lu(all);
  if (lu.rank() < dim) return false;
  if (dim == 1) {
    bool up = false;
    bool down = false;
    for (const auto& h : hs) {
      up = up || h.normal(0) > 0.0;
      down = down || h.normal(0) < 0.0;
    }
    return up && down;
  }
  bool trivial = true;
  for_each_subset(hs.size(), static_cast<size_t>(dim - 1), [&](const std::vector<size_t>& idx) {
    if (!trivial) return;
    const RealMatrix a = normal_rows(hs, idx, dim);
    Eigen::FullPivLU<RealMatrix> sub(a);
    if (sub.rank() != dim - 1) return;
    const RealVector d = sub.kernel().col(0).normalized();
    for (const double sign : {1.0, -1.0}) {
      bool feasible = true;
      for (const auto& h : hs) {
        if (sign * h.normal.dot(d) > kGeometryTolerance * h.normal.norm()) {
          feasible = false;
          break;
        }
      }
      if (feasible) trivial = false;
    }
  });
  return trivial;
}

RealVector vertex_mean(const std::vector<Halfspace>& hs, int dim) {
  RealVector sum = RealVector::Zero(dim);
  int count = 0;
  for_each_subset(hs.size(), static_cast<size_t>(dim), [&](const std::vector<size_t>& idx) {
    const RealMatrix a = normal_rows(hs, idx, dim);
    Eigen::FullPivLU<RealMatrix> lu(a);
    if (lu.rank() < dim) return;
    RealVector b(dim);
    for (int r = 0; r < dim; ++r) b(r) = hs[idx[static_cast<size_t>(r)]].offset;
    const RealVector v = lu.solve(b);
    for (const auto& h : hs) {
      if (h.normal.dot(v) > h.offset + kGeometryTolerance * std::max(1.0, std::abs(h.offset))) return;
    }
    sum += v;
    ++count;
  });
  if (count == 0) throw Error(ErrorCode::InvalidDomain, "polytope has no vertices");
  return sum / count;
}

void check_point(const ConvexDomain& domain, const RealVector& x, const char* name) {
  if (x.size() != domain.dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " has dimension " + std::to_string(x.size()) +
                                                  ", domain has " + std::to_string(domain.dim()));
  }
  if (!domain.contains(x)) throw Error(ErrorCode::PointNotInterior, std::string(name) + " is not strictly interior");
}

// Real roots t_minus < 0 < 1 < t_plus of a t^2 + 2 b t + c = 0 (a > 0, c < 0).
std::pair<double, double> quadratic_chord(double a, double b, double c) {
  const double disc = std::sqrt(b * b - a * c);
  // Avoid cancellation: compute the larger-magnitude root first.
  const double big = b >= 0.0 ? -b - disc : -b + disc;
  const double t1 = big / a;
  const double t2 = c / big;
  return {std::min(t1, t2), std::max(t1, t2)};
}

// Smallest right singular vector of M - lambda I: the eigenvector of a simple
// real eigenvalue.
RealVector eigenvector(const RealMatrix& m, double lambda) {
  const RealMatrix shifted = m - lambda * RealMatrix::Identity(m.rows(), m.cols());
  Eigen::JacobiSVD<RealMatrix> svd(shifted, Eigen::ComputeFullV);
  return svd.matrixV().col(m.cols() - 1);
}

}  // namespace

ConvexDomain ConvexDomain::ellipsoid(RealVector center, RealMatrix shape) {
  if (shape.rows() != shape.cols() || shape.rows() != center.size() || center.size() == 0) {
    throw Error(ErrorCode::InvalidDomain, "ellipsoid center and shape dimensions disagree");
  }
  if (!shape.isApprox(shape.transpose(), 1e-12)) throw Error(ErrorCode::InvalidDomain, "shape matrix is not symmetric");
  Eigen::LLT<RealMatrix> llt(shape);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::InvalidDomain, "shape matrix is not positive definite");
  return ConvexDomain(Ellipsoid{std::move(center), std::move(shape)});
}

ConvexDomain ConvexDomain::polytope(std::vector<Halfspace> halfspaces) {
  if (halfspaces.empty()) throw Error(ErrorCode::InvalidDomain, "polytope without halfspaces");
  const auto dim = static_cast<int>(halfspaces.front().normal.size());
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim || dim == 0) throw Error(ErrorCode::InvalidDomain, "halfspace normals differ in dimension");
  }
  if (!recession_cone_trivial(halfspaces, dim)) throw Error(ErrorCode::InvalidDomain, "polytope is unbounded");
  RealVector interior = vertex_mean(halfspaces, dim);
  return polytope(std::move(halfspaces), std::move(interior));
}

ConvexDomain ConvexDomain::polytope(std::vector<Halfspace> halfspaces, RealVector interior) {
  if (halfspaces.empty()) throw Error(ErrorCode::InvalidDomain, "polytope without halfspaces");
  const auto dim = static_cast<int>(interior.size());
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim || dim == 0) throw Error(ErrorCode::InvalidDomain, "halfspace normals differ in dimension");
    if (h.normal.norm() == 0.0) throw Error(ErrorCode::InvalidDomain, "halfspace with zero normal");
  }
  if (!recession_cone_trivial(halfspaces, dim)) throw Error(ErrorCode::InvalidDomain, "polytope is unbounded");
  ConvexDomain d(Polytope{std::move(halfspaces), std::move(interior)});
  if (!d.contains(std::get<Polytope>(d.shape_).interior)) {
    throw Error(ErrorCode::InvalidDomain, "reference point is not interior (or the polytope is empty)");
  }
  return d;
}

ConvexDomain ConvexDomain::unit_ball(int dim) {
  return ellipsoid(RealVector::Zero(dim), RealMatrix::Identity(dim, dim));
}

ConvexDomain ConvexDomain::cube(int dim) {
  std::vector<Halfspace> hs;
  for (int k = 0; k < dim; ++k) {
    for (const double sign : {1.0, -1.0}) {
      RealVector n = RealVector::Zero(dim);
      n(k) = sign;
      hs.push_back({n, 1.0});
    }
  }
  return polytope(std::move(hs), RealVector::Zero(dim));
}

int ConvexDomain::dim() const {
  return std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Ellipsoid>) {
          return static_cast<int>(s.center.size());
        } else {
          return static_cast<int>(s.interior.size());
        }
      },
      shape_);
}

bool ConvexDomain::contains(const RealVector& x, double margin) const {
  if (x.size() != dim()) return false;
  if (const auto* e = std::get_if<Ellipsoid>(&shape_)) {
    const RealVector y = x - e->center;
    return y.dot(e->shape * y) < 1.0 - margin;
  }
  for (const auto& h : std::get<Polytope>(shape_).halfspaces) {
    if (!(h.offset - h.normal.dot(x) > margin * h.normal.norm())) return false;
  }
  return true;
}

ConvexDomain ConvexDomain::transformed(const RealMatrix& linear, const RealVector& shift) const {
  if (linear.rows() != dim() || linear.cols() != dim() || shift.size() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "affine map does not match the domain dimension");
  }
  Eigen::FullPivLU<RealMatrix> lu(linear);
  if (!lu.isInvertible()) throw Error(ErrorCode::SingularMatrix, "affine map is not invertible");
  const RealMatrix inv = lu.inverse();
  if (const auto* e = std::get_if<Ellipsoid>(&shape_)) {
    RealMatrix s = inv.transpose() * e->shape * inv;
    s = (0.5 * (s + s.transpose())).eval();
    return ellipsoid(linear * e->center + shift, s);
  }
  const auto& p = std::get<Polytope>(shape_);
  std::vector<Halfspace> hs;
  hs.reserve(p.halfspaces.size());
  for (const auto& h : p.halfspaces) {
    const RealVector n = inv.transpose() * h.normal;
    hs.push_back({n, h.offset + n.dot(shift)});
  }
  return polytope(std::move(hs), linear * p.interior + shift);
}

Chord chord_endpoints(const ConvexDomain& domain, const RealVector& p, const RealVector& q) {
  check_point(domain, p, "p");
  check_point(domain, q, "q");
  const RealVector u = q - p;
  if (u.norm() == 0.0) throw Error(ErrorCode::PointsCoincide, "p and q coincide; the chord is undefined");
  double t_minus = -std::numeric_limits<double>::infinity();
  double t_plus = std::numeric_limits<double>::infinity();
  if (const auto* e = std::get_if<Ellipsoid>(&domain.shape())) {
    const RealVector y = p - e->center;
    const RealVector su = e->shape * u;
    std::tie(t_minus, t_plus) = quadratic_chord(u.dot(su), y.dot(su), y.dot(e->shape * y) - 1.0);
  } else {
    for (const auto& h : std::get<Polytope>(domain.shape()).halfspaces) {
      const double slack = h.offset - h.normal.dot(p);
      const double rate = h.normal.dot(u);
      if (rate > 0.0) t_plus = std::min(t_plus, slack / rate);
      if (rate < 0.0) t_minus = std::max(t_minus, slack / rate);
    }
  }
  return Chord{p + t_minus * u, p, q, p + t_plus * u, t_minus, t_plus};
}

double hilbert_distance(const ConvexDomain& domain, const RealVector& p, const RealVector& q) {
  check_point(domain, p, "p");
  check_point(domain, q, "q");
  if (p == q) return 0.0;
  const Chord c = chord_endpoints(domain, p, q);
  // With p at 0 and q at 1 on the chord parameter:
  //   |q - p_inf| / |p - p_inf| = 1 + 1 / (-t_minus),
  //   |p - q_inf| / |q - q_inf| = 1 + 1 / (t_plus - 1).
  return std::log1p(-1.0 / c.t_minus) + std::log1p(1.0 / (c.t_plus - 1.0));
}

double axis_translation_length(const RealMatrix& m, const RealMatrix& m_inverse, double tol) {
  const ProximalityClass cls = classify_proximal(m, m_inverse, tol);
  if (cls.tag == Proximality::Identity) return 0.0;
  if (cls.tag != Proximality::Proximal) {
    throw Error(ErrorCode::NotProximal, std::string(to_string(cls.tag)) + ": " + cls.reason);
  }
  const RealVector v_plus = eigenvector(m, *cls.lambda_plus);
  // The repelling point is the attracting point of M^-1.
  const RealVector v_minus = eigenvector(m_inverse, 1.0 / *cls.lambda_minus);

  // Affine chart {w . x = 1} with w = v_plus + v_minus (unit vectors, signs
  // aligned): w is positive on both fixed points, so the whole segment
  // between them is finite in this chart.
  RealVector a = v_plus.normalized();
  RealVector b = v_minus.normalized();
  if (a.dot(b) < 0.0) b = -b;
  const RealVector w = a + b;
  const RealVector p_plus = a / w.dot(a);
  const RealVector p_minus = b / w.dot(b);
  const RealVector x = 0.5 * (p_plus + p_minus);
  RealVector y = m * x;
  y /= w.dot(y);

  // Position along the segment from p_minus (s = 0) to p_plus (s = 1),
  // measured from both ends so that neither s nor 1 - s loses precision.
  const RealVector axis = p_plus - p_minus;
  const double len2 = axis.squaredNorm();
  const double s_y = (y - p_minus).dot(axis) / len2;
  const double s_y_comp = (p_plus - y).dot(axis) / len2;
  const double s_x = 0.5;
  return std::abs(std::log(s_y / s_y_comp) - std::log(s_x / (1.0 - s_x)));
}

double axis_translation_length(const SquareMatrix& m, double tol) {
  return axis_translation_length(m.to_real(), m.inverse().to_real(), tol);
}

}  // namespace mlspec
