// Copyright 2026 The povmrand authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povmrand/probrange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace povmrand {

ProbPoint prob_point(const Povm& p, const HermitianMatrix& rho) {
  if (rho.dim() != p.dim()) {
    throw std::invalid_argument("prob_point: state dimension mismatch");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-8) {
    throw std::invalid_argument("prob_point: state must have unit trace");
  }
  if (lambda_min(rho) < -1e-9) {
    throw std::invalid_argument("prob_point: state must be positive semidefinite");
  }
  ProbPoint q(p.outcomes());
  for (int i = 0; i < p.outcomes(); ++i) {
    q(i) = (rho.matrix() * p.effect(i).matrix()).trace().real();
  }
  return q;
}

HermitianMatrix random_pure_state(int dim, RandomStream& stream) {
  ComplexVector psi(dim);
  for (int i = 0; i < dim; ++i) psi(i) = stream.complex_gaussian();
  psi.normalize();
  return HermitianMatrix::trusted(psi * psi.adjoint());
}

DiagPolytope diag_polytope(const Povm& p, double offdiag_tol) {
  for (const Effect& e : p.effects()) {
    ComplexMatrix off = e.matrix();
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > offdiag_tol) {
      throw std::invalid_argument("diag_polytope: effects must be diagonal");
    }
  }
  DiagPolytope poly;
  poly.vertices.reserve(p.dim());
  for (int j = 0; j < p.dim(); ++j) {
    ProbPoint alpha(p.outcomes());
    for (int i = 0; i < p.outcomes(); ++i) {
      alpha(i) = p.effect(i).matrix()(j, j).real();
    }
    poly.vertices.push_back(std::move(alpha));
  }
  return poly;
}

namespace {

using Point2 = Eigen::Vector2d;

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

/// Monotone chain; returns the hull in counter-clockwise order.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) {
                          return a.x() == b.x() && a.y() == b.y();
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<Point2> hull(2 * n);
  int h = 0;
  for (int i = 0; i < n; ++i) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0.0) --h;
    hull[h++] = pts[i];
  }
  for (int i = n - 2, lower = h + 1; i >= 0; --i) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0.0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  return hull;
}

double segment_distance(const Point2& a, const Point2& b, const Point2& q) {
  const Point2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (q - a).norm();
  const double t = std::clamp((q - a).dot(ab) / len2, 0.0, 1.0);
  return (q - (a + t * ab)).norm();
}

}  // namespace

bool contains(const DiagPolytope& poly, const ProbPoint& q, double tol) {
  if (poly.vertices.empty() || poly.vertices.front().size() != 3 ||
      q.size() != 3) {
    throw std::invalid_argument("contains: implemented for k = 3 only");
  }
  std::vector<Point2> pts;
  pts.reserve(poly.vertices.size());
  for (const ProbPoint& v : poly.vertices) pts.push_back({v(0), v(1)});
  const Point2 point{q(0), q(1)};
  const std::vector<Point2> hull = convex_hull(std::move(pts));
  if (hull.size() == 1) return (point - hull[0]).norm() <= tol;
  if (hull.size() == 2) return segment_distance(hull[0], hull[1], point) <= tol;
  bool inside = true;
  double boundary = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2& a = hull[i];
    const Point2& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, point) < 0.0) inside = false;
    boundary = std::min(boundary, segment_distance(a, b, point));
  }
  return inside || boundary <= tol;
}

double circle_range_radius(const Povm& p, RandomStream& stream,
                           int num_states) {
  if (p.outcomes() != 3 || p.dim() != 2) {
    throw std::invalid_argument(
        "circle_range_radius: expects a 3-outcome qubit POVM");
  }
  const ProbPoint center = ProbPoint::Constant(3, 1.0 / 3.0);
  double radius = 0.0;
  for (int trial = 0; trial < num_states; ++trial) {
    const HermitianMatrix rho = random_pure_state(2, stream);
    radius = std::max(radius, (prob_point(p, rho) - center).norm());
  }
  return radius;
}

}  // namespace povmrand
