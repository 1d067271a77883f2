// Copyright 2026 The gconc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gconc/axisym.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace gconc::axisym {

namespace {
constexpr double kSlack = 1e-10;
constexpr double kTraceTol = 1e-9;
}  // namespace

AxisymState::AxisymState(Dim d, double a, double b, double c)
    : d_(d), a_(a), b_(b), c_(c) {
  const int n = d_.value();
  double trace = n * a_ + n * (n - 1) * c_;
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw std::invalid_argument("AxisymState: trace deviates from 1 by " +
                                std::to_string(std::abs(trace - 1.0)));
  }
  if (a_ - b_ < -kSlack) {
    throw std::invalid_argument("AxisymState: a - b < 0 violates positivity");
  }
  if (a_ + (n - 1) * b_ < -kSlack) {
    throw std::invalid_argument(
        "AxisymState: a + (d-1) b < 0 violates positivity");
  }
  if (c_ < -kSlack) {
    throw std::invalid_argument("AxisymState: c < 0 violates positivity");
  }
  double f = fidelity();
  if (f < -1e-9 || f > 1.0 + 1e-9) {
    throw std::invalid_argument("AxisymState: fidelity outside [0,1]");
  }
}

AxisymState project_axisym(const DensityMatrix& rho) {
  const int d = rho.d();
  const Matrix& r = rho.entries();
  double a = 0, b = 0, c = 0;
  for (int j = 0; j < d; ++j) {
    a += r(composite_index(j, j, d), composite_index(j, j, d)).real();
    for (int k = 0; k < d; ++k) {
      if (j == k) continue;
      c += r(composite_index(j, k, d), composite_index(j, k, d)).real();
      if (j > k) {
        b += 2.0 * r(composite_index(j, j, d), composite_index(k, k, d)).real();
      }
    }
  }
  a /= d;
  b /= d * (d - 1);
  c /= d * (d - 1);
  return AxisymState(rho.dim(), a, b, c);
}

DensityMatrix axisym_to_matrix(const AxisymState& s) {
  const int d = s.d();
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (j == k) {
        m(composite_index(j, j, d), composite_index(j, j, d)) = s.a();
      } else {
        m(composite_index(j, k, d), composite_index(j, k, d)) = s.c();
        m(composite_index(j, j, d), composite_index(k, k, d)) = s.b();
      }
    }
  }
  return DensityMatrix::validated(s.dim(), std::move(m));
}

double cg_axisym(double F, Dim d) {
  if (F < -1e-12 || F > 1.0 + 1e-12) {
    throw std::domain_error("cg_axisym: F must lie in [0,1]");
  }
  double v = 1.0 - d.value() * (1.0 - F);
  return v > 0 ? v : 0.0;
}

double c2_axisym(double F, Dim d) {
  if (F < -1e-12 || F > 1.0 + 1e-12) {
    throw std::domain_error("c2_axisym: F must lie in [0,1]");
  }
  const int n = d.value();
  double v = std::sqrt(2.0 * n / (n - 1.0)) * (F - 1.0 / n);
  return v > 0 ? v : 0.0;
}

HsCoords coords_xy(const AxisymState& s) {
  const int d = s.d();
  double x = std::sqrt(static_cast<double>(d) * (d - 1)) * s.b();
  double y = (d * s.a() - 1.0 / d) / std::sqrt(d - 1.0);
  return HsCoords{x, y};
}

namespace {

struct Pt {
  double x, y;
};

double dist(const Pt& p, const Pt& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double segment_distance(const Pt& p, const Pt& a, const Pt& b) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return dist(p, a);
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return dist(p, Pt{a.x + t * vx, a.y + t * vy});
}

// Fidelity as an affine function of the coordinates.
double fidelity_at(const Pt& p, int d) {
  return 1.0 / (d * d) + p.y * std::sqrt(d - 1.0) / d +
         p.x * std::sqrt((d - 1.0) / d);
}

// Vertices of the invariant-family triangle in HS coordinates.
std::array<Pt, 3> family_triangle(int d) {
  Pt phi{std::sqrt((d - 1.0) / d), std::sqrt(d - 1.0) / d};
  Pt neg{-1.0 / std::sqrt(static_cast<double>(d) * (d - 1)),
         std::sqrt(d - 1.0) / d};
  Pt bottom{0.0, -1.0 / (d * std::sqrt(d - 1.0))};
  return {phi, neg, bottom};
}

// Clips a convex polygon against the halfplane {fidelity <= level}.
std::vector<Pt> clip_fidelity(const std::vector<Pt>& poly, int d, double level) {
  std::vector<Pt> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % n];
    double fc = fidelity_at(cur, d) - level;
    double fn = fidelity_at(nxt, d) - level;
    if (fc <= 0) out.push_back(cur);
    if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) {
      double t = fc / (fc - fn);
      out.push_back(Pt{cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

bool inside_convex(const Pt& p, const std::vector<Pt>& poly) {
  // Polygon is stored counterclockwise or clockwise consistently; check the
  // sign of the cross products against all edges.
  const std::size_t n = poly.size();
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    double cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (std::abs(cr) < 1e-15) continue;
    int s = cr > 0 ? 1 : -1;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
  }
  return true;
}

double point_to_region(const Pt& p, const std::vector<Pt>& poly) {
  if (poly.empty()) {
    throw std::logic_error("distance_lower_bound: empty feasible region");
  }
  if (poly.size() == 1) return dist(p, poly[0]);
  if (inside_convex(p, poly)) return 0.0;
  double best = dist(p, poly[0]);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best,
                    segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  }
  return best;
}

}  // namespace

double distance_lower_bound(const AxisymState& s, int k) {
  const int d = s.d();
  if (k < 1 || k > d - 1) {
    throw std::invalid_argument("distance_lower_bound: k must lie in [1, d-1]");
  }
  auto tri = family_triangle(d);
  std::vector<Pt> poly(tri.begin(), tri.end());
  poly = clip_fidelity(poly, d, static_cast<double>(k) / d);
  HsCoords c = coords_xy(s);
  return point_to_region(Pt{c.x, c.y}, poly);
}

double distance_lower_bound(const DensityMatrix& rho, int k) {
  return distance_lower_bound(project_axisym(rho), k);
}

AxisymState axisym_from_pq(Dim dim, double p, double q) {
  if (p < 0 || p > 1 || q < 0 || q > 1) {
    throw std::invalid_argument("axisym_from_pq: p, q must lie in [0,1]");
  }
  const int d = dim.value();
  const double dd = static_cast<double>(d);
  // Components (a, b, c) of the three extremal states:
  //   |Phi><Phi|:            (1/d,          1/d,           0)
  //   (Id - |Phi><Phi|)/(d^2-1): ((d-1)/(d(d^2-1)), -1/(d(d^2-1)), 1/(d^2-1))
  //   uniform off-sector:    (0,            0,             1/(d(d-1)))
  double n1 = dd * (dd * dd - 1.0);
  double a = p / dd + (1 - p) * q * (dd - 1.0) / n1;
  double b = p / dd - (1 - p) * q / n1;
  double c = (1 - p) * (q / (dd * dd - 1.0) + (1 - q) / (dd * (dd - 1.0)));
  return AxisymState(dim, a, b, c);
}

AxisymState axisym_from_fidelity(Dim dim, double F) {
  if (F < 0 || F > 1) {
    throw std::invalid_argument("axisym_from_fidelity: F must lie in [0,1]");
  }
  const int d = dim.value();
  const double dd = static_cast<double>(d);
  // White-noise mixtures p|Phi><Phi| + (1-p) Id/d^2 have F = p + (1-p)/d^2;
  // p may run down to -1/(d^2-1), where the segment meets the F = 0 edge.
  double p = (F - 1.0 / (dd * dd)) / (1.0 - 1.0 / (dd * dd));
  double a = p / dd + (1 - p) / (dd * dd);
  double b = p / dd;
  double c = (1 - p) / (dd * dd);
  return AxisymState(dim, a, b, c);
}

}  // namespace gconc::axisym
