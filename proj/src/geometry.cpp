#include "asymfun/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "asymfun/errors.hpp"
#include "asymfun/quadrature.hpp"

namespace asymfun {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kArcPoints = 128;

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }

// Parameter interval [lo, hi] (on a) where the pieces meet, if they do.
std::optional<std::pair<double, double>> meeting_params(const Piece& a, const Piece& b) {
  const double la = std::abs(a.dir);
  const double lb = std::abs(b.dir);
  const cplx diff = b.start - a.start;
  const double scale = 1.0 + std::abs(a.start) + std::abs(b.start);
  const double denom = cross(a.dir, b.dir);
  const double tol = 1e-12;
  if (std::abs(denom) > 1e-12 * la * lb) {
    const double s = cross(diff, b.dir) / denom;
    const double u = cross(diff, a.dir) / denom;
    const double stol = tol * scale / la;
    const double utol = tol * scale / lb;
    if (s < -stol || s > a.smax + stol || u < -utol || u > b.smax + utol) return std::nullopt;
    const double sc = std::clamp(s, 0.0, a.smax);
    return std::make_pair(sc, sc);
  }
  // Parallel: only collinear overlaps count.
  if (std::abs(cross(diff, a.dir)) > tol * scale * la) return std::nullopt;
  const double la2 = la * la;
  const double u0 = dot(diff, a.dir) / la2;
  const double slope = dot(b.dir, a.dir) / la2;
  double u1 = b.is_ray() ? (slope > 0 ? kInf : -kInf) : u0 + slope * b.smax;
  double lo = std::max(0.0, std::min(u0, u1));
  double hi = std::min(a.smax, std::max(u0, u1));
  const double stol = tol * scale / la;
  if (lo > hi + stol) return std::nullopt;
  return std::make_pair(lo, std::max(lo, hi));
}

// Whether the pieces share a point farther than `radius` from the origin.
bool meet_beyond(const Piece& a, const Piece& b, double radius) {
  auto m = meeting_params(a, b);
  if (!m) return false;
  if (std::isinf(m->second)) return true;
  return std::max(std::abs(a.point(m->first)), std::abs(a.point(m->second))) > radius;
}

// Parameters s in [0, smax] where |start + s dir| = t.
std::vector<double> circle_params(const Piece& p, double t) {
  const double A = std::norm(p.dir);
  const double B = 2.0 * dot(p.start, p.dir);
  const double C = std::norm(p.start) - t * t;
  const double disc = B * B - 4.0 * A * C;
  std::vector<double> out;
  if (disc < 0.0) return out;
  const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  std::vector<double> roots;
  if (q != 0.0) {
    roots.push_back(q / A);
    roots.push_back(C / q);
  }
  for (double s : roots) {
    if (s >= 0.0 && s <= p.smax) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Radius of the closest approach to the origin strictly inside the piece.
std::optional<double> closest_approach(const Piece& p) {
  const double s = -dot(p.start, p.dir) / std::norm(p.dir);
  if (s > 0.0 && s < p.smax) return std::abs(p.point(s));
  return std::nullopt;
}

// Path vertices followed by the point where the terminal ray reaches |w| = rbig.
std::vector<cplx> truncated_polyline(const SegmentalPath& path, double rbig) {
  std::vector<cplx> pts = path.vertices;
  const Piece ray{path.vertices.back(), path.terminal_direction, kInf};
  auto s = circle_params(ray, rbig);
  pts.push_back(ray.point(s.back()));
  return pts;
}

double max_vertex_radius(const SegmentalPath& p) {
  double r = 0.0;
  for (cplx v : p.vertices) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace

bool Piece::is_ray() const { return std::isinf(smax); }

SegmentalPath SegmentalPath::ray(double angle) {
  SegmentalPath p;
  p.terminal_direction = std::polar(1.0, angle);
  return p;
}

std::vector<Piece> SegmentalPath::pieces() const {
  std::vector<Piece> out;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    out.push_back({vertices[k], vertices[k + 1] - vertices[k], 1.0});
  }
  out.push_back({vertices.back(), terminal_direction, kInf});
  return out;
}

void SegmentalPath::validate() const {
  if (vertices.empty() || vertices.front() != cplx(0.0, 0.0)) {
    throw DomainError("SegmentalPath: first vertex must be 0");
  }
  if (std::abs(std::abs(terminal_direction) - 1.0) > 1e-12) {
    throw DomainError("SegmentalPath: terminal direction must be a unit vector");
  }
  for (cplx v : vertices) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("SegmentalPath: non-finite vertex");
    }
  }
  const auto ps = pieces();
  for (const Piece& p : ps) {
    if (std::abs(p.dir) == 0.0) throw DomainError("SegmentalPath: repeated vertex");
  }
  for (std::size_t a = 0; a < ps.size(); ++a) {
    if (a + 1 < ps.size()) {
      // Adjacent pieces may only share their common vertex.
      const cplx d1 = ps[a].dir / std::abs(ps[a].dir);
      const cplx d2 = ps[a + 1].dir / std::abs(ps[a + 1].dir);
      if (std::abs(cross(d1, d2)) < 1e-12 && dot(d1, d2) < 0.0) {
        throw DomainError("SegmentalPath: path doubles back on itself");
      }
    }
    for (std::size_t b = a + 2; b < ps.size(); ++b) {
      if (meeting_params(ps[a], ps[b])) throw DomainError("SegmentalPath: path is not simple");
    }
  }
}

PathSystem PathSystem::equally_spaced_rays(int n, double offset) {
  if (n < 1) throw DomainError("equally_spaced_rays: n must be >= 1");
  PathSystem sys;
  for (int k = 0; k < n; ++k) {
    SegmentalPath p;
    p.terminal_direction = std::polar(1.0, offset + kTwoPi * k / n);
    sys.paths.push_back(p);
    sys.labels.push_back("a" + std::to_string(k + 1));
  }
  return sys;
}

void PathSystem::validate() const {
  const int n = size();
  if (n < 1) throw DomainError("PathSystem: needs at least one path");
  if (labels.size() != paths.size()) throw DomainError("PathSystem: one label per path required");
  for (const auto& p : paths) p.validate();
  for (int a = 0; a < n; ++a) {
    const auto pa = paths[a].pieces();
    for (int b = a + 1; b < n; ++b) {
      const auto pb = paths[b].pieces();
      for (const Piece& x : pa) {
        for (const Piece& y : pb) {
          if (meet_beyond(x, y, 1e-12)) {
            throw DomainError("PathSystem: paths " + std::to_string(a) + " and " + std::to_string(b) +
                              " intersect away from the origin");
          }
        }
      }
    }
  }
  if (n >= 2) {
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      const double gap =
          std::arg(paths[(k + 1) % n].terminal_direction / paths[k].terminal_direction);
      double g = gap <= 0.0 ? gap + kTwoPi : gap;
      if (std::abs(gap) < 1e-14) g = 0.0;
      if (g <= 0.0) throw DomainError("PathSystem: terminal directions must be distinct");
      total += g;
    }
    if (std::abs(total - kTwoPi) > 1e-9) {
      throw DomainError("PathSystem: paths are not ordered counterclockwise");
    }
  }
}

std::optional<cplx> intersect(const Piece& a, const Piece& b) {
  auto m = meeting_params(a, b);
  if (!m) return std::nullopt;
  return a.point(m->first);
}

double distance_to_piece(cplx z, const Piece& p) {
  const double s = std::clamp(dot(z - p.start, p.dir) / std::norm(p.dir), 0.0, p.smax);
  return std::abs(z - p.point(s));
}

std::vector<Piece> boundary_pieces(const PathSystem& sys, int j) {
  const int n = sys.size();
  if (j < 0 || j >= n) throw DomainError("domain index out of range");
  auto out = sys.paths[j].pieces();
  if (n > 1) {
    auto more = sys.paths[(j + 1) % n].pieces();
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

double distance_to_boundary(const PathSystem& sys, int j, cplx z) {
  double d = kInf;
  for (const Piece& p : boundary_pieces(sys, j)) d = std::min(d, distance_to_piece(z, p));
  return d;
}

bool in_domain(const PathSystem& sys, int j, cplx z) {
  const int n = sys.size();
  if (j < 0 || j >= n) throw DomainError("domain index out of range");
  const SegmentalPath& lower = sys.paths[j];
  const SegmentalPath& upper = sys.paths[(j + 1) % n];
  double rbig = 4.0 * std::max({std::abs(z), max_vertex_radius(lower), max_vertex_radius(upper)});
  if (rbig == 0.0) rbig = 1.0;

  std::vector<cplx> poly = truncated_polyline(lower, rbig);
  const std::vector<cplx> back = truncated_polyline(upper, rbig);
  const double a0 = std::arg(poly.back());
  double sweep = std::arg(back.back()) - a0;
  while (sweep <= 0.0) sweep += kTwoPi;
  if (n == 1) sweep = kTwoPi;
  for (int k = 1; k < kArcPoints; ++k) poly.push_back(std::polar(rbig, a0 + sweep * k / kArcPoints));
  poly.insert(poly.end(), back.rbegin(), back.rend());

  double winding = 0.0;
  for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
    const cplx u = poly[k] - z;
    const cplx v = poly[k + 1] - z;
    winding += std::atan2(cross(u, v), dot(u, v));
  }
  return std::lround(winding / kTwoPi) != 0;
}

AngularSlice angular_measure(const PathSystem& sys, int j, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("angular_measure: t must be positive");
  const auto pieces = boundary_pieces(sys, j);
  const double dtol = kDegenerateRadiusTol * t;
  std::vector<double> angles;
  for (const Piece& p : pieces) {
    if (std::abs(p.start) > 0.0 && std::abs(std::abs(p.start) - t) <= dtol) {
      throw DegenerateRadius("angular_measure: circle passes through a vertex at t = " + std::to_string(t));
    }
    if (auto rc = closest_approach(p); rc && std::abs(*rc - t) <= dtol) {
      throw DegenerateRadius("angular_measure: circle tangent to a segment at t = " + std::to_string(t));
    }
    for (double s : circle_params(p, t)) angles.push_back(std::arg(p.point(s)));
  }
  std::sort(angles.begin(), angles.end());

  AngularSlice slice;
  slice.t = t;
  if (angles.empty()) {
    if (in_domain(sys, j, cplx(t, 0.0))) {
      slice.arcs.push_back({-kPi, kPi});
      slice.phi = kTwoPi;
    }
    return slice;
  }
  const std::size_t m = angles.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double a = angles[k];
    const double b = (k + 1 < m) ? angles[k + 1] : angles[0] + kTwoPi;
    if (b - a <= 1e-15) {
      throw DegenerateRadius("angular_measure: coincident crossings at t = " + std::to_string(t));
    }
    if (in_domain(sys, j, std::polar(t, 0.5 * (a + b)))) {
      slice.arcs.push_back({a, b});
      slice.phi += b - a;
    }
  }
  return slice;
}

std::vector<double> critical_radii(const PathSystem& sys, int j) {
  std::vector<double> out;
  for (const Piece& p : boundary_pieces(sys, j)) {
    if (std::abs(p.start) > 0.0) out.push_back(std::abs(p.start));
    if (auto rc = closest_approach(p); rc && *rc > 0.0) out.push_back(*rc);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double carleman_integral(const PathSystem& sys, int j, double R1, double R, double tol) {
  if (!(R1 > 0.0) || !(R >= R1)) throw DomainError("carleman_integral: need 0 < R1 <= R");
  if (!(tol > 0.0)) throw DomainError("carleman_integral: tol must be positive");
  if (R == R1) return 0.0;

  auto inv_phi = [&](cplx s) -> cplx {
    const double t = std::exp(s.real());
    try {
      return 1.0 / angular_measure(sys, j, t).phi;
    } catch (const DegenerateRadius&) {
    }
    try {
      return 1.0 / angular_measure(sys, j, t * (1.0 + kRadiusJitter)).phi;
    } catch (const DegenerateRadius&) {
    }
    return 1.0 / angular_measure(sys, j, t * (1.0 - kRadiusJitter)).phi;
  };

  std::vector<double> breaks{std::log(R1)};
  for (double r : critical_radii(sys, j)) {
    if (r > R1 && r < R) breaks.push_back(std::log(r));
  }
  breaks.push_back(std::log(R));
  const double piece_tol = tol / static_cast<double>(breaks.size() - 1);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (breaks[k + 1] <= breaks[k]) continue;
    total += integrate_segment(inv_phi, breaks[k], breaks[k + 1], piece_tol).value.real();
  }
  return total;
}

CarlemanReport carleman_report(const PathSystem& sys, int j, double R1, double R, const KappaParams& kappa,
                               double tol) {
  if (!(kappa.kappa1 > 0.0 && kappa.kappa1 < kappa.kappa2 && kappa.kappa2 < kappa.kappa)) {
    throw DomainError("carleman_report: need 0 < kappa1 < kappa2 < kappa");
  }
  CarlemanReport rep;
  rep.j = j;
  rep.R1 = R1;
  rep.R = R;
  rep.integral_I = carleman_integral(sys, j, R1, R, tol);
  rep.omega_bound = (8.0 / kPi) * std::exp(-kPi * rep.integral_I);
  rep.logM_lower = (kPi / 8.0) * std::exp(kPi * rep.integral_I);
  rep.kappa = kappa.kappa;
  rep.kappa1 = kappa.kappa1;
  rep.kappa2 = kappa.kappa2;
  return rep;
}

SectorInequality check_sector_inequality(const PathSystem& sys, double t) {
  const int n = sys.size();
  SectorInequality out;
  for (int j = 0; j < n; ++j) out.lhs += 1.0 / angular_measure(sys, j, t).phi;
  out.rhs = static_cast<double>(n) * n / kTwoPi;
  out.holds = out.lhs >= out.rhs * (1.0 - 1e-9);
  return out;
}

double a0_constant(double kappa1) {
  if (!(kappa1 > 0.0 && kappa1 < 0.5)) throw DomainError("a0_constant: kappa1 must lie in (0, 1/2)");
  const double e = 0.5 - kappa1;
  return 20.0 / (e * std::pow(4.0, e));
}

double hayman_tail_integral(double kappa1, double zabs, double tol_rel) {
  if (!(kappa1 > 0.0 && kappa1 < 0.5)) throw DomainError("hayman_tail_integral: kappa1 must lie in (0, 1/2)");
  if (!(zabs > 0.0)) throw DomainError("hayman_tail_integral: |z| must be positive");
  // t = 4|z| e^x turns the algebraic tail into exp(-(1/2 - kappa1) x).
  const double a = 0.5 - kappa1;
  const double prefactor = 20.0 * std::sqrt(zabs) * std::pow(4.0 * zabs, -a);
  auto integrand = [a](cplx x) { return std::exp(-a * x); };
  const double tol = tol_rel / a;
  const QuadResult q = integrate_decaying_ray(integrand, 0.0, 1.0, 1, tol, 1.0, a);
  return prefactor * q.value.real();
}

PathSystem normalize_collection(const std::vector<SegmentalPath>& paths, const std::vector<std::string>& labels,
                                double disk_radius) {
  if (paths.size() != labels.size()) throw DomainError("normalize_collection: one label per path required");
  if (paths.empty()) throw DomainError("normalize_collection: no paths");
  if (!(disk_radius > 0.0)) throw DomainError("normalize_collection: disk radius must be positive");
  for (const auto& p : paths) p.validate();

  auto meet = [](const SegmentalPath& a, const SegmentalPath& b, double radius) {
    for (const Piece& x : a.pieces())
      for (const Piece& y : b.pieces())
        if (meet_beyond(x, y, radius)) return true;
    return false;
  };

  // (i) Paths meeting beyond the disk share their asymptotic function; keep one.
  const std::size_t m = paths.size();
  std::vector<bool> alive(m, true);
  for (std::size_t a = 0; a < m; ++a) {
    if (!alive[a]) continue;
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!alive[b] || !meet(paths[a], paths[b], disk_radius)) continue;
      if (labels[a] != labels[b]) {
        throw LabelConflict("normalize_collection: paths " + std::to_string(a) + " (" + labels[a] + ") and " +
                            std::to_string(b) + " (" + labels[b] + ") intersect beyond the disk");
      }
      alive[b] = false;
    }
  }
  std::vector<SegmentalPath> kept;
  std::vector<std::string> kept_labels;
  for (std::size_t a = 0; a < m; ++a) {
    if (alive[a]) {
      kept.push_back(paths[a]);
      kept_labels.push_back(labels[a]);
    }
  }

  // Survivors meeting inside the disk are rerouted: radial segment from 0 to
  // the last exit from the disk, then the original path.
  bool disjoint = true;
  for (std::size_t a = 0; a < kept.size() && disjoint; ++a)
    for (std::size_t b = a + 1; b < kept.size() && disjoint; ++b)
      if (meet(kept[a], kept[b], 1e-12)) disjoint = false;
  if (!disjoint) {
    for (auto& path : kept) {
      const auto ps = path.pieces();
      std::size_t exit_piece = 0;
      double exit_s = -1.0;
      for (std::size_t k = 0; k < ps.size(); ++k) {
        auto ss = circle_params(ps[k], disk_radius);
        if (!ss.empty()) {
          exit_piece = k;
          exit_s = ss.back();
        }
      }
      SegmentalPath rerouted;
      const cplx exit_point = ps[exit_piece].point(exit_s);
      rerouted.vertices = {cplx(0.0, 0.0), exit_point};
      for (std::size_t v = exit_piece + 1; v < path.vertices.size(); ++v) {
        if (std::abs(path.vertices[v] - exit_point) > 0.0) rerouted.vertices.push_back(path.vertices[v]);
      }
      rerouted.terminal_direction = path.terminal_direction;
      path = rerouted;
    }
  }

  // Counterclockwise order by terminal direction.
  std::vector<std::size_t> order(kept.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto key = [&](std::size_t k) {
    double a = std::arg(kept[k].terminal_direction);
    return a < 0.0 ? a + kTwoPi : a;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
  PathSystem sys;
  for (std::size_t k : order) {
    sys.paths.push_back(kept[k]);
    sys.labels.push_back(kept_labels[k]);
  }

  // (ii) Adjacent paths must carry distinct functions.
  bool changed = true;
  while (changed && sys.size() > 1) {
    changed = false;
    const int cnt = sys.size();
    for (int k = 0; k < cnt; ++k) {
      const int next = (k + 1) % cnt;
      if (sys.labels[k] == sys.labels[next]) {
        sys.paths.erase(sys.paths.begin() + next);
        sys.labels.erase(sys.labels.begin() + next);
        changed = true;
        break;
      }
    }
  }
  sys.validate();
  return sys;
}

PathSystem random_path_system(int n, std::uint64_t seed, int max_vertices) {
  if (n < 1) throw DomainError("random_path_system: n must be >= 1");
  if (max_vertices < 0) throw DomainError("random_path_system: max_vertices must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double spacing = kTwoPi / n;
  const double rotation = kTwoPi * unit(rng);
  std::vector<double> base(n);
  for (int k = 0; k < n; ++k) base[k] = rotation + spacing * k + (unit(rng) - 0.5) * 0.5 * spacing;
  PathSystem sys;
  for (int k = 0; k < n; ++k) {
    // Half-width of the wedge this path may not leave.
    double half = 0.3;
    if (n > 1) {
      const double gap_prev = k > 0 ? base[k] - base[k - 1] : base[0] + kTwoPi - base[n - 1];
      const double gap_next = k + 1 < n ? base[k + 1] - base[k] : base[0] + kTwoPi - base[k];
      half = std::min(half, 0.45 * std::min(gap_prev, gap_next));
    }
    SegmentalPath p;
    const int nv = static_cast<int>(unit(rng) * (max_vertices + 1));
    double r = 0.3 + 1.2 * unit(rng);
    for (int v = 0; v < nv; ++v) {
      p.vertices.push_back(std::polar(r, base[k] + (2.0 * unit(rng) - 1.0) * half));
      r *= 1.5 + 1.5 * unit(rng);
    }
    p.terminal_direction = std::polar(1.0, base[k] + (2.0 * unit(rng) - 1.0) * 0.5 * half);
    sys.paths.push_back(p);
    sys.labels.push_back("a" + std::to_string(k + 1));
  }
  sys.validate();
  return sys;
}

}  // namespace asymfun
