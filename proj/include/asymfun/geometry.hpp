#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asymfun/numerics.hpp"

// Polyline path systems: n simple segmental paths from 0 to infinity, the
// domains D_j between adjacent paths, their angular measure on circles and
// the Carleman-type bounds built from it.

namespace asymfun {

/// One straight piece of a path: start + s*dir for s in [0, smax]
/// (smax = 1 for a segment, infinity for the terminal ray).
struct Piece {
  cplx start;
  cplx dir;
  double smax;

  bool is_ray() const;
  cplx point(double s) const { return start + s * dir; }
};

/// Path from 0 through `vertices`, continuing from the last vertex as a ray
/// in `terminal_direction` (a unit vector).
struct SegmentalPath {
  std::vector<cplx> vertices{cplx(0.0, 0.0)};
  cplx terminal_direction{1.0, 0.0};

  static SegmentalPath ray(double angle);

  std::vector<Piece> pieces() const;
  /// Checks first vertex 0, unit direction and simplicity. Throws DomainError.
  void validate() const;
};

/// Paths ordered counterclockwise by terminal direction; D_j is the domain
/// from paths[j] counterclockwise to paths[(j+1) % n]. With a single path
/// D_0 is the plane slit along it.
struct PathSystem {
  std::vector<SegmentalPath> paths;
  std::vector<std::string> labels;

  static PathSystem equally_spaced_rays(int n, double offset = 0.0);

  int size() const { return static_cast<int>(paths.size()); }
  /// Full invariant check (simple, pairwise disjoint off the origin,
  /// counterclockwise, one label per path). Throws DomainError.
  void validate() const;
};

struct AngularSlice {
  double t = 0.0;
  /// Counterclockwise arcs (start, end) with start in (-pi, pi] and
  /// end > start.
  std::vector<std::pair<double, double>> arcs;
  double phi = 0.0;
};

struct KappaParams {
  double kappa = 0.5;
  double kappa1 = 0.3;
  double kappa2 = 0.4;
};

struct CarlemanReport {
  int j = 0;
  double R1 = 0.0;
  double R = 0.0;
  double integral_I = 0.0;
  double omega_bound = 0.0;
  double logM_lower = 0.0;
  double kappa = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

struct SectorInequality {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Relative distance below which a circle counts as passing through a
/// vertex or touching a segment.
inline constexpr double kDegenerateRadiusTol = 1e-12;
/// Relative jitter applied to degenerate quadrature radii.
inline constexpr double kRadiusJitter = 1e-9;

/// Intersection point of two pieces (any point of the overlap if they are
/// collinear), or nothing.
std::optional<cplx> intersect(const Piece& a, const Piece& b);

/// Distance from z to the piece.
double distance_to_piece(cplx z, const Piece& p);

/// Pieces of the two paths bounding D_j.
std::vector<Piece> boundary_pieces(const PathSystem& sys, int j);

/// Distance from z to the boundary paths of D_j.
double distance_to_boundary(const PathSystem& sys, int j, cplx z);

/// Membership of z (not on the boundary) in D_j, by winding number of the
/// boundary closed with a far arc.
bool in_domain(const PathSystem& sys, int j, cplx z);

/// D_j ∩ S(0, t). Throws DegenerateRadius when t is a vertex or tangency
/// radius of a boundary path.
AngularSlice angular_measure(const PathSystem& sys, int j, double t);

/// Radii at which Phi_j has kinks: vertex radii and closest-approach radii
/// of the boundary pieces, sorted.
std::vector<double> critical_radii(const PathSystem& sys, int j);

/// int_{R1}^{R} dt / (t Phi_j(t)), adaptive in log t with breakpoints at the
/// critical radii; degenerate nodes are jittered by ±1e-9 t.
double carleman_integral(const PathSystem& sys, int j, double R1, double R, double tol = 1e-10);

CarlemanReport carleman_report(const PathSystem& sys, int j, double R1, double R,
                               const KappaParams& kappa = {}, double tol = 1e-10);

SectorInequality check_sector_inequality(const PathSystem& sys, double t);

/// 20 / ((1/2 - kappa1) 4^{1/2 - kappa1}) for 0 < kappa1 < 1/2.
double a0_constant(double kappa1);

/// 20 |z|^{1/2} int_{4|z|}^inf t^{kappa1 - 3/2} dt by quadrature.
double hayman_tail_integral(double kappa1, double zabs, double tol_rel = 1e-12);

/// Reduce a path collection to a system with distinct adjacent labels:
/// paths meeting beyond disk_radius are merged (their labels must agree),
/// survivors are made disjoint inside the disk if needed by replacing their
/// initial part with a radial segment, sorted counterclockwise, and
/// adjacent equal labels are removed to a fixpoint. Throws LabelConflict.
PathSystem normalize_collection(const std::vector<SegmentalPath>& paths,
                                const std::vector<std::string>& labels, double disk_radius);

/// Random admissible n-path system; each path stays in its own wedge.
PathSystem random_path_system(int n, std::uint64_t seed, int max_vertices = 4);

}  // namespace asymfun
