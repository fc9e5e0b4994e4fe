#include "asymfun/wos.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "asymfun/errors.hpp"

namespace asymfun {
namespace {

enum class WalkOutcome { Hit, Miss, Truncated };

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

WalkOutcome run_walk(const std::vector<Piece>& boundary, double R, cplx z1, const WosConfig& cfg,
                     std::uint64_t index) {
  std::mt19937_64 rng(walk_stream_seed(cfg.seed, index));
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const double shell = cfg.eps_shell * R;
  cplx p = z1;
  for (std::size_t step = 0; step < cfg.max_steps; ++step) {
    double d_path = std::numeric_limits<double>::infinity();
    for (const Piece& piece : boundary) d_path = std::min(d_path, distance_to_piece(p, piece));
    const double d_circle = R - std::abs(p);
    const double d = std::min(d_path, d_circle);
    if (d <= shell) return d_circle < d_path ? WalkOutcome::Hit : WalkOutcome::Miss;
    p += std::polar(d, angle(rng));
  }
  return WalkOutcome::Truncated;
}

}  // namespace

void WosConfig::validate() const {
  if (n_walks < 1) throw DomainError("WosConfig: n_walks must be >= 1");
  if (!(eps_shell > 0.0 && eps_shell < 0.01)) throw DomainError("WosConfig: eps_shell must lie in (0, 0.01)");
  if (max_steps < 100) throw DomainError("WosConfig: max_steps must be >= 100");
}

std::uint64_t walk_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

WosEstimate estimate_harmonic_measure(const PathSystem& sys, int j, double R, cplx z1, const WosConfig& cfg) {
  cfg.validate();
  if (!(R > 0.0)) throw DomainError("estimate_harmonic_measure: R must be positive");
  if (j < 0 || j >= sys.size()) throw DomainError("estimate_harmonic_measure: domain index out of range");
  if (!(std::abs(z1) < R)) throw StartOutsideDomain("estimate_harmonic_measure: z1 is not inside B(0, R)");
  const std::vector<Piece> boundary = boundary_pieces(sys, j);
  double d0 = std::numeric_limits<double>::infinity();
  for (const Piece& p : boundary) d0 = std::min(d0, distance_to_piece(z1, p));
  if (d0 == 0.0 || !in_domain(sys, j, z1)) {
    throw StartOutsideDomain("estimate_harmonic_measure: z1 is not inside D_" + std::to_string(j));
  }

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.n_walks));
  std::vector<std::size_t> hits(workers, 0);
  std::vector<std::size_t> truncated(workers, 0);
  auto work = [&](unsigned w) {
    const std::size_t begin = cfg.n_walks * w / workers;
    const std::size_t end = cfg.n_walks * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      switch (run_walk(boundary, R, z1, cfg, i)) {
        case WalkOutcome::Hit: ++hits[w]; break;
        case WalkOutcome::Truncated: ++truncated[w]; break;
        case WalkOutcome::Miss: break;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  WosEstimate est;
  est.n_walks = cfg.n_walks;
  est.seed = cfg.seed;
  for (unsigned w = 0; w < workers; ++w) {
    est.hits += hits[w];
    est.truncated_walks += truncated[w];
  }
  const double nw = static_cast<double>(cfg.n_walks);
  est.omega_hat = static_cast<double>(est.hits) / nw;
  est.ci95_halfwidth = 1.96 * std::sqrt(est.omega_hat * (1.0 - est.omega_hat) / nw);
  if (static_cast<double>(est.truncated_walks) >= 0.01 * nw) {
    est.warning = std::to_string(est.truncated_walks) + " of " + std::to_string(cfg.n_walks) +
                  " walks reached max_steps without absorption";
  }
  return est;
}

}  // namespace asymfun
