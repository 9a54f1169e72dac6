#pragma once

#include <span>
#include <vector>

#include "lossywave/grid.hpp"
#include "lossywave/medium.hpp"

namespace lossywave {

/// Builds the two starting time levels from p(x, 0) and q(x, 0) = dp/dt(x, 0)
/// with a second-order Taylor start:
///   p^1 = p + dt q + (dt^2/2) (c^2 Lap p + nu Lap q),
/// Lap being the periodic second central difference over dx^2.
/// The spec must carry a stability certificate.
GridState bootstrap(std::span<const double> initial_p,
                    std::span<const double> initial_q,
                    const GridSpec& spec, const MediumParams& m);

/// One explicit update
///   p^{n+1} = 2 p^n - p^{n-1} + (c dt/dx)^2 d2 p^n
///             + (nu dt/dx^2) (d2 p^n - d2 p^{n-1}),
/// d2 v_j = v_{j+1} - 2 v_j + v_{j-1} with periodic indexing. The mixed
/// time-space derivative uses a first-order backward difference of the
/// Laplacian, which keeps the update explicit. Throws DivergedError when
/// non-finite samples appear.
GridState step(const GridState& s, const MediumParams& m);

struct Snapshot {
    double t;
    std::vector<double> p;
};

/// Steps to the largest n dt <= t_final, snapshotting every snapshot_every
/// steps (always including the initial and final states). Rejects
/// t_final / dt > 1e8.
std::vector<Snapshot> run(std::span<const double> initial_p,
                          std::span<const double> initial_q,
                          const GridSpec& spec, const MediumParams& m,
                          double t_final, long snapshot_every);

}  // namespace lossywave
