#pragma once

#include <vector>

#include "polariton/params.hpp"

namespace polariton {

// Tensor Gauss-Hermite discretization of the Maxwell-Boltzmann distribution.
// axes == 1: velocity along q only. axes == 2 adds v_perp along k.
struct VelocityGrid {
    int axes = 1;
    int nodes = 201;       // along q, odd
    int perp_nodes = 0;    // along k (axes == 2), odd
    std::vector<double> abscissae;  // along q [m/s]
    std::vector<double> weights;    // sum to 1
    std::vector<double> perp_abscissae;
    std::vector<double> perp_weights;

    static VelocityGrid make(int axes, int nodes, double v_T, int perp_nodes = 0);
    // Spacing between the two central nodes along q [m/s].
    double central_spacing() const;
};

struct OracleSolution {
    cplx chi;
    cplx rho31;
    cplx rho21;
    double closure_residual = 0.0;  // |sum w rho(v) - rho| / |rho|
};

OracleSolution solve_velocity_resolved_detail(double Delta_p, double Delta, const MediumParams& medium,
                                              const BeamGeometry& geom, const DriveParams& drive,
                                              const VelocityGrid& grid);

cplx solve_velocity_resolved(double Delta_p, double Delta, const MediumParams& medium,
                             const BeamGeometry& geom, const DriveParams& drive,
                             const VelocityGrid& grid);

// 201 nodes along q; angled beams add 101 nodes along k.
VelocityGrid default_grid(const MediumParams& medium, const BeamGeometry& geom);

}  // namespace polariton
