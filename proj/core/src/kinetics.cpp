#include "polariton/kinetics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "polariton/errors.hpp"
#include "polariton/quadrature.hpp"

namespace polariton {

VelocityGrid VelocityGrid::make(int axes, int nodes, double v_T, int perp_nodes) {
    require(axes == 1 || axes == 2, "VelocityGrid: axes must be 1 or 2");
    require(nodes >= 3 && nodes % 2 == 1, "VelocityGrid: node count must be odd and >= 3");
    require(v_T > 0.0, "VelocityGrid: v_T must be > 0");
    VelocityGrid g;
    g.axes = axes;
    g.nodes = nodes;
    const QuadratureRule r = normal_rule(nodes, v_T);
    g.abscissae = r.nodes;
    g.weights = r.weights;
    if (axes == 2) {
        if (perp_nodes == 0) perp_nodes = nodes;
        require(perp_nodes >= 3 && perp_nodes % 2 == 1, "VelocityGrid: node count must be odd and >= 3");
        g.perp_nodes = perp_nodes;
        const QuadratureRule p = normal_rule(perp_nodes, v_T);
        g.perp_abscissae = p.nodes;
        g.perp_weights = p.weights;
    }
    return g;
}

double VelocityGrid::central_spacing() const {
    const int c = nodes / 2;
    return abscissae[c + 1] - abscissae[c];
}

VelocityGrid default_grid(const MediumParams& medium, const BeamGeometry& geom) {
    if (geom.axis == RamanAxis::Collinear || geom.k == 0.0) return VelocityGrid::make(1, 201, medium.v_T);
    return VelocityGrid::make(2, 201, medium.v_T, 101);
}

namespace {

using Vec2 = std::array<cplx, 2>;

struct Mat2 {
    cplx a, b, c, d;
};

Vec2 solve2(const Mat2& m, const Vec2& r) {
    const cplx det = m.a * m.d - m.b * m.c;
    if (det == cplx(0.0)) throw std::logic_error("kinetics: singular velocity-node system");
    return {(r[0] * m.d - m.b * r[1]) / det, (m.a * r[1] - m.c * r[0]) / det};
}

struct Node {
    double weight;
    double v_par;   // along q
    double v_perp;  // along k in the transverse geometry
};

}  // namespace

OracleSolution solve_velocity_resolved_detail(double Delta_p, double Delta, const MediumParams& medium,
                                              const BeamGeometry& geom, const DriveParams& drive,
                                              const VelocityGrid& grid) {
    medium.validate();
    geom.validate();
    drive.validate();
    const bool transverse = geom.axis == RamanAxis::Transverse && geom.k > 0.0;
    require(!transverse || grid.axes == 2, "kinetics: angled geometry requires a 2-axis grid");
    require(int(grid.abscissae.size()) == grid.nodes && grid.nodes % 2 == 1, "kinetics: malformed grid");

    const double dv = grid.central_spacing();
    require(dv < 0.25 * medium.v_T, "kinetics: node spacing must be < v_T/4 (" + std::to_string(grid.nodes) + " nodes)");
    const double opt_width = (medium.Gamma + medium.gamma_c) / geom.q;
    require(opt_width >= 2.0 * dv,
            "kinetics: optical resonance width (Gamma+gamma_c)/q not resolved by the velocity grid");
    if (drive.Omega_c > 0.0 && geom.k > 0.0) {
        const double raman_width = (medium.gamma0 + medium.gamma_c) / geom.k;
        const double dperp = transverse
            ? grid.perp_abscissae[grid.perp_nodes / 2 + 1] - grid.perp_abscissae[grid.perp_nodes / 2]
            : dv;
        require(raman_width >= 2.0 * dperp,
                "kinetics: Raman resonance width (gamma0+gamma_c)/k not resolved by the velocity grid");
    }

    std::vector<Node> nodes;
    if (grid.axes == 1) {
        for (int j = 0; j < grid.nodes; ++j) nodes.push_back({grid.weights[j], grid.abscissae[j], 0.0});
    } else {
        for (int i = 0; i < grid.perp_nodes; ++i)
            for (int j = 0; j < grid.nodes; ++j)
                nodes.push_back({grid.perp_weights[i] * grid.weights[j], grid.abscissae[j],
                                 grid.perp_abscissae[i]});
    }

    const double gc = medium.gamma_c;
    const double Om = drive.Omega_c;
    const double ks = geom.k_sign() * geom.k;
    auto node_matrix = [&](const Node& n) {
        const cplx dp(Delta_p - geom.q * n.v_par, medium.Gamma + gc);
        const double kv = transverse ? geom.k * n.v_perp : ks * n.v_par;
        const cplx dr(Delta - kv, medium.gamma0 + gc);
        return Mat2{I * dp, I * Om, I * Om, I * dr};
    };
    // In units n0 = Omega = 1:
    //   i dp r31 + i Om r21 = -(gc rho31 + i) F,   i d r21 + i Om r31 = -gc rho21 F
    auto node_rhs = [&](const Node& n, cplx rho31, cplx rho21, cplx source) {
        return Vec2{-n.weight * (gc * rho31 + I * source), -n.weight * gc * rho21};
    };

    // The velocity sum is affine in (rho31, rho21): accumulate its three columns.
    Vec2 S1{}, S2{}, S0{};
    for (const Node& n : nodes) {
        const Mat2 m = node_matrix(n);
        const Vec2 r1 = solve2(m, node_rhs(n, 1.0, 0.0, 0.0));
        const Vec2 r2 = solve2(m, node_rhs(n, 0.0, 1.0, 0.0));
        const Vec2 r0 = solve2(m, node_rhs(n, 0.0, 0.0, 1.0));
        for (int c = 0; c < 2; ++c) {
            S1[c] += r1[c];
            S2[c] += r2[c];
            S0[c] += r0[c];
        }
    }
    const Mat2 closure{1.0 - S1[0], -S2[0], -S1[1], 1.0 - S2[1]};
    const Vec2 rho = solve2(closure, S0);

    Vec2 check{};
    for (const Node& n : nodes) {
        const Vec2 r = solve2(node_matrix(n), node_rhs(n, rho[0], rho[1], 1.0));
        check[0] += r[0];
        check[1] += r[1];
    }
    const double scale = std::max(std::abs(rho[0]) + std::abs(rho[1]), 1e-300);
    OracleSolution s;
    s.rho31 = rho[0];
    s.rho21 = rho[1];
    s.chi = medium.g * rho[0];
    s.closure_residual = (std::abs(check[0] - rho[0]) + std::abs(check[1] - rho[1])) / scale;
    return s;
}

cplx solve_velocity_resolved(double Delta_p, double Delta, const MediumParams& medium,
                             const BeamGeometry& geom, const DriveParams& drive,
                             const VelocityGrid& grid) {
    return solve_velocity_resolved_detail(Delta_p, Delta, medium, geom, drive, grid).chi;
}

}  // namespace polariton
