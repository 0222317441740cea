#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polariton/errors.hpp"
#include "polariton/storage.hpp"

using namespace polariton;

namespace {

constexpr double kW0 = 1e-4;
constexpr double kD = 1e-3;
const GridSpec kGrid = GridSpec::square(128, kW0 / 8.0);

ModeSpec mode(ModeFamily f, int a, int b) {
    ModeSpec s;
    s.family = f;
    s.w0 = kW0;
    if (f == ModeFamily::StandardHG || f == ModeFamily::ElegantHG) {
        s.n = a;
        s.m = b;
    } else {
        s.p = a;
        s.l = b;
    }
    return s;
}

double visibility_on_axis(const ScalarField2D& f, double half_width) {
    double lo = INFINITY, hi = 0.0;
    const std::size_t iy = f.center_y();
    for (std::size_t ix = 0; ix < f.nx(); ++ix) {
        if (std::abs(f.x(ix)) > half_width) continue;
        const double v = std::norm(f(ix, iy));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return (hi - lo) / (hi + lo);
}

}  // namespace

TEST_CASE("fundamental mode is shared by all families") {
    const auto g = make_mode(mode(ModeFamily::StandardHG, 0, 0), kGrid);
    CHECK(g.power() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(relative_l2(make_mode(mode(ModeFamily::ElegantHG, 0, 0), kGrid), g) < 1e-14);
    CHECK(relative_l2(make_mode(mode(ModeFamily::StandardLG, 0, 0), kGrid), g) < 1e-14);
    const auto m = beam_metrics(g);
    CHECK(m.e2_radius == doctest::Approx(kW0).epsilon(0.005));
    CHECK(std::abs(m.centroid_x) < 1e-18);
    CHECK(std::abs(m.centroid_y) < 1e-18);
}

TEST_CASE("first-order standard and elegant modes coincide at focus") {
    const auto s = make_mode(mode(ModeFamily::StandardHG, 0, 1), kGrid);
    const auto e = make_mode(mode(ModeFamily::ElegantHG, 0, 1), kGrid);
    CHECK(std::abs(inner_product(s, e)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("standard modes are orthogonal") {
    const auto a = make_mode(mode(ModeFamily::StandardHG, 1, 0), kGrid);
    const auto b = make_mode(mode(ModeFamily::StandardHG, 0, 1), kGrid);
    const auto c = make_mode(mode(ModeFamily::StandardHG, 2, 0), kGrid);
    CHECK(std::abs(inner_product(a, b)) < 1e-10);
    CHECK(std::abs(inner_product(a, c)) < 1e-10);
    CHECK(std::abs(inner_product(a, a)) == doctest::Approx(1.0).epsilon(1e-12));
    const auto p = make_mode(mode(ModeFamily::StandardLG, 0, 1), kGrid);
    const auto n = make_mode(mode(ModeFamily::StandardLG, 0, -1), kGrid);
    const auto r = make_mode(mode(ModeFamily::StandardLG, 1, 1), kGrid);
    CHECK(std::abs(inner_product(p, n)) < 1e-10);
    CHECK(std::abs(inner_product(p, r)) < 1e-10);
}

TEST_CASE("mode generation rejects coarse or small grids") {
    CHECK_THROWS_AS(make_mode(mode(ModeFamily::StandardHG, 0, 0), GridSpec::square(128, kW0 / 4.0)),
                    ValidationError);
    CHECK_THROWS_AS(make_mode(mode(ModeFamily::StandardHG, 0, 0), GridSpec::square(32, kW0 / 8.0)),
                    ValidationError);
    auto bad = mode(ModeFamily::StandardHG, -1, 0);
    CHECK_THROWS_AS(make_mode(bad, kGrid), ValidationError);
    CHECK(mode(ModeFamily::ElegantLG, 1, 0).unverified());
    CHECK_FALSE(mode(ModeFamily::ElegantLG, 0, 2).unverified());
}

TEST_CASE("uniform coherence dephases at D k^2") {
    ScalarField2D f(16, 16, 1e-5, 1e-5);
    for (auto& v : f.data()) v = 1.0;
    const double k = 3e3, g0 = 20.0, tau = 2e-3;
    const auto out = evolve_stored(f, tau, kD, g0, k, 0.0);
    const double expect = std::exp(-(g0 + kD * k * k) * tau);
    for (const auto& v : out.data()) CHECK(std::abs(v - expect) < 1e-14);
}

TEST_CASE("point input spreads as the heat kernel") {
    ScalarField2D f(64, 64, 1e-5, 1e-5);
    f(f.center_x(), f.center_y()) = 1.0;
    const double sigma = 4.0 * f.dx();
    const double tau = sigma * sigma / (2.0 * kD);
    const auto out = evolve_stored(f, tau, kD, 0.0);
    ScalarField2D expect(64, 64, 1e-5, 1e-5);
    double sum = 0.0;
    for (std::size_t iy = 0; iy < 64; ++iy)
        for (std::size_t ix = 0; ix < 64; ++ix) {
            const double r2 = f.x(ix) * f.x(ix) + f.y(iy) * f.y(iy);
            expect(ix, iy) = std::exp(-r2 / (2.0 * sigma * sigma));
            sum += expect(ix, iy).real();
        }
    for (auto& v : expect.data()) v /= sum;
    CHECK(relative_l2(out, expect) < 1e-10);
}

TEST_CASE("a Gaussian that doubles its area keeps half its power") {
    const auto g = make_mode(mode(ModeFamily::StandardHG, 0, 0), kGrid);
    const double tau = tau_for_stretch(kW0, kD, std::sqrt(2.0));
    CHECK(stretch_factor(kW0, kD, tau) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    const auto out = evolve_stored(g, tau, kD, 0.0);
    CHECK(out.power() == doctest::Approx(0.5).epsilon(2e-3));
    CHECK(beam_metrics(out).e2_radius == doctest::Approx(std::sqrt(2.0) * kW0).epsilon(0.005));
}

TEST_CASE("storage evolution is a semigroup") {
    const auto g = make_mode(mode(ModeFamily::StandardLG, 0, 2), kGrid);
    const auto a = evolve_stored(evolve_stored(g, 1e-6, kD, 30.0, 1e3, -2e3), 2e-6, kD, 30.0, 1e3, -2e3);
    const auto b = evolve_stored(g, 3e-6, kD, 30.0, 1e3, -2e3);
    CHECK(relative_l2(a, b) < 1e-12);

    StorageRun run;
    run.initial = g;
    run.D = kD;
    run.taus = {0.0, 1e-6, 3e-6};
    const auto seq = evolve_stored(run);
    REQUIRE(seq.size() == 3);
    CHECK(relative_l2(seq[0], g) < 1e-14);
    CHECK(relative_l2(seq[2], evolve_stored(g, 3e-6, kD, 0.0)) < 1e-12);
    CHECK(seq[1].power() <= seq[0].power());
    CHECK(seq[2].power() <= seq[1].power());
    run.taus = {2e-6, 1e-6};
    CHECK_THROWS_AS(evolve_stored(run), ValidationError);
}

TEST_CASE("elegant modes keep their shape") {
    const auto e0 = elegant_evolution(1, 1, kW0, 0.0, kD, 0.0, kGrid);
    CHECK(e0.power_ratio == 1.0);
    CHECK(e0.field.data() == make_mode(mode(ModeFamily::ElegantHG, 1, 1), kGrid).data());

    const double tau = tau_for_stretch(kW0, kD, std::sqrt(2.0));
    const auto e2 = elegant_evolution(2, 0, kW0, tau, kD, 0.0, kGrid);
    CHECK(e2.power_ratio == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(e2.w_tau == doctest::Approx(std::sqrt(2.0) * kW0).epsilon(1e-14));

    for (auto nm : {std::pair{1, 0}, std::pair{1, 1}, std::pair{0, 3}}) {
        const auto init = make_mode(mode(ModeFamily::ElegantHG, nm.first, nm.second), kGrid);
        const auto grid = evolve_stored(init, tau, kD, 15.0);
        const auto ana = elegant_evolution(nm.first, nm.second, kW0, tau, kD, 15.0, kGrid);
        CHECK(relative_l2(grid, ana.field) < 1e-3);
        CHECK(grid.power() == doctest::Approx(ana.power_ratio).epsilon(1e-3));
    }
}

TEST_CASE("vortex core stays dark while a flat annulus fills in") {
    const auto vortex = make_mode(mode(ModeFamily::StandardLG, 0, 1), kGrid);
    ScalarField2D annulus = vortex;
    for (auto& v : annulus.data()) v = std::abs(v);
    const double tau = tau_for_stretch(kW0, kD, std::sqrt(2.0));
    for (double f : {0.25, 1.0, 3.0}) CHECK(beam_metrics(evolve_stored(vortex, f * tau, kD, 0.0)).core_intensity < 1e-4);
    CHECK(beam_metrics(evolve_stored(annulus, tau, kD, 0.0)).core_intensity >= 0.5);
}

TEST_CASE("alternating-phase lines keep their contrast") {
    ScalarField2D flat(128, 128, kW0 / 8.0, kW0 / 8.0);
    ScalarField2D alt = flat;
    for (std::size_t iy = 0; iy < 128; ++iy)
        for (std::size_t ix = 0; ix < 128; ++ix)
            for (int j = -2; j <= 2; ++j) {
                const double u = (flat.x(ix) - 3.0 * kW0 * j) / kW0;
                const double e = std::exp(-u * u);
                flat(ix, iy) += e;
                alt(ix, iy) += (j % 2 == 0 ? 1.0 : -1.0) * e;
            }
    const double tau = 0.5 * kW0 * kW0 / (4.0 * kD) * 4.0;
    const double vf = visibility_on_axis(evolve_stored(flat, tau, kD, 0.0), 3.0 * kW0);
    const double va = visibility_on_axis(evolve_stored(alt, tau, kD, 0.0), 3.0 * kW0);
    CHECK(va >= 2.0 * vf);
}

TEST_CASE("a mode stored off focus first contracts") {
    auto spec = mode(ModeFamily::StandardHG, 0, 0);
    spec.q = 1e7;
    spec.z = 2.0 * 0.5 * spec.q * kW0 * kW0;
    const GridSpec grid = GridSpec::square(256, kW0 / 8.0);
    const auto f = make_mode(spec, grid);
    auto area = [](const ScalarField2D& g) { return std::pow(beam_metrics(g).rms_radius, 2); };
    const double a0 = area(f);
    const double dtau = 1e-4 * kW0 * kW0 / kD;
    CHECK(area(evolve_stored(f, dtau, kD, 0.0)) < a0);
    CHECK(area(evolve_stored(f, 3e4 * dtau, kD, 0.0)) > a0);

    spec.q = 0.0;
    CHECK_THROWS_AS(make_mode(spec, grid), ValidationError);
}

TEST_CASE("beam metrics on a zero field") {
    ScalarField2D f(16, 16, 1.0, 1.0);
    CHECK_THROWS_AS(beam_metrics(f), ValidationError);
}
