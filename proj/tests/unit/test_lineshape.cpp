#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polariton/errors.hpp"
#include "polariton/faddeeva.hpp"
#include "polariton/lineshape.hpp"
#include "reference_values.hpp"

using namespace polariton;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// v_T q = 1 units.
MediumParams unit_medium(double Gamma, double gamma_c) {
    MediumParams m;
    m.v_T = 1.0;
    m.Gamma = Gamma;
    m.gamma_c = gamma_c;
    m.gamma0 = 1e-3;
    m.g = 1.0;
    return m;
}

const BeamGeometry kUnitBeam = BeamGeometry::degenerate(1.0, 0.0);

// Principal-value integral (1/pi) P int f(t)/(t - x) dt on a uniform grid, with
// the singular part subtracted analytically.
double hilbert_pv(const std::vector<double>& t, const std::vector<double>& f, double x, double fx) {
    const double h = t[1] - t[0];
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double d = t[i] - x;
        const double term = std::abs(d) < 1e-12 ? 0.0 : (f[i] - fx) / d;
        s += (i == 0 || i + 1 == t.size() ? 0.5 : 1.0) * term * h;
    }
    s += fx * std::log((t.back() - x) / (x - t.front()));
    return s / pi;
}

}  // namespace

TEST_CASE("memory kernel values") {
    CHECK(memory_kernel_H(0.0) == 0.0);
    CHECK(memory_kernel_H(50.0) / 49.0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(memory_kernel_H(1e-6) == doctest::Approx(5e-13).epsilon(1e-5));
    CHECK(memory_kernel_H(1e-3) == doctest::Approx(std::expm1(-1e-3) + 1e-3).epsilon(1e-12));
    double prev = 0.0;
    for (double x = 0.01; x < 20.0; x *= 1.3) {
        CHECK(memory_kernel_H(x) > prev);
        prev = memory_kernel_H(x);
    }
    CHECK_THROWS_AS(memory_kernel_H(-1.0), ValidationError);
}

TEST_CASE("Doppler width of the rubidium line") {
    MediumParams m;
    m.v_T = 170.0;
    m.Gamma = 1.0;
    const double q = wavenumber(794.7e-9);
    const auto w = motional_widths(m, BeamGeometry::degenerate(q, 0.0));
    CHECK(w.ballistic);
    CHECK(rad_to_hz(2.0 * std::sqrt(2.0 * std::log(2.0)) * w.doppler) == doctest::Approx(506e6).epsilon(0.02));
    CHECK(rad_to_hz(w.doppler) == doctest::Approx(170.0 / 794.7e-9 / 1.0).epsilon(1e-12));
}

TEST_CASE("interpolated width spans the Doppler and Dicke limits") {
    const double fwhm_g = 2.0 * std::sqrt(2.0 * std::log(2.0));
    MediumParams m = unit_medium(1.0, 0.01);  // q Lambda = 100
    auto w = motional_widths(m, kUnitBeam);
    CHECK(w.interpolated / w.doppler == doctest::Approx(fwhm_g).epsilon(0.01));
    m.gamma_c = 1e3;  // q Lambda = 1e-3
    w = motional_widths(m, kUnitBeam);
    CHECK(w.dicke == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(w.interpolated == doctest::Approx(2.0 * w.dicke).epsilon(1e-3));
}

TEST_CASE("residual Dicke width at half a milliradian") {
    MediumParams m;
    m.v_T = 170.0;
    m.gamma_c = m.v_T / 2e-6;
    m.Gamma = 1.0;
    const auto geom = BeamGeometry::degenerate(wavenumber(794.7e-9), 0.5e-3);
    const auto w = motional_widths(m, geom);
    CHECK(w.residual_dicke == doctest::Approx(170.0 * 2e-6 * geom.k * geom.k).epsilon(1e-12));
    CHECK(w.residual_doppler == doctest::Approx(170.0 * geom.k).epsilon(1e-12));
    CHECK(rad_to_hz(w.residual_dicke) == doctest::Approx(846.0).epsilon(0.01));
}

TEST_CASE("dephased time integral matches frozen quadrature values") {
    for (const auto& r : reference::kDephased) {
        CAPTURE(r.detuning);
        CAPTURE(r.gamma_c);
        const cplx v = dephased_time_integral(r.detuning, r.decay, r.k, r.v_T, r.gamma_c);
        CHECK(rel(v, r.value) < 1e-7);
    }
}

TEST_CASE("weak one-photon line without motion is Lorentzian") {
    MediumParams m = unit_medium(0.7, 0.0);
    m.v_T = 1e-9;
    for (double dp : {-2.0, 0.0, 0.4, 3.0}) {
        const cplx expect = I * m.g / cplx(m.Gamma, dp);
        CHECK(rel(chi_one_photon_weak(dp, m, kUnitBeam), expect) < 1e-8);
    }
}

TEST_CASE("weak one-photon absorption is even and positive") {
    const MediumParams m = unit_medium(0.2, 0.5);
    for (double dp : {0.1, 0.9, 2.5}) {
        const cplx a = chi_one_photon_weak(dp, m, kUnitBeam);
        const cplx b = chi_one_photon_weak(-dp, m, kUnitBeam);
        CHECK(a.imag() > 0.0);
        CHECK(std::abs(a - (-std::conj(b))) < 1e-9 * std::abs(a));
    }
}

TEST_CASE("weak Raman line") {
    MediumParams m = unit_medium(2.0, 1.0);
    m.gamma0 = 0.05;
    const auto zero_k = BeamGeometry::degenerate(1.0, 0.0);
    for (double d : {-0.1, 0.0, 0.03}) {
        const cplx expect = (I * m.g / (m.Gamma * m.Gamma)) / cplx(m.gamma0, -d);
        CHECK(rel(chi_raman_weak(d, m, zero_k), expect) < 1e-8);
    }

    m.gamma_c = 100.0;  // k Lambda = 0.01 at k = 1
    const auto geom = BeamGeometry::collinear(2.0, 1.0);
    const double width = m.gamma0 + geom.k * geom.k * m.v_T * m.v_T / m.gamma_c;
    auto x = linspace(-10.0 * width, 10.0 * width, 401);
    std::vector<double> y;
    for (double d : x) y.push_back(chi_raman_weak(d, m, geom).imag());
    const auto fit = fit_lorentzian(x, y);
    CHECK(fit.hwhm == doctest::Approx(width).epsilon(0.01));
    CHECK(std::abs(fit.center) < 1e-3 * width);
}

TEST_CASE("voigt function limits") {
    MediumParams m = unit_medium(500.0, 500.0);  // (Gamma + gamma_c) / (v_T q) = 1e3
    CHECK(rel(voigt_G(0.0, m, kUnitBeam), cplx(0.0, -1.0 / (m.Gamma + m.gamma_c))) < 1e-5);

    m = unit_medium(1e-4, 0.0);
    const cplx g0 = voigt_G(0.0, m, kUnitBeam);
    CHECK(g0.imag() == doctest::Approx(-std::sqrt(pi / 2.0)).epsilon(0.01));
}

TEST_CASE("voigt function symmetry and sign") {
    const MediumParams m = unit_medium(0.3, 0.2);
    for (double dp : {0.0, 0.25, 1.0, 4.0, 30.0}) {
        const cplx a = voigt_G(dp, m, kUnitBeam);
        const cplx b = voigt_G(-dp, m, kUnitBeam);
        CHECK(a.imag() < 0.0);
        CHECK(std::abs(a + std::conj(b)) <= 4e-16 * std::abs(a));
    }
}

TEST_CASE("voigt function: Faddeeva against Gauss-Hermite") {
    const MediumParams m = unit_medium(0.8, 0.4);
    for (double dp : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
        CAPTURE(dp);
        CHECK(rel(voigt_G(dp, m, kUnitBeam), voigt_G_hermite(dp, m, kUnitBeam, 101)) < 1e-6);
    }
}

TEST_CASE("voigt function as a Faddeeva value") {
    const MediumParams m = unit_medium(0.8, 0.4);
    const double dp = 0.6, s = std::sqrt(2.0);
    const cplx z = cplx(dp, m.Gamma + m.gamma_c) / s;
    const cplx expect = -I * std::sqrt(pi) / s * faddeeva_w(z);
    CHECK(rel(voigt_G(dp, m, kUnitBeam), expect) < 1e-13);
}

TEST_CASE("strong one-photon line") {
    MediumParams m = unit_medium(0.4, 0.0);
    for (double dp : {-1.0, 0.0, 2.0})
        CHECK(chi_one_photon_strong(dp, m, kUnitBeam) == -m.g * voigt_G(dp, m, kUnitBeam));

    m = unit_medium(0.05, 100.0);  // q Lambda = 0.01
    const double width = m.Gamma + 1.0 / m.gamma_c;
    auto x = linspace(-20.0 * width, 20.0 * width, 801);
    std::vector<double> y;
    for (double dp : x) {
        const cplx c = chi_one_photon_strong(dp, m, kUnitBeam);
        CHECK(c.imag() >= 0.0);
        y.push_back(c.imag());
    }
    CHECK(fwhm(x, y) == doctest::Approx(2.0 * width).epsilon(0.01));
}

TEST_CASE("full strong-collision susceptibility without coupling") {
    const MediumParams m = unit_medium(0.3, 0.7);
    DriveParams drive;
    const auto geom = BeamGeometry::degenerate(1.0, 0.05);
    for (double dp : {-2.0, 0.0, 0.8})
        for (double d : {-0.1, 0.0, 0.2})
            CHECK(rel(chi_full_strong(dp, d, m, geom, drive), chi_one_photon_strong(dp, m, geom)) < 1e-12);
}

TEST_CASE("full strong-collision dark resonance in the Dicke regime") {
    MediumParams m = unit_medium(0.5, 100.0);
    DriveParams drive;
    drive.Omega_c = 0.05;
    const auto geom = BeamGeometry::collinear(1.0, 0.99);
    const auto res = DarkResonance::from(m, drive, geom);
    const double h = res.hwhm(geom.k);
    const double base = chi_one_photon_strong(0.0, m, geom).imag();
    auto x = linspace(-10.0 * h, 10.0 * h, 801);
    std::vector<double> dip;
    for (double d : x) dip.push_back(base - chi_full_strong(0.0, d, m, geom, drive).imag());
    CHECK(0.5 * fwhm(x, dip) == doctest::Approx(h).epsilon(0.02));
    // transparency at two-photon resonance
    CHECK(chi_full_strong(0.0, 0.0, m, geom, drive).imag() < 0.5 * base);
}

TEST_CASE("dark resonance in the Dicke limit") {
    const auto res = DarkResonance::ideal(2.0, 0.9, 0.0, 1e-3);
    CHECK(std::abs(chi_dicke(0.0, 0.0, res)) < 1e-15);
    const cplx at_k0 = chi_dicke(0.0, res.k0(), res);
    CHECK(at_k0.imag() == doctest::Approx(res.alpha() * (1.0 - 0.5)).epsilon(1e-14));
    CHECK(res.hwhm(res.k0()) == doctest::Approx(2.0 * res.gamma()).epsilon(1e-14));

    const auto lossy = DarkResonance::ideal(2.0, 0.9, 0.1, 1e-3);
    const double k = 0.5 * lossy.k0();
    const double depth0 = lossy.alpha() - chi_dicke(0.0, k, lossy).imag();
    const double w = lossy.hwhm(k);
    const double depth_half = lossy.alpha() - chi_dicke(w, k, lossy).imag();
    CHECK(depth_half == doctest::Approx(0.5 * depth0).epsilon(1e-12));
}

TEST_CASE("group velocity") {
    const auto res = DarkResonance::ideal(3.0, 0.6, 0.0, 2e-3);
    CHECK(group_velocity(0.0, res) == doctest::Approx(res.gamma() / res.alpha()).epsilon(1e-14));
    CHECK(group_velocity(res.k0(), res) == doctest::Approx(4.0 * group_velocity(0.0, res)).epsilon(1e-14));
    double prev = 0.0;
    for (double k = 0.0; k < 3.0 * res.k0(); k += 0.1 * res.k0()) {
        CHECK(group_velocity(k, res) > prev);
        prev = group_velocity(k, res);
    }
    CHECK(std::isinf(group_velocity(0.0, DarkResonance::ideal(3.0, 0.0, 0.1, 2e-3))));
}

TEST_CASE("Kramers-Kronig consistency of the strong-collision line") {
    const MediumParams m = unit_medium(0.5, 0.5);
    auto t = linspace(-400.0, 400.0, 80001);
    std::vector<double> im;
    for (double dp : t) im.push_back(chi_one_photon_strong(dp, m, kUnitBeam).imag());
    for (double x : {-1.3, 0.7, 1.0, 2.5}) {
        CAPTURE(x);
        const cplx c = chi_one_photon_strong(x, m, kUnitBeam);
        CHECK(hilbert_pv(t, im, x, c.imag()) == doctest::Approx(c.real()).epsilon(0.02));
    }
}

TEST_CASE("Kramers-Kronig consistency of the dark resonance") {
    const auto res = DarkResonance::ideal(1.0, 0.5, 0.05, 1.0);
    auto t = linspace(-400.0, 400.0, 80001);
    std::vector<double> im;
    for (double d : t) im.push_back((chi_dicke(d, 0.2, res) - res.prefactor).imag());
    for (double x : {-0.3, 0.6}) {
        const cplx c = chi_dicke(x, 0.2, res) - res.prefactor;
        CHECK(hilbert_pv(t, im, x, c.imag()) == doctest::Approx(c.real()).epsilon(0.02));
    }
}

TEST_CASE("emitter at rest radiates only at the carrier") {
    EmitterConfig cfg;
    cfg.q = 1.0;
    cfg.v = 0.0;
    cfg.dt = 0.1;
    cfg.duration = 25.6;
    const auto s = dicke_emitter_spectrum(cfg);
    const auto peak = std::max_element(s.chi.begin(), s.chi.end(),
                                       [](cplx a, cplx b) { return a.real() < b.real(); });
    CHECK(peak->real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.detunings[peak - s.chi.begin()] == 0.0);
}

TEST_CASE("free emitter line sits at the Doppler shift") {
    EmitterConfig cfg;
    cfg.q = two_pi;
    cfg.v = 1.0;
    cfg.dt = 1.0 / 16.0;
    cfg.duration = 64.0;
    const auto s = dicke_emitter_spectrum(cfg);
    double total = 0.0;
    std::size_t imax = 0;
    for (std::size_t i = 0; i < s.chi.size(); ++i) {
        total += s.chi[i].real();
        if (s.chi[i].real() > s.chi[imax].real()) imax = i;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s.detunings[imax]) == doctest::Approx(cfg.q * cfg.v).epsilon(1e-9));
}

TEST_CASE("emitter spectrum is reproducible per seed") {
    EmitterConfig cfg;
    cfg.q = two_pi;
    cfg.v = 1.0;
    cfg.collision_rate = 3.0;
    cfg.dt = 1.0 / 16.0;
    cfg.duration = 64.0;
    cfg.seed = 5;
    const auto a = dicke_emitter_spectrum(cfg);
    const auto b = dicke_emitter_spectrum(cfg);
    CHECK(a.chi == b.chi);
    cfg.seed = 6;
    CHECK(dicke_emitter_spectrum(cfg).chi != a.chi);
}

TEST_CASE("emitter input validation") {
    EmitterConfig cfg;
    cfg.q = two_pi;
    cfg.v = 1.0;
    cfg.dt = 0.1;  // dt q v > 0.5
    cfg.duration = 10.0;
    CHECK_THROWS_AS(dicke_emitter_spectrum(cfg), ValidationError);
    cfg.dt = 0.01;
    cfg.wall_spacing = -1.0;
    CHECK_THROWS_AS(dicke_emitter_spectrum(cfg), ValidationError);
}
