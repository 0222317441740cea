#include <cmath>

#include "polariton/errors.hpp"
#include "polariton/storage.hpp"

namespace polariton {

namespace {

cplx hermite(int n, cplx x) {
    cplx h0 = 1.0;
    if (n == 0) return h0;
    cplx h1 = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const cplx h2 = 2.0 * x * h1 - 2.0 * double(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

cplx laguerre(int p, int a, cplx x) {
    cplx l0 = 1.0;
    if (p == 0) return l0;
    cplx l1 = 1.0 + double(a) - x;
    for (int k = 1; k < p; ++k) {
        const cplx l2 = ((2.0 * k + 1.0 + a - x) * l1 - double(k + a) * l0) / double(k + 1);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

template <class T>
T ipow(T x, int k) {
    T r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

ScalarField2D make_mode(const ModeSpec& s, const GridSpec& g) {
    require(s.w0 > 0.0 && std::isfinite(s.w0), "make_mode: w0 must be > 0");
    require(s.n >= 0 && s.m >= 0 && s.p >= 0, "make_mode: indices must be >= 0");
    require(s.z == 0.0 || s.q > 0.0, "make_mode: q required for z != 0");
    require(std::isfinite(s.z), "make_mode: z must be finite");

    const double zR = s.z != 0.0 ? 0.5 * s.q * s.w0 * s.w0 : 1.0;
    const double wz = s.z != 0.0 ? s.w0 * std::sqrt(1.0 + (s.z / zR) * (s.z / zR)) : s.w0;
    const cplx what2 = s.z != 0.0 ? 2.0 * cplx(zR, -s.z) / s.q : cplx(s.w0 * s.w0);
    const cplx what = std::sqrt(what2);

    require(g.dx <= s.w0 / 8.0 && g.dy <= s.w0 / 8.0, "make_mode: grid under-resolves w0 (need dx <= w0/8)");
    require(g.nx * g.dx >= 6.0 * wz && g.ny * g.dy >= 6.0 * wz, "make_mode: grid extent must be >= 6 beam radii");

    ScalarField2D f(g.nx, g.ny, g.dx, g.dy);
    const double r2 = std::sqrt(2.0) / wz;
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
        const double y = f.y(iy);
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            const double x = f.x(ix);
            const double rr = x * x + y * y;
            const cplx gauss = std::exp(-rr / what2);
            cplx v;
            switch (s.family) {
                case ModeFamily::StandardHG:
                    v = hermite(s.n, r2 * x) * hermite(s.m, r2 * y);
                    break;
                case ModeFamily::ElegantHG:
                    v = hermite(s.n, x / what) * hermite(s.m, y / what);
                    break;
                case ModeFamily::StandardLG: {
                    const int al = std::abs(s.l);
                    const double rho = std::sqrt(rr);
                    v = ipow(r2 * rho, al) * laguerre(s.p, al, 2.0 * rr / (wz * wz)) *
                        std::polar(1.0, s.l * std::atan2(y, x));
                    break;
                }
                case ModeFamily::ElegantLG: {
                    const int al = std::abs(s.l);
                    const double rho = std::sqrt(rr);
                    v = ipow(rho / what, al) * laguerre(s.p, al, rr / what2) *
                        std::polar(1.0, s.l * std::atan2(y, x));
                    break;
                }
            }
            f(ix, iy) = v * gauss;
        }
    }
    const double P = f.power();
    require(P > 0.0, "make_mode: mode vanishes on the grid");
    const cplx scale = s.amplitude / std::sqrt(P);
    for (auto& v : f.data()) v *= scale;
    return f;
}

}  // namespace polariton
