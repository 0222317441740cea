#include "polariton/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "polariton/errors.hpp"

namespace polariton {

void ComplexSpectrum::validate() const {
    require(detunings.size() == chi.size(), "spectrum: array lengths differ");
    for (std::size_t i = 1; i < detunings.size(); ++i)
        require(detunings[i] > detunings[i - 1], "spectrum: detunings must be strictly increasing");
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return v;
}

namespace {

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), d(n - 1), m(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) continue;
        const double w1 = 2 * h[i] + h[i - 1], w2 = h[i] + 2 * h[i - 1];
        m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0) return 0.0;
        if (d0 * d1 <= 0 && std::abs(s) > 3 * std::abs(d0)) return 3 * d0;
        return s;
    };
    m[0] = end_slope(h[0], h[1], d[0], d[1]);
    m[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

double hermite(double t, double h, double y0, double y1, double m0, double m1) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * m0 + (-2 * t3 + 3 * t2) * y1 +
           (t3 - t2) * h * m1;
}

// Crossing of level on [x_i, x_{i+1}] where the PCHIP segment is monotone.
double crossing(const std::vector<double>& x, const std::vector<double>& y,
                const std::vector<double>& m, std::size_t i, double level) {
    const double h = x[i + 1] - x[i];
    double lo = 0.0, hi = 1.0;
    const double flo = y[i] - level;
    if (flo == 0.0) return x[i];
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = hermite(mid, h, y[i], y[i + 1], m[i], m[i + 1]) - level;
        if ((f < 0) == (flo < 0))
            lo = mid;
        else
            hi = mid;
    }
    return x[i] + 0.5 * (lo + hi) * h;
}

}  // namespace

double fwhm(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 3, "fwhm: need >= 3 samples");
    const std::size_t imax = std::max_element(y.begin(), y.end()) - y.begin();
    const double half = 0.5 * y[imax];
    require(half > 0.0, "fwhm: profile maximum must be positive");
    const auto m = pchip_slopes(x, y);
    std::size_t l = imax;
    while (l > 0 && y[l] > half) --l;
    std::size_t r = imax;
    while (r + 1 < y.size() && y[r] > half) ++r;
    if (y[l] > half || y[r] > half)
        throw ValidationError("fwhm: profile does not fall to half maximum inside the window");
    const double xl = crossing(x, y, m, l, half);
    const double xr = crossing(x, y, m, r - 1, half);
    return xr - xl;
}

LorentzianFit fit_lorentzian(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 4, "fit_lorentzian: need >= 4 samples");
    const std::size_t imax = std::max_element(y.begin(), y.end()) - y.begin();
    double p[3] = {y[imax], x[imax], 0.0};
    try {
        p[2] = 0.5 * fwhm(x, y);
    } catch (const ValidationError&) {
        p[2] = 0.25 * (x.back() - x.front());
    }
    auto sse = [&](const double* q) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double u = (x[i] - q[1]) / q[2];
            const double r = y[i] - q[0] / (1 + u * u);
            s += r * r;
        }
        return s;
    };
    double lambda = 1e-3;
    double cur = sse(p);
    for (int it = 0; it < 200; ++it) {
        double JTJ[3][3] = {}, JTr[3] = {};
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double u = (x[i] - p[1]) / p[2];
            const double den = 1 + u * u;
            const double f = p[0] / den;
            const double r = y[i] - f;
            const double J[3] = {1 / den, p[0] * 2 * u / (den * den * p[2]),
                                 p[0] * 2 * u * u / (den * den * p[2])};
            for (int a = 0; a < 3; ++a) {
                JTr[a] += J[a] * r;
                for (int b = 0; b < 3; ++b) JTJ[a][b] += J[a] * J[b];
            }
        }
        double A[3][4];
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) A[a][b] = JTJ[a][b] * (a == b ? 1 + lambda : 1);
            A[a][3] = JTr[a];
        }
        for (int c = 0; c < 3; ++c) {
            int piv = c;
            for (int r2 = c + 1; r2 < 3; ++r2)
                if (std::abs(A[r2][c]) > std::abs(A[piv][c])) piv = r2;
            std::swap(A[c], A[piv]);
            for (int r2 = 0; r2 < 3; ++r2) {
                if (r2 == c || A[c][c] == 0) continue;
                const double f = A[r2][c] / A[c][c];
                for (int k = c; k < 4; ++k) A[r2][k] -= f * A[c][k];
            }
        }
        double q[3];
        for (int a = 0; a < 3; ++a) q[a] = p[a] + (A[a][a] != 0 ? A[a][3] / A[a][a] : 0);
        q[2] = std::abs(q[2]);
        const double next = sse(q);
        if (next < cur) {
            const double rel = (cur - next) / std::max(cur, 1e-300);
            std::copy(q, q + 3, p);
            cur = next;
            lambda *= 0.3;
            if (rel < 1e-14) break;
        } else {
            lambda *= 10;
            if (lambda > 1e12) break;
        }
    }
    LorentzianFit fit{p[0], p[1], p[2], 0.0};
    fit.rms_residual = std::sqrt(cur / x.size()) / std::abs(p[0]);
    return fit;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_spectrum_csv(std::ostream& out, const ComplexSpectrum& s, std::optional<double> L,
                        const std::vector<ExtraColumn>& extra) {
    s.validate();
    for (const auto& c : extra)
        require(c.values.size() == s.chi.size(), "csv: extra column length mismatch");
    out << "# polariton-sim spectrum v1\n";
    out << "# formalism = " << s.formalism << "\n";
    for (const auto& [k, v] : s.params) out << "# " << k << " = " << v << "\n";
    if (L) out << "# L_m = " << format_double(*L) << "\n";
    out << "detuning_hz,re_chi_per_m,im_chi_per_m,transmission";
    for (const auto& c : extra) out << "," << c.name;
    out << "\n";
    for (std::size_t i = 0; i < s.chi.size(); ++i) {
        const double T = L ? std::exp(-2.0 * s.chi[i].imag() * *L) : std::nan("");
        out << format_double(rad_to_hz(s.detunings[i])) << "," << format_double(s.chi[i].real())
            << "," << format_double(s.chi[i].imag()) << "," << format_double(T);
        for (const auto& c : extra) out << "," << format_double(c.values[i]);
        out << "\n";
    }
}

}  // namespace polariton
