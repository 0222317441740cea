#include <algorithm>
#include <cmath>
#include <random>

#include "polariton/errors.hpp"
#include "polariton/parallel.hpp"
#include "polariton/ramsey.hpp"

namespace polariton {

std::vector<cplx> TrajectoryStats::renewal_spectrum() const {
    std::vector<cplx> out;
    out.reserve(laplace_out.size());
    for (const auto& e : laplace_out) out.push_back(1.0 / (1.0 - e.mean));
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::size_t kBlock = 64;
constexpr double kStepFraction = 0.3;  // step rms per axis relative to the distance to an edge

struct MomentSum {
    std::vector<cplx> sum;
    std::vector<double> sq_re, sq_im;
    void resize(std::size_t n) {
        sum.assign(n, 0.0);
        sq_re.assign(n, 0.0);
        sq_im.assign(n, 0.0);
    }
    void add(std::size_t i, cplx v) {
        sum[i] += v;
        sq_re[i] += v.real() * v.real();
        sq_im[i] += v.imag() * v.imag();
    }
    void merge(const MomentSum& o) {
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += o.sum[i];
            sq_re[i] += o.sq_re[i];
            sq_im[i] += o.sq_im[i];
        }
    }
};

struct Accumulator {
    MomentSum total, first, recur;
    MomentSum lap_in, lap_out, ret;
    std::size_t n_lap_in = 0, n_lap_out = 0;
    std::size_t in_count = 0, out_count = 0, censored = 0, absorbed = 0, walkers = 0;
    std::vector<double> hist_in, hist_out;
    std::vector<double> samples_in, samples_out;

    void init(std::size_t K, std::size_t S, std::size_t bins) {
        total.resize(K);
        first.resize(K);
        recur.resize(K);
        lap_in.resize(S);
        lap_out.resize(S);
        ret.resize(S);
        hist_in.assign(bins, 0.0);
        hist_out.assign(bins, 0.0);
    }
    void merge(const Accumulator& o, std::size_t cap) {
        total.merge(o.total);
        first.merge(o.first);
        recur.merge(o.recur);
        lap_in.merge(o.lap_in);
        lap_out.merge(o.lap_out);
        ret.merge(o.ret);
        n_lap_in += o.n_lap_in;
        n_lap_out += o.n_lap_out;
        in_count += o.in_count;
        out_count += o.out_count;
        censored += o.censored;
        absorbed += o.absorbed;
        walkers += o.walkers;
        for (std::size_t i = 0; i < hist_in.size(); ++i) {
            hist_in[i] += o.hist_in[i];
            hist_out[i] += o.hist_out[i];
        }
        for (double v : o.samples_in)
            if (samples_in.size() < cap) samples_in.push_back(v);
        for (double v : o.samples_out)
            if (samples_out.size() < cap) samples_out.push_back(v);
    }
};

// Everything is dimensionless inside: lengths in units of a, times in a^2/D.
struct Problem {
    int dim;
    double wall;  // b/a, +inf without walls
    bool edge_wall;  // b == a
    double g0, gP;
    double dt;
    double t_stop;
    std::vector<double> delta;  // detunings
    bool uniform;
    std::vector<cplx> inv_z;    // 1/(g0 + gP - i delta)
    std::vector<cplx> s;        // Laplace variables
    double time_unit;           // seconds per unit
    std::vector<double> log_edges;  // histogram edges in log(units)
    std::size_t cap;
};

class Walker {
public:
    Walker(const Problem& p, std::uint64_t seed, Accumulator& acc)
        : p_(p), acc_(acc), rng_(seed), K_(p.delta.size()), S_(p.s.size()) {
        tot_.assign(K_, 0.0);
        fst_.assign(K_, 0.0);
        ret_.assign(S_, 1.0);  // n = 0 term
    }

    void run() {
        // uniform start in the beam
        if (p_.dim == 1) {
            pos_[0] = 2.0 * uni() - 1.0;
            pos_[1] = 0.0;
        } else {
            const double r = std::sqrt(uni()), th = two_pi * uni();
            pos_[0] = r * std::cos(th);
            pos_[1] = r * std::sin(th);
        }
        inside_ = true;
        seg_start_ = 0.0;
        bool alive = true;
        while (alive && t_ < p_.t_stop) alive = step();
        if (alive) {
            // stopped by the coherence cutoff
            if (inside_)
                close_in(t_);
            else
                ++acc_.censored;
        }
        for (std::size_t k = 0; k < K_; ++k) {
            acc_.total.add(k, tot_[k]);
            acc_.first.add(k, fst_[k]);
            acc_.recur.add(k, tot_[k] - fst_[k]);
        }
        for (std::size_t j = 0; j < S_; ++j) acc_.ret.add(j, ret_[j]);
        ++acc_.walkers;
    }

private:
    double uni() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    double normal() { return norm_(rng_); }

    double radius(const double* x) const {
        return p_.dim == 1 ? std::abs(x[0]) : std::hypot(x[0], x[1]);
    }

    void record_hist(std::vector<double>& h, double dur) {
        const double l = std::log(dur);
        const auto& e = p_.log_edges;
        if (l < e.front() || l >= e.back()) return;
        const std::size_t i = std::upper_bound(e.begin(), e.end(), l) - e.begin() - 1;
        h[i] += 1.0;
    }

    void close_in(double t_end) {
        const double tau = t_end - seg_start_;
        const double B = std::exp(-p_.g0 * seg_start_ - p_.gP * u_);
        if (tau > 0.0 && B > 0.0) {
            const double Etau = std::exp(-(p_.g0 + p_.gP) * tau);
            auto contribution = [&](std::size_t k, cplx ph_t, cplx ph_tau) {
                const cplx z = 1.0 / p_.inv_z[k];
                const cplx zt = z * tau;
                cplx f;
                if (std::abs(zt) < 1e-4)
                    f = tau * (1.0 - zt * (0.5 - zt / 6.0));
                else
                    f = (1.0 - Etau * ph_tau) * p_.inv_z[k];
                const cplx c = B * ph_t * f;
                tot_[k] += c;
                if (!exited_) fst_[k] += c;
            };
            if (p_.uniform && K_ > 1) {
                const double d0 = p_.delta[0], dd = p_.delta[1] - p_.delta[0];
                cplx ph_t = std::polar(1.0, d0 * seg_start_), st = std::polar(1.0, dd * seg_start_);
                cplx ph_tau = std::polar(1.0, d0 * tau), sd = std::polar(1.0, dd * tau);
                for (std::size_t k = 0; k < K_; ++k) {
                    contribution(k, ph_t, ph_tau);
                    ph_t *= st;
                    ph_tau *= sd;
                }
            } else {
                for (std::size_t k = 0; k < K_; ++k)
                    contribution(k, std::polar(1.0, p_.delta[k] * seg_start_),
                                 std::polar(1.0, p_.delta[k] * tau));
            }
        }
        u_ += tau;
        ++acc_.in_count;
        for (std::size_t j = 0; j < S_; ++j) {
            acc_.lap_in.add(j, std::exp(-p_.s[j] * tau));
        }
        ++acc_.n_lap_in;
        if (tau > 0.0) {
            record_hist(acc_.hist_in, tau);
            if (acc_.samples_in.size() < p_.cap) acc_.samples_in.push_back(tau * p_.time_unit);
        }
    }

    void close_out(double t_end) {
        const double tau = t_end - seg_start_;
        dark_ += tau;
        ++acc_.out_count;
        for (std::size_t j = 0; j < S_; ++j) {
            acc_.lap_out.add(j, std::exp(-p_.s[j] * tau));
            ret_[j] += std::exp(-p_.s[j] * dark_);
        }
        ++acc_.n_lap_out;
        if (tau > 0.0) {
            record_hist(acc_.hist_out, tau);
            if (acc_.samples_out.size() < p_.cap) acc_.samples_out.push_back(tau * p_.time_unit);
        }
    }

    // Beam-edge crossing at time tc. Returns false when the walker dies.
    bool cross(double tc) {
        if (inside_) {
            close_in(tc);
            exited_ = true;
            if (p_.edge_wall) {
                ++acc_.absorbed;
                return false;
            }
        } else {
            close_out(tc);
        }
        inside_ = !inside_;
        seg_start_ = tc;
        return true;
    }

    bool absorb_outside() {
        // killed at a wall while dark; the excursion never returns
        ++acc_.censored;
        ++acc_.absorbed;
        return false;
    }

    bool step() {
        const double r = radius(pos_);
        const double d_edge = std::abs(r - 1.0);
        double d = d_edge;
        if (!inside_ && std::isfinite(p_.wall)) d = std::min(d, p_.wall - r);
        const double rms = kStepFraction * d;
        const double h = std::max(p_.dt, 0.5 * rms * rms);
        const double sd = std::sqrt(2.0 * h);
        double np[2] = {pos_[0] + sd * normal(), p_.dim == 2 ? pos_[1] + sd * normal() : 0.0};
        const double r2 = radius(np);
        const bool in2 = r2 < 1.0;

        if (!inside_ && !in2 && std::isfinite(p_.wall)) {
            if (r2 >= p_.wall) return absorb_outside();
            const double w1 = p_.wall - r, w2 = p_.wall - r2;
            if (uni() < std::exp(-w1 * w2 / h)) return absorb_outside();
        }

        if (in2 == inside_) {
            const double e2 = std::abs(r2 - 1.0);
            if (uni() < std::exp(-d_edge * e2 / h)) {
                // sub-step excursion across the edge and back
                const double tc = t_ + 0.5 * h;
                if (!cross(tc)) return false;
                if (!cross(tc)) return false;
            }
        } else {
            const double e2 = std::abs(r2 - 1.0);
            const double f = d_edge / (d_edge + e2);
            if (!cross(t_ + f * h)) return false;
        }
        pos_[0] = np[0];
        pos_[1] = np[1];
        t_ += h;
        return true;
    }

    const Problem& p_;
    Accumulator& acc_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> norm_{0.0, 1.0};
    std::size_t K_, S_;
    double pos_[2] = {0.0, 0.0};
    bool inside_ = true;
    bool exited_ = false;
    double t_ = 0.0;
    double seg_start_ = 0.0;
    double u_ = 0.0;     // accumulated bright time
    double dark_ = 0.0;  // accumulated dark time over completed excursions
    std::vector<cplx> tot_, fst_, ret_;
};

std::vector<LaplaceEstimate> finish_laplace(const MomentSum& m, std::size_t n, const std::vector<cplx>& s,
                                            double rate_unit) {
    std::vector<LaplaceEstimate> out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        LaplaceEstimate e;
        e.s = s[j] * rate_unit;
        e.samples = n;
        if (n > 0) {
            e.mean = m.sum[j] / double(n);
            const double vr = std::max(0.0, m.sq_re[j] / n - e.mean.real() * e.mean.real());
            const double vi = std::max(0.0, m.sq_im[j] / n - e.mean.imag() * e.mean.imag());
            e.stderr_re = n > 1 ? std::sqrt(vr / (n - 1)) : 0.0;
            e.stderr_im = n > 1 ? std::sqrt(vi / (n - 1)) : 0.0;
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace

RepeatedInteractionResult simulate_repeated_interaction(const RamseyGeometry& g,
                                                        const std::vector<double>& detunings,
                                                        const MonteCarloSpec& spec) {
    g.validate();
    require(spec.walkers >= 1, "monte carlo: walkers must be >= 1");
    require(spec.dt > 0.0 && std::isfinite(spec.dt), "monte carlo: dt must be > 0");
    require(spec.weight_cutoff > 0.0 && spec.weight_cutoff < 1.0, "monte carlo: weight cutoff must lie in (0, 1)");
    require(g.gamma0 > 0.0, "monte carlo: gamma0 must be > 0 to bound trajectories");
    require(spec.histogram_bins >= 1, "monte carlo: histogram needs >= 1 bin");
    for (std::size_t i = 1; i < detunings.size(); ++i)
        require(detunings[i] > detunings[i - 1], "monte carlo: detunings must be increasing");

    const double T = g.a * g.a / g.D;
    Problem p;
    p.dim = g.dimensionality;
    p.wall = g.has_walls() ? g.b / g.a : INFINITY;
    p.edge_wall = g.has_walls() && g.b == g.a;
    p.g0 = g.gamma0 * T;
    p.gP = g.gammaP * T;
    p.dt = spec.dt / T;
    // Boundary-layer steps must be a small fraction of the beam size, otherwise
    // first-passage statistics are biased even with the bridge correction.
    require(p.dt <= 1e-2, "monte carlo: dt too coarse, need dt <= 1e-2 a^2/D (first-passage bias)");
    p.t_stop = std::log(1.0 / spec.weight_cutoff) / p.g0;
    for (double d : detunings) p.delta.push_back(d * T);
    p.uniform = true;
    for (std::size_t i = 2; i < p.delta.size(); ++i) {
        const double h0 = p.delta[1] - p.delta[0];
        if (std::abs((p.delta[i] - p.delta[i - 1]) - h0) > 1e-9 * std::abs(h0)) p.uniform = false;
    }
    for (double d : p.delta) p.inv_z.push_back(1.0 / cplx(p.g0 + p.gP, -d));
    for (cplx s : spec.laplace_s) p.s.push_back(s * T);
    p.time_unit = T;
    p.cap = spec.max_samples;
    const double lo = std::log(p.dt), hi = std::log(p.t_stop);
    for (std::size_t i = 0; i <= spec.histogram_bins; ++i)
        p.log_edges.push_back(lo + (hi - lo) * double(i) / double(spec.histogram_bins));

    const std::size_t K = p.delta.size(), S = p.s.size();
    const std::size_t nblocks = (spec.walkers + kBlock - 1) / kBlock;
    std::vector<Accumulator> blocks(nblocks);
    parallel_for(
        nblocks,
        [&](std::size_t b) {
            Accumulator& acc = blocks[b];
            acc.init(K, S, spec.histogram_bins);
            const std::size_t end = std::min(spec.walkers, (b + 1) * kBlock);
            for (std::size_t w = b * kBlock; w < end; ++w) {
                Walker walker(p, splitmix64(spec.seed ^ splitmix64(w)), acc);
                walker.run();
            }
        },
        spec.threads);

    // fixed pairwise reduction tree over blocks
    for (std::size_t stride = 1; stride < nblocks; stride *= 2)
        for (std::size_t i = 0; i + stride < nblocks; i += 2 * stride) blocks[i].merge(blocks[i + stride], p.cap);
    const Accumulator& acc = blocks.front();

    RepeatedInteractionResult res;
    res.detunings = detunings;
    const double n = double(acc.walkers);
    auto mean_se = [&](const MomentSum& m, std::size_t k, cplx& mean, cplx& se) {
        mean = m.sum[k] / n * p.gP;
        const cplx mu = m.sum[k] / n;
        const double vr = std::max(0.0, m.sq_re[k] / n - mu.real() * mu.real());
        const double vi = std::max(0.0, m.sq_im[k] / n - mu.imag() * mu.imag());
        se = n > 1 ? cplx(std::sqrt(vr / (n - 1)), std::sqrt(vi / (n - 1))) * p.gP : cplx(0.0);
    };
    for (std::size_t k = 0; k < K; ++k) {
        cplx m, se, mf, sef, mr, ser;
        mean_se(acc.total, k, m, se);
        mean_se(acc.first, k, mf, sef);
        mean_se(acc.recur, k, mr, ser);
        res.dark.push_back(m);
        res.dark_stderr.push_back(se);
        res.first_transit.push_back(mf);
        res.recurrence.push_back(mr);
        res.recurrence_stderr.push_back(ser);
    }
    res.absorbed = acc.absorbed;

    TrajectoryStats& st = res.stats;
    st.t_in_samples = acc.samples_in;
    st.t_out_samples = acc.samples_out;
    st.in_count = acc.in_count;
    st.out_count = acc.out_count;
    st.censored_out = acc.censored;
    // censored excursions never return: they enter P_out with weight zero
    st.laplace_in = finish_laplace(acc.lap_in, acc.n_lap_in, p.s, 1.0 / T);
    st.laplace_out = finish_laplace(acc.lap_out, acc.n_lap_out + acc.censored, p.s, 1.0 / T);
    st.return_sum = finish_laplace(acc.ret, acc.walkers, p.s, 1.0 / T);
    for (double e : p.log_edges) st.histogram_edges.push_back(std::exp(e) * T);
    const double nin = std::max<double>(1.0, double(acc.in_count));
    const double nout = std::max<double>(1.0, double(acc.out_count + acc.censored));
    for (std::size_t i = 0; i < spec.histogram_bins; ++i) {
        const double w = st.histogram_edges[i + 1] - st.histogram_edges[i];
        st.pdf_in.push_back(acc.hist_in[i] / (nin * w));
        st.pdf_out.push_back(acc.hist_out[i] / (nout * w));
    }
    return res;
}

}  // namespace polariton
