#include "raux/acceptance.hpp"

#include "raux/coeffs.hpp"
#include "raux/errors.hpp"
#include "raux/expansion.hpp"
#include "raux/gfunc.hpp"
#include "raux/oracle.hpp"
#include "raux/special.hpp"
#include "raux/zeros.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <tuple>

namespace raux {

namespace {

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void add(bool ok, const std::string& what)
    {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [FAIL]");
    }
};

double slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

GaussianRational rq(long long n, long long d) { return GaussianRational(Rational(n, d)); }
GaussianRational rqi(long long n, long long d) { return GaussianRational(0, Rational(n, d)); }

Outcome coefficient_exactness(Exec)
{
    Outcome o;
    CoeffTable t = build_d_table(8);
    PkTable pk = build_pk(8);
    bool same = true;
    for (int k = 0; k <= 8; ++k) same = same && hermite_decompose(pk.u[k], k) == t.row(k);
    o.add(same, "d table equals Hermite decomposition of U_k for k <= 8");

    using Key = std::tuple<int, int>;
    auto as_map = [](const std::vector<DkTerm>& terms) {
        std::map<Key, GaussianRational> m;
        for (const auto& x : terms) m[{x.deriv, x.pi_power}] = x.coeff;
        return m;
    };
    // Explicit D_0..D_3 as (derivative order, power of pi) -> coefficient.
    std::vector<std::map<Key, GaussianRational>> expl = {
        {{{0, 0}, rq(1, 1)}},
        {{{1, -1}, rqi(1, 4)}, {{3, -2}, rq(-1, 12)}},
        {{{0, -1}, rqi(-1, 24)}, {{2, -2}, rq(1, 32)}, {{4, -3}, rqi(-1, 48)}, {{6, -4}, rq(1, 288)}},
        {{{1, -2}, rq(-1, 192)}, {{3, -3}, rqi(31, 1152)}, {{5, -4}, rq(-11, 1920)}, {{7, -5}, rqi(1, 1152)},
         {{9, -6}, rq(-1, 10368)}},
    };
    bool sym = true;
    for (int k = 0; k <= 3; ++k) sym = sym && as_map(dk_symbolic(t, k)) == expl[k];
    o.add(sym, "symbolic D_k matches the explicit formulas for k <= 3");
    return o;
}

Outcome g_identity(Exec exec)
{
    Outcome o;
    std::vector<cplx> pts = {0.5};
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> mu(-3.0, 3.0), nu(-0.7, 0.7);
    while (pts.size() < 20) pts.push_back(from_strip(mu(gen), nu(gen)));
    std::vector<double> err(pts.size());
    for_each_index(pts.size(), exec, [&](size_t i) {
        cplx a = g_eval(pts[i]), b = d0_quad(pts[i]);
        err[i] = std::abs(a - b) / std::abs(b);
    });
    double worst = *std::max_element(err.begin(), err.end());
    o.add(worst < 1e-9, "max relative error " + fmt(worst) + " over 20 points of B1 including q = 1/2");
    return o;
}

Outcome nonvanishing(Exec exec)
{
    Outcome o;
    Certificate c = nonvanishing_certificate(0.01, exec);
    o.add(c.winding == 0, "winding " + std::to_string(c.winding));
    o.add(c.min_abs > 0, "min |G| " + fmt(c.min_abs));
    o.add(c.tail_bound_min > 0, "tail bound min on [2, 10] " + fmt(c.tail_bound_min));
    return o;
}

Outcome expansion_vs_oracle(Exec exec)
{
    Outcome o;
    struct Point {
        cplx s;
        std::array<double, 5> err{};    // |I - series_K|
        std::array<double, 5> bound{};  // c_emp e^(-pi|mu|/(2 sqrt2)) |xi|^(-K-1)
        std::array<double, 5> norm{};   // err |xi|^(K+1)
        bool resolved[5] = {};
    };
    std::vector<Point> pts;
    for (double a : {pi / 3, 0.1})
        for (double r : {200.0, 400.0, 800.0, 1600.0}) pts.push_back({std::polar(r, a)});
    const Calibration& cal = default_calibration();
    for_each_index(pts.size(), exec, [&](size_t i) {
        Point& p = pts[i];
        SaddleIntegral si = saddle_integral(p.s);
        const SaddleFrame& f = si.frame;
        double decay = std::exp(-pi * std::abs(f.strip.mu) / (2 * std::sqrt(2.0)));
        for (int K = 1; K <= 4; ++K) {
            p.err[K] = std::abs(si.integral - saddle_series(f, K));
            p.bound[K] = cal.c_emp[K] * decay * std::pow(std::abs(f.xi), -K - 1);
            p.norm[K] = p.err[K] * std::pow(std::abs(f.xi), K + 1);
            p.resolved[K] = p.err[K] > 1e-12 * std::abs(si.integral);
        }
    });
    double worst_bound = 0, lo = 1e300, hi = 0;
    int rates = 0;
    for (const auto& p : pts)
        for (int K = 1; K <= 4; ++K) {
            worst_bound = std::max(worst_bound, p.err[K] / p.bound[K]);
            if (K < 4 && p.resolved[K] && p.resolved[K + 1]) {
                double r = p.norm[K + 1] / p.norm[K];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
                ++rates;
            }
        }
    o.add(worst_bound <= 1, "max error / calibrated bound " + fmt(worst_bound));
    o.add(rates > 0 && lo >= 0.125 && hi <= 2,
          "normalized error ratio per K step in [" + fmt(lo) + ", " + fmt(hi) + "] (1/2 within factor 4, " +
              std::to_string(rates) + " pairs)");
    return o;
}

Outcome reflection(Exec exec)
{
    Outcome o;
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> rad(2.0, 60.0), ang(-pi, pi);
    std::vector<cplx> pts;
    while (pts.size() < 20) {
        cplx s = std::polar(rad(gen), ang(gen));
        if (std::abs(s.imag()) >= 1e-3) pts.push_back(s);
    }
    std::vector<double> res(pts.size());
    for_each_index(pts.size(), exec, [&](size_t i) {
        cplx s = pts[i];
        ScaledComplex z = ScaledComplex::from(zeta_em(s));
        ScaledComplex a = r_quad_origin(s);
        ScaledComplex b = chi(s) * r_quad_origin(1.0 - std::conj(s)).conj();
        double scale = std::max({a.log_mod, b.log_mod, z.log_mod});
        res[i] = std::abs((a + b - z).value_scaled(scale));
    });
    double worst = *std::max_element(res.begin(), res.end());
    o.add(worst < 1e-9, "functional-equation residual " + fmt(worst) + " over 20 points, |s| <= 60");
    for (cplx s : {cplx(0.5, 300), cplx(2, 50)}) {
        double d = std::abs(zeta_via_rs(s) - zeta_em(s));
        o.add(d < 1e-7, "zeta from both expansions at " + fmt(s.real()) + "+" + fmt(s.imag()) + "i off by " + fmt(d));
    }
    return o;
}

Outcome phi_suite(Exec)
{
    Outcome o;
    double worst_u = 0, wmin = 1e300, wmax = 0;
    std::vector<double> lx, ly;
    for (int k = 1; k <= 20; ++k) {
        double r = std::exp(static_cast<double>(k));
        double phi = phi_of_r(r);
        worst_u = std::max(worst_u, std::abs(region_u(r, phi)));
        double w = 4 * k / pi * std::sin(phi);
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
        if (k >= 5) {
            lx.push_back(std::log(static_cast<double>(k)));
            ly.push_back(std::log(std::abs(phi - phi_series(r))));
        }
    }
    double sl = slope(lx, ly);
    o.add(worst_u < 1e-12, "max u residual " + fmt(worst_u));
    o.add(std::abs(sl + 6) <= 1, "remainder slope in log log r " + fmt(sl));
    o.add(wmin > 0.5 && wmax <= 1, "(4 log r / pi) sin phi in [" + fmt(wmin) + ", " + fmt(wmax) + "]");
    return o;
}

Outcome third_quadrant(Exec exec)
{
    Outcome o;
    std::vector<double> radii = {500, 1000, 2000};
    std::vector<double> c(radii.size());
    for_each_index(radii.size(), exec, [&](size_t i) {
        cplx s = std::polar(radii[i], -3 * pi / 4);
        c[i] = rel_diff(r_quad_saddle(s), leading_third_quadrant(s)) * std::abs(saddle_frame(s).xi);
    });
    double mean = (c[0] + c[1] + c[2]) / 3;
    bool stable = true;
    for (double x : c) stable = stable && std::abs(x / mean - 1) <= 0.5;
    o.add(stable, "|R/leading - 1| |xi| = " + fmt(c[0]) + ", " + fmt(c[1]) + ", " + fmt(c[2]));

    std::vector<double> ts = {1e3, 4e3, 1.6e4}, lx(3), ly(3);
    for_each_index(ts.size(), exec, [&](size_t i) {
        double t = ts[i];
        lx[i] = std::log(t);
        ly[i] = std::log(rel_diff(r_quad_saddle({0.5, -t}), half_line_neg_asymptotic(t)));
    });
    double sl = slope(lx, ly);
    o.add(std::abs(sl + 0.5) <= 0.15, "half-line error slope " + fmt(sl));
    return o;
}

Outcome zero_census(Exec exec)
{
    Outcome o;
    ZeroOptions opt;
    opt.exec = exec;
    ZeroBox big;
    big.x0 = 0, big.x1 = 1000, big.y0 = -1000, big.y1 = 0;
    int n = count_zeros(big, opt);
    o.add(n == 472, "count in (0,1000)x(-1000,0) is " + std::to_string(n) + " (expected 472)");
    int sum = 0;
    for (const auto& r : count_boxes(quarter(big), opt)) sum += r.count;
    o.add(sum == n, "quartered sum " + std::to_string(sum));
    ZeroBox triv;
    triv.x0 = -21, triv.x1 = -19, triv.y0 = -1, triv.y1 = 1;
    ZeroBox t = locate_zeros(triv, opt);
    bool one = t.count == 1 && t.zeros.size() == 1 && std::abs(t.zeros[0] - cplx(-20, 0)) < 1e-8;
    o.add(one, "box around -20 holds " + std::to_string(t.count) + " zero" +
                   (t.zeros.empty() ? "" : " at distance " + fmt(std::abs(t.zeros[0] + 20.0)) + " from -20"));
    ZeroBox free;
    free.x0 = 2, free.x1 = 100, free.y0 = 10, free.y1 = 100;
    int nf = count_zeros(free, opt);
    o.add(nf == 0, "zero-free box in L count " + std::to_string(nf));
    return o;
}

Outcome z_function(Exec)
{
    Outcome o;
    double worst = 0;
    for (double t : {50.0, 100.0, 500.0}) {
        cplx ref = std::exp(cplx(0, theta_rs(t))) * zeta_em({0.5, t});
        worst = std::max(worst, std::abs(z_of_t(t) - ref.real()));
    }
    o.add(worst < 1e-8, "max |Z - e^(i theta) zeta| " + fmt(worst) + " at t = 50, 100, 500");
    double a = z_of_t(14.13), b = z_of_t(14.14);
    o.add(a * b < 0, "Z(14.13) = " + fmt(a) + ", Z(14.14) = " + fmt(b));
    return o;
}

Outcome appendix(Exec exec)
{
    Outcome o;
    ScanReport rep = inequality_scans(exec);
    int passed = 0;
    for (const auto& l : rep.lines) {
        if (l.pass) ++passed;
        else o.add(false, l.name + ": " + l.detail);
    }
    o.add(passed == static_cast<int>(rep.lines.size()),
          std::to_string(passed) + " of " + std::to_string(rep.lines.size()) + " scans hold (I, J, f < 0, du/dphi > 0)");
    return o;
}

Outcome left_plane(Exec exec)
{
    Outcome o;
    std::vector<cplx> cor85, oldcor;
    for (double t : {1e3, 2e3, 5e3, 1e4}) cor85.push_back({-std::pow(t, 0.4), t});
    for (double sigma : {-5.0, -20.0, -50.0})
        for (double t : {100.0, 200.0, 400.0}) oldcor.push_back({sigma, t});
    std::vector<cplx> depth = {{-1e4, 5}, {-1.6e5, 5}};
    std::vector<cplx> grid = cor85;
    grid.insert(grid.end(), oldcor.begin(), oldcor.end());
    grid.insert(grid.end(), depth.begin(), depth.end());
    auto recs = left_bound_scan(grid, exec);
    const double C = 10;
    double m85 = 0, mold = 0;
    size_t i = 0;
    for (; i < cor85.size(); ++i) m85 = std::max(m85, recs[i].cor85_ratio);
    for (; i < cor85.size() + oldcor.size(); ++i) mold = std::max(mold, recs[i].oldcor_ratio);
    o.add(m85 <= C, "max cor85-2 ratio " + fmt(m85));
    o.add(mold <= C, "max oldcor ratio " + fmt(mold));
    const auto& a = recs[i];
    const auto& b = recs[i + 1];
    double ca = a.eleft_deviation * a.eta_abs, cb = b.eleft_deviation * b.eta_abs;
    o.add(std::max(ca, cb) <= 1, "deviation * |eta| = " + fmt(ca) + ", " + fmt(cb));
    double ratio = a.eleft_deviation / b.eleft_deviation;
    o.add(ratio >= 2 && ratio <= 8, "deviation ratio at 4x |eta| " + fmt(ratio));
    return o;
}

struct CriterionDef {
    const char* name;
    double limit;
    Outcome (*run)(Exec);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"coefficient exactness", 10, coefficient_exactness},
    {"G identity", 60, g_identity},
    {"non-vanishing certificate", 60, nonvanishing},
    {"expansion vs oracle", 120, expansion_vs_oracle},
    {"reflection identities", 60, reflection},
    {"phi suite", 10, phi_suite},
    {"third-quadrant asymptotics", 120, third_quadrant},
    {"zero census", 900, zero_census},
    {"Z(t)", 30, z_function},
    {"appendix scans", 60, appendix},
    {"left-plane bounds", 120, left_plane},
};

} // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, Exec exec,
                                            const std::function<void(const CriterionResult&)>& on_done)
{
    std::vector<CriterionResult> out;
    for (int id : ids) {
        if (id < 1 || id > kCriterionCount) throw DomainError("run_acceptance: criterion ids run from 1 to 11");
        const CriterionDef& sp = kCriteria[id - 1];
        CriterionResult r;
        r.id = id;
        r.name = sp.name;
        r.time_limit = sp.limit;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = sp.run(exec);
        } catch (const std::exception& e) {
            o.add(false, std::string("error: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = r.seconds <= r.time_limit;
        r.pass = o.pass && in_time;
        r.detail = o.detail;
        if (!in_time) r.detail += "; runtime over the " + fmt(r.time_limit) + " s limit";
        if (on_done) on_done(r);
        out.push_back(r);
    }
    return out;
}

} // namespace raux
