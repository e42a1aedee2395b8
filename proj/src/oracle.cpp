#include "raux/oracle.hpp"

#include "raux/coeffs.hpp"
#include "raux/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <vector>

namespace raux {

namespace {

using LogIntegrand = std::function<cplxl(long double)>;

const cplxl il(0, 1);
const cplx I(0, 1);

// Below this many e-folds under the running peak a node is treated as tail.
constexpr long double kTailDrop = 46;

struct TrapResult {
    ScaledComplex sum;   // h * sum f
    double log_abs = 0;  // log(h * sum |f|)
    long long nodes = 0;
    double half_width = 0;
    double step = 0;
    double err_rel = 0;  // |S_h - S_2h| / |S_h|
    bool converged = false;
};

struct Extent {
    long double peak = -std::numeric_limits<long double>::infinity();
    long long kmin = 0, kmax = 0;
};

// Walk out from uc with step h until the integrand has dropped kTailDrop
// e-folds below the running peak and stays there at probes further out.
// Node values are appended to `vals` when it is given.
Extent walk_extent(const LogIntegrand& logf, long double uc, long double h, double min_half_width,
                   long long max_nodes, std::vector<ScaledComplex>* vals)
{
    Extent e;
    ScaledComplex v0 = ScaledComplex::from_exp(logf(uc));
    if (vals) vals->push_back(v0);
    e.peak = v0.log_mod;
    long long count = 1;
    for (int side : {1, -1}) {
        int quiet = 0;
        auto tail_clear = [&](long long k) {
            for (double f : {1.25, 1.5, 2.0, 3.0, 5.0, 8.0}) {
                long double u = uc + side * (k * h * f + min_half_width * (f - 1));
                if (std::real(logf(u)) >= e.peak - kTailDrop) return false;
            }
            return true;
        };
        for (long long k = 1;; ++k) {
            if (++count > max_nodes) throw ConvergenceError("trapezoid: integrand does not decay within the node budget");
            ScaledComplex v = ScaledComplex::from_exp(logf(uc + side * k * h));
            if (vals) vals->push_back(v);
            if (side > 0) e.kmax = k; else e.kmin = -k;
            if (v.log_mod > e.peak) e.peak = v.log_mod;
            quiet = (v.log_mod < e.peak - kTailDrop) ? quiet + 1 : 0;
            if (quiet >= 8 && k * h >= min_half_width && tail_clear(k)) break;
        }
    }
    return e;
}

// Trapezoid rule for exp(logf(u)) on the real line over the range found by
// walk_extent, halving the step until two levels agree.
TrapResult trapezoid_log(const LogIntegrand& logf, long double uc, long double h0, double min_half_width,
                         double tol, int max_halvings, long long max_nodes)
{
    std::vector<ScaledComplex> vals;
    Extent ext = walk_extent(logf, uc, h0, min_half_width, max_nodes, &vals);
    const long long kmin = ext.kmin, kmax = ext.kmax;
    auto sum_of = [](const std::vector<ScaledComplex>& v, ScaledSum& acc) {
        for (const auto& x : v) acc.add(x);
    };
    ScaledSum acc;
    sum_of(vals, acc);
    long double h = h0;
    TrapResult r;
    r.half_width = static_cast<double>(std::max(-kmin, kmax) * h0);
    ScaledComplex prev = acc.result() * cplx(static_cast<double>(h), 0);
    long long nodes = static_cast<long long>(vals.size());
    long long base = kmax - kmin; // intervals at step h0
    for (int level = 1; level <= max_halvings; ++level) {
        long long intervals = base << (level - 1);
        if (nodes + intervals > max_nodes) break;
        long double hn = h / 2;
        std::vector<ScaledComplex> mids(intervals);
        long double start = uc + kmin * h0 + hn;
        for_each_index(static_cast<size_t>(intervals), Exec::parallel,
                       [&](size_t j) { mids[j] = ScaledComplex::from_exp(logf(start + j * h)); });
        sum_of(mids, acc);
        nodes += intervals;
        h = hn;
        ScaledComplex cur = acc.result() * cplx(static_cast<double>(h), 0);
        double diff = cur.is_zero() && prev.is_zero() ? 0.0 : rel_diff(prev, cur);
        double floor_rel = 1e-15 * std::exp(acc.log_abs_sum() + std::log(static_cast<double>(h)) - cur.log_mod);
        r.err_rel = std::isfinite(diff) ? diff : 1.0;
        prev = cur;
        if (r.err_rel <= tol || r.err_rel <= 4 * floor_rel) {
            r.converged = true;
            break;
        }
    }
    r.sum = prev;
    r.log_abs = acc.log_abs_sum() + std::log(static_cast<double>(h));
    r.nodes = nodes;
    r.step = static_cast<double>(h);
    return r;
}

QuadratureSpec spec_of(const TrapResult& t)
{
    QuadratureSpec q;
    q.half_width = t.half_width;
    q.nodes = t.nodes;
    q.scheme = QuadScheme::trapezoid_exp;
    q.step = t.step;
    q.error_estimate = t.err_rel;
    q.condition = t.sum.is_zero() ? std::numeric_limits<double>::infinity() : std::exp(t.log_abs - t.sum.log_mod);
    return q;
}

// log(e^(pi i x) - e^(-pi i x)) without overflow.
cplxl log_sin_den(cplxl x)
{
    if (x.imag() >= 0) return -il * pi_l * x + std::log(std::exp(2.0L * il * pi_l * x) - 1.0L);
    return il * pi_l * x + std::log(1.0L - std::exp(-2.0L * il * pi_l * x));
}

// log(2 cos(pi v / 2)) without overflow.
cplxl log_two_cos_half(cplxl v)
{
    if (v.imag() >= 0) return -il * pi_l * v / 2.0L + std::log(1.0L + std::exp(il * pi_l * v));
    return il * pi_l * v / 2.0L + std::log(1.0L + std::exp(-il * pi_l * v));
}

// log(1 + w) - w + w^2/2, by its series for small |w|.
cplxl lambda_series(cplxl w)
{
    cplxl sum = 0, p = w * w;
    for (int n = 3; n < 200; ++n) {
        p *= w;
        cplxl term = p / static_cast<long double>(n);
        if (n % 2 == 0) term = -term;
        sum += term;
        if (std::abs(term) <= 1e-20L * std::abs(sum)) break;
    }
    return sum;
}

cplxl to_l(cplx z) { return {z.real(), z.imag()}; }
cplx to_d(cplxl z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

} // namespace

SaddleIntegral saddle_integral(cplx s)
{
    if (std::abs(s) > 1e5) throw DomainError("r_quad_saddle: |s| above 1e5");
    SaddleIntegral out;
    out.frame = saddle_frame(s);
    const SaddleFrame& f = out.frame;
    if (f.ell < 0) throw RegionError("r_quad_saddle: s outside the saddle region (ell < 0)");
    const cplxl sl = to_l(s);
    cplxl xi = std::sqrt(sl / (2.0L * il * pi_l));
    if (!(std::arg(xi) > -3 * pi_l / 4 && std::arg(xi) < pi_l / 4)) xi = -xi;
    const cplxl log_xi = std::log(xi);
    out.normalized = std::abs(xi) >= 0.5L;
    const bool norm = out.normalized;
    const long double base = static_cast<long double>(f.ell) + 0.5L;
    const cplxl dir = std::polar(1.0L, pi_l / 4);

    LogIntegrand logf = [&](long double u) -> cplxl {
        cplxl x = base + u * dir;
        cplxl e;
        if (norm) {
            cplxl z = x - xi;
            cplxl w = z / xi;
            if (std::abs(w) < 0.25L) e = 2.0L * il * pi_l * z * z - 2.0L * il * pi_l * xi * xi * lambda_series(w);
            else e = -sl * (std::log(x) - log_xi) + il * pi_l * (2.0L * xi * z + z * z);
        } else {
            e = -sl * std::log(x) + il * pi_l * x * x;
        }
        return e - log_sin_den(x);
    };
    // The Gaussian factor is centred where the line is closest to xi.
    long double uc = std::real((xi - base) * std::conj(dir));
    TrapResult t = trapezoid_log(logf, uc, 0.04L, 2.0, 1e-13, 6, 20'000'000);
    if (!t.converged) throw ConvergenceError("r_quad_saddle: step halving did not converge");
    ScaledComplex J = t.sum * (-to_d(dir));
    out.prefactor = norm ? ScaledComplex::from_exp(log_saddle_prefactor(f)) : ScaledComplex::from(1.0);
    out.zeta_sum = zeta_partial_sum(s, f.ell);
    out.value = out.zeta_sum + out.prefactor * J;
    double sign = (f.ell % 2 == 0) ? 1.0 : -1.0;
    out.integral = (J * (2.0 * I * sign)).value();
    out.quad = spec_of(t);
    return out;
}

ScaledComplex r_quad_saddle(cplx s) { return saddle_integral(s).value; }

OriginResult r_quad_origin_detailed(cplx s, const OriginOptions& opt)
{
    if (std::abs(s) > 500) throw DomainError("r_quad_origin: |s| above 500");
    const cplxl sl = to_l(s);
    // Integrand at x0 + w e^(i alpha) for complex w.
    auto log_at = [sl](long double x0, long double alpha, cplxl w) -> cplxl {
        cplxl x = x0 + w * std::polar(1.0L, alpha);
        return -sl * std::log(x) + il * pi_l * x * x - log_sin_den(x);
    };

    struct Line {
        double x0, alpha;
        long double h;
        double score;
    };
    // Trapezoid aliasing is bounded by max|f| on the lines shifted by d
    // times e^(-2 pi d / h). d stays below the distance to the poles at 0
    // and 1 and to the branch cut, so h follows from the integrand growth
    // off the path rather than from its size on it.
    auto plan = [&](double x0, double alpha) {
        LogIntegrand lf = [&, x0, alpha](long double u) { return log_at(x0, alpha, u); };
        Extent e = walk_extent(lf, 0, 0.05L, 2.0, 400000, nullptr);
        long double d = 0.8L * std::min(x0, 1 - x0) * std::sin(static_cast<long double>(alpha));
        long double m = -std::numeric_limits<long double>::infinity();
        for (long long k = e.kmin; k <= e.kmax; ++k)
            for (int sg : {1, -1}) m = std::max(m, std::real(log_at(x0, alpha, cplxl(k * 0.05L, sg * d))));
        long double excess = std::max(0.0L, m - e.peak) + 40;
        long double h = std::min(0.05L, 2 * pi_l * d / excess);
        double nodes = static_cast<double>((e.kmax - e.kmin) * 0.05L / h);
        return Line{x0, alpha, h, static_cast<double>(e.peak) + 0.5 * std::log(std::max(nodes, 1.0))};
    };

    Line line{};
    if (!std::isnan(opt.alpha)) {
        if (!(opt.alpha > 0 && opt.alpha < pi / 2)) throw DomainError("r_quad_origin: alpha must lie in (0, pi/2)");
        line = plan(0.5, opt.alpha);
    } else {
        // Pick the line with the smallest integrand peak, which bounds the
        // cancellation, with a mild penalty for the node count.
        line.score = std::numeric_limits<double>::infinity();
        for (double x0 : {0.5, 0.75, 0.9, 0.97, 0.99, 0.996})
            for (double a : {1.565, 1.555, 1.54, 1.5, 1.4, 1.2, 1.0, pi / 4, 0.6, 0.4, 0.25, 0.15, 0.08, 0.04, 0.02, 0.01}) {
                Line c = plan(x0, a);
                if (c.score < line.score) line = c;
            }
    }
    const double x0 = line.x0, alpha = line.alpha;
    LogIntegrand lf = [&](long double u) { return log_at(x0, alpha, u); };
    TrapResult t = trapezoid_log(lf, 0, line.h, 2.0, 1e-14, 4, opt.max_nodes);
    OriginResult r;
    r.alpha = alpha;
    r.crossing = x0;
    r.value = t.sum * (-std::polar(1.0, alpha));
    r.quad = spec_of(t);
    // Each node carries a relative rounding error of a few ulps; the sum
    // amplifies it by the condition number.
    double rounding = 5e-16 * r.quad.condition;
    double err = std::max(t.converged ? t.err_rel : 1.0, rounding);
    r.quad.error_estimate = err;
    if (opt.throw_on_conditioning && !(err <= opt.rel_tol)) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "r_quad_origin: estimated relative error %.2e exceeds %.1e (condition %.2e)",
                      err, opt.rel_tol, r.quad.condition);
        throw ConditioningError(buf);
    }
    return r;
}

ScaledComplex r_quad_origin(cplx s, const OriginOptions& opt) { return r_quad_origin_detailed(s, opt).value; }

cplx dk_quad(cplx q, int k)
{
    if (k < 0) throw OrderError("dk_quad: negative order");
    const PkTable& pk = default_pk();
    if (k > pk.kmax) throw OrderError("dk_quad: order above the coefficient table");
    const RationalPoly& p = pk.p[k];
    const cplxl ql = to_l(q);
    const cplxl dir = std::polar(1.0L, pi_l / 4);
    const cplx isp = I * std::sqrt(pi);
    LogIntegrand logf = [&](long double u) -> cplxl {
        cplxl v = u * dir;
        cplxl d = v - ql;
        cplxl e = il * pi_l * d * d / 2.0L - log_two_cos_half(v);
        if (k > 0) {
            cplx pv = p.eval(isp * to_d(d));
            if (pv == cplx(0, 0)) return {-std::numeric_limits<long double>::infinity(), 0};
            e += to_l(std::log(pv));
        }
        return e;
    };
    StripPoint sp = strip_coords(q);
    TrapResult t = trapezoid_log(logf, sp.mu, 0.05L, 3.0 + std::sqrt(3.0 * k), 1e-13, 5, 4'000'000);
    if (!t.converged) throw ConvergenceError("dk_quad: step halving did not converge");
    cplx integral = (t.sum * (-to_d(dir))).value();
    return std::pow(-1.0 / (4 * std::sqrt(pi)), k) * integral;
}

cplx d0_quad(cplx q) { return dk_quad(q, 0); }

namespace {

// log g(tau, z), g = exp(-(i/8 tau^2) (log(1+w) - w + w^2/2)), w = 2 i tau z.
cplx log_g(cplx tau, cplx z)
{
    if (tau == cplx(0, 0)) return 0;
    cplxl t = to_l(tau), zl = to_l(z);
    cplxl w = 2.0L * il * t * zl;
    cplxl onew = 1.0L + w;
    if (onew.imag() == 0 && onew.real() <= 0) throw BranchError("g(tau, z): 1 + 2 i tau z on the non-positive real axis");
    cplxl lam = std::abs(w) < 0.5L ? lambda_series(w) : std::log(onew) - w + w * w / 2.0L;
    return to_d(-il / (8.0L * t * t) * lam);
}

// f(zeta) = -log(1 - zeta)/zeta^2 - 1/zeta - 1/2 = sum_{n>=3} zeta^(n-2)/n.
cplx f_zeta(cplx zeta)
{
    if (std::abs(zeta) < 0.5) {
        cplx sum = 0, p = 1;
        for (int n = 3; n < 200; ++n) {
            p *= zeta;
            cplx term = p / static_cast<double>(n);
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return -std::log(1.0 - zeta) / (zeta * zeta) - 1.0 / zeta - 0.5;
}

} // namespace

cplx g_tau_z(cplx tau, cplx z) { return std::exp(log_g(tau, z)); }

cplx rg_remainder_direct(cplx tau, cplx z, int K)
{
    if (K < 0) throw OrderError("rg_remainder_direct: negative order");
    const PkTable& pk = default_pk();
    if (K > pk.kmax) throw OrderError("rg_remainder_direct: order above the coefficient table");
    if (z == cplx(0, 0)) return 0;
    cplx r = g_tau_z(tau, z);
    cplx tk = 1;
    for (int k = 0; k <= K; ++k) {
        r -= pk.p[k].eval(z) * tk;
        tk *= tau;
    }
    return r;
}

cplx rg_remainder_line(cplx tau, cplx z, int K)
{
    if (K < 0) throw OrderError("rg_remainder_line: negative order");
    if (z == cplx(0, 0)) return 0;
    const cplx a = -2.0 * I * z * tau;
    if (!(a.real() < 0.45)) throw DomainError("rg_remainder_line: -2 i z tau not left of the line Re zeta = 1/2");
    // zeta = 1/2 + i tan(theta), d zeta = i sec^2(theta) d theta.
    auto integrand = [&](double th) -> cplx {
        double c = std::cos(th);
        if (c <= 0) return 0;
        cplx zeta(0.5, std::tan(th));
        cplx h = std::exp(-I * z * z * f_zeta(zeta) / 2.0);
        return h / ((zeta - a) * std::pow(zeta, K + 1)) * I / (c * c);
    };
    using boost::math::quadrature::gauss_kronrod;
    const double lim = pi / 2;
    // Split at the point of the line nearest the pole at a.
    double th0 = std::atan(a.imag());
    double re = 0, im = 0;
    for (auto [lo, hi] : {std::pair{-lim, th0}, std::pair{th0, lim}}) {
        re += gauss_kronrod<double, 61>::integrate([&](double th) { return integrand(th).real(); }, lo, hi, 20, 1e-13);
        im += gauss_kronrod<double, 61>::integrate([&](double th) { return integrand(th).imag(); }, lo, hi, 20, 1e-13);
    }
    return std::pow(a, K + 1) / (2 * pi * I) * cplx(re, im);
}

namespace {

// Integral of exp(h(x)) over the real line, split at the given points.
double integrate_split(const std::function<double(double)>& h, std::vector<double> cuts)
{
    using boost::math::quadrature::gauss_kronrod;
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> pts;
    pts.push_back(-inf);
    pts.insert(pts.end(), cuts.begin(), cuts.end());
    pts.push_back(inf);
    double total = 0;
    auto f = [&](double x) { return std::exp(h(x)); };
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        total += gauss_kronrod<double, 61>::integrate(f, pts[i], pts[i + 1], 20, 1e-12);
    return total;
}

} // namespace

double appendix_I(double a, double lambda)
{
    if (!(a > 0)) throw DomainError("appendix_I: a must be positive");
    return integrate_split([=](double x) { return -a * x * x - std::abs(lambda - x); }, {0.0, lambda, 1 / (2 * a), -1 / (2 * a)});
}

double appendix_J(double a, double b, double c, double lambda)
{
    if (!(a > 0 && b > 0 && c > 0)) throw DomainError("appendix_J: a, b, c must be positive");
    double p = (b + c) / (2 * a);
    return integrate_split([=](double x) { return -a * x * x + b * std::abs(x) - c * std::abs(lambda - x); },
                           {0.0, lambda, p, -p, (b - c) / (2 * a), -(b - c) / (2 * a)});
}

double appendix_f(double r, double phi)
{
    return 4 * std::log(r) / (pi * r * r) - 2 * std::sin(2 * phi) * std::log(std::cos(phi) + std::sin(phi)) +
           2 * phi * std::cos(2 * phi) - std::sin(2 * phi) + std::sin(phi) / r;
}

double region_u(double r, double phi)
{
    return 2 * std::log(r) * std::sin(2 * phi) - 2 * (pi / 2 - phi) * std::cos(2 * phi) - std::sin(2 * phi) -
           std::sin(phi) / r;
}

double region_u_dphi(double r, double phi)
{
    return 4 * std::log(r) * std::cos(2 * phi) + 4 * (pi / 2 - phi) * std::sin(2 * phi) - std::cos(phi) / r;
}

bool ScanReport::all_pass() const
{
    return std::all_of(lines.begin(), lines.end(), [](const ScanLine& l) { return l.pass; });
}

namespace {

std::string fmt(const char* f, double a, double b = 0, double c = 0)
{
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// sup over the lambda grid of F(lambda) e^(c|lambda|), and whether it has
// settled to a finite limit at the ends of the grid.
ScanLine sup_scan(const std::string& name, const std::function<double(double)>& scaled, Exec exec)
{
    const int n = 321;
    std::vector<double> lam(n), val(n);
    for_each_index(n, exec, [&](size_t i) {
        lam[i] = -40.0 + 80.0 * static_cast<double>(i) / (n - 1);
        val[i] = scaled(lam[i]);
    });
    auto it = std::max_element(val.begin(), val.end());
    double sup = *it, at = lam[it - val.begin()];
    // Values at |lambda| = 30 and 40 must agree: the scaled integral tends to a constant.
    auto at_lam = [&](double l) { return val[static_cast<size_t>(std::lround((l + 40.0) / 80.0 * (n - 1)))]; };
    double drift = std::max(std::abs(at_lam(40) / at_lam(30) - 1), std::abs(at_lam(-40) / at_lam(-30) - 1));
    bool finite = std::all_of(val.begin(), val.end(), [](double v) { return std::isfinite(v) && v > 0; });
    ScanLine line;
    line.name = name;
    line.pass = finite && drift < 1e-6;
    line.detail = fmt("sup %.6g at lambda=%.2f, tail drift %.1e", sup, at, drift);
    return line;
}

} // namespace

ScanReport inequality_scans(Exec exec)
{
    ScanReport rep;
    for (double a : {0.1, 1.0, 10.0}) {
        ScanLine l = sup_scan(fmt("I(a,lambda) e^|lambda|, a=%g", a), [a](double lam) {
            return integrate_split([=](double x) { return -a * x * x - std::abs(lam - x) + std::abs(lam); },
                                   {0.0, lam, 1 / (2 * a), -1 / (2 * a)});
        }, exec);
        // For |lambda| > 1 the scaled integral stays below (sqrt(pi/a) + 1/(2a)) e^(1/(4a)).
        double bound = (std::sqrt(pi / a) + 1 / (2 * a)) * std::exp(1 / (4 * a));
        double worst = 0;
        for (double lam = 1.0; lam <= 40.0; lam += 0.25)
            worst = std::max(worst, appendix_I(a, lam) * std::exp(lam) / bound);
        l.pass = l.pass && worst <= 1;
        l.detail += fmt(", max ratio to bound %.3f", worst);
        rep.lines.push_back(l);
    }
    for (double a : {0.5, 1.0, 4.0})
        for (double b : {0.5, 2.0})
            for (double c : {0.5, 2.0}) {
                rep.lines.push_back(sup_scan(fmt("J(a,b,c,lambda) e^(c|lambda|), a=%g b=%g c=%g", a, b, c),
                    [a, b, c](double lam) {
                        double p = (b + c) / (2 * a), m = (b - c) / (2 * a);
                        return integrate_split(
                            [=](double x) {
                                return -a * x * x + b * std::abs(x) - c * std::abs(lam - x) + c * std::abs(lam);
                            },
                            {0.0, lam, p, -p, m, -m});
                    }, exec));
            }

    {
        // f(r, phi) < 0 for log r in (1, 10], phi in [sqrt(2 log r)/r, pi/2].
        const int nr = 400, nphi = 600;
        std::vector<double> row_max(nr);
        std::vector<double> row_arg(nr);
        for_each_index(nr, exec, [&](size_t i) {
            double r = std::exp(1.0 + 9.0 * (static_cast<double>(i) + 1) / nr);
            double phi0 = std::sqrt(2 * std::log(r)) / r;
            double best = -std::numeric_limits<double>::infinity(), arg = 0;
            for (int j = 0; j <= nphi; ++j) {
                double phi = phi0 + (pi / 2 - phi0) * j / nphi;
                double v = appendix_f(r, phi);
                if (v > best) {
                    best = v;
                    arg = phi;
                }
            }
            row_max[i] = best;
            row_arg[i] = arg;
        });
        auto it = std::max_element(row_max.begin(), row_max.end());
        size_t k = static_cast<size_t>(it - row_max.begin());
        ScanLine l;
        l.name = "f(r,phi) < 0 on the lemma domain";
        l.pass = *it < 0 && appendix_f(std::exp(2.0), pi / 4) < 0;
        l.detail = fmt("max f %.4g at log r=%.3f phi=%.4f", *it, 1.0 + 9.0 * (k + 1.0) / nr, row_arg[k]);
        rep.lines.push_back(l);
    }
    {
        const int nr = 400, nphi = 400;
        std::vector<double> row_min(nr);
        for_each_index(nr, exec, [&](size_t i) {
            double r = std::exp(1.0 + 9.0 * static_cast<double>(i) / (nr - 1));
            double best = std::numeric_limits<double>::infinity();
            for (int j = 0; j <= nphi; ++j) best = std::min(best, region_u_dphi(r, (pi / 4) * j / nphi));
            row_min[i] = best;
        });
        double mn = *std::min_element(row_min.begin(), row_min.end());
        ScanLine l;
        l.name = "du/dphi > 0 on [0, pi/4]";
        double u0 = region_u(std::exp(1.0), 0.0);
        l.pass = mn > 0 && std::abs(u0 + pi) < 1e-15;
        l.detail = fmt("min du/dphi %.4g, u(e,0) + pi = %.1e", mn, u0 + pi);
        rep.lines.push_back(l);
    }
    return rep;
}

} // namespace raux
