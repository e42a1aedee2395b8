#include "raux/expansion.hpp"

#include "raux/coeffs.hpp"
#include "raux/errors.hpp"
#include "raux/oracle.hpp"
#include "raux/special.hpp"

#include <algorithm>
#include <cmath>

namespace raux {

namespace {

const cplx I(0, 1);
const double e1 = std::exp(1.0);
const double two_pi_e2 = 2 * pi * e1 * e1;

double arg_0_2pi(cplx z)
{
    double a = std::arg(z);
    return a < 0 ? a + 2 * pi : a;
}

void check_order(int K)
{
    if (K < 1 || K > kDefaultKmax) throw OrderError("expansion order must lie in [1, " + std::to_string(kDefaultKmax) + "]");
}

// log of e^(-pi|mu|/(2 sqrt2)) |xi|^(-K-1) |prefactor| / 2 for a saddle frame.
double log_error_scale(const SaddleFrame& f, const ScaledComplex& prefactor, int K)
{
    return -pi * std::abs(f.strip.mu) / (2 * std::sqrt(2.0)) - (K + 1) * std::log(std::abs(f.xi)) +
           prefactor.log_mod - std::log(2.0);
}

double c_emp_for(int K)
{
    const Calibration& c = default_calibration();
    return c.c_emp[std::min(K, kCalibratedKmax)];
}

// ((-1)^ell / 2i) xi^(-s) e^(pi i xi^2) sum_k D_k / xi^k, and the prefactor.
ScaledComplex saddle_term(const SaddleFrame& f, int K, ScaledComplex& prefactor)
{
    prefactor = ScaledComplex::from_exp(log_saddle_prefactor(f));
    double sign = (f.ell % 2 == 0) ? 1.0 : -1.0;
    return prefactor * (sign / (2.0 * I) * saddle_series(f, K));
}

} // namespace

std::string region_name(RegionTag tag)
{
    switch (tag) {
    case RegionTag::L: return "L";
    case RegionTag::M: return "M";
    case RegionTag::N: return "N";
    case RegionTag::Gset: return "Gset";
    case RegionTag::P: return "P";
    case RegionTag::DeltaOnly: return "DeltaOnly";
    case RegionTag::Outside: return "Outside";
    }
    return "Outside";
}

double phi_of_r(double r)
{
    if (!(r >= e1 * (1 - 1e-15))) throw DomainError("phi_of_r: requires r >= e");
    // u(r, 0) = -pi < 0 < u(r, pi/4) and u increases in phi.
    double lo = 0, hi = pi / 4;
    for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
        double mid = 0.5 * (lo + hi);
        if (region_u(r, mid) < 0) lo = mid; else hi = mid;
    }
    double phi = 0.5 * (lo + hi);
    // One Newton step polishes the last bits.
    double step = region_u(r, phi) / region_u_dphi(r, phi);
    if (std::abs(step) < hi - lo + 1e-15) phi -= step;
    return phi;
}

double phi_series(double r)
{
    if (!(r >= e1 * (1 - 1e-15))) throw DomainError("phi_series: requires r >= e");
    double L = std::log(r);
    return pi / (4 * L) - std::pow(pi, 3) / (48 * L * L * L) + std::pow(pi, 3) / (96 * std::pow(L, 4)) +
           std::pow(pi, 5) / (320 * std::pow(L, 5));
}

bool in_delta(cplx s, double theta)
{
    if (std::abs(s) < 2 * pi) return false;
    double a = std::arg(s);
    return a >= -pi + theta && a <= pi - theta;
}

bool in_L(cplx s)
{
    double m = std::abs(s);
    if (!(m > two_pi_e2)) return false;
    double a = std::arg(s);
    return a < pi / 2 && a > -pi / 2 + 2 * phi_of_r(std::sqrt(m / (2 * pi)));
}

bool in_M(cplx s, double theta)
{
    double m = std::abs(s);
    if (!(m > two_pi_e2)) return false;
    double xi_abs = std::sqrt(m / (2 * pi));
    double a = std::arg(s);
    return a > -pi + theta && a < -pi / 2 + std::atan(pi / (2 * std::log(xi_abs)));
}

bool in_N(cplx s)
{
    if (!(std::abs(s - 1.0) > two_pi_e2)) return false;
    double sigma = s.real(), t = s.imag();
    if (!(sigma < 1)) return false;
    if (t <= 2 * pi * e1) return true;
    double x = t / (2 * pi);
    return sigma <= 1 - 8 * pi * std::sqrt(x * std::log(x));
}

bool in_left_G(cplx s)
{
    cplx w = s - 1.0;
    double m = std::abs(w);
    if (!(m > 2 * pi * e1)) return false;
    double a = arg_0_2pi(w);
    return a >= pi / 2 && a <= pi / 2 + 2 * std::atan(std::sqrt(std::log(m / (2 * pi))));
}

bool in_P(cplx s)
{
    if (s.imag() == 0 && s.real() <= 0) return false;
    cplx xi = std::sqrt(s / (2 * pi * I));
    if (!(std::arg(xi) > -3 * pi / 4 && std::arg(xi) < pi / 4)) xi = -xi;
    if (std::abs(xi) < e1) return false;
    double a = std::arg(xi);
    if (a < -pi / 2 || a > -pi / 4) return false;
    cplx e = -2.0 * pi * I * xi * xi * std::log(xi) + pi * I * xi * xi + pi * xi;
    return e.real() <= 0;
}

bool in_wedge9(cplx s, double theta)
{
    if (s.imag() < 2 * pi) return false;
    double a1 = std::arg(s - 1.0), a = std::arg(s);
    return a1 >= theta && a1 <= pi && a >= 0 && a <= pi - theta;
}

RegionLabel classify_region(cplx s, double theta)
{
    RegionLabel r;
    r.theta = theta;
    if (in_L(s)) r.tag = RegionTag::L;
    else if (in_M(s, theta)) r.tag = RegionTag::M;
    else if (in_N(s)) r.tag = RegionTag::N;
    else if (in_left_G(s)) r.tag = RegionTag::Gset;
    else if (in_P(s)) r.tag = RegionTag::P;
    else if (in_delta(s, theta)) r.tag = RegionTag::DeltaOnly;
    else r.tag = RegionTag::Outside;
    return r;
}

cplx saddle_series(const SaddleFrame& f, int K)
{
    if (K < 0 || K > kDefaultKmax) throw OrderError("saddle_series: order out of range");
    Jet jet = g_jet(f.q, 3 * K);
    const CoeffTable& table = default_table();
    cplx sum = 0, xik = 1;
    for (int k = 0; k <= K; ++k) {
        sum += assemble_Dk(table, k, f.q, jet) / xik;
        xik *= f.xi;
    }
    return sum;
}

ExpansionResult expand_right(cplx s, int K)
{
    check_order(K);
    if (std::abs(s) < 2 * pi || (s.imag() == 0 && s.real() <= 0))
        throw RegionError("expand_right: s outside Delta (|s| >= 2 pi, off the non-positive axis)");
    ExpansionResult r;
    r.frame = saddle_frame(s);
    r.k_used = K;
    ScaledComplex pref;
    ScaledComplex term = saddle_term(r.frame, K, pref);
    r.value = zeta_partial_sum(s, r.frame.ell) + term;
    double log_err = std::log(c_emp_for(K)) + log_error_scale(r.frame, pref, K);
    r.err_estimate = r.value.is_zero() ? std::numeric_limits<double>::infinity() : std::exp(log_err - r.value.log_mod);
    return r;
}

ExpansionResult expand_left(cplx s, int K)
{
    check_order(K);
    cplx w = 1.0 - s;
    if (std::abs(w) < 2 * pi || (s.imag() == 0 && s.real() >= 1))
        throw RegionError("expand_left: 1 - s outside Delta (|1 - s| >= 2 pi, s off [1, inf))");
    ExpansionResult r;
    r.left = true;
    r.k_used = K;
    r.left_frame = left_frame(s);
    r.frame = saddle_frame(std::conj(w));
    ScaledComplex c = chi(s);
    if (c.is_zero()) {
        r.value = ScaledComplex::zero();
        return r;
    }
    ScaledComplex pref;
    ScaledComplex term = saddle_term(r.frame, K, pref);
    // zeta(1-s) - conj R(1 - conj s) = (tail past m) - conj(saddle term).
    ScaledComplex inner = zeta_tail(w, r.frame.ell) - term.conj();
    r.value = c * inner;
    double log_err = c.log_mod + std::log(c_emp_for(K)) + log_error_scale(r.frame, pref, K);
    r.err_estimate = r.value.is_zero() ? std::numeric_limits<double>::infinity() : std::exp(log_err - r.value.log_mod);
    return r;
}

AutoResult eval_auto(cplx s, int K, Method method)
{
    AutoResult out;
    out.region = classify_region(s);
    if (method == Method::automatic) {
        double a = std::arg(s);
        if (std::abs(s) < 2 * pi) method = Method::oracle;
        else if (s.real() >= 0) method = Method::right;
        else if (s.imag() < 0 && a > -3 * pi / 4) method = Method::right;
        else method = Method::left;
    }
    out.used = method;
    switch (method) {
    case Method::right: out.result = expand_right(s, K); break;
    case Method::left: out.result = expand_left(s, K); break;
    default: {
        ExpansionResult r;
        if (std::abs(s) <= 500) {
            OriginResult o = r_quad_origin_detailed(s);
            r.value = o.value;
            r.err_estimate = o.quad.error_estimate;
        } else {
            SaddleIntegral si = saddle_integral(s);
            r.value = si.value;
            r.err_estimate = std::max(si.quad.error_estimate, 1e-15 * si.quad.condition);
            r.frame = si.frame;
        }
        out.result = r;
        break;
    }
    }
    return out;
}

ScaledComplex zeta_tail(cplx w, long long m)
{
    if (w == cplx(1, 0)) throw PoleError("zeta_tail: pole at 1");
    m = std::max(m, 0LL);
    if (w.real() < 0) return ScaledComplex::from(zeta_em(w)) - zeta_partial_sum(w, m);
    // Euler-Maclaurin from n = m+1, every term scaled by (m+1)^(Re w).
    const cplxl wl(w.real(), w.imag());
    const long long base = m + 1;
    const long double ref = -wl.real() * std::log(static_cast<long double>(base));
    const long long N = std::max<long long>(base, static_cast<long long>(std::ceil(std::abs(w) / pi)) + 10);
    cplxl sum = 0, comp = 0;
    auto add = [&](cplxl term) {
        cplxl y = term - comp;
        cplxl t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (long long n = base; n < N; ++n) add(std::exp(-wl * std::log(static_cast<long double>(n)) - ref));
    const long double Nl = static_cast<long double>(N);
    cplxl Ns = std::exp(-wl * std::log(Nl) - ref);
    add(Ns * Nl / (wl - 1.0L) + Ns / 2.0L);
    const auto& bern = bernoulli_table(2 * 60);
    cplxl rising = wl;
    cplxl npow = Ns / Nl;
    long double fact = 2; // (2k)!
    for (int k = 1; k < 60; ++k) {
        cplxl term = bern[2 * k] / fact * rising * npow;
        add(term);
        if (std::abs(term) < 1e-20L * std::abs(sum)) break;
        rising *= (wl + static_cast<long double>(2 * k - 1)) * (wl + static_cast<long double>(2 * k));
        npow /= Nl * Nl;
        fact *= static_cast<long double>(2 * k + 1) * static_cast<long double>(2 * k + 2);
    }
    ScaledComplex r = ScaledComplex::from({static_cast<double>(sum.real()), static_cast<double>(sum.imag())});
    if (!r.is_zero()) r.log_mod += static_cast<double>(ref);
    return r;
}

ZetaSumApprox zeta_sum_approx(cplx s)
{
    if (!in_L(s)) throw RegionError("zeta_sum_approx: s outside L");
    SaddleFrame f = saddle_frame(s);
    ZetaSumApprox z;
    z.sum = zeta_partial_sum(s, f.ell);
    double m = std::abs(s);
    if (s.imag() > 0) z.log_bound = -s.real() / 2 * std::log(m / (2 * pi * e1));
    else z.log_bound = -default_calibration().c_exp * std::sqrt(m) / std::log(m);
    z.bound = std::exp(z.log_bound);
    return z;
}

ScaledComplex leading_third_quadrant(cplx s, double theta)
{
    if (!in_M(s, theta)) throw RegionError("leading_third_quadrant: s outside M");
    SaddleFrame f = saddle_frame(s);
    double sign = (f.ell % 2 == 0) ? 1.0 : -1.0;
    return ScaledComplex::from_exp(log_saddle_prefactor(f)) * (sign / (2.0 * I) * g_eval(f.q));
}

ScaledComplex half_line_neg_asymptotic(double t)
{
    if (!(t >= 100)) throw DomainError("half_line_neg_asymptotic: requires t >= 100");
    const long double tl = t, pl = pi_l;
    long double log_mod = pl * tl / 2 - std::sqrt(pl * tl / 2) - 0.25L * std::log(tl / (2 * pl)) - 0.5L * std::log(2.0L);
    long double phase = tl / 2 * std::log(tl / (2 * pl)) - tl / 2 + 3 * pl / 8 + pl; // leading minus sign
    return ScaledComplex::from_exp(log_mod, phase);
}

double z_of_t(double t)
{
    if (t < 0) return z_of_t(-t); // Z is even
    cplx s(0.5, t);
    ScaledComplex r;
    if (t < two_pi_e2) r = r_quad_origin(s);
    else r = expand_right(s, 12).value;
    ScaledComplex rot = ScaledComplex::from_exp(0, theta_rs(t));
    return 2 * (rot * r).value().real();
}

cplx zeta_via_rs(cplx s, int K, double theta)
{
    if (!in_wedge9(s, theta)) throw RegionError("zeta_via_rs: s outside the wedge t >= 2 pi, theta <= arg(s-1) <= pi, arg s <= pi - theta");
    ScaledComplex a = expand_right(s, K).value;
    ScaledComplex b = chi(s) * expand_right(1.0 - std::conj(s), K).value.conj();
    return (a + b).value();
}

std::vector<LeftBoundRecord> left_bound_scan(const std::vector<cplx>& grid, Exec exec)
{
    std::vector<LeftBoundRecord> out(grid.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (cplx s : grid) {
        bool cor85 = s.imag() > 0 && s.real() < 0 && 1 - s.real() < std::sqrt(s.imag());
        if (!((in_left_G(s) && s.real() < 0) || cor85 || in_N(s)))
            throw RegionError("left_bound_scan: point outside every left-plane region");
    }
    for_each_index(grid.size(), exec, [&](size_t i) {
        cplx s = grid[i];
        LeftBoundRecord rec{s, {}, nan, nan, nan, 0};
        ExpansionResult e = expand_left(s, 4);
        rec.r = e.value;
        rec.eta_abs = std::abs(e.left_frame.eta);
        ScaledComplex c = chi(s);
        double log_ratio = e.value.log_mod - c.log_mod; // log |R / chi|
        double sigma = s.real(), t = s.imag();
        if (in_left_G(s) && sigma < 0) rec.oldcor_ratio = std::exp(log_ratio) / std::log(std::abs(s));
        if (t > 0 && sigma < 0 && 1 - sigma < std::sqrt(t))
            rec.cor85_ratio = std::exp(log_ratio - (sigma / 2) * std::log(t / (2 * pi)) + std::log(std::abs(sigma)));
        if (in_N(s)) {
            // chi (-1)^m / 2i eta^(s-1) e^(-pi i eta^2) conj(G(conj p))
            const LeftFrame& lf = e.left_frame;
            double sign = (lf.m % 2 == 0) ? 1.0 : -1.0;
            ScaledComplex lead = c * ScaledComplex::from_exp(log_left_prefactor(lf)) *
                                 (sign / (2.0 * I) * std::conj(g_eval(std::conj(lf.p))));
            rec.eleft_deviation = rel_diff(e.value, lead);
        }
        out[i] = rec;
    });
    return out;
}

} // namespace raux
