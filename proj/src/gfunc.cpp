#include "raux/gfunc.hpp"

#include "raux/errors.hpp"
#include "raux/winding.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <vector>

namespace raux {

namespace {

const cplx I(0, 1);
const double sqrt2 = std::sqrt(2.0);
const cplx e_pi8 = std::polar(1.0, pi / 8);

// Inside this distance from a half-odd integer G is summed from its Taylor
// series there; outside it the direct quotient loses at most eps/radius.
constexpr double kHalfOddRadius = 0.05;
constexpr int kHalfOddOrder = 22;

// Half-odd integer nearest to q when q is within `radius` of it.
bool near_half_odd(cplx q, double radius, double& h)
{
    h = std::floor(q.real()) + 0.5;
    return std::abs(q - h) < radius;
}

// Numerator and denominator jets at q, order n.
void numden_jets(cplx q, int n, Jet& num, Jet& den)
{
    Jet x = Jet::variable(n, q);
    Jet e2 = jet_exp(x * x * (I * pi / 2.0));
    Jet eh = jet_exp(x * (I * pi / 2.0));
    Jet emh = jet_exp(x * (-I * pi / 2.0));
    Jet cos_half = (eh + emh) * 0.5;
    num = e2 - cos_half * (sqrt2 * e_pi8);
    Jet e1 = jet_exp(x * (I * pi));
    Jet em1 = jet_exp(x * (-I * pi));
    den = (e1 + em1) * 0.5;
}

// Jet of G at a half-odd integer h, where both numerator and cos(pi q) vanish.
Jet jet_at_half_odd(double h, int n)
{
    Jet num, den;
    numden_jets(h, n + 1, num, den);
    return jet_div_shifted(num, den, 1);
}

cplx g_direct(cplx q)
{
    // Multiply through by e^(-|Im pi q|) so neither part overflows.
    double a = std::abs(pi * q.imag());
    cplx num = std::exp(I * pi * q * q / 2.0 - a) -
               sqrt2 * e_pi8 * 0.5 * (std::exp(I * pi * q / 2.0 - a) + std::exp(-I * pi * q / 2.0 - a));
    cplx den = 0.5 * (std::exp(I * pi * q - a) + std::exp(-I * pi * q - a));
    return num / den;
}

} // namespace

StripPoint strip_coords(cplx q)
{
    return {q, (q.real() + q.imag()) / sqrt2, (q.imag() - q.real()) / sqrt2};
}

cplx from_strip(double mu, double nu)
{
    return cplx(mu, nu) * std::polar(1.0, pi / 4);
}

cplx g_eval(cplx q)
{
    double h;
    if (near_half_odd(q, kHalfOddRadius, h)) {
        // One cached jet per half-odd integer and thread.
        thread_local std::unordered_map<long long, Jet> cache;
        long long key = static_cast<long long>(std::floor(h));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, jet_at_half_odd(h, kHalfOddOrder)).first;
        return it->second.eval(q - h);
    }
    return g_direct(q);
}

Jet g_jet(cplx q, int n)
{
    if (n < 0) throw OrderError("g_jet: negative order");
    if (n == 0) return Jet::constant(0, g_eval(q));
    // Rounding in the trapezoid sum is about eps * max|G| / rho^k, so each
    // coefficient takes the radius that minimises that estimate.
    const double rho_max = std::clamp(1.5 + n / 16.0, 2.0, 4.5);
    std::vector<double> radii;
    for (double r : {0.6, 1.2, 2.4}) if (r < rho_max) radii.push_back(r);
    radii.push_back(rho_max);
    const int nodes = std::max(256, 4 * (n + 1));
    std::vector<cplx> twiddle(nodes), vals(nodes);
    for (int j = 0; j < nodes; ++j) twiddle[j] = std::polar(1.0, -2 * pi * j / nodes);
    Jet out(n);
    std::vector<double> best(n + 1, std::numeric_limits<double>::infinity());
    for (double rho : radii) {
        double vmax = 0;
        for (int j = 0; j < nodes; ++j) {
            vals[j] = g_eval(q + rho * std::conj(twiddle[j]));
            vmax = std::max(vmax, std::abs(vals[j]));
        }
        for (int k = 0; k <= n; ++k) {
            double err = vmax * std::pow(rho, -k);
            if (err >= best[k]) continue;
            cplx s = 0;
            for (int j = 0; j < nodes; ++j) s += vals[j] * twiddle[(static_cast<long long>(j) * k) % nodes];
            out[k] = s / static_cast<double>(nodes) * std::pow(rho, -k);
            best[k] = err;
        }
    }
    return out;
}

Jet g_jet_division(cplx q, int n)
{
    if (n < 0) throw OrderError("g_jet_division: negative order");
    double h;
    if (near_half_odd(q, 1e-12, h)) return jet_at_half_odd(h, n);
    Jet num, den;
    numden_jets(q, n, num, den);
    return num / den;
}

cplx g_asymptotic(cplx q)
{
    StripPoint sp = strip_coords(q);
    if (!(sp.mu > 0)) throw DomainError("g_asymptotic: requires mu > 0");
    const double c = pi / (2 * sqrt2);
    return -sqrt2 * e_pi8 * std::exp(-c * cplx(sp.mu + sp.nu, -(sp.mu - sp.nu)));
}

double g_tail_bound(double mu)
{
    return std::sinh(pi * mu / (2 * sqrt2) - pi / 4) / sqrt2 - std::exp(pi / 4) * std::exp(-pi * mu * mu / 2);
}

Certificate nonvanishing_certificate(double grid_step, Exec exec)
{
    if (!(grid_step > 0) || grid_step > 0.01) throw DomainError("nonvanishing_certificate: grid_step must be in (0, 0.01]");
    Certificate c;
    const double mu_max = 2.0, nu_max = 1 / sqrt2;
    std::vector<cplx> vertices = {from_strip(-mu_max, -nu_max), from_strip(mu_max, -nu_max),
                                  from_strip(mu_max, nu_max), from_strip(-mu_max, nu_max)};
    int steps = static_cast<int>(std::ceil(2 * mu_max / grid_step));
    WindingResult w = winding_polygon([](cplx q) { return ScaledComplex::from(g_eval(q)); }, vertices, steps);
    c.winding = w.winding;
    c.total_phase = w.total_phase;

    const int nm = static_cast<int>(std::ceil(2 * mu_max / grid_step)) + 1;
    const int nn = static_cast<int>(std::ceil(2 * nu_max / grid_step)) + 1;
    std::vector<double> row_min(nm);
    std::vector<cplx> row_arg(nm);
    for_each_index(nm, exec, [&](size_t i) {
        double mu = -mu_max + 2 * mu_max * static_cast<double>(i) / (nm - 1);
        double best = std::numeric_limits<double>::infinity();
        cplx where = 0;
        for (int j = 0; j < nn; ++j) {
            double nu = -nu_max + 2 * nu_max * static_cast<double>(j) / (nn - 1);
            cplx q = from_strip(mu, nu);
            double a = std::abs(g_eval(q));
            if (a < best) {
                best = a;
                where = q;
            }
        }
        row_min[i] = best;
        row_arg[i] = where;
    });
    auto it = std::min_element(row_min.begin(), row_min.end());
    c.min_abs = *it;
    c.argmin = row_arg[it - row_min.begin()];
    c.grid_points = static_cast<long long>(nm) * nn;

    double tmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 800; ++i) tmin = std::min(tmin, g_tail_bound(2.0 + 8.0 * i / 800));
    c.tail_bound_min = tmin;
    return c;
}

} // namespace raux
