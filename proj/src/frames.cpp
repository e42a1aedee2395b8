#include "raux/frames.hpp"

#include "raux/errors.hpp"

namespace raux {

namespace {

const cplxl two_pi_i(0, 2 * pi_l);

bool in_open_sector(cplxl z, long double lo, long double hi)
{
    long double a = std::arg(z);
    return a > lo && a < hi;
}

} // namespace

SaddleFrame saddle_frame(cplx s)
{
    if (s.imag() == 0 && s.real() <= 0) throw BranchError("saddle_frame: s on the non-positive real axis");
    cplxl sl(s.real(), s.imag());
    cplxl xi = std::sqrt(sl / two_pi_i);
    if (!in_open_sector(xi, -3 * pi_l / 4, pi_l / 4)) xi = -xi;
    if (!in_open_sector(xi, -3 * pi_l / 4, pi_l / 4)) throw BranchError("saddle_frame: no root in the sector");
    SaddleFrame f;
    f.s = s;
    f.xi = {static_cast<double>(xi.real()), static_cast<double>(xi.imag())};
    f.ell = static_cast<long long>(std::floor(xi.real() - xi.imag()));
    cplxl q = -2.0L * (static_cast<long double>(f.ell) + 0.5L - xi);
    f.q = {static_cast<double>(q.real()), static_cast<double>(q.imag())};
    f.tau = -1.0 / (4 * std::sqrt(pi) * f.xi);
    f.strip = strip_coords(f.q);
    return f;
}

LeftFrame left_frame(cplx s)
{
    if (s.imag() == 0 && s.real() >= 1) throw BranchError("left_frame: 1 - s on the non-positive real axis");
    cplxl sl(s.real(), s.imag());
    cplxl eta = std::sqrt((sl - 1.0L) / two_pi_i);
    if (!in_open_sector(eta, -pi_l / 4, 3 * pi_l / 4)) eta = -eta;
    if (!in_open_sector(eta, -pi_l / 4, 3 * pi_l / 4)) throw BranchError("left_frame: no root in the sector");
    LeftFrame f;
    f.s = s;
    f.eta = {static_cast<double>(eta.real()), static_cast<double>(eta.imag())};
    f.m = static_cast<long long>(std::floor(eta.real() + eta.imag()));
    cplxl p = -2.0L * (static_cast<long double>(f.m) + 0.5L - eta);
    f.p = {static_cast<double>(p.real()), static_cast<double>(p.imag())};
    return f;
}

cplxl log_saddle_prefactor(const SaddleFrame& f)
{
    cplxl s(f.s.real(), f.s.imag());
    cplxl xi = std::sqrt(s / two_pi_i);
    if (!in_open_sector(xi, -3 * pi_l / 4, pi_l / 4)) xi = -xi;
    const cplxl i(0, 1);
    return -s * std::log(xi) + i * pi_l * xi * xi;
}

cplxl log_left_prefactor(const LeftFrame& f)
{
    cplxl s(f.s.real(), f.s.imag());
    cplxl eta = std::sqrt((s - 1.0L) / two_pi_i);
    if (!in_open_sector(eta, -pi_l / 4, 3 * pi_l / 4)) eta = -eta;
    const cplxl i(0, 1);
    return (s - 1.0L) * std::log(eta) - i * pi_l * eta * eta;
}

} // namespace raux
