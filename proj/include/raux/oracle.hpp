#pragma once

#include "raux/frames.hpp"
#include "raux/parallel.hpp"

#include <limits>
#include <string>
#include <vector>

namespace raux {

enum class QuadScheme { gauss_like, trapezoid_exp };

// How a quadrature was carried out, reported next to its value.
struct QuadratureSpec {
    double half_width = 0;      // extent of the parameter range actually used
    long long nodes = 0;        // integrand evaluations in the final rule
    QuadScheme scheme = QuadScheme::trapezoid_exp;
    double step = 0;            // final trapezoid step
    double error_estimate = 0;  // relative change on the last step halving
    double condition = 1;       // sum |f| / |sum f|
};

// R(s) = sum_{n<=ell} n^(-s) + ((-1)^ell / 2i) * prefactor * integral, with the
// integral normalised by xi^(-s) e^(pi i xi^2) when |xi| is not tiny.
struct SaddleIntegral {
    SaddleFrame frame;
    bool normalized = true;
    cplx integral = 0;
    ScaledComplex prefactor;
    ScaledComplex zeta_sum;
    ScaledComplex value;
    QuadratureSpec quad;
};

// Trapezoid rule along the line through ell + 1/2 with direction e^(i pi/4),
// which passes through the saddle region of the integrand.
SaddleIntegral saddle_integral(cplx s);
ScaledComplex r_quad_saddle(cplx s);

struct OriginOptions {
    double rel_tol = 1e-10;
    bool throw_on_conditioning = true;
    // Direction of the line through 1/2; NaN picks the best line of a fixed set.
    double alpha = std::numeric_limits<double>::quiet_NaN();
    long long max_nodes = 4'000'000;
};

struct OriginResult {
    ScaledComplex value;
    double alpha = 0;
    double crossing = 0.5; // where the line meets (0, 1)
    QuadratureSpec quad;
};

// Riemann's integral along a straight line crossing (0, 1) downwards. Limited to |s| <= 500 where the line can be kept well conditioned.
OriginResult r_quad_origin_detailed(cplx s, const OriginOptions& opt = {});
ScaledComplex r_quad_origin(cplx s, const OriginOptions& opt = {});

// D_0(q) and D_k(q) by quadrature along the line through 0 with direction e^(i pi/4).
cplx d0_quad(cplx q);
cplx dk_quad(cplx q, int k);

// g(tau, z) = exp(-(i/8 tau^2) log(1 + 2 i tau z) - z/(4 tau) + i z^2/4).
cplx g_tau_z(cplx tau, cplx z);
// g(tau, z) - sum_{k<=K} P_k(z) tau^k.
cplx rg_remainder_direct(cplx tau, cplx z, int K);
// The same remainder from its line-integral representation on Re zeta = 1/2.
cplx rg_remainder_line(cplx tau, cplx z, int K);

// Appendix integrals and functions.
double appendix_I(double a, double lambda);
double appendix_J(double a, double b, double c, double lambda);
double appendix_f(double r, double phi);
// u(r, phi) from the region lemma and its phi-derivative.
double region_u(double r, double phi);
double region_u_dphi(double r, double phi);

struct ScanLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ScanReport {
    std::vector<ScanLine> lines;
    bool all_pass() const;
};

ScanReport inequality_scans(Exec exec = Exec::parallel);

} // namespace raux
