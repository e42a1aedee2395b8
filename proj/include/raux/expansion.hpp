#pragma once

#include "raux/frames.hpp"
#include "raux/parallel.hpp"

#include <array>
#include <string>
#include <vector>

namespace raux {

inline constexpr double kDefaultTheta = pi / 8;

// ---- regions -------------------------------------------------------------

enum class RegionTag { L, M, N, Gset, P, DeltaOnly, Outside };

struct RegionLabel {
    RegionTag tag = RegionTag::Outside;
    double theta = kDefaultTheta;
};

std::string region_name(RegionTag tag);

// Root in [0, pi/4] of u(r, .) for r >= e, and its four-term asymptotic series.
double phi_of_r(double r);
double phi_series(double r);

// Membership tests for the individual sets.
bool in_delta(cplx s, double theta);
bool in_L(cplx s);
bool in_M(cplx s, double theta);
bool in_N(cplx s);
bool in_left_G(cplx s);
bool in_P(cplx s);      // xi(s) lies in the set P of the region lemma
bool in_wedge9(cplx s, double theta);

// Most specific tag by the precedence L > M > N > Gset > P > DeltaOnly > Outside.
RegionLabel classify_region(cplx s, double theta = kDefaultTheta);

// ---- calibration ---------------------------------------------------------

inline constexpr int kCalibratedKmax = 8;

// Empirical constants for the error terms, fitted against the quadrature oracle.
struct Calibration {
    // |R - expansion_K| <= c_emp[K] e^(-pi|mu|/(2 sqrt2)) |xi|^(-K-1) |xi^(-s) e^(pi i xi^2)| / 2
    std::array<double, kCalibratedKmax + 1> c_emp{};
    // |R - sum_{n<=ell} n^(-s)| <= exp(-c_exp sqrt|s| / log|s|) on L with t < 0
    double c_exp = 0;
};

// Constants used by the error estimates; the fitted ones unless replaced.
const Calibration& default_calibration();
Calibration embedded_calibration();
// Not thread-safe; call before any evaluation starts.
void set_calibration(const Calibration& c);
// Refit all constants on the fixed calibration grid.
Calibration calibrate(Exec exec = Exec::parallel);
std::string calibration_to_json(const Calibration& c);
Calibration calibration_from_json(const std::string& text);

// ---- expansions ----------------------------------------------------------

struct ExpansionResult {
    ScaledComplex value;
    int k_used = 0;
    double err_estimate = 0;   // empirical bound on the relative error
    bool left = false;         // which frame applies
    SaddleFrame frame;         // frame of s, or of 1 - conj(s) for the left expansion
    LeftFrame left_frame;      // valid when left is true
};

// Sum_{k<=K} D_k(q) / xi^k for a saddle frame.
cplx saddle_series(const SaddleFrame& f, int K);

ExpansionResult expand_right(cplx s, int K);
ExpansionResult expand_left(cplx s, int K);

enum class Method { automatic, right, left, oracle };

struct AutoResult {
    ExpansionResult result;
    Method used = Method::automatic;
    RegionLabel region;
};

// Dispatch: |s| < 2 pi to the oracle; sigma >= 0 and the third-quadrant wedge
// to the right expansion; the remaining left half-plane to the left expansion.
AutoResult eval_auto(cplx s, int K = 4, Method method = Method::automatic);

// ---- named formulas ------------------------------------------------------

struct ZetaSumApprox {
    ScaledComplex sum;
    double bound = 0;
    double log_bound = 0;  // log of bound, finite where bound underflows
};

ZetaSumApprox zeta_sum_approx(cplx s);
ScaledComplex leading_third_quadrant(cplx s, double theta = kDefaultTheta);
ScaledComplex half_line_neg_asymptotic(double t);
double z_of_t(double t);
cplx zeta_via_rs(cplx s, int K = 4, double theta = kDefaultTheta);

// Sum_{n>m} n^(-w), the zeta function minus its first m terms.
ScaledComplex zeta_tail(cplx w, long long m);

struct LeftBoundRecord {
    cplx s;
    ScaledComplex r;           // R(s) from the left expansion
    double oldcor_ratio;       // |R/chi| / log|s|, NaN outside the set G with sigma < 0
    double cor85_ratio;        // |R/chi| / ((t/2pi)^(sigma/2) |sigma|^(-1)), NaN outside its region
    double eleft_deviation;    // |R / (chi * leading) - 1|, NaN outside N
    double eta_abs;
};

std::vector<LeftBoundRecord> left_bound_scan(const std::vector<cplx>& grid, Exec exec = Exec::parallel);

} // namespace raux
