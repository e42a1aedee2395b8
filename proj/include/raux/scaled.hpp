#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace raux {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr long double pi_l = std::numbers::pi_v<long double>;

// Wrap an angle into (-pi, pi].
double wrap_phase(long double a);

// Complex number stored as log-magnitude and phase so that factors like
// e^(pi t / 2) never overflow. log_mod = -inf is an exact zero.
struct ScaledComplex {
    double log_mod = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    static ScaledComplex zero() { return {}; }
    static ScaledComplex from(cplx z);
    // exp(re + i im) evaluated with the exponent in extended precision.
    static ScaledComplex from_exp(long double re, long double im);
    static ScaledComplex from_exp(cplxl e) { return from_exp(e.real(), e.imag()); }

    bool is_zero() const { return std::isinf(log_mod) && log_mod < 0; }
    // The plain value; overflows to inf when log_mod > ~709.
    cplx value() const;
    // value() * exp(-shift), useful when comparing against a known scale.
    cplx value_scaled(double shift) const;

    ScaledComplex operator*(const ScaledComplex& o) const;
    ScaledComplex operator/(const ScaledComplex& o) const;
    ScaledComplex operator-() const;
    ScaledComplex conj() const { return is_zero() ? *this : ScaledComplex{log_mod, wrap_phase(-phase)}; }
};

ScaledComplex operator*(const ScaledComplex& a, cplx b);
ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b);
ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b);

// Relative distance |a - b| / |b| computed without leaving log space.
double rel_diff(const ScaledComplex& a, const ScaledComplex& b);

// Compensated sum of scaled terms. The running total is kept relative to the
// largest magnitude seen so far.
class ScaledSum {
public:
    void add(const ScaledComplex& term);
    void add_exp(long double re, long double im) { add(ScaledComplex::from_exp(re, im)); }
    ScaledComplex result() const;
    // Sum of |term| in the same scaled form, for conditioning estimates.
    double log_abs_sum() const;

private:
    void rescale(double new_ref);
    double ref_ = -std::numeric_limits<double>::infinity();
    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
    double abs_ = 0;
};

// Sum_{n=1}^{count} n^(-s) in scaled form, compensated.
ScaledComplex zeta_partial_sum(cplx s, long long count);

} // namespace raux
