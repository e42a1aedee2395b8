#include "raux/scaled.hpp"

namespace raux {

namespace {

void kahan(double& sum, double& comp, double x)
{
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

} // namespace

double wrap_phase(long double a)
{
    constexpr long double two_pi = 2 * pi_l;
    if (a > -pi_l && a <= pi_l) return static_cast<double>(a);
    long double r = std::fmod(a, two_pi);
    if (r > pi_l) r -= two_pi;
    if (r <= -pi_l) r += two_pi;
    return static_cast<double>(r);
}

ScaledComplex ScaledComplex::from(cplx z)
{
    if (z == cplx(0.0, 0.0)) return zero();
    return {std::log(std::abs(z)), std::arg(z)};
}

ScaledComplex ScaledComplex::from_exp(long double re, long double im)
{
    return {static_cast<double>(re), wrap_phase(im)};
}

cplx ScaledComplex::value() const
{
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_mod), phase);
}

cplx ScaledComplex::value_scaled(double shift) const
{
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_mod - shift), phase);
}

ScaledComplex ScaledComplex::operator*(const ScaledComplex& o) const
{
    if (is_zero() || o.is_zero()) return zero();
    return {log_mod + o.log_mod, wrap_phase(static_cast<long double>(phase) + o.phase)};
}

ScaledComplex ScaledComplex::operator/(const ScaledComplex& o) const
{
    if (is_zero()) return zero();
    return {log_mod - o.log_mod, wrap_phase(static_cast<long double>(phase) - o.phase)};
}

ScaledComplex ScaledComplex::operator-() const
{
    if (is_zero()) return *this;
    return {log_mod, wrap_phase(static_cast<long double>(phase) + pi_l)};
}

ScaledComplex operator*(const ScaledComplex& a, cplx b)
{
    return a * ScaledComplex::from(b);
}

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    double ref = std::max(a.log_mod, b.log_mod);
    cplx v = a.value_scaled(ref) + b.value_scaled(ref);
    ScaledComplex r = ScaledComplex::from(v);
    if (!r.is_zero()) r.log_mod += ref;
    return r;
}

ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b)
{
    return a + (-b);
}

double rel_diff(const ScaledComplex& a, const ScaledComplex& b)
{
    if (b.is_zero()) return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    cplx av = a.value_scaled(b.log_mod);
    cplx bv = b.value_scaled(b.log_mod);
    return std::abs(av - bv) / std::abs(bv);
}

void ScaledSum::rescale(double new_ref)
{
    if (std::isinf(ref_)) {
        ref_ = new_ref;
        return;
    }
    double f = std::exp(ref_ - new_ref);
    re_ *= f;
    im_ *= f;
    cre_ *= f;
    cim_ *= f;
    abs_ *= f;
    ref_ = new_ref;
}

void ScaledSum::add(const ScaledComplex& term)
{
    if (term.is_zero()) return;
    if (term.log_mod > ref_) rescale(term.log_mod);
    cplx v = term.value_scaled(ref_);
    kahan(re_, cre_, v.real());
    kahan(im_, cim_, v.imag());
    abs_ += std::abs(v);
}

ScaledComplex ScaledSum::result() const
{
    if (std::isinf(ref_)) return ScaledComplex::zero();
    ScaledComplex r = ScaledComplex::from({re_, im_});
    if (!r.is_zero()) r.log_mod += ref_;
    return r;
}

double ScaledSum::log_abs_sum() const
{
    if (std::isinf(ref_) || abs_ == 0) return -std::numeric_limits<double>::infinity();
    return ref_ + std::log(abs_);
}

ScaledComplex zeta_partial_sum(cplx s, long long count)
{
    ScaledSum sum;
    const long double sr = s.real(), si = s.imag();
    for (long long n = 1; n <= count; ++n) {
        long double ln = std::log(static_cast<long double>(n));
        sum.add_exp(-sr * ln, -si * ln);
    }
    return sum.result();
}

} // namespace raux
