#pragma once

#include "raux/scaled.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace raux {

using Rational = boost::multiprecision::cpp_rational;

// a + b i with exact rational parts.
struct GaussianRational {
    Rational re = 0, im = 0;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long long r) : re(r) {}

    static GaussianRational i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    cplx to_cplx() const;
    cplxl to_cplxl() const;
    std::string str() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
GaussianRational operator/(GaussianRational a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
GaussianRational gr_pow(GaussianRational base, int n);

std::string rational_str(const Rational& r);

// Polynomial with Gaussian-rational coefficients; index k holds x^k.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<GaussianRational> coeffs);
    static RationalPoly monomial(int degree, GaussianRational c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    GaussianRational coeff(int k) const;
    bool is_real() const;
    // +1 even, -1 odd, 0 neither; the zero polynomial counts as both (returns 2).
    int parity() const;

    RationalPoly derivative() const;
    // p(c x) for a Gaussian-rational c.
    RationalPoly scale_arg(const GaussianRational& c) const;
    cplx eval(cplx x) const;
    GaussianRational eval(const GaussianRational& x) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const GaussianRational& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const GaussianRational& c) { return a *= c; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<GaussianRational> c_;
};

// Physicists' Hermite polynomial H_n with exact integer coefficients.
RationalPoly hermite_poly(int n);

} // namespace raux
