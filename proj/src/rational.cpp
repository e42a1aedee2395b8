#include "raux/rational.hpp"

#include "raux/errors.hpp"

namespace raux {

cplx GaussianRational::to_cplx() const
{
    return {static_cast<double>(re), static_cast<double>(im)};
}

cplxl GaussianRational::to_cplxl() const
{
    return {static_cast<long double>(re), static_cast<long double>(im)};
}

std::string rational_str(const Rational& r)
{
    auto n = boost::multiprecision::numerator(r);
    auto d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

std::string GaussianRational::str() const
{
    if (im == 0) return rational_str(re);
    std::string s;
    if (re != 0) s = rational_str(re) + (im > 0 ? "+" : "");
    return s + rational_str(im) + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    Rational den = o.re * o.re + o.im * o.im;
    if (den == 0) throw DomainError("GaussianRational: division by zero");
    Rational r = (re * o.re + im * o.im) / den;
    Rational i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

bool operator==(const GaussianRational& a, const GaussianRational& b)
{
    return a.re == b.re && a.im == b.im;
}

GaussianRational gr_pow(GaussianRational base, int n)
{
    GaussianRational r = 1;
    if (n < 0) {
        base = GaussianRational(1) / base;
        n = -n;
    }
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

RationalPoly::RationalPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

RationalPoly RationalPoly::monomial(int degree, GaussianRational c)
{
    std::vector<GaussianRational> v(degree + 1);
    v[degree] = std::move(c);
    return RationalPoly(std::move(v));
}

void RationalPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational RationalPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return {};
    return c_[k];
}

bool RationalPoly::is_real() const
{
    for (const auto& c : c_)
        if (!c.is_real()) return false;
    return true;
}

int RationalPoly::parity() const
{
    bool has_even = false, has_odd = false;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        (k % 2 == 0 ? has_even : has_odd) = true;
    }
    if (!has_even && !has_odd) return 2;
    if (has_even && has_odd) return 0;
    return has_even ? 1 : -1;
}

RationalPoly RationalPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long long>(k));
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::scale_arg(const GaussianRational& c) const
{
    std::vector<GaussianRational> out(c_.size());
    GaussianRational p = 1;
    for (size_t k = 0; k < c_.size(); ++k) {
        out[k] = c_[k] * p;
        p *= c;
    }
    return RationalPoly(std::move(out));
}

cplx RationalPoly::eval(cplx x) const
{
    cplx r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_cplx();
    return r;
}

GaussianRational RationalPoly::eval(const GaussianRational& x) const
{
    GaussianRational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const GaussianRational& c)
{
    for (auto& x : c_) x *= c;
    trim();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPoly(std::move(out));
}

RationalPoly hermite_poly(int n)
{
    if (n < 0) throw DomainError("hermite_poly: negative degree");
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    RationalPoly prev, cur({GaussianRational(1)});
    const RationalPoly two_x({GaussianRational(0), GaussianRational(2)});
    for (int k = 0; k < n; ++k) {
        RationalPoly next = two_x * cur - prev * GaussianRational(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace raux
