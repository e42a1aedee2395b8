#pragma once

#include "raux/scaled.hpp"

#include <vector>

namespace raux {

// Truncated Taylor series sum_{k<=order} c_k x^k with complex coefficients.
class Jet {
public:
    explicit Jet(int order = 0) : c_(order + 1) {}
    explicit Jet(std::vector<cplx> coeffs);
    static Jet constant(int order, cplx v);
    // The identity series x0 + x.
    static Jet variable(int order, cplx x0 = 0);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    cplx& operator[](int k) { return c_[k]; }
    cplx operator[](int k) const { return c_[k]; }
    const std::vector<cplx>& coeffs() const { return c_; }
    // k-th derivative at the expansion point: k! c_k.
    cplx derivative(int k) const;
    // Sum c_k dx^k.
    cplx eval(cplx dx) const;
    Jet truncated(int order) const;

private:
    std::vector<cplx> c_;
};

enum class JetOp { add, mul, div, exp, log, compose };

// Shared entry point. For exp and log the second operand is ignored.
// compose(a, b) treats a as the expansion of f about b[0] and returns f(b(x)).
Jet jet_algebra(const Jet& a, const Jet& b, JetOp op);

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, cplx c);
Jet operator*(cplx c, const Jet& a);
Jet operator+(const Jet& a, cplx c);
// Quotient; when both constant terms vanish the shared factor x is divided
// out and the result has order one less.
Jet operator/(const Jet& a, const Jet& b);
Jet jet_exp(const Jet& a);
Jet jet_log(const Jet& a);
Jet jet_compose(const Jet& a, const Jet& b);
// Drop `shift` leading coefficients from both operands, then divide. Used when
// numerator and denominator are known to vanish to that order.
Jet jet_div_shifted(const Jet& a, const Jet& b, int shift);

} // namespace raux
