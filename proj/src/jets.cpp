#include "raux/jets.hpp"

#include "raux/errors.hpp"

namespace raux {

namespace {

void require_same_order(const Jet& a, const Jet& b)
{
    if (a.order() != b.order()) throw OrderError("jet operands must share order");
}

Jet div_regular(const Jet& a, const Jet& b)
{
    int n = a.order();
    if (b[0] == cplx(0, 0)) throw PoleError("jet division by series with zero constant term");
    Jet q(n);
    for (int k = 0; k <= n; ++k) {
        cplx s = a[k];
        for (int j = 1; j <= k; ++j) s -= b[j] * q[k - j];
        q[k] = s / b[0];
    }
    return q;
}

} // namespace

Jet::Jet(std::vector<cplx> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty()) c_.resize(1);
}

Jet Jet::constant(int order, cplx v)
{
    Jet j(order);
    j[0] = v;
    return j;
}

Jet Jet::variable(int order, cplx x0)
{
    Jet j(order);
    j[0] = x0;
    if (order >= 1) j[1] = 1;
    return j;
}

cplx Jet::derivative(int k) const
{
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return c_.at(k) * f;
}

cplx Jet::eval(cplx dx) const
{
    cplx r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * dx + *it;
    return r;
}

Jet Jet::truncated(int order) const
{
    if (order > this->order()) throw OrderError("cannot raise jet order by truncation");
    return Jet(std::vector<cplx>(c_.begin(), c_.begin() + order + 1));
}

Jet operator+(const Jet& a, const Jet& b)
{
    require_same_order(a, b);
    Jet r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

Jet operator-(const Jet& a, const Jet& b)
{
    require_same_order(a, b);
    Jet r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

Jet operator*(const Jet& a, const Jet& b)
{
    require_same_order(a, b);
    int n = a.order();
    Jet r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

Jet operator*(const Jet& a, cplx c)
{
    Jet r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] *= c;
    return r;
}

Jet operator*(cplx c, const Jet& a) { return a * c; }

Jet operator+(const Jet& a, cplx c)
{
    Jet r = a;
    r[0] += c;
    return r;
}

Jet jet_div_shifted(const Jet& a, const Jet& b, int shift)
{
    require_same_order(a, b);
    if (shift > a.order()) throw OrderError("shift exceeds jet order");
    int n = a.order() - shift;
    Jet as(n), bs(n);
    for (int k = 0; k <= n; ++k) {
        as[k] = a[k + shift];
        bs[k] = b[k + shift];
    }
    return div_regular(as, bs);
}

Jet operator/(const Jet& a, const Jet& b)
{
    require_same_order(a, b);
    const cplx zero(0, 0);
    if (b[0] != zero) return div_regular(a, b);
    if (a[0] != zero) throw PoleError("jet division: numerator does not vanish where denominator does");
    int shift = 0;
    while (shift <= a.order() && a[shift] == zero && b[shift] == zero) ++shift;
    if (shift > a.order()) throw OrderError("jet division: both operands vanish identically");
    if (b[shift] == zero) throw PoleError("jet division: denominator vanishes to higher order");
    return jet_div_shifted(a, b, shift);
}

Jet jet_exp(const Jet& a)
{
    int n = a.order();
    Jet y(n);
    y[0] = std::exp(a[0]);
    for (int k = 1; k <= n; ++k) {
        cplx s = 0;
        for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * y[k - j];
        y[k] = s / static_cast<double>(k);
    }
    return y;
}

Jet jet_log(const Jet& a)
{
    if (a[0].imag() == 0 && a[0].real() <= 0) throw BranchError("jet log: constant term on the branch cut");
    int n = a.order();
    Jet l(n);
    l[0] = std::log(a[0]);
    for (int k = 1; k <= n; ++k) {
        cplx s = static_cast<double>(k) * a[k];
        for (int j = 1; j < k; ++j) s -= static_cast<double>(j) * l[j] * a[k - j];
        l[k] = s / (static_cast<double>(k) * a[0]);
    }
    return l;
}

Jet jet_compose(const Jet& a, const Jet& b)
{
    require_same_order(a, b);
    int n = a.order();
    Jet inner = b;
    inner[0] = 0;
    // Horner in the shifted inner series.
    Jet r = Jet::constant(n, a[n]);
    for (int k = n - 1; k >= 0; --k) r = r * inner + a[k];
    return r;
}

Jet jet_algebra(const Jet& a, const Jet& b, JetOp op)
{
    switch (op) {
    case JetOp::add: return a + b;
    case JetOp::mul: return a * b;
    case JetOp::div: return a / b;
    case JetOp::exp: return jet_exp(a);
    case JetOp::log: return jet_log(a);
    case JetOp::compose: return jet_compose(a, b);
    }
    throw DomainError("unknown jet operation");
}

} // namespace raux
