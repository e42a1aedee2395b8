#include "raux/coeffs.hpp"

#include "raux/errors.hpp"

namespace raux {

namespace {

Rational factorial(int n)
{
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Coefficient e_m(z) of tau^m in the exponent of g(tau, z):
// -(i/8) (-1)^(m+1) (2i)^(m+2) z^(m+2) / (m+2).
RationalPoly exponent_term(int m)
{
    GaussianRational c = GaussianRational(0, Rational(-1, 8)) * gr_pow(GaussianRational(0, 2), m + 2) *
                         GaussianRational(Rational(m % 2 == 1 ? 1 : -1, m + 2));
    return RationalPoly::monomial(m + 2, c);
}

} // namespace

CoeffTable::CoeffTable(int kmax, std::vector<std::vector<GaussianRational>> rows)
    : kmax_(kmax), rows_(std::move(rows))
{
    const cplxl half_over_i(0, -0.5L); // 1/(2i)
    weights_.resize(rows_.size());
    for (size_t k = 0; k < rows_.size(); ++k) {
        for (size_t j = 0; j < rows_[k].size(); ++j) {
            // pi^(j - 2k) (1/(2i))^j d
            cplxl w = std::pow(pi_l, static_cast<long double>(static_cast<int>(j) - 2 * static_cast<int>(k))) *
                      std::pow(half_over_i, static_cast<int>(j)) * rows_[k][j].to_cplxl();
            weights_[k].push_back({static_cast<double>(w.real()), static_cast<double>(w.imag())});
        }
    }
}

GaussianRational CoeffTable::entry(int k, int j) const
{
    if (k < 0 || k > kmax_ || j < 0 || j >= static_cast<int>(rows_[k].size())) return {};
    return rows_[k][j];
}

CoeffTable build_d_table(int kmax)
{
    if (kmax < 0) throw DomainError("build_d_table: kmax must be non-negative");
    std::vector<std::vector<GaussianRational>> rows(kmax + 1);
    rows[0] = {GaussianRational(1)};
    auto prev = [&](int k, int j) -> GaussianRational {
        if (j < 0 || j >= static_cast<int>(rows[k].size())) return {};
        return rows[k][j];
    };
    for (int k = 1; k <= kmax; ++k) {
        int jmax = 3 * k / 2;
        rows[k].resize(jmax + 1);
        for (int j = 0; j <= jmax; ++j) {
            if (6 * k == 4 * j) continue;
            GaussianRational rhs = prev(k - 1, j) * GaussianRational(Rational(-1, 2)) - prev(k - 1, j - 1) +
                                   prev(k - 1, j - 2) * GaussianRational(2 * (3 * k - 2 * j) * (3 * k - 2 * j + 1));
            rows[k][j] = rhs / GaussianRational(6 * k - 4 * j);
        }
        if ((3 * k) % 2 == 0) {
            // Closure from U_k(0) = 0 with H_{2m}(0) = (-1)^m (2m)!/m!.
            int h = 3 * k / 2;
            GaussianRational s;
            for (int j = 0; j < h; ++j) {
                Rational f = factorial(3 * k - 2 * j) / factorial(h - j);
                if ((h - j) % 2 == 1) f = -f;
                s += rows[k][j] * GaussianRational(f);
            }
            rows[k][h] = -s;
        }
    }
    return CoeffTable(kmax, std::move(rows));
}

RationalPoly u_from_p(const RationalPoly& p, int k)
{
    // Coefficient of x^n picks up (e^(-i pi/4)/sqrt2)^k (sqrt2 e^(3 pi i/4))^n
    // = 2^((n-k)/2) i^((3n-k)/2); n - k is even for non-zero terms.
    std::vector<GaussianRational> out(p.coeffs().size());
    for (int n = 0; n <= p.degree(); ++n) {
        if (p.coeff(n).is_zero()) continue;
        if ((n - k) % 2 != 0) throw DomainError("u_from_p: parity mismatch");
        int e2 = (n - k) / 2;
        int ei = (((3 * n - k) / 2) % 4 + 4) % 4;
        GaussianRational f = gr_pow(GaussianRational(2), e2) * gr_pow(GaussianRational::i(), ei);
        out[n] = p.coeff(n) * f;
    }
    return RationalPoly(std::move(out));
}

PkTable build_pk(int kmax)
{
    if (kmax < 0) throw DomainError("build_pk: kmax must be non-negative");
    PkTable t;
    t.kmax = kmax;
    std::vector<RationalPoly> e(kmax + 1);
    for (int m = 1; m <= kmax; ++m) e[m] = exponent_term(m);
    // g = exp(E) with E = sum e_m tau^m: k P_k = sum_m m e_m P_{k-m}.
    t.p.push_back(RationalPoly({GaussianRational(1)}));
    for (int k = 1; k <= kmax; ++k) {
        RationalPoly acc;
        for (int m = 1; m <= k; ++m) acc += e[m] * t.p[k - m] * GaussianRational(m);
        t.p.push_back(acc * GaussianRational(Rational(1, k)));
    }
    // U'_k = -2x^2 U_{k-1} + 2x U'_{k-1}, with U_k(0) = 0 for k >= 1.
    const RationalPoly x({GaussianRational(0), GaussianRational(1)});
    t.u.push_back(RationalPoly({GaussianRational(1)}));
    for (int k = 1; k <= kmax; ++k) {
        const RationalPoly& prev = t.u[k - 1];
        RationalPoly du = x * x * prev * GaussianRational(-2) + x * prev.derivative() * GaussianRational(2);
        std::vector<GaussianRational> c(du.coeffs().size() + 1);
        for (int n = 0; n <= du.degree(); ++n) c[n + 1] = du.coeff(n) / GaussianRational(n + 1);
        t.u.push_back(RationalPoly(std::move(c)));
    }
    return t;
}

std::vector<GaussianRational> hermite_decompose(const RationalPoly& u, int k)
{
    if (k < 0) throw DomainError("hermite_decompose: negative k");
    const int top = 3 * k;
    if (u.degree() > top) throw DomainError("hermite_decompose: degree exceeds 3k");
    int par = u.parity();
    if (par != 2 && par != (top % 2 == 0 ? 1 : -1)) throw DomainError("hermite_decompose: parity mismatch");
    std::vector<GaussianRational> d(top / 2 + 1);
    RationalPoly rest = u;
    for (int j = 0; j <= top / 2; ++j) {
        int n = top - 2 * j;
        GaussianRational c = rest.coeff(n) / gr_pow(GaussianRational(2), n);
        d[j] = c;
        if (!c.is_zero()) rest -= hermite_poly(n) * c;
    }
    if (!rest.is_zero()) throw DomainError("hermite_decompose: residual after decomposition");
    return d;
}

cplx assemble_Dk(const CoeffTable& table, int k, cplx /*q*/, const Jet& g_jet)
{
    if (k < 0 || k > table.kmax()) throw OrderError("assemble_Dk: k outside table");
    if (g_jet.order() < 3 * k) throw OrderError("assemble_Dk: jet order too small");
    cplx s = 0;
    for (int j = 3 * k / 2; j >= 0; --j) s += table.weight(k, j) * g_jet.derivative(3 * k - 2 * j);
    return s;
}

std::vector<DkTerm> dk_symbolic(const CoeffTable& table, int k)
{
    std::vector<DkTerm> out;
    const GaussianRational inv_2i(0, Rational(-1, 2));
    for (int j = 0; j <= 3 * k / 2; ++j) {
        GaussianRational c = gr_pow(inv_2i, j) * table.entry(k, j);
        if (c.is_zero()) continue;
        out.push_back({3 * k - 2 * j, c, j - 2 * k});
    }
    return out;
}

const CoeffTable& default_table()
{
    static const CoeffTable t = build_d_table(kDefaultKmax);
    return t;
}

const PkTable& default_pk()
{
    static const PkTable t = build_pk(kDefaultKmax);
    return t;
}

} // namespace raux
