#include "raux/special.hpp"

#include "raux/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>

namespace raux {

namespace {

using boost::multiprecision::cpp_rational;

constexpr int kBernoulliMax = 160;

const std::vector<cpp_rational>& bernoulli_exact()
{
    static const std::vector<cpp_rational> table = [] {
        // Akiyama-Tanigawa; yields B_1 = +1/2, which is never used.
        std::vector<cpp_rational> b(kBernoulliMax + 1), a(kBernoulliMax + 1);
        for (int m = 0; m <= kBernoulliMax; ++m) {
            a[m] = cpp_rational(1, m + 1);
            for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
            b[m] = a[0];
        }
        return b;
    }();
    return table;
}

// B_{2k} / (2k)! for k = 0..kBernoulliMax/2.
const std::vector<long double>& bernoulli_over_factorial()
{
    static const std::vector<long double> table = [] {
        const auto& b = bernoulli_exact();
        std::vector<long double> out;
        cpp_rational fact = 1;
        for (int n = 0; n <= kBernoulliMax; ++n) {
            if (n > 0) fact *= n;
            if (n % 2 == 0) out.push_back(static_cast<long double>(cpp_rational(b[n] / fact)));
        }
        return out;
    }();
    return table;
}

bool is_nonpositive_integer(cplxl z)
{
    return z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real();
}

cplxl stirling(cplxl z)
{
    const auto& b = bernoulli_table(60);
    constexpr long double half_log_2pi = 0.918938533204672741780329736405617639861L;
    cplxl r = (z - 0.5L) * std::log(z) - z + half_log_2pi;
    cplxl zinv = 1.0L / z, z2inv = zinv * zinv, zp = zinv;
    for (int k = 1; k <= 30; ++k) {
        cplxl term = b[2 * k] / static_cast<long double>(2 * k * (2 * k - 1)) * zp;
        r += term;
        if (std::abs(term) < 1e-21L * std::abs(r)) break;
        zp *= z2inv;
    }
    return r;
}

// log sin(pi z) on the branch consistent with the reflection formula, Im z >= 0.
cplxl log_sin_pi_upper(cplxl z)
{
    const cplxl i(0, 1);
    constexpr long double ln2 = 0.693147180559945309417232121458176568L;
    cplxl e = std::exp(2.0L * pi_l * i * z);
    return i * (pi_l / 2) - ln2 - i * pi_l * z + std::log(1.0L - e);
}

} // namespace

const std::vector<long double>& bernoulli_table(int n)
{
    static const std::vector<long double> table = [] {
        const auto& b = bernoulli_exact();
        std::vector<long double> out;
        for (const auto& x : b) out.push_back(static_cast<long double>(x));
        return out;
    }();
    if (n > kBernoulliMax) throw OrderError("bernoulli_table: order too large");
    return table;
}

cplxl gamma_log_l(cplxl z)
{
    if (is_nonpositive_integer(z)) throw PoleError("gamma_log: pole at non-positive integer");
    if (z.imag() < 0) return std::conj(gamma_log_l(std::conj(z)));
    if (z.real() < 0.5L) {
        constexpr long double log_pi = 1.144729885849400174143427351353058712L;
        return log_pi - log_sin_pi_upper(z) - gamma_log_l(1.0L - z);
    }
    cplxl shift_sum = 0;
    while (std::abs(z) < 15.0L) {
        shift_sum += std::log(z);
        z += 1.0L;
    }
    return stirling(z) - shift_sum;
}

cplx gamma_log(cplx z)
{
    cplxl r = gamma_log_l(cplxl(z.real(), z.imag()));
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

ScaledComplex chi(cplx s)
{
    if (s.imag() == 0 && s.real() >= 1 && std::floor(s.real()) == s.real() &&
        static_cast<long long>(s.real()) % 2 == 1)
        throw PoleError("chi: pole at positive odd integer");
    if (s.imag() == 0 && s.real() <= 0 && std::floor(s.real()) == s.real() &&
        static_cast<long long>(s.real()) % 2 == 0)
        return ScaledComplex::zero();
    constexpr long double log_pi = 1.144729885849400174143427351353058712L;
    cplxl sl(s.real(), s.imag());
    cplxl e = (sl - 0.5L) * log_pi + gamma_log_l((1.0L - sl) / 2.0L) - gamma_log_l(sl / 2.0L);
    return ScaledComplex::from_exp(e);
}

double theta_rs(double t)
{
    constexpr long double log_pi = 1.144729885849400174143427351353058712L;
    long double tl = t;
    cplxl g = gamma_log_l(cplxl(0.25L, tl / 2));
    return static_cast<double>(g.imag() - tl / 2 * log_pi);
}

cplx zeta_em(cplx s)
{
    if (s == cplx(1.0, 0.0)) throw PoleError("zeta_em: pole at s = 1");
    if (s.real() < 0) {
        ScaledComplex c = chi(s);
        if (c.is_zero()) return {0.0, 0.0};
        return (c * zeta_em(1.0 - s)).value();
    }
    const auto& bf = bernoulli_over_factorial();
    cplxl sl(s.real(), s.imag());
    long long N = static_cast<long long>(std::ceil(std::abs(s) / pi)) + 10;
    cplxl sum = 0, comp = 0;
    for (long long n = 1; n < N; ++n) {
        cplxl term = std::exp(-sl * std::log(static_cast<long double>(n)));
        cplxl y = term - comp;
        cplxl t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const long double Nl = static_cast<long double>(N);
    const long double lnN = std::log(Nl);
    cplxl Ns = std::exp(-sl * lnN);
    sum += Ns * Nl / (sl - 1.0L) + Ns / 2.0L;
    // Correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1).
    cplxl rising = sl;
    cplxl npow = Ns / Nl;
    for (int k = 1; k < static_cast<int>(bf.size()); ++k) {
        cplxl term = bf[k] * rising * npow;
        sum += term;
        if (std::abs(term) < 1e-19L * std::abs(sum)) break;
        rising *= (sl + static_cast<long double>(2 * k - 1)) * (sl + static_cast<long double>(2 * k));
        npow /= Nl * Nl;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

} // namespace raux
