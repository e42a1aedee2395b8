#include "doctest.h"

#include "raux/errors.hpp"
#include "raux/special.hpp"

#include <random>

using namespace raux;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

struct Pair {
    cplx in, out;
};

// Reference values from mpmath (loggamma, zeta) at 30 digits.
const Pair loggamma_refs[] = {
    {{3.7, 0}, {1.4280723266653881, 0}},
    {{0.2, 0.3}, {0.87875946100138169, -1.0630528824564223}},
    {{-3.3, 2.1}, {-6.3891746803951293, -9.0316295283370778}},
    {{-10.5, 0.1}, {-15.19537338715198, -34.317693901989891}},
    {{2, -50}, {-71.752643338387273, -147.93568073873507}},
    {{0.5, 1000}, {-1569.877388261692, 5907.7553206488064}},
    {{-200.25, -30}, {-954.7339294967411, 471.50196354864022}},
    {{100000, 100000}, {1007405.0783746975, 1164489.3291652666}},
    {{0.25, 1000000}, {-1570798.8617340028, 12815510.165265203}},
};

const Pair zeta_refs[] = {
    {{0.5, 100}, {2.6926198856813239, -0.020386029602598162}},
    {{2, 50}, {0.77395093315669072, 0.12594471582633421}},
    {{0.5, 300}, {0.47745567187848253, 0.60790213327955311}},
    {{-3.5, 2}, {-0.0035609799649190723, 0.042622537314776408}},
    {{3, -1000}, {0.96616475103459265, 0.077949065695269881}},
    {{0.7, 5000}, {0.54508187822794207, -0.25179380383314476}},
    {{0.1, 0.2}, {-0.55061348419218648, -0.21920767201345071}},
    {{0.5, 10000}, {-0.33937380263883443, -0.037091505973206033}},
};

} // namespace

TEST_CASE("gamma_log trivial values")
{
    CHECK(std::abs(gamma_log({1, 0})) < 1e-15);
    CHECK(std::abs(gamma_log({0.5, 0}) - cplx(0.5 * std::log(pi), 0)) < 1e-15);
    CHECK(std::abs(gamma_log({5, 0}) - cplx(std::log(24.0), 0)) < 1e-14);
}

TEST_CASE("gamma_log matches reference values")
{
    for (const auto& r : loggamma_refs) {
        CAPTURE(r.in);
        CHECK(rel(gamma_log(r.in), r.out) < 1e-13);
    }
}

TEST_CASE("gamma_log rejects poles")
{
    CHECK_THROWS_AS(gamma_log({0, 0}), PoleError);
    CHECK_THROWS_AS(gamma_log({-3, 0}), PoleError);
}

TEST_CASE("gamma_log recurrence")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-30, 30);
    for (int i = 0; i < 100; ++i) {
        cplx z(u(rng), u(rng));
        cplx d = gamma_log(z + 1.0) - gamma_log(z) - std::log(z);
        // Equal up to a multiple of 2 pi i.
        double k = std::round(d.imag() / (2 * pi));
        CHECK(std::abs(d - cplx(0, 2 * pi * k)) < 1e-11);
    }
}

TEST_CASE("chi special values")
{
    CHECK(std::abs(chi({0.5, 0}).value() - cplx(1, 0)) < 1e-14);
    cplx m1 = chi({-1, 0}).value();
    CHECK(std::abs(m1 - cplx(-1 / (2 * pi * pi), 0)) < 1e-15);
    CHECK(std::abs(chi({2, 0}).value() - cplx(-2 * pi * pi, 0)) < 1e-12);
    for (int n = 0; n <= 10; ++n) CHECK(chi({-2.0 * n, 0}).is_zero());
    CHECK_THROWS_AS(chi({1, 0}), PoleError);
    CHECK_THROWS_AS(chi({5, 0}), PoleError);
}

TEST_CASE("chi matches reference values")
{
    struct R {
        cplx s;
        double lm, ph;
    };
    const R refs[] = {
        {{0.5, 14}, 0, -2.7172879063472868},
        {{2, 3}, 1.0561362092651951, 0.069642002171375589},
        {{-5, -7}, 1.0752363558709304, -2.7223782861681611},
        {{30, -40}, -56.928349573585798, -1.9369178662742392},
        {{0.5, 300}, 0, 1.8100238839652132},
    };
    for (const auto& r : refs) {
        ScaledComplex c = chi(r.s);
        CAPTURE(r.s);
        CHECK(std::abs(c.log_mod - r.lm) < 1e-12);
        CHECK(std::abs(wrap_phase(c.phase - r.ph)) < 1e-11);
    }
}

TEST_CASE("chi functional equation on random points")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-35, 35);
    int tested = 0;
    while (tested < 100) {
        cplx s(u(rng), u(rng));
        if (std::abs(s) > 50) continue;
        bool near_special = false;
        for (int n = -60; n <= 60; ++n)
            if (std::abs(s - cplx(n, 0)) < 0.1) near_special = true;
        if (near_special) continue;
        ScaledComplex p = chi(s) * chi(1.0 - s);
        CHECK(std::abs(p.value() - cplx(1, 0)) < 1e-12);
        ++tested;
    }
}

TEST_CASE("theta_rs")
{
    CHECK(theta_rs(0) == doctest::Approx(0).epsilon(1e-15));
    CHECK(std::abs(theta_rs(100) - 87.972165231787216) < 1e-11);
    CHECK(std::abs(theta_rs(1) - -1.7675479528122904) < 1e-13);
    CHECK(std::abs(theta_rs(-5) + theta_rs(5)) < 1e-14);
    double t = 1000;
    double asym = t / 2 * std::log(t / (2 * pi)) - t / 2 - pi / 8;
    CHECK(std::abs(theta_rs(t) - asym) < 1e-4);
    CHECK(std::abs(theta_rs(t) - 2034.5464280380315) < 1e-10);
}

TEST_CASE("zeta_em trivial values")
{
    CHECK(rel(zeta_em({2, 0}), {pi * pi / 6, 0}) < 1e-15);
    CHECK(rel(zeta_em({0, 0}), {-0.5, 0}) < 1e-15);
    CHECK(rel(zeta_em({-1, 0}), {-1.0 / 12, 0}) < 1e-14);
    CHECK_THROWS_AS(zeta_em({1, 0}), PoleError);
}

TEST_CASE("zeta_em matches reference values")
{
    for (const auto& r : zeta_refs) {
        CAPTURE(r.in);
        CHECK(rel(zeta_em(r.in), r.out) < 1e-12);
    }
    CHECK(std::abs(zeta_em({0.5, 14.134725141734693})) < 1e-13);
}

TEST_CASE("zeta_em Schwarz reflection")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int i = 0; i < 50; ++i) {
        cplx s(u(rng), 10 * u(rng));
        CHECK(rel(std::conj(zeta_em(std::conj(s))), zeta_em(s)) < 1e-13);
    }
}
