#include "doctest.h"

#include "raux/errors.hpp"
#include "raux/expansion.hpp"
#include "raux/oracle.hpp"
#include "raux/special.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace raux;

namespace {

const double e1 = std::exp(1.0);

double oracle_err(const ExpansionResult& e, cplx s)
{
    return rel_diff(e.value, r_quad_saddle(s));
}

} // namespace

TEST_CASE("saddle frame examples")
{
    SaddleFrame f = saddle_frame({0, 50});
    CHECK(std::abs(f.xi - 5 / std::sqrt(pi)) < 1e-14);
    CHECK(f.ell == 2);
    CHECK(f.q.real() == doctest::Approx(-2 * (2.5 - 5 / std::sqrt(pi))).epsilon(1e-13));
    CHECK(f.q.real() == doctest::Approx(0.64190).epsilon(1e-5));
    CHECK(std::abs(f.tau + 1.0 / (4 * std::sqrt(pi) * f.xi)) < 1e-15);

    SaddleFrame g = saddle_frame(8 * pi);
    CHECK(std::abs(g.xi - std::polar(2.0, -pi / 4)) < 1e-14);
    CHECK(g.ell == 2);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> rad(2 * pi, 1e5), ang(-pi + 1e-3, pi - 1e-3);
    for (int i = 0; i < 500; ++i) {
        SaddleFrame h = saddle_frame(std::polar(rad(gen), ang(gen)));
        double d = h.q.real() - h.q.imag();
        CHECK(d >= -1);
        CHECK(d < 1);
        CHECK(std::arg(h.xi) > -3 * pi / 4);
        CHECK(std::arg(h.xi) < pi / 4);
    }
    CHECK_THROWS_AS(saddle_frame(-3.0), BranchError);
}

TEST_CASE("left frame and conjugacy with the saddle frame")
{
    LeftFrame a = left_frame({1, -50});
    CHECK(std::abs(a.eta - std::conj(saddle_frame({0, -50}).xi)) < 1e-13);
    CHECK(std::abs(a.eta - cplx(0, 5 / std::sqrt(pi))) < 1e-13);

    // (s - 1) / 2 pi i = 4i gives eta = sqrt2 (1 + i).
    LeftFrame b = left_frame(1 - 8 * pi);
    CHECK(std::abs(b.eta - std::sqrt(2.0) * cplx(1, 1)) < 1e-14);
    CHECK(b.m == 2);

    // eta is real and positive on the vertical ray above 1.
    LeftFrame c = left_frame({1, 12.5 * pi});
    CHECK(std::abs(c.eta - 2.5) < 1e-14);
    CHECK(c.m == 2);

    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> rad(10.0, 1e4), ang(-pi, pi);
    int done = 0;
    while (done < 200) {
        cplx s = std::polar(rad(gen), ang(gen));
        if (std::abs(s.imag()) < 1e-2) continue;
        LeftFrame l = left_frame(s);
        SaddleFrame r = saddle_frame(1.0 - std::conj(s));
        CAPTURE(s);
        CHECK(std::abs(l.eta - std::conj(r.xi)) < 1e-12 * std::max(1.0, std::abs(l.eta)));
        CHECK(std::abs(l.p - std::conj(r.q)) < 1e-12 * std::max(1.0, std::abs(l.eta)));
        CHECK(l.eta.real() + l.eta.imag() >= 0);
        ++done;
    }
}

TEST_CASE("phi boundary solver")
{
    CHECK_THROWS_AS(phi_of_r(2.0), DomainError);
    for (int k = 1; k <= 20; ++k) {
        double r = std::exp(static_cast<double>(k));
        double phi = phi_of_r(r);
        CAPTURE(k);
        CHECK(std::abs(region_u(r, phi)) < 1e-12);
        CHECK(phi >= 0);
        CHECK(phi <= pi / 4);
        double w = 4 * std::log(r) / pi * std::sin(phi);
        CHECK(w > 0.5);
        CHECK(w <= 1);
    }
    double r10 = std::exp(10.0);
    CHECK(std::abs(phi_of_r(r10) - phi_series(r10)) <= 2 * pi * pi * pi / 96 * 1e-4);
    double prev = 0;
    for (double l : {20.0, 40.0, 80.0, 160.0, 320.0}) {
        double w = 4 * l / pi * std::sin(phi_of_r(std::exp(l)));
        CHECK(w > prev);
        CHECK(w < 1);
        prev = w;
    }
    CHECK(prev > 0.999);
}

TEST_CASE("region classification")
{
    CHECK(classify_region({100, 100}).tag == RegionTag::L);
    CHECK(classify_region({-500, -500}, pi / 8).tag == RegionTag::M);
    CHECK(classify_region({-1e4, 10}).tag == RegionTag::N);
    CHECK(classify_region({1, 1}).tag == RegionTag::Outside);
    CHECK(in_delta({0, 10}, pi / 8));
    CHECK_FALSE(in_delta({0, 5}, pi / 8));
    // Exactly one tag, and a lower tag only when the higher sets exclude the point.
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> rad(1.0, 1e5), ang(-pi, pi);
    for (int i = 0; i < 2000; ++i) {
        cplx s = std::polar(rad(gen), ang(gen));
        RegionTag t = classify_region(s).tag;
        CHECK(t == classify_region(s).tag);
        if (in_L(s)) CHECK(t == RegionTag::L);
        else if (in_M(s, kDefaultTheta)) CHECK(t == RegionTag::M);
        else if (in_N(s)) CHECK(t == RegionTag::N);
        else if (in_left_G(s)) CHECK(t == RegionTag::Gset);
    }
}

TEST_CASE("right expansion against the oracle")
{
    cplx s(0.5, 200);
    ExpansionResult e3 = expand_right(s, 3);
    CHECK(oracle_err(e3, s) < 1e-6);
    CHECK(e3.err_estimate >= 0);
    CHECK(e3.k_used == 3);
    CHECK_FALSE(e3.left);

    CHECK(std::abs(expand_right({10, 5}, 4).value.value() - 1.0) <= 0.75);

    CHECK_THROWS_AS(expand_right(s, 0), OrderError);
    CHECK_THROWS_AS(expand_right(s, 21), OrderError);
    CHECK_THROWS_AS(expand_right({1, 1}, 4), RegionError);
}

TEST_CASE("right expansion error rate")
{
    cplx s(0.5, 200);
    double e2 = oracle_err(expand_right(s, 2), s);
    double e3 = oracle_err(expand_right(s, 3), s);
    double ratio = (e2 / e3) / std::abs(saddle_frame(s).xi);
    CAPTURE(e2);
    CAPTURE(e3);
    CHECK(ratio > 0.25);
    CHECK(ratio < 4);
}

TEST_CASE("monotone truncation")
{
    for (cplx s : {cplx(0.5, 300), cplx(100, 300), cplx(20, -400)}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int K = 1; K <= 4; ++K) {
            double e = oracle_err(expand_right(s, K), s);
            CAPTURE(s);
            CAPTURE(K);
            CHECK(e <= 2 * prev);
            prev = e;
        }
    }
}

TEST_CASE("empirical error estimate bounds the observed error")
{
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> rad(100.0, 3000.0), ang(-2.5, 2.5);
    for (int i = 0; i < 20; ++i) {
        cplx s = std::polar(rad(gen), ang(gen));
        for (int K : {2, 4, 6}) {
            ExpansionResult e = expand_right(s, K);
            double err = oracle_err(e, s);
            CAPTURE(s);
            CAPTURE(K);
            CHECK(err <= std::max(e.err_estimate, 1e-13));
        }
    }
}

TEST_CASE("left expansion")
{
    ExpansionResult e = expand_left({-30, 3}, 12);
    CHECK(e.left);
    CHECK(rel_diff(e.value, r_quad_origin({-30, 3})) < 1e-8);
    for (int n = 5; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(expand_left(-2.0 * n, 4).value.is_zero());
    }
    cplx s(-5, 300);
    CHECK(rel_diff(expand_left(s, 4).value, expand_right(s, 4).value) < 1e-7);
    CHECK(rel_diff(expand_left(s, 8).value, expand_right(s, 8).value) < 1e-12);
}

TEST_CASE("automatic dispatch")
{
    CHECK(eval_auto({1, 2}).used == Method::oracle);
    CHECK(eval_auto({3, 100}).used == Method::right);
    CHECK(eval_auto({-800, -1000}).used == Method::right);
    CHECK(eval_auto({-800, -1000}).region.tag == RegionTag::M);
    CHECK(eval_auto({-1000, -800}).used == Method::left);
    CHECK(eval_auto({-100, 20}).used == Method::left);
    AutoResult a = eval_auto({-50, 60}, 8);
    CHECK(rel_diff(a.result.value, r_quad_origin({-50, 60})) < 1e-8);
}

TEST_CASE("zeta sum approximation on L")
{
    for (cplx s : {cplx(40, 400), cplx(400, 4000), cplx(600, -200)}) {
        REQUIRE(in_L(s));
        ZetaSumApprox z = zeta_sum_approx(s);
        SaddleIntegral si = saddle_integral(s);
        CHECK(rel_diff(z.sum, si.zeta_sum) < 1e-13);
        // |R - sum| = |P| |I| / 2 taken straight from the integral.
        double log_err = si.prefactor.log_mod + std::log(std::abs(si.integral) / 2);
        CAPTURE(s);
        CAPTURE(log_err);
        CAPTURE(z.log_bound);
        CHECK(log_err <= z.log_bound + std::log(10.0));
    }
    CHECK_THROWS_AS(zeta_sum_approx({-100, 10}), RegionError);
}

TEST_CASE("third-quadrant leading term")
{
    std::vector<double> devs, xis;
    for (double r : {1000 * std::sqrt(2.0), 4000 * std::sqrt(2.0)}) {
        cplx s = std::polar(r, -3 * pi / 4);
        REQUIRE(in_M(s, kDefaultTheta));
        double d = rel_diff(r_quad_saddle(s), leading_third_quadrant(s));
        double xi = std::abs(saddle_frame(s).xi);
        CHECK(d * xi < 1);
        devs.push_back(d);
        xis.push_back(xi);
    }
    // Four times |s| doubles |xi| and halves the deviation.
    double rate = devs[0] / devs[1];
    CHECK(rate > 2.0 / 3);
    CHECK(rate < 6);
    CHECK_THROWS_AS(leading_third_quadrant({100, 100}), RegionError);
}

TEST_CASE("half-line asymptotic")
{
    CHECK_THROWS_AS(half_line_neg_asymptotic(50), DomainError);
    double t = 1e4;
    ScaledComplex h = half_line_neg_asymptotic(t);
    double lm = pi * t / 2 - std::sqrt(pi * t / 2) - 0.25 * std::log(t / (2 * pi)) - 0.5 * std::log(2.0);
    CHECK(h.log_mod == doctest::Approx(lm).epsilon(1e-14));
    double d = rel_diff(expand_right({0.5, -t}, 4).value, h);
    CHECK(d * std::sqrt(t) < 1);
    CHECK(rel_diff(leading_third_quadrant({0.5, -t}), h) * std::sqrt(t) < 1);
    double d1 = rel_diff(expand_right({0.5, -1e3}, 4).value, half_line_neg_asymptotic(1e3));
    double d4 = rel_diff(expand_right({0.5, -4e3}, 4).value, half_line_neg_asymptotic(4e3));
    CHECK(d1 / d4 > 1);
    CHECK(d1 / d4 < 4);
}

TEST_CASE("Z(t)")
{
    for (double t : {50.0, 100.0, 500.0}) {
        cplx ref = std::exp(cplx(0, theta_rs(t))) * zeta_em({0.5, t});
        CAPTURE(t);
        CHECK(std::abs(ref.imag()) < 1e-10);
        CHECK(std::abs(z_of_t(t) - ref.real()) < 1e-8);
    }
    CHECK(z_of_t(14.13) * z_of_t(14.14) < 0);
    CHECK(z_of_t(-50) == z_of_t(50));
}

TEST_CASE("zeta from both expansions")
{
    cplx a(0.5, 300);
    CHECK(std::abs(zeta_via_rs(a) - zeta_em(a)) < 1e-7);
    cplx b(2, 50);
    CHECK(std::abs(zeta_via_rs(b, 8) - zeta_em(b)) < 1e-9);
    double e1k = std::abs(zeta_via_rs(a, 1) - zeta_em(a));
    double e4k = std::abs(zeta_via_rs(a, 4) - zeta_em(a));
    double xi3 = std::pow(std::abs(saddle_frame(a).xi), 3);
    CHECK(e1k / e4k / xi3 > 0.1);
    CHECK(e1k / e4k / xi3 < 10);
    CHECK_THROWS_AS(zeta_via_rs({0.5, 3}), RegionError);
}

TEST_CASE("reflection identity on the wedge")
{
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> rad(100.0, 2000.0), ang(0.0, pi);
    int done = 0;
    while (done < 30) {
        cplx s = std::polar(rad(gen), ang(gen));
        if (!in_wedge9(s, kDefaultTheta)) continue;
        // Far left zeta overflows a double, so compare in scaled form against chi(s) zeta(1 - s).
        ScaledComplex z = s.real() >= 0.5 ? ScaledComplex::from(zeta_em(s)) : chi(s) * zeta_em(1.0 - s);
        ScaledComplex sum = expand_right(s, 8).value + chi(s) * expand_right(1.0 - std::conj(s), 8).value.conj();
        CAPTURE(s);
        CHECK(rel_diff(sum, z) < 1e-7);
        if (z.log_mod < 700) CHECK(std::abs(zeta_via_rs(s, 8) - zeta_em(s)) < 1e-7 * std::max(1.0, std::abs(zeta_em(s))));
        ++done;
    }
}

TEST_CASE("left-plane bound scans")
{
    std::vector<cplx> grid = {{-std::pow(1e3, 0.4), 1e3}, {-std::pow(1e4, 0.4), 1e4}, {-50, 200}, {-1e4, 5}, {-1.6e5, 5}};
    auto recs = left_bound_scan(grid, Exec::serial);
    CHECK(recs[0].cor85_ratio <= 10);
    CHECK(recs[1].cor85_ratio <= 10);
    CHECK(recs[2].oldcor_ratio <= 10);
    double c3 = recs[3].eleft_deviation * recs[3].eta_abs;
    double c4 = recs[4].eleft_deviation * recs[4].eta_abs;
    CHECK(c3 < 1);
    CHECK(c4 < 1);
    double ratio = recs[3].eleft_deviation / recs[4].eleft_deviation;
    CHECK(ratio >= 2);
    CHECK(ratio <= 8);
    auto par = left_bound_scan(grid, Exec::parallel);
    for (size_t i = 0; i < grid.size(); ++i) CHECK(rel_diff(par[i].r, recs[i].r) == 0);
    CHECK_THROWS_AS(left_bound_scan({{100, 1}}), RegionError);
}

TEST_CASE("calibration constants")
{
    const Calibration& c = default_calibration();
    Calibration back = calibration_from_json(calibration_to_json(c));
    CHECK(back.c_emp == c.c_emp);
    CHECK(back.c_exp == c.c_exp);
    std::ifstream in(RAUX_DATA_DIR "/calibration.json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    Calibration file = calibration_from_json(ss.str());
    for (int K = 1; K <= kCalibratedKmax; ++K) CHECK(file.c_emp[K] == doctest::Approx(c.c_emp[K]).epsilon(1e-12));
    CHECK(file.c_exp == doctest::Approx(c.c_exp).epsilon(1e-12));
    CHECK_THROWS(calibration_from_json("{\"c_emp\": [1, 2], \"c_exp\": 1}"));
}
