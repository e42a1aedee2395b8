#include "doctest.h"

#include "raux/errors.hpp"
#include "raux/expansion.hpp"
#include "raux/zeros.hpp"

#include <numeric>

using namespace raux;

TEST_CASE("trivial zero at -20")
{
    ZeroBox b{-21, -19, -1, 1};
    CHECK(count_zeros(b) == 1);
    ZeroBox found = locate_zeros(b);
    REQUIRE(found.zeros.size() == 1);
    CHECK(std::abs(found.zeros[0] - cplx(-20, 0)) < 1e-8);
    CHECK(std::abs(refine_zero(-20.1) - cplx(-20, 0)) < 1e-9);
}

TEST_CASE("no zeros in L with sigma >= 2")
{
    ZeroBox b{2, 100, 10, 100};
    CHECK(count_zeros(b) == 0);
    CHECK_THROWS_AS(refine_zero({50, 50}), ConvergenceError);
}

TEST_CASE("fourth-quadrant zeros near the origin")
{
    ZeroBox b{0, 100, -100, 0};
    CountResult c = count_zeros_detailed(b);
    CHECK(c.count == 34);
    CHECK(c.perturbation == 0);

    std::vector<CountResult> parts = count_boxes(quarter(b));
    int sum = std::accumulate(parts.begin(), parts.end(), 0, [](int a, const CountResult& r) { return a + r.count; });
    CHECK(sum == c.count);

    ZeroOptions serial;
    serial.exec = Exec::serial;
    CHECK(count_zeros_detailed(b, serial).count == c.count);
    CHECK(count_zeros_detailed(b, serial).evaluations == c.evaluations);

    ZeroBox found = locate_zeros(b);
    CHECK(found.count == 34);
    CHECK(found.zeros.size() == 34);
    for (cplx z : found.zeros) {
        CAPTURE(z);
        CHECK(z.real() > 0);
        CHECK(z.imag() < 0);
        CHECK(r_for_zeros(z).log_mod < std::log(1e-8));
        // The zero line stays outside L.
        CHECK_FALSE(in_L(z));
        // Each zero is a stable fixed point of the refinement.
        CHECK(std::abs(refine_zero(z) - z) < 1e-9);
    }
}

TEST_CASE("box validation")
{
    CHECK_THROWS_AS(count_zeros(ZeroBox{1, 0, 0, 1}), DomainError);
}
