#include "doctest.h"

#include "raux/coeffs.hpp"
#include "raux/errors.hpp"

#include <map>
#include <tuple>

using namespace raux;

namespace {

GaussianRational q(long long n, long long d) { return GaussianRational(Rational(n, d)); }
GaussianRational qi(long long n, long long d) { return GaussianRational(0, Rational(n, d)); }

} // namespace

TEST_CASE("d table leading entries")
{
    CoeffTable t = build_d_table(4);
    CHECK(t.entry(0, 0) == q(1, 1));
    CHECK(t.entry(1, 0) == q(-1, 12));
    CHECK(t.entry(1, 1) == q(-1, 2));
    const std::vector<GaussianRational> row2 = {q(1, 288), q(1, 24), q(-1, 8), q(-1, 3)};
    const std::vector<GaussianRational> row3 = {q(-1, 10368), q(-1, 576), q(11, 480), q(31, 144), q(-1, 12)};
    const std::vector<GaussianRational> row4 = {q(1, 497664), q(1, 20736), q(-17, 11520), q(-199, 8640),
                                                q(107, 1152), q(2, 3), q(1, 18)};
    CHECK(t.row(2) == row2);
    CHECK(t.row(3) == row3);
    CHECK(t.row(4) == row4);
    CHECK(t.entry(1, 2).is_zero());
    CHECK(t.entry(-1, 0).is_zero());
}

TEST_CASE("d table entries are real rationals")
{
    CoeffTable t = build_d_table(12);
    for (int k = 0; k <= 12; ++k)
        for (const auto& d : t.row(k)) CHECK(d.is_real());
}

TEST_CASE("P_k and U_k low orders")
{
    PkTable t = build_pk(3);
    CHECK(t.p[0] == RationalPoly({q(1, 1)}));
    CHECK(t.p[1] == RationalPoly::monomial(3, q(-1, 3)));
    CHECK(t.p[2] == RationalPoly::monomial(6, q(1, 18)) + RationalPoly::monomial(4, qi(1, 2)));
    CHECK(t.u[1] == RationalPoly::monomial(3, q(-2, 3)));
}

TEST_CASE("hermite_decompose examples")
{
    CHECK(hermite_decompose(RationalPoly({q(1, 1)}), 0) == std::vector<GaussianRational>{q(1, 1)});
    CHECK(hermite_decompose(RationalPoly::monomial(3, q(-2, 3)), 1) ==
          std::vector<GaussianRational>{q(-1, 12), q(-1, 2)});
    CHECK(hermite_decompose(hermite_poly(6), 2) ==
          std::vector<GaussianRational>{q(1, 1), q(0, 1), q(0, 1), q(0, 1)});
    CHECK_THROWS_AS(hermite_decompose(RationalPoly::monomial(2, q(1, 1)), 1), DomainError);
    CHECK_THROWS_AS(hermite_decompose(RationalPoly::monomial(5, q(1, 1)), 1), DomainError);
}

TEST_CASE("two derivations of d^(k)_j coincide for k <= 8")
{
    CoeffTable t = build_d_table(8);
    PkTable pk = build_pk(8);
    for (int k = 0; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(pk.u[k].is_real());
        CHECK(u_from_p(pk.p[k], k) == pk.u[k]);
        CHECK(hermite_decompose(pk.u[k], k) == t.row(k));
        CHECK(hermite_decompose(u_from_p(pk.p[k], k), k) == t.row(k));
    }
}

TEST_CASE("closure entries agree with vanishing P_k(0)")
{
    PkTable pk = build_pk(8);
    for (int k = 1; k <= 8; ++k) CHECK(pk.p[k].coeff(0).is_zero());
}

TEST_CASE("P_k degree and parity")
{
    PkTable pk = build_pk(12);
    for (int k = 0; k <= 12; ++k) {
        CAPTURE(k);
        CHECK(pk.p[k].degree() == 3 * k);
        CHECK(pk.p[k].parity() == (k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("symbolic D_k reproduces the explicit formulas for k <= 3")
{
    CoeffTable t = build_d_table(3);
    using Key = std::tuple<int, int>;
    auto as_map = [](const std::vector<DkTerm>& terms) {
        std::map<Key, GaussianRational> m;
        for (const auto& x : terms) m[{x.deriv, x.pi_power}] = x.coeff;
        return m;
    };
    std::map<Key, GaussianRational> d0 = {{{0, 0}, q(1, 1)}};
    std::map<Key, GaussianRational> d1 = {{{1, -1}, qi(1, 4)}, {{3, -2}, q(-1, 12)}};
    std::map<Key, GaussianRational> d2 = {
        {{0, -1}, qi(-1, 24)}, {{2, -2}, q(1, 32)}, {{4, -3}, qi(-1, 48)}, {{6, -4}, q(1, 288)}};
    std::map<Key, GaussianRational> d3 = {{{1, -2}, q(-1, 192)},
                                          {{3, -3}, qi(31, 1152)},
                                          {{5, -4}, q(-11, 1920)},
                                          {{7, -5}, qi(1, 1152)},
                                          {{9, -6}, q(-1, 10368)}};
    CHECK(as_map(dk_symbolic(t, 0)) == d0);
    CHECK(as_map(dk_symbolic(t, 1)) == d1);
    CHECK(as_map(dk_symbolic(t, 2)) == d2);
    CHECK(as_map(dk_symbolic(t, 3)) == d3);
}

TEST_CASE("assemble_Dk structural identity for k = 1")
{
    const CoeffTable& t = default_table();
    Jet j({cplx(0.3, -0.1), cplx(1.2, 0.4), cplx(-0.7, 0.2), cplx(0.5, 0.9)});
    cplx g1 = j.derivative(1), g3 = j.derivative(3);
    cplx expected = 0.25 * (cplx(0, 1) / pi * g1 - g3 / (3 * pi * pi));
    CHECK(std::abs(assemble_Dk(t, 1, 0.0, j) - expected) < 1e-15);
    CHECK(std::abs(assemble_Dk(t, 0, 0.0, j) - j[0]) < 1e-16);
    CHECK_THROWS_AS(assemble_Dk(t, 2, 0.0, j), OrderError);
}

TEST_CASE("default tables reach kmax 20")
{
    CHECK(default_table().kmax() == kDefaultKmax);
    CHECK(default_pk().p.size() == static_cast<size_t>(kDefaultKmax + 1));
    CHECK(hermite_decompose(default_pk().u[20], 20) == default_table().row(20));
}
