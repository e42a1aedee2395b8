#pragma once

#include "raux/jets.hpp"
#include "raux/rational.hpp"

#include <vector>

namespace raux {

// Exact table of d^(k)_j for 0 <= k <= kmax, 0 <= j <= floor(3k/2).
class CoeffTable {
public:
    CoeffTable() = default;
    CoeffTable(int kmax, std::vector<std::vector<GaussianRational>> rows);

    int kmax() const { return kmax_; }
    // Zero outside the stored range.
    GaussianRational entry(int k, int j) const;
    const std::vector<GaussianRational>& row(int k) const { return rows_.at(k); }
    // pi^(-2k) (pi/2i)^j d^(k)_j as a complex double, multiplying G^(3k-2j).
    cplx weight(int k, int j) const { return weights_.at(k).at(j); }

private:
    int kmax_ = -1;
    std::vector<std::vector<GaussianRational>> rows_;
    std::vector<std::vector<cplx>> weights_;
};

struct PkTable {
    int kmax = -1;
    std::vector<RationalPoly> p; // P_k(z), from the Taylor expansion of g(tau, z)
    std::vector<RationalPoly> u; // U_k(x), from the derivative recurrence
};

// One term coeff * pi^pi_power * G^(deriv)(q) of D_k(q).
struct DkTerm {
    int deriv;
    GaussianRational coeff;
    int pi_power;
};

CoeffTable build_d_table(int kmax);
PkTable build_pk(int kmax);
// U_k obtained from P_k by the change of variables x -> x sqrt2 e^(3 pi i/4).
RationalPoly u_from_p(const RationalPoly& p, int k);
std::vector<GaussianRational> hermite_decompose(const RationalPoly& u, int k);
cplx assemble_Dk(const CoeffTable& table, int k, cplx q, const Jet& g_jet);
std::vector<DkTerm> dk_symbolic(const CoeffTable& table, int k);

// Shared immutable tables built on first use.
inline constexpr int kDefaultKmax = 20;
const CoeffTable& default_table();
const PkTable& default_pk();

} // namespace raux
