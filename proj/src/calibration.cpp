#include "raux/expansion.hpp"

#include "raux/errors.hpp"
#include "raux/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace raux {

namespace {

const cplx I(0, 1);

// Fitted by calibrate() and written to data/calibration.json; index is K.
constexpr std::array<double, kCalibratedKmax + 1> kCEmp = {
    0.0, 0.1187274311522015, 0.022884576404310634,
    0.011437480361138378, 0.004478097881163762, 0.0015680696819224931,
    0.0007446129642423351, 0.00041592884452085416, 0.00016003123034339427,
};
constexpr double kCExp = 21.30271865488025;

constexpr double kSafety = 2.0;

} // namespace

Calibration embedded_calibration()
{
    Calibration c;
    c.c_emp = kCEmp;
    c.c_exp = kCExp;
    return c;
}

namespace {

Calibration& active()
{
    static Calibration c = embedded_calibration();
    return c;
}

} // namespace

const Calibration& default_calibration()
{
    return active();
}

void set_calibration(const Calibration& c)
{
    active() = c;
}

Calibration calibrate(Exec exec)
{
    Calibration out;
    // Rays and radii disjoint from the acceptance checks.
    const std::vector<double> rays = {pi / 4, 1.2, -0.3, -2.0, 2.3};
    const std::vector<double> radii = {150, 300, 600, 1200};
    std::vector<cplx> pts;
    for (double a : rays)
        for (double r : radii) pts.push_back(std::polar(r, a));
    std::vector<std::array<double, kCalibratedKmax + 1>> ratios(pts.size());
    for_each_index(pts.size(), exec, [&](size_t i) {
        cplx s = pts[i];
        // R = sum + ((-1)^ell / 2i) P I, so the expansion error is |P|/2 |I - series|.
        SaddleIntegral si = saddle_integral(s);
        const SaddleFrame& f = si.frame;
        ratios[i].fill(0);
        for (int K = 1; K <= kCalibratedKmax; ++K) {
            double err = std::abs(si.integral - saddle_series(f, K));
            // Differences below the oracle's own accuracy carry no information.
            if (err < 1e-12 * std::abs(si.integral)) continue;
            ratios[i][K] = err * std::exp(pi * std::abs(f.strip.mu) / (2 * std::sqrt(2.0))) *
                           std::pow(std::abs(f.xi), K + 1);
        }
    });
    out.c_emp.fill(0);
    for (int K = 1; K <= kCalibratedKmax; ++K) {
        double m = 0;
        for (const auto& r : ratios) m = std::max(m, r[K]);
        // Orders whose errors all sit at the oracle floor inherit the previous constant.
        out.c_emp[K] = m > 0 ? kSafety * m : out.c_emp[K - 1];
    }

    // Exponential bound on L for t < 0.
    std::vector<cplx> lpts;
    for (double a : {-0.5, -0.7})
        for (double r : {300.0, 600.0, 1200.0, 2400.0, 4800.0}) {
            cplx s = std::polar(r, a);
            if (in_L(s)) lpts.push_back(s);
        }
    std::vector<double> cvals(lpts.size(), std::numeric_limits<double>::infinity());
    for_each_index(lpts.size(), exec, [&](size_t i) {
        cplx s = lpts[i];
        SaddleIntegral si = saddle_integral(s);
        // |R - sum| = |P| |I| / 2 without cancellation against the sum.
        double log_err = si.prefactor.log_mod + std::log(std::abs(si.integral) / 2);
        double m = std::abs(s);
        cvals[i] = -log_err * std::log(m) / std::sqrt(m);
    });
    double cmin = *std::min_element(cvals.begin(), cvals.end());
    out.c_exp = std::isfinite(cmin) ? cmin / kSafety : kCExp;
    return out;
}

std::string calibration_to_json(const Calibration& c)
{
    nlohmann::json j;
    j["c_emp"] = std::vector<double>(c.c_emp.begin(), c.c_emp.end());
    j["c_exp"] = c.c_exp;
    return j.dump(2);
}

Calibration calibration_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    Calibration c;
    auto v = j.at("c_emp").get<std::vector<double>>();
    if (v.size() != c.c_emp.size()) throw DomainError("calibration: c_emp has the wrong length");
    std::copy(v.begin(), v.end(), c.c_emp.begin());
    c.c_exp = j.at("c_exp").get<double>();
    return c;
}

} // namespace raux
