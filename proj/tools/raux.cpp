// Command-line front end: evaluation, tables, region queries, zero census and
// the acceptance runner. JSON or CSV on stdout; exit 0 on success, 1 on a
// domain error, 2 on a failed verification, 64 on bad usage.
#include "raux/acceptance.hpp"
#include "raux/coeffs.hpp"
#include "raux/errors.hpp"
#include "raux/expansion.hpp"
#include "raux/gfunc.hpp"
#include "raux/oracle.hpp"
#include "raux/special.hpp"
#include "raux/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace raux;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, size_t n, const char* what)
{
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": cannot read '" + item + "' as a number");
        }
    }
    if (v.size() != n) throw UsageError(std::string(what) + ": expected " + std::to_string(n) + " comma-separated numbers");
    return v;
}

cplx parse_complex(const std::string& text)
{
    if (text.find(',') == std::string::npos) return parse_list(text, 1, "--s")[0];
    auto v = parse_list(text, 2, "--s");
    return {v[0], v[1]};
}

json complex_json(cplx z)
{
    return json::array({z.real(), z.imag()});
}

// Log-modulus and phase always; the plain value while it fits a double.
json scaled_json(const ScaledComplex& v)
{
    json j;
    if (v.is_zero()) {
        j["zero"] = true;
        j["log_mod"] = nullptr;
        j["phase"] = 0.0;
        j["value"] = complex_json(0.0);
        return j;
    }
    j["zero"] = false;
    j["log_mod"] = v.log_mod;
    j["phase"] = v.phase;
    if (v.log_mod < 700) j["value"] = complex_json(v.value());
    else j["value"] = nullptr;
    return j;
}

std::string method_name(Method m)
{
    switch (m) {
    case Method::right: return "right";
    case Method::left: return "left";
    case Method::oracle: return "oracle";
    default: return "auto";
    }
}

struct Config {
    std::string out = "json";
    std::string calibration;
    double theta = kDefaultTheta;
    int kmax = kDefaultKmax;
    double tol = 1e-10;
};

void emit_json(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    for (size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i];
        std::cout << "\n";
    }
}

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// ---- commands --------------------------------------------------------------

int cmd_eval(const Config& cfg, const std::string& s_text, const std::string& method_text, int K)
{
    cplx s = parse_complex(s_text);
    Method m = Method::automatic;
    if (method_text == "right") m = Method::right;
    else if (method_text == "left") m = Method::left;
    else if (method_text == "oracle") m = Method::oracle;
    else if (method_text != "auto") throw UsageError("--method must be auto, right, left or oracle");

    AutoResult r;
    if (K > 0) {
        r = eval_auto(s, K, m);
    } else {
        // Smallest order meeting the precision target, else the largest allowed.
        for (int k = 1; k <= cfg.kmax; ++k) {
            r = eval_auto(s, k, m);
            if (r.used == Method::oracle || r.result.err_estimate <= cfg.tol) break;
        }
    }
    RegionLabel reg = classify_region(s, cfg.theta);
    json j;
    j["s"] = complex_json(s);
    j["method"] = method_name(r.used);
    j["region"] = region_name(reg.tag);
    j["theta"] = reg.theta;
    j["k_used"] = r.used == Method::oracle ? 0 : r.result.k_used;
    j["err_estimate"] = r.result.err_estimate;
    j["R"] = scaled_json(r.result.value);
    if (cfg.out == "csv") {
        cplx v = r.result.value.log_mod < 700 ? r.result.value.value() : cplx(NAN, NAN);
        emit_csv({"re_s", "im_s", "method", "region", "k_used", "log_mod", "phase", "re", "im", "err_estimate"},
                 {{num(s.real()), num(s.imag()), method_name(r.used), region_name(reg.tag),
                   std::to_string(j["k_used"].get<int>()), num(r.result.value.log_mod), num(r.result.value.phase),
                   num(v.real()), num(v.imag()), num(r.result.err_estimate)}});
    } else {
        emit_json(j);
    }
    return 0;
}

int cmd_z(const Config& cfg, std::vector<double> ts, double t0, double t1, double step)
{
    if (ts.empty()) {
        if (!(step > 0) || !(t1 >= t0)) throw UsageError("z: give --t, or --from, --to and a positive --step");
        for (double t = t0; t <= t1 + 1e-12 * std::abs(t1); t += step) ts.push_back(t);
    }
    std::vector<double> zs(ts.size());
    for_each_index(ts.size(), Exec::parallel, [&](size_t i) { zs[i] = z_of_t(ts[i]); });
    if (cfg.out == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (size_t i = 0; i < ts.size(); ++i) rows.push_back({num(ts[i]), num(zs[i])});
        emit_csv({"t", "Z"}, rows);
    } else {
        json arr = json::array();
        for (size_t i = 0; i < ts.size(); ++i) arr.push_back({{"t", ts[i]}, {"Z", zs[i]}});
        emit_json({{"values", arr}});
    }
    return 0;
}

int cmd_coeffs(const Config& cfg, int kmax)
{
    if (kmax < 0 || kmax > 60) throw DomainError("coeffs: --kmax must lie in [0, 60]");
    CoeffTable t = kmax <= default_table().kmax() ? default_table() : build_d_table(kmax);
    std::vector<std::vector<std::string>> rows;
    json arr = json::array();
    for (int k = 0; k <= kmax; ++k)
        for (size_t j = 0; j < t.row(k).size(); ++j) {
            const GaussianRational& d = t.row(k)[j];
            rows.push_back({std::to_string(k), std::to_string(j), rational_str(d.re), rational_str(d.im)});
            arr.push_back({{"k", k}, {"j", j}, {"re", rational_str(d.re)}, {"im", rational_str(d.im)}});
        }
    if (cfg.out == "csv") emit_csv({"k", "j", "re", "im"}, rows);
    else emit_json({{"kmax", kmax}, {"d", arr}});
    return 0;
}

int cmd_region(const Config& cfg, const std::string& s_text)
{
    cplx s = parse_complex(s_text);
    RegionLabel r = classify_region(s, cfg.theta);
    json j = {{"s", complex_json(s)},
              {"tag", region_name(r.tag)},
              {"theta", r.theta},
              {"in_L", in_L(s)},
              {"in_M", in_M(s, cfg.theta)},
              {"in_N", in_N(s)},
              {"in_G", in_left_G(s)},
              {"in_P", in_P(s)},
              {"in_delta", in_delta(s, cfg.theta)},
              {"in_wedge9", in_wedge9(s, cfg.theta)}};
    if (cfg.out == "csv") {
        auto b = [](bool x) { return std::string(x ? "1" : "0"); };
        emit_csv({"re_s", "im_s", "tag", "theta", "in_L", "in_M", "in_N", "in_G", "in_P", "in_delta", "in_wedge9"},
                 {{num(s.real()), num(s.imag()), region_name(r.tag), num(r.theta), b(in_L(s)), b(in_M(s, cfg.theta)),
                   b(in_N(s)), b(in_left_G(s)), b(in_P(s)), b(in_delta(s, cfg.theta)), b(in_wedge9(s, cfg.theta))}});
    } else {
        emit_json(j);
    }
    return 0;
}

int cmd_phi(const Config& cfg, double r)
{
    double phi = phi_of_r(r);
    double ser = phi_series(r);
    double res = region_u(r, phi);
    double w = 4 * std::log(r) / pi * std::sin(phi);
    if (cfg.out == "csv") emit_csv({"r", "phi", "phi_series", "u_residual", "scaled_sin"}, {{num(r), num(phi), num(ser), num(res), num(w)}});
    else emit_json({{"r", r}, {"phi", phi}, {"phi_series", ser}, {"u_residual", res}, {"scaled_sin", w}});
    return 0;
}

int cmd_zeros(const Config& cfg, const std::string& box_text, bool refine, double density)
{
    auto v = parse_list(box_text, 4, "--box");
    ZeroBox b;
    b.x0 = v[0], b.x1 = v[1], b.y0 = v[2], b.y1 = v[3];
    ZeroOptions opt;
    opt.K = std::min(opt.K, cfg.kmax);
    opt.density = density;
    CountResult c = count_zeros_detailed(b, opt);
    ZeroBox found = b;
    found.count = c.count;
    if (refine) found = locate_zeros(b, opt);
    if (cfg.out == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (cplx z : found.zeros) rows.push_back({num(z.real()), num(z.imag())});
        std::cout << "# count " << found.count << " perturbation " << num(c.perturbation) << " convention open\n";
        emit_csv({"re", "im"}, rows);
    } else {
        json zs = json::array();
        for (cplx z : found.zeros) zs.push_back(complex_json(z));
        emit_json({{"box", {b.x0, b.x1, b.y0, b.y1}},
                   {"count", found.count},
                   {"convention", "open box; edges moved outward by 'perturbation' if they met a zero"},
                   {"perturbation", c.perturbation},
                   {"evaluations", c.evaluations},
                   {"refined", refine},
                   {"zeros", zs}});
    }
    return 0;
}

int cmd_xray(const Config& cfg, const std::string& func, const std::string& window, double step)
{
    auto w = parse_list(window, 4, "--window");
    if (!(step > 0)) throw UsageError("xray: --step must be positive");
    if (func != "R" && func != "G") throw UsageError("xray: --func must be R or G");
    std::vector<cplx> pts;
    for (double y = w[2]; y <= w[3] + 1e-12; y += step)
        for (double x = w[0]; x <= w[1] + 1e-12; x += step) pts.push_back({x, y});
    if (pts.size() > 4000000) throw DomainError("xray: grid larger than 4e6 points");
    std::vector<ScaledComplex> vals(pts.size());
    std::vector<std::string> errs(pts.size());
    for_each_index(pts.size(), Exec::parallel, [&](size_t i) {
        try {
            vals[i] = func == "G" ? ScaledComplex::from(g_eval(pts[i])) : r_for_zeros(pts[i]);
        } catch (const std::exception& e) {
            errs[i] = e.what();
        }
    });
    auto sgn = [](double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    std::vector<std::vector<std::string>> rows;
    json arr = json::array();
    for (size_t i = 0; i < pts.size(); ++i) {
        if (!errs[i].empty()) {
            rows.push_back({num(pts[i].real()), num(pts[i].imag()), "", "", ""});
            arr.push_back({{"x", pts[i].real()}, {"y", pts[i].imag()}, {"error", errs[i]}});
            continue;
        }
        const ScaledComplex& v = vals[i];
        int sr = v.is_zero() ? 0 : sgn(std::cos(v.phase)), si = v.is_zero() ? 0 : sgn(std::sin(v.phase));
        rows.push_back({num(pts[i].real()), num(pts[i].imag()), std::to_string(sr), std::to_string(si), num(v.log_mod)});
        arr.push_back({{"x", pts[i].real()}, {"y", pts[i].imag()}, {"sign_re", sr}, {"sign_im", si}, {"log_abs", v.is_zero() ? json(nullptr) : json(v.log_mod)}});
    }
    if (cfg.out == "json") emit_json({{"func", func}, {"grid", arr}});
    else emit_csv({"x", "y", "sign_re", "sign_im", "log_abs"}, rows);
    return 0;
}

int cmd_border(const Config& cfg, double step)
{
    if (!(step > 0)) throw UsageError("border: --step must be positive");
    const double nu_max = 1 / std::sqrt(2.0);
    std::vector<std::pair<double, double>> path;
    auto edge = [&](double m0, double n0, double m1, double n1) {
        double len = std::hypot(m1 - m0, n1 - n0);
        int n = std::max(1, static_cast<int>(std::ceil(len / step)));
        for (int k = 0; k < n; ++k) path.push_back({m0 + (m1 - m0) * k / n, n0 + (n1 - n0) * k / n});
    };
    edge(-2, -nu_max, 2, -nu_max);
    edge(2, -nu_max, 2, nu_max);
    edge(2, nu_max, -2, nu_max);
    edge(-2, nu_max, -2, -nu_max);
    path.push_back(path.front());
    std::vector<std::vector<std::string>> rows;
    json arr = json::array();
    for (auto [m, n] : path) {
        cplx g = g_eval(from_strip(m, n));
        rows.push_back({num(m), num(n), num(g.real()), num(g.imag())});
        arr.push_back({{"mu", m}, {"nu", n}, {"G", complex_json(g)}});
    }
    if (cfg.out == "csv") emit_csv({"mu", "nu", "re", "im"}, rows);
    else emit_json({{"border", arr}});
    return 0;
}

int cmd_oracle(const Config& cfg, const std::string& s_text, const std::string& path)
{
    cplx s = parse_complex(s_text);
    json j = {{"s", complex_json(s)}, {"path", path}};
    if (path == "origin") {
        OriginResult r = r_quad_origin_detailed(s);
        j["R"] = scaled_json(r.value);
        j["alpha"] = r.alpha;
        j["crossing"] = r.crossing;
        j["nodes"] = r.quad.nodes;
        j["step"] = r.quad.step;
        j["half_width"] = r.quad.half_width;
        j["error_estimate"] = r.quad.error_estimate;
        j["condition"] = r.quad.condition;
    } else if (path == "saddle") {
        SaddleIntegral si = saddle_integral(s);
        j["R"] = scaled_json(si.value);
        j["ell"] = si.frame.ell;
        j["xi"] = complex_json(si.frame.xi);
        j["nodes"] = si.quad.nodes;
        j["step"] = si.quad.step;
        j["half_width"] = si.quad.half_width;
        j["error_estimate"] = si.quad.error_estimate;
        j["condition"] = si.quad.condition;
    } else {
        throw UsageError("oracle: --path must be origin or saddle");
    }
    if (cfg.out == "csv") {
        cplx v = j["R"]["value"].is_null() ? cplx(NAN, NAN) : cplx(j["R"]["value"][0], j["R"]["value"][1]);
        emit_csv({"re_s", "im_s", "path", "log_mod", "phase", "re", "im", "nodes", "error_estimate"},
                 {{num(s.real()), num(s.imag()), path, j["R"]["log_mod"].is_null() ? "" : num(j["R"]["log_mod"]),
                   num(j["R"]["phase"]), num(v.real()), num(v.imag()), std::to_string(j["nodes"].get<long long>()),
                   num(j["error_estimate"])}});
    } else {
        emit_json(j);
    }
    return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite)
{
    std::vector<int> ids;
    if (suite == "all") {
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
    } else {
        std::stringstream ss(suite);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                ids.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw UsageError("verify: --suite takes 'all' or a list of criterion numbers");
            }
        }
    }
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    bool all = true;
    auto results = run_acceptance(ids, Exec::parallel, [&](const CriterionResult& r) {
        if (cfg.out == "text") {
            std::printf("criterion %2d %s: %s (%.1f s) %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                        r.detail.c_str());
            std::fflush(stdout);
        }
    });
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"time_limit", r.time_limit}, {"detail", r.detail}});
        rows.push_back({std::to_string(r.id), r.pass ? "pass" : "fail", num(r.seconds), "\"" + r.name + "\""});
    }
    if (cfg.out == "json") emit_json({{"criteria", arr}, {"all_pass", all}});
    else if (cfg.out == "csv") emit_csv({"id", "result", "seconds", "name"}, rows);
    return all ? 0 : kExitVerify;
}

} // namespace

int main(int argc, char** argv)
{
    configure_threads_from_env();
    CLI::App app{"raux: Riemann's auxiliary function R(s) by asymptotic expansions and quadrature"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--out", cfg.out, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--calibration", cfg.calibration, "Calibration JSON replacing the embedded constants");
    app.add_option("--theta", cfg.theta, "Angle parameter of the regions")->check(CLI::Range(1e-9, pi - 1e-9));
    app.add_option("--kmax", cfg.kmax, "Largest expansion order")->check(CLI::Range(1, kDefaultKmax));
    app.add_option("--tol", cfg.tol, "Precision target used to pick the order")->check(CLI::PositiveNumber);

    std::string s_text, method = "auto", box, func = "R", window, suite = "all", path = "saddle";
    int K = 0, kmax_c = 3;
    bool refine = false;
    double r = 0, step = 0.05, density = 20, t0 = 0, t1 = 0, tstep = 0;
    std::vector<double> ts;

    auto* eval = app.add_subcommand("eval", "Evaluate R(s)");
    eval->add_option("--s", s_text, "Point as RE,IM")->required();
    eval->add_option("--method", method, "auto, right, left or oracle");
    eval->add_option("--K", K, "Expansion order (default: smallest meeting --tol)")->check(CLI::Range(1, kDefaultKmax));

    auto* z = app.add_subcommand("z", "Hardy's Z(t) = 2 Re(e^(i theta(t)) R(1/2 + it))");
    z->add_option("--t", ts, "One or more heights");
    z->add_option("--from", t0, "Start of a range");
    z->add_option("--to", t1, "End of a range");
    z->add_option("--step", tstep, "Spacing of the range");

    auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients d^(k)_j");
    coeffs->add_option("--kmax", kmax_c, "Largest k")->required();

    auto* region = app.add_subcommand("region", "Classify s into the validity regions");
    region->add_option("--s", s_text, "Point as RE,IM")->required();

    auto* phi = app.add_subcommand("phi", "Boundary angle phi(r) of region L");
    phi->add_option("--r", r, "Radius, r >= e")->required();

    auto* zeros = app.add_subcommand("zeros", "Count (and locate) zeros of R in a box");
    zeros->add_option("--box", box, "X0,X1,Y0,Y1")->required();
    zeros->add_flag("--refine", refine, "Locate and refine every zero");
    zeros->add_option("--density", density, "Initial boundary samples per unit length")->check(CLI::PositiveNumber);

    auto* xray = app.add_subcommand("xray", "Signs of Re and Im on a grid");
    xray->add_option("--func", func, "R or G");
    xray->add_option("--window", window, "X0,X1,Y0,Y1")->required();
    xray->add_option("--step", step, "Grid spacing")->required();

    auto* border = app.add_subcommand("border", "Image under G of the parallelogram |mu| <= 2, |nu| <= 1/sqrt2");
    border->add_option("--step", step, "Spacing along the boundary");

    auto* oracle = app.add_subcommand("oracle", "R(s) by contour quadrature");
    oracle->add_option("--s", s_text, "Point as RE,IM")->required();
    oracle->add_option("--path", path, "saddle or origin");

    auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
    verify->add_option("--suite", suite, "all or a comma-separated list of criterion numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (!cfg.calibration.empty()) {
            std::ifstream in(cfg.calibration);
            if (!in) throw DomainError("cannot read calibration file " + cfg.calibration);
            std::stringstream ss;
            ss << in.rdbuf();
            set_calibration(calibration_from_json(ss.str()));
        }
        if (cfg.out == "text" && !verify->parsed()) cfg.out = "json";
        if (eval->parsed()) return cmd_eval(cfg, s_text, method, K);
        if (z->parsed()) return cmd_z(cfg, ts, t0, t1, tstep);
        if (coeffs->parsed()) return cmd_coeffs(cfg, kmax_c);
        if (region->parsed()) return cmd_region(cfg, s_text);
        if (phi->parsed()) return cmd_phi(cfg, r);
        if (zeros->parsed()) return cmd_zeros(cfg, box, refine, density);
        if (xray->parsed()) return cmd_xray(cfg, func, window, step);
        if (border->parsed()) return cmd_border(cfg, step == 0.05 ? 0.01 : step);
        if (oracle->parsed()) return cmd_oracle(cfg, s_text, path);
        if (verify->parsed()) return cmd_verify(cfg, suite);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
