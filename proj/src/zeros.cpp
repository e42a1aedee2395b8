#include "raux/zeros.hpp"

#include "raux/errors.hpp"
#include "raux/expansion.hpp"
#include "raux/oracle.hpp"
#include "raux/winding.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

namespace raux {

namespace {

const cplx I(0, 1);

ScaledComplex origin_no_throw(cplx s)
{
    OriginOptions o;
    o.throw_on_conditioning = false;
    return r_quad_origin(s, o);
}

// Saddle quadrature where its frame exists, the origin path otherwise.
ScaledComplex quadrature(cplx s, const ScaledComplex* fallback)
{
    try {
        if (std::abs(s) <= 1e5 && saddle_frame(s).ell >= 0) return r_quad_saddle(s);
    } catch (const DomainError&) {
    }
    if (std::abs(s) <= 500) return origin_no_throw(s);
    if (fallback) return *fallback;
    throw RegionError("r_for_zeros: no evaluator covers this point");
}

bool inside(cplx z, const ZeroBox& b, double tol)
{
    return z.real() >= b.x0 - tol && z.real() <= b.x1 + tol && z.imag() >= b.y0 - tol && z.imag() <= b.y1 + tol;
}

void check_box(const ZeroBox& b)
{
    if (!(b.x1 > b.x0) || !(b.y1 > b.y0)) throw DomainError("zero box: corners must satisfy x0 < x1 and y0 < y1");
}

} // namespace

ScaledComplex r_for_zeros(cplx s, const ZeroOptions& opt)
{
    if (s.imag() == 0 && s.real() <= 0) return origin_no_throw(s);
    if (std::abs(s) < 2 * pi) return quadrature(s, nullptr);
    ExpansionResult e;
    try {
        e = eval_auto(s, opt.K).result;
    } catch (const DomainError&) {
        return quadrature(s, nullptr);
    }
    if (e.err_estimate <= opt.max_rel_err) return e.value;
    return quadrature(s, &e.value);
}

CountResult count_zeros_detailed(const ZeroBox& box, const ZeroOptions& opt)
{
    check_box(box);
    auto f = [&opt](cplx s) { return r_for_zeros(s, opt); };
    const double shifts[] = {0, 0.25, 0.5, 1.0};
    std::exception_ptr last;
    for (double frac : shifts) {
        double d = frac * opt.max_perturbation;
        double x0 = box.x0 - d, x1 = box.x1 + d, y0 = box.y0 - d, y1 = box.y1 + d;
        std::vector<cplx> v = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
        std::vector<int> steps;
        for (size_t e = 0; e < v.size(); ++e) {
            double len = std::abs(v[(e + 1) % v.size()] - v[e]);
            steps.push_back(std::max(opt.min_edge_steps, static_cast<int>(std::ceil(len * opt.density))));
        }
        try {
            WindingResult w = winding_polygon(f, v, steps, {}, opt.exec);
            return {w.winding, d, w.evaluations, w.min_log_abs};
        } catch (const DomainError&) {
            last = std::current_exception();
        }
    }
    try {
        std::rethrow_exception(last);
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("count_zeros: edge meets a zero after every perturbation: ") + e.what());
    }
}

int count_zeros(const ZeroBox& box, const ZeroOptions& opt)
{
    return count_zeros_detailed(box, opt).count;
}

std::vector<CountResult> count_boxes(const std::vector<ZeroBox>& boxes, const ZeroOptions& opt)
{
    std::vector<CountResult> out(boxes.size());
    std::vector<std::exception_ptr> errors(boxes.size());
    ZeroOptions inner = opt;
    // One level of parallelism: boxes side by side, each boundary walked serially.
    if (opt.exec == Exec::parallel && boxes.size() > 1) inner.exec = Exec::serial;
    for_each_index(boxes.size(), opt.exec, [&](size_t i) {
        try {
            out[i] = count_zeros_detailed(boxes[i], inner);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

cplx refine_zero(cplx guess, const ZeroOptions& opt)
{
    auto f = [&opt](cplx s) { return r_for_zeros(s, opt); };
    const double h = 1e-3;
    cplx z = guess;
    for (int it = 0; it < opt.max_iterations; ++it) {
        ScaledComplex f0 = f(z);
        if (f0.is_zero()) return z;
        ScaledComplex fp = f(z + h), fm = f(z - h), fip = f(z + I * h), fim = f(z - I * h);
        double ref = std::max({f0.log_mod, fp.log_mod, fm.log_mod, fip.log_mod, fim.log_mod});
        // Stencil of the first Taylor coefficient, exact through order four.
        cplx d = ((fp.value_scaled(ref) - fm.value_scaled(ref)) - I * (fip.value_scaled(ref) - fim.value_scaled(ref))) /
                 (4 * h);
        if (d == cplx(0, 0)) throw ConvergenceError("refine_zero: vanishing derivative");
        cplx step = f0.value_scaled(ref) / d;
        if (it == 0 && std::abs(step) > opt.capture_radius)
            throw ConvergenceError("refine_zero: guess outside the capture radius of any zero");
        z -= step;
        if (std::abs(step) < opt.step_tol) return z;
    }
    throw ConvergenceError("refine_zero: no convergence");
}

std::vector<ZeroBox> quarter(const ZeroBox& b)
{
    double xm = 0.5 * (b.x0 + b.x1), ym = 0.5 * (b.y0 + b.y1);
    auto make = [](double x0, double x1, double y0, double y1) {
        ZeroBox z;
        z.x0 = x0, z.x1 = x1, z.y0 = y0, z.y1 = y1;
        return z;
    };
    return {make(b.x0, xm, b.y0, ym), make(xm, b.x1, b.y0, ym), make(b.x0, xm, ym, b.y1), make(xm, b.x1, ym, b.y1)};
}

namespace {

void locate(const ZeroBox& b, int count, const ZeroOptions& opt, std::vector<cplx>& out)
{
    if (count <= 0) return;
    double size = std::max(b.x1 - b.x0, b.y1 - b.y0);
    if (count == 1) {
        try {
            cplx z = refine_zero(cplx(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1)), opt);
            if (inside(z, b, opt.max_perturbation)) {
                out.push_back(z);
                return;
            }
        } catch (const ConvergenceError&) {
        }
    }
    if (size < 1e-6) throw ConvergenceError("locate_zeros: zeros not separated at box size 1e-6");
    std::vector<ZeroBox> parts = quarter(b);
    std::vector<CountResult> counts = count_boxes(parts, opt);
    std::vector<std::vector<cplx>> found(parts.size());
    std::vector<std::exception_ptr> errors(parts.size());
    ZeroOptions inner = opt;
    inner.exec = Exec::serial;
    for_each_index(parts.size(), opt.exec, [&](size_t i) {
        try {
            locate(parts[i], counts[i].count, inner, found[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (const auto& f : found) out.insert(out.end(), f.begin(), f.end());
}

} // namespace

ZeroBox locate_zeros(const ZeroBox& box, const ZeroOptions& opt)
{
    ZeroBox out = box;
    out.count = count_zeros(box, opt);
    std::vector<cplx> zs;
    locate(box, out.count, opt, zs);
    std::sort(zs.begin(), zs.end(), [](cplx a, cplx b) { return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real(); });
    // Perturbed edges of neighbouring quarters may both claim a zero.
    for (cplx z : zs)
        if (out.zeros.empty() || std::abs(z - out.zeros.back()) > 1e-8 * std::max(1.0, std::abs(z))) out.zeros.push_back(z);
    return out;
}

} // namespace raux
