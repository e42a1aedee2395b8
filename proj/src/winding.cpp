#include "raux/winding.hpp"

#include "raux/errors.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace raux {

namespace {

struct Sample {
    cplx z;
    ScaledComplex v;
};

std::string point(cplx z)
{
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

// Refinement state for one piece of the path; pieces are independent.
class Walker {
public:
    Walker(const PhaseFunction& f, const WindingOptions& opt) : f_(f), opt_(opt) {}

    Sample eval(cplx z)
    {
        ScaledComplex v = f_(z);
        ++evaluations;
        if (v.is_zero()) throw ConvergenceError("winding: function vanishes on the path at " + point(z));
        min_log_abs = std::min(min_log_abs, v.log_mod);
        return {z, v};
    }

    double segment(const Sample& a, const Sample& b, int depth)
    {
        double d = wrap_phase(static_cast<long double>(b.v.phase) - a.v.phase);
        if (std::abs(d) < opt_.max_step) return d;
        if (depth >= opt_.max_depth || std::abs(b.z - a.z) < opt_.min_length)
            throw ConvergenceError("winding: phase step too large near " + point(a.z));
        Sample m = eval(0.5 * (a.z + b.z));
        return segment(a, m, depth + 1) + segment(m, b, depth + 1);
    }

    long long evaluations = 0;
    double min_log_abs = std::numeric_limits<double>::infinity();

private:
    const PhaseFunction& f_;
    const WindingOptions& opt_;
};

} // namespace

WindingResult winding_polygon(const PhaseFunction& f, const std::vector<cplx>& vertices, int initial_steps,
                              const WindingOptions& opt, Exec exec)
{
    return winding_polygon(f, vertices, std::vector<int>(vertices.size(), initial_steps), opt, exec);
}

WindingResult winding_polygon(const PhaseFunction& f, const std::vector<cplx>& vertices,
                              const std::vector<int>& edge_steps, const WindingOptions& opt, Exec exec)
{
    const size_t n = vertices.size();
    if (n < 2) throw DomainError("winding_polygon: need at least two vertices");
    if (edge_steps.size() != n) throw DomainError("winding_polygon: one step count per edge required");

    std::vector<cplx> pts;
    for (size_t e = 0; e < n; ++e) {
        cplx a = vertices[e], b = vertices[(e + 1) % n];
        int steps = std::max(edge_steps[e], 1);
        for (int k = 0; k < steps; ++k) pts.push_back(a + (b - a) * (static_cast<double>(k) / steps));
    }
    const size_t m = pts.size();

    // Exceptions may not cross an OpenMP region, so each slot keeps its own.
    std::vector<Sample> samples(m);
    std::vector<double> phase(m, 0);
    std::vector<long long> evals(m, 0);
    std::vector<double> min_log(m, std::numeric_limits<double>::infinity());
    std::vector<std::exception_ptr> errors(m);

    for_each_index(m, exec, [&](size_t i) {
        Walker w(f, opt);
        try {
            samples[i] = w.eval(pts[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
        evals[i] += w.evaluations;
        min_log[i] = w.min_log_abs;
    });
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    for_each_index(m, exec, [&](size_t i) {
        Walker w(f, opt);
        try {
            phase[i] = w.segment(samples[i], samples[(i + 1) % m], 0);
        } catch (...) {
            errors[i] = std::current_exception();
        }
        evals[i] += w.evaluations;
        min_log[i] = std::min(min_log[i], w.min_log_abs);
    });
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    WindingResult res;
    res.min_log_abs = std::numeric_limits<double>::infinity();
    long double total = 0;
    for (size_t i = 0; i < m; ++i) {
        total += phase[i];
        res.evaluations += evals[i];
        res.min_log_abs = std::min(res.min_log_abs, min_log[i]);
    }
    res.total_phase = static_cast<double>(total);
    res.winding = static_cast<int>(std::lround(total / (2 * pi)));
    return res;
}

} // namespace raux
