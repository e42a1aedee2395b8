#pragma once

#include "raux/parallel.hpp"
#include "raux/scaled.hpp"

#include <functional>
#include <vector>

namespace raux {

// Phase of a function along a path, accumulated segment by segment with
// bisection until every increment is below max_step.
struct WindingOptions {
    double max_step = pi / 2;
    int max_depth = 40;
    // Segments shorter than this with a phase jump still too large are
    // treated as passing through (or next to) a zero.
    double min_length = 1e-12;
};

struct WindingResult {
    double total_phase = 0; // accumulated change of argument
    int winding = 0;        // total_phase / 2 pi, rounded
    long long evaluations = 0;
    double min_log_abs = 0; // smallest log|f| seen on the path
};

using PhaseFunction = std::function<ScaledComplex(cplx)>;

// Closed polygon through the given vertices (the last vertex joins the first).
// Each edge starts with `initial_steps` equal pieces before refinement. The
// parallel flavour evaluates the initial samples and refines the pieces
// concurrently; the sum is taken in path order, so both flavours agree.
WindingResult winding_polygon(const PhaseFunction& f, const std::vector<cplx>& vertices, int initial_steps,
                              const WindingOptions& opt = {}, Exec exec = Exec::serial);

// As above with a per-edge step count.
WindingResult winding_polygon(const PhaseFunction& f, const std::vector<cplx>& vertices,
                              const std::vector<int>& edge_steps, const WindingOptions& opt = {},
                              Exec exec = Exec::serial);

} // namespace raux
