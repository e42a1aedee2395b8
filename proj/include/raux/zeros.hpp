#pragma once

#include "raux/parallel.hpp"
#include "raux/scaled.hpp"

#include <vector>

namespace raux {

// Axis-parallel box [x0, x1] x [y0, y1] with its zero count and located zeros.
struct ZeroBox {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    int count = 0;
    std::vector<cplx> zeros;
};

struct ZeroOptions {
    int K = 8;                   // expansion order
    double max_rel_err = 1e-3;   // expansion estimates above this fall back to quadrature
    double density = 20;         // initial samples per unit of edge length
    int min_edge_steps = 8;
    double max_perturbation = 1e-3;
    double capture_radius = 1.0; // largest first Newton step accepted by refine_zero
    double step_tol = 1e-10;
    int max_iterations = 50;
    Exec exec = Exec::parallel;
};

// R(s) for zero work: quadrature near the origin, the region's expansion
// elsewhere, and quadrature again wherever the expansion estimate is poor.
ScaledComplex r_for_zeros(cplx s, const ZeroOptions& opt = {});

struct CountResult {
    int count = 0;
    double perturbation = 0;  // outward shift of every edge that was needed
    long long evaluations = 0;
    double min_log_abs = 0;
};

// Winding number of R around the box boundary (open-box convention: an edge
// that meets a zero is moved outward by up to max_perturbation).
CountResult count_zeros_detailed(const ZeroBox& box, const ZeroOptions& opt = {});
int count_zeros(const ZeroBox& box, const ZeroOptions& opt = {});

// Counts for many boxes; boxes run in parallel when exec is parallel.
std::vector<CountResult> count_boxes(const std::vector<ZeroBox>& boxes, const ZeroOptions& opt = {});

// Newton iteration on R with the derivative from a four-point stencil.
cplx refine_zero(cplx guess, const ZeroOptions& opt = {});

// Count, then split until every zero is isolated and refined. The result
// holds the count and the zeros sorted by imaginary then real part.
ZeroBox locate_zeros(const ZeroBox& box, const ZeroOptions& opt = {});

// The four quarters of a box, in the order lower-left, lower-right, upper-left, upper-right.
std::vector<ZeroBox> quarter(const ZeroBox& box);

} // namespace raux
