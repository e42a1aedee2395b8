// Serial against OpenMP timings for the parallel kernels, with a check that
// both paths give the same answer. Thread count follows RAUX_THREADS.
#include "raux/expansion.hpp"
#include "raux/gfunc.hpp"
#include "raux/oracle.hpp"
#include "raux/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace raux;

namespace {

struct Kernel {
    std::string name;
    std::function<std::string(Exec)> run; // returns a digest compared across paths
};

double time_it(const std::function<std::string(Exec)>& f, Exec e, std::string& digest)
{
    auto t0 = std::chrono::steady_clock::now();
    digest = f(e);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Kernel> kernels()
{
    std::vector<Kernel> k;
    k.push_back({"count_zeros", [](Exec e) {
                     ZeroOptions o;
                     o.exec = e;
                     ZeroBox b;
                     b.x0 = 0, b.x1 = 100, b.y0 = -100, b.y1 = 0;
                     return std::to_string(count_zeros(b, o));
                 }});
    k.push_back({"count_boxes", [](Exec e) {
                     ZeroOptions o;
                     o.exec = e;
                     ZeroBox b;
                     b.x0 = 0, b.x1 = 100, b.y0 = -100, b.y1 = 0;
                     int total = 0;
                     for (const auto& c : count_boxes(quarter(b), o)) total += c.count;
                     return std::to_string(total);
                 }});
    k.push_back({"nonvanishing_certificate", [](Exec e) {
                     Certificate c = nonvanishing_certificate(0.01, e);
                     char buf[64];
                     std::snprintf(buf, sizeof buf, "%d %.12g", c.winding, c.min_abs);
                     return std::string(buf);
                 }});
    k.push_back({"inequality_scans", [](Exec e) { return std::string(inequality_scans(e).all_pass() ? "pass" : "fail"); }});
    k.push_back({"left_bound_scan", [](Exec e) {
                     std::vector<cplx> grid;
                     for (int i = 1; i <= 40; ++i)
                         for (int j = 1; j <= 10; ++j) grid.push_back({-25.0 * i, 40.0 * j});
                     double acc = 0;
                     for (const auto& r : left_bound_scan(grid, e))
                         if (!std::isnan(r.eleft_deviation)) acc += r.eleft_deviation;
                     char buf[32];
                     std::snprintf(buf, sizeof buf, "%.12g", acc);
                     return std::string(buf);
                 }});
    return k;
}

} // namespace

int main(int argc, char** argv)
{
    configure_threads_from_env();
    CLI::App app{"Serial and parallel timings of the raux kernels"};
    std::vector<std::string> only;
    bool as_json = false;
    app.add_option("--only", only, "Kernels to run (default: all)");
    app.add_flag("--json", as_json, "JSON instead of a table");
    CLI11_PARSE(app, argc, argv);

    nlohmann::json out = nlohmann::json::array();
    bool agree = true;
    if (!as_json) std::printf("threads %d\n%-26s %10s %10s %8s  %s\n", omp_get_max_threads(), "kernel", "serial s", "parallel s", "speedup", "same result");
    for (const auto& k : kernels()) {
        if (!only.empty() && std::find(only.begin(), only.end(), k.name) == only.end()) continue;
        std::string ds, dp;
        double ts = time_it(k.run, Exec::serial, ds);
        double tp = time_it(k.run, Exec::parallel, dp);
        agree = agree && ds == dp;
        if (as_json)
            out.push_back({{"kernel", k.name}, {"serial_s", ts}, {"parallel_s", tp}, {"same_result", ds == dp}, {"digest", ds}});
        else
            std::printf("%-26s %10.3f %10.3f %8.2f  %s\n", k.name.c_str(), ts, tp, ts / tp, ds == dp ? "yes" : "NO");
    }
    if (as_json) std::cout << nlohmann::json{{"threads", omp_get_max_threads()}, {"kernels", out}}.dump(2) << "\n";
    return agree ? 0 : 1;
}
