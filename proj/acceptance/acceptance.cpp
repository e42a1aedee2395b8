// Runs the acceptance criteria and prints one line per criterion.
#include "raux/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv)
{
    raux::configure_threads_from_env();
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (int i = 1; i <= raux::kCriterionCount; ++i) ids.push_back(i);
    bool all = true;
    raux::run_acceptance(ids, raux::Exec::parallel, [&](const raux::CriterionResult& r) {
        all = all && r.pass;
        std::printf("criterion %2d %s: %s (%.1f s) %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    });
    return all ? 0 : 2;
}
