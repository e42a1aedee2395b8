#pragma once

#include "raux/parallel.hpp"

#include <functional>
#include <string>
#include <vector>

namespace raux {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double time_limit = 0;
};

inline constexpr int kCriterionCount = 11;

// Runs the listed acceptance criteria (1..11) in order. A criterion passes
// only when its checks hold and it finishes within its time limit. The
// callback, if given, sees each result as soon as it is ready.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, Exec exec = Exec::parallel,
                                            const std::function<void(const CriterionResult&)>& on_done = {});

} // namespace raux
