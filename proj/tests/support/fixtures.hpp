#pragma once

// Builders for synthetic outcome populations with exact group statistics.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "codeconform/metrics.hpp"

namespace testsupport {

// n outcomes at the given level whose mean HSR and mean SSR hit the given
// percents exactly. Bits are distributed as: `full` tasks all-ones, then
// leftover satisfied bits packed greedily into the remaining tasks.
inline std::vector<codeconform::TaskOutcome> outcomes_with_rates(
    int level, int n, double hsr_percent, double ssr_percent, const std::string& model,
    codeconform::ConstraintCategory category, const std::string& id_prefix) {
    using codeconform::TaskOutcome;
    const long long total_bits = std::llround(ssr_percent / 100.0 * n * level);
    const long long full = std::llround(hsr_percent / 100.0 * n);
    long long remaining = total_bits - full * level;
    if (full > n || remaining < 0) throw std::invalid_argument("infeasible rates");
    std::vector<TaskOutcome> out;
    for (int i = 0; i < n; ++i) {
        TaskOutcome o;
        o.task_id = id_prefix + std::to_string(i);
        o.level = level;
        o.category = category;
        o.model = model;
        int ones;
        if (i < full) {
            ones = level;
        } else {
            ones = static_cast<int>(std::min<long long>(remaining, level - 1));
            remaining -= ones;
        }
        for (int b = 0; b < level; ++b) o.bits.push_back(b < ones ? 1 : 0);
        out.push_back(std::move(o));
    }
    if (remaining != 0) throw std::invalid_argument("rates not representable at this n");
    return out;
}

// Sessions realizing a given IFRepair@k series: counts[k] tasks first become
// fully satisfied at round k; the rest never succeed within max_round.
inline codeconform::EvaluationRun run_with_series(const std::vector<double>& percents, int n,
                                                  int constraints_per_task,
                                                  const std::string& model) {
    using codeconform::EvaluationRun;
    using codeconform::TaskOutcome;
    EvaluationRun run;
    run.model = model;
    std::vector<long long> cumulative;
    for (double p : percents) cumulative.push_back(std::llround(p / 100.0 * n));
    int task_no = 0;
    auto add_session = [&](int success_round, int max_round) {
        std::string id = "s" + std::to_string(task_no++);
        for (int k = 0; k <= max_round; ++k) {
            TaskOutcome o;
            o.task_id = id;
            o.level = constraints_per_task;
            o.model = model;
            o.round = k;
            bool satisfied = success_round >= 0 && k == success_round;
            for (int b = 0; b < constraints_per_task; ++b)
                o.bits.push_back(satisfied ? 1 : (b == 0 ? 1 : 0));
            run.add(o);
            if (satisfied) break;  // sessions stop at first success
        }
    };
    const int last_round = static_cast<int>(percents.size()) - 1;
    long long prev = 0;
    for (int k = 0; k <= last_round; ++k) {
        long long now = cumulative[k];
        for (long long i = prev; i < now; ++i) add_session(k, last_round);
        prev = now;
    }
    for (long long i = prev; i < n; ++i) add_session(-1, last_round);
    return run;
}

} // namespace testsupport
