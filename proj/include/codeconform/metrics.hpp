#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeconform/errors.hpp"
#include "codeconform/taxonomy.hpp"

namespace codeconform {

// Per-constraint satisfaction bits for one task at one repair round.
struct TaskOutcome {
    std::string task_id;
    int level = 1;
    ConstraintCategory category = ConstraintCategory::InterfaceSpecification;
    std::string model;
    std::vector<int> bits;       // sat(c) per constraint, root-first
    int round = 0;               // k; 0 = initial attempt
    int undecided = 0;           // bits that were forced to 0 because no verdict was decidable
};

// Soft satisfaction: mean of the constraint bits.
inline double ssr(const TaskOutcome& outcome) {
    if (outcome.bits.empty()) throw EmptyConstraintSet("ssr over empty constraint set");
    double sum = 0;
    for (int b : outcome.bits) sum += b ? 1.0 : 0.0;
    return sum / static_cast<double>(outcome.bits.size());
}

// Hard satisfaction: 1 iff every bit is 1.
inline int hsr(const TaskOutcome& outcome) {
    if (outcome.bits.empty()) throw EmptyConstraintSet("hsr over empty constraint set");
    for (int b : outcome.bits)
        if (!b) return 0;
    return 1;
}

// Half-up to one decimal, for percent display. The epsilon keeps values that
// are mathematically on the .5 boundary from flooring down due to binary
// representation (e.g. 33.65 stored as 33.64999...).
inline double round1(double v) { return std::floor(v * 10.0 + 0.5 + 1e-9) / 10.0; }
inline double to_display_percent(double fraction) { return round1(fraction * 100.0); }

inline std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", to_display_percent(fraction));
    return buf;
}

enum class GroupBy { Level, Category, Model };

struct AggregateRow {
    std::string group;
    double mean_ssr = 0.0;   // raw fraction in [0,1]
    double mean_hsr = 0.0;
    std::size_t n = 0;
    std::size_t undecided = 0;
};

// Group means plus the unweighted mean across groups (the "Avg" row).
struct AggregateTable {
    GroupBy group_by = GroupBy::Level;
    std::vector<AggregateRow> rows;
    AggregateRow average;
};

inline AggregateTable aggregate(const std::vector<TaskOutcome>& outcomes, GroupBy group_by) {
    if (group_by != GroupBy::Model) {
        std::string label;
        for (const auto& o : outcomes) {
            if (label.empty()) label = o.model;
            else if (!o.model.empty() && o.model != label)
                throw DomainError("outcomes mix model labels; group by model instead");
        }
    }
    struct Acc {
        double ssr_sum = 0, hsr_sum = 0;
        std::size_t n = 0, undecided = 0;
    };
    std::map<std::string, Acc> groups;  // ordered -> deterministic row order
    auto key_of = [&](const TaskOutcome& o) -> std::string {
        switch (group_by) {
        case GroupBy::Level: {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "L%d", o.level);
            return buf;
        }
        case GroupBy::Category: return category_name(o.category);
        case GroupBy::Model: return o.model;
        }
        return "?";
    };
    for (const auto& o : outcomes) {
        Acc& acc = groups[key_of(o)];
        acc.ssr_sum += ssr(o);
        acc.hsr_sum += hsr(o);
        acc.n += 1;
        acc.undecided += static_cast<std::size_t>(o.undecided);
    }
    AggregateTable table;
    table.group_by = group_by;
    double ssr_mean_sum = 0, hsr_mean_sum = 0;
    for (const auto& [key, acc] : groups) {
        AggregateRow row;
        row.group = key;
        row.mean_ssr = acc.ssr_sum / static_cast<double>(acc.n);
        row.mean_hsr = acc.hsr_sum / static_cast<double>(acc.n);
        row.n = acc.n;
        row.undecided = acc.undecided;
        ssr_mean_sum += row.mean_ssr;
        hsr_mean_sum += row.mean_hsr;
        table.average.n += acc.n;
        table.average.undecided += acc.undecided;
        table.rows.push_back(std::move(row));
    }
    if (!table.rows.empty()) {
        table.average.group = "Avg";
        table.average.mean_ssr = ssr_mean_sum / static_cast<double>(table.rows.size());
        table.average.mean_hsr = hsr_mean_sum / static_cast<double>(table.rows.size());
    }
    return table;
}

// Outcomes for one model across tasks and repair rounds. Rounds of a task
// must form a contiguous prefix 0..k_max.
struct EvaluationRun {
    std::string model;
    std::map<std::string, std::vector<TaskOutcome>> by_task;  // round-indexed

    void add(const TaskOutcome& outcome) {
        auto& rounds = by_task[outcome.task_id];
        if (outcome.round != static_cast<int>(rounds.size()))
            throw DomainError("rounds for task " + outcome.task_id +
                              " must be added contiguously from 0");
        rounds.push_back(outcome);
    }

    std::size_t task_count() const { return by_task.size(); }
};

// Mean hard satisfaction after round k. A task counts as satisfied at k if
// any recorded round j <= min(k, last round) fully satisfied it; sessions
// stop at their first success, so that round stays in force afterwards.
inline double if_repair_at_k(const EvaluationRun& run, int k) {
    if (k < 0) throw DomainError("repair round must be >= 0");
    if (run.by_task.empty()) throw EmptyRun("no tasks in evaluation run");
    std::size_t satisfied = 0;
    for (const auto& [id, rounds] : run.by_task) {
        if (rounds.empty()) throw DomainError("task " + id + " has no rounds");
        int last = static_cast<int>(rounds.size()) - 1;
        int upto = std::min(k, last);
        for (int j = 0; j <= upto; ++j) {
            if (hsr(rounds[j])) {
                ++satisfied;
                break;
            }
        }
    }
    return static_cast<double>(satisfied) / static_cast<double>(run.by_task.size());
}

inline double delta_k(const EvaluationRun& run, int k) {
    if (k < 1) throw DomainError("delta requires round k >= 1");
    return if_repair_at_k(run, k) - if_repair_at_k(run, k - 1);
}

// Micro: task-weighted mean HSR. Macro: unweighted mean of category means.
struct Accuracy {
    double micro = 0.0;
    double macro_ = 0.0;
};

inline Accuracy accuracy(const std::vector<TaskOutcome>& outcomes) {
    if (outcomes.empty()) throw EmptyRun("no outcomes");
    Accuracy acc;
    double sum = 0;
    for (const auto& o : outcomes) sum += hsr(o);
    acc.micro = sum / static_cast<double>(outcomes.size());
    auto table = aggregate(outcomes, GroupBy::Category);
    acc.macro_ = table.average.mean_hsr;
    return acc;
}

// --- report-file shapes -----------------------------------------------------

inline std::string aggregate_to_csv(const AggregateTable& table) {
    std::string out = "group,mean_ssr,mean_hsr,n\n";
    auto emit = [&](const AggregateRow& r) {
        out += r.group + "," + format_percent(r.mean_ssr) + "," + format_percent(r.mean_hsr) +
               "," + std::to_string(r.n) + "\n";
    };
    for (const auto& r : table.rows) emit(r);
    if (!table.rows.empty()) emit(table.average);
    return out;
}

// Flat arrays, one entry per group, for heatmap/radar style plotting.
inline nlohmann::json aggregate_to_figure_json(const AggregateTable& table) {
    nlohmann::json j;
    switch (table.group_by) {
    case GroupBy::Level: j["group_by"] = "level"; break;
    case GroupBy::Category: j["group_by"] = "category"; break;
    case GroupBy::Model: j["group_by"] = "model"; break;
    }
    j["groups"] = nlohmann::json::array();
    j["mean_ssr"] = nlohmann::json::array();
    j["mean_hsr"] = nlohmann::json::array();
    j["n"] = nlohmann::json::array();
    for (const auto& r : table.rows) {
        j["groups"].push_back(r.group);
        j["mean_ssr"].push_back(to_display_percent(r.mean_ssr));
        j["mean_hsr"].push_back(to_display_percent(r.mean_hsr));
        j["n"].push_back(r.n);
    }
    j["avg_ssr"] = to_display_percent(table.average.mean_ssr);
    j["avg_hsr"] = to_display_percent(table.average.mean_hsr);
    return j;
}

struct RepairPoint {
    int k = 0;
    double value = 0.0;                 // IFRepair@k, fraction
    std::optional<double> delta;        // absent at k = 0
};

inline std::vector<RepairPoint> if_repair_series(const EvaluationRun& run, int max_round) {
    std::vector<RepairPoint> series;
    for (int k = 0; k <= max_round; ++k) {
        RepairPoint p;
        p.k = k;
        p.value = if_repair_at_k(run, k);
        if (k > 0) p.delta = p.value - series.back().value;
        series.push_back(p);
    }
    return series;
}

inline std::string if_repair_series_to_csv(const std::vector<RepairPoint>& series) {
    std::string out = "k,ifrepair,delta\n";
    for (const auto& p : series) {
        out += std::to_string(p.k) + "," + format_percent(p.value) + ",";
        if (p.delta) out += format_percent(*p.delta);
        out += "\n";
    }
    return out;
}

} // namespace codeconform
