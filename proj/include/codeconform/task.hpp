#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeconform/errors.hpp"
#include "codeconform/taxonomy.hpp"

namespace codeconform {

// One benchmark record. A task stores only the constraint added at its own
// level; the full constraint set of a multi-level task is recovered by
// walking the parent chain.
struct TaskInstance {
    std::string task_id;
    int level = 1;
    std::optional<std::string> previous_level_task_id;
    ConstraintCategory category = ConstraintCategory::InterfaceSpecification;
    int constraint_type_id = 0;
    std::string constraint;
    std::string prompt;

    bool operator==(const TaskInstance&) const = default;
};

inline nlohmann::json task_to_json(const TaskInstance& t) {
    nlohmann::json j;
    j["task_id"] = t.task_id;
    j["level"] = t.level;
    if (t.previous_level_task_id)
        j["previous_level_task_id"] = *t.previous_level_task_id;
    else
        j["previous_level_task_id"] = nullptr;
    j["category"] = category_name(t.category);
    j["constraint_type_id"] = t.constraint_type_id;
    j["constraint"] = t.constraint;
    j["prompt"] = t.prompt;
    return j;
}

inline TaskInstance task_from_json(const nlohmann::json& j) {
    TaskInstance t;
    t.task_id = j.at("task_id").get<std::string>();
    t.level = j.at("level").get<int>();
    const auto& prev = j.at("previous_level_task_id");
    if (!prev.is_null()) t.previous_level_task_id = prev.get<std::string>();
    auto cat = category_from_name(j.at("category").get<std::string>());
    if (!cat) throw ValidationError(t.task_id, "unknown category");
    t.category = *cat;
    t.constraint_type_id = j.at("constraint_type_id").get<int>();
    t.constraint = j.at("constraint").get<std::string>();
    t.prompt = j.at("prompt").get<std::string>();
    return t;
}

// Validated collection of tasks; parent links always resolve and levels are
// contiguous along every chain. Immutable by convention after load.
class BenchmarkSet {
public:
    BenchmarkSet() = default;

    static BenchmarkSet from_tasks(const std::vector<TaskInstance>& tasks,
                                   const Taxonomy& tax = Taxonomy::builtin()) {
        BenchmarkSet set;
        for (const auto& t : tasks) {
            if (set.tasks_.count(t.task_id))
                throw ValidationError(t.task_id, "duplicate task_id");
            set.tasks_[t.task_id] = t;
        }
        set.validate(tax);
        return set;
    }

    bool contains(const std::string& id) const { return tasks_.count(id) != 0; }

    const TaskInstance& at(const std::string& id) const {
        auto it = tasks_.find(id);
        if (it == tasks_.end()) throw NotFoundError("no task with id " + id);
        return it->second;
    }

    std::size_t size() const { return tasks_.size(); }
    bool empty() const { return tasks_.empty(); }

    // Tasks in deterministic (level, id) order: every parent precedes its children.
    std::vector<TaskInstance> in_topological_order() const {
        std::vector<TaskInstance> out;
        out.reserve(tasks_.size());
        for (const auto& [id, t] : tasks_) out.push_back(t);
        std::stable_sort(out.begin(), out.end(), [](const TaskInstance& a, const TaskInstance& b) {
            if (a.level != b.level) return a.level < b.level;
            return a.task_id < b.task_id;
        });
        return out;
    }

    bool operator==(const BenchmarkSet& other) const { return tasks_ == other.tasks_; }

private:
    void validate(const Taxonomy& tax) const {
        for (const auto& [id, t] : tasks_) {
            if (t.level < 1) throw ValidationError(id, "level must be >= 1");
            if ((t.level == 1) != !t.previous_level_task_id.has_value())
                throw ValidationError(id, "level 1 iff previous_level_task_id absent");
            if (t.prompt.empty()) throw ValidationError(id, "prompt must be non-empty");
            if (t.constraint.empty()) throw ValidationError(id, "constraint must be non-empty");
            if (!tax.has_type(t.constraint_type_id))
                throw ValidationError(id, "unknown constraint_type_id");
            if (tax.lookup_type(t.constraint_type_id).category != t.category)
                throw ValidationError(id, "category does not match constraint_type_id");
            if (t.previous_level_task_id) {
                auto parent = tasks_.find(*t.previous_level_task_id);
                if (parent == tasks_.end())
                    throw ValidationError(id, "previous_level_task_id does not resolve");
                if (t.level != parent->second.level + 1)
                    throw ValidationError(id, "level must be parent level + 1");
            }
        }
        // Level strictly decreases along parent links, so chains cannot cycle;
        // a defensive walk still bounds the depth.
        for (const auto& [id, t] : tasks_) {
            const TaskInstance* cur = &t;
            std::size_t steps = 0;
            while (cur->previous_level_task_id) {
                if (++steps > tasks_.size()) throw ValidationError(id, "parent chain cycles");
                cur = &tasks_.at(*cur->previous_level_task_id);
            }
        }
    }

    std::map<std::string, TaskInstance> tasks_;
};

// JSON Lines, UTF-8, one task per line. The whole load fails on the first
// offending line.
inline BenchmarkSet load_tasks(const std::string& path,
                               const Taxonomy& tax = Taxonomy::builtin()) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open task file: " + path);
    std::vector<TaskInstance> tasks;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed task record: ") + e.what(), line_no);
        }
        try {
            tasks.push_back(task_from_json(j));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad task fields: ") + e.what(), line_no);
        }
    }
    return BenchmarkSet::from_tasks(tasks, tax);
}

inline void save_tasks(const BenchmarkSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write task file: " + path);
    for (const auto& t : set.in_topological_order())
        out << task_to_json(t).dump() << "\n";
    if (!out) throw IoError("write failed: " + path);
}

// The constraint ladder for a task: element i (0-based) is the constraint
// introduced at level i+1, root first. Length always equals task.level.
inline std::vector<std::pair<int, std::string>> effective_constraints(const TaskInstance& task,
                                                                      const BenchmarkSet& set) {
    std::vector<std::pair<int, std::string>> chain;
    const TaskInstance* cur = &task;
    while (true) {
        chain.emplace_back(cur->constraint_type_id, cur->constraint);
        if (!cur->previous_level_task_id) break;
        if (!set.contains(*cur->previous_level_task_id))
            throw ChainError("broken chain at task " + cur->task_id);
        const TaskInstance* parent = &set.at(*cur->previous_level_task_id);
        if (parent->level != cur->level - 1)
            throw ChainError("level gap above task " + cur->task_id);
        cur = parent;
    }
    std::reverse(chain.begin(), chain.end());
    if (static_cast<int>(chain.size()) != task.level)
        throw ChainError("chain length does not match level for task " + task.task_id);
    return chain;
}

} // namespace codeconform
