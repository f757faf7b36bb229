#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "codeconform/task.hpp"
#include "support/tmpdir.hpp"

using namespace codeconform;
using testsupport::TmpDir;

namespace {

TaskInstance make_task(const std::string& id, int level, std::optional<std::string> parent,
                       int type_id, const std::string& constraint, const std::string& prompt) {
    TaskInstance t;
    t.task_id = id;
    t.level = level;
    t.previous_level_task_id = std::move(parent);
    t.constraint_type_id = type_id;
    t.category = Taxonomy::builtin().lookup_type(type_id).category;
    t.constraint = constraint;
    t.prompt = prompt;
    return t;
}

// L1 -> L2 ladder mirroring the shape of a two-level record: the base task
// carries a data-structure constraint, the child adds an algorithm one.
std::vector<TaskInstance> two_level_chain() {
    return {
        make_task("ds-001", 1, std::nullopt, 13, "using a stack data structure",
                  "Implement an undo history for a text editor using a stack."),
        make_task("ds-001-L2", 2, "ds-001", 16, "using divide and conquer algorithm",
                  "Implement an undo history for a text editor using a stack, and use a "
                  "divide and conquer algorithm to merge history segments."),
    };
}

} // namespace

TEST_CASE("load_tasks accepts a minimal one-record file") {
    TmpDir dir("taskstore_min");
    auto path = dir.write("tasks.jsonl",
                          R"({"task_id":"t1","level":1,"previous_level_task_id":null,)"
                          R"("category":"Environment","constraint_type_id":7,)"
                          R"("constraint":"using Python.","prompt":"Write a CSV parser."})"
                          "\n");
    auto set = load_tasks(path);
    REQUIRE(set.size() == 1);
    REQUIRE(set.at("t1").level == 1);
    REQUIRE(set.at("t1").category == ConstraintCategory::Environment);
}

TEST_CASE("load_tasks fails with the offending line on malformed JSON") {
    TmpDir dir("taskstore_badjson");
    auto path = dir.write("tasks.jsonl",
                          R"({"task_id":"t1","level":1,"previous_level_task_id":null,)"
                          R"("category":"Environment","constraint_type_id":7,)"
                          R"("constraint":"using Python.","prompt":"p"})"
                          "\n{not json\n");
    try {
        load_tasks(path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 2);
    }
}

TEST_CASE("validation rejects dangling parents and level gaps") {
    auto l1 = make_task("a", 1, std::nullopt, 7, "using Python.", "p");

    SECTION("dangling parent") {
        auto bad = make_task("b", 2, "missing", 7, "using Go.", "p2");
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({l1, bad}), ValidationError);
    }
    SECTION("level gap under an L1 parent") {
        auto bad = make_task("b", 3, "a", 7, "using Go.", "p2");
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({l1, bad}), ValidationError);
    }
    SECTION("level 1 with a parent") {
        auto bad = make_task("b", 1, "a", 7, "using Go.", "p2");
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({l1, bad}), ValidationError);
    }
    SECTION("level >1 without a parent") {
        auto bad = make_task("b", 2, std::nullopt, 7, "using Go.", "p2");
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({bad}), ValidationError);
    }
    SECTION("category mismatching the constraint type") {
        auto bad = l1;
        bad.category = ConstraintCategory::Algorithm;
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({bad}), ValidationError);
    }
    SECTION("empty prompt or constraint") {
        auto bad = l1;
        bad.prompt.clear();
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({bad}), ValidationError);
        bad = l1;
        bad.constraint.clear();
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({bad}), ValidationError);
    }
    SECTION("duplicate ids") {
        REQUIRE_THROWS_AS(BenchmarkSet::from_tasks({l1, l1}), ValidationError);
    }
}

TEST_CASE("effective_constraints walks the ladder root-first") {
    auto set = BenchmarkSet::from_tasks(two_level_chain());

    SECTION("chain of one") {
        auto chain = effective_constraints(set.at("ds-001"), set);
        REQUIRE(chain.size() == 1);
        REQUIRE(chain[0].first == 13);
    }
    SECTION("two-level ladder keeps level order") {
        auto chain = effective_constraints(set.at("ds-001-L2"), set);
        REQUIRE(chain.size() == 2);
        REQUIRE(chain[0].first == 13);
        REQUIRE(chain[1].first == 16);
        REQUIRE(chain[0].second == "using a stack data structure");
    }
    SECTION("four-level ladder") {
        auto tasks = two_level_chain();
        tasks.push_back(make_task("ds-001-L3", 3, "ds-001-L2", 14,
                                  "the list cannot contain more than 50 elements", "p3"));
        tasks.push_back(make_task("ds-001-L4", 4, "ds-001-L3", 19,
                                  "using snake_case for variables", "p4"));
        auto big = BenchmarkSet::from_tasks(tasks);
        auto chain = effective_constraints(big.at("ds-001-L4"), big);
        REQUIRE(chain.size() == 4);
        REQUIRE(chain[0].first == 13);
        REQUIRE(chain[1].first == 16);
        REQUIRE(chain[2].first == 14);
        REQUIRE(chain[3].first == 19);
    }
}

TEST_CASE("save_tasks writes parents before children and round-trips") {
    TmpDir dir("taskstore_save");
    auto set = BenchmarkSet::from_tasks(two_level_chain());
    auto path = dir.file("out.jsonl").string();
    save_tasks(set, path);

    auto content = TmpDir::read(path);
    auto first = content.find("ds-001\"");
    auto second = content.find("ds-001-L2");
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    REQUIRE(first < second);

    auto loaded = load_tasks(path);
    REQUIRE(loaded == set);
}

TEST_CASE("empty set saves to an empty file") {
    TmpDir dir("taskstore_empty");
    auto path = dir.file("empty.jsonl").string();
    save_tasks(BenchmarkSet{}, path);
    REQUIRE(TmpDir::read(path).empty());
    REQUIRE(load_tasks(path).empty());
}

TEST_CASE("round-trip preserves unicode and embedded newlines") {
    TmpDir dir("taskstore_unicode");
    auto t = make_task("u1", 1, std::nullopt, 7, "using Python.",
                       "Trie les caractères – déjà vu: ασδφ, 漢字\nsecond line\ttab");
    auto set = BenchmarkSet::from_tasks({t});
    auto path = dir.file("u.jsonl").string();
    save_tasks(set, path);
    auto loaded = load_tasks(path);
    REQUIRE(loaded == set);
    REQUIRE(loaded.at("u1").prompt == t.prompt);
}

TEST_CASE("random multi-level sets round-trip losslessly") {
    std::mt19937 rng(2024);
    const int rule_like[] = {7, 13, 14, 15, 19, 20, 21, 22, 16, 24, 1, 4};
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<TaskInstance> tasks;
        int chains = 1 + static_cast<int>(rng() % 4);
        for (int c = 0; c < chains; ++c) {
            int depth = 1 + static_cast<int>(rng() % 4);
            std::string parent;
            for (int lvl = 1; lvl <= depth; ++lvl) {
                int type_id = rule_like[rng() % std::size(rule_like)];
                std::string id = "t" + std::to_string(trial) + "_" + std::to_string(c) + "_" +
                                 std::to_string(lvl);
                tasks.push_back(make_task(
                    id, lvl, lvl == 1 ? std::nullopt : std::optional<std::string>(parent),
                    type_id, "constraint " + std::to_string(rng() % 1000),
                    "prompt " + std::to_string(rng() % 1000)));
                parent = id;
            }
        }
        auto set = BenchmarkSet::from_tasks(tasks);
        for (const auto& t : tasks) {
            auto chain = effective_constraints(set.at(t.task_id), set);
            REQUIRE(static_cast<int>(chain.size()) == t.level);
        }
        TmpDir dir("taskstore_rt" + std::to_string(trial));
        auto path = dir.file("rt.jsonl").string();
        save_tasks(set, path);
        REQUIRE(load_tasks(path) == set);
    }
}
