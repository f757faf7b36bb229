#pragma once

#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeconform/errors.hpp"
#include "codeconform/text.hpp"

namespace codeconform {

enum class ConstraintCategory {
    InterfaceSpecification,
    Environment,
    DataStructure,
    Algorithm,
    CodingStyle,
    CodeQuality,
    Scenario,
    CodeContext,
    Exemplar,
};

inline constexpr ConstraintCategory all_categories[] = {
    ConstraintCategory::InterfaceSpecification,
    ConstraintCategory::Environment,
    ConstraintCategory::DataStructure,
    ConstraintCategory::Algorithm,
    ConstraintCategory::CodingStyle,
    ConstraintCategory::CodeQuality,
    ConstraintCategory::Scenario,
    ConstraintCategory::CodeContext,
    ConstraintCategory::Exemplar,
};

inline std::string category_name(ConstraintCategory c) {
    switch (c) {
    case ConstraintCategory::InterfaceSpecification: return "InterfaceSpecification";
    case ConstraintCategory::Environment: return "Environment";
    case ConstraintCategory::DataStructure: return "DataStructure";
    case ConstraintCategory::Algorithm: return "Algorithm";
    case ConstraintCategory::CodingStyle: return "CodingStyle";
    case ConstraintCategory::CodeQuality: return "CodeQuality";
    case ConstraintCategory::Scenario: return "Scenario";
    case ConstraintCategory::CodeContext: return "CodeContext";
    case ConstraintCategory::Exemplar: return "Exemplar";
    }
    return "?";
}

// Accepts the canonical token plus spaced/underscored variants.
inline std::optional<ConstraintCategory> category_from_name(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (ConstraintCategory c : all_categories) {
        std::string canon;
        for (char ch : category_name(c))
            canon.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        if (key == canon) return c;
    }
    return std::nullopt;
}

enum class ConstraintTyping { Explicit, Implicit };
enum class EvalMode { Rule, Judge };

inline std::string eval_mode_name(EvalMode m) { return m == EvalMode::Rule ? "Rule" : "Judge"; }
inline std::string typing_name(ConstraintTyping t) {
    return t == ConstraintTyping::Explicit ? "Explicit" : "Implicit";
}

struct ConstraintTypeDescriptor {
    int id = 0;
    ConstraintCategory category = ConstraintCategory::InterfaceSpecification;
    ConstraintTyping typing = ConstraintTyping::Explicit;
    EvalMode eval_mode = EvalMode::Rule;
    std::string name;
    std::string example_phrase;
};

namespace detail {

inline const std::array<ConstraintTypeDescriptor, 27>& builtin_taxonomy() {
    using C = ConstraintCategory;
    using T = ConstraintTyping;
    using E = EvalMode;
    static const std::array<ConstraintTypeDescriptor, 27> table = {{
        {1, C::InterfaceSpecification, T::Explicit, E::Rule, "Parameter Type",
         "using a dictionary as parameter"},
        {2, C::InterfaceSpecification, T::Explicit, E::Judge, "Parameter Range",
         "the integer parameter must be non-negative"},
        {3, C::InterfaceSpecification, T::Explicit, E::Rule, "Parameter Signature",
         "parameter signature must be [String, boolean]"},
        {4, C::InterfaceSpecification, T::Explicit, E::Rule, "Return Type",
         "function must return a list"},
        {5, C::InterfaceSpecification, T::Explicit, E::Judge, "Return Range",
         "the returned integer must be non-negative"},
        {6, C::InterfaceSpecification, T::Explicit, E::Rule, "Return Cardinality",
         "return cardinality must be a tuple (map, error)"},
        {7, C::Environment, T::Explicit, E::Rule, "Language Type", "using Python."},
        {8, C::Environment, T::Explicit, E::Rule, "Language Version",
         "using Java version JDK11"},
        {9, C::Environment, T::Explicit, E::Rule, "Advanced Syntax",
         "using lambda expression in Kotlin"},
        {10, C::Environment, T::Explicit, E::Rule, "Function/Method Invocation",
         "using string.len() function"},
        {11, C::Environment, T::Explicit, E::Rule, "API/Library Usage", "using pandas library"},
        {12, C::Environment, T::Explicit, E::Judge, "Framework", "using Flask Web framework"},
        {13, C::DataStructure, T::Explicit, E::Rule, "Data Structure Type",
         "using a BinarySearchTree data structure"},
        {14, C::DataStructure, T::Explicit, E::Rule, "Data Structure Scale",
         "the list cannot contain more than 100 elements"},
        {15, C::DataStructure, T::Explicit, E::Rule, "Data Structure Operation",
         "must use the pop() and top() operation in stack"},
        {16, C::Algorithm, T::Explicit, E::Judge, "Algorithm Type",
         "using dp / divide and conquer algorithm"},
        {17, C::Algorithm, T::Explicit, E::Judge, "Algorithm Time Complexity",
         "ensure O(1) time complexity"},
        {18, C::Algorithm, T::Explicit, E::Judge, "Algorithm Space Complexity",
         "ensure O(1) space complexity"},
        {19, C::CodingStyle, T::Explicit, E::Rule, "Naming Convention",
         "using snake_case for variables"},
        {20, C::CodingStyle, T::Explicit, E::Rule, "Indentation Style",
         "using '\\t' for indentation"},
        {21, C::CodingStyle, T::Explicit, E::Rule, "Brace Style",
         "using K&R / Allman brace style"},
        {22, C::CodingStyle, T::Explicit, E::Rule, "Comment Style",
         "using docstring for each function"},
        {23, C::CodingStyle, T::Explicit, E::Judge, "Declaration Style",
         "variables be declared at the top of a function"},
        {24, C::CodeQuality, T::Explicit, E::Judge, "Code Quality Type",
         "ensuring code readability requirements"},
        {25, C::Scenario, T::Implicit, E::Judge, "Scenario Type",
         "in the algorithm competition scene..."},
        {26, C::CodeContext, T::Implicit, E::Judge, "Concrete Code Context",
         "{concrete_code} ... using the method in the code"},
        {27, C::Exemplar, T::Implicit, E::Judge, "Concrete Code Exemplar",
         "{concrete_code} ... following the example code"},
    }};
    return table;
}

} // namespace detail

// Immutable registry of constraint types. The built-in table covers ids 1-27;
// an extension file may add ids above 27 but can never redefine the core set.
class Taxonomy {
public:
    Taxonomy() {
        for (const auto& d : detail::builtin_taxonomy()) entries_[d.id] = d;
    }

    static const Taxonomy& builtin() {
        static const Taxonomy instance;
        return instance;
    }

    // Extension file: JSON array of descriptor objects.
    static Taxonomy with_extensions(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open taxonomy extension file: " + path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("taxonomy extension: ") + e.what(), 1);
        }
        if (!doc.is_array()) throw ValidationError(path, "extension file must be a JSON array");
        Taxonomy tax;
        for (const auto& item : doc) {
            ConstraintTypeDescriptor d;
            d.id = item.at("id").get<int>();
            if (d.id <= 27)
                throw ValidationError(std::to_string(d.id), "extension ids must be > 27");
            auto cat = category_from_name(item.at("category").get<std::string>());
            if (!cat) throw ValidationError(std::to_string(d.id), "unknown category");
            d.category = *cat;
            std::string typing = to_lower(item.at("typing").get<std::string>());
            if (typing == "explicit") d.typing = ConstraintTyping::Explicit;
            else if (typing == "implicit") d.typing = ConstraintTyping::Implicit;
            else throw ValidationError(std::to_string(d.id), "typing must be Explicit or Implicit");
            std::string mode = to_lower(item.at("eval_mode").get<std::string>());
            if (mode == "rule") d.eval_mode = EvalMode::Rule;
            else if (mode == "judge" || mode == "llm") d.eval_mode = EvalMode::Judge;
            else throw ValidationError(std::to_string(d.id), "eval_mode must be Rule or Judge");
            d.name = item.at("name").get<std::string>();
            d.example_phrase = item.value("example_phrase", std::string());
            if (tax.entries_.count(d.id))
                throw ValidationError(std::to_string(d.id), "duplicate extension id");
            tax.entries_[d.id] = d;
        }
        return tax;
    }

    const ConstraintTypeDescriptor& lookup_type(int id) const {
        auto it = entries_.find(id);
        if (it == entries_.end())
            throw NotFoundError("no constraint type with id " + std::to_string(id));
        return it->second;
    }

    bool has_type(int id) const { return entries_.count(id) != 0; }

    // Descriptors of one category, in ascending id order.
    std::vector<ConstraintTypeDescriptor> types_in_category(ConstraintCategory cat) const {
        std::vector<ConstraintTypeDescriptor> out;
        for (const auto& [id, d] : entries_)
            if (d.category == cat) out.push_back(d);
        return out;
    }

    std::vector<ConstraintTypeDescriptor> all_types() const {
        std::vector<ConstraintTypeDescriptor> out;
        out.reserve(entries_.size());
        for (const auto& [id, d] : entries_) out.push_back(d);
        return out;
    }

    std::size_t size() const { return entries_.size(); }

private:
    std::map<int, ConstraintTypeDescriptor> entries_;
};

} // namespace codeconform
