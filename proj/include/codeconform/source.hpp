#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "codeconform/errors.hpp"
#include "codeconform/text.hpp"

namespace codeconform {

enum class Language {
    Python,
    JavaScript,
    TypeScript,
    Java,
    Cpp,
    C,
    Go,
    Kotlin,
    CSharp,
    Rust,
    Lua,
    CoffeeScript,
    Prolog,
    Julia,
    Haskell,
};

inline constexpr Language all_languages[] = {
    Language::Python,  Language::JavaScript, Language::TypeScript, Language::Java,
    Language::Cpp,     Language::C,          Language::Go,         Language::Kotlin,
    Language::CSharp,  Language::Rust,       Language::Lua,        Language::CoffeeScript,
    Language::Prolog,  Language::Julia,      Language::Haskell,
};

inline std::string language_name(Language lang) {
    switch (lang) {
    case Language::Python: return "Python";
    case Language::JavaScript: return "JavaScript";
    case Language::TypeScript: return "TypeScript";
    case Language::Java: return "Java";
    case Language::Cpp: return "C++";
    case Language::C: return "C";
    case Language::Go: return "Go";
    case Language::Kotlin: return "Kotlin";
    case Language::CSharp: return "C#";
    case Language::Rust: return "Rust";
    case Language::Lua: return "Lua";
    case Language::CoffeeScript: return "CoffeeScript";
    case Language::Prolog: return "Prolog";
    case Language::Julia: return "Julia";
    case Language::Haskell: return "Haskell";
    }
    return "?";
}

// Accepts canonical names plus common aliases and fence tags.
inline std::optional<Language> language_from_name(std::string_view name) {
    std::string n = to_lower(trim(name));
    if (n.empty()) return std::nullopt;
    if (n == "python" || n == "py" || n == "python3" || n == "python2") return Language::Python;
    if (n == "javascript" || n == "js" || n == "node" || n == "nodejs") return Language::JavaScript;
    if (n == "typescript" || n == "ts") return Language::TypeScript;
    if (n == "java") return Language::Java;
    if (n == "c++" || n == "cpp" || n == "cxx" || n == "cc" || n == "cplusplus") return Language::Cpp;
    if (n == "c") return Language::C;
    if (n == "go" || n == "golang") return Language::Go;
    if (n == "kotlin" || n == "kt") return Language::Kotlin;
    if (n == "c#" || n == "csharp" || n == "cs") return Language::CSharp;
    if (n == "rust" || n == "rs") return Language::Rust;
    if (n == "lua") return Language::Lua;
    if (n == "coffeescript" || n == "coffee") return Language::CoffeeScript;
    if (n == "prolog") return Language::Prolog;
    if (n == "julia" || n == "jl") return Language::Julia;
    if (n == "haskell" || n == "hs") return Language::Haskell;
    return std::nullopt;
}

// Half-open byte range into the text it was extracted from.
struct Span {
    std::size_t offset = 0;
    std::size_t length = 0;
    int line = 1;

    bool within(std::string_view text) const { return offset + length <= text.size(); }
    std::string slice(std::string_view text) const {
        return std::string(text.substr(offset, length));
    }
};

// One block of candidate code, as pulled out of a model response.
struct SourceUnit {
    std::string text;
    std::optional<Language> language;  // resolved language, once identified
    std::string fence_hint;            // raw fence tag, may be empty or unrecognized
    bool fenced = false;
};

} // namespace codeconform
