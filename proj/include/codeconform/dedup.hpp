#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "codeconform/errors.hpp"
#include "codeconform/text.hpp"

namespace codeconform {

// Lowercased, punctuation-stripped word sequence used for similarity scoring.
struct TokenSequence {
    std::vector<std::string> tokens;

    static TokenSequence normalize(std::string_view text) {
        return TokenSequence{tokenize_words(text)};
    }

    std::size_t size() const { return tokens.size(); }
};

// Classic O(|a|*|b|) dynamic program, rolling row.
inline std::size_t lcs_length(const TokenSequence& a, const TokenSequence& b) {
    if (a.tokens.empty() || b.tokens.empty()) return 0;
    std::vector<std::size_t> prev(b.tokens.size() + 1, 0);
    std::vector<std::size_t> cur(b.tokens.size() + 1, 0);
    for (std::size_t i = 1; i <= a.tokens.size(); ++i) {
        for (std::size_t j = 1; j <= b.tokens.size(); ++j) {
            if (a.tokens[i - 1] == b.tokens[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.tokens.size()];
}

// LCS-based F1 over normalized tokens. Symmetric; 0 when either side is empty.
inline double rouge_l(std::string_view a, std::string_view b) {
    TokenSequence ta = TokenSequence::normalize(a);
    TokenSequence tb = TokenSequence::normalize(b);
    if (ta.tokens.empty() || tb.tokens.empty()) return 0.0;
    double lcs = static_cast<double>(lcs_length(ta, tb));
    double precision = lcs / static_cast<double>(tb.tokens.size());
    double recall = lcs / static_cast<double>(ta.tokens.size());
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

// Greedy pass in input order: keep a prompt iff it scores below the threshold
// against every prompt kept so far.
inline std::vector<std::string> filter_redundant(const std::vector<std::string>& prompts,
                                                 double threshold = 0.7) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw DomainError("dedup threshold must be in (0, 1]");
    std::vector<std::string> kept;
    for (const auto& p : prompts) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (rouge_l(p, k) >= threshold) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(p);
    }
    return kept;
}

} // namespace codeconform
