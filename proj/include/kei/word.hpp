#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kei {

struct KeiWord;

/// One operator entry of a left-normed word: either a plain generator symbol
/// or a parenthesized sub-word acting as a single operator.
struct WordOp {
    std::string sym;                     // set when this entry is a plain symbol
    std::shared_ptr<const KeiWord> sub;  // set when this entry is "( word )"

    bool is_symbol() const { return !sym.empty(); }
};

/// A left-normed word: head symbol followed by operator entries, so that
/// h, t1, t2 denotes (h * t1) * t2.  A leading parenthesized group such as
/// (a*b)*c parses to the same word as a*b*c.
struct KeiWord {
    std::string head;
    std::vector<WordOp> tail;

    bool is_generator() const { return tail.empty(); }
    /// Number of letters when fully expanded to parenthesis-free form.
    int normalized_length() const;
};

KeiWord make_word(std::string head, std::vector<std::string> tail = {});

/// Parses a word in the grammar  word = sym ( '*' (sym | '(' word ')') )*.
KeiWord parse_word(std::string_view text);

/// Rewrites the word to an equivalent parenthesis-free left-normed word using
/// the involutory operator expansion
///   w * (h*t1*...*tk)  =  w * tk * ... * t1 * h * t1 * ... * tk.
KeiWord normalize(const KeiWord& w);

/// Replaces symbols per the map; symbols missing from the map are kept.
KeiWord substitute(const KeiWord& w, const std::unordered_map<std::string, std::string>& map);

std::string to_string(const KeiWord& w);

/// All symbols appearing in the word, in order of first occurrence.
std::vector<std::string> word_symbols(const KeiWord& w);

} // namespace kei
