#include "kei/word.hpp"

#include <algorithm>
#include <cctype>

#include "kei/error.hpp"

namespace kei {

namespace {

struct WordParser {
    std::string_view text;
    size_t pos = 0;
    int line = 1, col = 1;

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }

    std::string symbol() {
        skip_ws();
        size_t start = pos;
        auto is_sym_char = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        };
        while (pos < text.size() && is_sym_char(text[pos])) advance();
        if (pos == start) fail("expected a generator symbol");
        return std::string(text.substr(start, pos - start));
    }

    KeiWord word() {
        KeiWord w;
        if (peek() == '(') {
            advance();
            w = word();  // leading group: flatten, left association is unchanged
            if (peek() != ')') fail("expected ')'");
            advance();
        } else {
            w.head = symbol();
        }
        while (peek() == '*') {
            advance();
            if (peek() == '(') {
                advance();
                auto sub = std::make_shared<KeiWord>(word());
                if (peek() != ')') fail("expected ')'");
                advance();
                if (sub->is_generator()) {
                    w.tail.push_back(WordOp{sub->head, nullptr});  // a*(b) is just a*b
                } else {
                    w.tail.push_back(WordOp{"", std::move(sub)});
                }
            } else {
                w.tail.push_back(WordOp{symbol(), nullptr});
            }
        }
        return w;
    }
};

void collect_symbols(const KeiWord& w, std::vector<std::string>& out) {
    auto add = [&out](const std::string& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    add(w.head);
    for (const auto& op : w.tail) {
        if (op.is_symbol())
            add(op.sym);
        else
            collect_symbols(*op.sub, out);
    }
}

} // namespace

int KeiWord::normalized_length() const {
    int len = 1;
    for (const auto& op : tail) {
        if (op.is_symbol())
            len += 1;
        else
            len += 2 * op.sub->normalized_length() - 1;
    }
    return len;
}

KeiWord make_word(std::string head, std::vector<std::string> tail) {
    KeiWord w;
    w.head = std::move(head);
    for (auto& s : tail) w.tail.push_back(WordOp{std::move(s), nullptr});
    return w;
}

KeiWord parse_word(std::string_view text) {
    WordParser p{text};
    KeiWord w = p.word();
    if (!p.at_end()) p.fail("unexpected trailing input after word");
    return w;
}

KeiWord normalize(const KeiWord& w) {
    KeiWord out;
    out.head = w.head;
    for (const auto& op : w.tail) {
        if (op.is_symbol()) {
            out.tail.push_back(op);
            continue;
        }
        KeiWord sub = normalize(*op.sub);
        // w*(h*t1*...*tk) = w*tk*...*t1*h*t1*...*tk
        for (auto it = sub.tail.rbegin(); it != sub.tail.rend(); ++it) out.tail.push_back(*it);
        out.tail.push_back(WordOp{sub.head, nullptr});
        for (const auto& t : sub.tail) out.tail.push_back(t);
    }
    return out;
}

KeiWord substitute(const KeiWord& w, const std::unordered_map<std::string, std::string>& map) {
    KeiWord out;
    auto mapped = [&map](const std::string& s) {
        auto it = map.find(s);
        return it == map.end() ? s : it->second;
    };
    out.head = mapped(w.head);
    for (const auto& op : w.tail) {
        if (op.is_symbol())
            out.tail.push_back(WordOp{mapped(op.sym), nullptr});
        else
            out.tail.push_back(WordOp{"", std::make_shared<KeiWord>(substitute(*op.sub, map))});
    }
    return out;
}

std::string to_string(const KeiWord& w) {
    std::string s = w.head;
    for (const auto& op : w.tail) {
        s += '*';
        if (op.is_symbol())
            s += op.sym;
        else
            s += '(' + to_string(*op.sub) + ')';
    }
    return s;
}

std::vector<std::string> word_symbols(const KeiWord& w) {
    std::vector<std::string> out;
    collect_symbols(w, out);
    return out;
}

} // namespace kei
