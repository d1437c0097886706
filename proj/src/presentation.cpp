#include "lcskit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace lcskit {

namespace {

bool canonical_less(const CyclicRelation& a, const CyclicRelation& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.support < b.support;
}

// Splits a line into whitespace-separated tokens, recording column offsets.
struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
        i = j;
    }
    return out;
}

int parse_int(const Token& tok, int lineno) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok.text, &pos);
        if (pos != tok.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, tok.column, "expected integer, got '" + tok.text + "'");
    }
}

// Word syntax: `e` for the identity, otherwise letters like `x3` or `x1^-1`.
Word parse_word(const std::vector<Token>& toks, size_t begin, size_t end, int lineno) {
    Word w;
    if (end - begin == 1 && toks[begin].text == "e") return w;
    for (size_t i = begin; i < end; ++i) {
        const Token& tok = toks[i];
        const std::string& s = tok.text;
        if (s.size() < 2 || s[0] != 'x')
            throw ParseError(lineno, tok.column, "bad word letter '" + s + "'");
        size_t caret = s.find('^');
        std::string idx = s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        int sign = 1;
        if (caret != std::string::npos) {
            std::string exp = s.substr(caret + 1);
            if (exp == "-1")
                sign = -1;
            else if (exp != "1")
                throw ParseError(lineno, tok.column, "only exponents 1 and -1 are supported");
        }
        try {
            size_t pos = 0;
            int v = std::stoi(idx, &pos);
            if (pos != idx.size() || v < 1) throw std::invalid_argument("");
            w.letters.push_back({v, sign});
        } catch (const std::exception&) {
            throw ParseError(lineno, tok.column, "bad generator index in '" + s + "'");
        }
    }
    return w;
}

std::string word_to_string(const Word& w) {
    if (w.is_identity()) return "e";
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += 'x' + std::to_string(w.letters[i].index);
        if (w.letters[i].sign < 0) out += "^-1";
    }
    return out;
}

void check_word_indices(const Word& w, int n, int lineno) {
    for (const auto& l : w.letters)
        if (l.index < 1 || l.index > n)
            throw ParseError(lineno, 1,
                             "conjugator index " + std::to_string(l.index) + " out of range 1.." +
                                 std::to_string(n));
}

}  // namespace

Presentation parse_presentation(std::istream& in, bool force_strict) {
    Presentation p;
    p.strict = force_strict;
    bool have_generators = false;
    std::string line;
    int lineno = 0;
    CyclicRelation* last_relation = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (kw == "generators") {
            if (toks.size() != 2)
                throw ParseError(lineno, toks[0].column, "usage: generators <n>");
            p.n = parse_int(toks[1], lineno);
            if (p.n < 1)
                throw ParseError(lineno, toks[1].column, "generator count must be positive");
            have_generators = true;
        } else if (kw == "strict") {
            p.strict = true;
        } else if (kw == "relation") {
            if (!have_generators)
                throw ParseError(lineno, toks[0].column, "'generators' must come first");
            if (toks.size() < 3)
                throw ParseError(lineno, toks[0].column, "relation needs at least two indices");
            CyclicRelation r;
            for (size_t i = 1; i < toks.size(); ++i) {
                int v = parse_int(toks[i], lineno);
                if (v < 1 || v > p.n)
                    throw ParseError(lineno, toks[i].column,
                                     "generator index " + std::to_string(v) + " out of range 1.." +
                                         std::to_string(p.n));
                if (!r.support.empty() && v <= r.support.back())
                    throw ParseError(lineno, toks[i].column, "support must be strictly increasing");
                r.support.push_back(v);
            }
            r.conjugators.assign(r.support.size(), Word{});
            p.relations.push_back(std::move(r));
            last_relation = &p.relations.back();
        } else if (kw == "conj") {
            if (!last_relation)
                throw ParseError(lineno, toks[0].column, "'conj' must follow a relation");
            std::vector<Word> words;
            size_t begin = 1;
            for (size_t i = 1; i <= toks.size(); ++i) {
                if (i == toks.size() || toks[i].text == ";") {
                    if (i == begin)
                        throw ParseError(lineno, toks[0].column, "empty conjugator word");
                    words.push_back(parse_word(toks, begin, i, lineno));
                    begin = i + 1;
                }
            }
            if (words.size() != last_relation->support.size())
                throw ParseError(lineno, toks[0].column,
                                 "expected " + std::to_string(last_relation->support.size()) +
                                     " conjugator words, got " + std::to_string(words.size()));
            for (const auto& w : words) check_word_indices(w, p.n, lineno);
            last_relation->conjugators = std::move(words);
            last_relation = nullptr;
        } else {
            throw ParseError(lineno, toks[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!have_generators) throw ParseError(lineno + 1, 1, "missing 'generators' line");

    if (!p.strict) {
        // Materialize every uncovered pair as a commutator relation.
        std::set<std::pair<int, int>> covered;
        for (const auto& r : p.relations)
            for (size_t i = 0; i < r.support.size(); ++i)
                for (size_t j = i + 1; j < r.support.size(); ++j)
                    covered.insert({r.support[i], r.support[j]});
        for (int i = 1; i <= p.n; ++i)
            for (int j = i + 1; j <= p.n; ++j)
                if (!covered.count({i, j})) {
                    CyclicRelation r;
                    r.support = {i, j};
                    r.conjugators.assign(2, Word{});
                    p.relations.push_back(std::move(r));
                }
    }
    canonicalize(p);
    return p;
}

Presentation parse_presentation(const std::string& text, bool force_strict) {
    std::istringstream in(text);
    return parse_presentation(in, force_strict);
}

void canonicalize(Presentation& p) {
    std::stable_sort(p.relations.begin(), p.relations.end(), canonical_less);
}

std::string serialize(const Presentation& p) {
    Presentation q = p;
    canonicalize(q);
    std::ostringstream out;
    out << "generators " << q.n << "\n";
    if (q.strict) out << "strict\n";
    for (const auto& r : q.relations) {
        out << "relation";
        for (int i : r.support) out << ' ' << i;
        out << "\n";
        if (!r.conjugation_free()) {
            out << "conj";
            for (size_t i = 0; i < r.conjugators.size(); ++i) {
                out << (i ? " ; " : " ") << word_to_string(r.conjugators[i]);
            }
            out << "\n";
        }
    }
    return out.str();
}

ValidationReport validate(const Presentation& p) {
    ValidationReport rep;
    auto support_str = [](const std::vector<int>& s) {
        std::string out = "{";
        for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
        return out + "}";
    };
    // Requirement (1): supports strictly increasing and in range.
    for (const auto& r : p.relations) {
        if (r.support.size() < 2)
            rep.violations.push_back({"relation " + support_str(r.support) + " has length < 2"});
        if (!std::is_sorted(r.support.begin(), r.support.end()) ||
            std::adjacent_find(r.support.begin(), r.support.end()) != r.support.end())
            rep.violations.push_back(
                {"relation " + support_str(r.support) + " support not strictly increasing"});
        for (int i : r.support)
            if (i < 1 || i > p.n)
                rep.violations.push_back({"relation " + support_str(r.support) +
                                          " references generator " + std::to_string(i) +
                                          " out of range"});
        if (r.conjugators.size() != r.support.size())
            rep.violations.push_back(
                {"relation " + support_str(r.support) + " conjugator count mismatch"});
    }
    // Requirement (2): every pair covered exactly once.
    std::map<std::pair<int, int>, int> coverage;
    for (const auto& r : p.relations)
        for (size_t i = 0; i < r.support.size(); ++i)
            for (size_t j = i + 1; j < r.support.size(); ++j)
                ++coverage[{r.support[i], r.support[j]}];
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j) {
            auto it = coverage.find({i, j});
            int c = it == coverage.end() ? 0 : it->second;
            if (c == 0)
                rep.violations.push_back({"pair {" + std::to_string(i) + "," + std::to_string(j) +
                                          "} not covered by any relation"});
            else if (c > 1)
                rep.violations.push_back({"pair {" + std::to_string(i) + "," + std::to_string(j) +
                                          "} covered by " + std::to_string(c) + " relations"});
        }
    // Requirement (3): supports pairwise intersect in at most one index.
    for (size_t a = 0; a < p.relations.size(); ++a)
        for (size_t b = a + 1; b < p.relations.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(p.relations[a].support.begin(), p.relations[a].support.end(),
                                  p.relations[b].support.begin(), p.relations[b].support.end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                rep.violations.push_back({"supports " + support_str(p.relations[a].support) +
                                          " and " + support_str(p.relations[b].support) +
                                          " intersect in " + support_str(common)});
        }
    return rep;
}

bool is_conjugation_free(const Presentation& p) {
    for (const auto& r : p.relations)
        if (!r.conjugation_free()) return false;
    return true;
}

IncidenceData incidence_of(const Presentation& p) {
    IncidenceData inc;
    inc.n = p.n;
    for (const auto& r : p.relations) inc.supports.push_back(r.support);
    std::sort(inc.supports.begin(), inc.supports.end());
    return inc;
}

}  // namespace lcskit
