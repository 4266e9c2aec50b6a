#include "gausslink/codec.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace gausslink {

namespace {

using nlohmann::json;

struct RawLetter {
    long long label = 0;
    bool is_under = false;
    int sign = 1; // meaningful when is_under
};

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::exchange(cur, {}));
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// INT with optional trailing sign; returns false on any lexical problem.
bool lex_letter(const std::string& token, RawLetter& out) {
    size_t digits = 0;
    while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits])))
        ++digits;
    if (digits == 0 || digits > 12) return false;
    const std::string rest = token.substr(digits);
    if (rest != "" && rest != "+" && rest != "-") return false;
    out.label = std::stoll(token.substr(0, digits));
    if (out.label < 1) return false;
    out.is_under = !rest.empty();
    out.sign = (rest == "-") ? -1 : 1;
    return true;
}

// Validate raw words against the paragraph invariants and build the value,
// renumbering labels ascending to 1..n. Reports every violation found.
ParagraphParse build_paragraph(const std::vector<std::vector<RawLetter>>& raw_words) {
    std::vector<Diagnostic> diags;
    for (size_t w = 0; w < raw_words.size(); ++w)
        if (raw_words[w].size() % 2 != 0)
            diags.push_back({ParseErrorKind::odd_word_length,
                             "word " + std::to_string(w + 1) + " has odd length " +
                                 std::to_string(raw_words[w].size())});

    struct LabelUse {
        int over = 0;
        int under_plus = 0;
        int under_minus = 0;
    };
    std::map<long long, LabelUse> uses;
    for (const auto& word : raw_words)
        for (const RawLetter& l : word) {
            LabelUse& u = uses[l.label];
            if (!l.is_under)
                ++u.over;
            else
                ++(l.sign > 0 ? u.under_plus : u.under_minus);
        }
    for (const auto& [label, u] : uses) {
        const std::string name = std::to_string(label);
        if (u.over > 1)
            diags.push_back({ParseErrorKind::duplicate_letter, "letter " + name + " occurs " +
                                                                   std::to_string(u.over) + " times"});
        if (u.under_plus > 1)
            diags.push_back({ParseErrorKind::duplicate_letter, "letter " + name + "+ occurs " +
                                                                   std::to_string(u.under_plus) + " times"});
        if (u.under_minus > 1)
            diags.push_back({ParseErrorKind::duplicate_letter, "letter " + name + "- occurs " +
                                                                   std::to_string(u.under_minus) + " times"});
        if (u.under_plus >= 1 && u.under_minus >= 1)
            diags.push_back({ParseErrorKind::both_signs,
                             "both " + name + "+ and " + name + "- are present"});
        if (u.over == 0)
            diags.push_back({ParseErrorKind::missing_partner, "crossing " + name + " has no plain letter"});
        if (u.under_plus + u.under_minus == 0)
            diags.push_back({ParseErrorKind::missing_partner, "crossing " + name + " has no signed letter"});
    }
    if (!diags.empty()) throw ParseError(std::move(diags));

    ParagraphParse out;
    std::map<long long, int> dense;
    for (const auto& [label, u] : uses) {
        dense[label] = static_cast<int>(out.relabeling.size()) + 1;
        out.relabeling.push_back(label);
        out.relabeled = out.relabeled || label != static_cast<long long>(out.relabeling.size());
    }
    std::vector<int> signs(uses.size(), 1);
    std::vector<std::vector<Letter>> words;
    for (const auto& word : raw_words) {
        std::vector<Letter> letters;
        letters.reserve(word.size());
        for (const RawLetter& l : word) {
            const int idx = dense[l.label];
            letters.push_back({idx, l.is_under ? Role::under : Role::over});
            if (l.is_under) signs[static_cast<size_t>(idx - 1)] = l.sign;
        }
        words.push_back(std::move(letters));
    }
    out.paragraph = GaussParagraph(std::move(words), std::move(signs));
    return out;
}

CodeParse build_code(const std::vector<RawLetter>& raw) {
    std::vector<Diagnostic> diags;
    std::map<long long, std::pair<int, int>> uses; // plus count, minus count
    for (const RawLetter& s : raw) {
        auto& u = uses[s.label];
        ++(s.sign > 0 ? u.first : u.second);
    }
    for (const auto& [label, u] : uses)
        if (u.first != 1 || u.second != 1)
            diags.push_back({ParseErrorKind::not_a_permutation,
                             "index " + std::to_string(label) + " occurs " + std::to_string(u.first) +
                                 " times with +1 and " + std::to_string(u.second) + " times with -1"});
    if (!diags.empty()) throw ParseError(std::move(diags));

    CodeParse out;
    std::map<long long, int> dense;
    for (const auto& [label, u] : uses) {
        dense[label] = static_cast<int>(out.relabeling.size()) + 1;
        out.relabeling.push_back(label);
        out.relabeled = out.relabeled || label != static_cast<long long>(out.relabeling.size());
    }
    std::vector<CodeSymbol> symbols;
    symbols.reserve(raw.size());
    for (const RawLetter& s : raw)
        symbols.push_back({dense[s.label], s.sign});
    out.code = GaussCode(std::move(symbols));
    return out;
}

struct RawRelator {
    std::string target;
    std::vector<std::pair<std::string, int>> rhs;
};

WirtingerPresentation build_presentation(const std::vector<std::string>& names,
                                         const std::vector<RawRelator>& raw) {
    std::vector<Diagnostic> diags;
    std::map<std::string, int> id_of;
    for (size_t g = 0; g < names.size(); ++g) {
        if (!is_ident(names[g])) {
            diags.push_back({ParseErrorKind::malformed_input, "bad generator name '" + names[g] + "'"});
            continue;
        }
        if (!id_of.emplace(names[g], static_cast<int>(g)).second)
            diags.push_back({ParseErrorKind::duplicate_generator, "generator '" + names[g] + "' declared twice"});
    }

    std::vector<Relator> relators;
    for (size_t q = 0; q < raw.size(); ++q) {
        const RawRelator& r = raw[q];
        const std::string where = "relator " + std::to_string(q + 1);
        bool ok = true;
        const auto lookup = [&](const std::string& name) {
            const auto it = id_of.find(name);
            if (it == id_of.end()) {
                diags.push_back({ParseErrorKind::unknown_generator,
                                 where + " references undeclared generator '" + name + "'"});
                ok = false;
                return -1;
            }
            return it->second;
        };

        const int target = lookup(r.target);
        std::vector<GeneratorPower> rhs;
        for (const auto& [name, exp] : r.rhs) {
            const int gen = lookup(name);
            rhs.push_back({gen, exp});
        }
        if (rhs.size() % 2 != 1) {
            diags.push_back({ParseErrorKind::malformed_relator,
                             where + ": right side must spell the conjugation w^-1 m w"});
            continue;
        }
        const size_t half = rhs.size() / 2;
        if (rhs[half].exp != 1) {
            diags.push_back({ParseErrorKind::malformed_relator,
                             where + ": conjugated generator must appear without ^-1"});
            continue;
        }
        bool symmetric = true;
        for (size_t t = 0; t < half; ++t)
            symmetric = symmetric && r.rhs[t].first == r.rhs[rhs.size() - 1 - t].first &&
                        rhs[t].exp == -rhs[rhs.size() - 1 - t].exp;
        if (!symmetric) {
            diags.push_back({ParseErrorKind::malformed_relator,
                             where + ": left half of the right side must be the inverse of the right half"});
            continue;
        }
        if (!ok) continue;
        relators.push_back({target, rhs[half].gen,
                            std::vector<GeneratorPower>(rhs.begin() + static_cast<long>(half) + 1, rhs.end())});
    }
    if (!diags.empty()) throw ParseError(std::move(diags));
    return WirtingerPresentation(names, std::move(relators));
}

std::string letter_token(const GaussParagraph& p, const Letter& l) {
    std::string out = std::to_string(l.index);
    if (l.role == Role::under) out += p.sign(l.index) > 0 ? '+' : '-';
    return out;
}

std::string word_token(const std::string& name, int exp) {
    return exp > 0 ? name : name + "^-1";
}

} // namespace

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::malformed_letter: return "MalformedLetter";
        case ParseErrorKind::duplicate_letter: return "DuplicateLetter";
        case ParseErrorKind::missing_partner: return "MissingPartner";
        case ParseErrorKind::both_signs: return "BothSigns";
        case ParseErrorKind::odd_word_length: return "OddWordLength";
        case ParseErrorKind::malformed_symbol: return "MalformedSymbol";
        case ParseErrorKind::missing_superscript: return "MissingSuperscript";
        case ParseErrorKind::not_a_permutation: return "NotAPermutation";
        case ParseErrorKind::unknown_generator: return "UnknownGenerator";
        case ParseErrorKind::malformed_relator: return "MalformedRelator";
        case ParseErrorKind::duplicate_generator: return "DuplicateGenerator";
        case ParseErrorKind::malformed_input: return "MalformedInput";
    }
    return "ParseError";
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error([&] {
          std::string what;
          for (const Diagnostic& d : diagnostics) {
              if (!what.empty()) what += "; ";
              what += std::string(to_string(d.kind)) + ": " + d.message;
          }
          return what.empty() ? std::string("parse error") : what;
      }()),
      diagnostics_(std::move(diagnostics)) {}

bool ParseError::has(ParseErrorKind kind) const {
    return std::any_of(diagnostics_.begin(), diagnostics_.end(),
                       [&](const Diagnostic& d) { return d.kind == kind; });
}

ParagraphParse parse_paragraph(std::string_view text) {
    // Surrounding whitespace (including the final newline of a file) is not
    // a separator; interior newlines and '/' are.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    std::vector<std::string> segments{""};
    bool any_separator = false;
    for (char c : text) {
        if (c == '/' || c == '\n') {
            segments.emplace_back();
            any_separator = true;
        } else {
            segments.back() += c;
        }
    }

    std::vector<Diagnostic> diags;
    std::vector<std::vector<RawLetter>> words;
    for (const std::string& segment : segments) {
        std::vector<RawLetter> word;
        for (const std::string& token : whitespace_tokens(segment)) {
            RawLetter l;
            if (!lex_letter(token, l))
                diags.push_back({ParseErrorKind::malformed_letter,
                                 "token '" + token + "' is not a letter (INT with optional + or -)"});
            else
                word.push_back(l);
        }
        words.push_back(std::move(word));
    }
    if (!diags.empty()) throw ParseError(std::move(diags));
    if (!any_separator && words.size() == 1 && words.front().empty())
        words.clear(); // blank input is the empty paragraph
    return build_paragraph(words);
}

CodeParse parse_code(std::string_view text) {
    std::vector<Diagnostic> diags;
    std::vector<RawLetter> raw;
    for (const std::string& token : whitespace_tokens(text)) {
        RawLetter s;
        if (!lex_letter(token, s)) {
            diags.push_back({ParseErrorKind::malformed_symbol,
                             "token '" + token + "' is not a symbol (INT followed by + or -)"});
            continue;
        }
        if (!s.is_under) {
            diags.push_back({ParseErrorKind::missing_superscript,
                             "symbol '" + token + "' lacks its superscript (+ or -)"});
            continue;
        }
        raw.push_back(s);
    }
    if (!diags.empty()) throw ParseError(std::move(diags));
    return build_code(raw);
}

WirtingerPresentation parse_presentation(std::string_view text) {
    // ';' and '=' are tokens even when glued to a word.
    std::string spaced;
    for (char c : text) {
        if (c == ';' || c == '=') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
        } else {
            spaced += c;
        }
    }
    const std::vector<std::string> tokens = whitespace_tokens(spaced);
    if (tokens.empty()) return WirtingerPresentation();

    std::vector<Diagnostic> diags;
    size_t at = 0;
    const auto fail = [&](const std::string& message) -> WirtingerPresentation {
        diags.push_back({ParseErrorKind::malformed_input, message});
        throw ParseError(std::move(diags));
    };

    if (tokens[at] != "gens") return fail("expected 'gens' at the start");
    ++at;
    std::vector<std::string> names;
    while (at < tokens.size() && tokens[at] != ";")
        names.push_back(tokens[at++]);
    if (names.empty()) return fail("expected at least one generator after 'gens'");
    if (at == tokens.size()) return fail("missing ';' after the generator list");
    ++at;

    std::vector<RawRelator> raw;
    while (at < tokens.size()) {
        if (tokens[at] != "rel") return fail("expected 'rel', got '" + tokens[at] + "'");
        ++at;
        if (at == tokens.size()) return fail("unterminated relator");
        RawRelator r;
        r.target = tokens[at++];
        if (at == tokens.size() || tokens[at] != "=")
            return fail("expected '=' after relator target");
        ++at;
        while (at < tokens.size() && tokens[at] != ";") {
            std::string token = tokens[at++];
            int exp = 1;
            if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
                exp = -1;
                token = token.substr(0, token.size() - 3);
            }
            if (!is_ident(token))
                return fail("bad word token '" + token + "'");
            r.rhs.emplace_back(token, exp);
        }
        if (at == tokens.size()) return fail("missing ';' after relator");
        ++at;
        raw.push_back(std::move(r));
    }
    return build_presentation(names, raw);
}

std::string serialize(const GaussParagraph& p) {
    std::string out;
    for (int w = 0; w < p.word_count(); ++w) {
        if (w > 0) out += " / ";
        for (size_t i = 0; i < p.word(w).size(); ++i) {
            if (i > 0) out += ' ';
            out += letter_token(p, p.word(w)[i]);
        }
    }
    return out;
}

std::string serialize(const GaussCode& w) {
    std::string out;
    for (const CodeSymbol& s : w.symbols()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s.index);
        out += s.sup > 0 ? '+' : '-';
    }
    return out;
}

std::string serialize(const WirtingerPresentation& p) {
    if (p.generator_count() == 0) return "";
    std::string out = "gens";
    for (const std::string& name : p.generators()) out += " " + name;
    out += ";\n";
    for (const Relator& r : p.relators()) {
        out += "rel " + p.generator_name(r.target) + " =";
        for (auto it = r.conjugator.rbegin(); it != r.conjugator.rend(); ++it)
            out += " " + word_token(p.generator_name(it->gen), -it->exp);
        out += " " + p.generator_name(r.source);
        for (const GeneratorPower& l : r.conjugator)
            out += " " + word_token(p.generator_name(l.gen), l.exp);
        out += ";\n";
    }
    return out;
}

nlohmann::json to_json(const GaussParagraph& p) {
    json words = json::array();
    for (int w = 0; w < p.word_count(); ++w) {
        json word = json::array();
        for (const Letter& l : p.word(w))
            word.push_back(letter_token(p, l));
        words.push_back(std::move(word));
    }
    return json{{"format", "gauss-paragraph"},
                {"n", p.crossing_count()},
                {"k", p.word_count()},
                {"words", std::move(words)}};
}

nlohmann::json to_json(const GaussCode& w) {
    json symbols = json::array();
    for (const CodeSymbol& s : w.symbols())
        symbols.push_back(std::to_string(s.index) + (s.sup > 0 ? "+" : "-"));
    return json{{"format", "gauss-code"}, {"symbols", std::move(symbols)}};
}

nlohmann::json to_json(const WirtingerPresentation& p) {
    json relators = json::array();
    for (const Relator& r : p.relators()) {
        json conj = json::array();
        for (const GeneratorPower& l : r.conjugator)
            conj.push_back(word_token(p.generator_name(l.gen), l.exp));
        relators.push_back(json{{"target", p.generator_name(r.target)},
                                {"source", p.generator_name(r.source)},
                                {"conjugator", std::move(conj)}});
    }
    return json{{"format", "wirtinger-presentation"},
                {"generators", p.generators()},
                {"relators", std::move(relators)}};
}

namespace {

[[noreturn]] void bad_json(const std::string& message) {
    throw ParseError({{ParseErrorKind::malformed_input, message}});
}

} // namespace

GaussParagraph paragraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("words") || !j["words"].is_array())
        bad_json("expected an object with a 'words' array");
    std::vector<Diagnostic> diags;
    std::vector<std::vector<RawLetter>> words;
    for (const auto& word : j["words"]) {
        if (!word.is_array()) bad_json("'words' entries must be arrays of letter strings");
        std::vector<RawLetter> raw;
        for (const auto& token : word) {
            if (!token.is_string()) bad_json("letters must be strings");
            RawLetter l;
            if (!lex_letter(token.get<std::string>(), l))
                diags.push_back({ParseErrorKind::malformed_letter,
                                 "token '" + token.get<std::string>() + "' is not a letter"});
            else
                raw.push_back(l);
        }
        words.push_back(std::move(raw));
    }
    if (!diags.empty()) throw ParseError(std::move(diags));
    return build_paragraph(words).paragraph;
}

GaussCode code_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("symbols") || !j["symbols"].is_array())
        bad_json("expected an object with a 'symbols' array");
    std::string joined;
    for (const auto& token : j["symbols"]) {
        if (!token.is_string()) bad_json("symbols must be strings");
        joined += token.get<std::string>() + " ";
    }
    return parse_code(joined).code;
}

WirtingerPresentation presentation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        bad_json("expected an object with 'generators' and 'relators'");
    std::vector<std::string> names;
    for (const auto& name : j["generators"]) {
        if (!name.is_string()) bad_json("generator names must be strings");
        names.push_back(name.get<std::string>());
    }
    std::vector<RawRelator> raw;
    if (j.contains("relators")) {
        if (!j["relators"].is_array()) bad_json("'relators' must be an array");
        for (const auto& rel : j["relators"]) {
            if (!rel.is_object() || !rel.contains("target") || !rel.contains("source"))
                bad_json("relators need 'target', 'source' and 'conjugator'");
            RawRelator r;
            r.target = rel["target"].get<std::string>();
            std::vector<std::pair<std::string, int>> conj;
            if (rel.contains("conjugator"))
                for (const auto& token : rel["conjugator"]) {
                    std::string t = token.get<std::string>();
                    int exp = 1;
                    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
                        exp = -1;
                        t = t.substr(0, t.size() - 3);
                    }
                    conj.emplace_back(t, exp);
                }
            // Rebuild the literal w^-1 m w spelling so one validator serves
            // both the text and JSON paths.
            for (auto it = conj.rbegin(); it != conj.rend(); ++it)
                r.rhs.emplace_back(it->first, -it->second);
            r.rhs.emplace_back(rel["source"].get<std::string>(), 1);
            r.rhs.insert(r.rhs.end(), conj.begin(), conj.end());
            raw.push_back(std::move(r));
        }
    }
    return build_presentation(names, raw);
}

} // namespace gausslink
