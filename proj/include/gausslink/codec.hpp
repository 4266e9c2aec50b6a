#pragma once

#include "gausslink/gauss_code.hpp"
#include "gausslink/paragraph.hpp"
#include "gausslink/wirtinger.hpp"

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gausslink {

enum class ParseErrorKind {
    malformed_letter,
    duplicate_letter,
    missing_partner,
    both_signs,
    odd_word_length,
    malformed_symbol,
    missing_superscript,
    not_a_permutation,
    unknown_generator,
    malformed_relator,
    duplicate_generator,
    malformed_input,
};

std::string_view to_string(ParseErrorKind kind);

struct Diagnostic {
    ParseErrorKind kind;
    std::string message;
};

// Input rejection (CLI exit code 2). Carries every violation found in one
// pass, e.g. a duplicate letter and the missing partner it implies.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
    bool has(ParseErrorKind kind) const;

private:
    std::vector<Diagnostic> diagnostics_;
};

// Crossing labels in input may be arbitrary positive integers; parsing maps
// them onto 1..n in ascending numeric order. relabeling[i-1] is the original
// label of crossing i; relabeled is false when labels were already 1..n.
struct ParagraphParse {
    GaussParagraph paragraph;
    std::vector<long long> relabeling;
    bool relabeled = false;
};

struct CodeParse {
    GaussCode code;
    std::vector<long long> relabeling;
    bool relabeled = false;
};

// Grammar: paragraph := word ('/' word)* ; word := letter* ;
// letter := INT ('+'|'-')?. Newlines also separate words. Blank input is the
// empty paragraph (no words).
ParagraphParse parse_paragraph(std::string_view text);

// Grammar: code := symbol* ; symbol := INT ('+'|'-').
CodeParse parse_code(std::string_view text);

// Grammar: file := 'gens' IDENT+ ';' ('rel' IDENT '=' word ';')* with
// word := (IDENT ('^-1')?)*. The right side of a relator must spell out the
// conjugation w^-1 m w literally; 'rel a = b^-1 c b;' stores (a, c, b).
// Blank input is the empty presentation.
WirtingerPresentation parse_presentation(std::string_view text);

std::string serialize(const GaussParagraph& p);
std::string serialize(const GaussCode& w);
std::string serialize(const WirtingerPresentation& p);

// JSON mirrors of the three formats. Values round-trip exactly, including
// paragraphs made solely of empty words, which the text grammar cannot spell.
nlohmann::json to_json(const GaussParagraph& p);
nlohmann::json to_json(const GaussCode& w);
nlohmann::json to_json(const WirtingerPresentation& p);
GaussParagraph paragraph_from_json(const nlohmann::json& j);
GaussCode code_from_json(const nlohmann::json& j);
WirtingerPresentation presentation_from_json(const nlohmann::json& j);

} // namespace gausslink
