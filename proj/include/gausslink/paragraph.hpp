#pragma once

#include <vector>

namespace gausslink {

enum class Role : unsigned char { over, under };

// One letter of a Gauss word: crossing index plus whether the strand passes
// over (plain letter) or under (superscripted letter). The crossing sign is
// a property of the crossing, not of the letter; it lives on GaussParagraph.
struct Letter {
    int index = 0; // 1-based crossing id
    Role role = Role::over;

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter over(int index) { return {index, Role::over}; }
inline Letter under(int index) { return {index, Role::under}; }

// Unordered collection of cyclic words over {i, i^+, i^-}. Invariants:
// crossing ids are dense 1..n, each id occurs exactly once as over and once
// as under across all words, every word has even length. Words are stored
// with a fixed starting letter but all consumers treat them cyclically.
class GaussParagraph {
public:
    GaussParagraph() = default;
    GaussParagraph(std::vector<std::vector<Letter>> words, std::vector<int> signs);

    int crossing_count() const { return static_cast<int>(signs_.size()); }
    int word_count() const { return static_cast<int>(words_.size()); }
    int letter_count() const;

    const std::vector<std::vector<Letter>>& words() const { return words_; }
    const std::vector<Letter>& word(int w) const { return words_[static_cast<size_t>(w)]; }

    // Sign of crossing i (1-based), +1 or -1.
    int sign(int index) const { return signs_[static_cast<size_t>(index - 1)]; }
    const std::vector<int>& signs() const { return signs_; }

    friend bool operator==(const GaussParagraph&, const GaussParagraph&) = default;

private:
    std::vector<std::vector<Letter>> words_;
    std::vector<int> signs_;
};

// Flat addressing of letter occurrences, shared by the surface and diagram
// builders. Occurrence ids run word by word in letter order.
struct OccurrenceIndex {
    std::vector<int> word_offset;  // per word, id of its first letter
    std::vector<int> word_of;      // per occurrence
    std::vector<Letter> letter_of; // per occurrence
    std::vector<int> next_occ;     // cyclic successor within the word
    std::vector<int> prev_occ;     // cyclic predecessor within the word
    std::vector<int> over_occ;     // per crossing (0-based), occurrence of the plain letter
    std::vector<int> under_occ;    // per crossing (0-based), occurrence of the signed letter

    int total() const { return static_cast<int>(letter_of.size()); }
};

OccurrenceIndex index_occurrences(const GaussParagraph& p);

// One non-splittable factor of a paragraph, with crossing ids renumbered to
// a dense 1..n preserving ascending original order.
struct ParagraphComponent {
    GaussParagraph paragraph;
    std::vector<int> crossing_map; // local id i is original id crossing_map[i-1]
    std::vector<int> word_map;     // local word w was original word word_map[w]
};

// Partition words into minimal groups sharing no crossing index (union-find
// over words linked through shared ids). Components are ordered by their
// smallest original crossing id; crossing-free components (empty words) come
// last in original word order.
std::vector<ParagraphComponent> split_components(const GaussParagraph& p);

} // namespace gausslink
