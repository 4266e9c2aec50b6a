#include "gausslink/invariants.hpp"

#include "gausslink/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gausslink {

namespace {

// Is position t strictly inside the forward cyclic interval (from, to)?
bool strictly_between(int t, int from, int to, int len) {
    const int rel = (t - from + len) % len;
    const int span = (to - from + len) % len;
    return rel > 0 && rel < span;
}

struct MergeState {
    std::vector<std::vector<Letter>> words;
    std::vector<int> signs;
};

MergeState to_state(const GaussParagraph& p) { return {p.words(), p.signs()}; }

// Crossing ids whose over and under letters currently sit in different words.
std::vector<int> merge_candidates(const MergeState& st) {
    const int n = static_cast<int>(st.signs.size());
    std::vector<int> over_word(static_cast<size_t>(n), -1);
    std::vector<int> under_word(static_cast<size_t>(n), -1);
    for (int w = 0; w < static_cast<int>(st.words.size()); ++w)
        for (const Letter& l : st.words[static_cast<size_t>(w)])
            ((l.role == Role::over) ? over_word : under_word)[static_cast<size_t>(l.index - 1)] = w;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (over_word[static_cast<size_t>(i)] >= 0 && over_word[static_cast<size_t>(i)] != under_word[static_cast<size_t>(i)])
            out.push_back(i + 1);
    return out;
}

// Double crossing i and splice the under-containing word into the other one.
void merge_step(MergeState& st, int i) {
    int over_w = -1, over_pos = -1, under_w = -1, under_pos = -1;
    for (int w = 0; w < static_cast<int>(st.words.size()); ++w) {
        const auto& word = st.words[static_cast<size_t>(w)];
        for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
            const Letter& l = word[static_cast<size_t>(pos)];
            if (l.index != i) continue;
            if (l.role == Role::over) {
                over_w = w;
                over_pos = pos;
            } else {
                under_w = w;
                under_pos = pos;
            }
        }
    }
    if (over_w < 0 || under_w < 0 || over_w == under_w)
        throw std::invalid_argument("merge_step: crossing does not join two words");

    // Fresh crossing with the same sign as i.
    st.signs.push_back(st.signs[static_cast<size_t>(i - 1)]);
    const int fresh = static_cast<int>(st.signs.size());

    // Rotate the under word so the letter i^sign comes last, then double it:
    // the signed letter is followed by the fresh plain letter.
    const auto& uw = st.words[static_cast<size_t>(under_w)];
    std::vector<Letter> rotated;
    rotated.reserve(uw.size() + 1);
    rotated.insert(rotated.end(), uw.begin() + under_pos + 1, uw.end());
    rotated.insert(rotated.end(), uw.begin(), uw.begin() + under_pos + 1);
    rotated.push_back(over(fresh));

    // Double the plain letter: i is followed by fresh^sign, then the rotated
    // word is spliced in right after that block.
    const auto& ow = st.words[static_cast<size_t>(over_w)];
    std::vector<Letter> merged;
    merged.reserve(ow.size() + rotated.size() + 1);
    merged.insert(merged.end(), ow.begin(), ow.begin() + over_pos + 1);
    merged.push_back(under(fresh));
    merged.insert(merged.end(), rotated.begin(), rotated.end());
    merged.insert(merged.end(), ow.begin() + over_pos + 1, ow.end());

    st.words[static_cast<size_t>(over_w)] = std::move(merged);
    st.words.erase(st.words.begin() + under_w);
}

// Final relabeling: the signed letter keeps its sign as superscript, the
// plain letter takes the opposite one.
GaussCode relabel_to_code(const MergeState& st) {
    std::vector<CodeSymbol> symbols;
    for (const auto& word : st.words)
        for (const Letter& l : word) {
            const int s = st.signs[static_cast<size_t>(l.index - 1)];
            symbols.push_back({l.index, l.role == Role::under ? s : -s});
        }
    return GaussCode(std::move(symbols));
}

void collect_merge_codes(MergeState st, std::vector<GaussCode>& out) {
    while (st.words.size() > 1) {
        const std::vector<int> candidates = merge_candidates(st);
        if (candidates.empty())
            throw SplittableInputError("paragraph splits; merge requires a non-splittable paragraph");
        if (candidates.size() == 1) {
            merge_step(st, candidates.front());
            continue;
        }
        for (int i : candidates) {
            MergeState branch = st;
            merge_step(branch, i);
            collect_merge_codes(std::move(branch), out);
        }
        return;
    }
    out.push_back(relabel_to_code(st));
}

} // namespace

int alpha(const GaussCode& w, int index) {
    const int from = w.position(index, +1);
    const int to = w.position(index, -1);
    const int len = w.size();
    int sum = 0;
    for (int t = (from + 1) % len; t != to; t = (t + 1) % len)
        sum += w.symbols()[static_cast<size_t>(t)].sup;
    return sum;
}

int beta(const GaussCode& w, int i, int j) {
    const int len = w.size();
    const int i_from = w.position(i, +1);
    const int i_to = w.position(i, -1);
    const int j_from = w.position(j, +1);
    const int j_to = w.position(j, -1);
    int sum = 0;
    for (int t = 0; t < len; ++t) {
        const bool in_bar_i = t == i_from || t == i_to || strictly_between(t, i_from, i_to, len);
        if (!in_bar_i) continue;
        if (!strictly_between(t, j_from, j_to, len)) continue;
        sum += w.symbols()[static_cast<size_t>(t)].sup;
    }
    return sum;
}

InvariantTable invariant_table(const GaussCode& w) {
    InvariantTable table;
    table.index_count = w.index_count();
    const int m = table.index_count;
    table.alpha.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        table.alpha.push_back(alpha(w, i));
    table.beta.reserve(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            table.beta.push_back(beta(w, i, j));
    return table;
}

bool is_planar_code(const GaussCode& w) {
    const int m = w.index_count();
    for (int i = 1; i <= m; ++i)
        if (alpha(w, i) != 0) return false;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (beta(w, i, j) != 0) return false;
    return true;
}

GaussCode paragraph_to_code(const GaussParagraph& p) {
    MergeState st = to_state(p);
    while (st.words.size() > 1) {
        const std::vector<int> candidates = merge_candidates(st);
        if (candidates.empty())
            throw SplittableInputError("paragraph splits; merge requires a non-splittable paragraph");
        merge_step(st, candidates.front());
    }
    return relabel_to_code(st);
}

std::vector<GaussCode> all_merge_codes(const GaussParagraph& p) {
    std::vector<GaussCode> out;
    collect_merge_codes(to_state(p), out);
    return out;
}

CriterionReport criterion_report(const GaussParagraph& p) {
    CriterionReport report;
    for (ParagraphComponent& comp : split_components(p)) {
        CriterionComponent cc;
        cc.code = paragraph_to_code(comp.paragraph);
        cc.planar = is_planar_code(cc.code);
        cc.component = std::move(comp);
        report.planar = report.planar && cc.planar;
        report.components.push_back(std::move(cc));
    }
    return report;
}

} // namespace gausslink
