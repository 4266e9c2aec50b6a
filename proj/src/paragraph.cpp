#include "gausslink/paragraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gausslink {

namespace {

class WordUnionFind {
public:
    explicit WordUnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

} // namespace

GaussParagraph::GaussParagraph(std::vector<std::vector<Letter>> words, std::vector<int> signs)
    : words_(std::move(words)), signs_(std::move(signs)) {
    const int n = static_cast<int>(signs_.size());
    std::vector<int> over_seen(static_cast<size_t>(n), 0);
    std::vector<int> under_seen(static_cast<size_t>(n), 0);
    for (const auto& w : words_) {
        if (w.size() % 2 != 0)
            throw std::invalid_argument("gauss paragraph word has odd length");
        for (const Letter& l : w) {
            if (l.index < 1 || l.index > n)
                throw std::invalid_argument("gauss paragraph letter index out of 1..n");
            auto& seen = (l.role == Role::over) ? over_seen : under_seen;
            if (++seen[static_cast<size_t>(l.index - 1)] > 1)
                throw std::invalid_argument("gauss paragraph letter occurs twice: " + std::to_string(l.index));
        }
    }
    for (int i = 0; i < n; ++i) {
        if (over_seen[static_cast<size_t>(i)] != 1 || under_seen[static_cast<size_t>(i)] != 1)
            throw std::invalid_argument("crossing " + std::to_string(i + 1) + " lacks an over/under letter");
        const int s = signs_[static_cast<size_t>(i)];
        if (s != 1 && s != -1)
            throw std::invalid_argument("crossing sign must be +1 or -1");
    }
}

int GaussParagraph::letter_count() const {
    int total = 0;
    for (const auto& w : words_) total += static_cast<int>(w.size());
    return total;
}

OccurrenceIndex index_occurrences(const GaussParagraph& p) {
    OccurrenceIndex ix;
    const int n = p.crossing_count();
    ix.over_occ.assign(static_cast<size_t>(n), -1);
    ix.under_occ.assign(static_cast<size_t>(n), -1);
    int id = 0;
    for (int w = 0; w < p.word_count(); ++w) {
        const auto& word = p.word(w);
        ix.word_offset.push_back(id);
        const int len = static_cast<int>(word.size());
        for (int pos = 0; pos < len; ++pos, ++id) {
            const Letter& l = word[static_cast<size_t>(pos)];
            ix.word_of.push_back(w);
            ix.letter_of.push_back(l);
            ix.next_occ.push_back(ix.word_offset[static_cast<size_t>(w)] + (pos + 1) % len);
            ix.prev_occ.push_back(ix.word_offset[static_cast<size_t>(w)] + (pos + len - 1) % len);
            auto& slot = (l.role == Role::over) ? ix.over_occ : ix.under_occ;
            slot[static_cast<size_t>(l.index - 1)] = id;
        }
    }
    return ix;
}

std::vector<ParagraphComponent> split_components(const GaussParagraph& p) {
    const int k = p.word_count();
    const int n = p.crossing_count();
    WordUnionFind uf(k);

    // Link words through shared crossing ids.
    std::vector<int> home_word(static_cast<size_t>(n), -1);
    for (int w = 0; w < k; ++w) {
        for (const Letter& l : p.word(w)) {
            int& home = home_word[static_cast<size_t>(l.index - 1)];
            if (home < 0)
                home = w;
            else
                uf.unite(home, w);
        }
    }

    // Group words per root; track the smallest crossing id per group.
    std::vector<int> root_min_index(static_cast<size_t>(k), n + 1);
    for (int i = 0; i < n; ++i) {
        const int r = uf.find(home_word[static_cast<size_t>(i)]);
        root_min_index[static_cast<size_t>(r)] = std::min(root_min_index[static_cast<size_t>(r)], i + 1);
    }

    std::vector<int> roots;
    for (int w = 0; w < k; ++w)
        if (uf.find(w) == w) roots.push_back(w);
    std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) {
        return root_min_index[static_cast<size_t>(a)] < root_min_index[static_cast<size_t>(b)];
    });

    std::vector<ParagraphComponent> out;
    for (int r : roots) {
        ParagraphComponent comp;
        std::vector<std::vector<Letter>> words;
        std::vector<int> indices; // original crossing ids in this component
        for (int w = 0; w < k; ++w) {
            if (uf.find(w) != r) continue;
            comp.word_map.push_back(w);
            words.push_back(p.word(w));
            for (const Letter& l : p.word(w))
                indices.push_back(l.index);
        }
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        std::vector<int> local_of(static_cast<size_t>(n) + 1, 0);
        std::vector<int> signs;
        for (size_t i = 0; i < indices.size(); ++i) {
            local_of[static_cast<size_t>(indices[i])] = static_cast<int>(i) + 1;
            signs.push_back(p.sign(indices[i]));
        }
        for (auto& word : words)
            for (Letter& l : word)
                l.index = local_of[static_cast<size_t>(l.index)];
        comp.crossing_map = std::move(indices);
        comp.paragraph = GaussParagraph(std::move(words), std::move(signs));
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace gausslink
