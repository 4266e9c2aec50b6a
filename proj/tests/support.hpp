#pragma once

// Shared test support: random instance generators, exhaustive enumeration of
// small paragraphs, and independent oracles kept deliberately naive so they
// cannot share a defect with the library implementations.

#include "gausslink/carter.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/diagram.hpp"
#include "gausslink/errors.hpp"
#include "gausslink/gauss_code.hpp"
#include "gausslink/grouptools.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/paragraph.hpp"
#include "gausslink/wirtinger.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace gausslink::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<int> random_signs(Rng& rng, int n) {
    std::vector<int> signs(static_cast<size_t>(n));
    for (int& s : signs) s = uniform(rng, 0, 1) ? 1 : -1;
    return signs;
}

// Shuffle the 2n letters into k words of the given even lengths.
inline GaussParagraph assemble_paragraph(const std::vector<int>& token_order,
                                         const std::vector<int>& lengths,
                                         const std::vector<int>& signs) {
    const int n = static_cast<int>(signs.size());
    std::vector<std::vector<Letter>> words;
    size_t at = 0;
    for (int len : lengths) {
        std::vector<Letter> word;
        for (int i = 0; i < len; ++i, ++at) {
            const int token = token_order[at];
            word.push_back(token < n ? over(token + 1) : under(token - n + 1));
        }
        words.push_back(std::move(word));
    }
    return GaussParagraph(std::move(words), signs);
}

// Random even composition of 2n into k positive parts.
inline std::vector<int> random_even_lengths(Rng& rng, int n, int k) {
    std::vector<int> lengths(static_cast<size_t>(k), 2);
    for (int extra = 0; extra < n - k; ++extra)
        lengths[static_cast<size_t>(uniform(rng, 0, k - 1))] += 2;
    return lengths;
}

// Random paragraph with n crossings in k words, resampled until it does not
// split. Requires k <= n.
inline GaussParagraph random_paragraph(Rng& rng, int n, int k) {
    if (k > n) throw std::invalid_argument("need k <= n for a non-splittable paragraph");
    std::vector<int> tokens(static_cast<size_t>(2 * n));
    std::iota(tokens.begin(), tokens.end(), 0);
    for (;;) {
        std::shuffle(tokens.begin(), tokens.end(), rng);
        GaussParagraph p = assemble_paragraph(tokens, random_even_lengths(rng, n, k), random_signs(rng, n));
        if (split_components(p).size() == 1) return p;
    }
}

inline GaussParagraph random_paragraph(Rng& rng, int max_n) {
    const int n = uniform(rng, 1, max_n);
    return random_paragraph(rng, n, uniform(rng, 1, std::min(n, 4)));
}

// Random paragraph that may split, may have empty words, may be empty.
inline GaussParagraph random_loose_paragraph(Rng& rng, int max_n) {
    const int n = uniform(rng, 0, max_n);
    const int k = uniform(rng, n == 0 ? 0 : 1, std::max(n, 1));
    if (k == 0) return GaussParagraph();
    std::vector<int> tokens(static_cast<size_t>(2 * n));
    std::iota(tokens.begin(), tokens.end(), 0);
    std::shuffle(tokens.begin(), tokens.end(), rng);
    std::vector<int> lengths(static_cast<size_t>(k), 0);
    for (int pair = 0; pair < n; ++pair)
        lengths[static_cast<size_t>(uniform(rng, 0, k - 1))] += 2;
    return assemble_paragraph(tokens, lengths, random_signs(rng, n));
}

inline GaussCode random_code(Rng& rng, int m) {
    std::vector<CodeSymbol> symbols;
    for (int i = 1; i <= m; ++i) {
        symbols.push_back({i, 1});
        symbols.push_back({i, -1});
    }
    std::shuffle(symbols.begin(), symbols.end(), rng);
    return GaussCode(std::move(symbols));
}

inline GaussDiagram random_diagram(Rng& rng, int max_arrows, int max_circles) {
    const int n = uniform(rng, 0, max_arrows);
    const int k = uniform(rng, 1, max_circles);
    std::vector<std::pair<int, End>> tokens;
    for (int a = 0; a < n; ++a) {
        tokens.emplace_back(a, End::tail);
        tokens.emplace_back(a, End::head);
    }
    std::shuffle(tokens.begin(), tokens.end(), rng);
    std::vector<std::vector<Slot>> circles(static_cast<size_t>(k));
    std::vector<Arrow> arrows(static_cast<size_t>(n));
    for (Arrow& a : arrows) a.sign = uniform(rng, 0, 1) ? 1 : -1;
    for (const auto& [arrow, end] : tokens) {
        const int c = uniform(rng, 0, k - 1);
        const SlotRef ref{c, static_cast<int>(circles[static_cast<size_t>(c)].size())};
        circles[static_cast<size_t>(c)].push_back({arrow, end});
        (end == End::tail ? arrows[static_cast<size_t>(arrow)].tail
                          : arrows[static_cast<size_t>(arrow)].head) = ref;
    }
    return GaussDiagram(std::move(circles), std::move(arrows));
}

// Random presentation whose graph components all have chi 0 or 1: a forest
// per class plus an optional cycle-closing edge, conjugators up to
// max_conj_len letters over all generators.
inline WirtingerPresentation random_realizable_presentation(Rng& rng, int max_gens, int max_conj_len) {
    const int n = uniform(rng, 1, max_gens);
    std::vector<int> vertices(static_cast<size_t>(n));
    std::iota(vertices.begin(), vertices.end(), 0);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    const int class_count = uniform(rng, 1, std::min(n, 3));

    std::vector<std::vector<int>> classes(static_cast<size_t>(class_count));
    for (int v = 0; v < n; ++v)
        classes[static_cast<size_t>(v < class_count ? v : uniform(rng, 0, class_count - 1))]
            .push_back(vertices[static_cast<size_t>(v)]);

    const auto random_word = [&] {
        std::vector<GeneratorPower> w;
        const int len = uniform(rng, 0, max_conj_len);
        for (int i = 0; i < len; ++i)
            w.push_back({uniform(rng, 0, n - 1), uniform(rng, 0, 1) ? 1 : -1});
        return w;
    };

    std::vector<Relator> relators;
    for (const auto& cls : classes) {
        for (size_t i = 1; i < cls.size(); ++i) {
            const int parent = cls[static_cast<size_t>(uniform(rng, 0, static_cast<int>(i) - 1))];
            if (uniform(rng, 0, 1))
                relators.push_back({cls[i], parent, random_word()});
            else
                relators.push_back({parent, cls[i], random_word()});
        }
        if (uniform(rng, 0, 9) < 7) {
            // Close one cycle (possibly a loop): chi drops from 1 to 0.
            const int u = cls[static_cast<size_t>(uniform(rng, 0, static_cast<int>(cls.size()) - 1))];
            const int v = cls[static_cast<size_t>(uniform(rng, 0, static_cast<int>(cls.size()) - 1))];
            relators.push_back({u, v, random_word()});
        }
    }
    std::shuffle(relators.begin(), relators.end(), rng);

    std::vector<std::string> names;
    for (int g = 0; g < n; ++g)
        names.push_back(default_generator_name(g));
    return WirtingerPresentation(std::move(names), std::move(relators));
}

// Every paragraph with exactly n crossings spread over k words: all ordered
// even compositions, all arrangements of the 2n distinct letters, all sign
// vectors. The callback may see splittable instances; callers filter.
inline void for_each_paragraph(int n, int k, const std::function<void(const GaussParagraph&)>& fn) {
    std::vector<std::vector<int>> compositions;
    std::vector<int> parts;
    const std::function<void(int, int)> compose = [&](int remaining, int slots) {
        if (slots == 1) {
            if (remaining >= 2 && remaining % 2 == 0) {
                parts.push_back(remaining);
                compositions.push_back(parts);
                parts.pop_back();
            }
            return;
        }
        for (int len = 2; len <= remaining - 2 * (slots - 1); len += 2) {
            parts.push_back(len);
            compose(remaining - len, slots - 1);
            parts.pop_back();
        }
    };
    compose(2 * n, k);

    std::vector<int> tokens(static_cast<size_t>(2 * n));
    std::iota(tokens.begin(), tokens.end(), 0);
    std::vector<int> signs(static_cast<size_t>(n), 1);
    do {
        for (const auto& lengths : compositions) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                for (int i = 0; i < n; ++i)
                    signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
                fn(assemble_paragraph(tokens, lengths, signs));
            }
        }
    } while (std::next_permutation(tokens.begin(), tokens.end()));
}

// Occurrence-set oracle for beta, built from explicit position sets.
inline int beta_naive(const GaussCode& w, int i, int j) {
    const int len = w.size();
    const auto interval_set = [&](int index, bool closed) {
        std::set<int> out;
        const int from = w.position(index, +1);
        const int to = w.position(index, -1);
        if (closed) {
            out.insert(from);
            out.insert(to);
        }
        for (int t = (from + 1) % len; t != to; t = (t + 1) % len)
            out.insert(t);
        return out;
    };
    const std::set<int> bar_i = interval_set(i, true);
    const std::set<int> s_j = interval_set(j, false);
    int sum = 0;
    for (int t : bar_i)
        if (s_j.count(t)) sum += w.symbols()[static_cast<size_t>(t)].sup;
    return sum;
}

// Plain depth-first homomorphism count: assign generators in index order and
// check each relator as soon as its highest generator is assigned.
inline std::uint64_t count_homomorphisms_naive(const WirtingerPresentation& p, const FiniteGroupTable& g) {
    const int n = p.generator_count();
    std::vector<std::vector<const Relator*>> due(static_cast<size_t>(n) + 1);
    for (const Relator& r : p.relators()) {
        int highest = std::max(r.target, r.source);
        for (const GeneratorPower& l : r.conjugator) highest = std::max(highest, l.gen);
        due[static_cast<size_t>(highest) + 1].push_back(&r);
    }
    std::vector<int> image(static_cast<size_t>(n), 0);
    const std::function<std::uint64_t(int)> descend = [&](int depth) -> std::uint64_t {
        for (const Relator* r : due[static_cast<size_t>(depth)]) {
            int w = g.identity();
            for (const GeneratorPower& l : r->conjugator) {
                const int img = image[static_cast<size_t>(l.gen)];
                w = g.mul(w, l.exp > 0 ? img : g.inv(img));
            }
            const int rhs = g.mul(g.mul(g.inv(w), image[static_cast<size_t>(r->source)]), w);
            if (image[static_cast<size_t>(r->target)] != rhs) return 0;
        }
        if (depth == n) return 1;
        std::uint64_t total = 0;
        for (int val = 0; val < g.order(); ++val) {
            image[static_cast<size_t>(depth)] = val;
            total += descend(depth + 1);
        }
        return total;
    };
    return descend(0);
}

template <typename T>
inline bool cyclically_equal(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t shift = 0; shift < a.size(); ++shift) {
        bool match = true;
        for (size_t t = 0; t < a.size() && match; ++t)
            match = a[t] == b[(t + shift) % b.size()];
        if (match) return true;
    }
    return false;
}

// Face cycles rendered one arc per string, for comparison up to rotation.
inline std::vector<std::string> face_arc_strings(const GaussParagraph& p, const std::vector<DirectedArc>& face) {
    const OccurrenceIndex ix = index_occurrences(p);
    const auto letter = [&](int occ) {
        const Letter l = ix.letter_of[static_cast<size_t>(occ)];
        std::string s = std::to_string(l.index);
        if (l.role == Role::under) s += p.sign(l.index) > 0 ? '+' : '-';
        return s;
    };
    std::vector<std::string> out;
    for (const DirectedArc& a : face) {
        const int from = a.dir > 0 ? a.edge : ix.next_occ[static_cast<size_t>(a.edge)];
        const int to = a.dir > 0 ? ix.next_occ[static_cast<size_t>(a.edge)] : a.edge;
        out.push_back("(" + letter(from) + " " + letter(to) + ")" + (a.dir > 0 ? "+" : "-"));
    }
    return out;
}

} // namespace gausslink::testing
