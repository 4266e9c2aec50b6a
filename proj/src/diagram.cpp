#include "gausslink/diagram.hpp"

#include <stdexcept>
#include <string>

namespace gausslink {

GaussDiagram::GaussDiagram(std::vector<std::vector<Slot>> circles, std::vector<Arrow> arrows)
    : circles_(std::move(circles)), arrows_(std::move(arrows)) {
    const int n = static_cast<int>(arrows_.size());
    std::vector<int> tail_seen(static_cast<size_t>(n), 0);
    std::vector<int> head_seen(static_cast<size_t>(n), 0);
    for (int c = 0; c < circle_count(); ++c) {
        const auto& circle = circles_[static_cast<size_t>(c)];
        for (int pos = 0; pos < static_cast<int>(circle.size()); ++pos) {
            const Slot& s = circle[static_cast<size_t>(pos)];
            if (s.arrow < 0 || s.arrow >= n)
                throw std::invalid_argument("slot references unknown arrow");
            const Arrow& a = arrows_[static_cast<size_t>(s.arrow)];
            const SlotRef ref{c, pos};
            const SlotRef& expect = (s.end == End::tail) ? a.tail : a.head;
            if (expect != ref)
                throw std::invalid_argument("arrow endpoint does not match its slot");
            auto& seen = (s.end == End::tail) ? tail_seen : head_seen;
            ++seen[static_cast<size_t>(s.arrow)];
        }
    }
    for (int a = 0; a < n; ++a) {
        if (tail_seen[static_cast<size_t>(a)] != 1 || head_seen[static_cast<size_t>(a)] != 1)
            throw std::invalid_argument("arrow " + std::to_string(a) + " must have exactly one tail and one head");
        if (arrows_[static_cast<size_t>(a)].tail == arrows_[static_cast<size_t>(a)].head)
            throw std::invalid_argument("arrow tail and head coincide");
        const int s = arrows_[static_cast<size_t>(a)].sign;
        if (s != 1 && s != -1)
            throw std::invalid_argument("arrow sign must be +1 or -1");
    }
}

GaussDiagram paragraph_to_diagram(const GaussParagraph& p) {
    const int n = p.crossing_count();
    std::vector<std::vector<Slot>> circles(static_cast<size_t>(p.word_count()));
    std::vector<Arrow> arrows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        arrows[static_cast<size_t>(i)].sign = p.sign(i + 1);
    for (int w = 0; w < p.word_count(); ++w) {
        const auto& word = p.word(w);
        auto& circle = circles[static_cast<size_t>(w)];
        for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
            const Letter& l = word[static_cast<size_t>(pos)];
            const int a = l.index - 1;
            if (l.role == Role::over) {
                circle.push_back({a, End::tail});
                arrows[static_cast<size_t>(a)].tail = {w, pos};
            } else {
                circle.push_back({a, End::head});
                arrows[static_cast<size_t>(a)].head = {w, pos};
            }
        }
    }
    return GaussDiagram(std::move(circles), std::move(arrows));
}

GaussParagraph diagram_to_paragraph(const GaussDiagram& d) {
    std::vector<std::vector<Letter>> words;
    words.reserve(static_cast<size_t>(d.circle_count()));
    for (const auto& circle : d.circles()) {
        std::vector<Letter> word;
        word.reserve(circle.size());
        for (const Slot& s : circle)
            word.push_back({s.arrow + 1, s.end == End::tail ? Role::over : Role::under});
        words.push_back(std::move(word));
    }
    std::vector<int> signs;
    signs.reserve(static_cast<size_t>(d.arrow_count()));
    for (const Arrow& a : d.arrows())
        signs.push_back(a.sign);
    return GaussParagraph(std::move(words), std::move(signs));
}

} // namespace gausslink
