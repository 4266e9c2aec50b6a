#pragma once

#include "gausslink/paragraph.hpp"

#include <vector>

namespace gausslink {

enum class End : unsigned char { tail, head };

// One endpoint slot on a circle, in reading (counterclockwise) order.
struct Slot {
    int arrow = 0; // 0-based arrow id
    End end = End::tail;

    friend bool operator==(const Slot&, const Slot&) = default;
};

struct SlotRef {
    int circle = 0;
    int pos = 0;

    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

// Arrow from the over strand to the under strand, with the crossing sign.
struct Arrow {
    SlotRef tail;
    SlotRef head;
    int sign = 1;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Oriented circles with signed arrows between slot points. Every slot is
// exactly one arrow end; tail and head of an arrow are distinct slots.
class GaussDiagram {
public:
    GaussDiagram() = default;
    GaussDiagram(std::vector<std::vector<Slot>> circles, std::vector<Arrow> arrows);

    int circle_count() const { return static_cast<int>(circles_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::vector<Slot>>& circles() const { return circles_; }
    const std::vector<Slot>& circle(int c) const { return circles_[static_cast<size_t>(c)]; }
    const Arrow& arrow(int a) const { return arrows_[static_cast<size_t>(a)]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<std::vector<Slot>> circles_;
    std::vector<Arrow> arrows_;
};

// Arrow i gets its tail at the over letter of crossing i and its head at the
// under letter; circle orders equal word orders.
GaussDiagram paragraph_to_diagram(const GaussParagraph& p);

// Read each circle in stored order: tails become plain letters, heads become
// signed letters. Inverse of paragraph_to_diagram.
GaussParagraph diagram_to_paragraph(const GaussDiagram& d);

} // namespace gausslink
