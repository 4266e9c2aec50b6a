#pragma once

#include "gausslink/paragraph.hpp"

#include <string>
#include <vector>

namespace gausslink {

// A directed traversal of one edge of the surface graph. Edge e is the gap
// between consecutive letters of a cyclic word, identified by the occurrence
// id of its first letter; dir = +1 travels in word order, -1 against it.
struct DirectedArc {
    int edge = 0;
    int dir = 1;

    friend bool operator==(const DirectedArc&, const DirectedArc&) = default;
};

// Closed oriented surface carrying the diagram of a non-splittable paragraph:
// one vertex per crossing, one edge per adjacent letter pair (2n edges), and
// the faces selected by the left-turn tracing rules. Crossing-free circles
// use the sphere convention (chi = 2, no edges or faces).
struct CarterComplex {
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<std::vector<DirectedArc>> faces;
    int euler_characteristic = 2;
    int genus = 0;
};

// Trace all faces. Requires a paragraph that does not split (callers split
// first); degenerate words such as "1 1+" need no special casing.
CarterComplex build_carter(const GaussParagraph& p);

int genus(const CarterComplex& c);

// Face cycle in (ab)+/- notation: each arc printed as its two letters in
// travel order with the word-order agreement sign, e.g. "(1 2+)+ (2 1-)-".
std::string face_cycle_text(const GaussParagraph& p, const std::vector<DirectedArc>& face);

struct GenusComponent {
    ParagraphComponent component;
    CarterComplex complex;
};

// Split, build the surface of every component, and aggregate: planar iff all
// components have genus 0; total genus is the sum over components.
struct GenusReport {
    std::vector<GenusComponent> components;
    int total_genus = 0;
    bool planar = true;
};

GenusReport genus_report(const GaussParagraph& p);

inline bool is_planar_carter(const GaussParagraph& p) { return genus_report(p).planar; }

} // namespace gausslink
