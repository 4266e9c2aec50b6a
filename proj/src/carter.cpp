#include "gausslink/carter.hpp"

#include <stdexcept>

namespace gausslink {

namespace {

std::string letter_text(const GaussParagraph& p, const Letter& l) {
    std::string out = std::to_string(l.index);
    if (l.role == Role::under)
        out += (p.sign(l.index) > 0) ? '+' : '-';
    return out;
}

} // namespace

CarterComplex build_carter(const GaussParagraph& p) {
    CarterComplex c;
    c.vertex_count = p.crossing_count();
    c.edge_count = p.letter_count();
    if (c.edge_count == 0) {
        // Only empty words (or no words at all): sphere convention.
        c.euler_characteristic = 2;
        c.genus = 0;
        return c;
    }

    const OccurrenceIndex ix = index_occurrences(p);
    const int edges = ix.total(); // edge id == occurrence id of its first letter
    const int arcs = 2 * edges;   // directed arc id = 2*edge + (dir < 0)

    // Walking a directed arc ends at an occurrence of some crossing i; the
    // trace continues from the partner occurrence of i. Arriving at the over
    // letter departs from the under letter with direction sign(i)*dir, and
    // arriving at the under letter departs from the over letter with
    // direction -sign(i)*dir. Departing with +1 takes the gap after the
    // partner occurrence, with -1 the gap before it.
    const auto successor = [&](int arc) {
        const int edge = arc >> 1;
        const int dir = (arc & 1) ? -1 : 1;
        const int arrival = (dir > 0) ? ix.next_occ[static_cast<size_t>(edge)] : edge;
        const Letter l = ix.letter_of[static_cast<size_t>(arrival)];
        const int s = p.sign(l.index);
        const int partner = (l.role == Role::over) ? ix.under_occ[static_cast<size_t>(l.index - 1)]
                                                   : ix.over_occ[static_cast<size_t>(l.index - 1)];
        const int out = (l.role == Role::over) ? s * dir : -s * dir;
        const int out_edge = (out > 0) ? partner : ix.prev_occ[static_cast<size_t>(partner)];
        return (out_edge << 1) | (out < 0 ? 1 : 0);
    };

    std::vector<char> consumed(static_cast<size_t>(arcs), 0);
    int consumed_total = 0;
    for (int start = 0; start < arcs; ++start) {
        if (consumed[static_cast<size_t>(start)]) continue;
        std::vector<DirectedArc> face;
        int arc = start;
        do {
            if (consumed[static_cast<size_t>(arc)])
                throw std::logic_error("face tracing revisited a directed arc");
            consumed[static_cast<size_t>(arc)] = 1;
            ++consumed_total;
            face.push_back({arc >> 1, (arc & 1) ? -1 : 1});
            arc = successor(arc);
        } while (arc != start);
        c.faces.push_back(std::move(face));
    }
    if (consumed_total != arcs)
        throw std::logic_error("face tracing did not consume every directed arc");

    const int chi = c.vertex_count - c.edge_count + static_cast<int>(c.faces.size());
    if (chi % 2 != 0)
        throw std::logic_error("odd Euler characteristic: face tracing is inconsistent");
    c.euler_characteristic = chi;
    c.genus = (2 - chi) / 2;
    if (c.genus < 0)
        throw std::logic_error("negative genus: face tracing is inconsistent");
    return c;
}

int genus(const CarterComplex& c) { return c.genus; }

std::string face_cycle_text(const GaussParagraph& p, const std::vector<DirectedArc>& face) {
    const OccurrenceIndex ix = index_occurrences(p);
    std::string out;
    for (const DirectedArc& a : face) {
        const int from = (a.dir > 0) ? a.edge : ix.next_occ[static_cast<size_t>(a.edge)];
        const int to = (a.dir > 0) ? ix.next_occ[static_cast<size_t>(a.edge)] : a.edge;
        if (!out.empty()) out += ' ';
        out += '(';
        out += letter_text(p, ix.letter_of[static_cast<size_t>(from)]);
        out += ' ';
        out += letter_text(p, ix.letter_of[static_cast<size_t>(to)]);
        out += ')';
        out += (a.dir > 0) ? '+' : '-';
    }
    return out;
}

GenusReport genus_report(const GaussParagraph& p) {
    GenusReport report;
    for (ParagraphComponent& comp : split_components(p)) {
        GenusComponent gc;
        gc.complex = build_carter(comp.paragraph);
        gc.component = std::move(comp);
        report.total_genus += gc.complex.genus;
        report.planar = report.planar && gc.complex.genus == 0;
        report.components.push_back(std::move(gc));
    }
    return report;
}

} // namespace gausslink
