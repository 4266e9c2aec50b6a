#pragma once

#include "gausslink/diagram.hpp"

#include <string>
#include <vector>

namespace gausslink {

// One letter of a conjugating word, generator with exponent +1 or -1.
struct GeneratorPower {
    int gen = 0; // 0-based generator id
    int exp = 1;

    friend bool operator==(const GeneratorPower&, const GeneratorPower&) = default;
};

// m_target = conjugator^{-1} m_source conjugator
struct Relator {
    int target = 0;
    int source = 0;
    std::vector<GeneratorPower> conjugator;

    friend bool operator==(const Relator&, const Relator&) = default;
};

class WirtingerPresentation {
public:
    WirtingerPresentation() = default;
    WirtingerPresentation(std::vector<std::string> generators, std::vector<Relator> relators);

    int generator_count() const { return static_cast<int>(generators_.size()); }
    int relator_count() const { return static_cast<int>(relators_.size()); }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::string& generator_name(int g) const { return generators_[static_cast<size_t>(g)]; }
    const std::vector<Relator>& relators() const { return relators_; }

    friend bool operator==(const WirtingerPresentation&, const WirtingerPresentation&) = default;

private:
    std::vector<std::string> generators_;
    std::vector<Relator> relators_;
};

// Graph with one vertex per generator and one edge (target, source) per
// relator; loops and multi-edges count. Components are conjugacy classes of
// generators; per-component Euler characteristic is V - E.
struct PresentationGraph {
    struct Edge {
        int u = 0;
        int v = 0;
        int relator = 0;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<int> component_of;        // per vertex, 0-based component id
    int component_count = 0;
    std::vector<int> component_vertices;  // per component
    std::vector<int> component_edges;     // per component
    std::vector<int> component_chi;       // per component, V - E
};

PresentationGraph build_graph(const WirtingerPresentation& p);

// True iff every component has Euler characteristic 0 or 1.
bool is_realizable(const WirtingerPresentation& p);

// Rank of the free abelian quotient = number of conjugacy classes.
int abelianization_rank(const WirtingerPresentation& p);

// One generator per arc (circles are cut at arrowheads; a head-free circle is
// a single arc with no relation), one relator per arrow: tail on arc a, head
// between arcs b and c in reading order, sign e, gives c = a^{-e} b a^{e}.
WirtingerPresentation group_of_diagram(const GaussDiagram& d);

// Rewrite so that within each class the relators link the generators in a
// single cycle (components with characteristic 1 first gain the trivial loop
// m_v = m_v^{-1} m_v m_v at their lowest vertex). Generators are renumbered
// class by class in cycle order. Throws NotRealizableError.
WirtingerPresentation to_cyclic_form(const WirtingerPresentation& p,
                                     std::vector<std::string>* trace = nullptr);

// Cyclic-form presentation in which every conjugator is a single generator
// letter, plus the class cycles (generator ids in cycle order).
struct CanonicalForm {
    WirtingerPresentation presentation;
    std::vector<std::vector<int>> classes;
};

// Peel multi-letter conjugators one letter at a time, adding one generator
// per peel; empty conjugators become self-conjugation by the source. Input
// must be in cyclic form.
CanonicalForm to_simple_form(const WirtingerPresentation& p,
                             std::vector<std::string>* trace = nullptr);

// Build a Gauss diagram whose group has the given presentation: one circle
// per class split into arcs in cycle order, one arrow per relator from the
// conjugator's arc to the boundary point of the linked arcs. Trivial padding
// relators are dropped during emission. Throws NotRealizableError.
GaussDiagram realize(const WirtingerPresentation& p,
                     std::vector<std::string>* trace = nullptr);

// Deterministic generator names: a..z, then g27, g28, ...
std::string default_generator_name(int g);

} // namespace gausslink
