#include "gausslink/wirtinger.hpp"

#include "gausslink/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gausslink {

namespace {

std::vector<GeneratorPower> inverse_word(const std::vector<GeneratorPower>& w) {
    std::vector<GeneratorPower> out(w.rbegin(), w.rend());
    for (GeneratorPower& l : out) l.exp = -l.exp;
    return out;
}

// Orient a stored relator so that it reads m_target = w^{-1} m_source w with
// the requested target; flipping swaps the endpoints and inverts w.
Relator oriented(const Relator& r, int target) {
    if (r.target == target || r.target == r.source) return r;
    if (r.source != target)
        throw std::logic_error("relator does not touch requested vertex");
    return {r.source, r.target, inverse_word(r.conjugator)};
}

std::string word_text(const std::vector<std::string>& names, const std::vector<GeneratorPower>& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const GeneratorPower& l : w) {
        if (!out.empty()) out += ' ';
        out += names[static_cast<size_t>(l.gen)];
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

std::string relator_text(const std::vector<std::string>& names, const Relator& r) {
    std::string out = names[static_cast<size_t>(r.target)] + " = ";
    if (r.conjugator.empty())
        return out + names[static_cast<size_t>(r.source)];
    return out + "(" + word_text(names, r.conjugator) + ")^-1 " +
           names[static_cast<size_t>(r.source)] + " (" + word_text(names, r.conjugator) + ")";
}

struct VertexUnionFind {
    std::vector<int> parent;

    explicit VertexUnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

PresentationGraph graph_of(int n, const std::vector<Relator>& relators) {
    PresentationGraph g;
    g.vertex_count = n;
    VertexUnionFind uf(n);
    for (int q = 0; q < static_cast<int>(relators.size()); ++q) {
        const Relator& r = relators[static_cast<size_t>(q)];
        g.edges.push_back({r.target, r.source, q});
        uf.unite(r.target, r.source);
    }
    g.component_of.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int root = uf.find(v);
        if (g.component_of[static_cast<size_t>(root)] < 0) {
            g.component_of[static_cast<size_t>(root)] = g.component_count++;
            g.component_vertices.push_back(0);
            g.component_edges.push_back(0);
        }
        g.component_of[static_cast<size_t>(v)] = g.component_of[static_cast<size_t>(root)];
        ++g.component_vertices[static_cast<size_t>(g.component_of[static_cast<size_t>(v)])];
    }
    for (const auto& e : g.edges)
        ++g.component_edges[static_cast<size_t>(g.component_of[static_cast<size_t>(e.u)])];
    for (int c = 0; c < g.component_count; ++c)
        g.component_chi.push_back(g.component_vertices[static_cast<size_t>(c)] -
                                  g.component_edges[static_cast<size_t>(c)]);
    return g;
}

// Edge ids (positions in `edges`) forming the unique cycle of a chi = 0
// component, found by pruning leaves.
std::vector<char> cycle_edge_mask(int n, const std::vector<PresentationGraph::Edge>& edges) {
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (const auto& e : edges) {
        ++degree[static_cast<size_t>(e.u)];
        ++degree[static_cast<size_t>(e.v)];
    }
    std::vector<char> edge_removed(edges.size(), 0);
    std::vector<char> vertex_removed(static_cast<size_t>(n), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (vertex_removed[static_cast<size_t>(v)] || degree[static_cast<size_t>(v)] != 1) continue;
            for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
                if (edge_removed[static_cast<size_t>(e)]) continue;
                if (edges[static_cast<size_t>(e)].u != v && edges[static_cast<size_t>(e)].v != v) continue;
                edge_removed[static_cast<size_t>(e)] = 1;
                --degree[static_cast<size_t>(edges[static_cast<size_t>(e)].u)];
                --degree[static_cast<size_t>(edges[static_cast<size_t>(e)].v)];
                break;
            }
            vertex_removed[static_cast<size_t>(v)] = 1;
            changed = true;
        }
    }
    std::vector<char> in_cycle(edges.size(), 0);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        in_cycle[static_cast<size_t>(e)] = !edge_removed[static_cast<size_t>(e)];
    return in_cycle;
}

struct CycleWalk {
    std::vector<int> vertices; // v_0 .. v_{c-1}, cycle order
    std::vector<int> edges;    // edge t links v_t to v_{t+1 mod c}
};

// Walk a simple cycle starting at its lowest vertex. Prefers the edge whose
// relator already points out of the start vertex so that presentations
// already in cyclic form come back unchanged.
CycleWalk walk_cycle(const std::vector<PresentationGraph::Edge>& edges,
                     const std::vector<int>& edge_ids,
                     const std::vector<Relator>& relators) {
    CycleWalk walk;
    int v0 = edges[static_cast<size_t>(edge_ids.front())].u;
    for (int e : edge_ids) {
        v0 = std::min(v0, edges[static_cast<size_t>(e)].u);
        v0 = std::min(v0, edges[static_cast<size_t>(e)].v);
    }

    std::vector<int> at_start;
    for (int e : edge_ids)
        if (edges[static_cast<size_t>(e)].u == v0 || edges[static_cast<size_t>(e)].v == v0)
            at_start.push_back(e);
    int first = at_start.front();
    for (int e : at_start) {
        const bool points_out = relators[static_cast<size_t>(edges[static_cast<size_t>(e)].relator)].target == v0;
        const bool best_out = relators[static_cast<size_t>(edges[static_cast<size_t>(first)].relator)].target == v0;
        if (points_out != best_out ? points_out : e < first) first = e;
    }

    int prev_edge = -1;
    int current = v0;
    int next_edge = first;
    do {
        const auto& e = edges[static_cast<size_t>(next_edge)];
        walk.vertices.push_back(current);
        walk.edges.push_back(next_edge);
        current = (e.u == current) ? e.v : e.u;
        prev_edge = next_edge;
        next_edge = -1;
        for (int cand : edge_ids) {
            if (cand == prev_edge) continue;
            const auto& ce = edges[static_cast<size_t>(cand)];
            if (ce.u == current || ce.v == current) {
                next_edge = cand;
                break;
            }
        }
    } while (current != v0 && next_edge >= 0);
    if (current != v0)
        throw std::logic_error("cycle walk did not close");
    return walk;
}

std::string fresh_name(std::set<std::string>& used, int& counter) {
    for (;;) {
        const std::string name = default_generator_name(counter++);
        if (used.insert(name).second) return name;
    }
}

bool is_trivial_padding(const Relator& r) {
    return r.target == r.source && r.conjugator.size() == 1 &&
           r.conjugator.front().gen == r.target && r.conjugator.front().exp == 1;
}

// Renumber generators to `order` (old ids in new order), remapping relators.
WirtingerPresentation renumbered(const std::vector<std::string>& names,
                                 const std::vector<Relator>& relators,
                                 const std::vector<int>& order) {
    std::vector<int> new_of_old(names.size(), -1);
    std::vector<std::string> new_names;
    for (int t = 0; t < static_cast<int>(order.size()); ++t) {
        new_of_old[static_cast<size_t>(order[static_cast<size_t>(t)])] = t;
        new_names.push_back(names[static_cast<size_t>(order[static_cast<size_t>(t)])]);
    }
    std::vector<Relator> new_relators = relators;
    for (Relator& r : new_relators) {
        r.target = new_of_old[static_cast<size_t>(r.target)];
        r.source = new_of_old[static_cast<size_t>(r.source)];
        for (GeneratorPower& l : r.conjugator)
            l.gen = new_of_old[static_cast<size_t>(l.gen)];
    }
    return WirtingerPresentation(std::move(new_names), std::move(new_relators));
}

} // namespace

std::string default_generator_name(int g) {
    if (g < 26) return std::string(1, static_cast<char>('a' + g));
    return "g" + std::to_string(g + 1);
}

WirtingerPresentation::WirtingerPresentation(std::vector<std::string> generators,
                                             std::vector<Relator> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const std::string& name : generators_) {
        if (name.empty())
            throw std::invalid_argument("generator name must be non-empty");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate generator name: " + name);
    }
    const int n = generator_count();
    for (const Relator& r : relators_) {
        if (r.target < 0 || r.target >= n || r.source < 0 || r.source >= n)
            throw std::invalid_argument("relator endpoint out of range");
        for (const GeneratorPower& l : r.conjugator) {
            if (l.gen < 0 || l.gen >= n)
                throw std::invalid_argument("conjugator letter out of range");
            if (l.exp != 1 && l.exp != -1)
                throw std::invalid_argument("conjugator exponent must be +1 or -1");
        }
    }
}

PresentationGraph build_graph(const WirtingerPresentation& p) {
    return graph_of(p.generator_count(), p.relators());
}

bool is_realizable(const WirtingerPresentation& p) {
    const PresentationGraph g = build_graph(p);
    for (int chi : g.component_chi)
        if (chi != 0 && chi != 1) return false;
    return true;
}

int abelianization_rank(const WirtingerPresentation& p) {
    return build_graph(p).component_count;
}

WirtingerPresentation group_of_diagram(const GaussDiagram& d) {
    std::vector<std::string> names;
    std::vector<std::vector<int>> arc_of(static_cast<size_t>(d.circle_count()));
    std::vector<std::vector<int>> head_positions(static_cast<size_t>(d.circle_count()));

    for (int c = 0; c < d.circle_count(); ++c) {
        const auto& circle = d.circle(c);
        auto& heads = head_positions[static_cast<size_t>(c)];
        for (int pos = 0; pos < static_cast<int>(circle.size()); ++pos)
            if (circle[static_cast<size_t>(pos)].end == End::head)
                heads.push_back(pos);

        auto& arcs = arc_of[static_cast<size_t>(c)];
        arcs.assign(circle.size(), -1);
        if (heads.empty()) {
            // Head-free circle: a single arc, one generator, no relation.
            const int gen = static_cast<int>(names.size());
            names.push_back(default_generator_name(gen));
            arcs.assign(std::max<size_t>(circle.size(), 1), gen);
            continue;
        }
        const int base = static_cast<int>(names.size());
        for (size_t j = 0; j < heads.size(); ++j)
            names.push_back(default_generator_name(base + static_cast<int>(j)));
        // Arc j ends at heads[j]; a slot belongs to the first head at or
        // after it in reading order.
        for (int pos = 0; pos < static_cast<int>(circle.size()); ++pos) {
            const auto it = std::lower_bound(heads.begin(), heads.end(), pos);
            const size_t j = (it == heads.end()) ? 0 : static_cast<size_t>(it - heads.begin());
            arcs[static_cast<size_t>(pos)] = base + static_cast<int>(j);
        }
    }

    std::vector<Relator> relators;
    for (int a = 0; a < d.arrow_count(); ++a) {
        const Arrow& arrow = d.arrow(a);
        const int tail_arc = arc_of[static_cast<size_t>(arrow.tail.circle)][static_cast<size_t>(arrow.tail.pos)];
        const auto& head_circle = arc_of[static_cast<size_t>(arrow.head.circle)];
        const int before = head_circle[static_cast<size_t>(arrow.head.pos)];
        const int after = head_circle[static_cast<size_t>((arrow.head.pos + 1) % head_circle.size())];
        relators.push_back({after, before, {{tail_arc, arrow.sign}}});
    }
    return WirtingerPresentation(std::move(names), std::move(relators));
}

WirtingerPresentation to_cyclic_form(const WirtingerPresentation& p, std::vector<std::string>* trace) {
    if (!is_realizable(p))
        throw NotRealizableError("a component of the presentation graph has Euler characteristic < 0");

    const std::vector<std::string>& names = p.generators();
    std::vector<Relator> relators = p.relators();

    // Pad chi = 1 components with a trivial loop at their lowest vertex.
    {
        const PresentationGraph g = build_graph(p);
        std::vector<int> lowest(static_cast<size_t>(g.component_count), -1);
        for (int v = p.generator_count() - 1; v >= 0; --v)
            lowest[static_cast<size_t>(g.component_of[static_cast<size_t>(v)])] = v;
        for (int c = 0; c < g.component_count; ++c) {
            if (g.component_chi[static_cast<size_t>(c)] != 1) continue;
            const int v = lowest[static_cast<size_t>(c)];
            relators.push_back({v, v, {{v, 1}}});
            if (trace)
                trace->push_back("pad: added trivial loop " + relator_text(names, relators.back()));
        }
    }

    const int n = p.generator_count();

    // Absorb tree edges into each component's cycle until it is simple.
    for (;;) {
        const PresentationGraph cur = graph_of(n, relators);
        const std::vector<char> in_cycle = cycle_edge_mask(n, cur.edges);

        int j = -1, tree_edge = -1, cycle_edge = -1;
        for (int v = 0; v < n && j < 0; ++v) {
            int te = -1, ce = -1;
            bool on_cycle = false;
            for (int e = 0; e < static_cast<int>(cur.edges.size()); ++e) {
                const auto& edge = cur.edges[static_cast<size_t>(e)];
                if (edge.u != v && edge.v != v) continue;
                if (in_cycle[static_cast<size_t>(e)]) {
                    on_cycle = true;
                    if (ce < 0) ce = e;
                } else if (te < 0) {
                    te = e;
                }
            }
            if (on_cycle && te >= 0) {
                j = v;
                tree_edge = te;
                cycle_edge = ce;
            }
        }
        if (j < 0) break;

        const auto& ce = cur.edges[static_cast<size_t>(cycle_edge)];
        const auto& te = cur.edges[static_cast<size_t>(tree_edge)];
        const int i = (ce.u == j) ? ce.v : ce.u;
        const int k = (te.u == j) ? te.v : te.u;
        const Relator rq = oriented(relators[static_cast<size_t>(ce.relator)], i); // m_i = wq^-1 m_j wq
        const Relator rp = oriented(relators[static_cast<size_t>(te.relator)], j); // m_j = wp^-1 m_k wp
        std::vector<GeneratorPower> w = rp.conjugator;
        w.insert(w.end(), rq.conjugator.begin(), rq.conjugator.end());
        const Relator replacement{i, k, std::move(w)};
        if (trace)
            trace->push_back("rewrite: " + relator_text(names, relators[static_cast<size_t>(ce.relator)]) +
                             "  ->  " + relator_text(names, replacement));
        relators[static_cast<size_t>(ce.relator)] = replacement;
    }

    // Renumber so each class is consecutive in cycle order and orient every
    // relator from position t to position t+1.
    const PresentationGraph fin = graph_of(n, relators);
    std::vector<std::vector<int>> comp_edges(static_cast<size_t>(fin.component_count));
    for (int e = 0; e < static_cast<int>(fin.edges.size()); ++e)
        comp_edges[static_cast<size_t>(fin.component_of[static_cast<size_t>(fin.edges[static_cast<size_t>(e)].u)])]
            .push_back(e);

    std::vector<int> comp_order(static_cast<size_t>(fin.component_count));
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::vector<int> comp_lowest(static_cast<size_t>(fin.component_count), n);
    for (int v = n - 1; v >= 0; --v)
        comp_lowest[static_cast<size_t>(fin.component_of[static_cast<size_t>(v)])] = v;
    std::sort(comp_order.begin(), comp_order.end(),
              [&](int a, int b) { return comp_lowest[static_cast<size_t>(a)] < comp_lowest[static_cast<size_t>(b)]; });

    std::vector<int> order;
    std::vector<Relator> out_relators;
    for (int c : comp_order) {
        const CycleWalk walk = walk_cycle(fin.edges, comp_edges[static_cast<size_t>(c)], relators);
        const int len = static_cast<int>(walk.vertices.size());
        for (int t = 0; t < len; ++t) {
            order.push_back(walk.vertices[static_cast<size_t>(t)]);
            const int rel = fin.edges[static_cast<size_t>(walk.edges[static_cast<size_t>(t)])].relator;
            out_relators.push_back(oriented(relators[static_cast<size_t>(rel)],
                                            walk.vertices[static_cast<size_t>(t)]));
        }
    }
    return renumbered(names, out_relators, order);
}

CanonicalForm to_simple_form(const WirtingerPresentation& p, std::vector<std::string>* trace) {
    const PresentationGraph g = build_graph(p);
    for (int c = 0; c < g.component_count; ++c)
        if (g.component_chi[static_cast<size_t>(c)] != 0)
            throw std::invalid_argument("presentation is not in cyclic form");
    std::vector<int> degree(static_cast<size_t>(p.generator_count()), 0);
    for (const auto& e : g.edges) {
        ++degree[static_cast<size_t>(e.u)];
        ++degree[static_cast<size_t>(e.v)];
    }
    for (int d : degree)
        if (d != 2)
            throw std::invalid_argument("presentation is not in cyclic form");
    std::vector<std::vector<int>> comp_edges(static_cast<size_t>(g.component_count));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        comp_edges[static_cast<size_t>(g.component_of[static_cast<size_t>(g.edges[static_cast<size_t>(e)].u)])]
            .push_back(e);

    std::vector<std::string> names = p.generators();
    std::set<std::string> used(names.begin(), names.end());
    int name_counter = 0;

    std::vector<int> comp_order(static_cast<size_t>(g.component_count));
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::vector<int> comp_lowest(static_cast<size_t>(g.component_count), p.generator_count());
    for (int v = p.generator_count() - 1; v >= 0; --v)
        comp_lowest[static_cast<size_t>(g.component_of[static_cast<size_t>(v)])] = v;
    std::sort(comp_order.begin(), comp_order.end(),
              [&](int a, int b) { return comp_lowest[static_cast<size_t>(a)] < comp_lowest[static_cast<size_t>(b)]; });

    std::vector<Relator> out_relators;
    std::vector<std::vector<int>> classes;
    std::vector<int> order;

    for (int c : comp_order) {
        if (comp_edges[static_cast<size_t>(c)].empty() ||
            static_cast<int>(comp_edges[static_cast<size_t>(c)].size()) != g.component_vertices[static_cast<size_t>(c)])
            throw std::invalid_argument("presentation is not in cyclic form");
        const CycleWalk walk = walk_cycle(g.edges, comp_edges[static_cast<size_t>(c)], p.relators());
        if (static_cast<int>(walk.vertices.size()) != g.component_vertices[static_cast<size_t>(c)])
            throw std::invalid_argument("presentation is not in cyclic form");

        std::vector<int> cycle;
        const int len = static_cast<int>(walk.vertices.size());
        for (int t = 0; t < len; ++t) {
            const int vt = walk.vertices[static_cast<size_t>(t)];
            const int vnext = walk.vertices[static_cast<size_t>((t + 1) % len)];
            const int rel = g.edges[static_cast<size_t>(walk.edges[static_cast<size_t>(t)])].relator;
            Relator r = oriented(p.relators()[static_cast<size_t>(rel)], vt);

            cycle.push_back(vt);
            if (r.conjugator.empty()) {
                // m_i = m_j is m_i = m_j^-1 m_j m_j: already a single letter.
                r.conjugator.push_back({r.source, 1});
                if (trace)
                    trace->push_back("widen: empty conjugator rewritten as " + relator_text(names, r));
            }
            int current_target = vt;
            std::vector<GeneratorPower> w = r.conjugator;
            while (w.size() >= 2) {
                const GeneratorPower last = w.back();
                w.pop_back();
                const int fresh = static_cast<int>(names.size());
                names.push_back(fresh_name(used, name_counter));
                out_relators.push_back({current_target, fresh, {last}});
                if (trace)
                    trace->push_back("peel: new generator " + names[static_cast<size_t>(fresh)] +
                                     ", relator " + relator_text(names, out_relators.back()));
                cycle.push_back(fresh);
                current_target = fresh;
            }
            out_relators.push_back({current_target, vnext, w});
        }
        order.insert(order.end(), cycle.begin(), cycle.end());
        classes.push_back(std::move(cycle));
    }

    CanonicalForm form;
    form.presentation = renumbered(names, out_relators, order);
    std::vector<int> new_of_old(names.size(), -1);
    for (int t = 0; t < static_cast<int>(order.size()); ++t)
        new_of_old[static_cast<size_t>(order[static_cast<size_t>(t)])] = t;
    for (auto& cls : classes)
        for (int& v : cls)
            v = new_of_old[static_cast<size_t>(v)];
    form.classes = std::move(classes);

    for (const Relator& r : form.presentation.relators())
        if (r.conjugator.size() != 1)
            throw std::logic_error("simple form left a multi-letter conjugator");
    return form;
}

GaussDiagram realize(const WirtingerPresentation& p, std::vector<std::string>* trace) {
    const CanonicalForm form = to_simple_form(to_cyclic_form(p, trace), trace);
    const WirtingerPresentation& pres = form.presentation;

    // Class and cycle position of every generator.
    std::vector<int> class_of(static_cast<size_t>(pres.generator_count()), -1);
    for (int c = 0; c < static_cast<int>(form.classes.size()); ++c)
        for (int v : form.classes[static_cast<size_t>(c)])
            class_of[static_cast<size_t>(v)] = c;

    // In canonical form each generator is the target of exactly one relator.
    std::vector<int> relator_of_target(static_cast<size_t>(pres.generator_count()), -1);
    for (int q = 0; q < pres.relator_count(); ++q)
        relator_of_target[static_cast<size_t>(pres.relators()[static_cast<size_t>(q)].target)] = q;

    std::vector<int> arrow_of(static_cast<size_t>(pres.relator_count()), -1);
    std::vector<Arrow> arrows;
    for (int q = 0; q < pres.relator_count(); ++q) {
        if (is_trivial_padding(pres.relators()[static_cast<size_t>(q)])) {
            if (trace)
                trace->push_back("emit: dropped trivial relator " +
                                 relator_text(pres.generators(), pres.relators()[static_cast<size_t>(q)]));
            continue;
        }
        arrow_of[static_cast<size_t>(q)] = static_cast<int>(arrows.size());
        arrows.push_back({{}, {}, pres.relators()[static_cast<size_t>(q)].conjugator.front().exp});
    }

    // Tails grouped by the conjugator's arc, ascending relator order.
    std::vector<std::vector<int>> tails_on(static_cast<size_t>(pres.generator_count()));
    for (int q = 0; q < pres.relator_count(); ++q)
        if (arrow_of[static_cast<size_t>(q)] >= 0)
            tails_on[static_cast<size_t>(pres.relators()[static_cast<size_t>(q)].conjugator.front().gen)]
                .push_back(q);

    std::vector<std::vector<Slot>> circles(form.classes.size());
    for (int c = 0; c < static_cast<int>(form.classes.size()); ++c) {
        const auto& cycle = form.classes[static_cast<size_t>(c)];
        const int len = static_cast<int>(cycle.size());
        auto& circle = circles[static_cast<size_t>(c)];
        // Arcs appear in descending cycle order so that reading the circle
        // reproduces each relator with its stored orientation.
        for (int t = len - 1; t >= 0; --t) {
            const int gen = cycle[static_cast<size_t>(t)];
            for (int q : tails_on[static_cast<size_t>(gen)]) {
                const int a = arrow_of[static_cast<size_t>(q)];
                arrows[static_cast<size_t>(a)].tail = {c, static_cast<int>(circle.size())};
                circle.push_back({a, End::tail});
            }
            const int prev_gen = cycle[static_cast<size_t>((t - 1 + len) % len)];
            const int q = relator_of_target[static_cast<size_t>(prev_gen)];
            const int a = arrow_of[static_cast<size_t>(q)];
            if (a >= 0) {
                arrows[static_cast<size_t>(a)].head = {c, static_cast<int>(circle.size())};
                circle.push_back({a, End::head});
            }
        }
    }
    return GaussDiagram(std::move(circles), std::move(arrows));
}

} // namespace gausslink
