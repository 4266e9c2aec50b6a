#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gausslink;
namespace tt = gausslink::testing;

namespace {

GaussParagraph parse(const std::string& text) { return parse_paragraph(text).paragraph; }
WirtingerPresentation pres(const std::string& text) { return parse_presentation(text); }

WirtingerPresentation group_of(const std::string& paragraph) {
    return group_of_diagram(paragraph_to_diagram(parse(paragraph)));
}

const char* kTrefoil = "gens a b c; rel b = a^-1 c a; rel c = b^-1 a b; rel a = c^-1 b c;";

std::vector<std::uint64_t> hom_profile(const WirtingerPresentation& p) {
    return {count_homomorphisms(p, FiniteGroupTable::symmetric(3)),
            count_homomorphisms(p, FiniteGroupTable::symmetric(4))};
}

} // namespace

TEST_CASE("group of the two-component torus example is Z^2") {
    const WirtingerPresentation p = group_of("1 2+ / 1- 2");
    CHECK(p.generator_count() == 2);
    CHECK(p.relator_count() == 2);
    CHECK(abelianization_rank(p) == 2);
    // Both relators say the two generators commute.
    CHECK(count_homomorphisms(p, FiniteGroupTable::symmetric(3)) == 18);

    const PresentationGraph g = build_graph(p);
    CHECK(g.component_count == 2);
    CHECK(g.component_chi == std::vector<int>{0, 0});
    CHECK(is_realizable(p));
}

TEST_CASE("a circle without arrowheads contributes a free generator") {
    const WirtingerPresentation p = group_of_diagram(paragraph_to_diagram(GaussParagraph({{}}, {})));
    CHECK(p.generator_count() == 1);
    CHECK(p.relator_count() == 0);
    CHECK(abelianization_rank(p) == 1);
    const PresentationGraph g = build_graph(p);
    CHECK(g.component_chi == std::vector<int>{1});
}

TEST_CASE("single-word two-crossing paragraph has a cyclic group presentation") {
    const WirtingerPresentation p = group_of("1 2 1+ 2+");
    CHECK(p.generator_count() == 2);
    CHECK(p.relator_count() == 2);
    CHECK(abelianization_rank(p) == 1);
}

TEST_CASE("presentation graph of the trefoil presentation") {
    const PresentationGraph g = build_graph(pres(kTrefoil));
    CHECK(g.vertex_count == 3);
    CHECK(g.edges.size() == 3);
    CHECK(g.component_count == 1);
    CHECK(g.component_chi == std::vector<int>{0});
    CHECK(is_realizable(pres(kTrefoil)));
    CHECK(abelianization_rank(pres(kTrefoil)) == 1);
}

TEST_CASE("two loops on one vertex are not realizable") {
    const WirtingerPresentation p = pres("gens a; rel a = a^-1 a a; rel a = a^-1 a a;");
    CHECK_FALSE(is_realizable(p));
    CHECK_THROWS_AS(to_cyclic_form(p), NotRealizableError);
    CHECK_THROWS_AS(realize(p), NotRealizableError);
}

TEST_CASE("cyclic form of an already-cyclic presentation keeps its shape") {
    const WirtingerPresentation before = pres(kTrefoil);
    const WirtingerPresentation after = to_cyclic_form(before);
    CHECK(after.generator_count() == 3);
    CHECK(after.relator_count() == 3);
    for (int q = 0; q < after.relator_count(); ++q) {
        const Relator& r = after.relators()[static_cast<size_t>(q)];
        CHECK(r.target == q);
        CHECK(r.source == (q + 1) % 3);
        CHECK(r.conjugator.size() == 1);
    }
    CHECK(hom_profile(after) == hom_profile(before));
    CHECK(abelianization_rank(after) == 1);
}

TEST_CASE("cyclic form pads a free generator with the trivial loop") {
    const WirtingerPresentation after = to_cyclic_form(pres("gens a;"));
    CHECK(after.generator_count() == 1);
    REQUIRE(after.relator_count() == 1);
    CHECK(after.relators()[0] == Relator{0, 0, {{0, 1}}});
}

TEST_CASE("cyclic form absorbs tree edges hanging off a loop") {
    // Star: a loop at a plus tree edges a-b and a-c.
    const WirtingerPresentation before(
        {"a", "b", "c"},
        {Relator{0, 0, {{1, 1}}}, Relator{1, 0, {{2, 1}}}, Relator{0, 2, {{0, -1}}}});
    const WirtingerPresentation after = to_cyclic_form(before);
    const PresentationGraph g = build_graph(after);
    CHECK(g.component_count == 1);
    CHECK(g.component_chi == std::vector<int>{0});
    for (int q = 0; q < after.relator_count(); ++q) {
        const Relator& r = after.relators()[static_cast<size_t>(q)];
        CHECK(r.target == q);
        CHECK(r.source == (q + 1) % 3);
    }
    CHECK(hom_profile(after) == hom_profile(before));
    CHECK(abelianization_rank(after) == abelianization_rank(before));
}

TEST_CASE("simple form peels a two-letter conjugator as documented") {
    const WirtingerPresentation before =
        pres("gens a b c; rel a = c^-1 b^-1 a b c; rel b = b^-1 b b; rel c = c^-1 c c;");
    std::vector<std::string> trace;
    const CanonicalForm form = to_simple_form(before, &trace);
    const WirtingerPresentation& after = form.presentation;
    CHECK(after.generator_count() == 4);
    CHECK(after.relator_count() == 4);

    // New generator m sits between a and itself on a's cycle: a = c^-1 m c
    // and m = b^-1 a b.
    const int a = 0;
    int peeled = -1;
    for (const Relator& r : after.relators())
        if (r.target == a) {
            CHECK(r.conjugator.size() == 1);
            CHECK(after.generator_name(r.conjugator[0].gen) == "c");
            peeled = r.source;
        }
    REQUIRE(peeled >= 0);
    bool found_chain = false;
    for (const Relator& r : after.relators())
        if (r.target == peeled) {
            found_chain = true;
            CHECK(r.source == a);
            REQUIRE(r.conjugator.size() == 1);
            CHECK(after.generator_name(r.conjugator[0].gen) == "b");
        }
    CHECK(found_chain);
    REQUIRE(form.classes.size() == 3);
    CHECK(form.classes[0].size() == 2);
    CHECK(hom_profile(after) == hom_profile(before));
    CHECK(!trace.empty());
}

TEST_CASE("simple form is the identity on single-letter conjugators") {
    const WirtingerPresentation before = to_cyclic_form(pres(kTrefoil));
    const CanonicalForm form = to_simple_form(before);
    CHECK(form.presentation == before);
}

TEST_CASE("simple form widens empty conjugators") {
    const WirtingerPresentation before = to_cyclic_form(pres("gens a b; rel a = b;"));
    const CanonicalForm form = to_simple_form(before);
    for (const Relator& r : form.presentation.relators())
        CHECK(r.conjugator.size() == 1);
    CHECK(hom_profile(form.presentation) == hom_profile(pres("gens a b; rel a = b;")));
}

TEST_CASE("simple form rejects non-cyclic input") {
    CHECK_THROWS_AS(to_simple_form(pres("gens a;")), std::invalid_argument);
    // chi = 0 overall but one vertex has degree 3: still not a simple cycle.
    const WirtingerPresentation lopsided(
        {"a", "b", "c", "d"},
        {Relator{0, 1, {}}, Relator{1, 2, {}}, Relator{2, 0, {}}, Relator{0, 3, {}}});
    CHECK_THROWS_AS(to_simple_form(lopsided), std::invalid_argument);
}

TEST_CASE("realizing the torus example group gives two circles and two arrows") {
    const WirtingerPresentation p = group_of("1 2+ / 1- 2");
    const GaussDiagram d = realize(p);
    CHECK(d.circle_count() == 2);
    CHECK(d.arrow_count() == 2);
    CHECK(hom_profile(group_of_diagram(d)) == hom_profile(p));
}

TEST_CASE("realizing a free generator gives a bare circle") {
    const GaussDiagram d = realize(pres("gens a;"));
    CHECK(d.circle_count() == 1);
    CHECK(d.arrow_count() == 0);
}

TEST_CASE("realizing the trefoil presentation gives one circle with three arrows") {
    const GaussDiagram d = realize(pres(kTrefoil));
    CHECK(d.circle_count() == 1);
    CHECK(d.arrow_count() == 3);
    CHECK(hom_profile(group_of_diagram(d)) == hom_profile(pres(kTrefoil)));
}

TEST_CASE("diagram-derived presentations always satisfy the realizability test") {
    tt::Rng rng(8501);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussDiagram d = tt::random_diagram(rng, 6, 3);
        const WirtingerPresentation p = group_of_diagram(d);
        CHECK(is_realizable(p));
        int head_free = 0;
        for (const auto& circle : d.circles()) {
            bool has_head = false;
            for (const Slot& s : circle) has_head = has_head || s.end == End::head;
            if (!has_head) ++head_free;
        }
        CHECK(p.generator_count() == p.relator_count() + head_free);
        const PresentationGraph g = build_graph(p);
        for (int chi : g.component_chi)
            CHECK((chi == 0 || chi == 1));
    }
}

TEST_CASE("reductions preserve rank and homomorphism counts") {
    tt::Rng rng(8502);
    for (int trial = 0; trial < 60; ++trial) {
        const WirtingerPresentation p = tt::random_realizable_presentation(rng, 5, 4);
        const auto profile = hom_profile(p);
        const int rank = abelianization_rank(p);
        const WirtingerPresentation cyclic = to_cyclic_form(p);
        CHECK(hom_profile(cyclic) == profile);
        CHECK(abelianization_rank(cyclic) == rank);
        const CanonicalForm simple = to_simple_form(cyclic);
        CHECK(hom_profile(simple.presentation) == profile);
        CHECK(abelianization_rank(simple.presentation) == rank);
        for (const auto& cls : simple.classes)
            CHECK(!cls.empty());
    }
}

TEST_CASE("realize then read back preserves the group invariants") {
    tt::Rng rng(8503);
    for (int trial = 0; trial < 40; ++trial) {
        const GaussDiagram d = tt::random_diagram(rng, 5, 3);
        const WirtingerPresentation p = group_of_diagram(d);
        const WirtingerPresentation back = group_of_diagram(realize(p));
        CHECK(hom_profile(back) == hom_profile(p));
        CHECK(abelianization_rank(back) == abelianization_rank(p));
    }
}

TEST_CASE("realizability ignores generator numbering and relator order") {
    tt::Rng rng(8504);
    for (int trial = 0; trial < 100; ++trial) {
        const WirtingerPresentation p = tt::random_realizable_presentation(rng, 5, 3);
        std::vector<int> perm(static_cast<size_t>(p.generator_count()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> names(perm.size());
        for (size_t g = 0; g < perm.size(); ++g)
            names[static_cast<size_t>(perm[g])] = p.generator_name(static_cast<int>(g));
        std::vector<Relator> relators = p.relators();
        for (Relator& r : relators) {
            r.target = perm[static_cast<size_t>(r.target)];
            r.source = perm[static_cast<size_t>(r.source)];
            for (GeneratorPower& l : r.conjugator) l.gen = perm[static_cast<size_t>(l.gen)];
        }
        std::shuffle(relators.begin(), relators.end(), rng);
        const WirtingerPresentation q(names, relators);
        CHECK(is_realizable(q) == is_realizable(p));
        CHECK(abelianization_rank(q) == abelianization_rank(p));
    }
}
