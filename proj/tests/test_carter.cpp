#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gausslink;
namespace tt = gausslink::testing;

namespace {

GaussParagraph parse(const std::string& text) { return parse_paragraph(text).paragraph; }

} // namespace

TEST_CASE("torus example: two faces, characteristic 0, genus 1") {
    const GaussParagraph p = parse("1 2+ / 1- 2");
    const CarterComplex c = build_carter(p);
    CHECK(c.vertex_count == 2);
    CHECK(c.edge_count == 4);
    REQUIRE(c.faces.size() == 2);
    CHECK(c.euler_characteristic == 0);
    CHECK(genus(c) == 1);

    const std::vector<std::string> expected_a{"(1 2+)+", "(2 1-)-", "(1 2+)-", "(2 1-)+"};
    const std::vector<std::string> expected_b{"(2+ 1)+", "(1- 2)-", "(2+ 1)-", "(1- 2)+"};
    const auto face0 = tt::face_arc_strings(p, c.faces[0]);
    const auto face1 = tt::face_arc_strings(p, c.faces[1]);
    const bool direct = tt::cyclically_equal(face0, expected_a) && tt::cyclically_equal(face1, expected_b);
    const bool swapped = tt::cyclically_equal(face0, expected_b) && tt::cyclically_equal(face1, expected_a);
    CHECK((direct || swapped));
}

TEST_CASE("single positive curl lies on the sphere") {
    const CarterComplex c = build_carter(parse("1 1+"));
    CHECK(c.vertex_count == 1);
    CHECK(c.edge_count == 2);
    CHECK(c.faces.size() == 3);
    CHECK(c.euler_characteristic == 2);
    CHECK(genus(c) == 0);
}

TEST_CASE("two-crossing single-word code has genus 1") {
    const CarterComplex c = build_carter(parse("1 2 1+ 2+"));
    CHECK(c.euler_characteristic == 0);
    CHECK(genus(c) == 1);
}

TEST_CASE("empty paragraph and crossing-free circles use the sphere convention") {
    CHECK(build_carter(GaussParagraph()).euler_characteristic == 2);
    CHECK(genus_report(GaussParagraph()).total_genus == 0);
    CHECK(genus_report(GaussParagraph()).planar);

    const GaussParagraph one_circle(std::vector<std::vector<Letter>>{{}}, {});
    const GenusReport r = genus_report(one_circle);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].complex.euler_characteristic == 2);
    CHECK(r.total_genus == 0);
}

TEST_CASE("two opposite curls are planar with total genus 0") {
    const GenusReport r = genus_report(parse("1 1+ / 2 2-"));
    REQUIRE(r.components.size() == 2);
    CHECK(r.components[0].complex.genus == 0);
    CHECK(r.components[1].complex.genus == 0);
    CHECK(r.total_genus == 0);
    CHECK(r.planar);
    CHECK(is_planar_carter(parse("1 1+ / 2 2-")));
    CHECK_FALSE(is_planar_carter(parse("1 2+ / 1- 2")));
}

TEST_CASE("face tracing consumes each directed arc once") {
    tt::Rng rng(5301);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussParagraph p = tt::random_paragraph(rng, 6);
        const CarterComplex c = build_carter(p);
        size_t arcs = 0;
        for (const auto& face : c.faces) arcs += face.size();
        CHECK(arcs == static_cast<size_t>(4 * p.crossing_count()));
        CHECK(c.euler_characteristic % 2 == 0);
        CHECK(c.euler_characteristic <= 2);
        CHECK(genus(c) >= 0);
        CHECK((c.euler_characteristic == 2) == (genus(c) == 0));
    }
}

TEST_CASE("genus does not depend on word rotation") {
    tt::Rng rng(5302);
    for (int trial = 0; trial < 120; ++trial) {
        const GaussParagraph p = tt::random_paragraph(rng, 6);
        std::vector<std::vector<Letter>> rotated = p.words();
        for (auto& word : rotated) {
            const size_t shift = static_cast<size_t>(tt::uniform(rng, 0, static_cast<int>(word.size()) - 1));
            std::rotate(word.begin(), word.begin() + static_cast<long>(shift), word.end());
        }
        const CarterComplex a = build_carter(p);
        const CarterComplex b = build_carter(GaussParagraph(rotated, p.signs()));
        CHECK(a.euler_characteristic == b.euler_characteristic);
        CHECK(a.faces.size() == b.faces.size());
    }
}

TEST_CASE("aggregate genus of a split paragraph is the component sum") {
    tt::Rng rng(5303);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::vector<Letter>> words;
        std::vector<int> signs;
        int expected = 0;
        for (int f = 0; f < 2; ++f) {
            const GaussParagraph part = tt::random_paragraph(rng, 4);
            expected += build_carter(split_components(part)[0].paragraph).genus;
            const int shift = static_cast<int>(signs.size());
            for (auto word : part.words()) {
                for (Letter& l : word) l.index += shift;
                words.push_back(std::move(word));
            }
            signs.insert(signs.end(), part.signs().begin(), part.signs().end());
        }
        CHECK(genus_report(GaussParagraph(words, signs)).total_genus == expected);
    }
}
