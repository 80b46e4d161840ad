#include "doctest.h"

#include "cylcob/invariants.hpp"
#include "cylcob/sampling.hpp"

using namespace cylcob;

TEST_CASE("invariants of simple diagrams") {
    const InvariantTuple id3 = invariants(generator_diagram(Generator::id(3)));
    CHECK(id3.death_index.empty());
    CHECK(id3.birth_index.empty());
    CHECK(id3.through_count == 3);
    CHECK(id3.twist_class == 1);
    CHECK(id3.bracelets == 0);
    CHECK(id3.loops == 0);

    for (int k = 2; k <= 6; ++k) {
        const InvariantTuple tw = invariants(generator_diagram(Generator::twist(k)));
        CHECK(tw.through_count == k);
        CHECK(tw.twist_class == 2);  // point 0 lands next to the basepoint
    }

    const InvariantTuple bracelet = invariants(evaluate(
        GeneratorWord::of({Generator::birth(0, 0), Generator::death(2, 1)})));
    CHECK(bracelet.through_count == 0);
    CHECK_FALSE(bracelet.twist_class.has_value());
    CHECK(bracelet.bracelets == 1);
    CHECK(bracelet.loops == 0);
}

TEST_CASE("cap starting points respect the wrap") {
    const AffineDiagram d = generator_diagram(Generator::death(2, 1));
    CHECK(caps(d) == std::vector<std::pair<int, int>>{{1, 0}});
    const AffineDiagram d0 = generator_diagram(Generator::death(2, 0));
    CHECK(caps(d0) == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("through-string arithmetic") {
    WordSampler sampler(11, 8, 14);
    for (int trial = 0; trial < 100; ++trial) {
        const GeneratorWord w = sampler.random_word();
        const InvariantTuple t = invariants(evaluate(w));
        CHECK(t.through_count + 2 * static_cast<int>(t.death_index.size()) == w.n_in());
        CHECK(t.through_count + 2 * static_cast<int>(t.birth_index.size()) == w.n_out());
        CHECK((t.bracelets == 0 || t.through_count == 0));
        CHECK(t.twist_class.has_value() == (t.through_count > 0));
    }
}

TEST_CASE("equality semantics per category") {
    const GeneratorWord full = power(Generator::twist(4), 4);
    const GeneratorWord id4 = GeneratorWord::identity(4);
    CHECK(eq_in(Category::cyl, full, id4));
    CHECK(eq_in(Category::cyla, full, id4));
    CHECK_FALSE(eq_in(Category::da, full, id4));

    const GeneratorWord circle =
        GeneratorWord::of({Generator::birth(2, 1), Generator::death(4, 1)});
    CHECK(eq_in(Category::cyl, circle, GeneratorWord::identity(2)));
    CHECK_FALSE(eq_in(Category::cyla, circle, GeneratorWord::identity(2)));
}

TEST_CASE("distinct hom-sets are a type error") {
    CHECK_THROWS_AS(eq_in(Category::cyl, GeneratorWord::identity(2), GeneratorWord::identity(4)),
                    SignatureMismatch);
}

TEST_CASE("inverse twists are rewritten before cylinder comparison") {
    const GeneratorWord inv = GeneratorWord::of(Generator::twist_inv(3));
    const GeneratorWord pos = power(Generator::twist(3), 2);
    CHECK(eq_in(Category::cyl, inv, pos));
    CHECK(eq_in(Category::cyla, inv, pos));
    CHECK_FALSE(eq_in(Category::da, inv, pos));  // lift shifts differ by a dehn twist
}

TEST_CASE("equality respects the category tower on twins") {
    WordSampler sampler(23, 8, 12);
    for (int trial = 0; trial < 100; ++trial) {
        const GeneratorWord u = sampler.random_word();
        const GeneratorWord v = sampler.twin_of(u);
        CHECK(eq_in(Category::cyl, u, v));
        if (eq_in(Category::da, u, v)) CHECK(eq_in(Category::cyla, u, v));
    }
}
