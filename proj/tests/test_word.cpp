#include "doctest.h"

#include "cylcob/word.hpp"

using namespace cylcob;

TEST_CASE("generator signatures") {
    CHECK(generator_signature(Generator::birth(3, 1)) == Signature{3, 5});
    CHECK(generator_signature(Generator::id(0)) == Signature{0, 0});
    CHECK(generator_signature(Generator::death(4, 3)) == Signature{4, 2});
    CHECK(generator_signature(Generator::twist(7)) == Signature{7, 7});
    CHECK(generator_signature(Generator::twist_inv(2)) == Signature{2, 2});
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(Generator::birth(3, 5), OutOfRange);
    CHECK_THROWS_AS(Generator::birth(3, -1), OutOfRange);
    CHECK_THROWS_AS(Generator::death(1, 0), OutOfRange);
    CHECK_THROWS_AS(Generator::death(4, 4), OutOfRange);
    CHECK_THROWS_AS(Generator::twist(-1), OutOfRange);
    CHECK_NOTHROW(Generator::birth(0, 1));
    CHECK_NOTHROW(Generator::death(2, 1));
}

TEST_CASE("composition of words") {
    const GeneratorWord f = GeneratorWord::of(Generator::birth(2, 0));
    const GeneratorWord g = GeneratorWord::of(Generator::death(4, 0));
    CHECK(then(f, g).signature() == Signature{2, 2});

    CHECK_THROWS_AS(then(f, f), ArityMismatch);  // signature (2,4) cannot feed (2,4)
    CHECK(then(GeneratorWord::identity(4), GeneratorWord::identity(4)) ==
          GeneratorWord::identity(4));
}

TEST_CASE("composition is list concatenation, hence associative") {
    const GeneratorWord a = GeneratorWord::of(Generator::birth(2, 1));
    const GeneratorWord b = GeneratorWord::of(Generator::twist(4));
    const GeneratorWord c = GeneratorWord::of(Generator::death(4, 2));
    CHECK(then(a, then(b, c)) == then(then(a, b), c));
}

TEST_CASE("powers") {
    CHECK(power(Generator::twist(2), 5).gens().size() == 5);
    CHECK(power(Generator::twist(3), 0) == GeneratorWord::identity(3));
    CHECK_THROWS_AS(power(Generator::birth(2, 0), 2), NotEndomorphism);
    CHECK_THROWS_AS(power(GeneratorWord::of(Generator::birth(2, 0)), 2), NotEndomorphism);
}

TEST_CASE("identity generators normalize away") {
    GeneratorWord w = GeneratorWord::identity(3);
    w.append(Generator::id(3));
    CHECK(w == GeneratorWord::identity(3));
    CHECK(GeneratorWord::of(Generator::id(5)) == GeneratorWord::identity(5));
}

TEST_CASE("boundary parity is preserved by every word") {
    const GeneratorWord w = GeneratorWord::of(
        {Generator::birth(3, 2), Generator::twist(5), Generator::death(5, 4)});
    CHECK((w.n_in() + w.n_out()) % 2 == 0);
}

TEST_CASE("inverse twist elimination") {
    const GeneratorWord w = GeneratorWord::of(Generator::twist_inv(4));
    CHECK(eliminate_twist_inverses(w) == power(Generator::twist(4), 3));
    CHECK(eliminate_twist_inverses(GeneratorWord::of(Generator::twist_inv(0))) ==
          GeneratorWord::identity(0));
    CHECK(eliminate_twist_inverses(GeneratorWord::of(Generator::twist_inv(1))) ==
          GeneratorWord::identity(1));
}
