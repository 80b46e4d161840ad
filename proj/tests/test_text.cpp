#include "doctest.h"

#include "cylcob/sampling.hpp"
#include "cylcob/text.hpp"

using namespace cylcob;

TEST_CASE("parsing atoms and operators") {
    CHECK(parse_word("id(4)") == GeneratorWord::identity(4));
    CHECK(parse_word("tw(3)") == GeneratorWord::of(Generator::twist(3)));
    CHECK(parse_word("tw'(3)") == GeneratorWord::of(Generator::twist_inv(3)));
    CHECK(parse_word("b(2,1)") == GeneratorWord::of(Generator::birth(2, 1)));
    CHECK(parse_word(" d( 4 , 3 ) ") == GeneratorWord::of(Generator::death(4, 3)));

    // "." applies the right operand first; ";" the left one
    CHECK(parse_word("d(4,0) . b(2,0)") ==
          GeneratorWord::of({Generator::birth(2, 0), Generator::death(4, 0)}));
    CHECK(parse_word("b(2,0) ; d(4,0)") ==
          GeneratorWord::of({Generator::birth(2, 0), Generator::death(4, 0)}));
    CHECK(parse_word("tw(2)^5") == power(Generator::twist(2), 5));
    CHECK(parse_word("(d(2,1).b(0,0))^2") ==
          power(GeneratorWord::of({Generator::birth(0, 0), Generator::death(2, 1)}), 2));
    CHECK(parse_word("tw(4)^0") == GeneratorWord::identity(4));

    // precedence: ^ over . over ;
    CHECK(parse_word("tw(2)^2 ; b(2,0) . tw(2)") ==
          GeneratorWord::of({Generator::twist(2), Generator::twist(2), Generator::twist(2),
                             Generator::birth(2, 0)}));
}

TEST_CASE("parse errors carry the offending span") {
    CHECK_THROWS_AS(parse_word("tw(2"), ParseError);
    CHECK_THROWS_AS(parse_word("zz(2)"), ParseError);
    CHECK_THROWS_AS(parse_word("tw(2) %"), ParseError);
    CHECK_THROWS_AS(parse_word("tw()"), ParseError);
    CHECK_THROWS_AS(parse_word(""), ParseError);
    try {
        parse_word("tw(2) . qq(1)");
    } catch (const ParseError& e) {
        CHECK(e.offset == 8);
    }
}

TEST_CASE("type errors carry the offending span") {
    CHECK_THROWS_AS(parse_word("b(2,0) . b(2,0)"), WordTypeError);
    CHECK_THROWS_AS(parse_word("b(2,0)^2"), WordTypeError);
    CHECK_THROWS_AS(parse_word("d(1,0)"), WordTypeError);  // no death below two points
    try {
        parse_word("tw(2) ; tw(3)");
    } catch (const WordTypeError& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("canonical printing and round trip") {
    CHECK(print_word(GeneratorWord::identity(3)) == "id(3)");
    CHECK(print_word(GeneratorWord::of({Generator::birth(2, 0), Generator::death(4, 0)})) ==
          "d(4,0).b(2,0)");

    WordSampler sampler(5, 9, 18);
    for (int trial = 0; trial < 200; ++trial) {
        const GeneratorWord w = sampler.random_word(true);
        CHECK(parse_word(print_word(w)) == w);
    }
}

TEST_CASE("normal form printing is a fixed point") {
    const auto check_fixed = [](const std::string& text) {
        const NormalForm nf = normalize(parse_word(text));
        const std::string printed = print_normal_form(nf);
        CHECK(normalize(parse_word(printed)) == nf);
        CHECK(print_normal_form(normalize(parse_word(printed))) == printed);
        return printed;
    };
    CHECK(check_fixed("tw(2)^5") == "tw(2)");
    CHECK(check_fixed("d(4,2) . b(2,1)") == "id(2)");
    CHECK(check_fixed("(d(2,1).b(0,0))^2") == "(d(2,1).b(0,0))^2");
    CHECK(check_fixed("d(4,1) . b(2,1)") == "d(4,0).b(2,0)");  // one loop, reinserted canonically
    check_fixed("b(4,2) . tw(4)^3 . d(6,1)");
}

TEST_CASE("source grammars for translations") {
    CyclicWord rot = CyclicWord::identity(1);
    rot.append_cyc(1);
    CHECK(parse_lambda_word("t(1)") == rot);

    CyclicWord mixed = CyclicWord::identity(2);
    mixed.append_degen(2, 1);
    mixed.append_face(3, 0);
    CHECK(parse_lambda_word("dl(3,0) . s(2,1)") == mixed);

    SqrtCyclicWord sq = SqrtCyclicWord::identity(2);
    sq.append_sqrt_cyc(2);
    sq.append_sqrt_cyc(2);
    CHECK(parse_sqrt_word("sqrt_t(2)^2") == sq);

    AtlWord atl = AtlWord::identity(3);
    atl.append_cap(3, 2);
    atl.append_loop_id(2, 1, 0);
    CHECK(parse_atl_word("loopid(2,1,0) . a(3,2)") == atl);

    CHECK_THROWS_AS(parse_lambda_word("sqrt_t(2)"), ParseError);
    CHECK_THROWS_AS(parse_atl_word("a(3,2) . a(3,1)"), WordTypeError);
}
