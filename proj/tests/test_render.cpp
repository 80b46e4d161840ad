#include "doctest.h"

#include <sstream>

#include "cylcob/render.hpp"
#include "cylcob/text.hpp"

using namespace cylcob;

namespace {

std::string render(const std::string& word_text) {
    std::ostringstream out;
    render_svg(out, evaluate(parse_word(word_text)));
    return out.str();
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++n;
    return n;
}

// caps + cups + through + bracelets, per the output contract
std::size_t strands(const std::string& svg) { return count(svg, "class=\"strand"); }

}  // namespace

TEST_CASE("strand counts match the diagram") {
    CHECK(strands(render("b(2,0)")) == 3);   // one cup, two through strands
    CHECK(strands(render("id(4)")) == 4);    // four radial strands
    CHECK(strands(render("d(2,1).b(0,0)")) == 1);
    CHECK(count(render("d(2,1).b(0,0)"), "class=\"strand bracelet\"") == 1);
    CHECK(strands(render("d(6,2)")) == 5);   // one cap, four through strands
    CHECK(strands(render("(d(2,1).b(0,0))^3")) == 3);
}

TEST_CASE("document structure") {
    const std::string svg = render("b(2,0) ; tw(4)");
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<svg") == 1);
    CHECK(count(svg, "</svg>") == 1);
    // every element is self-closed or closed: no stray '<' without '>'
    CHECK(count(svg, "<") == count(svg, ">"));
    // two boundary circles plus marked points
    CHECK(count(svg, "<circle") >= 2 + 2 + 4);
    // legend carries the invariant tuple
    CHECK(svg.find("tau 2") != std::string::npos);
    CHECK(svg.find("ind_b [1]") != std::string::npos);  // the twist moves the cup start
}

TEST_CASE("basepoint is highlighted") {
    const std::string svg = render("id(2)");
    CHECK(svg.find("#e63946") != std::string::npos);
}
