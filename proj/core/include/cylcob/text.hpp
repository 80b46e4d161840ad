#pragma once

#include <string>
#include <string_view>

#include "cylcob/cyclic.hpp"
#include "cylcob/normal_form.hpp"

namespace cylcob {

// Word grammar, whitespace insignificant:
//   atoms       id(k)  tw(k)  tw'(k)  b(k,i)  d(k,i)
//   x . y       mathematical composition: y applied first
//   x ; y       application order: x applied first
//   x ^ p       p-fold power of an endomorphism subexpression
//   ( ... )     grouping
// Throws ParseError for syntax, WordTypeError for ill-typed composition or
// powers; both carry the offending source span.
GeneratorWord parse_word(std::string_view text);

// Canonical rendering: generators in mathematical order joined by ".", the
// empty word as id(k). parse_word(print_word(w)) == w for every word.
std::string print_word(const GeneratorWord& w);

// Canonical rendering of a normal form: births, middle, deaths in
// mathematical order, with repeated twist/bracelet/circle blocks grouped as
// powers. Reparsing and renormalizing the output is a fixed point.
std::string print_normal_form(const NormalForm& nf);

// Source grammars for the translation front end, same operators:
//   rotation words  t(n)  dl(n,i)  s(n,j)
//   square-root     sqrt_t(n)  dl(n,i)  s(n,j)
//   annular         a(n,i)  bb(n,i)  T(n)  loopid(n,j,k)
CyclicWord parse_lambda_word(std::string_view text);
SqrtCyclicWord parse_sqrt_word(std::string_view text);
AtlWord parse_atl_word(std::string_view text);

}  // namespace cylcob
