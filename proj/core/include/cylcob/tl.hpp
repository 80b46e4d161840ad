#pragma once

#include <map>

#include "cylcob/bar_rep.hpp"
#include "cylcob/normal_form.hpp"

namespace cylcob {

// Polynomial in the loop parameter delta with rational coefficients. Only
// non-negative powers arise, since diagram composition can only create loops.
class DeltaPoly {
public:
    DeltaPoly() = default;
    static DeltaPoly constant(const Rational& c);
    static DeltaPoly delta_power(long long e);

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    Rational coeff(long long e) const;

    DeltaPoly operator+(const DeltaPoly& o) const;
    DeltaPoly operator*(const DeltaPoly& o) const;
    Rational eval(const Rational& delta_value) const;

    bool operator==(const DeltaPoly&) const = default;
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;  // coeffs_[e] multiplies delta^e
};

// A formal linear combination of affine diagrams with delta-polynomial
// coefficients; contractible loops are folded into delta powers, so every
// diagram key carries loop count zero (bracelets stay in the key).
class TLElement {
public:
    TLElement(int source, int target) : source_(source), target_(target) {}

    static TLElement from_word(const GeneratorWord& w);
    static TLElement identity(int arity);

    int source() const { return source_; }
    int target() const { return target_; }
    const std::map<AffineDiagram, DeltaPoly>& terms() const { return terms_; }

    void add_term(const AffineDiagram& d, const DeltaPoly& c);

    bool operator==(const TLElement&) const = default;

private:
    int source_;
    int target_;
    std::map<AffineDiagram, DeltaPoly> terms_;
};

// Bilinear extension of diagram stacking; newly formed contractible loops
// become delta powers on the coefficient.
TLElement tl_compose(const TLElement& x, const TLElement& y);

// Evaluates the element in the tensor model: each diagram is re-synthesized
// as a word through its normal form and sent to its matrix, coefficients
// evaluated at the given delta value. With delta = dim this agrees with
// word_matrix on any representing word.
Matrix tl_evaluate(const TLElement& x, const BarRep& rep, const Rational& delta_value);

}  // namespace cylcob
