#include "cylcob/tl.hpp"

namespace cylcob {

DeltaPoly DeltaPoly::constant(const Rational& c) {
    DeltaPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

DeltaPoly DeltaPoly::delta_power(long long e) {
    DeltaPoly p;
    p.coeffs_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
    p.coeffs_.back() = 1;
    return p;
}

Rational DeltaPoly::coeff(long long e) const {
    if (e < 0 || e >= static_cast<long long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(e)];
}

void DeltaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& o) const {
    DeltaPoly out;
    out.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) out.coeffs_[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out.coeffs_[i] += o.coeffs_[i];
    }
    out.trim();
    return out;
}

DeltaPoly DeltaPoly::operator*(const DeltaPoly& o) const {
    DeltaPoly out;
    if (coeffs_.empty() || o.coeffs_.empty()) return out;
    out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    out.trim();
    return out;
}

Rational DeltaPoly::eval(const Rational& delta_value) const {
    Rational out = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) out = out * delta_value + coeffs_[i];
    return out;
}

std::string DeltaPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rational_str(coeffs_[e]);
        if (e == 1) out += "*delta";
        if (e > 1) out += "*delta^" + std::to_string(e);
    }
    return out;
}

void TLElement::add_term(const AffineDiagram& d, const DeltaPoly& c) {
    if (d.bottom_period() != source_ || d.top_period() != target_)
        throw SignatureMismatch("diagram does not match the element's hom-set");
    if (d.loops() != 0) throw Error("TL diagram keys must carry loop count zero");
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(d, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

TLElement TLElement::from_word(const GeneratorWord& w) {
    const AffineDiagram d = evaluate(w);
    TLElement out(w.n_in(), w.n_out());
    out.add_term(d.with_loops(0), DeltaPoly::delta_power(d.loops()));
    return out;
}

TLElement TLElement::identity(int arity) {
    return from_word(GeneratorWord::identity(arity));
}

TLElement tl_compose(const TLElement& x, const TLElement& y) {
    if (x.target() != y.source())
        throw SignatureMismatch("cannot compose TL elements " + std::to_string(x.source()) + "->" +
                                std::to_string(x.target()) + " and " + std::to_string(y.source()) +
                                "->" + std::to_string(y.target()));
    TLElement out(x.source(), y.target());
    for (const auto& [dx, cx] : x.terms()) {
        for (const auto& [dy, cy] : y.terms()) {
            const AffineDiagram d = compose_diagrams(dx, dy);
            out.add_term(d.with_loops(0), cx * cy * DeltaPoly::delta_power(d.loops()));
        }
    }
    return out;
}

Matrix tl_evaluate(const TLElement& x, const BarRep& rep, const Rational& delta_value) {
    const auto dim_pow = [&](int e) {
        int out = 1;
        for (int i = 0; i < e; ++i) out *= rep.dim();
        return out;
    };
    Matrix acc(dim_pow(x.target()), dim_pow(x.source()));
    for (const auto& [d, c] : x.terms()) {
        NormalForm nf = normalize(d);
        nf.loops = 0;  // loops already live in the coefficient
        acc = acc + word_matrix(nf.assemble(), rep.dim()).scaled(c.eval(delta_value));
    }
    return acc;
}

}  // namespace cylcob
