#include "cylcob/word.hpp"

namespace cylcob {

GeneratorWord GeneratorWord::identity(int arity) { return GeneratorWord(arity); }

GeneratorWord GeneratorWord::of(const Generator& g) {
    GeneratorWord w(g.source());
    w.append(g);
    return w;
}

GeneratorWord GeneratorWord::of(std::initializer_list<Generator> gens) {
    if (gens.size() == 0) throw OutOfRange("an empty word needs an explicit arity; use identity()");
    GeneratorWord w(gens.begin()->source());
    for (const Generator& g : gens) w.append(g);
    return w;
}

void GeneratorWord::append(const Generator& g) {
    if (g.source() != n_out_) throw ArityMismatch(n_out_, g.source());
    if (g.kind() != GenKind::id) gens_.push_back(g);
    n_out_ = g.target();
}

GeneratorWord then(const GeneratorWord& f, const GeneratorWord& g) {
    if (f.n_out() != g.n_in()) throw ArityMismatch(f.n_out(), g.n_in());
    GeneratorWord out = f;
    for (const Generator& gen : g.gens()) out.append(gen);
    return out;
}

GeneratorWord power(const Generator& g, long long p) {
    if (!g.is_endomorphism())
        throw NotEndomorphism("cannot raise " + g.str() + " to a power: it changes the arity");
    if (p < 0) throw OutOfRange("negative powers are not words");
    GeneratorWord w = GeneratorWord::identity(g.source());
    for (long long i = 0; i < p; ++i) w.append(g);
    return w;
}

GeneratorWord power(const GeneratorWord& w, long long p) {
    if (w.n_in() != w.n_out())
        throw NotEndomorphism("cannot raise a word of signature (" + std::to_string(w.n_in()) +
                              "," + std::to_string(w.n_out()) + ") to a power");
    if (p < 0) throw OutOfRange("negative powers are not words");
    GeneratorWord out = GeneratorWord::identity(w.n_in());
    for (long long i = 0; i < p; ++i) out = then(out, w);
    return out;
}

GeneratorWord eliminate_twist_inverses(const GeneratorWord& w) {
    GeneratorWord out = GeneratorWord::identity(w.n_in());
    for (const Generator& g : w.gens()) {
        if (g.kind() == GenKind::twist_inv) {
            const int k = g.arity();
            for (int i = 0; i + 1 < k; ++i) out.append(Generator::twist(k));
        } else {
            out.append(g);
        }
    }
    return out;
}

}  // namespace cylcob
