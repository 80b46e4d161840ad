#include "cylcob/cyclic.hpp"

namespace cylcob {

namespace {

void check_level(int have, int want, const char* what) {
    if (have != want)
        throw ArityMismatch(have, want);
    (void)what;
}

void check_face(int level, int index) {
    if (level < 1) throw OutOfRange("face needs level >= 1");
    if (index < 0 || index > level)
        throw OutOfRange("face index " + std::to_string(index) + " out of range 0.." +
                         std::to_string(level));
}

void check_degen(int level, int index) {
    if (level < 0) throw OutOfRange("degeneracy needs level >= 0");
    if (index < 0 || index > level)
        throw OutOfRange("degeneracy index " + std::to_string(index) + " out of range 0.." +
                         std::to_string(level));
}

}  // namespace

// --- SimplicialWord ---------------------------------------------------------

SimplicialWord SimplicialWord::identity(int level) {
    if (level < 0) throw OutOfRange("levels are non-negative");
    SimplicialWord w;
    w.n_in_ = w.n_out_ = level;
    return w;
}

void SimplicialWord::append_face(int level, int index) {
    check_face(level, index);
    check_level(n_out_, level, "face");
    gens_.push_back({SimplicialGen::Kind::face, level, index});
    n_out_ = level - 1;
}

void SimplicialWord::append_degen(int level, int index) {
    check_degen(level, index);
    check_level(n_out_, level, "degeneracy");
    gens_.push_back({SimplicialGen::Kind::degen, level, index});
    n_out_ = level + 1;
}

// --- CyclicWord --------------------------------------------------------------

CyclicWord CyclicWord::identity(int level) {
    if (level < 0) throw OutOfRange("levels are non-negative");
    CyclicWord w;
    w.n_in_ = w.n_out_ = level;
    return w;
}

void CyclicWord::append_face(int level, int index) {
    check_face(level, index);
    check_level(n_out_, level, "face");
    gens_.push_back({CyclicGen::Kind::face, level, index});
    n_out_ = level - 1;
}

void CyclicWord::append_degen(int level, int index) {
    check_degen(level, index);
    check_level(n_out_, level, "degeneracy");
    gens_.push_back({CyclicGen::Kind::degen, level, index});
    n_out_ = level + 1;
}

void CyclicWord::append_cyc(int level) {
    if (level < 0) throw OutOfRange("levels are non-negative");
    check_level(n_out_, level, "rotation");
    gens_.push_back({CyclicGen::Kind::cyc, level, 0});
}

// --- SqrtCyclicWord ----------------------------------------------------------

SqrtCyclicWord SqrtCyclicWord::identity(int level) {
    if (level < 0) throw OutOfRange("levels are non-negative");
    SqrtCyclicWord w;
    w.n_in_ = w.n_out_ = level;
    return w;
}

void SqrtCyclicWord::append_face(int level, int index) {
    check_face(level, index);
    check_level(n_out_, level, "face");
    gens_.push_back({SqrtCyclicGen::Kind::face, level, index});
    n_out_ = level - 1;
}

void SqrtCyclicWord::append_degen(int level, int index) {
    check_degen(level, index);
    check_level(n_out_, level, "degeneracy");
    gens_.push_back({SqrtCyclicGen::Kind::degen, level, index});
    n_out_ = level + 1;
}

void SqrtCyclicWord::append_sqrt_cyc(int level) {
    if (level < 0) throw OutOfRange("levels are non-negative");
    check_level(n_out_, level, "rotation");
    gens_.push_back({SqrtCyclicGen::Kind::sqrt_cyc, level, 0});
}

// --- AtlWord -----------------------------------------------------------------

AtlWord AtlWord::identity(int level) {
    if (level < 0) throw OutOfRange("levels are non-negative");
    AtlWord w;
    w.n_in_ = w.n_out_ = level;
    return w;
}

void AtlWord::append_cap(int level, int index) {
    if (level < 1) throw OutOfRange("cap needs level >= 1");
    if (index < 1 || index > level)
        throw OutOfRange("cap index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(level));
    check_level(n_out_, level, "cap");
    gens_.push_back({AtlGen::Kind::cap, level, index});
    n_out_ = level - 1;
}

void AtlWord::append_cup(int level, int index) {
    if (level < 0) throw OutOfRange("cup needs level >= 0");
    if (index < 1 || index > level + 1)
        throw OutOfRange("cup index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(level + 1));
    check_level(n_out_, level, "cup");
    gens_.push_back({AtlGen::Kind::cup, level, index});
    n_out_ = level + 1;
}

void AtlWord::append_rot(int level) {
    if (level < 1) throw OutOfRange("rotation needs level >= 1");
    check_level(n_out_, level, "rotation");
    gens_.push_back({AtlGen::Kind::rot, level, 0});
}

void AtlWord::append_loop_id(int level, long long unshaded, long long shaded) {
    if (level < 0) throw OutOfRange("levels are non-negative");
    if (unshaded < 0 || shaded < 0) throw OutOfRange("loop counts are non-negative");
    check_level(n_out_, level, "marked identity");
    gens_.push_back({AtlGen::Kind::loop_id, level, 0, unshaded, shaded});
}

// --- Monotone semantics ------------------------------------------------------

MonotoneMap MonotoneMap::identity(int points) {
    MonotoneMap m{points, points, {}};
    for (int i = 0; i < points; ++i) m.table.push_back(i);
    return m;
}

std::string MonotoneMap::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(table[i]);
    }
    return out + "]";
}

MonotoneMap monotone_semantics(const SimplicialWord& w) {
    // Contravariant: fold the duals from the last generator inward. cur maps
    // [n_out] into the object the remaining prefix still has to bridge.
    MonotoneMap cur = MonotoneMap::identity(w.n_out() + 1);
    for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) {
        const SimplicialGen& g = *it;
        for (int& v : cur.table) {
            if (g.kind == SimplicialGen::Kind::face) {
                // coface skipping g.index: [level-1] -> [level]
                if (v >= g.index) ++v;
            } else {
                // codegeneracy repeating g.index: [level+1] -> [level]
                if (v > g.index) --v;
            }
        }
        cur.codomain_points = g.level + 1;
    }
    return cur;
}

// --- Translations into cylinder words ---------------------------------------

// Faces cap even slots, degeneracies cup ODD slots: with the doubled circle
// read as original points at even positions and their duals at odd ones, the
// face-after-degeneracy identities need the cap to land adjacent to the cup
// on both sides of the diagonal, which forces opposite parities.
GeneratorWord lambda_to_cyl(const CyclicWord& w) {
    GeneratorWord out = GeneratorWord::identity(2 * (w.n_in() + 1));
    for (const CyclicGen& g : w.gens()) {
        const int arity = 2 * (g.level + 1);
        switch (g.kind) {
            case CyclicGen::Kind::face:
                out.append(Generator::death(arity, 2 * g.index));
                break;
            case CyclicGen::Kind::degen:
                out.append(Generator::birth(arity, 2 * g.index + 1));
                break;
            case CyclicGen::Kind::cyc:
                out.append(Generator::twist(arity));
                out.append(Generator::twist(arity));
                break;
        }
    }
    return out;
}

GeneratorWord sqrtlambda_to_cyl(const SqrtCyclicWord& w) {
    GeneratorWord out = GeneratorWord::identity(2 * (w.n_in() + 1));
    for (const SqrtCyclicGen& g : w.gens()) {
        const int arity = 2 * (g.level + 1);
        switch (g.kind) {
            case SqrtCyclicGen::Kind::face:
                out.append(Generator::death(arity, 2 * g.index));
                break;
            case SqrtCyclicGen::Kind::degen:
                out.append(Generator::birth(arity, 2 * g.index + 1));
                break;
            case SqrtCyclicGen::Kind::sqrt_cyc:
                out.append(Generator::twist(arity));
                break;
        }
    }
    return out;
}

// --- Doubling ----------------------------------------------------------------

// The doubled face removes a point from each of the two interleaved copies
// (indices i and n+1+i of the doubled level); the doubled degeneracy repeats
// one in each copy. This is the unique index scheme that makes the level map
// [n] -> [2n+1] functorial: collapsing an adjacent pair instead breaks the
// face-after-degeneracy identity one step off the diagonal.
SimplicialWord delta_double(const SimplicialWord& w) {
    SimplicialWord out = SimplicialWord::identity(2 * w.n_in() + 1);
    for (const SimplicialGen& g : w.gens()) {
        const int n = g.level;
        if (g.kind == SimplicialGen::Kind::face) {
            out.append_face(2 * n + 1, n + 1 + g.index);
            out.append_face(2 * n, g.index);
        } else {
            out.append_degen(2 * n + 1, g.index);
            out.append_degen(2 * n + 2, n + 2 + g.index);
        }
    }
    return out;
}

SqrtCyclicWord delta_double(const CyclicWord& w) {
    SqrtCyclicWord out = SqrtCyclicWord::identity(2 * w.n_in() + 1);
    for (const CyclicGen& g : w.gens()) {
        const int n = g.level;
        switch (g.kind) {
            case CyclicGen::Kind::face:
                out.append_face(2 * n + 1, n + 1 + g.index);
                out.append_face(2 * n, g.index);
                break;
            case CyclicGen::Kind::degen:
                out.append_degen(2 * n + 1, g.index);
                out.append_degen(2 * n + 2, n + 2 + g.index);
                break;
            case CyclicGen::Kind::cyc:
                out.append_sqrt_cyc(2 * n + 1);
                out.append_sqrt_cyc(2 * n + 1);
                break;
        }
    }
    return out;
}

// --- Annular translation -----------------------------------------------------

AtlImage atl_to_cyla(const AtlWord& w) {
    AtlImage out{GeneratorWord::identity(2 * w.n_in()), 0};
    for (const AtlGen& g : w.gens()) {
        const int arity = 2 * g.level;
        switch (g.kind) {
            case AtlGen::Kind::cap:
                out.word.append(Generator::death(arity, (2 * g.index) % arity));
                break;
            case AtlGen::Kind::cup:
                out.word.append(Generator::birth(arity, (2 * g.index) % (arity + 2)));
                break;
            case AtlGen::Kind::rot:
                out.word.append(Generator::twist(arity));
                out.word.append(Generator::twist(arity));
                break;
            case AtlGen::Kind::loop_id:
                out.loop_tally += g.unshaded + g.shaded;
                break;
        }
    }
    return out;
}

// --- Extension over the 0-marked circle --------------------------------------

Cyl0ExtensionCheck check_cyl0_extension_detail(const Cyl0ExtensionData& data) {
    const Matrix& d0 = data.death0;
    const Matrix& d1 = data.death1;
    const Matrix& b0 = data.birth0;
    const Matrix& b1 = data.birth1;
    const Matrix& t = data.twist;
    if (d0.rows() != d1.rows() || d0.cols() != d1.cols() || b0.rows() != b1.rows() ||
        b0.cols() != b1.cols() || d0.cols() != b0.rows() || b0.cols() != d0.rows() ||
        t.rows() != t.cols() || t.rows() != d0.cols())
        throw ShapeMismatch("extension data shapes are inconsistent");

    Cyl0ExtensionCheck check;
    const Matrix id = Matrix::identity(d0.rows());
    check.retraction0 = (d0 * b0 == id);
    check.retraction1 = (d1 * b1 == id);
    check.twist_death = (d0 * t == d1);
    check.twist_birth = (t * b0 == b1);
    return check;
}

}  // namespace cylcob
