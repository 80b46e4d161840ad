#include "cylcob/sampling.hpp"

#include <algorithm>
#include <vector>

namespace cylcob {

int WordSampler::pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

namespace {

// Legal generators from arity a, staying within the arity budget.
std::vector<Generator> moves_from(int a, int max_arity, bool allow_twist_inv) {
    std::vector<Generator> out;
    if (a >= 1) {
        out.push_back(Generator::twist(a));
        if (allow_twist_inv) out.push_back(Generator::twist_inv(a));
    }
    if (a + 2 <= max_arity)
        for (int i = 0; i <= a + 1; ++i) out.push_back(Generator::birth(a, i));
    if (a >= 2)
        for (int i = 0; i <= a - 1; ++i) out.push_back(Generator::death(a, i));
    return out;
}

}  // namespace

GeneratorWord WordSampler::random_word(bool allow_twist_inv) {
    const int start = pick(0, max_arity_);
    const int len = pick(0, max_length_);
    GeneratorWord w = GeneratorWord::identity(start);
    for (int step = 0; step < len; ++step) {
        const auto moves = moves_from(w.n_out(), max_arity_, allow_twist_inv);
        if (moves.empty()) break;
        w.append(moves[static_cast<std::size_t>(pick(0, static_cast<int>(moves.size()) - 1))]);
    }
    return w;
}

GeneratorWord WordSampler::random_word_between(int n_in, int n_out, bool allow_twist_inv) {
    if ((n_in + n_out) % 2 != 0) throw OutOfRange("boundary arities must agree mod 2");
    for (;;) {
        GeneratorWord w = GeneratorWord::identity(n_in);
        const int len = pick(0, max_length_);
        for (int step = 0; step < len; ++step) {
            const auto moves = moves_from(w.n_out(), max_arity_, allow_twist_inv);
            if (moves.empty()) break;
            w.append(moves[static_cast<std::size_t>(pick(0, static_cast<int>(moves.size()) - 1))]);
        }
        // steer home with births or deaths, then return
        while (w.n_out() > n_out) w.append(Generator::death(w.n_out(), pick(0, w.n_out() - 1)));
        while (w.n_out() < n_out) w.append(Generator::birth(w.n_out(), pick(0, w.n_out() + 1)));
        if (w.n_out() == n_out) return w;
    }
}

std::pair<GeneratorWord, GeneratorWord> WordSampler::composable_pair(bool allow_twist_inv) {
    const GeneratorWord f = random_word(allow_twist_inv);
    const GeneratorWord g = random_word_between(f.n_out(), pick(0, max_arity_ / 2) * 2 + (f.n_out() % 2),
                                                allow_twist_inv);
    return {f, g};
}

GeneratorWord WordSampler::twin_of(const GeneratorWord& w) {
    GeneratorWord cur = w;
    const int rewrites = pick(1, 3);
    for (int step = 0; step < rewrites; ++step) {
        std::vector<Generator> gens = cur.gens();
        const int cut = pick(0, static_cast<int>(gens.size()));
        // arity at the cut point
        int a = cur.n_in();
        for (int i = 0; i < cut; ++i) a = gens[static_cast<std::size_t>(i)].target();

        std::vector<Generator> inserted;
        switch (pick(0, 3)) {
            case 0: {  // full twist
                if (a >= 1)
                    for (int i = 0; i < a; ++i) inserted.push_back(Generator::twist(a));
                break;
            }
            case 1: {  // snake pair; at arity 0 it would close into a bracelet, so skip
                if (a == 0) break;
                const int i = pick(0, a);
                const int d = (i >= 1 && pick(0, 1)) ? i - 1 : i + 1;
                inserted.push_back(Generator::birth(a, i));
                inserted.push_back(Generator::death(a + 2, d));
                break;
            }
            case 2: {  // circle pair: same cylinder class, one more loop
                const int i = pick(0, a);
                inserted.push_back(Generator::birth(a, i));
                inserted.push_back(Generator::death(a + 2, i));
                break;
            }
            case 3: {  // slide a birth through a following twist
                bool done = false;
                for (std::size_t i = 0; i + 1 < gens.size() && !done; ++i) {
                    const Generator g1 = gens[i];  // copies: the slide overwrites both slots
                    const Generator g2 = gens[i + 1];
                    if (g1.kind() == GenKind::birth && g2.kind() == GenKind::twist &&
                        g1.slot() <= g1.arity()) {
                        gens[i] = Generator::twist(g1.arity());
                        gens[i + 1] = Generator::birth(g1.arity(), g1.slot() + 1);
                        done = true;
                    } else if (g1.kind() == GenKind::death && g2.kind() == GenKind::twist &&
                               g1.slot() < g1.arity() - 1) {
                        gens[i] = Generator::twist(g1.arity());
                        gens[i + 1] = Generator::death(g1.arity(), g1.slot() + 1);
                        done = true;
                    }
                }
                break;
            }
        }
        GeneratorWord next = GeneratorWord::identity(cur.n_in());
        for (int i = 0; i < cut; ++i) next.append(gens[static_cast<std::size_t>(i)]);
        for (const Generator& g : inserted) next.append(g);
        for (std::size_t i = static_cast<std::size_t>(cut); i < gens.size(); ++i) next.append(gens[i]);
        cur = next;
    }
    return cur;
}

}  // namespace cylcob
