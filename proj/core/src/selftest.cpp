#include "cylcob/selftest.hpp"


#include "cylcob/bar_rep.hpp"
#include "cylcob/normal_form.hpp"
#include "cylcob/text.hpp"
#include "cylcob/tl.hpp"

namespace cylcob {

namespace {

struct Recorder {
    SuiteResult& r;
    void check(bool ok, const std::string& what) {
        ++r.cases;
        if (!ok) {
            ++r.failures;
            if (r.detail.empty()) r.detail = what;
        }
    }
};

long long matrix_entries(int dim, int arity_a, int arity_b) {
    long long out = 1;
    for (int i = 0; i < arity_a + arity_b; ++i) out *= dim;
    return out;
}

int max_word_arity(const GeneratorWord& w) {
    int a = w.n_in();
    int cur = w.n_in();
    for (const Generator& g : w.gens()) {
        cur = g.target();
        a = std::max(a, cur);
    }
    return a;
}

}  // namespace

SuiteResult relation_suite(int max_k) {
    SuiteResult r;
    r.name = "relation suite (k <= " + std::to_string(max_k) + ")";
    Recorder rec{r};
    for (const RelationInstance& inst : all_relation_instances(max_k))
        rec.check(check_relation(inst), inst.str());
    return r;
}

SuiteResult normal_form_suite(int samples, int pairs, unsigned long long seed, int max_arity,
                              int max_length) {
    SuiteResult r;
    r.name = "normal form suite";
    Recorder rec{r};
    WordSampler sampler(seed, max_arity, max_length);

    for (int i = 0; i < samples; ++i) {
        const GeneratorWord w = sampler.random_word();
        const NormalForm nf = normalize(w);
        const GeneratorWord assembled = nf.assemble();
        rec.check(invariants(evaluate(assembled)) == invariants(evaluate(w)),
                  "assembled invariants differ for " + print_word(w));
        rec.check(normalize(assembled) == nf, "normalize not idempotent for " + print_word(w));
        rec.check(eq_in(Category::cyl, w, assembled),
                  "assembled word not cylinder-equal for " + print_word(w));
    }

    for (int i = 0; i < pairs; ++i) {
        GeneratorWord u = sampler.random_word();
        GeneratorWord v = (i % 2 == 0) ? sampler.twin_of(u)
                                       : sampler.random_word_between(u.n_in(), u.n_out());
        const bool eq = eq_in(Category::cyl, u, v);
        const bool nf_eq = normalize(u).equal_in_cyl(normalize(v));
        rec.check(eq == nf_eq,
                  "equality and canonical forms disagree for " + print_word(u) + " vs " +
                      print_word(v));
        const bool eq_loops = eq_in(Category::cyla, u, v);
        const bool nf_eq_loops = normalize(u) == normalize(v);
        rec.check(eq_loops == nf_eq_loops,
                  "loop-counting equality and canonical forms disagree for " + print_word(u) +
                      " vs " + print_word(v));
    }
    return r;
}

SuiteResult matrix_relation_suite(int max_k, long long max_entries) {
    SuiteResult r;
    r.name = "matrix relation suite";
    Recorder rec{r};
    for (int dim = 1; dim <= 3; ++dim) {
        for (const RelationInstance& inst : all_relation_instances(max_k)) {
            const RelationSides sides = relation_sides(inst);
            const int peak = std::max(max_word_arity(sides.lhs), max_word_arity(sides.rhs));
            if (matrix_entries(dim, peak, sides.lhs.n_in()) > max_entries) continue;
            const Matrix lhs = word_matrix(sides.lhs, dim);
            const Matrix rhs = word_matrix(sides.rhs, dim);
            if (sides.loop_gain == 0) {
                rec.check(lhs == rhs, "matrices differ at dim " + std::to_string(dim) + " for " +
                                          inst.str());
            } else {
                Matrix scaled = rhs.scaled(dim);
                for (long long g = 1; g < sides.loop_gain; ++g) scaled = scaled.scaled(dim);
                rec.check(lhs == scaled, "circle relation matrix is not dim * identity at dim " +
                                             std::to_string(dim) + " for " + inst.str());
            }
        }
        // full twists stay within reach at every dim: 3^12 entries at worst
        for (int k = 0; k <= 6; ++k) {
            rec.check(word_matrix(power(Generator::twist(k), k), dim) ==
                          Matrix::identity(word_matrix(GeneratorWord::identity(k), dim).rows()),
                      "full twist is not the identity matrix at dim " + std::to_string(dim) +
                          ", arity " + std::to_string(k));
        }
    }
    return r;
}

SuiteResult matrix_homomorphism_suite(int pairs, unsigned long long seed) {
    SuiteResult r;
    r.name = "matrix homomorphism suite";
    Recorder rec{r};
    WordSampler sampler(seed, 4, 6);
    for (int i = 0; i < pairs; ++i) {
        const auto [f, g] = sampler.composable_pair();
        for (int dim = 1; dim <= 3; ++dim) {
            const Matrix left = word_matrix(g, dim) * word_matrix(f, dim);
            const Matrix right = word_matrix(then(f, g), dim);
            rec.check(left == right, "homomorphism broken at dim " + std::to_string(dim) +
                                         " for " + print_word(f) + " then " + print_word(g));
        }
    }
    return r;
}

SuiteResult loop_discrimination_suite(int samples, unsigned long long seed) {
    SuiteResult r;
    r.name = "loop discrimination suite";
    Recorder rec{r};

    const GeneratorWord circle =
        GeneratorWord::of({Generator::birth(0, 0), Generator::death(2, 0)});
    const GeneratorWord bracelet =
        GeneratorWord::of({Generator::birth(0, 0), Generator::death(2, 1)});
    const AffineDiagram dc = evaluate(circle);
    const AffineDiagram db = evaluate(bracelet);
    rec.check(dc.loops() == 1 && dc.bracelets() == 0, "circle composition miscounted");
    rec.check(db.loops() == 0 && db.bracelets() == 1, "bracelet composition miscounted");
    rec.check(!eq_in(Category::cyl, circle, bracelet), "circle equals bracelet in cylinder");

    // Windings outside {-1,0,1} throw; random evaluation doubles as the probe.
    WordSampler sampler(seed, 8, 20);
    for (int i = 0; i < samples; ++i) {
        try {
            const GeneratorWord w = sampler.random_word(true);
            evaluate(w).validate();
            rec.check(true, "");
        } catch (const Error& e) {
            rec.check(false, e.what());
        }
    }
    return r;
}

SuiteResult category_tower_suite(int pairs, unsigned long long seed) {
    SuiteResult r;
    r.name = "category tower suite";
    Recorder rec{r};
    WordSampler sampler(seed, 8, 12);
    for (int i = 0; i < pairs; ++i) {
        const GeneratorWord u = sampler.random_word(true);
        const GeneratorWord v = i % 3 == 0   ? sampler.twin_of(eliminate_twist_inverses(u))
                                : i % 3 == 1 ? sampler.random_word_between(u.n_in(), u.n_out(), true)
                                              : u;
        const bool in_da = eq_in(Category::da, u, v);
        const bool in_cyla = eq_in(Category::cyla, u, v);
        const bool in_cyl = eq_in(Category::cyl, u, v);
        rec.check(!in_da || in_cyla, "da equality without loop-counting equality: " +
                                         print_word(u) + " vs " + print_word(v));
        rec.check(!in_cyla || in_cyl, "loop-counting equality without cylinder equality: " +
                                          print_word(u) + " vs " + print_word(v));
    }
    for (int k = 2; k <= 4; ++k) {
        const GeneratorWord full = power(Generator::twist(k), k);
        const GeneratorWord id = GeneratorWord::identity(k);
        rec.check(!eq_in(Category::da, full, id) && eq_in(Category::cyla, full, id),
                  "full twist fails to witness strictness at arity " + std::to_string(k));
        const GeneratorWord circle =
            GeneratorWord::of({Generator::birth(k, 1), Generator::death(k + 2, 1)});
        rec.check(!eq_in(Category::cyla, circle, id) && eq_in(Category::cyl, circle, id),
                  "circle pair fails to witness strictness at arity " + std::to_string(k));
    }
    return r;
}

SuiteResult cyclic_embedding_suite(int max_n) {
    SuiteResult r;
    r.name = "cyclic embedding suite (n <= " + std::to_string(max_n) + ")";
    Recorder rec{r};

    struct Pair {
        CyclicWord lhs, rhs;
        std::string what;
    };
    std::vector<Pair> cyclic_pairs;

    // simplicial identities as cyclic words (faces/degens only)
    std::vector<std::pair<SimplicialWord, SimplicialWord>> simplicial_pairs;
    std::vector<std::string> simplicial_what;
    const auto add_simp = [&](const SimplicialWord& a, const SimplicialWord& b,
                              const std::string& what) {
        simplicial_pairs.emplace_back(a, b);
        simplicial_what.push_back(what);
    };

    for (int n = 0; n <= max_n; ++n) {
        // faces commute: level n+1 down to n-1
        if (n >= 1) {
            for (int j = 0; j <= n + 1; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (i > n) continue;
                    SimplicialWord a = SimplicialWord::identity(n + 1);
                    a.append_face(n + 1, j);
                    a.append_face(n, i);
                    SimplicialWord b = SimplicialWord::identity(n + 1);
                    b.append_face(n + 1, i);
                    b.append_face(n, j - 1);
                    add_simp(a, b, "face-face n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                       " j=" + std::to_string(j));
                }
            }
        }
        // degeneracies commute
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= j; ++i) {
                if (i > n + 1) continue;
                SimplicialWord a = SimplicialWord::identity(n);
                a.append_degen(n, j);
                a.append_degen(n + 1, i);
                SimplicialWord b = SimplicialWord::identity(n);
                b.append_degen(n, i);
                b.append_degen(n + 1, j + 1);
                add_simp(a, b, "degen-degen n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j));
            }
        }
        // mixed face/degeneracy
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= n + 1; ++i) {
                SimplicialWord a = SimplicialWord::identity(n);
                a.append_degen(n, j);
                a.append_face(n + 1, i);
                SimplicialWord b = SimplicialWord::identity(n);
                if (i < j) {
                    b.append_face(n, i);
                    b.append_degen(n - 1, j - 1);
                } else if (i > j + 1) {
                    b.append_face(n, i - 1);
                    b.append_degen(n - 1, j);
                }  // i = j, j+1: identity
                add_simp(a, b, "face-degen n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j));
            }
        }
    }

    // 1) simplicial oracle on the identities themselves
    for (std::size_t i = 0; i < simplicial_pairs.size(); ++i)
        rec.check(monotone_semantics(simplicial_pairs[i].first) ==
                      monotone_semantics(simplicial_pairs[i].second),
                  "monotone semantics differ: " + simplicial_what[i]);

    // 2) doubling functoriality under the same oracle
    for (std::size_t i = 0; i < simplicial_pairs.size(); ++i)
        rec.check(monotone_semantics(delta_double(simplicial_pairs[i].first)) ==
                      monotone_semantics(delta_double(simplicial_pairs[i].second)),
                  "doubled monotone semantics differ: " + simplicial_what[i]);

    // 3) rotation-category relations under the cylinder embedding
    const auto lift_cyclic = [](const SimplicialWord& w) {
        CyclicWord out = CyclicWord::identity(w.n_in());
        for (const SimplicialGen& g : w.gens()) {
            if (g.kind == SimplicialGen::Kind::face)
                out.append_face(g.level, g.index);
            else
                out.append_degen(g.level, g.index);
        }
        return out;
    };
    for (std::size_t i = 0; i < simplicial_pairs.size(); ++i)
        cyclic_pairs.push_back({lift_cyclic(simplicial_pairs[i].first),
                                lift_cyclic(simplicial_pairs[i].second), simplicial_what[i]});

    for (int n = 0; n <= max_n; ++n) {
        {
            CyclicWord a = CyclicWord::identity(n);
            for (int i = 0; i <= n; ++i) a.append_cyc(n);
            cyclic_pairs.push_back({a, CyclicWord::identity(n), "rotation order n=" + std::to_string(n)});
        }
        for (int j = 0; j + 1 <= n; ++j) {
            CyclicWord a = CyclicWord::identity(n);
            a.append_degen(n, j);
            a.append_cyc(n + 1);
            CyclicWord b = CyclicWord::identity(n);
            b.append_cyc(n);
            b.append_degen(n, j + 1);
            cyclic_pairs.push_back(
                {a, b, "rotation-degen n=" + std::to_string(n) + " j=" + std::to_string(j)});
        }
        for (int i = 0; i <= n; ++i) {
            CyclicWord a = CyclicWord::identity(n + 1);
            a.append_face(n + 1, i);
            a.append_cyc(n);
            CyclicWord b = CyclicWord::identity(n + 1);
            b.append_cyc(n + 1);
            b.append_face(n + 1, i + 1);
            cyclic_pairs.push_back(
                {a, b, "rotation-face n=" + std::to_string(n) + " i=" + std::to_string(i)});
        }
    }
    for (const Pair& p : cyclic_pairs) {
        const GeneratorWord lw = lambda_to_cyl(p.lhs);
        const GeneratorWord rw = lambda_to_cyl(p.rhs);
        rec.check(eq_in(Category::cyl, lw, rw), "cyclic embedding fails: " + p.what);
        // parity: images live on even circles
        rec.check(lw.n_in() % 2 == 0 && lw.n_out() % 2 == 0, "odd image: " + p.what);
    }

    // 4) square-root relations under the embedding
    for (int n = 0; n <= max_n; ++n) {
        {
            SqrtCyclicWord a = SqrtCyclicWord::identity(n);
            for (int i = 0; i < 2 * (n + 1); ++i) a.append_sqrt_cyc(n);
            rec.check(eq_in(Category::cyl, sqrtlambda_to_cyl(a),
                            GeneratorWord::identity(2 * (n + 1))),
                      "square-root rotation order n=" + std::to_string(n));
        }
        for (int j = 0; j + 1 <= n; ++j) {
            SqrtCyclicWord a = SqrtCyclicWord::identity(n);
            a.append_degen(n, j);
            a.append_sqrt_cyc(n + 1);
            a.append_sqrt_cyc(n + 1);
            SqrtCyclicWord b = SqrtCyclicWord::identity(n);
            b.append_sqrt_cyc(n);
            b.append_sqrt_cyc(n);
            b.append_degen(n, j + 1);
            rec.check(eq_in(Category::cyl, sqrtlambda_to_cyl(a), sqrtlambda_to_cyl(b)),
                      "square-root degen slide n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
        for (int i = 0; i <= n; ++i) {
            SqrtCyclicWord a = SqrtCyclicWord::identity(n + 1);
            a.append_face(n + 1, i);
            a.append_sqrt_cyc(n);
            a.append_sqrt_cyc(n);
            SqrtCyclicWord b = SqrtCyclicWord::identity(n + 1);
            b.append_sqrt_cyc(n + 1);
            b.append_sqrt_cyc(n + 1);
            b.append_face(n + 1, i + 1);
            rec.check(eq_in(Category::cyl, sqrtlambda_to_cyl(a), sqrtlambda_to_cyl(b)),
                      "square-root face slide n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        // squared square root equals the embedded rotation
        SqrtCyclicWord sq = SqrtCyclicWord::identity(n);
        sq.append_sqrt_cyc(n);
        sq.append_sqrt_cyc(n);
        CyclicWord rot = CyclicWord::identity(n);
        rot.append_cyc(n);
        rec.check(evaluate(sqrtlambda_to_cyl(sq)) == evaluate(lambda_to_cyl(rot)),
                  "squared square root differs from the rotation at n=" + std::to_string(n));
    }

    // 5) annular translation: rotation conjugation and loop bookkeeping
    const auto wrap = [](int i, int m) { return (i - 1) % m + 1; };
    for (int n = 1; n <= max_n; ++n) {
        for (int i = 1; i <= n; ++i) {
            // i = n-1 would slide the cap across the edge slot, which is not
            // a plain rotation slide; i = n wraps the slot index cleanly.
            if (i == n - 1) continue;
            AtlWord a = AtlWord::identity(n);
            a.append_cap(n, i);
            if (n - 1 >= 1) a.append_rot(n - 1);
            AtlWord b = AtlWord::identity(n);
            b.append_rot(n);
            b.append_cap(n, wrap(i + 1, n));
            const AtlImage ia = atl_to_cyla(a);
            const AtlImage ib = atl_to_cyla(b);
            rec.check(eq_in(Category::cyla, ia.word, ib.word) &&
                          evaluate(ia.word).loops() + ia.loop_tally ==
                              evaluate(ib.word).loops() + ib.loop_tally,
                      "annular cap rotation n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        // Cup slots, unlike cap slots, do not close up cyclically under twist
        // conjugation (a full cycle picks up an inverse double twist), so the
        // rotation slide is only a relation away from the wrap.
        for (int i = 1; i + 1 <= n; ++i) {
            AtlWord a = AtlWord::identity(n);
            a.append_cup(n, i);
            a.append_rot(n + 1);
            AtlWord b = AtlWord::identity(n);
            b.append_rot(n);
            b.append_cup(n, i + 1);
            const AtlImage ia = atl_to_cyla(a);
            const AtlImage ib = atl_to_cyla(b);
            rec.check(eq_in(Category::cyla, ia.word, ib.word),
                      "annular cup rotation n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        for (int i = 1; i <= n; ++i) {
            // capping the cup just born marks one loop
            AtlWord a = AtlWord::identity(n);
            a.append_cup(n, i);
            a.append_cap(n + 1, i);
            AtlWord b = AtlWord::identity(n);
            b.append_loop_id(n, 1, 0);
            const AtlImage ia = atl_to_cyla(a);
            const AtlImage ib = atl_to_cyla(b);
            rec.check(eq_in(Category::cyl, ia.word, ib.word) &&
                          evaluate(ia.word).loops() + ia.loop_tally ==
                              evaluate(ib.word).loops() + ib.loop_tally,
                      "annular cup-cap loop n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        AtlImage rot_img = atl_to_cyla([&] {
            AtlWord w = AtlWord::identity(n);
            w.append_rot(n);
            return w;
        }());
        rec.check(rot_img.word.n_in() % 2 == 0, "annular image parity n=" + std::to_string(n));
    }
    return r;
}

SuiteResult tl_suite(int pairs, unsigned long long seed) {
    SuiteResult r;
    r.name = "affine TL suite";
    Recorder rec{r};
    WordSampler sampler(seed, 6, 8);

    for (int i = 0; i < pairs; ++i) {
        const auto [f, g] = sampler.composable_pair();
        const AffineDiagram df = evaluate(f);
        const AffineDiagram dg = evaluate(g);
        const AffineDiagram composed = compose_diagrams(df, dg);
        const long long formed = composed.loops() - df.loops() - dg.loops();

        const TLElement x = TLElement::from_word(f);
        const TLElement y = TLElement::from_word(g);
        const TLElement xy = tl_compose(x, y);
        rec.check(xy.terms().size() == 1, "singleton product has several terms");
        if (xy.terms().size() == 1) {
            const auto& [key, coeff] = *xy.terms().begin();
            rec.check(coeff == DeltaPoly::delta_power(df.loops() + dg.loops() + formed),
                      "delta exponent disagrees with the loop increment for " + print_word(f) +
                          " then " + print_word(g));
            rec.check(key == composed.with_loops(0), "product key differs from the composition");
        }
    }

    WordSampler small(seed + 1, 4, 6);
    for (int i = 0; i < pairs / 2; ++i) {
        const GeneratorWord w = small.random_word();
        for (int dim = 1; dim <= 3; ++dim) {
            const BarRep rep(dim);
            rec.check(tl_evaluate(TLElement::from_word(w), rep, dim) == word_matrix(w, dim),
                      "tl_evaluate at delta=dim differs from word_matrix for " + print_word(w));
        }
    }
    return r;
}

SuiteResult parser_roundtrip_suite(int samples, unsigned long long seed) {
    SuiteResult r;
    r.name = "parser round-trip suite";
    Recorder rec{r};
    WordSampler sampler(seed, 10, 20);
    for (int i = 0; i < samples; ++i) {
        const GeneratorWord w = sampler.random_word(true);
        const std::string text = print_word(w);
        try {
            rec.check(parse_word(text) == w, "round trip changed the word: " + text);
        } catch (const Error& e) {
            rec.check(false, "round trip failed to parse '" + text + "': " + e.what());
        }
    }
    return r;
}

std::vector<SuiteResult> run_all_suites(int max_arity, int samples, unsigned long long seed) {
    std::vector<SuiteResult> out;
    out.push_back(relation_suite(max_arity));
    out.push_back(normal_form_suite(samples, std::max(samples / 2, 1), seed, 10, 20));
    out.push_back(matrix_relation_suite(std::min(max_arity, 8), 512 * 512));
    out.push_back(matrix_homomorphism_suite(std::min(samples, 200), seed + 1));
    out.push_back(loop_discrimination_suite(samples, seed + 2));
    out.push_back(category_tower_suite(std::min(samples, 200), seed + 3));
    out.push_back(cyclic_embedding_suite(5));
    out.push_back(tl_suite(std::min(samples, 100), seed + 4));
    out.push_back(parser_roundtrip_suite(samples, seed + 5));
    return out;
}

}  // namespace cylcob
