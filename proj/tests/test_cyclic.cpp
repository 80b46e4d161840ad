#include "doctest.h"

#include <random>

#include "cylcob/bar_rep.hpp"
#include "cylcob/cyclic.hpp"
#include "cylcob/invariants.hpp"

using namespace cylcob;

TEST_CASE("monotone semantics of single generators") {
    SimplicialWord face = SimplicialWord::identity(1);
    face.append_face(1, 0);
    const MonotoneMap m = monotone_semantics(face);
    CHECK(m.domain_points == 1);
    CHECK(m.codomain_points == 2);
    CHECK(m.table == std::vector<int>{1});  // the coface skipping 0

    SimplicialWord unit = SimplicialWord::identity(0);
    unit.append_degen(0, 0);
    unit.append_face(1, 0);
    CHECK(monotone_semantics(unit) == MonotoneMap::identity(1));
}

TEST_CASE("face commutation instance under the oracle") {
    // two routes [3] -> [1] that the simplicial identities equate
    SimplicialWord a = SimplicialWord::identity(3);
    a.append_face(3, 2);
    a.append_face(2, 0);
    SimplicialWord b = SimplicialWord::identity(3);
    b.append_face(3, 0);
    b.append_face(2, 1);
    CHECK(monotone_semantics(a) == monotone_semantics(b));
}

TEST_CASE("rotation words embed into the cylinder") {
    CyclicWord rot = CyclicWord::identity(1);
    rot.append_cyc(1);
    CHECK(lambda_to_cyl(rot) == power(Generator::twist(4), 2));

    CyclicWord face = CyclicWord::identity(2);
    face.append_face(2, 1);
    CHECK(lambda_to_cyl(face) == GeneratorWord::of(Generator::death(6, 2)));

    CHECK(lambda_to_cyl(CyclicWord::identity(3)) == GeneratorWord::identity(8));

    // degeneracies land on odd slots so both off-diagonal cancellations hold
    CyclicWord degen = CyclicWord::identity(2);
    degen.append_degen(2, 1);
    CHECK(lambda_to_cyl(degen) == GeneratorWord::of(Generator::birth(6, 3)));
    for (int n = 0; n <= 4; ++n) {
        for (int j = 0; j <= n; ++j) {
            for (int i : {j, j + 1}) {
                CyclicWord w = CyclicWord::identity(n);
                w.append_degen(n, j);
                w.append_face(n + 1, i);
                CHECK(eq_in(Category::cyl, lambda_to_cyl(w),
                            GeneratorWord::identity(2 * (n + 1))));
            }
        }
    }
}

TEST_CASE("square-root rotation words embed into the cylinder") {
    SqrtCyclicWord r = SqrtCyclicWord::identity(2);
    r.append_sqrt_cyc(2);
    CHECK(sqrtlambda_to_cyl(r) == GeneratorWord::of(Generator::twist(6)));

    for (int n = 0; n <= 5; ++n) {
        SqrtCyclicWord full = SqrtCyclicWord::identity(n);
        for (int i = 0; i < 2 * (n + 1); ++i) full.append_sqrt_cyc(n);
        CHECK(eq_in(Category::cyl, sqrtlambda_to_cyl(full),
                    GeneratorWord::identity(2 * (n + 1))));

        SqrtCyclicWord squared = SqrtCyclicWord::identity(n);
        squared.append_sqrt_cyc(n);
        squared.append_sqrt_cyc(n);
        CyclicWord rot = CyclicWord::identity(n);
        rot.append_cyc(n);
        CHECK(sqrtlambda_to_cyl(squared) == lambda_to_cyl(rot));
    }
}

TEST_CASE("doubling generator images") {
    SimplicialWord face = SimplicialWord::identity(2);
    face.append_face(2, 1);
    SimplicialWord expect = SimplicialWord::identity(5);
    expect.append_face(5, 4);
    expect.append_face(4, 1);
    CHECK(delta_double(face) == expect);

    CHECK(delta_double(SimplicialWord::identity(3)) == SimplicialWord::identity(7));

    // the double of a face deletes the point in each interleaved copy
    const MonotoneMap m = monotone_semantics(delta_double(face));
    CHECK(m.domain_points == 4);
    CHECK(m.codomain_points == 6);
    CHECK(m.table == std::vector<int>{0, 2, 3, 5});  // skips 1 and 4
}

TEST_CASE("doubling preserves a face commutation instance") {
    SimplicialWord a = SimplicialWord::identity(4);
    a.append_face(4, 2);
    a.append_face(3, 0);
    SimplicialWord b = SimplicialWord::identity(4);
    b.append_face(4, 0);
    b.append_face(3, 1);
    CHECK(monotone_semantics(delta_double(a)) == monotone_semantics(delta_double(b)));
}

TEST_CASE("doubling a rotation factors through the square root") {
    CyclicWord rot = CyclicWord::identity(2);
    rot.append_cyc(2);
    SqrtCyclicWord expect = SqrtCyclicWord::identity(5);
    expect.append_sqrt_cyc(5);
    expect.append_sqrt_cyc(5);
    CHECK(delta_double(rot) == expect);
}

TEST_CASE("annular translation") {
    AtlWord rot = AtlWord::identity(3);
    rot.append_rot(3);
    CHECK(atl_to_cyla(rot).word == power(Generator::twist(6), 2));

    AtlWord cap = AtlWord::identity(3);
    cap.append_cap(3, 2);
    CHECK(atl_to_cyla(cap).word == GeneratorWord::of(Generator::death(6, 4)));

    AtlWord marked = AtlWord::identity(2);
    marked.append_loop_id(2, 1, 1);
    const AtlImage img = atl_to_cyla(marked);
    CHECK(img.word == GeneratorWord::identity(4));
    CHECK(img.loop_tally == 2);

    // images land on even circles
    CHECK(atl_to_cyla(cap).word.n_in() % 2 == 0);
    CHECK(atl_to_cyla(cap).word.n_out() % 2 == 0);
}

TEST_CASE("annular words are chain-typed") {
    AtlWord w = AtlWord::identity(2);
    w.append_cup(2, 1);
    CHECK_THROWS_AS(w.append_cap(2, 1), ArityMismatch);
    CHECK_THROWS_AS(w.append_cap(3, 4), OutOfRange);
    CHECK_NOTHROW(w.append_cap(3, 3));
}

TEST_CASE("extension over the 0-marked circle") {
    // tensor-model data: the retractions fail for dim > 1, the twist pair holds
    for (int dim = 1; dim <= 3; ++dim) {
        const Cyl0ExtensionData data{
            gen_matrix(Generator::death(2, 0), dim), gen_matrix(Generator::death(2, 1), dim),
            gen_matrix(Generator::birth(0, 0), dim), gen_matrix(Generator::birth(0, 1), dim),
            gen_matrix(Generator::twist(2), dim)};
        const Cyl0ExtensionCheck check = check_cyl0_extension_detail(data);
        CHECK(check.twist_death);
        CHECK(check.twist_birth);
        CHECK(check.retraction0 == (dim == 1));
        CHECK(check.retraction1 == (dim == 1));
        CHECK(check_cyl0_extension(data) == (dim == 1));
    }

    // identity maps on equal spaces with the identity twist pass everything
    const Cyl0ExtensionData trivial{Matrix::identity(2), Matrix::identity(2),
                                    Matrix::identity(2), Matrix::identity(2),
                                    Matrix::identity(2)};
    CHECK(check_cyl0_extension(trivial));

    Cyl0ExtensionData bad = trivial;
    bad.twist = Matrix::identity(3);
    CHECK_THROWS_AS(check_cyl0_extension(bad), ShapeMismatch);
}

TEST_CASE("monotone semantics always produces weakly increasing tables") {
    std::mt19937_64 rng(77);
    const auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int trial = 0; trial < 200; ++trial) {
        SimplicialWord w = SimplicialWord::identity(pick(0, 5));
        for (int step = pick(0, 10); step > 0; --step) {
            const int level = w.n_out();
            if (level >= 1 && pick(0, 1))
                w.append_face(level, pick(0, level));
            else
                w.append_degen(level, pick(0, level));
        }
        const MonotoneMap m = monotone_semantics(w);
        CHECK(m.domain_points == w.n_out() + 1);
        CHECK(m.codomain_points == w.n_in() + 1);
        bool monotone = true;
        for (std::size_t i = 0; i + 1 < m.table.size(); ++i)
            if (m.table[i] > m.table[i + 1]) monotone = false;
        for (int v : m.table)
            if (v < 0 || v >= m.codomain_points) monotone = false;
        CHECK(monotone);

        // doubling preserves the classifying map's functoriality marker:
        // doubling then classifying equals classifying then interleaving
        const MonotoneMap dm = monotone_semantics(delta_double(w));
        CHECK(dm.domain_points == 2 * m.domain_points);
        CHECK(dm.codomain_points == 2 * m.codomain_points);
        bool interleaved = true;
        for (int x = 0; x < m.domain_points; ++x) {
            const int n1 = m.codomain_points;
            const int y = m.table[static_cast<std::size_t>(x)];
            // copy structure: first copy at positions 0..dom-1, second mirrors
            if (dm.table[static_cast<std::size_t>(x)] != y) interleaved = false;
            if (dm.table[static_cast<std::size_t>(x + m.domain_points)] != y + n1)
                interleaved = false;
        }
        CHECK(interleaved);
    }
}
