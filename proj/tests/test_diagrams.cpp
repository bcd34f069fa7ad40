#include "doctest.h"

#include "dh/diagrams.hpp"
#include "dh/error.hpp"

using namespace dh;

namespace {

Graph parallel_arrows()
{
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_arrow("u0", "a", "b");
    g.add_arrow("u1", "a", "b");
    return g;
}

PermGroup s3() { return PermGroup::symmetric(3); }
PermGroup a3() { return PermGroup(3, {perm::cycle(3, {0, 1, 2})}); }
PermGroup z2_in_s3() { return PermGroup(3, {perm::cycle(3, {0, 1})}); }

Perm id3() { return perm::identity(3); }

// A_3 => S_3 by inclusion and by conjugation with (0 1).
GroupDiagram alternating_pair()
{
    Perm r = perm::cycle(3, {0, 1, 2});
    return GroupDiagram(FreeCategory::free(parallel_arrows()), {a3(), s3()},
                        {{r}, {perm::conjugate(r, perm::cycle(3, {0, 1}))}});
}

// Z_2 => S_3 by inclusion and the trivial map.
GroupDiagram inclusion_and_trivial()
{
    return GroupDiagram(FreeCategory::free(parallel_arrows()), {z2_in_s3(), s3()},
                        {{perm::cycle(3, {0, 1})}, {id3()}});
}

Graph chain_with_shortcut()
{
    Graph g;
    for (auto v : {"a", "b", "c"})
        g.add_vertex(v);
    g.add_arrow("f", "a", "b");
    g.add_arrow("g", "b", "c");
    g.add_arrow("h", "a", "c");
    return g;
}

}  // namespace

TEST_CASE("word reduction")
{
    CHECK(reduce_word({1, 2, -2, -1, 3}) == Word{3});
    CHECK(reduce_word({1, -1}).empty());
    CHECK(reduce_word({2, 1, -1, 2}) == Word{2, 2});
}

TEST_CASE("finite diagrams validate")
{
    GroupDiagram d = alternating_pair();
    CHECK(d.is_finite());
    CHECK(d.arrow(0).hom().has_value());
    GroupHom f = d.finite_morphism_map(d.base().arrow_morphism(1));
    CHECK(f.is_injective());
}

TEST_CASE("endpoint mismatches are rejected")
{
    auto wrong_count = [] {
        GroupDiagram(FreeCategory::free(parallel_arrows()), {s3(), s3()},
                     {{perm::cycle(3, {0, 1})}, {id3(), id3()}});
    };
    CHECK_THROWS_WITH_AS(wrong_count(), doctest::Contains("u0"), Error);
    try {
        wrong_count();
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Endpoint);
    }
    try {
        GroupDiagram(FreeCategory::free(parallel_arrows()), {z2_in_s3(), PermGroup::cyclic(4)},
                     {{id3()}, {perm::identity(4)}});
        FAIL("expected an endpoint error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Endpoint);
    }
}

TEST_CASE("ill-defined arrows report validation errors")
{
    try {
        // Sending the 3-cycle to a transposition is not a homomorphism.
        GroupDiagram(FreeCategory::free(parallel_arrows()), {a3(), s3()},
                     {{perm::cycle(3, {0, 1})}, {id3()}});
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
        CHECK(std::string(e.what()).find("u0") != std::string::npos);
    }
    try {
        GroupDiagram(FreeCategory::free(parallel_arrows()), {s3(), SymbolicGroup::free(1)},
                     {{Word{1}, Word{}}, {Word{}, Word{}}});
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
}

TEST_CASE("poset diagrams must commute")
{
    FreeCategory poset = FreeCategory::poset(chain_with_shortcut());
    Perm t = perm::cycle(3, {0, 1});
    // Z_2 -> Z_2 -> S_3 against Z_2 -> S_3.
    std::vector<DiagramGroup> objects = {z2_in_s3(), z2_in_s3(), s3()};
    CHECK_NOTHROW(GroupDiagram(poset, objects, {{t}, {t}, {t}}));
    try {
        GroupDiagram(poset, objects, {{t}, {t}, {id3()}});
        FAIL("expected a functoriality error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Functoriality);
    }
    // The same data over the free category is fine.
    CHECK_NOTHROW(GroupDiagram(FreeCategory::free(chain_with_shortcut()), objects, {{t}, {t}, {id3()}}));

    std::vector<FpAbelianGroup> ab(3, FpAbelianGroup(1));
    AbHom one = AbHom::identity(ab[0]);
    CHECK_NOTHROW(AbelianDiagram(poset, ab, {one, one, one}));
    CHECK_THROWS_AS(AbelianDiagram(poset, ab, {one, one, one.scaled(2)}), Error);
}

TEST_CASE("free objects and word arrows")
{
    // Z => S_3 sending the generator to a transposition and to a 3-cycle.
    GroupDiagram d(FreeCategory::free(parallel_arrows()), {SymbolicGroup::infinite_cyclic(), s3()},
                   {{perm::cycle(3, {0, 1})}, {perm::cycle(3, {0, 1, 2})}});
    CHECK_FALSE(d.is_finite());
    GroupElement x = d.apply_arrow(1, Word{1, 1, 1});
    CHECK(elements_equal(x, id3()));
    CHECK_THROWS_AS(d.finite_object(0), Error);

    GroupDiagram f(FreeCategory::free(parallel_arrows()), {SymbolicGroup::free(2), SymbolicGroup::free(2)},
                   {{Word{1, 2}, Word{-2}}, {Word{2}, Word{1}}});
    CHECK(elements_equal(f.apply_arrow(0, Word{1, 2}), Word{1}));
    CHECK(elements_equal(f.apply_arrow(0, Word{-1}), Word{-2, -1}));

    AbelianDiagram ab = abelianize(f);
    CHECK(ab.arrow(0).matrix() == IntMatrix::from_rows({{1, 0}, {1, -1}}));

    // Cyclic symbolic objects become permutation groups.
    GroupDiagram c(FreeCategory::free(parallel_arrows()), {SymbolicGroup::cyclic(2), SymbolicGroup::cyclic(4)},
                   {{perm::multiply(perm::cycle(4, {0, 1, 2, 3}), perm::cycle(4, {0, 1, 2, 3}))}, {perm::identity(4)}});
    CHECK(c.is_finite());
}

TEST_CASE("abelianization of diagrams")
{
    AbelianDiagram ab = abelianize(inclusion_and_trivial());
    CHECK(ab.object(0).to_string() == "Z/2");
    CHECK(ab.object(1).to_string() == "Z/2");
    CHECK(ab.arrow(0).is_isomorphism());
    CHECK(ab.arrow(1).is_zero());

    AbelianDiagram alt = abelianize(alternating_pair());
    CHECK(alt.object(0).to_string() == "Z/3");
    CHECK(alt.arrow(0).is_zero());
    CHECK(alt.arrow(1).is_zero());

    AbelianDiagram n = ab.normalized();
    CHECK(n.object(0).to_string() == "Z/2");
    CHECK(n.arrow(0).is_isomorphism());
    CHECK(n.arrow(1).is_zero());
}

TEST_CASE("homology diagrams")
{
    GroupDiagram d = inclusion_and_trivial();
    AbelianDiagram h0 = homology_diagram(d, 0);
    CHECK(h0.object(1).to_string() == "Z^1");
    CHECK(h0.arrow(0).is_isomorphism());

    AbelianDiagram h1 = homology_diagram(d, 1);
    AbelianDiagram ab = abelianize(d);
    for (std::size_t v = 0; v < 2; ++v)
        CHECK(h1.object(v) == ab.object(v));
    CHECK(h1.arrow(0).is_isomorphism());
    CHECK(h1.arrow(1).is_zero());

    AbelianDiagram h2 = homology_diagram(d, 2);
    CHECK(h2.object(0).is_trivial());
    CHECK(h2.object(1).is_trivial());

    AbelianDiagram h3 = homology_diagram(d, 3);
    CHECK(h3.object(0).to_string() == "Z/2");
    CHECK(h3.object(1).to_string() == "Z/6");
    CHECK(h3.arrow(0).is_injective());
    CHECK(h3.arrow(1).is_zero());
}

TEST_CASE("degree-one homology of free-to-finite arrows")
{
    GroupDiagram d(FreeCategory::free(parallel_arrows()), {SymbolicGroup::free(2), s3()},
                   {{perm::cycle(3, {0, 1}), id3()}, {perm::cycle(3, {0, 1, 2}), perm::cycle(3, {1, 2})}});
    AbelianDiagram h1 = homology_diagram(d, 1);
    AbelianDiagram ab = abelianize(d);
    CHECK(h1.object(0).to_string() == "Z^2");
    CHECK(h1.object(1).to_string() == "Z/2");
    // Transpositions generate H_1(S_3); 3-cycles and the identity vanish.
    CHECK(h1.arrow(0).is_surjective());
    CHECK(h1.arrow(0).kernel().source().free_rank() == 2);
    for (std::size_t a = 0; a < 2; ++a) {
        IntVector e0{Integer(1), Integer(0)}, e1{Integer(0), Integer(1)};
        CHECK(h1.arrow(a).target().is_zero(h1.arrow(a).apply(e0)) == ab.arrow(a).target().is_zero(ab.arrow(a).apply(e0)));
        CHECK(h1.arrow(a).target().is_zero(h1.arrow(a).apply(e1)) == ab.arrow(a).target().is_zero(ab.arrow(a).apply(e1)));
    }
    CHECK(homology_diagram(d, 2).arrow(0).is_zero());
}
