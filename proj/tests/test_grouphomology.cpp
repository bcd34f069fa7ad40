#include "doctest.h"

#include "dh/error.hpp"
#include "dh/grouphomology.hpp"

using namespace dh;

namespace {

PermGroup s3() { return PermGroup::symmetric(3); }

// Z_2 as the transposition (0 1) inside S_3.
PermGroup z2_in_s3() { return PermGroup(3, {perm::cycle(3, {0, 1})}); }

}  // namespace

TEST_CASE("integral homology of small groups")
{
    CHECK(group_homology(s3(), 0).to_string() == "Z^1");
    CHECK(group_homology(s3(), 1).to_string() == "Z/2");
    CHECK(group_homology(s3(), 2).is_trivial());
    CHECK(group_homology(s3(), 3).to_string() == "Z/6");
    PermGroup z2 = PermGroup::cyclic(2);
    CHECK(group_homology(z2, 2).is_trivial());
    CHECK(group_homology(z2, 3).to_string() == "Z/2");
    CHECK(group_homology(PermGroup::trivial(), 2).is_trivial());
    CHECK(group_homology(PermGroup::trivial(), 0).to_string() == "Z^1");
}

TEST_CASE("H_1 agrees with the abelianization")
{
    PermGroup a3 = PermGroup(3, {perm::cycle(3, {0, 1, 2})});
    for (const auto& g : {s3(), a3, PermGroup::cyclic(4), PermGroup(4, {perm::cycle(4, {0, 1}), perm::cycle(4, {2, 3})})})
        CHECK(group_homology(g, 1) == abelianization(g).group);
}

TEST_CASE("closed forms agree with the bar resolution")
{
    for (std::size_t m : {1, 2, 3, 4, 6})
        for (std::size_t n = 0; n <= 3; ++n)
            CHECK(closed_form_homology(SymbolicGroup::cyclic(m), n) == group_homology(PermGroup::cyclic(m), n));
    CHECK(closed_form_homology(SymbolicGroup::cyclic(6), 2).is_trivial());
    CHECK(closed_form_homology(SymbolicGroup::cyclic(2), 3).to_string() == "Z/2");
    CHECK(closed_form_homology(SymbolicGroup::free(1), 2).is_trivial());
    CHECK(closed_form_homology(SymbolicGroup::free(3), 1).to_string() == "Z^3");
    CHECK(closed_form_homology(SymbolicGroup::trivial(), 1).is_trivial());
}

TEST_CASE("bar complex ranks and bounds")
{
    BarComplex bar(s3(), 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        std::size_t expected = 1;
        for (std::size_t i = 0; i < n; ++i)
            expected *= 5;
        CHECK(bar.rank(n) == expected);
    }
    CHECK(bar.index(bar.tuple(3, 77)) == 77);
    CHECK_THROWS_AS(group_homology(PermGroup::symmetric(4), 4, 1000), Error);
}

TEST_CASE("induced maps in degree three")
{
    GroupHom inc = GroupHom::inclusion(z2_in_s3(), s3());
    AbHom h3 = induced_map(inc, 3);
    CHECK(h3.source().to_string() == "Z/2");
    CHECK(h3.target().to_string() == "Z/6");
    CHECK(h3.is_injective());

    GroupHom triv = GroupHom::trivial(z2_in_s3(), s3());
    CHECK(induced_map(triv, 3).is_zero());

    AbHom id = induced_map(GroupHom::identity(s3()), 3);
    CHECK(id.equals(AbHom::identity(id.source())));
}

TEST_CASE("induced maps are functorial")
{
    PermGroup g = s3();
    Perm t = perm::cycle(3, {1, 2});
    std::vector<Perm> conj;
    for (const auto& x : g.generators())
        conj.push_back(perm::conjugate(x, t));
    GroupHom inner(g, g, conj);
    GroupHom inc = GroupHom::inclusion(z2_in_s3(), g);
    GroupHom sign(g, PermGroup::cyclic(2), {perm::cycle(2, {0, 1}), perm::identity(2)});
    for (std::size_t n : {1, 3}) {
        BarHomology hz = bar_homology(z2_in_s3(), n);
        BarHomology hs = bar_homology(g, n);
        BarHomology h2 = bar_homology(PermGroup::cyclic(2), n);
        CHECK(induced_map(inc.then(inner), hz, hs).equals(induced_map(inc, hz, hs).then(induced_map(inner, hs, hs))));
        CHECK(induced_map(inc.then(sign), hz, h2)
                  .equals(induced_map(inc, hz, hs).then(induced_map(sign, hs, h2))));
        CHECK(induced_map(inc.then(sign), hz, h2).is_isomorphism());
    }
}
