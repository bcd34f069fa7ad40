#include "doctest.h"

#include "dh/connectivity.hpp"
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

GroupDiagram inclusion_and_trivial(const PermGroup& sub)
{
    std::vector<GroupElement> inc(sub.generators().begin(), sub.generators().end());
    std::vector<GroupElement> triv(sub.generators().size(), perm::identity(3));
    return GroupDiagram(FreeCategory::free(parallel_arrows()), {sub, PermGroup::symmetric(3)}, {inc, triv});
}

GroupDiagram sphere()
{
    Graph g;
    for (auto v : {"a", "b", "c"})
        g.add_vertex(v);
    g.add_arrow("f", "a", "b");
    g.add_arrow("g", "a", "c");
    return GroupDiagram(FreeCategory::free(g),
                        {SymbolicGroup::infinite_cyclic(), SymbolicGroup::trivial(), SymbolicGroup::trivial()},
                        {{Word{}}, {Word{}}});
}

// Z/2 => Z/2 x Z/2 <= Z/2, each pair killing one factor.
GroupDiagram klein_killed()
{
    Graph g;
    for (auto v : {"a1", "b", "a2"})
        g.add_vertex(v);
    g.add_arrow("u", "a1", "b");
    g.add_arrow("v", "a1", "b");
    g.add_arrow("w", "a2", "b");
    g.add_arrow("x", "a2", "b");
    PermGroup z2 = PermGroup::cyclic(2);
    Perm p = perm::cycle(4, {0, 1}), q = perm::cycle(4, {2, 3}), e = perm::identity(4);
    PermGroup klein(4, {p, q});
    return GroupDiagram(FreeCategory::free(g), {z2, klein, z2}, {{p}, {e}, {q}, {e}});
}

}  // namespace

TEST_CASE("nontrivial colimit gives connectivity zero")
{
    ConnectivityReport r = connectivity(inclusion_and_trivial(PermGroup(3, {perm::cycle(3, {0, 1, 2})})));
    REQUIRE(r.cocon.has_value());
    CHECK(*r.cocon == 0);
    CHECK(r.colim.group.order() == 2);
    CHECK(r.trail.empty());
    CHECK(r.first_group_description() == "finite group of order 2, abelian Z/2");
}

TEST_CASE("inclusion and trivial map of Z/2 into S_3")
{
    ConnectivityReport r = connectivity(inclusion_and_trivial(PermGroup(3, {perm::cycle(3, {0, 1})})));
    REQUIRE(r.cocon.has_value());
    CHECK(*r.cocon == 2);
    REQUIRE(r.first_group.has_value());
    CHECK(r.first_group->to_string() == "Z/3");
    REQUIRE(r.trail.size() == 2);
    CHECK(r.trail[0].dimension == 2);
    CHECK(r.trail[0].left.is_trivial());
    CHECK(r.trail[0].right.is_trivial());
    CHECK(r.trail[1].left.to_string() == "Z/3");
    CHECK(r.trail[1].right.is_trivial());
    CHECK(r.trail[1].resolution == SesRecord::Resolution::Left);

    ConnectivityReport shallow = connectivity(inclusion_and_trivial(PermGroup(3, {perm::cycle(3, {0, 1})})), 1);
    CHECK_FALSE(shallow.cocon.has_value());
    CHECK(shallow.lower_bound == 2);

    ComparCriterion c = compar_criterion(inclusion_and_trivial(PermGroup(3, {perm::cycle(3, {0, 1})})));
    CHECK(c.colim_h2.is_trivial());
    CHECK(c.iso);
    CHECK(c.colim1_ab.is_trivial());
}

TEST_CASE("sphere diagram")
{
    ConnectivityReport r = connectivity(sphere());
    REQUIRE(r.cocon.has_value());
    CHECK(*r.cocon == 1);
    CHECK(r.first_group->to_string() == "Z^1");
    CHECK(r.trail[0].resolution == SesRecord::Resolution::Right);

    ComparCriterion c = compar_criterion(sphere());
    CHECK(c.iso);
    CHECK(c.colim1_ab.to_string() == "Z^1");
}

TEST_CASE("criterion fails when H_2 survives the colimit")
{
    GroupDiagram d = klein_killed();
    ComparCriterion c = compar_criterion(d);
    CHECK(c.colim_h2.to_string() == "Z/2");
    CHECK_FALSE(c.iso);
    ConnectivityReport r = connectivity(d);
    REQUIRE(r.cocon.has_value());
    CHECK(*r.cocon == 1);
    CHECK(r.trail[0].left.to_string() == "Z/2");
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(compar_criterion(inclusion_and_trivial(PermGroup(3, {perm::cycle(3, {0, 1, 2})}))), Error);

    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_arrow("f", "a", "b");
    PermGroup z2 = PermGroup::cyclic(2);
    GroupDiagram poset(FreeCategory::poset(g), {z2, z2}, {{perm::cycle(2, {0, 1})}});
    CHECK_THROWS_AS(connectivity(poset), Error);

    GroupDiagram free(FreeCategory::free(parallel_arrows()), {SymbolicGroup::infinite_cyclic(), SymbolicGroup::infinite_cyclic()},
                      {{Word{1}}, {Word{1}}});
    try {
        connectivity(free, 3, 200);
        FAIL("expected an unknown colimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownColim);
    }
}
