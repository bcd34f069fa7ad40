#include "doctest.h"

#include "dh/error.hpp"
#include "dh/permgroups.hpp"

#include <random>
#include <set>

using namespace dh;

namespace {

using ElementSet = std::set<Perm>;

// Closure of a set under products, starting from the identity.
ElementSet closure(std::size_t degree, const std::vector<Perm>& gens)
{
    ElementSet s{perm::identity(degree)};
    bool grew = true;
    while (grew) {
        grew = false;
        ElementSet next = s;
        for (const auto& a : s)
            for (const auto& g : gens)
                if (next.insert(perm::multiply(a, g)).second)
                    grew = true;
        s = std::move(next);
    }
    return s;
}

ElementSet as_set(const PermGroup& g)
{
    return ElementSet(g.elements().begin(), g.elements().end());
}

ElementSet brute_commutator(const ElementSet& h, const ElementSet& k, std::size_t degree)
{
    std::vector<Perm> comms;
    for (const auto& a : h)
        for (const auto& b : k)
            comms.push_back(perm::commutator(a, b));
    return closure(degree, comms);
}

ElementSet brute_meet(const ElementSet& a, const ElementSet& b)
{
    ElementSet out;
    for (const auto& x : a)
        if (b.count(x))
            out.insert(x);
    return out;
}

PermGroup klein_four()
{
    return PermGroup(4, {perm::cycle(4, {0, 1}), perm::cycle(4, {2, 3})});
}

}  // namespace

TEST_CASE("enumeration matches brute-force closure")
{
    PermGroup s3 = PermGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(as_set(s3) == closure(3, s3.generators()));
    CHECK(PermGroup::trivial().order() == 1);
    CHECK(PermGroup(2, {perm::cycle(2, {0, 1})}).order() == 2);
    CHECK(PermGroup::symmetric(5).order() == 120);
    CHECK(perm::is_identity(s3.elements()[0]));
    CHECK(perm::to_string(perm::cycle(3, {0, 1, 2})) == "(0 1 2)");
}

TEST_CASE("bound is enforced")
{
    PermGroup s6(6, PermGroup::symmetric(6).generators(), 100);
    CHECK_THROWS_AS(s6.order(), Error);
}

TEST_CASE("normal closure")
{
    PermGroup s3 = PermGroup::symmetric(3);
    CHECK(normal_closure(s3, {perm::cycle(3, {0, 1})}).order() == 6);
    PermGroup a3 = normal_closure(s3, {perm::cycle(3, {0, 1, 2})});
    CHECK(a3.order() == 3);
    CHECK(normal_closure(s3, {}).order() == 1);

    // Brute force: subgroup generated by all conjugates.
    PermGroup s4 = PermGroup::symmetric(4);
    Perm x = perm::multiply(perm::cycle(4, {0, 1}), perm::cycle(4, {2, 3}));
    std::vector<Perm> conj;
    for (const auto& g : s4.elements())
        conj.push_back(perm::conjugate(x, g));
    CHECK(as_set(normal_closure(s4, {x})) == closure(4, conj));
}

TEST_CASE("commutators, intersections, kernels and quotients")
{
    PermGroup s3 = PermGroup::symmetric(3);
    PermGroup c = commutator(s3, s3);
    CHECK(as_set(c) == brute_commutator(as_set(s3), as_set(s3), 3));
    CHECK(c.order() == 3);

    PermGroup s4 = PermGroup::symmetric(4);
    PermGroup a4 = commutator(s4, s4);
    CHECK(a4.order() == 12);
    PermGroup v4 = commutator(a4, a4);
    CHECK(as_set(v4) == brute_commutator(as_set(a4), as_set(a4), 4));
    CHECK(v4.order() == 4);

    PermGroup d = PermGroup(4, {perm::cycle(4, {0, 1, 2, 3}), perm::cycle(4, {0, 2})});
    CHECK(as_set(intersect(d, a4)) == brute_meet(as_set(d), as_set(a4)));

    PermGroup z2 = PermGroup::cyclic(2);
    GroupHom triv = GroupHom::trivial(z2, s3);
    CHECK(kernel(triv).order() == 2);
    CHECK(image(triv).order() == 1);

    PermGroup a3 = commutator(s3, s3);
    Quotient q = quotient(s3, a3);
    CHECK(q.group.order() == 2);
    CHECK(as_set(kernel(q.projection)) == as_set(a3));
    PermGroup not_normal(3, {perm::cycle(3, {0, 1})});
    try {
        quotient(s3, not_normal);
        FAIL("expected NotNormal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotNormal);
    }
    Quotient q4 = quotient(s4, v4);
    CHECK(q4.group.order() == 6);
    CHECK(q4.group.order() * v4.order() == s4.order());
}

TEST_CASE("homomorphisms are well defined and multiplicative")
{
    PermGroup s3 = PermGroup::symmetric(3);
    PermGroup z2 = PermGroup::cyclic(2);
    PermGroup s4 = PermGroup::symmetric(4);
    std::vector<GroupHom> homs;
    // sign map S_4 -> Z_2
    homs.emplace_back(s4, z2, std::vector<Perm>{perm::cycle(2, {0, 1}), perm::cycle(2, {0, 1})});
    // S_3 inside S_4, then conjugation by (0 3)
    Perm t = perm::cycle(4, {0, 3});
    std::vector<Perm> imgs;
    for (const auto& g : s3.generators()) {
        Perm e = perm::identity(4);
        for (std::size_t i = 0; i < 3; ++i)
            e[i] = g[i];
        imgs.push_back(perm::conjugate(e, t));
    }
    homs.emplace_back(s3, s4, imgs);
    homs.push_back(homs[1].then(homs[0]));

    std::mt19937 rng(5);
    for (const auto& f : homs) {
        CHECK(graph_subgroup_order(f.source(), f.target(), f.images()) == f.source().order());
        const auto& els = f.source().elements();
        std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
        for (int i = 0; i < 200; ++i) {
            const Perm& x = els[pick(rng)];
            const Perm& y = els[pick(rng)];
            CHECK(f.apply(perm::multiply(x, y)) == perm::multiply(f.apply(x), f.apply(y)));
        }
    }
    CHECK(homs[2].apply(perm::cycle(3, {0, 1})) == perm::cycle(2, {0, 1}));
}

TEST_CASE("ill-defined homomorphisms are rejected with a witness")
{
    PermGroup z2 = PermGroup::cyclic(2);
    PermGroup z3 = PermGroup::cyclic(3);
    std::vector<Perm> bad{perm::cycle(3, {0, 1, 2})};
    CHECK(graph_subgroup_order(z2, z3, bad) != z2.order());
    try {
        GroupHom f(z2, z3, bad);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
        CHECK(std::string(e.what()).find("g0") != std::string::npos);
    }
}

TEST_CASE("fat commutator")
{
    PermGroup s4 = PermGroup::symmetric(4);
    PermGroup a4 = commutator(s4, s4);
    PermGroup v4 = commutator(a4, a4);

    NormalSubgroupList pair(s4, {a4, v4});
    CHECK(as_set(fat_commutator(pair)) == as_set(commutator(a4, v4)));

    std::vector<PermGroup> ks{s4, a4, v4};
    NormalSubgroupList triple(s4, ks);
    ElementSet expected;
    {
        std::vector<Perm> gens;
        for (int i = 0; i < 3; ++i) {
            ElementSet ki = as_set(ks[i]);
            ElementSet rest = brute_meet(as_set(ks[(i + 1) % 3]), as_set(ks[(i + 2) % 3]));
            for (const auto& x : brute_commutator(ki, rest, 4))
                gens.push_back(x);
        }
        expected = closure(4, gens);
    }
    CHECK(as_set(fat_commutator(triple)) == expected);
    NormalSubgroupList shuffled(s4, {v4, s4, a4});
    CHECK(as_set(fat_commutator(shuffled)) == expected);

    PermGroup k4 = klein_four();
    NormalSubgroupList abelian(k4, {k4, PermGroup(4, {perm::cycle(4, {0, 1})}), k4});
    CHECK(fat_commutator(abelian).order() == 1);

    CHECK(as_set(fat_commutator(triple)).size() <= commutator(s4, s4).order());
    CHECK_THROWS_AS(NormalSubgroupList(s4, {PermGroup(4, {perm::cycle(4, {0, 1})})}), Error);
}

TEST_CASE("abelianization")
{
    CHECK(abelianization(PermGroup::symmetric(3)).group.to_string() == "Z/2");
    PermGroup s3 = PermGroup::symmetric(3);
    CHECK(abelianization(commutator(s3, s3)).group.to_string() == "Z/3");
    CHECK(abelianization(PermGroup::cyclic(4)).group.to_string() == "Z/4");
    CHECK(abelianization(klein_four()).group.to_string() == "Z/2 + Z/2");
    CHECK(abelianization(PermGroup::trivial()).group.is_trivial());

    for (const auto& g : {PermGroup::symmetric(4), PermGroup::cyclic(6), klein_four(),
                          PermGroup(5, {perm::cycle(5, {0, 1, 2}), perm::cycle(5, {2, 3, 4})})}) {
        const std::size_t derived = brute_commutator(as_set(g), as_set(g), g.degree()).size();
        CHECK(abelianization(g).group.order() == g.order() / derived);
    }

    // Induced maps compose.
    PermGroup s4 = PermGroup::symmetric(4);
    PermGroup z2 = PermGroup::cyclic(2);
    GroupHom sign(s4, z2, {perm::cycle(2, {0, 1}), perm::cycle(2, {0, 1})});
    GroupHom inc(s3, s4, {perm::cycle(4, {0, 1}), perm::cycle(4, {0, 1, 2})});
    auto a3 = abelianization(s3), a4 = abelianization(s4), a2 = abelianization(z2);
    AbHom composite = abelianization_map(inc.then(sign), a3, a2);
    CHECK(composite.equals(abelianization_map(inc, a3, a4).then(abelianization_map(sign, a4, a2))));
    CHECK(composite.is_isomorphism());
}
