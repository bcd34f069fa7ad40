#pragma once

// Seeded generators shared by the unit tests and the acceptance binary.

#include "dh/diagramhomology.hpp"
#include "dh/error.hpp"

#include <numeric>
#include <random>

namespace gen {

using namespace dh;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Acyclic graph on v0..v{n-1}; arrows go from lower to higher index and
/// may be parallel.
inline Graph random_dag(Rng& rng, std::size_t max_vertices, std::size_t max_arrows)
{
    Graph g;
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_vertices)));
    for (std::size_t v = 0; v < n; ++v)
        g.add_vertex("v" + std::to_string(v));
    if (n < 2)
        return g;
    const auto m = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_arrows)));
    for (std::size_t a = 0; a < m; ++a) {
        auto s = uniform(rng, 0, static_cast<long>(n) - 2);
        auto t = uniform(rng, s + 1, static_cast<long>(n) - 1);
        g.add_arrow("e" + std::to_string(a), "v" + std::to_string(s), "v" + std::to_string(t));
    }
    return g;
}

/// Orders of the cyclic generators; 0 means infinite cyclic.
using Orders = std::vector<long>;

inline FpAbelianGroup cyclic_sum(const Orders& orders)
{
    IntMatrix rel(orders.size(), 0);
    for (std::size_t j = 0; j < orders.size(); ++j)
        if (orders[j] != 0) {
            IntMatrix col(orders.size(), 1);
            col(j, 0) = orders[j];
            rel = IntMatrix::hconcat(rel, col);
        }
    return FpAbelianGroup(orders.size(), std::move(rel));
}

/// One of 0, Z, Z/2, Z/3, Z/4, Z + Z/2.
inline Orders random_small_group(Rng& rng, bool allow_free = true)
{
    static const std::vector<Orders> all = {{}, {0}, {2}, {3}, {4}, {0, 2}};
    static const std::vector<Orders> finite = {{}, {2}, {3}, {4}, {2, 2}};
    const auto& pool = allow_free ? all : finite;
    return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
}

/// Random homomorphism between diagonal presentations: entry (i, j) must be
/// a multiple of m_i / gcd(m_i, n_j), and zero when m_i = 0 < n_j.
inline IntMatrix random_hom_matrix(Rng& rng, const Orders& src, const Orders& dst, long range = 3)
{
    IntMatrix m(dst.size(), src.size());
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            long step = 1;
            if (dst[i] == 0)
                step = src[j] == 0 ? 1 : 0;
            else
                step = dst[i] / std::gcd(dst[i], src[j]);
            m(i, j) = step * uniform(rng, -range, range);
        }
    return m;
}

struct RandomDiagram {
    std::vector<Orders> orders;
    AbelianDiagram diagram;
};

inline RandomDiagram random_diagram_on(Rng& rng, const FreeCategory& base, bool allow_free = true)
{
    const Graph& g = base.graph();
    std::vector<Orders> orders;
    std::vector<FpAbelianGroup> objects;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        orders.push_back(random_small_group(rng, allow_free));
        objects.push_back(cyclic_sum(orders.back()));
    }
    std::vector<AbHom> arrows;
    for (const Arrow& a : g.arrows())
        arrows.emplace_back(objects[a.src], objects[a.dst], random_hom_matrix(rng, orders[a.src], orders[a.dst]));
    return RandomDiagram{orders, AbelianDiagram(base, std::move(objects), std::move(arrows))};
}

inline AbelianDiagram random_abelian_diagram(Rng& rng, std::size_t max_vertices = 4, std::size_t max_arrows = 5)
{
    return random_diagram_on(rng, FreeCategory::free(random_dag(rng, max_vertices, max_arrows))).diagram;
}

/// 0 -> A -> A -> A/mA -> 0 for a diagram A of free abelian groups.
inline ShortExactSequence multiplication_sequence(Rng& rng, const FreeCategory& base, long m)
{
    const Graph& g = base.graph();
    std::vector<Orders> orders;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        orders.emplace_back(static_cast<std::size_t>(uniform(rng, 0, 2)), 0);
    std::vector<FpAbelianGroup> free, reduced;
    for (const auto& o : orders) {
        free.push_back(cyclic_sum(o));
        reduced.push_back(cyclic_sum(Orders(o.size(), m)));
    }
    std::vector<AbHom> free_arrows, reduced_arrows;
    for (const Arrow& a : g.arrows()) {
        IntMatrix mat = random_hom_matrix(rng, orders[a.src], orders[a.dst]);
        free_arrows.emplace_back(free[a.src], free[a.dst], mat);
        reduced_arrows.emplace_back(reduced[a.src], reduced[a.dst], mat);
    }
    std::vector<AbHom> inclusion, projection;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        inclusion.push_back(AbHom::identity(free[v]).scaled(m));
        projection.emplace_back(free[v], reduced[v], IntMatrix::identity(orders[v].size()));
    }
    AbelianDiagram a(base, free, free_arrows);
    return ShortExactSequence{a, a, AbelianDiagram(base, reduced, reduced_arrows), std::move(inclusion),
                              std::move(projection)};
}

/// 0 -> K -> K (+)_t Q -> Q -> 0 where the middle arrows are [[K(γ), t_γ], [0, Q(γ)]].
inline ShortExactSequence twisted_sequence(Rng& rng, const FreeCategory& base)
{
    const Graph& g = base.graph();
    RandomDiagram k = random_diagram_on(rng, base);
    RandomDiagram q = random_diagram_on(rng, base);
    std::vector<FpAbelianGroup> middle;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Orders both = k.orders[v];
        both.insert(both.end(), q.orders[v].begin(), q.orders[v].end());
        middle.push_back(cyclic_sum(both));
    }
    std::vector<AbHom> arrows;
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        const Arrow& arr = g.arrow(a);
        IntMatrix top = IntMatrix::hconcat(k.diagram.arrow(a).matrix(),
                                           random_hom_matrix(rng, q.orders[arr.src], k.orders[arr.dst]));
        IntMatrix bottom = IntMatrix::hconcat(IntMatrix(q.orders[arr.dst].size(), k.orders[arr.src].size()),
                                              q.diagram.arrow(a).matrix());
        arrows.emplace_back(middle[arr.src], middle[arr.dst], IntMatrix::vconcat(top, bottom));
    }
    std::vector<AbHom> inclusion, projection;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const std::size_t kr = k.orders[v].size(), qr = q.orders[v].size();
        inclusion.emplace_back(k.diagram.object(v), middle[v],
                               IntMatrix::vconcat(IntMatrix::identity(kr), IntMatrix(qr, kr)));
        projection.emplace_back(middle[v], q.diagram.object(v),
                                IntMatrix::hconcat(IntMatrix(qr, kr), IntMatrix::identity(qr)));
    }
    return ShortExactSequence{k.diagram, AbelianDiagram(base, std::move(middle), std::move(arrows)), q.diagram,
                              std::move(inclusion), std::move(projection)};
}

/// Alternates between the two constructions.
inline ShortExactSequence random_short_exact_sequence(Rng& rng, std::size_t index)
{
    FreeCategory base = FreeCategory::free(random_dag(rng, 4, 5));
    if (index % 2 == 0)
        return multiplication_sequence(rng, base, uniform(rng, 2, 4));
    return twisted_sequence(rng, base);
}

/// All homomorphisms between two small permutation groups.
inline std::vector<GroupHom> all_homs(const PermGroup& src, const PermGroup& dst)
{
    std::vector<GroupHom> out;
    const std::size_t k = src.generators().size();
    std::vector<std::size_t> pick(k, 0);
    while (true) {
        std::vector<Perm> images;
        for (auto p : pick)
            images.push_back(dst.elements()[p]);
        try {
            out.emplace_back(src, dst, std::move(images));
        } catch (const Error&) {
        }
        std::size_t i = 0;
        while (i < k && ++pick[i] == dst.order())
            pick[i++] = 0;
        if (i == k)
            break;
    }
    return out;
}

/// Small finite permutation groups of order at most 12.
inline PermGroup random_finite_group(Rng& rng)
{
    switch (uniform(rng, 0, 5)) {
    case 0: return PermGroup::trivial(3);
    case 1: return PermGroup(3, {perm::cycle(3, {0, 1})});
    case 2: return PermGroup(3, {perm::cycle(3, {0, 1, 2})});
    case 3: return PermGroup::symmetric(3);
    case 4: return PermGroup::cyclic(4);
    default: return PermGroup(4, {perm::cycle(4, {0, 1}), perm::cycle(4, {2, 3})});
    }
}

/// Random diagram of small finite groups over the free category of a random DAG.
inline GroupDiagram random_group_diagram(Rng& rng, std::size_t max_vertices = 3, std::size_t max_arrows = 3)
{
    FreeCategory base = FreeCategory::free(random_dag(rng, max_vertices, max_arrows));
    const Graph& g = base.graph();
    std::vector<PermGroup> groups;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        groups.push_back(random_finite_group(rng));
    std::vector<std::vector<GroupElement>> images;
    for (const Arrow& a : g.arrows()) {
        auto homs = all_homs(groups[a.src], groups[a.dst]);
        const GroupHom& f = homs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(homs.size()) - 1))];
        std::vector<GroupElement> imgs;
        for (const auto& x : groups[a.src].generators())
            imgs.emplace_back(f.apply(x));
        images.push_back(std::move(imgs));
    }
    return GroupDiagram(base, std::vector<DiagramGroup>(groups.begin(), groups.end()), std::move(images));
}

}  // namespace gen
