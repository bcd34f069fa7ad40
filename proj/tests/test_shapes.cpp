#include "doctest.h"

#include "dh/error.hpp"
#include "dh/shapes.hpp"
#include "dh/simplicial_identities.hpp"

#include <random>
#include <set>

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

// Number of directed paths of positive length, by dynamic programming over
// adjacency counts.
std::size_t count_paths(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> walks(n, std::vector<std::size_t>(n, 0));
    for (const auto& a : g.arrows())
        ++walks[a.src][a.dst];
    std::size_t total = 0;
    auto power = walks;
    for (std::size_t len = 1; len <= n; ++len) {
        for (const auto& row : power)
            for (auto x : row)
                total += x;
        std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j)
                    next[i][j] += power[i][k] * walks[k][j];
        power = std::move(next);
    }
    return total;
}

Graph random_dag(std::mt19937& rng, std::size_t vertices, std::size_t arrows)
{
    Graph g;
    for (std::size_t v = 0; v < vertices; ++v)
        g.add_vertex("v" + std::to_string(v));
    std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
    for (std::size_t a = 0; a < arrows && vertices > 1; ++a) {
        std::size_t s = pick(rng), t = pick(rng);
        if (s == t)
            continue;
        if (s > t)
            std::swap(s, t);
        g.add_arrow("e" + std::to_string(a), "v" + std::to_string(s), "v" + std::to_string(t));
    }
    return g;
}

std::vector<std::string> identity_violations(const FreeCategory& cat, std::size_t max_dim)
{
    ChainIndex index(cat, max_dim, false);
    auto count = [&](std::size_t n) { return index.chains(n).size(); };
    auto face = [&](std::size_t n, std::size_t i, std::size_t x) {
        return *index.find(cat.face(index.chains(n)[x], i));
    };
    auto degen = [&](std::size_t n, std::size_t i, std::size_t x) {
        return *index.find(cat.degeneracy(index.chains(n)[x], i));
    };
    return simplicial_identity_violations(max_dim, count, face, degen);
}

}  // namespace

TEST_CASE("free category on parallel arrows")
{
    FreeCategory cat = FreeCategory::free(parallel_arrows());
    CHECK(cat.object_count() == 2);
    CHECK(cat.morphism_count() == 4);
    CHECK(cat.nondegenerate_chains(1).size() == 2);
    CHECK(cat.nondegenerate_chains(2).empty());
    CHECK(cat.nondegenerate_chains(0).size() == 2);
    CHECK(cat.nerve_chains(0).size() == 2);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(cat.nerve_chains(n).size() == 2 + 2 * n);
}

TEST_CASE("single vertex and path graph")
{
    Graph one;
    one.add_vertex("x");
    FreeCategory c1 = FreeCategory::free(one);
    CHECK(c1.morphism_count() == 1);
    for (std::size_t n = 0; n < 5; ++n)
        CHECK(c1.nerve_chains(n).size() == 1);

    Graph path;
    path.add_vertex("a");
    path.add_vertex("b");
    path.add_vertex("c");
    path.add_arrow("f", "a", "b");
    path.add_arrow("g", "b", "c");
    FreeCategory cp = FreeCategory::free(path);
    CHECK(cp.morphism_count() - cp.object_count() == count_paths(path));
    CHECK(cp.morphism_count() - cp.object_count() == 3);
    const std::size_t fg = cp.compose(cp.arrow_morphism(0), cp.arrow_morphism(1));
    CHECK(cp.morphism_name(fg) == "f.g");
}

TEST_CASE("cyclic graphs are rejected")
{
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_arrow("f", "a", "b");
    g.add_arrow("g", "b", "a");
    CHECK_THROWS_AS(FreeCategory::free(g), Error);
    try {
        FreeCategory::free(g);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CyclicGraph);
    }
    Graph loop;
    loop.add_vertex("a");
    loop.add_arrow("l", "a", "a");
    CHECK_THROWS_AS(FreeCategory::free(loop), Error);
}

TEST_CASE("undefined vertex names the arrow")
{
    Graph g;
    g.add_vertex("a");
    try {
        g.add_arrow("bad", "a", "nowhere");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Schema);
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }
}

TEST_CASE("poset identifies parallel paths")
{
    Graph g;
    for (auto v : {"a", "b", "c", "d"})
        g.add_vertex(v);
    g.add_arrow("ab", "a", "b");
    g.add_arrow("ac", "a", "c");
    g.add_arrow("bd", "b", "d");
    g.add_arrow("cd", "c", "d");
    FreeCategory free = FreeCategory::free(g);
    FreeCategory poset = FreeCategory::poset(g);
    CHECK(free.hom(0, 3).size() == 2);
    CHECK(poset.hom(0, 3).size() == 1);
    CHECK(poset.morphism_count() == 4 + 5);
    CHECK(identity_violations(poset, 4).empty());
}

TEST_CASE("nerve chains satisfy the simplicial identities")
{
    CHECK(identity_violations(FreeCategory::free(parallel_arrows()), 5).empty());
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<std::size_t> nv(1, 4), na(0, 5);
        Graph g = random_dag(rng, nv(rng), na(rng));
        FreeCategory cat = FreeCategory::free(g);
        CHECK(cat.morphism_count() - cat.object_count() == count_paths(g));
        auto bad = identity_violations(cat, 4);
        CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
    }
}

TEST_CASE("every nerve chain is a unique degeneracy of a nondegenerate chain")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        std::uniform_int_distribution<std::size_t> nv(1, 4), na(0, 5);
        FreeCategory cat = FreeCategory::free(random_dag(rng, nv(rng), na(rng)));
        for (std::size_t n = 0; n <= 4; ++n) {
            std::vector<Chain> all = cat.nerve_chains(n);
            std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> produced;
            std::size_t hits = 0;
            // Apply every degeneracy word s_{i_1} ... s_{i_k} with i_1 > ... > i_k.
            for (std::size_t k = 0; k <= n; ++k)
                for (const Chain& base : cat.nondegenerate_chains(n - k)) {
                    // Increasing indices applied innermost first: the normal form s_{j_1}...s_{j_k}, j_1 > ... > j_k.
                    auto start = [&](auto&& self, Chain x, std::size_t remaining, std::size_t lower) -> void {
                        if (remaining == 0) {
                            ++hits;
                            produced.insert({x.objects, x.morphisms});
                            return;
                        }
                        for (std::size_t i = lower; i <= x.dimension(); ++i)
                            self(self, cat.degeneracy(x, i), remaining - 1, i + 1);
                    };
                    start(start, base, k, 0);
                }
            CHECK(hits == all.size());
            CHECK(produced.size() == all.size());
        }
    }
}

TEST_CASE("chains are canonically ordered")
{
    FreeCategory cat = FreeCategory::free(parallel_arrows());
    auto chains = cat.nerve_chains(1);
    for (std::size_t i = 1; i < chains.size(); ++i)
        CHECK(cat.chain_less(chains[i - 1], chains[i]));
    CHECK(cat.chain_name(chains.front()) == "a -id_a-> a");
}
