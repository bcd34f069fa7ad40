#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dh {

struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t dst = 0;
};

/// Finite directed graph; vertices and arrows are referenced by position.
class Graph {
public:
    std::size_t add_vertex(const std::string& name);
    std::size_t add_arrow(const std::string& name, const std::string& src, const std::string& dst);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
    const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

    std::optional<std::size_t> find_vertex(const std::string& name) const;
    std::optional<std::size_t> find_arrow(const std::string& name) const;

    bool has_directed_cycle() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> vertex_ids_;
    std::map<std::string, std::size_t> arrow_ids_;
};

struct Morphism {
    std::size_t src = 0;
    std::size_t dst = 0;
    /// Arrow indices along the path; empty for identities. In a poset this
    /// is one representative path.
    std::vector<std::size_t> word;

    bool is_identity() const noexcept { return word.empty(); }
};

/// c_0 -> c_1 -> ... -> c_n; morphisms[i] goes from objects[i] to objects[i+1].
struct Chain {
    std::vector<std::size_t> objects;
    std::vector<std::size_t> morphisms;

    std::size_t dimension() const noexcept { return morphisms.size(); }
    bool operator==(const Chain& other) const = default;
};

/// The free category on an acyclic graph, or the poset it generates.
class FreeCategory {
public:
    /// Morphisms are all directed paths. Fails with CyclicGraph on a directed cycle.
    static FreeCategory free(const Graph& graph);
    /// One morphism per reachable pair (the graph is read as a Hasse diagram).
    static FreeCategory poset(const Graph& graph);

    const Graph& graph() const noexcept { return graph_; }
    bool is_poset() const noexcept { return poset_; }
    std::size_t object_count() const noexcept { return graph_.vertex_count(); }
    const std::string& object_name(std::size_t c) const { return graph_.vertex_name(c); }

    std::size_t morphism_count() const noexcept { return morphisms_.size(); }
    const Morphism& morphism(std::size_t f) const { return morphisms_.at(f); }
    std::size_t identity(std::size_t object) const { return identities_.at(object); }
    /// Morphism of a single arrow.
    std::size_t arrow_morphism(std::size_t arrow) const { return arrow_morphisms_.at(arrow); }
    /// g after f, for f : a -> b and g : b -> c.
    std::size_t compose(std::size_t f, std::size_t g) const;
    /// Morphisms a -> b, in canonical order.
    const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const;
    const std::vector<std::size_t>& morphisms_into(std::size_t object) const { return into_.at(object); }
    const std::vector<std::size_t>& morphisms_from(std::size_t object) const { return from_.at(object); }

    /// e.g. "u0", "u0.v1", or "id_a".
    std::string morphism_name(std::size_t f) const;

    /// All functors [n] -> C, canonically ordered.
    std::vector<Chain> nerve_chains(std::size_t n) const;
    /// Chains with no identity morphism.
    std::vector<Chain> nondegenerate_chains(std::size_t n) const;

    Chain face(const Chain& x, std::size_t i) const;
    Chain degeneracy(const Chain& x, std::size_t i) const;
    bool is_nondegenerate(const Chain& x) const;

    /// Lexicographic order on (vertex-name sequence, arrow-word sequence).
    bool chain_less(const Chain& x, const Chain& y) const;
    std::string chain_name(const Chain& x) const;

private:
    FreeCategory() = default;
    void finish();
    bool morphism_less(std::size_t f, std::size_t g) const;
    std::vector<Chain> enumerate(std::size_t n, bool nondegenerate) const;

    Graph graph_;
    bool poset_ = false;
    std::vector<Morphism> morphisms_;
    std::vector<std::size_t> identities_;
    std::vector<std::size_t> arrow_morphisms_;
    std::vector<std::size_t> composition_;  // dense table, npos where undefined
    std::vector<std::vector<std::size_t>> hom_;
    std::vector<std::vector<std::size_t>> into_;
    std::vector<std::vector<std::size_t>> from_;
    std::vector<std::size_t> vertex_rank_;
    std::vector<std::size_t> arrow_rank_;
};

/// Per-dimension chain lists with reverse lookup, as used to index direct sums.
class ChainIndex {
public:
    ChainIndex(const FreeCategory& cat, std::size_t max_dim, bool nondegenerate_only);

    std::size_t max_dim() const noexcept { return chains_.size() - 1; }
    const std::vector<Chain>& chains(std::size_t n) const { return chains_.at(n); }
    std::optional<std::size_t> find(const Chain& x) const;

private:
    std::vector<std::vector<Chain>> chains_;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup_;
};

}  // namespace dh
