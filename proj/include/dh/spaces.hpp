#pragma once

#include "dh/diagrams.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dh {

/// Pointed simplicial set stored up to dimension max_dim. Simplices are
/// integers per dimension; index 0 is the base simplex in every dimension.
class FiniteSimplicialSet {
public:
    using Key = std::vector<std::uint32_t>;
    using KeyMap = std::function<Key(std::size_t n, std::size_t i, const Key&)>;

    /// Interns the simplices listed per dimension (base first) and tabulates
    /// faces and degeneracies through the key maps.
    static FiniteSimplicialSet build(std::size_t max_dim, const std::function<std::vector<Key>(std::size_t)>& simplices,
                                     const KeyMap& face, const KeyMap& degeneracy);

    static constexpr std::size_t kMaxSimplices = 4000000;

    std::size_t max_dim() const noexcept { return counts_.size() - 1; }
    std::size_t count(std::size_t n) const { return counts_.at(n); }
    std::size_t total_count() const;
    std::size_t face(std::size_t n, std::size_t i, std::size_t x) const { return faces_[n][i * counts_[n] + x]; }
    std::size_t degeneracy(std::size_t n, std::size_t i, std::size_t x) const
    {
        return degeneracies_[n][i * counts_[n] + x];
    }

    /// x = s_i d_i x for some i.
    bool is_degenerate(std::size_t n, std::size_t x) const { return degenerate_.at(n).at(x); }
    std::vector<std::size_t> nondegenerate(std::size_t n) const;
    std::size_t nondegenerate_count(std::size_t n) const;

    /// Exhaustive check of the simplicial identities; empty when they hold.
    std::vector<std::string> identity_violations() const;

private:
    std::vector<std::size_t> counts_;
    std::vector<std::vector<std::uint32_t>> faces_;         // faces_[n][i * count + x], n >= 1
    std::vector<std::vector<std::uint32_t>> degeneracies_;  // n < max_dim
    std::vector<std::vector<bool>> degenerate_;
};

/// Pointed map given by simplex tables per dimension.
struct SimplicialMap {
    std::vector<std::vector<std::uint32_t>> levels;

    std::size_t operator()(std::size_t n, std::size_t x) const { return levels.at(n).at(x); }
    static SimplicialMap identity(const FiniteSimplicialSet& x);
    static SimplicialMap constant(const FiniteSimplicialSet& from);
    SimplicialMap then(const SimplicialMap& next) const;
};

/// Throws Validation unless f is pointed and commutes with faces and degeneracies.
void validate_map(const FiniteSimplicialSet& from, const FiniteSimplicialSet& to, const SimplicialMap& f);

FiniteSimplicialSet point(std::size_t max_dim);
/// Nerve of a finite group: n-simplices are n-tuples of elements.
FiniteSimplicialSet classifying_space(const PermGroup& g, std::size_t max_dim);
/// Map of nerves induced by a homomorphism.
SimplicialMap classifying_map(const GroupHom& f, std::size_t max_dim);
/// Nerve of the base category, pointed at the first object.
FiniteSimplicialSet nerve(const FreeCategory& cat, std::size_t max_dim);
/// Δ[k]: n-simplices are nondecreasing sequences in 0..k.
FiniteSimplicialSet standard_simplex(std::size_t k, std::size_t max_dim);
/// Collapses a subcomplex containing the base point to the base point.
FiniteSimplicialSet quotient(const FiniteSimplicialSet& x, const std::vector<std::vector<bool>>& subcomplex);
/// Δ[1]/∂Δ[1].
FiniteSimplicialSet circle(std::size_t max_dim);
FiniteSimplicialSet wedge(const std::vector<FiniteSimplicialSet>& parts);
FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y);

/// Diagram of pointed simplicial sets over a free category or poset.
class SimplicialDiagram {
public:
    SimplicialDiagram(FreeCategory base, std::vector<FiniteSimplicialSet> objects, std::vector<SimplicialMap> arrows);

    const FreeCategory& base() const noexcept { return base_; }
    const FiniteSimplicialSet& object(std::size_t v) const { return objects_.at(v); }
    const SimplicialMap& arrow(std::size_t a) const { return arrows_.at(a); }
    std::size_t max_dim() const;
    /// Image of an n-simplex of the source of a morphism.
    std::size_t apply(std::size_t morphism, std::size_t n, std::size_t x) const;

private:
    FreeCategory base_;
    std::vector<FiniteSimplicialSet> objects_;
    std::vector<SimplicialMap> arrows_;
};

/// Classifying spaces of the objects: nerves for finite groups, wedges of
/// circles for free groups. Free-to-free arrows must send each generator to
/// a generator or to the identity.
SimplicialDiagram space_diagram(const GroupDiagram& d, std::size_t max_dim);

/// Diagonal of the levelwise wedge over nerve chains: n-simplices are
/// pairs (c_0 -> ... -> c_n, x in F(c_0)_n) with all base simplices identified.
FiniteSimplicialSet hocolim_pointed(const SimplicialDiagram& sd, std::size_t max_dim);
/// (B𝒞 x Y)/(B𝒞 x *).
FiniteSimplicialSet constant_hocolim(const FreeCategory& cat, const FiniteSimplicialSet& y, std::size_t max_dim);
/// The constant diagram at Y.
SimplicialDiagram constant_diagram(const FreeCategory& cat, const FiniteSimplicialSet& y);

/// Simplicial group with finite levels.
struct FiniteSimplicialGroup {
    std::vector<PermGroup> levels;
    std::vector<std::vector<GroupHom>> faces;         // faces[n][i] : levels[n] -> levels[n-1], n >= 1
    std::vector<std::vector<GroupHom>> degeneracies;  // degeneracies[n][i] : levels[n] -> levels[n+1]

    static FiniteSimplicialGroup constant(const PermGroup& g, std::size_t max_dim);
};
/// Diagonal of the bisimplicial nerve: n-simplices are n-tuples over level n.
FiniteSimplicialSet diag_nerve(const FiniteSimplicialGroup& g, std::size_t max_dim);

/// Reduced integral homology from the normalized chains; k < max_dim.
FpAbelianGroup reduced_homology(const FiniteSimplicialSet& x, std::size_t k);

}  // namespace dh
