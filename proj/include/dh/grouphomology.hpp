#pragma once

#include "dh/abelian.hpp"
#include "dh/permgroups.hpp"

#include <string>
#include <vector>

namespace dh {

/// Groups whose homology is known in closed form rather than enumerated.
struct SymbolicGroup {
    enum class Kind { Trivial, Cyclic, InfiniteCyclic, Free };

    Kind kind = Kind::Trivial;
    std::size_t parameter = 0;  // order for Cyclic, rank for Free

    static SymbolicGroup trivial() { return {Kind::Trivial, 0}; }
    static SymbolicGroup cyclic(std::size_t order) { return {Kind::Cyclic, order}; }
    static SymbolicGroup infinite_cyclic() { return {Kind::InfiniteCyclic, 1}; }
    static SymbolicGroup free(std::size_t rank) { return {Kind::Free, rank}; }

    bool is_free() const { return kind == Kind::InfiniteCyclic || kind == Kind::Free || kind == Kind::Trivial; }
    /// Number of free generators (0 for trivial, 1 for infinite cyclic).
    std::size_t free_rank() const;
    std::string describe() const;
    bool operator==(const SymbolicGroup&) const = default;
};

FpAbelianGroup closed_form_homology(const SymbolicGroup& g, std::size_t n);

/// Normalized bar complex of a finite group with trivial integer
/// coefficients; degree-n basis is n-tuples of non-identity elements.
class BarComplex {
public:
    static constexpr std::size_t kDefaultBasisBound = 100000;

    BarComplex(PermGroup group, std::size_t top, std::size_t basis_bound = kDefaultBasisBound);

    const PermGroup& group() const noexcept { return group_; }
    std::size_t top_degree() const noexcept { return complex_.top_degree(); }
    std::size_t rank(std::size_t n) const { return complex_.rank(n); }
    const FreeChainComplex& complex() const noexcept { return complex_; }

    /// Element indices (all non-identity) of the basis tuple.
    std::vector<std::size_t> tuple(std::size_t n, std::size_t index) const;
    std::size_t index(const std::vector<std::size_t>& tuple) const;

private:
    PermGroup group_;
    FreeChainComplex complex_;
};

FpAbelianGroup group_homology(const PermGroup& g, std::size_t n,
                              std::size_t basis_bound = BarComplex::kDefaultBasisBound);

/// H_n of a finite group together with explicit cycles, for induced maps.
struct BarHomology {
    BarComplex bar;
    std::size_t degree;
    ChainComplex::Homology homology;
};
BarHomology bar_homology(const PermGroup& g, std::size_t n,
                         std::size_t basis_bound = BarComplex::kDefaultBasisBound);

/// H_n(f) : H_n(source) -> H_n(target).
AbHom induced_map(const GroupHom& f, const BarHomology& source, const BarHomology& target);
AbHom induced_map(const GroupHom& f, std::size_t n,
                  std::size_t basis_bound = BarComplex::kDefaultBasisBound);

}  // namespace dh
