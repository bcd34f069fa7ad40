#pragma once

#include "dh/diagrams.hpp"

#include <string>
#include <vector>

namespace dh {

/// Normalized chain complex of the simplicial replacement of an abelian
/// diagram: C_n is the direct sum of A(c_0) over nondegenerate chains
/// c_0 -> ... -> c_n, with d_n the alternating sum of the faces.
class ReplacementComplex {
public:
    ReplacementComplex(const AbelianDiagram& d, std::size_t top);

    const ChainIndex& chains() const noexcept { return index_; }
    const ChainComplex& complex() const noexcept { return complex_; }
    std::size_t top_degree() const noexcept { return complex_.top_degree(); }
    /// First coordinate of the summand of chain k in degree n.
    std::size_t offset(std::size_t n, std::size_t k) const { return offsets_.at(n).at(k); }

    /// Degree-n chain map induced by a natural transformation with the
    /// given components (one per object).
    static AbHom chain_map(const ReplacementComplex& from, const ReplacementComplex& to,
                           const std::vector<AbHom>& components, std::size_t n);

private:
    ChainIndex index_;
    std::vector<std::vector<std::size_t>> offsets_;
    ChainComplex complex_;
};

/// coLim_0: the colimit of the diagram.
FpAbelianGroup colim_ab(const AbelianDiagram& d);
/// coLim_n: homology of the replacement complex.
FpAbelianGroup colim_n(const AbelianDiagram& d, std::size_t n);

/// a in A(s(γ)) at arrow γ goes to in_t(A(γ)a) - in_s(a); flows are its kernel.
AbHom flow_map(const AbelianDiagram& d);
/// Kernel of flow_map; requires a free-category base.
FpAbelianGroup flow_subgroup(const AbelianDiagram& d);

struct Flow {
    std::vector<IntVector> components;  // one per arrow, in A(s(γ)) coordinates
};
bool is_flow(const AbelianDiagram& d, const Flow& f);
/// Generators of the flow subgroup.
std::vector<Flow> flow_generators(const AbelianDiagram& d);

/// Face and degeneracy maps of the replacement of a group diagram acting on
/// pairs (chain, element of G(c_0)), without forming free products.
class FormalReplacement {
public:
    struct Generator {
        std::size_t chain;     // index into chains().chains(n)
        GroupElement element;  // element of G(c_0)
    };

    FormalReplacement(GroupDiagram d, std::size_t max_dim);

    const GroupDiagram& diagram() const noexcept { return diagram_; }
    const ChainIndex& chains() const noexcept { return index_; }
    std::size_t max_dim() const noexcept { return index_.max_dim(); }

    Generator face(std::size_t n, std::size_t i, const Generator& x) const;
    Generator degeneracy(std::size_t n, std::size_t i, const Generator& x) const;
    std::string name(std::size_t n, const Generator& x) const;

    /// Flat enumeration of all generators in degree n; finite diagrams only.
    std::size_t generator_count(std::size_t n) const;
    Generator generator(std::size_t n, std::size_t k) const;
    std::size_t index_of(std::size_t n, const Generator& x) const;
    /// Exhaustive simplicial identity check; finite diagrams only.
    std::vector<std::string> identity_violations() const;

private:
    GroupDiagram diagram_;
    ChainIndex index_;
    std::vector<std::vector<std::size_t>> offsets_;  // finite diagrams only
};

/// 0 -> K -> A -> Q -> 0, componentwise.
struct ShortExactSequence {
    AbelianDiagram kernel;
    AbelianDiagram middle;
    AbelianDiagram quotient;
    std::vector<AbHom> inclusion;   // K(v) -> A(v)
    std::vector<AbHom> projection;  // A(v) -> Q(v)
};

/// Throws Validation unless the components are natural and exact at every object.
void validate(const ShortExactSequence& s);

struct LongExactSequence {
    struct Node {
        std::string label;  // e.g. "coLim_1 K"
        FpAbelianGroup group;
        bool exact = false;
    };
    /// From coLim_top Q down to coLim_0 Q; maps[i] goes nodes[i] -> nodes[i+1].
    std::vector<Node> nodes;
    std::vector<AbHom> maps;
    bool exact() const;
};

/// The long exact sequence on coLim_n for n <= max_n, with the connecting
/// maps built by the snake construction. Exactness is checked at every node
/// of degree <= max_n.
LongExactSequence les_check(const ShortExactSequence& s, std::size_t max_n);

}  // namespace dh
