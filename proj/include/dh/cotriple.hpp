#pragma once

#include "dh/diagramhomology.hpp"
#include "dh/spaces.hpp"

#include <map>
#include <string>
#include <vector>

namespace dh {

/// Truncated simplicial abelian group with levels 0..top.
struct SimplicialAbelianGroup {
    std::vector<FpAbelianGroup> levels;
    std::vector<std::vector<AbHom>> faces;         // faces[n][i] : levels[n] -> levels[n-1]; faces[0] empty
    std::vector<std::vector<AbHom>> degeneracies;  // degeneracies[n][i] : levels[n] -> levels[n+1], n < top

    std::size_t top() const noexcept { return levels.size() - 1; }

    static SimplicialAbelianGroup constant(const FpAbelianGroup& g, std::size_t top);
    /// Empty when the simplicial identities hold.
    std::vector<std::string> identity_violations() const;
    /// Level n is generated by the images of s_0..s_{n-1}.
    bool generated_by_degeneracies(std::size_t n) const;
};

/// Full (unnormalized) simplicial replacement: level n is the direct sum of
/// A(c_0) over all chains c_0 -> ... -> c_n, in ChainIndex order.
SimplicialAbelianGroup replacement_group(const AbelianDiagram& d, std::size_t top);

struct MooreComplex {
    std::vector<AbHom> inclusions;  // N_n -> G_n
    ChainComplex complex;           // differential restricted from d_0
};
/// N_n = intersection of Ker d_i for i > 0.
MooreComplex moore_complex(const SimplicialAbelianGroup& s);
/// pi_n from the Moore complex; n < top.
FpAbelianGroup moore_homotopy(const SimplicialAbelianGroup& s, std::size_t n);
/// Homology of the complex G_n with differential sum (-1)^i d_i; n < top.
FpAbelianGroup alternating_homology(const SimplicialAbelianGroup& s, std::size_t n);
/// Intersection of Ker d_i over 0 <= i <= m. Requires level m+1 to be
/// generated by degeneracies, in which case it is pi_m.
FpAbelianGroup degenerate_generation_formula(const SimplicialAbelianGroup& s, std::size_t m);

/// Regular permutation representation of a finite abelian group.
struct RegularRepresentation {
    FpAbelianGroup group;
    PermGroup perms;
    std::vector<IntVector> elements;  // group.elements(); point k of the permutations

    Perm perm_of(const IntVector& x) const;
};
RegularRepresentation regular_representation(const FpAbelianGroup& g);
GroupHom regular_map(const AbHom& f, const RegularRepresentation& source, const RegularRepresentation& target);
/// Finite levels only.
FiniteSimplicialGroup to_simplicial_group(const SimplicialAbelianGroup& s);

/// Resolution T^{n+1}A, n <= top, of an abelian diagram by the cotriple of
/// left Kan extension along the objects. (T^{n+1}A)(c) is the direct sum of
/// A(c_n) over tuples c <- c_0 <- c_1 <- ... <- c_n.
class CotripleResolution {
public:
    /// morphisms[0] : c_0 -> target, morphisms[k] : c_k -> c_{k-1}.
    struct Tuple {
        std::size_t target;
        std::vector<std::size_t> morphisms;
    };

    CotripleResolution(AbelianDiagram a, std::size_t top);

    const AbelianDiagram& diagram() const noexcept { return diagram_; }
    std::size_t top() const noexcept { return top_; }

    const std::vector<Tuple>& tuples(std::size_t n, std::size_t c) const { return levels_.at(n).at(c).tuples; }
    const FpAbelianGroup& level(std::size_t n, std::size_t c) const { return levels_.at(n).at(c).group; }
    std::size_t find(std::size_t n, const Tuple& t) const;
    std::size_t offset(std::size_t n, std::size_t c, std::size_t k) const
    {
        return levels_.at(n).at(c).offsets.at(k);
    }

    /// d_i : T_n(c) -> T_{n-1}(c); composes the arrows at i, i+1 or applies A at i = n.
    const AbHom& face(std::size_t n, std::size_t i, std::size_t c) const { return faces_.at(n).at(i).at(c); }
    /// s_i : T_n(c) -> T_{n+1}(c); inserts an identity after position i.
    const AbHom& degeneracy(std::size_t n, std::size_t i, std::size_t c) const
    {
        return degeneracies_.at(n).at(i).at(c);
    }
    const AbHom& augmentation(std::size_t c) const { return augmentation_.at(c); }
    /// Functoriality of T_n along a morphism of the base.
    AbHom functor_map(std::size_t n, std::size_t morphism) const;
    /// T^{n+1}A as a diagram over the base.
    AbelianDiagram level_diagram(std::size_t n) const;

    /// Simplicial identities at every object, augmentation coequalizing
    /// d_0 and d_1, and naturality of faces and degeneracies.
    std::vector<std::string> violations() const;

private:
    struct Level {
        std::vector<Tuple> tuples;
        std::vector<std::size_t> offsets;
        std::map<std::vector<std::size_t>, std::size_t> lookup;
        FpAbelianGroup group;
    };

    /// Sends each tuple to a tuple of the target level; a null block is the identity.
    AbHom block_map(std::size_t from_n, std::size_t c_from, std::size_t to_n, std::size_t c_to,
                    const std::function<std::pair<Tuple, const AbHom*>(const Tuple&)>& rule) const;

    AbelianDiagram diagram_;
    std::size_t top_;
    std::vector<std::vector<Level>> levels_;
    std::vector<std::vector<std::vector<AbHom>>> faces_;
    std::vector<std::vector<std::vector<AbHom>>> degeneracies_;
    std::vector<AbHom> augmentation_;
};

struct Main1Report {
    std::size_t top = 0;
    bool levels_isomorphic = true;
    bool faces_commute = true;
    bool degeneracies_commute = true;
    bool homology_equal = true;
    std::vector<FpAbelianGroup> cotriple_homology;     // pi_n of colim T_*A, n < top
    std::vector<FpAbelianGroup> replacement_homology;  // coLim_n A, n < top
    std::vector<std::string> problems;

    bool ok() const
    {
        return levels_isomorphic && faces_commute && degeneracies_commute && homology_equal && problems.empty();
    }
};

/// colim of the resolution against the simplicial replacement: level
/// isomorphisms by reversing tuples, compatibility with d'_i = d_{n-i} and
/// s'_i = s_{n-i}, and equal homology below top.
Main1Report verify_main1(const AbelianDiagram& a, std::size_t top);

/// colim T_*A as a simplicial abelian group.
SimplicialAbelianGroup colim_resolution(const CotripleResolution& r);

}  // namespace dh
