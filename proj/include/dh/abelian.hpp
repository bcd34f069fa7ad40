#pragma once

#include "dh/int_matrix.hpp"
#include "dh/smith.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dh {

/// Finitely presented abelian group: the cokernel of a relation matrix
/// R : Z^k -> Z^g. Equality is isomorphism (same invariant factors and
/// free rank), never equality of presentations.
class FpAbelianGroup {
public:
    FpAbelianGroup();
    explicit FpAbelianGroup(std::size_t generators);
    FpAbelianGroup(std::size_t generators, IntMatrix relations);

    static FpAbelianGroup cyclic(const Integer& order);
    static FpAbelianGroup from_invariants(const IntVector& torsion, std::size_t free_rank);
    static FpAbelianGroup direct_sum(const std::vector<FpAbelianGroup>& parts);

    std::size_t generator_count() const noexcept { return generators_; }
    const IntMatrix& relations() const noexcept { return relations_; }

    /// Invariant factors greater than one, ascending.
    const IntVector& torsion() const { return normal_->torsion; }
    std::size_t free_rank() const { return normal_->free_rank; }
    bool is_trivial() const { return torsion().empty() && free_rank() == 0; }
    bool is_finite() const { return free_rank() == 0; }
    bool is_free() const { return torsion().empty(); }
    /// Group order, or 0 when infinite.
    Integer order() const;

    /// Formats as e.g. "Z^1 + Z/2 + Z/6"; the trivial group is "0".
    std::string to_string() const;
    bool isomorphic_to(const FpAbelianGroup& other) const;
    bool operator==(const FpAbelianGroup& other) const { return isomorphic_to(other); }

    // Elements are integer vectors over the presentation generators.

    /// Canonical coordinates: torsion coordinates reduced into [0, d_i),
    /// followed by the free coordinates.
    IntVector normal_coordinates(const IntVector& x) const;
    bool is_zero(const IntVector& x) const;
    bool equal(const IntVector& x, const IntVector& y) const;

    /// Presentation generators -> normal coordinates (unreduced).
    const IntMatrix& to_normal() const { return normal_->to_normal; }
    /// Normal generators -> presentation generators.
    const IntMatrix& from_normal() const { return normal_->from_normal; }
    /// Isomorphic group presented by a diagonal matrix on the normal generators.
    FpAbelianGroup normalized() const;

    /// All elements of a finite group, in presentation coordinates, ordered
    /// by mixed-radix index of their normal coordinates.
    std::vector<IntVector> elements() const;
    std::size_t element_index(const IntVector& x) const;

private:
    struct Normal {
        IntVector torsion;
        std::size_t free_rank = 0;
        IntMatrix to_normal;
        IntMatrix from_normal;
    };

    void compute_normal_form();
    void set_diagonal_normal_form(const IntVector& torsion, std::size_t free_rank);

    std::size_t generators_ = 0;
    IntMatrix relations_;
    std::shared_ptr<const Normal> normal_;
};

/// Homomorphism of presented abelian groups, given by its action on
/// presentation generators. Construction verifies that relations of the
/// source land in the relation lattice of the target.
class AbHom {
public:
    AbHom(FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix);

    static AbHom identity(const FpAbelianGroup& group);
    static AbHom zero(const FpAbelianGroup& source, const FpAbelianGroup& target);
    /// Map from the common source into the direct sum of the targets.
    static AbHom stack(const std::vector<AbHom>& maps);
    static AbHom direct_sum(const std::vector<AbHom>& maps);

    const FpAbelianGroup& source() const noexcept { return source_; }
    const FpAbelianGroup& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    IntVector apply(const IntVector& x) const { return matrix_.apply(x); }
    /// next after this.
    AbHom then(const AbHom& next) const;
    AbHom operator+(const AbHom& other) const;
    AbHom operator-(const AbHom& other) const;
    AbHom scaled(const Integer& k) const;

    bool equals(const AbHom& other) const;
    bool is_zero() const;

    /// Inclusion of the kernel into the source.
    AbHom kernel() const;
    /// Projection of the target onto the cokernel.
    AbHom cokernel() const;
    struct Image;
    Image image() const;

    bool is_injective() const { return kernel().source().is_trivial(); }
    bool is_surjective() const { return cokernel().target().is_trivial(); }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    /// X with matrix * X congruent to targets modulo the target relations.
    std::optional<IntMatrix> lift(const IntMatrix& targets) const;
    bool in_image(const IntVector& y) const;

    /// Skips the compatibility check; for maps known correct by construction.
    static AbHom trusted(FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix);

private:
    struct Trusted {};
    AbHom(Trusted, FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix);

    FpAbelianGroup source_;
    FpAbelianGroup target_;
    IntMatrix matrix_;
};

struct AbHom::Image {
    AbHom onto;       // source -> image
    AbHom inclusion;  // image -> target
};

/// Chain complex of presented abelian groups, C_0 <- C_1 <- ... <- C_top.
/// Degrees above top are taken to be zero.
class ChainComplex {
public:
    /// differentials[n-1] is d_n : C_n -> C_{n-1}; d∘d = 0 is verified.
    ChainComplex(std::vector<FpAbelianGroup> groups, std::vector<AbHom> differentials);

    std::size_t top_degree() const noexcept { return groups_.size() - 1; }
    const FpAbelianGroup& group(std::size_t n) const { return groups_.at(n); }
    const AbHom& differential(std::size_t n) const { return differentials_.at(n - 1); }

    struct Homology {
        FpAbelianGroup group;
        AbHom cycles;                 // Z_n -> C_n
        IntMatrix class_of_cycle;     // Z_n coordinates -> H_n coordinates
        IntMatrix representatives;    // H_n generators as chains in C_n
        /// H_n coordinates of the given cycles (columns in C_n coordinates).
        IntMatrix classify(const IntMatrix& cycles_in_chains) const;
    };

    Homology homology_data(std::size_t n) const;
    FpAbelianGroup homology(std::size_t n) const { return homology_data(n).group; }

private:
    std::vector<FpAbelianGroup> groups_;
    std::vector<AbHom> differentials_;
};

/// Map on homology induced by a chain map component in degree n.
AbHom induced_on_homology(const ChainComplex::Homology& from,
                          const ChainComplex::Homology& to,
                          const AbHom& chain_map);

/// Free chain complex with sparse boundary matrices; homology is read off
/// ranks and invariant factors.
class FreeChainComplex {
public:
    /// boundaries[n-1] is d_n with ranks[n] columns and ranks[n-1] rows.
    FreeChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);

    std::size_t top_degree() const noexcept { return ranks_.size() - 1; }
    std::size_t rank(std::size_t n) const { return ranks_.at(n); }
    const SparseMatrix& boundary(std::size_t n) const { return boundaries_.at(n - 1); }

    FpAbelianGroup homology(std::size_t n) const;
    ChainComplex to_general() const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<SparseMatrix> boundaries_;
    std::vector<IntVector> factors_;  // invariant factors of each boundary
};

}  // namespace dh
