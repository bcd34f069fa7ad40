#pragma once

#include "dh/colimits.hpp"
#include "dh/diagramhomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dh {

/// 0 -> colim H_n(G) -> H_n(hocolim BG) -> coLim_1 H_{n-1}(G) -> 0
struct SesRecord {
    enum class Resolution { Zero, Left, Right, Ambiguous };

    std::size_t dimension = 0;
    FpAbelianGroup left;   // colim H_n
    FpAbelianGroup right;  // coLim_1 H_{n-1}
    Resolution resolution = Resolution::Zero;

    /// H_n(hocolim) when it is determined by the sequence.
    std::optional<FpAbelianGroup> middle() const;
};

const char* to_string(SesRecord::Resolution r);

struct ConnectivityReport {
    ColimResult colim;
    /// Smallest n with colim_n G nontrivial; unset when every computed
    /// dimension vanished, in which case cocon >= lower_bound.
    std::optional<std::size_t> cocon;
    std::size_t lower_bound = 0;
    /// colim_cocon G for cocon >= 1; unset when the extension is ambiguous.
    std::optional<FpAbelianGroup> first_group;
    std::vector<SesRecord> trail;

    std::string first_group_description() const;
};

/// First nonvanishing non-abelian homology of a diagram over a free category.
ConnectivityReport connectivity(const GroupDiagram& d, std::size_t max_dim = 3, std::size_t max_cosets = 50000,
                                std::size_t basis_bound = BarComplex::kDefaultBasisBound);

struct ComparCriterion {
    FpAbelianGroup colim_h2;  // colim of the H_2 diagram
    bool iso = false;         // colim_1 G -> coLim_1 G_ab is an isomorphism
    FpAbelianGroup colim1_ab; // coLim_1 of the abelianized diagram
};
/// Requires a trivial colimit.
ComparCriterion compar_criterion(const GroupDiagram& d, std::size_t max_cosets = 50000,
                                 std::size_t basis_bound = BarComplex::kDefaultBasisBound);

}  // namespace dh
