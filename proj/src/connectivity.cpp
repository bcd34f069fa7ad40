#include "dh/connectivity.hpp"

#include "dh/error.hpp"

namespace dh {

std::optional<FpAbelianGroup> SesRecord::middle() const
{
    switch (resolution) {
    case Resolution::Zero: return FpAbelianGroup();
    case Resolution::Left: return left;
    case Resolution::Right: return right;
    case Resolution::Ambiguous: break;
    }
    return std::nullopt;
}

const char* to_string(SesRecord::Resolution r)
{
    switch (r) {
    case SesRecord::Resolution::Zero: return "zero";
    case SesRecord::Resolution::Left: return "left";
    case SesRecord::Resolution::Right: return "right";
    case SesRecord::Resolution::Ambiguous: return "ambiguous";
    }
    return "?";
}

std::string ConnectivityReport::first_group_description() const
{
    if (!cocon)
        return "none found (cocon >= " + std::to_string(lower_bound) + ")";
    if (*cocon == 0)
        return colim.describe();
    if (first_group)
        return first_group->to_string();
    const SesRecord& last = trail.back();
    return "extension of " + last.right.to_string() + " by " + last.left.to_string();
}

ConnectivityReport connectivity(const GroupDiagram& d, std::size_t max_dim, std::size_t max_cosets,
                                std::size_t basis_bound)
{
    if (d.base().is_poset())
        fail(ErrorKind::PreconditionFailed, "connectivity needs a free category base");
    if (max_dim < 1)
        fail(ErrorKind::InvalidArgument, "max_dim must be at least 1");
    ConnectivityReport report;
    report.colim = colim_group(d, max_cosets);
    if (report.colim.kind == ColimResult::Kind::Unknown)
        fail(ErrorKind::UnknownColim, "colimit is " + report.colim.describe());
    if (!report.colim.is_trivial()) {
        report.cocon = 0;
        return report;
    }

    std::optional<AbelianDiagram> lower = homology_diagram(d, 1, basis_bound);
    for (std::size_t n = 2; n <= max_dim + 1; ++n) {
        AbelianDiagram upper = homology_diagram(d, n, basis_bound);
        SesRecord rec;
        rec.dimension = n;
        rec.left = colim_ab(upper);
        rec.right = flow_subgroup(*lower);
        const bool l = !rec.left.is_trivial(), r = !rec.right.is_trivial();
        using R = SesRecord::Resolution;
        rec.resolution = l && r ? R::Ambiguous : l ? R::Left : r ? R::Right : R::Zero;
        report.trail.push_back(rec);
        if (rec.resolution != R::Zero) {
            report.cocon = n - 1;
            report.first_group = rec.middle();
            return report;
        }
        lower = std::move(upper);
    }
    report.lower_bound = max_dim + 1;
    return report;
}

ComparCriterion compar_criterion(const GroupDiagram& d, std::size_t max_cosets, std::size_t basis_bound)
{
    ColimResult c = colim_group(d, max_cosets);
    if (!c.is_trivial())
        fail(ErrorKind::PreconditionFailed, "the criterion needs a trivial colimit, got " + c.describe());
    ComparCriterion out;
    out.colim_h2 = colim_ab(homology_diagram(d, 2, basis_bound));
    out.iso = out.colim_h2.is_trivial();
    out.colim1_ab = colim_n(abelianize(d), 1);
    return out;
}

}  // namespace dh
