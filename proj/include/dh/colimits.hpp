#pragma once

#include "dh/diagrams.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dh {

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;  // letters are 1-based signed generator indices

    std::string to_string() const;
};

/// Presentation of the colimit: generators for every non-identity element of
/// each finite object (the given generators of free objects), relators from
/// the multiplication tables and the arrow identifications.
struct ColimPresentation {
    GroupPresentation presentation;
    /// Per object: generator index (0-based) of each element, or npos for the
    /// identity. Indexed by element for finite objects, by generator for free ones.
    std::vector<std::vector<std::size_t>> letters;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};
ColimPresentation colim_presentation(const GroupDiagram& d);

struct CosetTable {
    enum class Status { Complete, Exceeded };

    Status status = Status::Exceeded;
    std::size_t bound = 0;
    std::size_t generator_count = 0;
    /// rows[c][2j] is c·x_j, rows[c][2j+1] is c·x_j^-1 (complete tables only).
    std::vector<std::vector<std::size_t>> rows;

    bool complete() const noexcept { return status == Status::Complete; }
    std::size_t coset_count() const noexcept { return rows.size(); }
    /// Right action of generator j on the cosets.
    Perm generator_action(std::size_t j) const;
};

/// HLT coset enumeration of the trivial subgroup, without lookahead.
CosetTable todd_coxeter(const GroupPresentation& p, std::size_t max_cosets = 50000);

struct ColimResult {
    enum class Kind { Finite, Trivial, Unknown };

    Kind kind = Kind::Unknown;
    std::size_t bound = 0;       // coset bound for Unknown
    std::string method;          // "coequalizer" or "coset enumeration"
    PermGroup group;             // set for Finite and Trivial
    /// Images of the generators of each object under its insertion.
    std::vector<std::vector<Perm>> insertion_images;

    bool is_trivial() const noexcept { return kind == Kind::Trivial; }
    std::string describe() const;
    /// Image of an element of object v.
    Perm insert(const GroupDiagram& d, std::size_t v, const GroupElement& x) const;
};

/// Quotient of G(b) by the normal closure of f_γ(x) f_δ(x)^-1 when every arrow
/// ends at a single vertex b with G(b) finite and every other vertex has an
/// arrow; nullopt for other shapes.
std::optional<ColimResult> colim_by_normal_closure(const GroupDiagram& d);
ColimResult colim_by_enumeration(const GroupDiagram& d, std::size_t max_cosets = 50000);
/// Fast path when it applies, otherwise coset enumeration. Finite results are
/// verified: insertions are homomorphisms and commute with the arrows.
ColimResult colim_group(const GroupDiagram& d, std::size_t max_cosets = 50000);

/// Throws Validation unless every insertion is a homomorphism and
/// in_t(G(γ)x) = in_s(x) for every arrow γ and generator x.
void verify_colimit(const GroupDiagram& d, const ColimResult& r);
/// True when both results are known and x ↦ x on insertion images is an isomorphism.
bool colimits_agree(const GroupDiagram& d, const ColimResult& a, const ColimResult& b);

}  // namespace dh
