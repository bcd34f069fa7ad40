#pragma once

#include "dh/abelian.hpp"
#include "dh/grouphomology.hpp"
#include "dh/permgroups.hpp"
#include "dh/shapes.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace dh {

/// Word in free generators: letter k > 0 is x_k, -k is its inverse (1-based).
using Word = std::vector<long>;
Word reduce_word(const Word& w);

/// An object of a group diagram: an explicit finite permutation group, or a
/// symbolic free group (trivial, infinite cyclic, or free of rank r).
using DiagramGroup = std::variant<PermGroup, SymbolicGroup>;
/// An element of a DiagramGroup: a permutation or a free word.
using GroupElement = std::variant<Perm, Word>;

std::size_t generator_count(const DiagramGroup& g);
bool is_finite(const DiagramGroup& g);
std::string describe(const DiagramGroup& g);
GroupElement generator(const DiagramGroup& g, std::size_t j);
GroupElement identity_element(const DiagramGroup& g);
bool elements_equal(const GroupElement& a, const GroupElement& b);
std::string to_string(const GroupElement& x);
/// Number of elements; fails for infinite groups.
std::size_t element_count(const DiagramGroup& g);

/// Arrow data: images of the source generators; hom() is set when both
/// endpoints are finite.
class DiagramArrow {
public:
    DiagramArrow(std::vector<GroupElement> images, std::optional<GroupHom> hom)
        : images_(std::move(images)), hom_(std::move(hom)) {}
    const std::vector<GroupElement>& images() const noexcept { return images_; }
    const std::optional<GroupHom>& hom() const noexcept { return hom_; }

private:
    std::vector<GroupElement> images_;
    std::optional<GroupHom> hom_;
};

class GroupDiagram {
public:
    /// Validates endpoints, well-definedness, and (over posets) functoriality.
    GroupDiagram(FreeCategory base, std::vector<DiagramGroup> objects,
                 std::vector<std::vector<GroupElement>> arrow_images);

    const FreeCategory& base() const noexcept { return base_; }
    const DiagramGroup& object(std::size_t v) const { return objects_.at(v); }
    const DiagramArrow& arrow(std::size_t a) const { return arrows_.at(a); }
    std::size_t object_count() const noexcept { return objects_.size(); }

    bool is_finite() const;
    /// The object as a permutation group; fails naming the object otherwise.
    const PermGroup& finite_object(std::size_t v) const;
    /// Image of x (an element of the arrow's source) under the arrow.
    GroupElement apply_arrow(std::size_t a, const GroupElement& x) const;
    /// Images of the source generators under a morphism of the base.
    std::vector<GroupElement> morphism_images(std::size_t morphism) const;
    /// Composite homomorphism of a morphism between finite objects.
    GroupHom finite_morphism_map(std::size_t morphism) const;

private:
    FreeCategory base_;
    std::vector<DiagramGroup> objects_;
    std::vector<DiagramArrow> arrows_;
};

class AbelianDiagram {
public:
    AbelianDiagram(FreeCategory base, std::vector<FpAbelianGroup> objects, std::vector<AbHom> arrows);

    const FreeCategory& base() const noexcept { return base_; }
    const FpAbelianGroup& object(std::size_t v) const { return objects_.at(v); }
    const AbHom& arrow(std::size_t a) const { return arrows_.at(a); }
    std::size_t object_count() const noexcept { return objects_.size(); }
    /// Composite along a morphism of the base (identity for identities).
    const AbHom& morphism_map(std::size_t morphism) const { return morphism_maps_.at(morphism); }

    /// Same shape, objects replaced by their normalized presentations.
    AbelianDiagram normalized() const;

private:
    FreeCategory base_;
    std::vector<FpAbelianGroup> objects_;
    std::vector<AbHom> arrows_;
    std::vector<AbHom> morphism_maps_;
};

AbelianDiagram abelianize(const GroupDiagram& d);
/// Objects H_k(G(c)), arrows H_k of the arrow maps.
AbelianDiagram homology_diagram(const GroupDiagram& d, std::size_t k,
                                std::size_t basis_bound = BarComplex::kDefaultBasisBound);

}  // namespace dh
