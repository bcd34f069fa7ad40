#pragma once

#include "dh/abelian.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace dh {

/// Permutation of {0, ..., d-1} as its image array. Products compose left to
/// right: (a * b)(x) = b(a(x)).
using Perm = std::vector<std::uint32_t>;

namespace perm {
Perm identity(std::size_t degree);
Perm multiply(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm conjugate(const Perm& x, const Perm& g);  // g^-1 x g
Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b
bool is_identity(const Perm& a);
bool is_valid(const Perm& a);
Perm cycle(std::size_t degree, const std::vector<std::uint32_t>& points);
/// Cycle notation, e.g. "(0 1 2)"; the identity is "()".
std::string to_string(const Perm& a);
}  // namespace perm

class PermGroup {
public:
    static constexpr std::size_t kDefaultBound = 100000;

    PermGroup() : PermGroup(1, {}) {}
    PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t bound = kDefaultBound);

    static PermGroup trivial(std::size_t degree = 1) { return PermGroup(degree, {}); }
    static PermGroup symmetric(std::size_t degree);
    static PermGroup cyclic(std::size_t order);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Perm>& generators() const noexcept { return generators_; }
    std::size_t bound() const noexcept { return bound_; }

    /// Sorted element list; the identity is element 0. Enumerated once, on demand.
    const std::vector<Perm>& elements() const;
    std::size_t order() const { return elements().size(); }
    bool is_trivial() const { return order() == 1; }
    bool contains(const Perm& g) const;
    std::size_t index_of(const Perm& g) const;

    /// Product of elements by index; uses a table for small groups.
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    bool is_abelian() const;
    bool is_subgroup_of(const PermGroup& other) const;
    bool is_normal_in(const PermGroup& ambient) const;

    /// For each element, a word in the generators reaching it (breadth first):
    /// entries are generator indices, applied left to right.
    const std::vector<std::vector<std::uint32_t>>& words() const;

    std::string describe() const;

private:
    struct Cache {
        std::once_flag elements_once;
        std::vector<Perm> elements;
        std::vector<std::vector<std::uint32_t>> words;
        std::once_flag table_once;
        std::vector<std::uint32_t> table;
        std::vector<std::uint32_t> inverses;
    };
    void enumerate() const;
    void build_table() const;

    std::size_t degree_ = 1;
    std::vector<Perm> generators_;
    std::size_t bound_ = kDefaultBound;
    std::shared_ptr<Cache> cache_;
};

/// Homomorphism given by generator images; construction verifies it is well defined.
class GroupHom {
public:
    GroupHom(PermGroup source, PermGroup target, std::vector<Perm> images);

    static GroupHom identity(const PermGroup& g);
    static GroupHom trivial(const PermGroup& source, const PermGroup& target);
    static GroupHom inclusion(const PermGroup& sub, const PermGroup& ambient);

    const PermGroup& source() const noexcept { return source_; }
    const PermGroup& target() const noexcept { return target_; }
    const std::vector<Perm>& images() const noexcept { return images_; }

    Perm apply(const Perm& g) const;
    /// Source element index -> target element index.
    std::size_t apply_index(std::size_t g) const { return element_map_->at(g); }
    const std::vector<std::size_t>& element_map() const { return *element_map_; }

    /// next after this.
    GroupHom then(const GroupHom& next) const;
    bool is_trivial() const;
    bool is_injective() const;

private:
    PermGroup source_;
    PermGroup target_;
    std::vector<Perm> images_;
    std::shared_ptr<const std::vector<std::size_t>> element_map_;
};

/// Order of the subgroup of source x target generated by the pairs (g_i, f(g_i)).
std::size_t graph_subgroup_order(const PermGroup& source, const PermGroup& target,
                                 const std::vector<Perm>& images);

/// Subgroup generated by the given elements, built by adding generators greedily.
PermGroup generated_subgroup(std::size_t degree, const std::vector<Perm>& elements,
                             std::size_t bound = PermGroup::kDefaultBound);

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& elements);
PermGroup commutator(const PermGroup& h, const PermGroup& k);
PermGroup intersect(const PermGroup& h, const PermGroup& k);
PermGroup kernel(const GroupHom& f);
PermGroup image(const GroupHom& f);

struct Quotient {
    PermGroup group;       // acting on right cosets
    GroupHom projection;   // ambient -> group
    std::vector<Perm> coset_representatives;
};
/// G/N via the action on right cosets; fails with NotNormal.
Quotient quotient(const PermGroup& ambient, const PermGroup& normal);

/// Normal subgroups K_0..K_m of a common ambient group.
class NormalSubgroupList {
public:
    NormalSubgroupList(PermGroup ambient, std::vector<PermGroup> subgroups);
    const PermGroup& ambient() const noexcept { return ambient_; }
    const std::vector<PermGroup>& subgroups() const noexcept { return subgroups_; }

private:
    PermGroup ambient_;
    std::vector<PermGroup> subgroups_;
};

/// Product over unordered partitions {I, J} of {0..m}, both parts nonempty,
/// of the commutators [meet of K_i over I, meet of K_j over J].
PermGroup fat_commutator(const NormalSubgroupList& list);

struct Abelianization {
    FpAbelianGroup group;             // presented on the group generators
    std::vector<IntVector> images;    // element index -> image in group
};
Abelianization abelianization(const PermGroup& g);
/// Matrix of the induced map G_ab -> H_ab on generator coordinates.
AbHom abelianization_map(const GroupHom& f, const Abelianization& source, const Abelianization& target);

}  // namespace dh
