#include "dh/permgroups.hpp"

#include "dh/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace dh {

namespace perm {

Perm identity(std::size_t degree)
{
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i)
        p[i] = static_cast<std::uint32_t>(i);
    return p;
}

Perm multiply(const Perm& a, const Perm& b)
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = b[a[i]];
    return c;
}

Perm inverse(const Perm& a)
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[a[i]] = static_cast<std::uint32_t>(i);
    return c;
}

Perm conjugate(const Perm& x, const Perm& g)
{
    return multiply(multiply(inverse(g), x), g);
}

Perm commutator(const Perm& a, const Perm& b)
{
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

bool is_identity(const Perm& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != i)
            return false;
    return true;
}

bool is_valid(const Perm& a)
{
    std::vector<char> seen(a.size(), 0);
    for (auto x : a) {
        if (x >= a.size() || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

Perm cycle(std::size_t degree, const std::vector<std::uint32_t>& points)
{
    Perm p = identity(degree);
    for (std::size_t i = 0; i < points.size(); ++i)
        p[points[i]] = points[(i + 1) % points.size()];
    return p;
}

std::string to_string(const Perm& a)
{
    std::ostringstream os;
    std::vector<char> seen(a.size(), 0);
    bool any = false;
    for (std::size_t start = 0; start < a.size(); ++start) {
        if (seen[start] || a[start] == start)
            continue;
        any = true;
        os << '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            os << (first ? "" : " ") << x;
            first = false;
            x = a[x];
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

}  // namespace perm

namespace {

constexpr std::size_t kTableLimit = 2048;

std::string word_string(const std::vector<std::uint32_t>& word, bool inverted)
{
    std::string out;
    auto emit = [&](std::uint32_t g, bool inv) {
        if (!out.empty())
            out += ' ';
        out += "g" + std::to_string(g) + (inv ? "^-1" : "");
    };
    if (inverted)
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            emit(*it, true);
    else
        for (auto g : word)
            emit(g, false);
    return out;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t bound)
    : degree_(degree), bound_(bound), cache_(std::make_shared<Cache>())
{
    if (degree_ == 0)
        fail(ErrorKind::InvalidArgument, "permutation degree must be positive");
    for (auto& g : generators) {
        if (g.size() != degree_ || !perm::is_valid(g))
            fail(ErrorKind::Validation, "generator " + perm::to_string(g) + " is not a permutation of degree " +
                                            std::to_string(degree_));
        generators_.push_back(std::move(g));
    }
}

PermGroup PermGroup::symmetric(std::size_t degree)
{
    if (degree <= 1)
        return trivial(std::max<std::size_t>(degree, 1));
    std::vector<Perm> gens{perm::cycle(degree, {0, 1})};
    if (degree > 2) {
        std::vector<std::uint32_t> all(degree);
        for (std::size_t i = 0; i < degree; ++i)
            all[i] = static_cast<std::uint32_t>(i);
        gens.push_back(perm::cycle(degree, all));
    }
    return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t order)
{
    if (order <= 1)
        return trivial();
    std::vector<std::uint32_t> all(order);
    for (std::size_t i = 0; i < order; ++i)
        all[i] = static_cast<std::uint32_t>(i);
    return PermGroup(order, {perm::cycle(order, all)});
}

void PermGroup::enumerate() const
{
    std::call_once(cache_->elements_once, [this] {
        std::vector<Perm> found{perm::identity(degree_)};
        std::vector<std::vector<std::uint32_t>> words{{}};
        std::set<Perm> seen{found.front()};
        for (std::size_t i = 0; i < found.size(); ++i) {
            for (std::uint32_t j = 0; j < generators_.size(); ++j) {
                Perm next = perm::multiply(found[i], generators_[j]);
                if (seen.insert(next).second) {
                    if (found.size() >= bound_)
                        fail(ErrorKind::BoundExceeded,
                             "group order exceeds the bound " + std::to_string(bound_));
                    auto w = words[i];
                    w.push_back(j);
                    found.push_back(std::move(next));
                    words.push_back(std::move(w));
                }
            }
        }
        std::vector<std::size_t> order(found.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
        cache_->elements.reserve(found.size());
        cache_->words.reserve(found.size());
        for (auto i : order) {
            cache_->elements.push_back(std::move(found[i]));
            cache_->words.push_back(std::move(words[i]));
        }
    });
}

const std::vector<Perm>& PermGroup::elements() const
{
    enumerate();
    return cache_->elements;
}

const std::vector<std::vector<std::uint32_t>>& PermGroup::words() const
{
    enumerate();
    return cache_->words;
}

bool PermGroup::contains(const Perm& g) const
{
    if (g.size() != degree_)
        return false;
    const auto& els = elements();
    return std::binary_search(els.begin(), els.end(), g);
}

std::size_t PermGroup::index_of(const Perm& g) const
{
    const auto& els = elements();
    auto it = std::lower_bound(els.begin(), els.end(), g);
    if (it == els.end() || *it != g)
        fail(ErrorKind::InvalidArgument, perm::to_string(g) + " is not an element of the group");
    return static_cast<std::size_t>(it - els.begin());
}

void PermGroup::build_table() const
{
    std::call_once(cache_->table_once, [this] {
        const auto& els = elements();
        const std::size_t n = els.size();
        cache_->inverses.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            cache_->inverses[a] = static_cast<std::uint32_t>(index_of(perm::inverse(els[a])));
        if (n > kTableLimit)
            return;
        cache_->table.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                cache_->table[a * n + b] = static_cast<std::uint32_t>(index_of(perm::multiply(els[a], els[b])));
    });
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const
{
    build_table();
    const std::size_t n = order();
    if (!cache_->table.empty())
        return cache_->table[a * n + b];
    const auto& els = elements();
    return index_of(perm::multiply(els[a], els[b]));
}

std::size_t PermGroup::inverse(std::size_t a) const
{
    build_table();
    return cache_->inverses[a];
}

bool PermGroup::is_abelian() const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (perm::multiply(generators_[i], generators_[j]) != perm::multiply(generators_[j], generators_[i]))
                return false;
    return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const
{
    if (degree_ != other.degree_)
        return false;
    return std::all_of(generators_.begin(), generators_.end(), [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::is_normal_in(const PermGroup& ambient) const
{
    if (!is_subgroup_of(ambient))
        return false;
    for (const auto& h : generators_)
        for (const auto& g : ambient.generators_)
            if (!contains(perm::conjugate(h, g)))
                return false;
    return true;
}

std::string PermGroup::describe() const
{
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < generators_.size(); ++i)
        os << (i ? ", " : "") << perm::to_string(generators_[i]);
    os << "> of degree " << degree_;
    return os.str();
}

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Perm> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    const auto& gens = source_.generators();
    if (images_.size() != gens.size())
        fail(ErrorKind::Validation, "expected " + std::to_string(gens.size()) + " generator images, got " +
                                        std::to_string(images_.size()));
    for (const auto& img : images_)
        if (!target_.contains(img))
            fail(ErrorKind::Validation, "image " + perm::to_string(img) + " is not in the target group");

    // Walk the Cayley graph of the source; f(x s) = f(x) f(s) must hold on
    // every edge, which is exactly well-definedness.
    const auto& els = source_.elements();
    const auto& words = source_.words();
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(els.size(), none);
    std::vector<std::size_t> image_index(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
        image_index[j] = target_.index_of(images_[j]);
    map[0] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const std::size_t y = source_.index_of(perm::multiply(els[x], gens[j]));
            const std::size_t fy = target_.multiply(map[x], image_index[j]);
            if (map[y] == none) {
                map[y] = fy;
                queue.push_back(y);
            } else if (map[y] != fy) {
                std::string rel = word_string(words[x], false);
                rel += (rel.empty() ? "" : " ") + std::string("g") + std::to_string(j);
                const std::string back = word_string(words[y], true);
                if (!back.empty())
                    rel += " " + back;
                fail(ErrorKind::Validation, "generator images violate the relation " + rel + " = 1");
            }
        }
    }
    element_map_ = std::make_shared<const std::vector<std::size_t>>(std::move(map));
}

GroupHom GroupHom::identity(const PermGroup& g)
{
    return GroupHom(g, g, g.generators());
}

GroupHom GroupHom::trivial(const PermGroup& source, const PermGroup& target)
{
    return GroupHom(source, target,
                    std::vector<Perm>(source.generators().size(), perm::identity(target.degree())));
}

GroupHom GroupHom::inclusion(const PermGroup& sub, const PermGroup& ambient)
{
    return GroupHom(sub, ambient, sub.generators());
}

Perm GroupHom::apply(const Perm& g) const
{
    return target_.elements()[apply_index(source_.index_of(g))];
}

GroupHom GroupHom::then(const GroupHom& next) const
{
    std::vector<Perm> imgs;
    for (const auto& g : images_)
        imgs.push_back(next.apply(g));
    return GroupHom(source_, next.target_, std::move(imgs));
}

bool GroupHom::is_trivial() const
{
    const auto& m = *element_map_;
    return std::all_of(m.begin(), m.end(), [](std::size_t x) { return x == 0; });
}

bool GroupHom::is_injective() const
{
    const auto& m = *element_map_;
    return std::count(m.begin(), m.end(), std::size_t{0}) == 1;
}

std::size_t graph_subgroup_order(const PermGroup& source, const PermGroup& target,
                                 const std::vector<Perm>& images)
{
    const std::size_t d1 = source.degree(), d2 = target.degree();
    std::vector<Perm> gens;
    for (std::size_t j = 0; j < source.generators().size(); ++j) {
        Perm p(d1 + d2);
        for (std::size_t x = 0; x < d1; ++x)
            p[x] = source.generators()[j][x];
        for (std::size_t y = 0; y < d2; ++y)
            p[d1 + y] = static_cast<std::uint32_t>(d1 + images.at(j)[y]);
        gens.push_back(std::move(p));
    }
    return PermGroup(d1 + d2, std::move(gens), source.bound() * target.bound()).order();
}

PermGroup generated_subgroup(std::size_t degree, const std::vector<Perm>& elements, std::size_t bound)
{
    std::vector<Perm> gens;
    PermGroup current(degree, {}, bound);
    for (const auto& e : elements) {
        if (perm::is_identity(e) || current.contains(e))
            continue;
        gens.push_back(e);
        current = PermGroup(degree, gens, bound);
    }
    return current;
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& elements)
{
    std::vector<Perm> gens;
    for (const auto& e : elements) {
        if (!ambient.contains(e))
            fail(ErrorKind::InvalidArgument, perm::to_string(e) + " is not in the ambient group");
        if (!perm::is_identity(e))
            gens.push_back(e);
    }
    PermGroup n = generated_subgroup(ambient.degree(), gens, ambient.bound());
    bool changed = true;
    while (changed) {
        changed = false;
        const auto current = n.generators();
        for (const auto& h : current)
            for (const auto& g : ambient.generators()) {
                Perm c = perm::conjugate(h, g);
                if (!n.contains(c)) {
                    auto more = n.generators();
                    more.push_back(std::move(c));
                    n = PermGroup(ambient.degree(), std::move(more), ambient.bound());
                    changed = true;
                }
            }
    }
    return n;
}

PermGroup commutator(const PermGroup& h, const PermGroup& k)
{
    if (h.degree() != k.degree())
        fail(ErrorKind::InvalidArgument, "commutator of groups of different degree");
    std::vector<Perm> joint = h.generators();
    joint.insert(joint.end(), k.generators().begin(), k.generators().end());
    PermGroup ambient(h.degree(), joint, h.bound());
    std::vector<Perm> comms;
    for (const auto& a : h.generators())
        for (const auto& b : k.generators())
            comms.push_back(perm::commutator(a, b));
    return normal_closure(ambient, comms);
}

PermGroup intersect(const PermGroup& h, const PermGroup& k)
{
    if (h.degree() != k.degree())
        fail(ErrorKind::InvalidArgument, "intersection of groups of different degree");
    const PermGroup& small = h.order() <= k.order() ? h : k;
    const PermGroup& large = h.order() <= k.order() ? k : h;
    std::vector<Perm> common;
    for (const auto& g : small.elements())
        if (large.contains(g))
            common.push_back(g);
    return generated_subgroup(h.degree(), common, h.bound());
}

PermGroup kernel(const GroupHom& f)
{
    std::vector<Perm> ker;
    const auto& els = f.source().elements();
    for (std::size_t i = 0; i < els.size(); ++i)
        if (f.apply_index(i) == 0)
            ker.push_back(els[i]);
    return generated_subgroup(f.source().degree(), ker, f.source().bound());
}

PermGroup image(const GroupHom& f)
{
    std::vector<Perm> gens;
    for (const auto& g : f.images())
        if (!perm::is_identity(g) && std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(g);
    return PermGroup(f.target().degree(), std::move(gens), f.target().bound());
}

Quotient quotient(const PermGroup& ambient, const PermGroup& normal)
{
    if (!normal.is_normal_in(ambient))
        fail(ErrorKind::NotNormal, "subgroup " + normal.describe() + " is not normal in " + ambient.describe());
    const auto& els = ambient.elements();
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> coset_of(els.size(), none);
    std::vector<Perm> reps;
    for (std::size_t x = 0; x < els.size(); ++x) {
        if (coset_of[x] != none)
            continue;
        for (const auto& n : normal.elements())
            coset_of[ambient.index_of(perm::multiply(n, els[x]))] = reps.size();
        reps.push_back(els[x]);
    }
    const std::size_t index = reps.size();
    std::vector<Perm> gens;
    for (const auto& g : ambient.generators()) {
        Perm p(index);
        for (std::size_t c = 0; c < index; ++c)
            p[c] = static_cast<std::uint32_t>(coset_of[ambient.index_of(perm::multiply(reps[c], g))]);
        gens.push_back(std::move(p));
    }
    PermGroup q(index, gens, ambient.bound());
    GroupHom proj(ambient, q, gens);
    return Quotient{std::move(q), std::move(proj), std::move(reps)};
}

NormalSubgroupList::NormalSubgroupList(PermGroup ambient, std::vector<PermGroup> subgroups)
    : ambient_(std::move(ambient)), subgroups_(std::move(subgroups))
{
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
        if (!subgroups_[i].is_normal_in(ambient_))
            fail(ErrorKind::NotNormal, "K_" + std::to_string(i) + " is not a normal subgroup of the ambient group");
}

PermGroup fat_commutator(const NormalSubgroupList& list)
{
    const auto& ks = list.subgroups();
    const std::size_t count = ks.size();
    if (count > 6)
        fail(ErrorKind::PreconditionFailed, "fat commutator supports at most 6 subgroups");
    const std::size_t degree = list.ambient().degree();
    auto meet = [&](unsigned mask) {
        std::optional<PermGroup> acc;
        for (std::size_t i = 0; i < count; ++i)
            if (mask & (1u << i))
                acc = acc ? intersect(*acc, ks[i]) : ks[i];
        return *acc;
    };
    std::vector<Perm> gens;
    const unsigned full = (1u << count) - 1;
    // Masks containing index 0 enumerate each unordered partition once.
    for (unsigned mask = 1; mask < full; mask += 2) {
        PermGroup c = commutator(meet(mask), meet(full & ~mask));
        gens.insert(gens.end(), c.generators().begin(), c.generators().end());
    }
    return generated_subgroup(degree, gens, list.ambient().bound());
}

Abelianization abelianization(const PermGroup& g)
{
    const std::size_t k = g.generators().size();
    const auto& els = g.elements();
    const auto& words = g.words();
    std::vector<std::vector<long>> exps(els.size(), std::vector<long>(k, 0));
    for (std::size_t x = 0; x < els.size(); ++x)
        for (auto j : words[x])
            ++exps[x][j];

    // Schreier relators w(x) s_j w(x s_j)^-1, abelianized.
    std::set<std::vector<long>> rels;
    for (std::size_t x = 0; x < els.size(); ++x)
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t y = g.index_of(perm::multiply(els[x], g.generators()[j]));
            std::vector<long> r = exps[x];
            r[j] += 1;
            bool zero = true;
            for (std::size_t i = 0; i < k; ++i) {
                r[i] -= exps[y][i];
                zero = zero && r[i] == 0;
            }
            if (!zero)
                rels.insert(std::move(r));
        }
    IntMatrix rel(k, rels.size());
    std::size_t c = 0;
    for (const auto& r : rels) {
        for (std::size_t i = 0; i < k; ++i)
            rel(i, c) = r[i];
        ++c;
    }
    Abelianization out{FpAbelianGroup(k, std::move(rel)), {}};
    out.images.reserve(els.size());
    for (const auto& e : exps) {
        IntVector v(k);
        for (std::size_t i = 0; i < k; ++i)
            v[i] = e[i];
        out.images.push_back(std::move(v));
    }
    return out;
}

AbHom abelianization_map(const GroupHom& f, const Abelianization& source, const Abelianization& target)
{
    const auto& gens = f.source().generators();
    IntMatrix m(target.group.generator_count(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        m.set_column(j, target.images.at(f.apply_index(f.source().index_of(gens[j]))));
    return AbHom(source.group, target.group, std::move(m));
}

}  // namespace dh
