#include "dh/diagrams.hpp"

#include "dh/error.hpp"

#include <map>

namespace dh {

Word reduce_word(const Word& w)
{
    Word out;
    for (long x : w) {
        if (x == 0)
            fail(ErrorKind::InvalidArgument, "word letters are nonzero");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

std::size_t generator_count(const DiagramGroup& g)
{
    if (const auto* p = std::get_if<PermGroup>(&g))
        return p->generators().size();
    return std::get<SymbolicGroup>(g).free_rank();
}

bool is_finite(const DiagramGroup& g)
{
    if (std::holds_alternative<PermGroup>(g))
        return true;
    return std::get<SymbolicGroup>(g).kind == SymbolicGroup::Kind::Trivial;
}

std::string describe(const DiagramGroup& g)
{
    if (const auto* p = std::get_if<PermGroup>(&g))
        return "permutation group " + p->describe();
    return std::get<SymbolicGroup>(g).describe();
}

GroupElement generator(const DiagramGroup& g, std::size_t j)
{
    if (const auto* p = std::get_if<PermGroup>(&g))
        return p->generators().at(j);
    return Word{static_cast<long>(j + 1)};
}

GroupElement identity_element(const DiagramGroup& g)
{
    if (const auto* p = std::get_if<PermGroup>(&g))
        return perm::identity(p->degree());
    return Word{};
}

bool elements_equal(const GroupElement& a, const GroupElement& b)
{
    if (a.index() != b.index())
        return false;
    if (const auto* w = std::get_if<Word>(&a))
        return reduce_word(*w) == reduce_word(std::get<Word>(b));
    return std::get<Perm>(a) == std::get<Perm>(b);
}

std::string to_string(const GroupElement& x)
{
    if (const auto* p = std::get_if<Perm>(&x))
        return perm::to_string(*p);
    const Word& w = std::get<Word>(x);
    if (w.empty())
        return "e";
    std::string out;
    for (long letter : w) {
        if (!out.empty())
            out += ' ';
        out += "x" + std::to_string(std::labs(letter));
        if (letter < 0)
            out += "^-1";
    }
    return out;
}

std::size_t element_count(const DiagramGroup& g)
{
    if (const auto* p = std::get_if<PermGroup>(&g))
        return p->order();
    if (std::get<SymbolicGroup>(g).kind == SymbolicGroup::Kind::Trivial)
        return 1;
    fail(ErrorKind::PreconditionFailed, "the " + describe(g) + " group is infinite");
}

namespace {

// Free categories on the same graph enumerate every path; used to check
// that a poset diagram agrees along parallel paths.
template <class Compose, class Same>
void check_parallel_paths(const FreeCategory& base, Compose compose, Same same)
{
    if (!base.is_poset())
        return;
    const FreeCategory paths = FreeCategory::free(base.graph());
    for (std::size_t a = 0; a < paths.object_count(); ++a)
        for (std::size_t b = 0; b < paths.object_count(); ++b) {
            const auto& hom = paths.hom(a, b);
            if (hom.size() < 2)
                continue;
            auto first = compose(paths.morphism(hom.front()).word);
            for (std::size_t i = 1; i < hom.size(); ++i)
                if (!same(first, compose(paths.morphism(hom[i]).word)))
                    fail(ErrorKind::Functoriality, "paths " + paths.morphism_name(hom.front()) + " and " +
                                                       paths.morphism_name(hom[i]) + " from '" +
                                                       paths.object_name(a) + "' to '" + paths.object_name(b) +
                                                       "' give different composites");
        }
}

DiagramGroup canonical_object(DiagramGroup g)
{
    if (auto* s = std::get_if<SymbolicGroup>(&g); s && s->kind == SymbolicGroup::Kind::Cyclic)
        return PermGroup::cyclic(s->parameter);
    return g;
}

}  // namespace

GroupDiagram::GroupDiagram(FreeCategory base, std::vector<DiagramGroup> objects,
                           std::vector<std::vector<GroupElement>> arrow_images)
    : base_(std::move(base))
{
    const Graph& graph = base_.graph();
    if (objects.size() != graph.vertex_count())
        fail(ErrorKind::Schema, "expected one group per vertex");
    if (arrow_images.size() != graph.arrow_count())
        fail(ErrorKind::Schema, "expected one homomorphism per arrow");
    for (auto& g : objects)
        objects_.push_back(canonical_object(std::move(g)));

    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        const std::string where = "arrow '" + arr.name + "': ";
        const DiagramGroup& src = objects_[arr.src];
        const DiagramGroup& dst = objects_[arr.dst];
        auto& images = arrow_images[a];
        if (images.size() != generator_count(src))
            fail(ErrorKind::Endpoint, where + "expected " + std::to_string(generator_count(src)) +
                                          " generator images for source '" + graph.vertex_name(arr.src) +
                                          "', got " + std::to_string(images.size()));
        for (auto& img : images) {
            if (const auto* p = std::get_if<PermGroup>(&dst)) {
                const Perm* x = std::get_if<Perm>(&img);
                if (!x || x->size() != p->degree())
                    fail(ErrorKind::Endpoint, where + "images must be permutations of degree " +
                                                  std::to_string(p->degree()));
            } else {
                Word* w = std::get_if<Word>(&img);
                if (!w)
                    fail(ErrorKind::Endpoint, where + "images in a free group must be words");
                const long rank = static_cast<long>(generator_count(dst));
                for (long x : *w)
                    if (x == 0 || x > rank || -x > rank)
                        fail(ErrorKind::Endpoint, where + "word letter " + std::to_string(x) + " out of range");
                *w = reduce_word(*w);
            }
        }
        std::optional<GroupHom> hom;
        const auto* ps = std::get_if<PermGroup>(&src);
        const auto* pt = std::get_if<PermGroup>(&dst);
        if (ps && pt) {
            std::vector<Perm> perms;
            for (const auto& img : images)
                perms.push_back(std::get<Perm>(img));
            try {
                hom.emplace(*ps, *pt, std::move(perms));
            } catch (const Error& e) {
                fail(e.kind(), where + e.what());
            }
        } else if (ps) {
            for (const auto& img : images)
                if (!std::get<Word>(img).empty())
                    fail(ErrorKind::Validation, where + "a finite group maps only trivially into a free group");
        } else if (pt) {
            for (const auto& img : images)
                if (!pt->contains(std::get<Perm>(img)))
                    fail(ErrorKind::Validation, where + "image " + perm::to_string(std::get<Perm>(img)) +
                                                    " is not in the target group");
        }
        arrows_.emplace_back(std::move(images), std::move(hom));
    }

    check_parallel_paths(
        base_,
        [this](const std::vector<std::size_t>& word) {
            const std::size_t start = base_.graph().arrow(word.front()).src;
            std::vector<GroupElement> els;
            for (std::size_t j = 0; j < generator_count(objects_[start]); ++j)
                els.push_back(generator(objects_[start], j));
            for (std::size_t a : word)
                for (auto& x : els)
                    x = apply_arrow(a, x);
            return els;
        },
        [](const std::vector<GroupElement>& x, const std::vector<GroupElement>& y) {
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!elements_equal(x[i], y[i]))
                    return false;
            return true;
        });
}

bool GroupDiagram::is_finite() const
{
    for (const auto& g : objects_)
        if (!std::holds_alternative<PermGroup>(g))
            return false;
    return true;
}

const PermGroup& GroupDiagram::finite_object(std::size_t v) const
{
    const auto* p = std::get_if<PermGroup>(&objects_.at(v));
    if (!p)
        fail(ErrorKind::PreconditionFailed, "object '" + base_.object_name(v) + "' is " + describe(objects_[v]) +
                                                "; this operation needs explicit finite groups");
    return *p;
}

GroupElement GroupDiagram::apply_arrow(std::size_t a, const GroupElement& x) const
{
    const Arrow& arr = base_.graph().arrow(a);
    const DiagramGroup& dst = objects_[arr.dst];
    const DiagramArrow& map = arrows_[a];
    if (const auto* p = std::get_if<Perm>(&x)) {
        if (map.hom())
            return map.hom()->apply(*p);
        return identity_element(dst);  // finite into free
    }
    const Word& w = std::get<Word>(x);
    if (const auto* pt = std::get_if<PermGroup>(&dst)) {
        Perm acc = perm::identity(pt->degree());
        for (long letter : w) {
            const Perm& img = std::get<Perm>(map.images().at(static_cast<std::size_t>(std::labs(letter)) - 1));
            acc = perm::multiply(acc, letter > 0 ? img : perm::inverse(img));
        }
        return acc;
    }
    Word out;
    for (long letter : w) {
        const Word& img = std::get<Word>(map.images().at(static_cast<std::size_t>(std::labs(letter)) - 1));
        if (letter > 0)
            out.insert(out.end(), img.begin(), img.end());
        else
            for (auto it = img.rbegin(); it != img.rend(); ++it)
                out.push_back(-*it);
    }
    return reduce_word(out);
}

std::vector<GroupElement> GroupDiagram::morphism_images(std::size_t morphism) const
{
    const Morphism& m = base_.morphism(morphism);
    std::vector<GroupElement> els;
    for (std::size_t j = 0; j < generator_count(objects_[m.src]); ++j)
        els.push_back(generator(objects_[m.src], j));
    for (std::size_t a : m.word)
        for (auto& x : els)
            x = apply_arrow(a, x);
    return els;
}

GroupHom GroupDiagram::finite_morphism_map(std::size_t morphism) const
{
    const Morphism& m = base_.morphism(morphism);
    const PermGroup& src = finite_object(m.src);
    const PermGroup& dst = finite_object(m.dst);
    if (m.is_identity())
        return GroupHom::identity(src);
    if (m.word.size() == 1)
        return *arrows_[m.word.front()].hom();
    std::vector<Perm> perms;
    for (const auto& x : morphism_images(morphism))
        perms.push_back(std::get<Perm>(x));
    return GroupHom(src, dst, std::move(perms));
}

AbelianDiagram::AbelianDiagram(FreeCategory base, std::vector<FpAbelianGroup> objects, std::vector<AbHom> arrows)
    : base_(std::move(base)), objects_(std::move(objects)), arrows_(std::move(arrows))
{
    const Graph& graph = base_.graph();
    if (objects_.size() != graph.vertex_count())
        fail(ErrorKind::Schema, "expected one group per vertex");
    if (arrows_.size() != graph.arrow_count())
        fail(ErrorKind::Schema, "expected one homomorphism per arrow");
    auto same_presentation = [](const FpAbelianGroup& x, const FpAbelianGroup& y) {
        return x.generator_count() == y.generator_count() && x.relations() == y.relations();
    };
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        if (!same_presentation(arrows_[a].source(), objects_[arr.src]) ||
            !same_presentation(arrows_[a].target(), objects_[arr.dst]))
            fail(ErrorKind::Endpoint, "arrow '" + arr.name + "': homomorphism endpoints do not match '" +
                                          graph.vertex_name(arr.src) + "' -> '" + graph.vertex_name(arr.dst) + "'");
    }
    auto compose = [this](const std::vector<std::size_t>& word) {
        AbHom acc = arrows_[word.front()];
        for (std::size_t i = 1; i < word.size(); ++i)
            acc = acc.then(arrows_[word[i]]);
        return acc;
    };
    for (std::size_t f = 0; f < base_.morphism_count(); ++f) {
        const Morphism& m = base_.morphism(f);
        morphism_maps_.push_back(m.is_identity() ? AbHom::identity(objects_[m.src]) : compose(m.word));
    }
    check_parallel_paths(base_, compose, [](const AbHom& x, const AbHom& y) { return x.equals(y); });
}

AbelianDiagram AbelianDiagram::normalized() const
{
    std::vector<FpAbelianGroup> objs;
    for (const auto& g : objects_)
        objs.push_back(g.normalized());
    std::vector<AbHom> maps;
    const Graph& graph = base_.graph();
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const Arrow& arr = graph.arrow(a);
        maps.push_back(AbHom::trusted(objs[arr.src], objs[arr.dst],
                                      objects_[arr.dst].to_normal() * arrows_[a].matrix() *
                                          objects_[arr.src].from_normal()));
    }
    return AbelianDiagram(base_, std::move(objs), std::move(maps));
}

namespace {

IntVector exponent_sums(const Word& w, std::size_t rank)
{
    IntVector v(rank, Integer(0));
    for (long x : w)
        v[static_cast<std::size_t>(std::labs(x)) - 1] += x > 0 ? 1 : -1;
    return v;
}

}  // namespace

AbelianDiagram abelianize(const GroupDiagram& d)
{
    const Graph& graph = d.base().graph();
    std::vector<std::optional<Abelianization>> ab(d.object_count());
    std::vector<FpAbelianGroup> objects;
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        if (const auto* p = std::get_if<PermGroup>(&d.object(v))) {
            ab[v] = abelianization(*p);
            objects.push_back(ab[v]->group);
        } else {
            objects.emplace_back(generator_count(d.object(v)));
        }
    }
    std::vector<AbHom> arrows;
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        const auto& images = d.arrow(a).images();
        IntMatrix m(objects[arr.dst].generator_count(), images.size());
        for (std::size_t j = 0; j < images.size(); ++j) {
            if (const auto* p = std::get_if<Perm>(&images[j])) {
                const PermGroup& tgt = d.finite_object(arr.dst);
                m.set_column(j, ab[arr.dst]->images[tgt.index_of(*p)]);
            } else {
                m.set_column(j, exponent_sums(std::get<Word>(images[j]), objects[arr.dst].generator_count()));
            }
        }
        arrows.emplace_back(objects[arr.src], objects[arr.dst], std::move(m));
    }
    return AbelianDiagram(d.base(), std::move(objects), std::move(arrows));
}

AbelianDiagram homology_diagram(const GroupDiagram& d, std::size_t k, std::size_t basis_bound)
{
    const Graph& graph = d.base().graph();
    std::vector<FpAbelianGroup> objects;
    std::vector<AbHom> arrows;
    if (k == 0) {
        objects.assign(d.object_count(), FpAbelianGroup(1));
        for (std::size_t a = 0; a < graph.arrow_count(); ++a)
            arrows.push_back(AbHom::identity(objects[graph.arrow(a).src]));
        return AbelianDiagram(d.base(), std::move(objects), std::move(arrows));
    }

    std::vector<std::optional<BarHomology>> bars(d.object_count());
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        if (const auto* p = std::get_if<PermGroup>(&d.object(v))) {
            bars[v] = bar_homology(*p, k, basis_bound);
            objects.push_back(bars[v]->homology.group);
        } else {
            objects.push_back(closed_form_homology(std::get<SymbolicGroup>(d.object(v)), k).normalized());
        }
    }
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        const FpAbelianGroup& src = objects[arr.src];
        const FpAbelianGroup& dst = objects[arr.dst];
        const DiagramArrow& map = d.arrow(a);
        if (map.hom()) {
            arrows.push_back(induced_map(*map.hom(), *bars[arr.src], *bars[arr.dst]));
            continue;
        }
        if (k != 1 || bars[arr.src]) {
            // Free groups have no homology above degree one; finite groups map trivially into free ones.
            arrows.push_back(AbHom::zero(src, dst));
            continue;
        }
        IntMatrix m(dst.generator_count(), src.generator_count());
        for (std::size_t j = 0; j < map.images().size(); ++j) {
            if (const auto* p = std::get_if<Perm>(&map.images()[j])) {
                const BarHomology& bh = *bars[arr.dst];
                const std::size_t g = bh.bar.group().index_of(*p);
                if (g == 0)
                    continue;
                IntMatrix chain(bh.bar.rank(1), 1);
                chain(bh.bar.index({g}), 0) = 1;
                IntMatrix cls = bh.homology.classify(chain);
                for (std::size_t r = 0; r < m.rows(); ++r)
                    m(r, j) = cls(r, 0);
            } else {
                m.set_column(j, exponent_sums(std::get<Word>(map.images()[j]), dst.generator_count()));
            }
        }
        arrows.emplace_back(src, dst, std::move(m));
    }
    return AbelianDiagram(d.base(), std::move(objects), std::move(arrows));
}

}  // namespace dh
