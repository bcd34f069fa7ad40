#include "dh/spaces.hpp"

#include "dh/error.hpp"
#include "dh/simplicial_identities.hpp"

#include <map>

namespace dh {

using Key = FiniteSimplicialSet::Key;

FiniteSimplicialSet FiniteSimplicialSet::build(std::size_t max_dim,
                                               const std::function<std::vector<Key>(std::size_t)>& simplices,
                                               const KeyMap& face, const KeyMap& degeneracy)
{
    FiniteSimplicialSet s;
    std::vector<std::vector<Key>> keys;
    std::vector<std::map<Key, std::uint32_t>> lookup(max_dim + 1);
    std::size_t total = 0;
    for (std::size_t n = 0; n <= max_dim; ++n) {
        keys.push_back(simplices(n));
        total += keys.back().size();
        if (total > kMaxSimplices)
            fail(ErrorKind::BoundExceeded, "simplicial set exceeds " + std::to_string(kMaxSimplices) + " simplices");
        if (keys.back().empty())
            fail(ErrorKind::InvalidArgument, "a pointed simplicial set has a base simplex in every dimension");
        for (std::size_t x = 0; x < keys[n].size(); ++x)
            if (!lookup[n].emplace(keys[n][x], static_cast<std::uint32_t>(x)).second)
                fail(ErrorKind::InvalidArgument, "duplicate simplex in dimension " + std::to_string(n));
        s.counts_.push_back(keys[n].size());
    }
    auto find = [&](std::size_t n, const Key& k, const char* what) {
        auto it = lookup[n].find(k);
        if (it == lookup[n].end())
            fail(ErrorKind::InvalidArgument, std::string(what) + " lands outside the listed " + std::to_string(n) +
                                                 "-simplices");
        return it->second;
    };
    s.faces_.resize(max_dim + 1);
    s.degeneracies_.resize(max_dim + 1);
    for (std::size_t n = 0; n <= max_dim; ++n) {
        const std::size_t c = s.counts_[n];
        if (n >= 1) {
            s.faces_[n].resize((n + 1) * c);
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t x = 0; x < c; ++x)
                    s.faces_[n][i * c + x] = find(n - 1, face(n, i, keys[n][x]), "face");
        }
        if (n < max_dim) {
            s.degeneracies_[n].resize((n + 1) * c);
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t x = 0; x < c; ++x)
                    s.degeneracies_[n][i * c + x] = find(n + 1, degeneracy(n, i, keys[n][x]), "degeneracy");
        }
    }
    s.degenerate_.resize(max_dim + 1);
    for (std::size_t n = 0; n <= max_dim; ++n) {
        s.degenerate_[n].assign(s.counts_[n], false);
        for (std::size_t x = 0; x < s.counts_[n] && n >= 1; ++x)
            for (std::size_t i = 0; i < n && !s.degenerate_[n][x]; ++i)
                s.degenerate_[n][x] = s.degeneracy(n - 1, i, s.face(n, i, x)) == x;
    }
    return s;
}

std::size_t FiniteSimplicialSet::total_count() const
{
    std::size_t total = 0;
    for (auto c : counts_)
        total += c;
    return total;
}

std::vector<std::size_t> FiniteSimplicialSet::nondegenerate(std::size_t n) const
{
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < count(n); ++x)
        if (!degenerate_[n][x])
            out.push_back(x);
    return out;
}

std::size_t FiniteSimplicialSet::nondegenerate_count(std::size_t n) const
{
    std::size_t k = 0;
    for (bool d : degenerate_.at(n))
        k += d ? 0 : 1;
    return k;
}

std::vector<std::string> FiniteSimplicialSet::identity_violations() const
{
    auto count = [this](std::size_t n) { return counts_[n]; };
    auto face = [this](std::size_t n, std::size_t i, std::size_t x) { return this->face(n, i, x); };
    auto degen = [this](std::size_t n, std::size_t i, std::size_t x) { return degeneracy(n, i, x); };
    std::vector<std::string> out = simplicial_identity_violations(max_dim(), count, face, degen);
    for (std::size_t n = 0; n <= max_dim(); ++n) {
        for (std::size_t i = 0; i <= n && n >= 1; ++i)
            if (face(n, i, 0) != 0)
                out.push_back("face d_" + std::to_string(i) + " moves the base " + std::to_string(n) + "-simplex");
        for (std::size_t i = 0; i <= n && n < max_dim(); ++i)
            if (degen(n, i, 0) != 0)
                out.push_back("degeneracy s_" + std::to_string(i) + " moves the base " + std::to_string(n) + "-simplex");
    }
    return out;
}

SimplicialMap SimplicialMap::identity(const FiniteSimplicialSet& x)
{
    SimplicialMap f;
    for (std::size_t n = 0; n <= x.max_dim(); ++n) {
        std::vector<std::uint32_t> level(x.count(n));
        for (std::size_t k = 0; k < level.size(); ++k)
            level[k] = static_cast<std::uint32_t>(k);
        f.levels.push_back(std::move(level));
    }
    return f;
}

SimplicialMap SimplicialMap::constant(const FiniteSimplicialSet& from)
{
    SimplicialMap f;
    for (std::size_t n = 0; n <= from.max_dim(); ++n)
        f.levels.emplace_back(from.count(n), 0);
    return f;
}

SimplicialMap SimplicialMap::then(const SimplicialMap& next) const
{
    SimplicialMap f = *this;
    for (std::size_t n = 0; n < f.levels.size(); ++n)
        for (auto& x : f.levels[n])
            x = next.levels.at(n).at(x);
    return f;
}

void validate_map(const FiniteSimplicialSet& from, const FiniteSimplicialSet& to, const SimplicialMap& f)
{
    const std::size_t top = std::min(from.max_dim(), to.max_dim());
    if (f.levels.size() < top + 1)
        fail(ErrorKind::Validation, "simplicial map is missing levels");
    for (std::size_t n = 0; n <= top; ++n) {
        if (f.levels[n].size() != from.count(n))
            fail(ErrorKind::Validation, "simplicial map level " + std::to_string(n) + " has the wrong size");
        for (auto y : f.levels[n])
            if (y >= to.count(n))
                fail(ErrorKind::Validation, "simplicial map leaves the target in dimension " + std::to_string(n));
        if (f(n, 0) != 0)
            fail(ErrorKind::Validation, "simplicial map is not pointed");
    }
    for (std::size_t n = 0; n <= top; ++n)
        for (std::size_t x = 0; x < from.count(n); ++x)
            for (std::size_t i = 0; i <= n; ++i) {
                if (n >= 1 && f(n - 1, from.face(n, i, x)) != to.face(n, i, f(n, x)))
                    fail(ErrorKind::Validation, "simplicial map does not commute with d_" + std::to_string(i));
                if (n < top && f(n + 1, from.degeneracy(n, i, x)) != to.degeneracy(n, i, f(n, x)))
                    fail(ErrorKind::Validation, "simplicial map does not commute with s_" + std::to_string(i));
            }
}

FiniteSimplicialSet point(std::size_t max_dim)
{
    return FiniteSimplicialSet::build(
        max_dim, [](std::size_t) { return std::vector<Key>{Key{}}; },
        [](std::size_t, std::size_t, const Key&) { return Key{}; },
        [](std::size_t, std::size_t, const Key&) { return Key{}; });
}

namespace {

// All n-tuples over 0..radix-1 in lexicographic order.
std::vector<Key> all_tuples(std::size_t radix, std::size_t n)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > FiniteSimplicialSet::kMaxSimplices / std::max<std::size_t>(radix, 1))
            fail(ErrorKind::BoundExceeded, "too many simplices in dimension " + std::to_string(n));
        total *= radix;
    }
    std::vector<Key> out;
    out.reserve(total);
    Key t(n, 0);
    for (std::size_t k = 0; k < total; ++k) {
        out.push_back(t);
        for (std::size_t i = n; i-- > 0;) {
            if (++t[i] < radix)
                break;
            t[i] = 0;
        }
    }
    return out;
}

std::size_t encode(const Key& t, std::size_t radix)
{
    std::size_t idx = 0;
    for (auto e : t)
        idx = idx * radix + e;
    return idx;
}

// Nerve of a one-object category whose morphisms are 0..order-1 under mul.
template <class Mul>
Key nerve_face(const Key& t, std::size_t i, Mul mul)
{
    const std::size_t n = t.size();
    Key out;
    if (i == 0)
        out.assign(t.begin() + 1, t.end());
    else if (i == n)
        out.assign(t.begin(), t.end() - 1);
    else {
        out.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
        out.push_back(static_cast<std::uint32_t>(mul(t[i - 1], t[i])));
        out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
    }
    return out;
}

Key nerve_degeneracy(const Key& t, std::size_t i)
{
    Key out = t;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), 0);
    return out;
}

}  // namespace

FiniteSimplicialSet classifying_space(const PermGroup& g, std::size_t max_dim)
{
    const std::size_t order = g.order();
    return FiniteSimplicialSet::build(
        max_dim, [order](std::size_t n) { return all_tuples(order, n); },
        [&g](std::size_t, std::size_t i, const Key& t) {
            return nerve_face(t, i, [&g](std::size_t a, std::size_t b) { return g.multiply(a, b); });
        },
        [](std::size_t, std::size_t i, const Key& t) { return nerve_degeneracy(t, i); });
}

SimplicialMap classifying_map(const GroupHom& f, std::size_t max_dim)
{
    const std::size_t src = f.source().order(), dst = f.target().order();
    SimplicialMap out;
    for (std::size_t n = 0; n <= max_dim; ++n) {
        std::vector<std::uint32_t> level;
        for (Key t : all_tuples(src, n)) {
            for (auto& e : t)
                e = static_cast<std::uint32_t>(f.apply_index(e));
            level.push_back(static_cast<std::uint32_t>(encode(t, dst)));
        }
        out.levels.push_back(std::move(level));
    }
    return out;
}

FiniteSimplicialSet nerve(const FreeCategory& cat, std::size_t max_dim)
{
    if (cat.object_count() == 0)
        fail(ErrorKind::InvalidArgument, "the nerve of an empty category has no base point");
    ChainIndex index(cat, max_dim, false);
    std::vector<std::size_t> base;
    for (std::size_t n = 0; n <= max_dim; ++n) {
        Chain b{std::vector<std::size_t>(n + 1, 0), std::vector<std::size_t>(n, cat.identity(0))};
        base.push_back(*index.find(b));
    }
    // Keys are chain indices, except that the base chain and chain 0 swap places.
    auto to_key = [&base](std::size_t n, std::size_t k) {
        const std::size_t key = k == base[n] ? 0 : k == 0 ? base[n] : k;
        return Key{static_cast<std::uint32_t>(key)};
    };
    auto chain_of = [&](std::size_t n, const Key& key) -> const Chain& {
        const std::size_t k = key[0] == 0 ? base[n] : key[0] == base[n] ? 0 : key[0];
        return index.chains(n)[k];
    };
    return FiniteSimplicialSet::build(
        max_dim,
        [&](std::size_t n) {
            std::vector<Key> keys;
            for (std::size_t k = 0; k < index.chains(n).size(); ++k)
                keys.push_back(Key{static_cast<std::uint32_t>(k)});
            return keys;
        },
        [&](std::size_t n, std::size_t i, const Key& key) {
            return to_key(n - 1, *index.find(cat.face(chain_of(n, key), i)));
        },
        [&](std::size_t n, std::size_t i, const Key& key) {
            return to_key(n + 1, *index.find(cat.degeneracy(chain_of(n, key), i)));
        });
}

FiniteSimplicialSet standard_simplex(std::size_t k, std::size_t max_dim)
{
    return FiniteSimplicialSet::build(
        max_dim,
        [k](std::size_t n) {
            std::vector<Key> out;
            for (Key t : all_tuples(k + 1, n + 1))
                if (std::is_sorted(t.begin(), t.end()))
                    out.push_back(std::move(t));
            return out;
        },
        [](std::size_t, std::size_t i, const Key& t) {
            Key out = t;
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
            return out;
        },
        [](std::size_t, std::size_t i, const Key& t) {
            Key out = t;
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), t[i]);
            return out;
        });
}

FiniteSimplicialSet quotient(const FiniteSimplicialSet& x, const std::vector<std::vector<bool>>& sub)
{
    const std::size_t top = x.max_dim();
    if (sub.size() < top + 1)
        fail(ErrorKind::InvalidArgument, "subcomplex needs membership in every dimension");
    for (std::size_t n = 0; n <= top; ++n) {
        if (sub[n].size() != x.count(n) || !sub[n][0])
            fail(ErrorKind::InvalidArgument, "subcomplex must contain the base simplex");
        for (std::size_t s = 0; s < x.count(n); ++s) {
            if (!sub[n][s])
                continue;
            for (std::size_t i = 0; i <= n; ++i)
                if ((n >= 1 && !sub[n - 1][x.face(n, i, s)]) || (n < top && !sub[n + 1][x.degeneracy(n, i, s)]))
                    fail(ErrorKind::InvalidArgument, "subcomplex is not closed under faces and degeneracies");
        }
    }
    auto key = [&sub](std::size_t n, std::size_t s) {
        return sub[n][s] ? Key{} : Key{static_cast<std::uint32_t>(s)};
    };
    return FiniteSimplicialSet::build(
        top,
        [&](std::size_t n) {
            std::vector<Key> out{Key{}};
            for (std::size_t s = 0; s < x.count(n); ++s)
                if (!sub[n][s])
                    out.push_back(Key{static_cast<std::uint32_t>(s)});
            return out;
        },
        [&](std::size_t n, std::size_t i, const Key& k) {
            return k.empty() ? Key{} : key(n - 1, x.face(n, i, k[0]));
        },
        [&](std::size_t n, std::size_t i, const Key& k) {
            return k.empty() ? Key{} : key(n + 1, x.degeneracy(n, i, k[0]));
        });
}

FiniteSimplicialSet circle(std::size_t max_dim)
{
    FiniteSimplicialSet interval = standard_simplex(1, max_dim);
    // The n-simplices of Δ[1] in order are 0^{n+1-t} 1^t for t = 0..n+1; the
    // boundary is t = 0 and t = n+1.
    std::vector<std::vector<bool>> boundary;
    for (std::size_t n = 0; n <= max_dim; ++n) {
        std::vector<bool> level(n + 2, false);
        level.front() = level.back() = true;
        boundary.push_back(std::move(level));
    }
    return quotient(interval, boundary);
}

FiniteSimplicialSet wedge(const std::vector<FiniteSimplicialSet>& parts)
{
    if (parts.empty())
        fail(ErrorKind::InvalidArgument, "wedge of no spaces");
    std::size_t top = parts.front().max_dim();
    for (const auto& p : parts)
        top = std::min(top, p.max_dim());
    auto wrap = [](std::size_t j, std::size_t s) {
        return s == 0 ? Key{} : Key{static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(s)};
    };
    return FiniteSimplicialSet::build(
        top,
        [&](std::size_t n) {
            std::vector<Key> out{Key{}};
            for (std::size_t j = 0; j < parts.size(); ++j)
                for (std::size_t s = 1; s < parts[j].count(n); ++s)
                    out.push_back(wrap(j, s));
            return out;
        },
        [&](std::size_t n, std::size_t i, const Key& k) {
            return k.empty() ? Key{} : wrap(k[0], parts[k[0]].face(n, i, k[1]));
        },
        [&](std::size_t n, std::size_t i, const Key& k) {
            return k.empty() ? Key{} : wrap(k[0], parts[k[0]].degeneracy(n, i, k[1]));
        });
}

FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y)
{
    const std::size_t top = std::min(x.max_dim(), y.max_dim());
    return FiniteSimplicialSet::build(
        top,
        [&](std::size_t n) {
            if (x.count(n) > FiniteSimplicialSet::kMaxSimplices / y.count(n))
                fail(ErrorKind::BoundExceeded, "product has too many simplices");
            std::vector<Key> out;
            for (std::size_t a = 0; a < x.count(n); ++a)
                for (std::size_t b = 0; b < y.count(n); ++b)
                    out.push_back(Key{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
            return out;
        },
        [&](std::size_t n, std::size_t i, const Key& k) {
            return Key{static_cast<std::uint32_t>(x.face(n, i, k[0])), static_cast<std::uint32_t>(y.face(n, i, k[1]))};
        },
        [&](std::size_t n, std::size_t i, const Key& k) {
            return Key{static_cast<std::uint32_t>(x.degeneracy(n, i, k[0])),
                       static_cast<std::uint32_t>(y.degeneracy(n, i, k[1]))};
        });
}

SimplicialDiagram::SimplicialDiagram(FreeCategory base, std::vector<FiniteSimplicialSet> objects,
                                     std::vector<SimplicialMap> arrows)
    : base_(std::move(base)), objects_(std::move(objects)), arrows_(std::move(arrows))
{
    const Graph& graph = base_.graph();
    if (objects_.size() != graph.vertex_count() || arrows_.size() != graph.arrow_count())
        fail(ErrorKind::Schema, "simplicial diagram needs one space per vertex and one map per arrow");
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        try {
            validate_map(objects_[arr.src], objects_[arr.dst], arrows_[a]);
        } catch (const Error& e) {
            fail(e.kind(), "arrow '" + arr.name + "': " + e.what());
        }
    }
}

std::size_t SimplicialDiagram::max_dim() const
{
    std::size_t top = objects_.empty() ? 0 : objects_.front().max_dim();
    for (const auto& x : objects_)
        top = std::min(top, x.max_dim());
    return top;
}

std::size_t SimplicialDiagram::apply(std::size_t morphism, std::size_t n, std::size_t x) const
{
    for (std::size_t a : base_.morphism(morphism).word)
        x = arrows_[a](n, x);
    return x;
}

namespace {

// Index of the n-simplex of circle j with the given number of leading zeros
// in a wedge of circles (each circle contributes n non-base simplices).
std::size_t wedge_circle_index(std::size_t n, std::size_t j, std::size_t zeros)
{
    return 1 + j * n + (n - zeros);
}

}  // namespace

SimplicialDiagram space_diagram(const GroupDiagram& d, std::size_t max_dim)
{
    const FreeCategory& base = d.base();
    std::vector<FiniteSimplicialSet> objects;
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        const DiagramGroup& g = d.object(v);
        if (const auto* p = std::get_if<PermGroup>(&g))
            objects.push_back(classifying_space(*p, max_dim));
        else if (generator_count(g) == 0)
            objects.push_back(point(max_dim));
        else
            objects.push_back(wedge(std::vector<FiniteSimplicialSet>(generator_count(g), circle(max_dim))));
    }
    std::vector<SimplicialMap> arrows;
    const Graph& graph = base.graph();
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        const DiagramArrow& map = d.arrow(a);
        const FiniteSimplicialSet& src = objects[arr.src];
        if (map.hom()) {
            arrows.push_back(classifying_map(*map.hom(), max_dim));
            continue;
        }
        if (std::holds_alternative<PermGroup>(d.object(arr.src)) || generator_count(d.object(arr.src)) == 0) {
            arrows.push_back(SimplicialMap::constant(src));
            continue;
        }
        SimplicialMap f = SimplicialMap::constant(src);
        const auto* target = std::get_if<PermGroup>(&d.object(arr.dst));
        for (std::size_t j = 0; j < map.images().size(); ++j) {
            const GroupElement& img = map.images()[j];
            std::size_t element = 0;    // finite target: image element index
            std::size_t circle_to = 0;  // free target: image circle + 1, or 0
            if (target) {
                element = target->index_of(std::get<Perm>(img));
            } else {
                const Word& w = std::get<Word>(img);
                if (w.size() > 1 || (w.size() == 1 && w[0] < 0))
                    fail(ErrorKind::PreconditionFailed, "arrow '" + arr.name +
                                                            "': free maps must send generators to generators or the "
                                                            "identity to be modelled on wedges of circles");
                circle_to = w.empty() ? 0 : static_cast<std::size_t>(w[0]);
            }
            for (std::size_t n = 1; n <= max_dim; ++n)
                for (std::size_t zeros = 1; zeros <= n; ++zeros) {
                    std::size_t y = 0;
                    if (target) {
                        // the loop 0 -> 1 goes to the element at position `zeros`
                        std::size_t weight = 1;
                        for (std::size_t k = zeros; k < n; ++k)
                            weight *= target->order();
                        y = element * weight;
                    } else if (circle_to != 0) {
                        y = wedge_circle_index(n, circle_to - 1, zeros);
                    }
                    f.levels[n][wedge_circle_index(n, j, zeros)] = static_cast<std::uint32_t>(y);
                }
        }
        arrows.push_back(std::move(f));
    }
    return SimplicialDiagram(base, std::move(objects), std::move(arrows));
}

FiniteSimplicialSet hocolim_pointed(const SimplicialDiagram& sd, std::size_t max_dim)
{
    if (max_dim > sd.max_dim())
        fail(ErrorKind::InvalidArgument, "diagram values are truncated below the requested dimension");
    const FreeCategory& cat = sd.base();
    ChainIndex index(cat, max_dim, false);
    auto wrap = [](std::size_t chain, std::size_t x) {
        return x == 0 ? Key{} : Key{static_cast<std::uint32_t>(chain), static_cast<std::uint32_t>(x)};
    };
    return FiniteSimplicialSet::build(
        max_dim,
        [&](std::size_t n) {
            std::vector<Key> out{Key{}};
            const auto& chains = index.chains(n);
            for (std::size_t k = 0; k < chains.size(); ++k)
                for (std::size_t x = 1; x < sd.object(chains[k].objects.front()).count(n); ++x)
                    out.push_back(wrap(k, x));
            return out;
        },
        [&](std::size_t n, std::size_t i, const Key& key) {
            if (key.empty())
                return Key{};
            const Chain& c = index.chains(n)[key[0]];
            const FiniteSimplicialSet& space = sd.object(c.objects.front());
            std::size_t x = space.face(n, i, key[1]);
            if (i == 0)
                x = sd.apply(c.morphisms.front(), n - 1, x);
            return wrap(*index.find(cat.face(c, i)), x);
        },
        [&](std::size_t n, std::size_t i, const Key& key) {
            if (key.empty())
                return Key{};
            const Chain& c = index.chains(n)[key[0]];
            return wrap(*index.find(cat.degeneracy(c, i)), sd.object(c.objects.front()).degeneracy(n, i, key[1]));
        });
}

SimplicialDiagram constant_diagram(const FreeCategory& cat, const FiniteSimplicialSet& y)
{
    std::vector<FiniteSimplicialSet> objects(cat.object_count(), y);
    std::vector<SimplicialMap> arrows(cat.graph().arrow_count(), SimplicialMap::identity(y));
    return SimplicialDiagram(cat, std::move(objects), std::move(arrows));
}

FiniteSimplicialSet constant_hocolim(const FreeCategory& cat, const FiniteSimplicialSet& y, std::size_t max_dim)
{
    if (y.max_dim() < max_dim)
        fail(ErrorKind::InvalidArgument, "space is truncated below the requested dimension");
    FiniteSimplicialSet bc = nerve(cat, max_dim);
    FiniteSimplicialSet p = product(bc, y);
    // (b, y) has index b * |Y_n| + y; B𝒞 x * is y = 0.
    std::vector<std::vector<bool>> sub;
    for (std::size_t n = 0; n <= p.max_dim(); ++n) {
        std::vector<bool> level(p.count(n));
        for (std::size_t s = 0; s < level.size(); ++s)
            level[s] = s % y.count(n) == 0;
        sub.push_back(std::move(level));
    }
    return quotient(p, sub);
}

FiniteSimplicialGroup FiniteSimplicialGroup::constant(const PermGroup& g, std::size_t max_dim)
{
    FiniteSimplicialGroup s;
    GroupHom id = GroupHom::identity(g);
    for (std::size_t n = 0; n <= max_dim; ++n) {
        s.levels.push_back(g);
        s.faces.emplace_back(n, id);
        if (n >= 1)
            s.faces.back().push_back(id);
        s.degeneracies.emplace_back(n + 1, id);
    }
    return s;
}

FiniteSimplicialSet diag_nerve(const FiniteSimplicialGroup& g, std::size_t max_dim)
{
    if (g.levels.size() < max_dim + 1)
        fail(ErrorKind::InvalidArgument, "simplicial group is truncated below the requested dimension");
    return FiniteSimplicialSet::build(
        max_dim, [&g](std::size_t n) { return all_tuples(g.levels[n].order(), n); },
        [&g](std::size_t n, std::size_t i, const Key& t) {
            Key moved = t;
            for (auto& e : moved)
                e = static_cast<std::uint32_t>(g.faces[n][i].apply_index(e));
            const PermGroup& lower = g.levels[n - 1];
            return nerve_face(moved, i, [&lower](std::size_t a, std::size_t b) { return lower.multiply(a, b); });
        },
        [&g](std::size_t n, std::size_t i, const Key& t) {
            Key moved = t;
            for (auto& e : moved)
                e = static_cast<std::uint32_t>(g.degeneracies[n][i].apply_index(e));
            return nerve_degeneracy(moved, i);
        });
}

FpAbelianGroup reduced_homology(const FiniteSimplicialSet& x, std::size_t k)
{
    if (k + 1 > x.max_dim())
        fail(ErrorKind::PreconditionFailed, "homology in degree " + std::to_string(k) +
                                                " needs simplices up to dimension " + std::to_string(k + 1));
    std::vector<std::vector<std::size_t>> basis;
    std::vector<std::vector<std::uint32_t>> position;
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= k + 1; ++n) {
        basis.push_back(x.nondegenerate(n));
        position.emplace_back(x.count(n), 0);
        for (std::size_t p = 0; p < basis[n].size(); ++p)
            position[n][basis[n][p]] = static_cast<std::uint32_t>(p);
        ranks.push_back(basis[n].size());
    }
    std::vector<SparseMatrix> boundaries;
    for (std::size_t n = 1; n <= k + 1; ++n) {
        SparseMatrix d(ranks[n - 1], ranks[n]);
        for (std::size_t col = 0; col < basis[n].size(); ++col)
            for (std::size_t i = 0; i <= n; ++i) {
                const std::size_t y = x.face(n, i, basis[n][col]);
                if (!x.is_degenerate(n - 1, y))
                    d.add(position[n - 1][y], col, i % 2 ? -1 : 1);
            }
        d.finalize();
        boundaries.push_back(std::move(d));
    }
    FpAbelianGroup h = FreeChainComplex(std::move(ranks), std::move(boundaries)).homology(k);
    if (k == 0)
        return FpAbelianGroup::from_invariants(h.torsion(), h.free_rank() - 1);
    return h;
}

}  // namespace dh
