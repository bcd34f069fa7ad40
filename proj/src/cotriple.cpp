#include "dh/cotriple.hpp"

#include "dh/error.hpp"

namespace dh {

namespace {

void place(IntMatrix& m, std::size_t row0, std::size_t col0, const IntMatrix& block)
{
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            m(row0 + r, col0 + c) = block(r, c);
}

void place_identity(IntMatrix& m, std::size_t row0, std::size_t col0, std::size_t size)
{
    for (std::size_t k = 0; k < size; ++k)
        m(row0 + k, col0 + k) = 1;
}

// Simplicial identities for a family of homomorphisms.
template <class Face, class Degeneracy>
void check_identities(std::size_t top, Face face, Degeneracy degen, const std::string& where,
                      std::vector<std::string>& out)
{
    auto report = [&](const std::string& what, std::size_t n, std::size_t i, std::size_t j) {
        if (out.size() < 20)
            out.push_back(where + what + " fails at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j));
    };
    for (std::size_t n = 2; n <= top; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (!face(n, j).then(face(n - 1, i)).equals(face(n, i).then(face(n - 1, j - 1))))
                    report("d_i d_j = d_{j-1} d_i", n, i, j);
    for (std::size_t n = 0; n + 2 <= top; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= j; ++i)
                if (!degen(n, j).then(degen(n + 1, i)).equals(degen(n, i).then(degen(n + 1, j + 1))))
                    report("s_i s_j = s_{j+1} s_i", n, i, j);
    for (std::size_t n = 0; n + 1 <= top; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i) {
                AbHom lhs = degen(n, j).then(face(n + 1, i));
                bool ok;
                if (i == j || i == j + 1)
                    ok = lhs.equals(AbHom::identity(lhs.source()));
                else if (i < j)
                    ok = lhs.equals(face(n, i).then(degen(n - 1, j - 1)));
                else
                    ok = lhs.equals(face(n, i - 1).then(degen(n - 1, j)));
                if (!ok)
                    report("d_i s_j", n, i, j);
            }
}

// Sum of the given maps out of a direct sum of their sources.
AbHom codiagonal(const std::vector<AbHom>& maps, const FpAbelianGroup& target)
{
    std::vector<FpAbelianGroup> sources;
    IntMatrix m(target.generator_count(), 0);
    for (const auto& f : maps) {
        sources.push_back(f.source());
        m = IntMatrix::hconcat(m, f.matrix());
    }
    return AbHom::trusted(FpAbelianGroup::direct_sum(sources), target, std::move(m));
}

// The map g with p_from.then(g) = d.then(p_to), for p_from surjective.
AbHom induced_on_quotients(const AbHom& p_from, const AbHom& p_to, const AbHom& d)
{
    auto section = p_from.lift(IntMatrix::identity(p_from.target().generator_count()));
    if (!section)
        fail(ErrorKind::InvalidArgument, "projection is not surjective");
    return AbHom(p_from.target(), p_to.target(), d.then(p_to).matrix() * *section);
}

AbHom inverse(const AbHom& f)
{
    auto x = f.lift(IntMatrix::identity(f.target().generator_count()));
    if (!x)
        fail(ErrorKind::InvalidArgument, "map is not invertible");
    return AbHom(f.target(), f.source(), *x);
}

struct ColimData {
    SimplicialAbelianGroup group;
    std::vector<AbHom> projections;  // direct sum over objects of T_n -> colim T_n
};

ColimData colim_data(const CotripleResolution& r)
{
    ColimData out;
    const std::size_t objects = r.diagram().object_count();
    for (std::size_t n = 0; n <= r.top(); ++n) {
        out.projections.push_back(flow_map(r.level_diagram(n)).cokernel());
        out.group.levels.push_back(out.projections.back().target());
    }
    auto total = [&](auto map_at) {
        std::vector<AbHom> parts;
        for (std::size_t c = 0; c < objects; ++c)
            parts.push_back(map_at(c));
        return AbHom::direct_sum(parts);
    };
    out.group.faces.resize(r.top() + 1);
    out.group.degeneracies.resize(r.top());
    for (std::size_t n = 0; n <= r.top(); ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            if (n >= 1) {
                AbHom d = total([&](std::size_t c) { return r.face(n, i, c); });
                out.group.faces[n].push_back(induced_on_quotients(out.projections[n], out.projections[n - 1], d));
            }
            if (n < r.top()) {
                AbHom s = total([&](std::size_t c) { return r.degeneracy(n, i, c); });
                out.group.degeneracies[n].push_back(
                    induced_on_quotients(out.projections[n], out.projections[n + 1], s));
            }
        }
    return out;
}

}  // namespace

SimplicialAbelianGroup SimplicialAbelianGroup::constant(const FpAbelianGroup& g, std::size_t top)
{
    SimplicialAbelianGroup s;
    AbHom id = AbHom::identity(g);
    for (std::size_t n = 0; n <= top; ++n) {
        s.levels.push_back(g);
        s.faces.emplace_back(n == 0 ? 0 : n + 1, id);
        if (n < top)
            s.degeneracies.emplace_back(n + 1, id);
    }
    return s;
}

std::vector<std::string> SimplicialAbelianGroup::identity_violations() const
{
    std::vector<std::string> out;
    check_identities(
        top(), [this](std::size_t n, std::size_t i) -> const AbHom& { return faces.at(n).at(i); },
        [this](std::size_t n, std::size_t i) -> const AbHom& { return degeneracies.at(n).at(i); }, "", out);
    return out;
}

bool SimplicialAbelianGroup::generated_by_degeneracies(std::size_t n) const
{
    if (n == 0)
        return levels.at(0).is_trivial();
    return codiagonal(degeneracies.at(n - 1), levels.at(n)).is_surjective();
}

SimplicialAbelianGroup replacement_group(const AbelianDiagram& d, std::size_t top)
{
    const FreeCategory& cat = d.base();
    ChainIndex index(cat, top, false);
    SimplicialAbelianGroup s;
    std::vector<std::vector<std::size_t>> offsets(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        std::vector<FpAbelianGroup> parts;
        std::size_t at = 0;
        for (const Chain& c : index.chains(n)) {
            offsets[n].push_back(at);
            parts.push_back(d.object(c.objects.front()));
            at += parts.back().generator_count();
        }
        s.levels.push_back(FpAbelianGroup::direct_sum(parts));
    }
    s.faces.resize(top + 1);
    s.degeneracies.resize(top);
    for (std::size_t n = 0; n <= top; ++n) {
        const auto& chains = index.chains(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (n >= 1) {
                IntMatrix m(s.levels[n - 1].generator_count(), s.levels[n].generator_count());
                for (std::size_t k = 0; k < chains.size(); ++k) {
                    const std::size_t j = *index.find(cat.face(chains[k], i));
                    if (i == 0)
                        place(m, offsets[n - 1][j], offsets[n][k], d.morphism_map(chains[k].morphisms.front()).matrix());
                    else
                        place_identity(m, offsets[n - 1][j], offsets[n][k],
                                       d.object(chains[k].objects.front()).generator_count());
                }
                s.faces[n].push_back(AbHom::trusted(s.levels[n], s.levels[n - 1], std::move(m)));
            }
            if (n < top) {
                IntMatrix m(s.levels[n + 1].generator_count(), s.levels[n].generator_count());
                for (std::size_t k = 0; k < chains.size(); ++k)
                    place_identity(m, offsets[n + 1][*index.find(cat.degeneracy(chains[k], i))], offsets[n][k],
                                   d.object(chains[k].objects.front()).generator_count());
                s.degeneracies[n].push_back(AbHom::trusted(s.levels[n], s.levels[n + 1], std::move(m)));
            }
        }
    }
    return s;
}

MooreComplex moore_complex(const SimplicialAbelianGroup& s)
{
    std::vector<AbHom> inclusions{AbHom::identity(s.levels.at(0))};
    std::vector<FpAbelianGroup> groups{s.levels[0]};
    std::vector<AbHom> differentials;
    for (std::size_t n = 1; n <= s.top(); ++n) {
        std::vector<AbHom> upper(s.faces[n].begin() + 1, s.faces[n].end());
        inclusions.push_back(AbHom::stack(upper).kernel());
        groups.push_back(inclusions.back().source());
        AbHom d0 = inclusions[n].then(s.faces[n][0]);
        auto x = inclusions[n - 1].lift(d0.matrix());
        if (!x)
            fail(ErrorKind::Validation, "d_0 leaves the Moore complex in degree " + std::to_string(n - 1));
        differentials.emplace_back(groups[n], groups[n - 1], *x);
    }
    return MooreComplex{std::move(inclusions), ChainComplex(std::move(groups), std::move(differentials))};
}

FpAbelianGroup moore_homotopy(const SimplicialAbelianGroup& s, std::size_t n)
{
    if (n >= s.top())
        fail(ErrorKind::PreconditionFailed, "pi_" + std::to_string(n) + " needs levels up to " + std::to_string(n + 1));
    return moore_complex(s).complex.homology(n);
}

FpAbelianGroup alternating_homology(const SimplicialAbelianGroup& s, std::size_t n)
{
    if (n >= s.top())
        fail(ErrorKind::PreconditionFailed, "H_" + std::to_string(n) + " needs levels up to " + std::to_string(n + 1));
    std::vector<AbHom> differentials;
    for (std::size_t k = 1; k <= n + 1; ++k) {
        AbHom d = s.faces[k][0];
        for (std::size_t i = 1; i <= k; ++i)
            d = i % 2 ? d - s.faces[k][i] : d + s.faces[k][i];
        differentials.push_back(std::move(d));
    }
    std::vector<FpAbelianGroup> groups(s.levels.begin(), s.levels.begin() + static_cast<std::ptrdiff_t>(n + 2));
    return ChainComplex(std::move(groups), std::move(differentials)).homology(n);
}

FpAbelianGroup degenerate_generation_formula(const SimplicialAbelianGroup& s, std::size_t m)
{
    if (m + 1 > s.top())
        fail(ErrorKind::PreconditionFailed, "level " + std::to_string(m + 1) + " is beyond the truncation");
    if (!s.generated_by_degeneracies(m + 1))
        fail(ErrorKind::PreconditionFailed,
             "level " + std::to_string(m + 1) + " is not generated by degenerate simplices");
    if (m == 0)
        return s.levels[0];
    return AbHom::stack(s.faces[m]).kernel().source();
}

Perm RegularRepresentation::perm_of(const IntVector& x) const
{
    Perm p(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) {
        IntVector y = elements[k];
        for (std::size_t j = 0; j < y.size(); ++j)
            y[j] += x[j];
        p[k] = static_cast<std::uint32_t>(group.element_index(y));
    }
    return p;
}

RegularRepresentation regular_representation(const FpAbelianGroup& g)
{
    if (!g.is_finite())
        fail(ErrorKind::InvalidArgument, "regular representation of an infinite group");
    RegularRepresentation r{g, PermGroup::trivial(1), g.elements()};
    std::vector<Perm> gens;
    for (std::size_t j = 0; j < g.generator_count(); ++j) {
        IntVector e(g.generator_count(), 0);
        e[j] = 1;
        gens.push_back(r.perm_of(e));
    }
    r.perms = PermGroup(r.elements.size(), std::move(gens));
    return r;
}

GroupHom regular_map(const AbHom& f, const RegularRepresentation& source, const RegularRepresentation& target)
{
    std::vector<Perm> images;
    for (std::size_t j = 0; j < f.source().generator_count(); ++j) {
        IntVector e(f.source().generator_count(), 0);
        e[j] = 1;
        images.push_back(target.perm_of(f.apply(e)));
    }
    return GroupHom(source.perms, target.perms, std::move(images));
}

FiniteSimplicialGroup to_simplicial_group(const SimplicialAbelianGroup& s)
{
    std::vector<RegularRepresentation> reps;
    FiniteSimplicialGroup g;
    for (const auto& level : s.levels) {
        reps.push_back(regular_representation(level));
        g.levels.push_back(reps.back().perms);
    }
    g.faces.resize(s.top() + 1);
    g.degeneracies.resize(s.top() + 1);
    for (std::size_t n = 0; n <= s.top(); ++n) {
        for (std::size_t i = 0; i < s.faces[n].size(); ++i)
            g.faces[n].push_back(regular_map(s.faces[n][i], reps[n], reps[n - 1]));
        for (std::size_t i = 0; n < s.top() && i < s.degeneracies[n].size(); ++i)
            g.degeneracies[n].push_back(regular_map(s.degeneracies[n][i], reps[n], reps[n + 1]));
    }
    return g;
}

CotripleResolution::CotripleResolution(AbelianDiagram a, std::size_t top) : diagram_(std::move(a)), top_(top)
{
    const FreeCategory& cat = diagram_.base();
    const std::size_t objects = cat.object_count();
    levels_.resize(top + 1, std::vector<Level>(objects));
    for (std::size_t c = 0; c < objects; ++c)
        for (std::size_t f : cat.morphisms_into(c))
            levels_[0][c].tuples.push_back(Tuple{c, {f}});
    for (std::size_t n = 1; n <= top; ++n)
        for (std::size_t c = 0; c < objects; ++c)
            for (const Tuple& t : levels_[n - 1][c].tuples)
                for (std::size_t f : cat.morphisms_into(cat.morphism(t.morphisms.back()).src)) {
                    Tuple longer = t;
                    longer.morphisms.push_back(f);
                    levels_[n][c].tuples.push_back(std::move(longer));
                }
    for (auto& row : levels_)
        for (Level& level : row) {
            std::vector<FpAbelianGroup> parts;
            std::size_t at = 0;
            for (std::size_t k = 0; k < level.tuples.size(); ++k) {
                level.lookup.emplace(level.tuples[k].morphisms, k);
                level.offsets.push_back(at);
                parts.push_back(diagram_.object(cat.morphism(level.tuples[k].morphisms.back()).src));
                at += parts.back().generator_count();
            }
            level.group = FpAbelianGroup::direct_sum(parts);
        }

    faces_.resize(top + 1);
    degeneracies_.resize(top + 1);
    for (std::size_t n = 0; n <= top; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            if (n >= 1) {
                faces_[n].emplace_back();
                for (std::size_t c = 0; c < objects; ++c)
                    faces_[n][i].push_back(block_map(n, c, n - 1, c, [&](const Tuple& t) {
                        Tuple out{t.target, {}};
                        const AbHom* block = nullptr;
                        if (i < n) {
                            out.morphisms = t.morphisms;
                            out.morphisms[i] = cat.compose(t.morphisms[i + 1], t.morphisms[i]);
                            out.morphisms.erase(out.morphisms.begin() + static_cast<std::ptrdiff_t>(i + 1));
                        } else {
                            out.morphisms.assign(t.morphisms.begin(), t.morphisms.end() - 1);
                            block = &diagram_.morphism_map(t.morphisms.back());
                        }
                        return std::make_pair(out, block);
                    }));
            }
            if (n < top) {
                degeneracies_[n].emplace_back();
                for (std::size_t c = 0; c < objects; ++c)
                    degeneracies_[n][i].push_back(block_map(n, c, n + 1, c, [&](const Tuple& t) {
                        Tuple out = t;
                        const std::size_t at = cat.identity(cat.morphism(t.morphisms[i]).src);
                        out.morphisms.insert(out.morphisms.begin() + static_cast<std::ptrdiff_t>(i + 1), at);
                        return std::make_pair(out, static_cast<const AbHom*>(nullptr));
                    }));
            }
        }

    for (std::size_t c = 0; c < objects; ++c) {
        const Level& level = levels_[0][c];
        IntMatrix m(diagram_.object(c).generator_count(), level.group.generator_count());
        for (std::size_t k = 0; k < level.tuples.size(); ++k)
            place(m, 0, level.offsets[k], diagram_.morphism_map(level.tuples[k].morphisms.front()).matrix());
        augmentation_.push_back(AbHom::trusted(level.group, diagram_.object(c), std::move(m)));
    }
}

std::size_t CotripleResolution::find(std::size_t n, const Tuple& t) const
{
    const Level& level = levels_.at(n).at(t.target);
    auto it = level.lookup.find(t.morphisms);
    if (it == level.lookup.end())
        fail(ErrorKind::InvalidArgument, "tuple is not in the resolution");
    return it->second;
}

AbHom CotripleResolution::block_map(std::size_t from_n, std::size_t c_from, std::size_t to_n, std::size_t c_to,
                                    const std::function<std::pair<Tuple, const AbHom*>(const Tuple&)>& rule) const
{
    const Level& src = levels_[from_n][c_from];
    const Level& dst = levels_[to_n][c_to];
    IntMatrix m(dst.group.generator_count(), src.group.generator_count());
    for (std::size_t k = 0; k < src.tuples.size(); ++k) {
        auto [t, block] = rule(src.tuples[k]);
        const std::size_t row = dst.offsets[find(to_n, t)];
        if (block)
            place(m, row, src.offsets[k], block->matrix());
        else
            place_identity(m, row, src.offsets[k],
                           diagram_.object(diagram_.base().morphism(src.tuples[k].morphisms.back()).src)
                               .generator_count());
    }
    return AbHom::trusted(src.group, dst.group, std::move(m));
}

AbHom CotripleResolution::functor_map(std::size_t n, std::size_t morphism) const
{
    const FreeCategory& cat = diagram_.base();
    const Morphism& beta = cat.morphism(morphism);
    return block_map(n, beta.src, n, beta.dst, [&](const Tuple& t) {
        Tuple out = t;
        out.target = beta.dst;
        out.morphisms.front() = cat.compose(t.morphisms.front(), morphism);
        return std::make_pair(out, static_cast<const AbHom*>(nullptr));
    });
}

AbelianDiagram CotripleResolution::level_diagram(std::size_t n) const
{
    const FreeCategory& cat = diagram_.base();
    std::vector<FpAbelianGroup> objects;
    for (std::size_t c = 0; c < cat.object_count(); ++c)
        objects.push_back(level(n, c));
    std::vector<AbHom> arrows;
    for (std::size_t a = 0; a < cat.graph().arrow_count(); ++a)
        arrows.push_back(functor_map(n, cat.arrow_morphism(a)));
    return AbelianDiagram(cat, std::move(objects), std::move(arrows));
}

std::vector<std::string> CotripleResolution::violations() const
{
    std::vector<std::string> out;
    const FreeCategory& cat = diagram_.base();
    for (std::size_t c = 0; c < cat.object_count(); ++c) {
        check_identities(
            top_, [&](std::size_t n, std::size_t i) -> const AbHom& { return face(n, i, c); },
            [&](std::size_t n, std::size_t i) -> const AbHom& { return degeneracy(n, i, c); },
            "object " + cat.object_name(c) + ": ", out);
        if (top_ >= 1 && !face(1, 0, c).then(augmentation(c)).equals(face(1, 1, c).then(augmentation(c))))
            out.push_back("object " + cat.object_name(c) + ": augmentation does not coequalize d_0, d_1");
    }
    for (std::size_t a = 0; a < cat.graph().arrow_count(); ++a) {
        const std::size_t beta = cat.arrow_morphism(a);
        const Arrow& arr = cat.graph().arrow(a);
        const std::string where = "arrow '" + arr.name + "': ";
        if (!augmentation(arr.src).then(diagram_.arrow(a)).equals(functor_map(0, beta).then(augmentation(arr.dst))))
            out.push_back(where + "augmentation is not natural");
        for (std::size_t n = 0; n <= top_; ++n)
            for (std::size_t i = 0; i <= n; ++i) {
                if (n >= 1 && !face(n, i, arr.src)
                                   .then(functor_map(n - 1, beta))
                                   .equals(functor_map(n, beta).then(face(n, i, arr.dst))))
                    out.push_back(where + "d_" + std::to_string(i) + " is not natural in degree " + std::to_string(n));
                if (n < top_ && !degeneracy(n, i, arr.src)
                                     .then(functor_map(n + 1, beta))
                                     .equals(functor_map(n, beta).then(degeneracy(n, i, arr.dst))))
                    out.push_back(where + "s_" + std::to_string(i) + " is not natural in degree " + std::to_string(n));
            }
    }
    return out;
}

SimplicialAbelianGroup colim_resolution(const CotripleResolution& r) { return colim_data(r).group; }

Main1Report verify_main1(const AbelianDiagram& input, std::size_t top)
{
    AbelianDiagram a = input.normalized();
    const FreeCategory& cat = a.base();
    const std::size_t objects = cat.object_count();
    CotripleResolution r(a, top);
    ColimData colim = colim_data(r);
    SimplicialAbelianGroup rep = replacement_group(a, top);
    ChainIndex index(cat, top, false);

    Main1Report report;
    report.top = top;
    std::vector<AbHom> phi;  // colim T_n -> replacement level n
    for (std::size_t n = 0; n <= top; ++n) {
        // Q_n: summands A(c_n) over tuples c_0 <- c_1 <- ... <- c_n, grouped by c_0.
        struct Summand {
            std::size_t c0;
            std::vector<std::size_t> morphisms;  // alpha_1..alpha_n
            std::size_t object;                  // c_n
        };
        std::vector<Summand> summands;
        for (std::size_t c = 0; c < objects; ++c) {
            if (n == 0) {
                summands.push_back({c, {}, c});
                continue;
            }
            for (const auto& t : r.tuples(n - 1, c))
                summands.push_back({c, t.morphisms, cat.morphism(t.morphisms.back()).src});
        }
        std::vector<FpAbelianGroup> parts;
        for (const auto& s : summands)
            parts.push_back(a.object(s.object));
        FpAbelianGroup q = FpAbelianGroup::direct_sum(parts);

        std::vector<std::size_t> level_offsets{0};
        for (std::size_t c = 0; c < objects; ++c)
            level_offsets.push_back(level_offsets.back() + r.level(n, c).generator_count());
        IntMatrix into_sum(level_offsets.back(), q.generator_count());
        IntMatrix reindex(rep.levels[n].generator_count(), q.generator_count());
        std::vector<std::size_t> rep_offsets{0};
        for (const Chain& ch : index.chains(n))
            rep_offsets.push_back(rep_offsets.back() + a.object(ch.objects.front()).generator_count());
        std::size_t col = 0;
        for (const auto& s : summands) {
            const std::size_t size = a.object(s.object).generator_count();
            CotripleResolution::Tuple t{s.c0, {cat.identity(s.c0)}};
            t.morphisms.insert(t.morphisms.end(), s.morphisms.begin(), s.morphisms.end());
            place_identity(into_sum, level_offsets[s.c0] + r.offset(n, s.c0, r.find(n, t)), col, size);

            Chain ch;
            ch.objects.push_back(s.object);
            for (std::size_t k = s.morphisms.size(); k-- > 0;) {
                ch.morphisms.push_back(s.morphisms[k]);
                ch.objects.push_back(cat.morphism(s.morphisms[k]).dst);
            }
            auto j = index.find(ch);
            if (!j) {
                report.levels_isomorphic = false;
                report.problems.push_back("reversed tuple " + cat.chain_name(ch) + " is not a chain");
                return report;
            }
            place_identity(reindex, rep_offsets[*j], col, size);
            col += size;
        }
        if (summands.size() != index.chains(n).size()) {
            report.levels_isomorphic = false;
            report.problems.push_back("level " + std::to_string(n) + " has " + std::to_string(summands.size()) +
                                      " reversed tuples but " + std::to_string(index.chains(n).size()) + " chains");
            return report;
        }
        std::vector<FpAbelianGroup> level_parts;
        for (std::size_t c = 0; c < objects; ++c)
            level_parts.push_back(r.level(n, c));
        AbHom kappa = AbHom::trusted(q, FpAbelianGroup::direct_sum(level_parts), std::move(into_sum))
                          .then(colim.projections[n]);
        AbHom rho = AbHom::trusted(q, rep.levels[n], std::move(reindex));
        if (!kappa.is_isomorphism() || !rho.is_isomorphism()) {
            report.levels_isomorphic = false;
            report.problems.push_back("level " + std::to_string(n) + " is not matched by reversing tuples");
            return report;
        }
        phi.push_back(inverse(kappa).then(rho));
    }

    for (std::size_t n = 0; n <= top; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            if (n >= 1 && !colim.group.faces[n][i].then(phi[n - 1]).equals(phi[n].then(rep.faces[n][n - i]))) {
                report.faces_commute = false;
                report.problems.push_back("d_" + std::to_string(i) + " does not match d'_" + std::to_string(n - i) +
                                          " in degree " + std::to_string(n));
            }
            if (n < top &&
                !colim.group.degeneracies[n][i].then(phi[n + 1]).equals(phi[n].then(rep.degeneracies[n][n - i]))) {
                report.degeneracies_commute = false;
                report.problems.push_back("s_" + std::to_string(i) + " does not match s'_" + std::to_string(n - i) +
                                          " in degree " + std::to_string(n));
            }
        }

    for (std::size_t n = 0; n < top; ++n) {
        report.cotriple_homology.push_back(alternating_homology(colim.group, n));
        report.replacement_homology.push_back(colim_n(a, n));
        if (!(report.cotriple_homology.back() == report.replacement_homology.back())) {
            report.homology_equal = false;
            report.problems.push_back("homology differs in degree " + std::to_string(n));
        }
    }
    return report;
}

}  // namespace dh
