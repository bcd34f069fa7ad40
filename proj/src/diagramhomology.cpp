#include "dh/diagramhomology.hpp"

#include "dh/error.hpp"
#include "dh/simplicial_identities.hpp"

#include <algorithm>

namespace dh {

namespace {

void place(IntMatrix& m, std::size_t row0, std::size_t col0, const IntMatrix& block, long sign)
{
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            if (sign > 0)
                m(row0 + r, col0 + c) += block(r, c);
            else
                m(row0 + r, col0 + c) -= block(r, c);
}

std::vector<std::vector<std::size_t>> summand_offsets(const AbelianDiagram& d, const ChainIndex& index)
{
    std::vector<std::vector<std::size_t>> offsets(index.max_dim() + 1);
    for (std::size_t n = 0; n <= index.max_dim(); ++n) {
        std::size_t at = 0;
        for (const Chain& x : index.chains(n)) {
            offsets[n].push_back(at);
            at += d.object(x.objects.front()).generator_count();
        }
    }
    return offsets;
}

ChainComplex assemble(const AbelianDiagram& d, const ChainIndex& index,
                      const std::vector<std::vector<std::size_t>>& offsets)
{
    const FreeCategory& cat = d.base();
    const std::size_t top = index.max_dim();
    std::vector<FpAbelianGroup> groups;
    for (std::size_t n = 0; n <= top; ++n) {
        std::vector<FpAbelianGroup> parts;
        for (const Chain& x : index.chains(n))
            parts.push_back(d.object(x.objects.front()));
        groups.push_back(FpAbelianGroup::direct_sum(parts));
    }
    std::vector<AbHom> differentials;
    for (std::size_t n = 1; n <= top; ++n) {
        IntMatrix m(groups[n - 1].generator_count(), groups[n].generator_count());
        const auto& chains = index.chains(n);
        for (std::size_t k = 0; k < chains.size(); ++k) {
            const Chain& x = chains[k];
            for (std::size_t i = 0; i <= n; ++i) {
                Chain y = cat.face(x, i);
                if (!cat.is_nondegenerate(y))
                    continue;
                const std::size_t j = *index.find(y);
                const long sign = i % 2 ? -1 : 1;
                if (i == 0)
                    place(m, offsets[n - 1][j], offsets[n][k], d.morphism_map(x.morphisms.front()).matrix(), sign);
                else
                    place(m, offsets[n - 1][j], offsets[n][k],
                          IntMatrix::identity(d.object(x.objects.front()).generator_count()), sign);
            }
        }
        differentials.push_back(AbHom::trusted(groups[n], groups[n - 1], std::move(m)));
    }
    return ChainComplex(std::move(groups), std::move(differentials));
}

}  // namespace

ReplacementComplex::ReplacementComplex(const AbelianDiagram& d, std::size_t top)
    : index_(d.base(), top, true), offsets_(summand_offsets(d, index_)), complex_(assemble(d, index_, offsets_))
{
}

AbHom ReplacementComplex::chain_map(const ReplacementComplex& from, const ReplacementComplex& to,
                                    const std::vector<AbHom>& components, std::size_t n)
{
    const auto& chains = from.chains().chains(n);
    if (chains.size() != to.chains().chains(n).size())
        fail(ErrorKind::InvalidArgument, "replacement complexes over different bases");
    const FpAbelianGroup& src = from.complex().group(n);
    const FpAbelianGroup& dst = to.complex().group(n);
    IntMatrix m(dst.generator_count(), src.generator_count());
    for (std::size_t k = 0; k < chains.size(); ++k)
        place(m, to.offset(n, k), from.offset(n, k), components.at(chains[k].objects.front()).matrix(), 1);
    return AbHom::trusted(src, dst, std::move(m));
}

FpAbelianGroup colim_ab(const AbelianDiagram& d)
{
    return flow_map(d).cokernel().target();
}

FpAbelianGroup colim_n(const AbelianDiagram& d, std::size_t n)
{
    return ReplacementComplex(d, n + 1).complex().homology(n);
}

AbHom flow_map(const AbelianDiagram& d)
{
    const Graph& graph = d.base().graph();
    std::vector<FpAbelianGroup> arrow_parts, vertex_parts;
    std::vector<std::size_t> arrow_offset, vertex_offset;
    std::size_t at = 0;
    for (const Arrow& a : graph.arrows()) {
        arrow_offset.push_back(at);
        arrow_parts.push_back(d.object(a.src));
        at += arrow_parts.back().generator_count();
    }
    at = 0;
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        vertex_offset.push_back(at);
        vertex_parts.push_back(d.object(v));
        at += vertex_parts.back().generator_count();
    }
    FpAbelianGroup src = FpAbelianGroup::direct_sum(arrow_parts);
    FpAbelianGroup dst = FpAbelianGroup::direct_sum(vertex_parts);
    IntMatrix m(dst.generator_count(), src.generator_count());
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        place(m, vertex_offset[arr.dst], arrow_offset[a], d.arrow(a).matrix(), 1);
        place(m, vertex_offset[arr.src], arrow_offset[a], IntMatrix::identity(d.object(arr.src).generator_count()), -1);
    }
    return AbHom::trusted(std::move(src), std::move(dst), std::move(m));
}

FpAbelianGroup flow_subgroup(const AbelianDiagram& d)
{
    if (d.base().is_poset())
        fail(ErrorKind::PreconditionFailed, "flows compute coLim_1 only over free categories");
    return flow_map(d).kernel().source();
}

bool is_flow(const AbelianDiagram& d, const Flow& f)
{
    const Graph& graph = d.base().graph();
    if (f.components.size() != graph.arrow_count())
        fail(ErrorKind::InvalidArgument, "a flow has one component per arrow");
    IntVector x;
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        if (f.components[a].size() != d.object(graph.arrow(a).src).generator_count())
            fail(ErrorKind::InvalidArgument, "flow component has the wrong length");
        x.insert(x.end(), f.components[a].begin(), f.components[a].end());
    }
    AbHom m = flow_map(d);
    return m.target().is_zero(m.apply(x));
}

std::vector<Flow> flow_generators(const AbelianDiagram& d)
{
    const Graph& graph = d.base().graph();
    AbHom k = flow_map(d).kernel();
    std::vector<Flow> out;
    for (std::size_t c = 0; c < k.matrix().cols(); ++c) {
        IntVector col = k.matrix().column(c);
        Flow f;
        std::size_t at = 0;
        for (const Arrow& a : graph.arrows()) {
            const std::size_t g = d.object(a.src).generator_count();
            f.components.emplace_back(col.begin() + static_cast<std::ptrdiff_t>(at),
                                      col.begin() + static_cast<std::ptrdiff_t>(at + g));
            at += g;
        }
        out.push_back(std::move(f));
    }
    return out;
}

FormalReplacement::FormalReplacement(GroupDiagram d, std::size_t max_dim)
    : diagram_(std::move(d)), index_(diagram_.base(), max_dim, false)
{
    bool finite = true;
    for (std::size_t v = 0; v < diagram_.object_count(); ++v)
        finite = finite && is_finite(diagram_.object(v));
    if (!finite)
        return;
    for (std::size_t n = 0; n <= max_dim; ++n) {
        std::vector<std::size_t> off;
        std::size_t at = 0;
        for (const Chain& x : index_.chains(n)) {
            off.push_back(at);
            at += element_count(diagram_.object(x.objects.front()));
        }
        off.push_back(at);
        offsets_.push_back(std::move(off));
    }
}

FormalReplacement::Generator FormalReplacement::face(std::size_t n, std::size_t i, const Generator& x) const
{
    if (n == 0 || i > n)
        fail(ErrorKind::InvalidArgument, "face index out of range");
    const FreeCategory& cat = diagram_.base();
    const Chain& c = index_.chains(n).at(x.chain);
    Generator out{*index_.find(cat.face(c, i)), x.element};
    if (i == 0)
        for (std::size_t a : cat.morphism(c.morphisms.front()).word)
            out.element = diagram_.apply_arrow(a, out.element);
    return out;
}

FormalReplacement::Generator FormalReplacement::degeneracy(std::size_t n, std::size_t i, const Generator& x) const
{
    if (n + 1 > max_dim() || i > n)
        fail(ErrorKind::InvalidArgument, "degeneracy index out of range");
    const Chain& c = index_.chains(n).at(x.chain);
    return Generator{*index_.find(diagram_.base().degeneracy(c, i)), x.element};
}

std::string FormalReplacement::name(std::size_t n, const Generator& x) const
{
    return diagram_.base().chain_name(index_.chains(n).at(x.chain)) + " | " + to_string(x.element);
}

std::size_t FormalReplacement::generator_count(std::size_t n) const
{
    if (offsets_.empty())
        fail(ErrorKind::PreconditionFailed, "generator enumeration needs a finite diagram");
    return offsets_.at(n).back();
}

FormalReplacement::Generator FormalReplacement::generator(std::size_t n, std::size_t k) const
{
    const auto& off = offsets_.at(n);
    if (k >= off.back())
        fail(ErrorKind::InvalidArgument, "generator index out of range");
    const std::size_t chain = static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), k) - off.begin()) - 1;
    const DiagramGroup& g = diagram_.object(index_.chains(n)[chain].objects.front());
    const std::size_t e = k - off[chain];
    if (const auto* p = std::get_if<PermGroup>(&g))
        return Generator{chain, p->elements()[e]};
    return Generator{chain, Word{}};
}

std::size_t FormalReplacement::index_of(std::size_t n, const Generator& x) const
{
    const DiagramGroup& g = diagram_.object(index_.chains(n).at(x.chain).objects.front());
    std::size_t e = 0;
    if (const auto* p = std::get_if<PermGroup>(&g))
        e = p->index_of(std::get<Perm>(x.element));
    return offsets_.at(n).at(x.chain) + e;
}

std::vector<std::string> FormalReplacement::identity_violations() const
{
    auto count = [&](std::size_t n) { return generator_count(n); };
    auto face = [&](std::size_t n, std::size_t i, std::size_t k) {
        return index_of(n - 1, this->face(n, i, generator(n, k)));
    };
    auto degen = [&](std::size_t n, std::size_t i, std::size_t k) {
        return index_of(n + 1, degeneracy(n, i, generator(n, k)));
    };
    return simplicial_identity_violations(max_dim(), count, face, degen);
}

namespace {

bool same_presentation(const FpAbelianGroup& x, const FpAbelianGroup& y)
{
    return x.generator_count() == y.generator_count() && x.relations() == y.relations();
}

// im f = ker g
bool exact_at(const AbHom& f, const AbHom& g)
{
    if (!f.then(g).is_zero())
        return false;
    return f.lift(g.kernel().matrix()).has_value();
}

}  // namespace

void validate(const ShortExactSequence& s)
{
    const std::size_t count = s.middle.object_count();
    if (s.kernel.object_count() != count || s.quotient.object_count() != count || s.inclusion.size() != count ||
        s.projection.size() != count)
        fail(ErrorKind::Validation, "short exact sequence components do not match the base");
    const Graph& graph = s.middle.base().graph();
    for (std::size_t v = 0; v < count; ++v) {
        const std::string where = "object '" + graph.vertex_name(v) + "': ";
        const AbHom& i = s.inclusion[v];
        const AbHom& p = s.projection[v];
        if (!same_presentation(i.source(), s.kernel.object(v)) || !same_presentation(i.target(), s.middle.object(v)) ||
            !same_presentation(p.source(), s.middle.object(v)) || !same_presentation(p.target(), s.quotient.object(v)))
            fail(ErrorKind::Endpoint, where + "component endpoints do not match the diagrams");
        if (!i.is_injective())
            fail(ErrorKind::Validation, where + "inclusion is not injective");
        if (!p.is_surjective())
            fail(ErrorKind::Validation, where + "projection is not surjective");
        if (!exact_at(i, p))
            fail(ErrorKind::Validation, where + "not exact in the middle");
    }
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        if (!s.kernel.arrow(a).then(s.inclusion[arr.dst]).equals(s.inclusion[arr.src].then(s.middle.arrow(a))) ||
            !s.middle.arrow(a).then(s.projection[arr.dst]).equals(s.projection[arr.src].then(s.quotient.arrow(a))))
            fail(ErrorKind::Validation, "arrow '" + arr.name + "': components are not natural");
    }
}

bool LongExactSequence::exact() const
{
    for (std::size_t j = 1; j < nodes.size(); ++j)
        if (!nodes[j].exact)
            return false;
    return true;
}

LongExactSequence les_check(const ShortExactSequence& s, std::size_t max_n)
{
    validate(s);
    const std::size_t top = max_n + 1;
    ReplacementComplex rk(s.kernel, top + 1), ra(s.middle, top + 1), rq(s.quotient, top + 1);

    std::vector<ChainComplex::Homology> hk, ha, hq;
    std::vector<AbHom> chain_i, chain_p;
    for (std::size_t n = 0; n <= top; ++n) {
        hk.push_back(rk.complex().homology_data(n));
        ha.push_back(ra.complex().homology_data(n));
        hq.push_back(rq.complex().homology_data(n));
        chain_i.push_back(ReplacementComplex::chain_map(rk, ra, s.inclusion, n));
        chain_p.push_back(ReplacementComplex::chain_map(ra, rq, s.projection, n));
    }

    auto connecting = [&](std::size_t n) {
        auto lifted = chain_p[n].lift(hq[n].representatives);
        if (!lifted)
            fail(ErrorKind::Validation, "chain-level projection is not surjective");
        IntMatrix boundary = ra.complex().differential(n).matrix() * *lifted;
        auto pulled = chain_i[n - 1].lift(boundary);
        if (!pulled)
            fail(ErrorKind::Validation, "boundary of a lifted cycle is not in the kernel");
        return AbHom(hq[n].group, hk[n - 1].group, hk[n - 1].classify(*pulled));
    };

    LongExactSequence les;
    auto label = [](std::size_t n, const char* which) {
        return "coLim_" + std::to_string(n) + " " + which;
    };
    les.nodes.push_back({label(top, "Q"), hq[top].group, false});
    for (std::size_t n = top; n-- > 0;) {
        les.maps.push_back(connecting(n + 1));
        les.nodes.push_back({label(n, "K"), hk[n].group, false});
        les.maps.push_back(induced_on_homology(hk[n], ha[n], chain_i[n]));
        les.nodes.push_back({label(n, "A"), ha[n].group, false});
        les.maps.push_back(induced_on_homology(ha[n], hq[n], chain_p[n]));
        les.nodes.push_back({label(n, "Q"), hq[n].group, false});
    }
    for (std::size_t j = 1; j < les.nodes.size(); ++j) {
        const AbHom& in = les.maps[j - 1];
        AbHom out = j < les.maps.size() ? les.maps[j] : AbHom::zero(les.nodes[j].group, FpAbelianGroup());
        les.nodes[j].exact = exact_at(in, out);
    }
    return les;
}

}  // namespace dh
