#include "dh/grouphomology.hpp"

#include "dh/error.hpp"

namespace dh {

std::size_t SymbolicGroup::free_rank() const
{
    switch (kind) {
    case Kind::Trivial: return 0;
    case Kind::InfiniteCyclic: return 1;
    case Kind::Free: return parameter;
    case Kind::Cyclic: break;
    }
    fail(ErrorKind::InvalidArgument, "a finite cyclic group is not free");
}

std::string SymbolicGroup::describe() const
{
    switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Cyclic: return "cyclic " + std::to_string(parameter);
    case Kind::InfiniteCyclic: return "infinite cyclic";
    case Kind::Free: return "free of rank " + std::to_string(parameter);
    }
    return "?";
}

FpAbelianGroup closed_form_homology(const SymbolicGroup& g, std::size_t n)
{
    if (n == 0)
        return FpAbelianGroup(1);
    switch (g.kind) {
    case SymbolicGroup::Kind::Trivial:
        return FpAbelianGroup();
    case SymbolicGroup::Kind::Cyclic:
        if (g.parameter == 0)
            fail(ErrorKind::InvalidArgument, "cyclic group of order 0");
        return n % 2 == 1 ? FpAbelianGroup::cyclic(g.parameter) : FpAbelianGroup();
    case SymbolicGroup::Kind::InfiniteCyclic:
    case SymbolicGroup::Kind::Free:
        return n == 1 ? FpAbelianGroup(g.free_rank()) : FpAbelianGroup();
    }
    return FpAbelianGroup();
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t bound)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > bound / base)
            fail(ErrorKind::BoundExceeded, "bar complex basis exceeds the bound " + std::to_string(bound));
        r *= base;
    }
    if (r > bound)
        fail(ErrorKind::BoundExceeded, "bar complex basis exceeds the bound " + std::to_string(bound));
    return r;
}

FreeChainComplex build_bar(const PermGroup& g, std::size_t top, std::size_t bound)
{
    const std::size_t b = g.order() - 1;
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= top; ++n)
        ranks.push_back(checked_power(b, n, bound));

    auto encode = [b](const std::vector<std::size_t>& t) {
        std::size_t idx = 0;
        for (auto e : t)
            idx = idx * b + (e - 1);
        return idx;
    };

    std::vector<SparseMatrix> boundaries;
    std::vector<std::size_t> t, face;
    for (std::size_t n = 1; n <= top; ++n) {
        SparseMatrix d(ranks[n - 1], ranks[n]);
        t.assign(n, 0);
        for (std::size_t col = 0; col < ranks[n]; ++col) {
            std::size_t rest = col;
            for (std::size_t k = n; k-- > 0;) {
                t[k] = rest % b + 1;
                rest /= b;
            }
            // [g2..gn]
            face.assign(t.begin() + 1, t.end());
            d.add(encode(face), col, 1);
            // (-1)^i [.. g_i g_{i+1} ..]
            for (std::size_t i = 1; i < n; ++i) {
                const std::size_t prod = g.multiply(t[i - 1], t[i]);
                if (prod == 0)
                    continue;
                face.clear();
                face.insert(face.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
                face.push_back(prod);
                face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
                d.add(encode(face), col, i % 2 ? -1 : 1);
            }
            // (-1)^n [g1..g_{n-1}]
            face.assign(t.begin(), t.end() - 1);
            d.add(encode(face), col, n % 2 ? -1 : 1);
        }
        d.finalize();
        boundaries.push_back(std::move(d));
    }
    return FreeChainComplex(std::move(ranks), std::move(boundaries));
}

}  // namespace

BarComplex::BarComplex(PermGroup group, std::size_t top, std::size_t basis_bound)
    : group_(std::move(group)), complex_(build_bar(group_, top, basis_bound))
{
}

std::vector<std::size_t> BarComplex::tuple(std::size_t n, std::size_t index) const
{
    const std::size_t b = group_.order() - 1;
    std::vector<std::size_t> t(n);
    for (std::size_t k = n; k-- > 0;) {
        t[k] = index % b + 1;
        index /= b;
    }
    return t;
}

std::size_t BarComplex::index(const std::vector<std::size_t>& tuple) const
{
    const std::size_t b = group_.order() - 1;
    std::size_t idx = 0;
    for (auto e : tuple) {
        if (e == 0)
            fail(ErrorKind::InvalidArgument, "bar tuples exclude the identity");
        idx = idx * b + (e - 1);
    }
    return idx;
}

FpAbelianGroup group_homology(const PermGroup& g, std::size_t n, std::size_t basis_bound)
{
    return BarComplex(g, n + 1, basis_bound).complex().homology(n);
}

BarHomology bar_homology(const PermGroup& g, std::size_t n, std::size_t basis_bound)
{
    BarComplex bar(g, n + 1, basis_bound);
    ChainComplex general = bar.complex().to_general();
    auto h = general.homology_data(n);
    return BarHomology{std::move(bar), n, std::move(h)};
}

AbHom induced_map(const GroupHom& f, const BarHomology& source, const BarHomology& target)
{
    const std::size_t n = source.degree;
    if (target.degree != n)
        fail(ErrorKind::InvalidArgument, "induced map between different degrees");
    const BarComplex& sb = source.bar;
    const BarComplex& tb = target.bar;
    IntMatrix chain(tb.rank(n), sb.rank(n));
    for (std::size_t col = 0; col < sb.rank(n); ++col) {
        auto t = sb.tuple(n, col);
        bool degenerate = false;
        for (auto& e : t) {
            e = f.apply_index(e);
            degenerate = degenerate || e == 0;
        }
        if (!degenerate)
            chain(tb.index(t), col) += 1;
    }
    AbHom chain_map(FpAbelianGroup(sb.rank(n)), FpAbelianGroup(tb.rank(n)), std::move(chain));
    return induced_on_homology(source.homology, target.homology, chain_map);
}

AbHom induced_map(const GroupHom& f, std::size_t n, std::size_t basis_bound)
{
    return induced_map(f, bar_homology(f.source(), n, basis_bound), bar_homology(f.target(), n, basis_bound));
}

}  // namespace dh
