#include "dh/colimits.hpp"

#include "dh/error.hpp"

#include <algorithm>

namespace dh {

std::string GroupPresentation::to_string() const
{
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i)
        out += (i ? ", " : " ") + generators[i];
    out += " |";
    for (std::size_t r = 0; r < relators.size(); ++r) {
        out += r ? ", " : " ";
        for (std::size_t k = 0; k < relators[r].size(); ++k) {
            const long x = relators[r][k];
            out += (k ? " " : "") + generators.at(static_cast<std::size_t>(std::labs(x)) - 1);
            if (x < 0)
                out += "^-1";
        }
    }
    return out + " >";
}

namespace {

constexpr std::size_t npos = ColimPresentation::npos;

long letter(std::size_t generator, bool inverse = false)
{
    const long x = static_cast<long>(generator) + 1;
    return inverse ? -x : x;
}

// Presentation word of an element of object v.
Word element_word(const GroupDiagram& d, const ColimPresentation& cp, std::size_t v, const GroupElement& x)
{
    const auto& letters = cp.letters[v];
    if (const auto* p = std::get_if<PermGroup>(&d.object(v))) {
        const std::size_t g = letters[p->index_of(std::get<Perm>(x))];
        return g == npos ? Word{} : Word{letter(g)};
    }
    Word out;
    for (long l : std::get<Word>(x)) {
        const std::size_t g = letters.at(static_cast<std::size_t>(std::labs(l)) - 1);
        out.push_back(letter(g, l < 0));
    }
    return out;
}

Word inverse_word(const Word& w)
{
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(-*it);
    return out;
}

}  // namespace

ColimPresentation colim_presentation(const GroupDiagram& d)
{
    ColimPresentation cp;
    GroupPresentation& p = cp.presentation;
    const FreeCategory& base = d.base();
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        const std::string& name = base.object_name(v);
        std::vector<std::size_t> letters;
        if (const auto* g = std::get_if<PermGroup>(&d.object(v))) {
            letters.push_back(npos);
            for (std::size_t e = 1; e < g->order(); ++e) {
                letters.push_back(p.generators.size());
                p.generators.push_back(name + "." + perm::to_string(g->elements()[e]));
            }
        } else {
            for (std::size_t j = 0; j < generator_count(d.object(v)); ++j) {
                letters.push_back(p.generators.size());
                p.generators.push_back(name + ".x" + std::to_string(j + 1));
            }
        }
        cp.letters.push_back(std::move(letters));
    }

    auto add = [&p](Word w) {
        w = reduce_word(w);
        if (!w.empty())
            p.relators.push_back(std::move(w));
    };
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        const auto* g = std::get_if<PermGroup>(&d.object(v));
        if (!g)
            continue;
        const auto& letters = cp.letters[v];
        // x_s x_h = x_{sh} for generators s
        for (const auto& s : g->generators()) {
            const std::size_t si = g->index_of(s);
            for (std::size_t h = 0; h < g->order(); ++h) {
                const std::size_t sh = g->multiply(si, h);
                Word w;
                for (std::size_t e : {si, h})
                    if (letters[e] != npos)
                        w.push_back(letter(letters[e]));
                if (letters[sh] != npos)
                    w.push_back(letter(letters[sh], true));
                add(std::move(w));
            }
        }
    }
    const Graph& graph = base.graph();
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        for (std::size_t j = 0; j < generator_count(d.object(arr.src)); ++j) {
            GroupElement x = generator(d.object(arr.src), j);
            Word w = element_word(d, cp, arr.dst, d.apply_arrow(a, x));
            Word inv = inverse_word(element_word(d, cp, arr.src, x));
            w.insert(w.end(), inv.begin(), inv.end());
            add(std::move(w));
        }
    }
    return cp;
}

Perm CosetTable::generator_action(std::size_t j) const
{
    if (!complete())
        fail(ErrorKind::PreconditionFailed, "coset table is incomplete");
    Perm p(rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c)
        p[c] = static_cast<std::uint32_t>(rows[c][2 * j]);
    return p;
}

namespace {

class Enumerator {
public:
    Enumerator(std::size_t generators, std::size_t max_cosets)
        : cols_(2 * generators), max_(max_cosets)
    {
        define_new();
    }

    struct Exceeded {};

    static std::size_t column(long l)
    {
        return l > 0 ? 2 * static_cast<std::size_t>(l - 1) : 2 * static_cast<std::size_t>(-l - 1) + 1;
    }

    bool live(std::size_t c) const { return parent_[c] == c; }
    std::size_t count() const { return parent_.size(); }
    void define(std::size_t c, std::size_t x)
    {
        const std::size_t d = define_new();
        at(c, x) = d;
        at(d, x ^ 1) = c;
    }

    void fill(std::size_t c)
    {
        for (std::size_t x = 0; x < cols_ && live(c); ++x)
            if (at(c, x) == npos)
                define(c, x);
    }

    void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w)
    {
        std::size_t f = c, b = c;
        std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
        while (true) {
            while (i < j && at(f, w[i]) != npos)
                f = at(f, w[i++]);
            if (i == j) {
                if (f != b)
                    coincidence(f, b);
                return;
            }
            while (j > i && at(b, w[j - 1] ^ 1) != npos)
                b = at(b, w[--j] ^ 1);
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                at(f, w[i]) = b;
                at(b, w[i] ^ 1) = f;
                return;
            }
            define(f, w[i]);
        }
    }

    std::vector<std::vector<std::size_t>> compact() const
    {
        std::vector<std::size_t> number(count(), npos);
        std::size_t n = 0;
        for (std::size_t c = 0; c < count(); ++c)
            if (live(c))
                number[c] = n++;
        std::vector<std::vector<std::size_t>> rows;
        for (std::size_t c = 0; c < count(); ++c) {
            if (!live(c))
                continue;
            std::vector<std::size_t> row(cols_);
            for (std::size_t x = 0; x < cols_; ++x)
                row[x] = number[find(at(c, x))];
            rows.push_back(std::move(row));
        }
        return rows;
    }

private:
    std::size_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
    std::size_t at(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }

    std::size_t define_new()
    {
        if (parent_.size() >= max_)
            throw Exceeded{};
        const std::size_t d = parent_.size();
        parent_.push_back(d);
        table_.resize(table_.size() + cols_, npos);
        return d;
    }

    std::size_t find(std::size_t c) const
    {
        while (parent_[c] != c)
            c = parent_[c];
        return c;
    }

    std::size_t rep(std::size_t c)
    {
        std::size_t r = c;
        while (parent_[r] != r)
            r = parent_[r];
        while (parent_[c] != r) {
            const std::size_t next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue)
    {
        k = rep(k);
        l = rep(l);
        if (k == l)
            return;
        if (l < k)
            std::swap(k, l);
        parent_[l] = k;
        queue.push_back(l);
    }

    void coincidence(std::size_t a, std::size_t b)
    {
        std::vector<std::size_t> queue;
        merge(a, b, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const std::size_t e = queue[q];
            for (std::size_t x = 0; x < cols_; ++x) {
                const std::size_t f = at(e, x);
                if (f == npos)
                    continue;
                at(f, x ^ 1) = npos;
                const std::size_t e1 = rep(e), f1 = rep(f);
                if (at(e1, x) != npos)
                    merge(f1, at(e1, x), queue);
                else if (at(f1, x ^ 1) != npos)
                    merge(e1, at(f1, x ^ 1), queue);
                else {
                    at(e1, x) = f1;
                    at(f1, x ^ 1) = e1;
                }
            }
        }
    }

    std::size_t cols_;
    std::size_t max_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> table_;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p, std::size_t max_cosets)
{
    if (max_cosets == 0)
        fail(ErrorKind::InvalidArgument, "max_cosets must be positive");
    const std::size_t gens = p.generators.size();
    std::vector<std::vector<std::size_t>> relators;
    for (const auto& r : p.relators) {
        std::vector<std::size_t> cols;
        for (long l : r) {
            if (l == 0 || static_cast<std::size_t>(std::labs(l)) > gens)
                fail(ErrorKind::InvalidArgument, "relator letter out of range");
            cols.push_back(Enumerator::column(l));
        }
        relators.push_back(std::move(cols));
    }

    CosetTable table;
    table.bound = max_cosets;
    table.generator_count = gens;
    try {
        Enumerator e(gens, max_cosets);
        for (std::size_t c = 0; c < e.count(); ++c) {
            for (const auto& r : relators) {
                if (!e.live(c))
                    break;
                e.scan_and_fill(c, r);
            }
            if (e.live(c))
                e.fill(c);
        }
        table.rows = e.compact();
        table.status = CosetTable::Status::Complete;
    } catch (const Enumerator::Exceeded&) {
        table.status = CosetTable::Status::Exceeded;
    }
    return table;
}

std::string ColimResult::describe() const
{
    switch (kind) {
    case Kind::Trivial:
        return "trivial group";
    case Kind::Unknown:
        return "unknown (coset enumeration exceeded " + std::to_string(bound) + " cosets)";
    case Kind::Finite:
        break;
    }
    std::string out = "finite group of order " + std::to_string(group.order());
    if (group.is_abelian())
        out += ", abelian " + abelianization(group).group.to_string();
    return out;
}

Perm ColimResult::insert(const GroupDiagram& d, std::size_t v, const GroupElement& x) const
{
    if (kind == Kind::Unknown)
        fail(ErrorKind::UnknownColim, "colimit is unknown");
    const auto& images = insertion_images.at(v);
    if (const auto* g = std::get_if<PermGroup>(&d.object(v)))
        return GroupHom(*g, group, images).apply(std::get<Perm>(x));
    Perm acc = perm::identity(group.degree());
    for (long l : std::get<Word>(x)) {
        const Perm& img = images.at(static_cast<std::size_t>(std::labs(l)) - 1);
        acc = perm::multiply(acc, l > 0 ? img : perm::inverse(img));
    }
    return acc;
}

std::optional<ColimResult> colim_by_normal_closure(const GroupDiagram& d)
{
    const Graph& graph = d.base().graph();
    std::vector<std::size_t> targets;
    for (const Arrow& a : graph.arrows())
        targets.push_back(a.dst);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::size_t b = 0;
    if (targets.size() == 1)
        b = targets.front();
    else if (!(targets.empty() && d.object_count() == 1))
        return std::nullopt;
    std::vector<std::vector<std::size_t>> out(d.object_count());
    for (std::size_t a = 0; a < graph.arrow_count(); ++a)
        out[graph.arrow(a).src].push_back(a);
    if (!out[b].empty())
        return std::nullopt;
    for (std::size_t v = 0; v < d.object_count(); ++v)
        if (v != b && out[v].empty())
            return std::nullopt;
    const auto* target = std::get_if<PermGroup>(&d.object(b));
    if (!target)
        return std::nullopt;

    std::vector<Perm> relations;
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        if (v == b)
            continue;
        for (std::size_t j = 1; j < out[v].size(); ++j)
            for (std::size_t k = 0; k < generator_count(d.object(v)); ++k) {
                GroupElement x = generator(d.object(v), k);
                const Perm first = std::get<Perm>(d.apply_arrow(out[v][0], x));
                const Perm other = std::get<Perm>(d.apply_arrow(out[v][j], x));
                relations.push_back(perm::multiply(first, perm::inverse(other)));
            }
    }
    Quotient q = quotient(*target, normal_closure(*target, relations));

    ColimResult r;
    r.method = "coequalizer";
    r.kind = q.group.order() == 1 ? ColimResult::Kind::Trivial : ColimResult::Kind::Finite;
    r.group = q.group;
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        std::vector<Perm> images;
        for (std::size_t k = 0; k < generator_count(d.object(v)); ++k) {
            GroupElement x = generator(d.object(v), k);
            const Perm y = v == b ? std::get<Perm>(x) : std::get<Perm>(d.apply_arrow(out[v][0], x));
            images.push_back(q.projection.apply(y));
        }
        r.insertion_images.push_back(std::move(images));
    }
    return r;
}

ColimResult colim_by_enumeration(const GroupDiagram& d, std::size_t max_cosets)
{
    ColimPresentation cp = colim_presentation(d);
    CosetTable table = todd_coxeter(cp.presentation, max_cosets);
    ColimResult r;
    r.method = "coset enumeration";
    r.bound = max_cosets;
    if (!table.complete()) {
        r.kind = ColimResult::Kind::Unknown;
        return r;
    }
    const std::size_t n = table.coset_count();
    std::vector<Perm> actions;
    for (std::size_t j = 0; j < table.generator_count; ++j)
        actions.push_back(table.generator_action(j));
    r.kind = n == 1 ? ColimResult::Kind::Trivial : ColimResult::Kind::Finite;
    r.group = PermGroup(n, actions, std::max(PermGroup::kDefaultBound, n));
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        std::vector<Perm> images;
        for (std::size_t k = 0; k < generator_count(d.object(v)); ++k) {
            Perm acc = perm::identity(n);
            for (long l : element_word(d, cp, v, generator(d.object(v), k))) {
                const Perm& a = actions[static_cast<std::size_t>(std::labs(l)) - 1];
                acc = perm::multiply(acc, l > 0 ? a : perm::inverse(a));
            }
            images.push_back(std::move(acc));
        }
        r.insertion_images.push_back(std::move(images));
    }
    return r;
}

void verify_colimit(const GroupDiagram& d, const ColimResult& r)
{
    if (r.kind == ColimResult::Kind::Unknown)
        return;
    const FreeCategory& base = d.base();
    std::vector<std::optional<GroupHom>> homs(d.object_count());
    for (std::size_t v = 0; v < d.object_count(); ++v)
        if (const auto* g = std::get_if<PermGroup>(&d.object(v))) {
            try {
                homs[v].emplace(*g, r.group, r.insertion_images.at(v));
            } catch (const Error& e) {
                fail(ErrorKind::Validation, "insertion of '" + base.object_name(v) + "' is not a homomorphism: " + e.what());
            }
        }
    auto insert = [&](std::size_t v, const GroupElement& x) {
        return homs[v] ? homs[v]->apply(std::get<Perm>(x)) : r.insert(d, v, x);
    };
    const Graph& graph = base.graph();
    for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
        const Arrow& arr = graph.arrow(a);
        for (std::size_t k = 0; k < generator_count(d.object(arr.src)); ++k) {
            GroupElement x = generator(d.object(arr.src), k);
            if (insert(arr.dst, d.apply_arrow(a, x)) != insert(arr.src, x))
                fail(ErrorKind::Validation, "insertions do not commute with arrow '" + arr.name + "'");
        }
    }
}

ColimResult colim_group(const GroupDiagram& d, std::size_t max_cosets)
{
    std::optional<ColimResult> r = colim_by_normal_closure(d);
    if (!r)
        r = colim_by_enumeration(d, max_cosets);
    verify_colimit(d, *r);
    return *r;
}

bool colimits_agree(const GroupDiagram& d, const ColimResult& a, const ColimResult& b)
{
    if (a.kind == ColimResult::Kind::Unknown || b.kind == ColimResult::Kind::Unknown)
        return false;
    if (a.group.order() != b.group.order())
        return false;
    const std::size_t da = a.group.degree(), db = b.group.degree();
    std::vector<Perm> pairs;
    for (std::size_t v = 0; v < d.object_count(); ++v)
        for (std::size_t k = 0; k < a.insertion_images.at(v).size(); ++k) {
            Perm p(da + db);
            const Perm& x = a.insertion_images[v][k];
            const Perm& y = b.insertion_images.at(v).at(k);
            for (std::size_t i = 0; i < da; ++i)
                p[i] = x[i];
            for (std::size_t i = 0; i < db; ++i)
                p[da + i] = static_cast<std::uint32_t>(da + y[i]);
            pairs.push_back(std::move(p));
        }
    // The generated subgroup is the graph of an isomorphism exactly when it
    // has the common order.
    return PermGroup(da + db, pairs).order() == a.group.order();
}

}  // namespace dh
