#include "dh/shapes.hpp"

#include "dh/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dh {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::size_t kMaxMorphisms = 20000;

std::vector<std::size_t> name_ranks(const std::vector<std::string>& names)
{
    std::vector<std::size_t> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
    std::vector<std::size_t> rank(names.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = i;
    return rank;
}

}  // namespace

std::size_t Graph::add_vertex(const std::string& name)
{
    if (vertex_ids_.count(name))
        fail(ErrorKind::Schema, "duplicate vertex '" + name + "'");
    vertex_ids_[name] = vertices_.size();
    vertices_.push_back(name);
    return vertices_.size() - 1;
}

std::size_t Graph::add_arrow(const std::string& name, const std::string& src, const std::string& dst)
{
    if (arrow_ids_.count(name))
        fail(ErrorKind::Schema, "duplicate arrow '" + name + "'");
    auto s = find_vertex(src);
    auto t = find_vertex(dst);
    if (!s || !t)
        fail(ErrorKind::Schema, "arrow '" + name + "' references undefined vertex '" + (s ? dst : src) + "'");
    arrow_ids_[name] = arrows_.size();
    arrows_.push_back(Arrow{name, *s, *t});
    return arrows_.size() - 1;
}

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const
{
    auto it = vertex_ids_.find(name);
    if (it == vertex_ids_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Graph::find_arrow(const std::string& name) const
{
    auto it = arrow_ids_.find(name);
    if (it == arrow_ids_.end())
        return std::nullopt;
    return it->second;
}

bool Graph::has_directed_cycle() const
{
    std::vector<std::size_t> indegree(vertices_.size(), 0);
    for (const auto& a : arrows_)
        ++indegree[a.dst];
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::size_t v = ready.front();
        ready.pop_front();
        ++seen;
        for (const auto& a : arrows_)
            if (a.src == v && --indegree[a.dst] == 0)
                ready.push_back(a.dst);
    }
    return seen != vertices_.size();
}

FreeCategory FreeCategory::free(const Graph& graph)
{
    if (graph.has_directed_cycle())
        fail(ErrorKind::CyclicGraph, "graph has a directed cycle; its free category is infinite");
    FreeCategory cat;
    cat.graph_ = graph;
    std::vector<std::vector<std::size_t>> out(graph.vertex_count());
    for (std::size_t a = 0; a < graph.arrow_count(); ++a)
        out[graph.arrow(a).src].push_back(a);

    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        // Depth-first over paths starting at v.
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack{{v, {}}};
        while (!stack.empty()) {
            auto [at, word] = std::move(stack.back());
            stack.pop_back();
            cat.morphisms_.push_back(Morphism{v, at, word});
            if (cat.morphisms_.size() > kMaxMorphisms)
                fail(ErrorKind::BoundExceeded, "free category has more than " +
                                                   std::to_string(kMaxMorphisms) + " morphisms");
            for (std::size_t a : out[at]) {
                auto next = word;
                next.push_back(a);
                stack.emplace_back(graph.arrow(a).dst, std::move(next));
            }
        }
    }
    cat.finish();
    return cat;
}

FreeCategory FreeCategory::poset(const Graph& graph)
{
    if (graph.has_directed_cycle())
        fail(ErrorKind::CyclicGraph, "poset graph has a directed cycle");
    FreeCategory cat;
    cat.graph_ = graph;
    cat.poset_ = true;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        // Breadth-first: first path found to each vertex is the representative.
        std::vector<std::optional<std::vector<std::size_t>>> path(graph.vertex_count());
        path[v] = std::vector<std::size_t>{};
        std::deque<std::size_t> queue{v};
        while (!queue.empty()) {
            std::size_t at = queue.front();
            queue.pop_front();
            for (std::size_t a = 0; a < graph.arrow_count(); ++a) {
                const Arrow& arr = graph.arrow(a);
                if (arr.src != at || path[arr.dst])
                    continue;
                auto next = *path[at];
                next.push_back(a);
                path[arr.dst] = std::move(next);
                queue.push_back(arr.dst);
            }
        }
        for (std::size_t w = 0; w < graph.vertex_count(); ++w)
            if (path[w])
                cat.morphisms_.push_back(Morphism{v, w, *path[w]});
    }
    cat.finish();
    return cat;
}

bool FreeCategory::morphism_less(std::size_t f, std::size_t g) const
{
    const Morphism& a = morphisms_[f];
    const Morphism& b = morphisms_[g];
    if (a.src != b.src)
        return vertex_rank_[a.src] < vertex_rank_[b.src];
    if (a.dst != b.dst)
        return vertex_rank_[a.dst] < vertex_rank_[b.dst];
    return std::lexicographical_compare(
        a.word.begin(), a.word.end(), b.word.begin(), b.word.end(),
        [&](std::size_t x, std::size_t y) { return arrow_rank_[x] < arrow_rank_[y]; });
}

void FreeCategory::finish()
{
    vertex_rank_ = name_ranks(graph_.vertices());
    std::vector<std::string> arrow_names;
    for (const auto& a : graph_.arrows())
        arrow_names.push_back(a.name);
    arrow_rank_ = name_ranks(arrow_names);

    std::vector<std::size_t> order(morphisms_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t f, std::size_t g) { return morphism_less(f, g); });
    std::vector<Morphism> sorted;
    sorted.reserve(morphisms_.size());
    for (auto i : order)
        sorted.push_back(std::move(morphisms_[i]));
    morphisms_ = std::move(sorted);

    const std::size_t n = graph_.vertex_count();
    const std::size_t m = morphisms_.size();
    identities_.assign(n, kNone);
    hom_.assign(n * n, {});
    into_.assign(n, {});
    from_.assign(n, {});
    std::map<std::vector<std::size_t>, std::size_t> by_word;
    for (std::size_t f = 0; f < m; ++f) {
        const Morphism& mor = morphisms_[f];
        if (mor.is_identity())
            identities_[mor.src] = f;
        else if (!poset_)
            by_word[mor.word] = f;
        hom_[mor.src * n + mor.dst].push_back(f);
        into_[mor.dst].push_back(f);
        from_[mor.src].push_back(f);
    }

    arrow_morphisms_.clear();
    for (std::size_t a = 0; a < graph_.arrow_count(); ++a) {
        const Arrow& arr = graph_.arrow(a);
        arrow_morphisms_.push_back(poset_ ? hom_[arr.src * n + arr.dst].front() : by_word.at({a}));
    }

    composition_.assign(m * m, kNone);
    for (std::size_t f = 0; f < m; ++f)
        for (std::size_t g : from_[morphisms_[f].dst]) {
            std::size_t h;
            if (poset_) {
                h = hom_[morphisms_[f].src * n + morphisms_[g].dst].front();
            } else if (morphisms_[f].is_identity()) {
                h = g;
            } else if (morphisms_[g].is_identity()) {
                h = f;
            } else {
                auto word = morphisms_[f].word;
                word.insert(word.end(), morphisms_[g].word.begin(), morphisms_[g].word.end());
                h = by_word.at(word);
            }
            composition_[f * m + g] = h;
        }
}

std::size_t FreeCategory::compose(std::size_t f, std::size_t g) const
{
    std::size_t h = composition_.at(f * morphisms_.size() + g);
    if (h == kNone)
        fail(ErrorKind::InvalidArgument, "morphisms " + morphism_name(f) + " and " + morphism_name(g) +
                                             " are not composable");
    return h;
}

const std::vector<std::size_t>& FreeCategory::hom(std::size_t a, std::size_t b) const
{
    return hom_.at(a * graph_.vertex_count() + b);
}

std::string FreeCategory::morphism_name(std::size_t f) const
{
    const Morphism& m = morphisms_.at(f);
    if (m.is_identity())
        return "id_" + graph_.vertex_name(m.src);
    std::string out;
    for (std::size_t i = 0; i < m.word.size(); ++i) {
        if (i)
            out += '.';
        out += graph_.arrow(m.word[i]).name;
    }
    return out;
}

std::vector<Chain> FreeCategory::enumerate(std::size_t n, bool nondegenerate) const
{
    std::vector<Chain> out;
    Chain current;
    auto extend = [&](auto&& self) -> void {
        if (current.morphisms.size() == n) {
            out.push_back(current);
            return;
        }
        for (std::size_t f : from_[current.objects.back()]) {
            if (nondegenerate && morphisms_[f].is_identity())
                continue;
            current.morphisms.push_back(f);
            current.objects.push_back(morphisms_[f].dst);
            self(self);
            current.morphisms.pop_back();
            current.objects.pop_back();
        }
    };
    for (std::size_t c = 0; c < object_count(); ++c) {
        current.objects = {c};
        current.morphisms.clear();
        extend(extend);
    }
    std::sort(out.begin(), out.end(), [this](const Chain& x, const Chain& y) { return chain_less(x, y); });
    return out;
}

std::vector<Chain> FreeCategory::nerve_chains(std::size_t n) const
{
    return enumerate(n, false);
}

std::vector<Chain> FreeCategory::nondegenerate_chains(std::size_t n) const
{
    return enumerate(n, true);
}

Chain FreeCategory::face(const Chain& x, std::size_t i) const
{
    const std::size_t n = x.dimension();
    if (n == 0 || i > n)
        fail(ErrorKind::InvalidArgument, "face index out of range");
    Chain y = x;
    y.objects.erase(y.objects.begin() + static_cast<std::ptrdiff_t>(i));
    if (i == 0) {
        y.morphisms.erase(y.morphisms.begin());
    } else if (i == n) {
        y.morphisms.pop_back();
    } else {
        y.morphisms[i - 1] = compose(x.morphisms[i - 1], x.morphisms[i]);
        y.morphisms.erase(y.morphisms.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return y;
}

Chain FreeCategory::degeneracy(const Chain& x, std::size_t i) const
{
    if (i > x.dimension())
        fail(ErrorKind::InvalidArgument, "degeneracy index out of range");
    Chain y = x;
    y.objects.insert(y.objects.begin() + static_cast<std::ptrdiff_t>(i), x.objects[i]);
    y.morphisms.insert(y.morphisms.begin() + static_cast<std::ptrdiff_t>(i), identity(x.objects[i]));
    return y;
}

bool FreeCategory::is_nondegenerate(const Chain& x) const
{
    return std::none_of(x.morphisms.begin(), x.morphisms.end(),
                        [this](std::size_t f) { return morphisms_[f].is_identity(); });
}

bool FreeCategory::chain_less(const Chain& x, const Chain& y) const
{
    const bool objects_differ = x.objects != y.objects;
    if (objects_differ)
        return std::lexicographical_compare(
            x.objects.begin(), x.objects.end(), y.objects.begin(), y.objects.end(),
            [this](std::size_t a, std::size_t b) { return vertex_rank_[a] < vertex_rank_[b]; });
    // Morphism ids are already in canonical order.
    return x.morphisms < y.morphisms;
}

std::string FreeCategory::chain_name(const Chain& x) const
{
    std::string out = graph_.vertex_name(x.objects[0]);
    for (std::size_t i = 0; i < x.dimension(); ++i)
        out += " -" + morphism_name(x.morphisms[i]) + "-> " + graph_.vertex_name(x.objects[i + 1]);
    return out;
}

ChainIndex::ChainIndex(const FreeCategory& cat, std::size_t max_dim, bool nondegenerate_only)
{
    for (std::size_t n = 0; n <= max_dim; ++n) {
        chains_.push_back(nondegenerate_only ? cat.nondegenerate_chains(n) : cat.nerve_chains(n));
        std::map<std::vector<std::size_t>, std::size_t> lookup;
        for (std::size_t i = 0; i < chains_.back().size(); ++i) {
            const Chain& x = chains_.back()[i];
            lookup.emplace(n == 0 ? x.objects : x.morphisms, i);
        }
        lookup_.push_back(std::move(lookup));
    }
}

std::optional<std::size_t> ChainIndex::find(const Chain& x) const
{
    const std::size_t n = x.dimension();
    if (n >= lookup_.size())
        return std::nullopt;
    auto it = lookup_[n].find(n == 0 ? x.objects : x.morphisms);
    if (it == lookup_[n].end())
        return std::nullopt;
    return it->second;
}

}  // namespace dh
