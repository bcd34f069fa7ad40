#include "dh/document.hpp"

#include "dh/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dh {

using nlohmann::json;

const char* to_string(GroupSpec::Kind k)
{
    switch (k) {
    case GroupSpec::Kind::Trivial: return "trivial";
    case GroupSpec::Kind::Cyclic: return "cyclic";
    case GroupSpec::Kind::Symmetric: return "symmetric";
    case GroupSpec::Kind::Perm: return "perm";
    case GroupSpec::Kind::Free: return "free";
    case GroupSpec::Kind::Abelian: return "abelian";
    }
    return "?";
}

namespace {

[[noreturn]] void schema(const std::string& msg) { fail(ErrorKind::Schema, msg); }

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        schema(where + "missing field '" + key + "'");
    return j.at(key);
}

std::size_t count_field(const json& j, const char* key, const std::string& where)
{
    const json& v = field(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        schema(where + "field '" + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<long> int_array(const json& j, const std::string& where)
{
    if (!j.is_array())
        schema(where + "expected an array of integers");
    std::vector<long> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            schema(where + "expected an array of integers");
        out.push_back(x.get<long>());
    }
    return out;
}

Perm perm_array(const json& j, std::size_t degree, const std::string& where)
{
    std::vector<long> v = int_array(j, where);
    if (v.size() != degree)
        fail(ErrorKind::Endpoint, where + "expected a permutation of degree " + std::to_string(degree));
    Perm p;
    for (long x : v) {
        if (x < 0 || static_cast<std::size_t>(x) >= degree)
            fail(ErrorKind::Validation, where + "permutation entry " + std::to_string(x) + " out of range");
        p.push_back(static_cast<std::uint32_t>(x));
    }
    if (!perm::is_valid(p))
        fail(ErrorKind::Validation, where + "array is not a permutation");
    return p;
}

GroupSpec parse_group(const json& j, const std::string& where)
{
    if (!j.is_object())
        schema(where + "expected an object");
    const json& kind = field(j, "kind", where);
    if (!kind.is_string())
        schema(where + "field 'kind' must be a string");
    const std::string k = kind.get<std::string>();
    GroupSpec g;
    if (k == "trivial") {
        g.kind = GroupSpec::Kind::Trivial;
    } else if (k == "cyclic") {
        g.kind = GroupSpec::Kind::Cyclic;
        g.order = count_field(j, "order", where);
    } else if (k == "symmetric") {
        g.kind = GroupSpec::Kind::Symmetric;
        g.degree = count_field(j, "degree", where);
        if (g.degree == 0)
            schema(where + "degree must be positive");
    } else if (k == "perm") {
        g.kind = GroupSpec::Kind::Perm;
        g.degree = count_field(j, "degree", where);
        if (g.degree == 0)
            schema(where + "degree must be positive");
        const json& gens = field(j, "generators", where);
        if (!gens.is_array())
            schema(where + "field 'generators' must be an array");
        for (const auto& p : gens)
            g.generators.push_back(perm_array(p, g.degree, where));
    } else if (k == "free") {
        g.kind = GroupSpec::Kind::Free;
        g.rank = count_field(j, "rank", where);
    } else if (k == "abelian") {
        g.kind = GroupSpec::Kind::Abelian;
        g.rank = count_field(j, "generators", where);
        if (j.contains("relations")) {
            const json& rels = j.at("relations");
            if (!rels.is_array())
                schema(where + "field 'relations' must be an array");
            for (const auto& r : rels) {
                g.relations.push_back(int_array(r, where));
                if (g.relations.back().size() != g.rank)
                    schema(where + "each relation needs one coefficient per generator");
            }
        }
    } else {
        schema(where + "unknown group kind '" + k + "'");
    }
    return g;
}

json group_json(const GroupSpec& g)
{
    json j = {{"kind", to_string(g.kind)}};
    switch (g.kind) {
    case GroupSpec::Kind::Trivial: break;
    case GroupSpec::Kind::Cyclic: j["order"] = g.order; break;
    case GroupSpec::Kind::Symmetric: j["degree"] = g.degree; break;
    case GroupSpec::Kind::Perm:
        j["degree"] = g.degree;
        j["generators"] = g.generators;
        break;
    case GroupSpec::Kind::Free: j["rank"] = g.rank; break;
    case GroupSpec::Kind::Abelian:
        j["generators"] = g.rank;
        j["relations"] = g.relations;
        break;
    }
    return j;
}

DiagramGroup diagram_group(const GroupSpec& g)
{
    switch (g.kind) {
    case GroupSpec::Kind::Trivial: return SymbolicGroup::trivial();
    case GroupSpec::Kind::Cyclic:
        return g.order == 0 ? SymbolicGroup::infinite_cyclic() : SymbolicGroup::cyclic(g.order);
    case GroupSpec::Kind::Symmetric: return PermGroup::symmetric(g.degree);
    case GroupSpec::Kind::Perm: return PermGroup(g.degree, g.generators);
    case GroupSpec::Kind::Free:
        return g.rank == 0 ? SymbolicGroup::trivial()
                           : g.rank == 1 ? SymbolicGroup::infinite_cyclic() : SymbolicGroup::free(g.rank);
    case GroupSpec::Kind::Abelian: break;
    }
    fail(ErrorKind::Schema, "abelian groups cannot appear in a group diagram");
}

Perm power(const Perm& g, long k)
{
    const long n = static_cast<long>(g.size());
    Perm out = perm::identity(g.size());
    for (long i = 0; i < ((k % n) + n) % n; ++i)
        for (auto& x : out)
            x = g[x];
    return out;
}

GroupElement group_element(const json& x, const GroupSpec& target, const std::string& where)
{
    switch (target.kind) {
    case GroupSpec::Kind::Cyclic:
        if (target.order >= 1) {
            if (x.is_number_integer())
                return target.order == 1 ? perm::identity(1) : power(PermGroup::cyclic(target.order).generators()[0], x.get<long>());
            return perm_array(x, target.order == 1 ? 1 : target.order, where);
        }
        [[fallthrough]];
    case GroupSpec::Kind::Trivial:
    case GroupSpec::Kind::Free:
        if (x.is_number_integer()) {
            const long k = x.get<long>();
            return Word(static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? -1 : 1);
        }
        return Word(int_array(x, where));
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::Perm: return perm_array(x, target.degree, where);
    case GroupSpec::Kind::Abelian: break;
    }
    fail(ErrorKind::Schema, where + "abelian target in a group diagram");
}

FpAbelianGroup abelian_group(const GroupSpec& g, const std::string& where)
{
    switch (g.kind) {
    case GroupSpec::Kind::Trivial: return FpAbelianGroup();
    case GroupSpec::Kind::Cyclic: return FpAbelianGroup::cyclic(static_cast<long>(g.order));
    case GroupSpec::Kind::Free:
        if (g.rank <= 1)
            return FpAbelianGroup(g.rank);
        break;
    case GroupSpec::Kind::Abelian: {
        IntMatrix r(g.rank, g.relations.size());
        for (std::size_t k = 0; k < g.relations.size(); ++k)
            for (std::size_t i = 0; i < g.rank; ++i)
                r(i, k) = g.relations[k][i];
        return FpAbelianGroup(g.rank, std::move(r));
    }
    default: break;
    }
    fail(ErrorKind::Schema, where + "a group of kind '" + to_string(g.kind) + "' cannot appear in an abelian diagram");
}

IntMatrix abelian_matrix(const json& h, std::size_t src_gens, std::size_t dst_gens, const std::string& where)
{
    IntMatrix m(dst_gens, src_gens);
    if (h.is_object()) {
        const json& rows = field(h, "matrix", where);
        if (!rows.is_array() || rows.size() != dst_gens)
            fail(ErrorKind::Endpoint, where + "matrix needs one row per target generator (" + std::to_string(dst_gens) + ")");
        for (std::size_t i = 0; i < dst_gens; ++i) {
            std::vector<long> row = int_array(rows[i], where);
            if (row.size() != src_gens)
                fail(ErrorKind::Endpoint, where + "matrix needs one column per source generator (" +
                                              std::to_string(src_gens) + ")");
            for (std::size_t j = 0; j < src_gens; ++j)
                m(i, j) = row[j];
        }
        return m;
    }
    if (!h.is_array() || h.size() != src_gens)
        fail(ErrorKind::Endpoint, where + "expected " + std::to_string(src_gens) + " generator images");
    for (std::size_t j = 0; j < src_gens; ++j) {
        std::vector<long> col;
        if (h[j].is_number_integer())
            col.push_back(h[j].get<long>());
        else
            col = int_array(h[j], where);
        if (col.size() != dst_gens)
            fail(ErrorKind::Endpoint, where + "images need " + std::to_string(dst_gens) + " coordinates");
        for (std::size_t i = 0; i < dst_gens; ++i)
            m(i, j) = col[i];
    }
    return m;
}

}  // namespace

bool InputDocument::is_abelian() const
{
    for (const auto& g : groups)
        if (g.kind == GroupSpec::Kind::Abelian)
            return true;
    return false;
}

Graph InputDocument::graph() const
{
    Graph g;
    for (const auto& v : vertices)
        g.add_vertex(v);
    for (const auto& a : arrows)
        g.add_arrow(a.name, a.from, a.to);
    return g;
}

FreeCategory InputDocument::category() const
{
    return poset ? FreeCategory::poset(graph()) : FreeCategory::free(graph());
}

GroupDiagram InputDocument::group_diagram() const
{
    if (is_abelian())
        fail(ErrorKind::InvalidArgument, "this command needs a group diagram, not an abelian one");
    std::vector<DiagramGroup> objects;
    for (const auto& g : groups)
        objects.push_back(diagram_group(g));
    std::map<std::string, std::size_t> vertex;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        vertex[vertices[v]] = v;
    std::vector<std::vector<GroupElement>> images;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const std::string where = "arrow '" + arrows[a].name + "': ";
        if (!homs[a].is_array())
            schema(where + "expected a list of generator images");
        const GroupSpec& target = groups[vertex.at(arrows[a].to)];
        std::vector<GroupElement> imgs;
        for (const auto& x : homs[a])
            imgs.push_back(group_element(x, target, where));
        images.push_back(std::move(imgs));
    }
    return GroupDiagram(category(), std::move(objects), std::move(images));
}

AbelianDiagram InputDocument::abelian_diagram() const
{
    if (!is_abelian())
        return abelianize(group_diagram());
    std::vector<FpAbelianGroup> objects;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        objects.push_back(abelian_group(groups[v], "group '" + vertices[v] + "': "));
    std::map<std::string, std::size_t> vertex;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        vertex[vertices[v]] = v;
    std::vector<AbHom> maps;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const std::string where = "arrow '" + arrows[a].name + "': ";
        const FpAbelianGroup& src = objects[vertex.at(arrows[a].from)];
        const FpAbelianGroup& dst = objects[vertex.at(arrows[a].to)];
        IntMatrix m = abelian_matrix(homs[a], src.generator_count(), dst.generator_count(), where);
        try {
            maps.emplace_back(src, dst, std::move(m));
        } catch (const Error& e) {
            fail(e.kind(), where + e.what());
        }
    }
    return AbelianDiagram(category(), std::move(objects), std::move(maps));
}

InputDocument parse_document(const json& j)
{
    if (!j.is_object())
        schema("document must be a JSON object");
    static const std::set<std::string> known = {"graph", "poset", "groups", "homs", "tasks"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            schema("unknown top-level field '" + key + "'");

    InputDocument doc;
    const json& graph = field(j, "graph", "");
    const json& vertices = field(graph, "vertices", "graph: ");
    if (!vertices.is_array())
        schema("graph: 'vertices' must be an array of names");
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (!v.is_string())
            schema("graph: vertex names must be strings");
        if (!seen.insert(v.get<std::string>()).second)
            schema("graph: duplicate vertex '" + v.get<std::string>() + "'");
        doc.vertices.push_back(v.get<std::string>());
    }
    if (graph.contains("arrows")) {
        const json& arrows = graph.at("arrows");
        if (!arrows.is_array())
            schema("graph: 'arrows' must be an array");
        std::set<std::string> names;
        for (const auto& a : arrows) {
            InputDocument::ArrowSpec spec;
            for (auto [key, out] : {std::pair{"name", &spec.name}, {"from", &spec.from}, {"to", &spec.to}}) {
                const json& v = field(a, key, "graph: arrow: ");
                if (!v.is_string())
                    schema(std::string("graph: arrow field '") + key + "' must be a string");
                *out = v.get<std::string>();
            }
            const std::string where = "arrow '" + spec.name + "': ";
            if (!names.insert(spec.name).second)
                schema("graph: duplicate arrow '" + spec.name + "'");
            for (const auto& end : {spec.from, spec.to})
                if (!seen.count(end))
                    schema(where + "unknown vertex '" + end + "'");
            doc.arrows.push_back(std::move(spec));
        }
    }
    if (j.contains("poset")) {
        if (!j.at("poset").is_boolean())
            schema("'poset' must be true or false");
        doc.poset = j.at("poset").get<bool>();
    }

    const json& groups = field(j, "groups", "");
    if (!groups.is_object())
        schema("'groups' must map vertex names to groups");
    for (const auto& [key, value] : groups.items())
        if (!seen.count(key))
            schema("group given for unknown vertex '" + key + "'");
    for (const auto& v : doc.vertices) {
        if (!groups.contains(v))
            schema("vertex '" + v + "' has no group");
        doc.groups.push_back(parse_group(groups.at(v), "group '" + v + "': "));
    }

    const json empty = json::object();
    const json& homs = j.contains("homs") ? j.at("homs") : empty;
    if (!homs.is_object())
        schema("'homs' must map arrow names to homomorphisms");
    for (const auto& [key, value] : homs.items()) {
        bool found = false;
        for (const auto& a : doc.arrows)
            found = found || a.name == key;
        if (!found)
            schema("homomorphism given for unknown arrow '" + key + "'");
    }
    for (const auto& a : doc.arrows) {
        if (!homs.contains(a.name))
            schema("arrow '" + a.name + "' has no homomorphism");
        doc.homs.push_back(homs.at(a.name));
    }
    if (j.contains("tasks")) {
        if (!j.at("tasks").is_array())
            schema("'tasks' must be an array");
        doc.tasks = j.at("tasks");
    }
    return doc;
}

InputDocument parse_document_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        schema(std::string("invalid JSON: ") + e.what());
    }
    return parse_document(j);
}

InputDocument read_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document_text(text.str());
}

json serialize(const InputDocument& doc)
{
    json arrows = json::array();
    for (const auto& a : doc.arrows)
        arrows.push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
    json groups = json::object();
    for (std::size_t v = 0; v < doc.vertices.size(); ++v)
        groups[doc.vertices[v]] = group_json(doc.groups[v]);
    json homs = json::object();
    for (std::size_t a = 0; a < doc.arrows.size(); ++a)
        homs[doc.arrows[a].name] = doc.homs[a];
    json j = {{"graph", {{"vertices", doc.vertices}, {"arrows", arrows}}},
              {"poset", doc.poset},
              {"groups", groups},
              {"homs", homs}};
    if (!doc.tasks.is_null())
        j["tasks"] = doc.tasks;
    return j;
}

}  // namespace dh
