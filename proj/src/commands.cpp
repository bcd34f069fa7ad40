#include "dh/commands.hpp"

#include "dh/connectivity.hpp"
#include "dh/cotriple.hpp"
#include "dh/spaces.hpp"

#include <functional>
#include <map>
#include <random>

namespace dh {

using nlohmann::ordered_json;

namespace {

ordered_json number(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

ordered_json vector_json(const IntVector& v)
{
    ordered_json out = ordered_json::array();
    for (const auto& x : v)
        out.push_back(number(x));
    return out;
}

std::string colim_string(const ColimResult& r)
{
    switch (r.kind) {
    case ColimResult::Kind::Trivial: return "0";
    case ColimResult::Kind::Unknown: return "unknown";
    case ColimResult::Kind::Finite: break;
    }
    if (r.group.is_abelian())
        return abelianization(r.group).group.to_string();
    return "non-abelian group of order " + std::to_string(r.group.order());
}

FpAbelianGroup colim_abelianization(const ColimResult& r)
{
    if (r.kind == ColimResult::Kind::Unknown)
        fail(ErrorKind::UnknownColim, "colimit is " + r.describe());
    if (r.is_trivial())
        return FpAbelianGroup();
    return abelianization(r.group).group;
}

std::size_t hocolim_dim(const RunOptions& opts) { return opts.dim.value_or(opts.max_dim + 1); }

void require_group(const InputDocument& doc, const std::string& command)
{
    if (doc.is_abelian())
        fail(ErrorKind::InvalidArgument, "'" + command + "' needs a group diagram, not an abelian one");
}

AbelianDiagram abelian_input(const InputDocument& doc, Report& report)
{
    if (!doc.is_abelian())
        report.warnings.push_back("group diagram abelianized");
    return doc.abelian_diagram();
}

Report colim_command(const InputDocument& doc, const RunOptions& opts)
{
    Report r;
    if (doc.is_abelian()) {
        FpAbelianGroup g = colim_ab(doc.abelian_diagram());
        r.results["kind"] = "abelian";
        r.results["colim"] = g.to_string();
        r.text.push_back("colim = " + g.to_string());
        return r;
    }
    GroupDiagram d = doc.group_diagram();
    ColimResult c = colim_group(d, opts.max_cosets);
    r.results["kind"] = c.kind == ColimResult::Kind::Finite    ? "finite"
                        : c.kind == ColimResult::Kind::Trivial ? "trivial"
                                                               : "unknown";
    r.results["colim"] = colim_string(c);
    r.results["description"] = c.describe();
    if (c.kind == ColimResult::Kind::Unknown) {
        r.results["bound"] = c.bound;
        r.warnings.push_back("colimit unknown: coset enumeration exceeded " + std::to_string(c.bound) + " cosets");
        r.status = 3;
    } else {
        r.results["order"] = c.group.order();
        r.results["method"] = c.method;
        r.results["abelianization"] = colim_abelianization(c).to_string();
    }
    r.text.push_back("colim = " + colim_string(c));
    r.text.push_back("  " + c.describe() + (c.method.empty() ? "" : " (" + c.method + ")"));
    return r;
}

Report homology_command(const InputDocument& doc, const RunOptions& opts)
{
    Report r;
    AbelianDiagram a = abelian_input(doc, r);
    ordered_json groups = ordered_json::array();
    for (std::size_t n = 0; n <= opts.max_dim; ++n) {
        FpAbelianGroup g = colim_n(a, n);
        groups.push_back(g.to_string());
        r.text.push_back("coLim_" + std::to_string(n) + " = " + g.to_string());
    }
    r.results["coLim"] = groups;
    return r;
}

Report flows_command(const InputDocument& doc, const RunOptions&)
{
    Report r;
    AbelianDiagram a = abelian_input(doc, r);
    FpAbelianGroup flows = flow_subgroup(a);
    FpAbelianGroup c1 = colim_n(a, 1);
    r.results["flows"] = flows.to_string();
    r.results["coLim_1"] = c1.to_string();
    r.results["agree"] = flows == c1;
    ordered_json gens = ordered_json::array();
    const Graph& graph = a.base().graph();
    for (const Flow& f : flow_generators(a)) {
        ordered_json g = ordered_json::object();
        for (std::size_t k = 0; k < f.components.size(); ++k)
            g[graph.arrow(k).name] = vector_json(f.components[k]);
        gens.push_back(g);
    }
    r.results["generators"] = gens;
    r.text.push_back("flows = " + flows.to_string());
    r.text.push_back("coLim_1 = " + c1.to_string());
    r.text.push_back(std::to_string(gens.size()) + " flow generators");
    for (const auto& g : gens)
        r.text.push_back("  " + g.dump());
    if (!(flows == c1)) {
        r.warnings.push_back("flow subgroup differs from coLim_1");
        r.status = 1;
    }
    return r;
}

Report connectivity_command(const InputDocument& doc, const RunOptions& opts)
{
    require_group(doc, "connectivity");
    Report r;
    ConnectivityReport c = connectivity(doc.group_diagram(), opts.max_dim, opts.max_cosets);
    r.results["colim"] = colim_string(c.colim);
    if (c.cocon)
        r.results["cocon"] = *c.cocon;
    else {
        r.results["cocon"] = nullptr;
        r.results["lower_bound"] = c.lower_bound;
    }
    r.results["group"] = c.first_group ? ordered_json(c.first_group->to_string())
                         : c.cocon && *c.cocon == 0 ? ordered_json(colim_string(c.colim))
                                                    : ordered_json(nullptr);
    ordered_json trail = ordered_json::array();
    for (const auto& s : c.trail) {
        ordered_json row = {{"dimension", s.dimension},
                            {"colim_H", s.left.to_string()},
                            {"coLim_1_H", s.right.to_string()},
                            {"resolution", to_string(s.resolution)}};
        auto m = s.middle();
        row["middle"] = m ? ordered_json(m->to_string()) : ordered_json(nullptr);
        trail.push_back(row);
        r.text.push_back("n=" + std::to_string(s.dimension) + ": colim H_" + std::to_string(s.dimension) + " = " +
                         s.left.to_string() + ", coLim_1 H_" + std::to_string(s.dimension - 1) + " = " +
                         s.right.to_string() + " (" + to_string(s.resolution) + ")");
    }
    r.results["trail"] = trail;
    r.text.insert(r.text.begin(), "colim = " + colim_string(c.colim));
    if (c.cocon)
        r.text.push_back("cocon = " + std::to_string(*c.cocon) + ", colim_" + std::to_string(*c.cocon) + " = " +
                         c.first_group_description());
    else
        r.text.push_back("cocon >= " + std::to_string(c.lower_bound));
    if (c.cocon && *c.cocon > 0 && !c.first_group) {
        r.warnings.push_back("ambiguous extension at dimension " + std::to_string(*c.cocon));
        r.status = 3;
    }
    return r;
}

Report hocolim_command(const InputDocument& doc, const RunOptions& opts)
{
    require_group(doc, "hocolim");
    const std::size_t dim = hocolim_dim(opts);
    if (dim < 2)
        fail(ErrorKind::InvalidArgument, "--dim must be at least 2");
    Report r;
    FiniteSimplicialSet x = hocolim_pointed(space_diagram(doc.group_diagram(), dim), dim);
    ordered_json counts = ordered_json::array(), nondeg = ordered_json::array(), homology = ordered_json::array();
    for (std::size_t n = 0; n <= dim; ++n) {
        counts.push_back(x.count(n));
        nondeg.push_back(x.nondegenerate_count(n));
    }
    for (std::size_t k = 1; k < dim; ++k) {
        FpAbelianGroup h = reduced_homology(x, k);
        homology.push_back(h.to_string());
        r.text.push_back("H~_" + std::to_string(k) + " = " + h.to_string());
    }
    r.results["dim"] = dim;
    r.results["simplices"] = counts;
    r.results["nondegenerate"] = nondeg;
    r.results["reduced_homology"] = homology;
    r.text.insert(r.text.begin(), "hocolim truncated at dimension " + std::to_string(dim) + ", " +
                                      std::to_string(x.total_count()) + " simplices");
    return r;
}

Report group_homology_command(const InputDocument& doc, const RunOptions& opts)
{
    require_group(doc, "group-homology");
    Report r;
    GroupDiagram d = doc.group_diagram();
    ordered_json out = ordered_json::object();
    for (std::size_t v = 0; v < d.object_count(); ++v) {
        const DiagramGroup& g = d.object(v);
        const auto* p = std::get_if<PermGroup>(&g);
        ordered_json row = ordered_json::array();
        std::string line = doc.vertices[v] + " (" + describe(g) + "):";
        for (std::size_t n = 1; n <= opts.max_dim; ++n) {
            FpAbelianGroup h = p ? group_homology(*p, n) : closed_form_homology(std::get<SymbolicGroup>(g), n);
            row.push_back(h.to_string());
            line += " H_" + std::to_string(n) + " = " + h.to_string() + (n < opts.max_dim ? "," : "");
        }
        out[doc.vertices[v]] = {{"group", describe(g)}, {"method", p ? "bar resolution" : "closed form"},
                                {"homology", row}};
        r.text.push_back(line);
    }
    r.results["groups"] = out;
    return r;
}

ordered_json group_list(const std::vector<FpAbelianGroup>& gs)
{
    ordered_json out = ordered_json::array();
    for (const auto& g : gs)
        out.push_back(g.to_string());
    return out;
}

Report verify_main1_command(const InputDocument& doc, const RunOptions& opts)
{
    Report r;
    Main1Report m = verify_main1(abelian_input(doc, r), opts.max_dim);
    r.results["top"] = m.top;
    r.results["levels_isomorphic"] = m.levels_isomorphic;
    r.results["faces_commute"] = m.faces_commute;
    r.results["degeneracies_commute"] = m.degeneracies_commute;
    r.results["homology_equal"] = m.homology_equal;
    r.results["cotriple_homology"] = group_list(m.cotriple_homology);
    r.results["replacement_homology"] = group_list(m.replacement_homology);
    r.results["problems"] = m.problems;
    r.results["ok"] = m.ok();
    for (std::size_t n = 0; n < m.cotriple_homology.size(); ++n)
        r.text.push_back("pi_" + std::to_string(n) + " colim T A = " + m.cotriple_homology[n].to_string() +
                         ", coLim_" + std::to_string(n) + " A = " + m.replacement_homology[n].to_string());
    r.text.push_back(m.ok() ? "level isomorphisms commute with faces and degeneracies" : "verification failed");
    for (const auto& p : m.problems)
        r.text.push_back("  " + p);
    if (!m.ok())
        r.status = 1;
    return r;
}

Report moore_command(const InputDocument& doc, const RunOptions& opts)
{
    Report r;
    AbelianDiagram a = abelian_input(doc, r);
    if (opts.max_dim < 1)
        fail(ErrorKind::InvalidArgument, "--max-dim must be at least 1");
    SimplicialAbelianGroup s = replacement_group(a, opts.max_dim);
    ordered_json rows = ordered_json::array();
    bool consistent = true;
    for (std::size_t n = 0; n < opts.max_dim; ++n) {
        FpAbelianGroup moore = moore_homotopy(s, n), alt = alternating_homology(s, n), c = colim_n(a, n);
        ordered_json row = {{"n", n}, {"moore", moore.to_string()}, {"alternating", alt.to_string()},
                            {"coLim", c.to_string()}};
        std::string line = "n=" + std::to_string(n) + ": Moore " + moore.to_string() + ", alternating " +
                           alt.to_string() + ", coLim " + c.to_string();
        if (s.generated_by_degeneracies(n + 1)) {
            FpAbelianGroup f = degenerate_generation_formula(s, n);
            row["degenerate_formula"] = f.to_string();
            line += ", kernel formula " + f.to_string();
            consistent = consistent && f == moore;
        } else {
            row["degenerate_formula"] = nullptr;
        }
        consistent = consistent && moore == alt && alt == c;
        rows.push_back(row);
        r.text.push_back(line);
    }
    r.results["levels"] = rows;
    r.results["consistent"] = consistent;
    if (!consistent) {
        r.warnings.push_back("Moore, alternating and replacement homology disagree");
        r.status = 1;
    }
    return r;
}

struct Outcome {
    bool ok;
    std::string detail;
};

class CheckList {
public:
    void run(const std::string& name, const std::function<Outcome()>& body)
    {
        std::string status, detail;
        try {
            Outcome o = body();
            status = o.ok ? "pass" : "fail";
            detail = o.detail;
        } catch (const Error& e) {
            const bool skip = e.kind() == ErrorKind::PreconditionFailed || e.kind() == ErrorKind::UnknownColim ||
                              e.kind() == ErrorKind::BoundExceeded;
            status = skip ? "skipped" : "fail";
            detail = e.what();
        }
        counts_[status]++;
        checks_.push_back({{"name", name}, {"status", status}, {"detail", detail}});
    }

    void skip(const std::string& name, const std::string& why)
    {
        counts_["skipped"]++;
        checks_.push_back({{"name", name}, {"status", "skipped"}, {"detail", why}});
    }

    void finish(Report& r) const
    {
        r.results["checks"] = checks_;
        r.results["passed"] = count("pass");
        r.results["failed"] = count("fail");
        r.results["skipped"] = count("skipped");
        for (const auto& c : checks_) {
            std::string line = "[" + c["status"].get<std::string>() + "] " + c["name"].get<std::string>();
            if (!c["detail"].get<std::string>().empty())
                line += ": " + c["detail"].get<std::string>();
            r.text.push_back(line);
        }
        r.text.push_back(std::to_string(count("pass")) + " passed, " + std::to_string(count("fail")) + " failed, " +
                         std::to_string(count("skipped")) + " skipped");
        if (count("fail") > 0)
            r.status = 1;
    }

private:
    std::size_t count(const std::string& s) const
    {
        auto it = counts_.find(s);
        return it == counts_.end() ? 0 : it->second;
    }

    ordered_json checks_ = ordered_json::array();
    std::map<std::string, std::size_t> counts_;
};

Outcome problems_outcome(const std::vector<std::string>& problems, const std::string& ok_detail)
{
    if (problems.empty())
        return {true, ok_detail};
    return {false, problems.front() + (problems.size() > 1 ? " (+" + std::to_string(problems.size() - 1) + " more)" : "")};
}

Outcome equal_outcome(const FpAbelianGroup& a, const FpAbelianGroup& b, const std::string& what)
{
    return {a == b, what + ": " + a.to_string() + (a == b ? " = " : " != ") + b.to_string()};
}

void abelian_checks(const AbelianDiagram& a, const RunOptions& opts, std::mt19937_64& rng, CheckList& checks)
{
    const std::size_t top = std::max<std::size_t>(opts.max_dim, 2);
    checks.run("flow subgroup equals coLim_1", [&] {
        return equal_outcome(flow_subgroup(a), colim_n(a, 1), "flows vs coLim_1");
    });
    checks.run("sampled combinations of flow generators are flows", [&] {
        std::vector<Flow> gens = flow_generators(a);
        std::uniform_int_distribution<long> coef(-3, 3);
        for (int trial = 0; trial < 20 && !gens.empty(); ++trial) {
            Flow f = gens.front();
            for (auto& c : f.components)
                for (auto& x : c)
                    x = 0;
            for (const auto& g : gens) {
                const long k = coef(rng);
                for (std::size_t i = 0; i < f.components.size(); ++i)
                    for (std::size_t j = 0; j < f.components[i].size(); ++j)
                        f.components[i][j] += k * g.components[i][j];
            }
            if (!is_flow(a, f))
                return Outcome{false, "sample " + std::to_string(trial) + " is not a flow"};
        }
        return Outcome{true, std::to_string(gens.size()) + " generators"};
    });
    checks.run("Moore homotopy equals alternating homology and coLim_n", [&] {
        SimplicialAbelianGroup s = replacement_group(a, top);
        for (std::size_t n = 0; n < top; ++n) {
            FpAbelianGroup m = moore_homotopy(s, n), alt = alternating_homology(s, n), c = colim_n(a, n);
            if (!(m == alt) || !(alt == c))
                return Outcome{false, "n=" + std::to_string(n) + ": " + m.to_string() + ", " + alt.to_string() +
                                          ", " + c.to_string()};
        }
        return Outcome{true, "through n=" + std::to_string(top - 1)};
    });
    checks.run("replacement satisfies the simplicial identities", [&] {
        return problems_outcome(replacement_group(a, top).identity_violations(), "");
    });
    CotripleResolution res(a, std::min<std::size_t>(top, 3));
    checks.run("cotriple resolution identities", [&] { return problems_outcome(res.violations(), ""); });
    checks.run("sampled elements: augmentation coequalizes d_0 and d_1", [&] {
        std::uniform_int_distribution<long> coef(-5, 5);
        for (std::size_t c = 0; c < a.object_count(); ++c)
            for (int trial = 0; trial < 10; ++trial) {
                IntVector x(res.level(1, c).generator_count());
                for (auto& e : x)
                    e = coef(rng);
                IntVector u = res.augmentation(c).apply(res.face(1, 0, c).apply(x));
                IntVector v = res.augmentation(c).apply(res.face(1, 1, c).apply(x));
                if (!res.diagram().object(c).equal(u, v))
                    return Outcome{false, "object " + a.base().graph().vertex_name(c)};
            }
        return Outcome{true, ""};
    });
    checks.run("colim of the cotriple resolution matches the replacement", [&] {
        Main1Report m = verify_main1(a, std::min<std::size_t>(top, 3));
        return problems_outcome(m.ok() ? std::vector<std::string>{} : m.problems.empty()
                                                                         ? std::vector<std::string>{"mismatch"}
                                                                         : m.problems,
                                "through level " + std::to_string(m.top));
    });
}

void group_checks(const GroupDiagram& d, const RunOptions& opts, CheckList& checks)
{
    std::optional<ColimResult> colim;
    checks.run("colimit insertions commute with the arrows", [&] {
        colim = colim_group(d, opts.max_cosets);
        verify_colimit(d, *colim);
        return Outcome{true, colim_string(*colim)};
    });
    checks.run("normal-closure colimit agrees with coset enumeration", [&] {
        std::optional<ColimResult> fast = colim_by_normal_closure(d);
        if (!fast)
            fail(ErrorKind::PreconditionFailed, "the diagram does not have the coequalizer shape");
        ColimResult slow = colim_by_enumeration(d, opts.max_cosets);
        return Outcome{colimits_agree(d, *fast, slow), colim_string(*fast) + " vs " + colim_string(slow)};
    });
    checks.run("colim_0 of the abelianized diagram is the abelianized colimit", [&] {
        if (!colim)
            fail(ErrorKind::PreconditionFailed, "no colimit");
        return equal_outcome(colim_ab(abelianize(d)), colim_abelianization(*colim), "coLim_0 vs colim_ab");
    });
    if (d.base().is_poset()) {
        checks.skip("hocolim checks", "the space model needs a free category base");
        return;
    }
    const std::size_t dim = std::max<std::size_t>(hocolim_dim(opts), 2);
    std::optional<FiniteSimplicialSet> x;
    checks.run("hocolim satisfies the simplicial identities", [&] {
        x = hocolim_pointed(space_diagram(d, dim), dim);
        return problems_outcome(x->identity_violations(), std::to_string(x->total_count()) + " simplices");
    });
    checks.run("H~_1 of hocolim is the abelianized colimit", [&] {
        if (!x || !colim)
            fail(ErrorKind::PreconditionFailed, "hocolim or colimit unavailable");
        return equal_outcome(reduced_homology(*x, 1), colim_abelianization(*colim), "H~_1 vs colim_ab");
    });
    checks.run("first nonvanishing H~ of hocolim matches connectivity", [&] {
        if (!x)
            fail(ErrorKind::PreconditionFailed, "hocolim unavailable");
        ConnectivityReport c = connectivity(d, opts.max_dim, opts.max_cosets);
        if (!c.colim.is_trivial())
            fail(ErrorKind::PreconditionFailed, "the colimit is not trivial");
        const std::size_t reach = c.cocon ? std::min(*c.cocon + 1, dim - 1) : std::min(c.lower_bound, dim - 1);
        for (std::size_t k = 1; k <= reach; ++k) {
            FpAbelianGroup h = reduced_homology(*x, k);
            if (c.cocon && k == *c.cocon + 1) {
                if (!c.first_group)
                    fail(ErrorKind::PreconditionFailed, "ambiguous extension");
                return equal_outcome(h, *c.first_group, "H~_" + std::to_string(k) + " vs colim_" +
                                                             std::to_string(*c.cocon));
            }
            if (!h.is_trivial())
                return Outcome{false, "H~_" + std::to_string(k) + " = " + h.to_string() + " below cocon"};
        }
        return Outcome{true, "vanishing through H~_" + std::to_string(reach)};
    });
    checks.run("formal replacement satisfies the simplicial identities", [&] {
        if (!d.is_finite())
            fail(ErrorKind::PreconditionFailed, "the diagram has infinite objects");
        return problems_outcome(FormalReplacement(d, std::min<std::size_t>(opts.max_dim, 3)).identity_violations(), "");
    });
}

Report verify_command(const InputDocument& doc, const RunOptions& opts)
{
    Report r;
    std::mt19937_64 rng(opts.seed);
    CheckList checks;
    if (!doc.is_abelian())
        group_checks(doc.group_diagram(), opts, checks);
    AbelianDiagram a = doc.abelian_diagram();
    abelian_checks(a, opts, rng, checks);
    checks.finish(r);
    r.results["seed"] = opts.seed;
    return r;
}

Report tasks_command(const InputDocument& doc, const RunOptions& opts)
{
    Report r;
    ordered_json out = ordered_json::array();
    if (!doc.tasks.is_array())
        fail(ErrorKind::InvalidArgument, "the document has no tasks");
    for (const auto& t : doc.tasks) {
        if (!t.is_object() || !t.contains("command") || !t.at("command").is_string())
            fail(ErrorKind::Schema, "each task needs a 'command' string");
        const std::string command = t.at("command").get<std::string>();
        if (command == "tasks")
            fail(ErrorKind::Schema, "tasks cannot run 'tasks'");
        RunOptions o = opts;
        if (t.contains("max_dim"))
            o.max_dim = t.at("max_dim").get<std::size_t>();
        if (t.contains("dim"))
            o.dim = t.at("dim").get<std::size_t>();
        if (t.contains("max_cosets"))
            o.max_cosets = t.at("max_cosets").get<std::size_t>();
        if (t.contains("seed"))
            o.seed = t.at("seed").get<std::uint64_t>();
        ordered_json entry = {{"command", command}};
        r.text.push_back("== " + command);
        try {
            Report sub = run(command, doc, o);
            entry["status"] = sub.status;
            entry["results"] = sub.results;
            entry["warnings"] = sub.warnings;
            for (const auto& line : sub.text)
                r.text.push_back("  " + line);
            for (const auto& w : sub.warnings)
                r.warnings.push_back(command + ": " + w);
            r.status = std::max(r.status, sub.status);
        } catch (const Error& e) {
            entry["status"] = exit_status(e.kind());
            entry["error"] = e.what();
            r.text.push_back(std::string("  error: ") + e.what());
            r.status = std::max(r.status, exit_status(e.kind()));
        }
        out.push_back(entry);
    }
    r.results["tasks"] = out;
    return r;
}

using Command = Report (*)(const InputDocument&, const RunOptions&);

const std::vector<std::pair<std::string, Command>>& commands()
{
    static const std::vector<std::pair<std::string, Command>> table = {
        {"colim", colim_command},
        {"homology", homology_command},
        {"flows", flows_command},
        {"connectivity", connectivity_command},
        {"hocolim", hocolim_command},
        {"group-homology", group_homology_command},
        {"verify-main1", verify_main1_command},
        {"moore", moore_command},
        {"verify", verify_command},
        {"tasks", tasks_command},
    };
    return table;
}

}  // namespace

ordered_json Report::to_json() const
{
    return {{"command", command}, {"status", status}, {"results", results}, {"warnings", warnings}};
}

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : commands())
            out.push_back(c.first);
        return out;
    }();
    return names;
}

Report run(const std::string& command, const InputDocument& doc, const RunOptions& opts)
{
    for (const auto& [name, body] : commands())
        if (name == command) {
            Report r = body(doc, opts);
            r.command = command;
            return r;
        }
    fail(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
}

int exit_status(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BoundExceeded: return 2;
    case ErrorKind::UnknownColim: return 3;
    default: return 1;
    }
}

}  // namespace dh
