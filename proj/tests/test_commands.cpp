#include "doctest.h"

#include "dh/commands.hpp"

#include <string>

using namespace dh;

namespace {

InputDocument fixture(const std::string& name) { return read_document(std::string(DH_FIXTURES) + "/" + name); }

RunOptions max_dim(std::size_t n)
{
    RunOptions o;
    o.max_dim = n;
    return o;
}

}  // namespace

TEST_CASE("colim")
{
    Report r = run("colim", fixture("expar1.json"));
    CHECK(r.status == 0);
    CHECK(r.results["colim"] == "Z/2");
    CHECK(r.results["order"] == 2);
    CHECK(run("colim", fixture("expar1_z2.json")).results["colim"] == "0");
    CHECK(run("colim", fixture("pararrows.json")).results["colim"] == "Z/2");

    nlohmann::json free2 = {{"graph", {{"vertices", {"a"}}}}, {"groups", {{"a", {{"kind", "free"}, {"rank", 2}}}}}};
    RunOptions tiny;
    tiny.max_cosets = 100;
    Report unknown = run("colim", parse_document(free2), tiny);
    CHECK(unknown.status == 3);
    CHECK_FALSE(unknown.warnings.empty());
}

TEST_CASE("connectivity")
{
    Report r = run("connectivity", fixture("expar2.json"), max_dim(3));
    CHECK(r.status == 0);
    CHECK(r.results["cocon"] == 2);
    CHECK(r.results["group"] == "Z/3");
    REQUIRE(r.results["trail"].size() == 2);
    CHECK(r.results["trail"][0]["colim_H"] == "0");
    CHECK(r.results["trail"][0]["coLim_1_H"] == "0");
    CHECK(r.results["trail"][1]["colim_H"] == "Z/3");
    CHECK(r.results["trail"][1]["coLim_1_H"] == "0");

    Report s = run("connectivity", fixture("sphere.json"));
    CHECK(s.results["cocon"] == 1);
    CHECK(s.results["group"] == "Z^1");

    Report low = run("connectivity", fixture("expar2.json"), max_dim(1));
    CHECK(low.results["cocon"].is_null());
    CHECK(low.results["lower_bound"] == 2);

    CHECK_THROWS_AS(run("connectivity", fixture("pararrows.json")), Error);
}

TEST_CASE("hocolim")
{
    RunOptions o;
    o.dim = 4;
    Report r = run("hocolim", fixture("expar2.json"), o);
    CHECK(r.results["reduced_homology"] == nlohmann::ordered_json({"0", "0", "Z/3"}));
    Report c = run("hocolim", fixture("contr.json"), o);
    CHECK(c.results["reduced_homology"] == nlohmann::ordered_json({"0", "Z^1", "0"}));
}

TEST_CASE("homology, flows and group homology")
{
    Report h = run("homology", fixture("pararrows.json"), max_dim(2));
    CHECK(h.results["coLim"] == nlohmann::ordered_json({"Z/2", "Z^1", "0"}));
    CHECK(h.warnings.empty());

    Report f = run("flows", fixture("pararrows.json"));
    CHECK(f.results["flows"] == "Z^1");
    CHECK(f.results["agree"] == true);
    CHECK(f.results["generators"].size() == 1);

    Report g = run("group-homology", fixture("expar1.json"));
    CHECK(g.results["groups"]["b"]["homology"] == nlohmann::ordered_json({"Z/2", "0", "Z/6"}));
    CHECK(g.results["groups"]["a"]["homology"] == nlohmann::ordered_json({"Z/3", "0", "Z/3"}));
    Report z = run("group-homology", fixture("sphere.json"), max_dim(2));
    CHECK(z.results["groups"]["a"]["method"] == "closed form");
    CHECK(z.results["groups"]["a"]["homology"] == nlohmann::ordered_json({"Z^1", "0"}));
}

TEST_CASE("verification commands")
{
    Report m = run("verify-main1", fixture("pararrows.json"));
    CHECK(m.status == 0);
    CHECK(m.results["ok"] == true);
    CHECK(m.results["cotriple_homology"] == nlohmann::ordered_json({"Z/2", "Z^1", "0"}));

    Report moore = run("moore", fixture("expar1.json"));
    CHECK(moore.status == 0);
    CHECK(moore.results["consistent"] == true);

    for (auto name : {"pararrows.json", "expar1.json", "expar2.json", "sphere.json"}) {
        Report v = run("verify", fixture(name));
        CHECK(v.status == 0);
        CHECK(v.results["failed"] == 0);
        CHECK(v.results["passed"].get<int>() >= 7);
    }
}

TEST_CASE("tasks")
{
    Report r = run("tasks", fixture("sphere.json"));
    REQUIRE(r.results["tasks"].size() == 2);
    CHECK(r.results["tasks"][0]["results"]["cocon"] == 1);
    CHECK(r.results["tasks"][1]["results"]["reduced_homology"] == nlohmann::ordered_json({"0", "Z^1"}));
    CHECK_THROWS_AS(run("tasks", fixture("expar1.json")), Error);
    CHECK_THROWS_AS(run("frobnicate", fixture("expar1.json")), Error);
}

TEST_CASE("json output is deterministic")
{
    RunOptions o;
    o.seed = 7;
    for (auto command : {"verify", "connectivity", "flows"}) {
        std::string a = run(command, fixture("sphere.json"), o).to_json().dump();
        std::string b = run(command, fixture("sphere.json"), o).to_json().dump();
        CHECK(a == b);
    }
}

TEST_CASE("exit statuses")
{
    CHECK(exit_status(ErrorKind::Schema) == 1);
    CHECK(exit_status(ErrorKind::Validation) == 1);
    CHECK(exit_status(ErrorKind::BoundExceeded) == 2);
    CHECK(exit_status(ErrorKind::UnknownColim) == 3);
}
