#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "qhilb/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = qhilb::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("appendix check")
{
    auto r = run({"appendix", "--check"});
    CHECK(r.code == qhilb::kExitOk);
    CHECK(r.parsed()["ok"] == true);
    CHECK(r.parsed()["rows"] == 13);
    auto bad = run({"appendix", "--check", "--golden", "/nonexistent/golden"});
    CHECK(bad.code == qhilb::kExitUsage);
}

TEST_CASE("castelnuovo subcommands")
{
    auto r = run({"castelnuovo", "enumerate", "--ne", "3", "--no", "3"});
    REQUIRE(r.code == 0);
    auto j = r.parsed();
    CHECK(j["count"] == 3);
    CHECK(j["polynomials"].size() == 3);
    CHECK(j["polynomials"][2]["s"] == json::array({1, 2, 2, 1}));

    CHECK(run({"castelnuovo", "count", "--ne", "3", "--no", "3"}).parsed()["count"] == 3);
    auto v = run({"castelnuovo", "validate", "1,3"});
    CHECK(v.code == qhilb::kExitCheckFailed);
    CHECK(v.parsed()["valid"] == false);
    CHECK(run({"castelnuovo", "validate", "1,2,2,1"}).code == 0);

    auto m = run({"castelnuovo", "membership", "--ne", "1", "--no", "2"}).parsed();
    CHECK(m["k"] == 1);
    CHECK(m["l"] == 0);
    CHECK(m["case"] == 1);

    auto tsv = run({"--tsv", "castelnuovo", "enumerate", "--ne", "3", "--no", "3"});
    CHECK(tsv.code == 0);
    CHECK(std::count(tsv.out.begin(), tsv.out.end(), '\n') == 4);
}

TEST_CASE("hilbert and ktheory subcommands")
{
    auto h = run({"hilbert", "expand", "--q", "1", "--order", "4"}).parsed();
    CHECK(h["coeffs"] == json::array({"1", "2", "4", "6", "9"}));
    CHECK(run({"ktheory", "chi", "1,0,0,0", "1,0,0,0"}).parsed()["chi"] == 1);
    auto s = run({"ktheory", "shift", "1,0,0,0", "--by", "-4"}).parsed();
    CHECK(s["class"] == json{{"r", 1}, {"a", 0}, {"b", -2}, {"c", 2}});
    auto l = run({"ktheory", "linear", "--m", "2", "--n", "0"}).parsed();
    CHECK(l["ne"] == 1);
    CHECK(l["no"] == 2);
    CHECK(run({"ktheory", "matrices"}).code == 0);
    CHECK(run({"betti", "enumerate", "--q", "2t^2-t^4"}).parsed()["count"] == 2);
}

TEST_CASE("JSON round trips through quiver and moduli commands")
{
    auto p = run({"quiver", "build", "point", "--points", "1:1,1:1,1:1,1:1"});
    REQUIRE(p.code == 0);
    CHECK(p.parsed()["dims"] == json::array({1, 1, 1, 1}));
    auto c = run({"quiver", "check", p.out});
    CHECK(c.code == 0);

    auto r = run({"quiver", "res", p.out});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["dims"] == json::array({1, 1, 1}));

    auto s = run({"--field", "fp:5", "moduli", "search", "--ne", "2", "--no", "1", "--p", "5", "--max-points", "2"});
    REQUIRE(s.code == 0);
    auto pts = s.parsed()["points"];
    REQUIRE(pts.size() == 2);
    for (const auto& pt : pts) {
        auto chk = run({"moduli", "check", pt.dump()});
        CHECK(chk.code == 0);
        auto t = run({"moduli", "tangent", pt.dump()});
        CHECK(t.code == 0);
    }

    auto cnt = run({"moduli", "count", "--ne", "1", "--no", "1", "--p", "3"});
    CHECK(cnt.parsed()["count"] == 24);
    CHECK(run({"moduli", "count", "--ne", "1", "--no", "1", "--p", "3", "--serial"}).parsed()["count"] == 24);
}

TEST_CASE("usage errors")
{
    auto r = run({"bogus"});
    CHECK(r.code == qhilb::kExitUsage);
    auto e = json::parse(r.err);
    CHECK(e["kind"] == "usage");
    CHECK(run({"castelnuovo", "count", "--ne", "x", "--no", "1"}).code == qhilb::kExitUsage);
    CHECK(run({"ktheory", "chi", "1,2,3", "1,0,0,0"}).code == qhilb::kExitUsage);
    CHECK(run({"quiver", "check", "{not json"}).code == qhilb::kExitUsage);
    CHECK(run({"moduli", "count", "--ne", "1", "--no", "1", "--p", "4"}).code == qhilb::kExitUsage);
}
