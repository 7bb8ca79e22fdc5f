#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <embobs.h>

#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { embobs_string_free(s); }
    json parsed() const { return json::parse(std::string(s)); }
};

struct Cx {
    embobs_complex* k = nullptr;
    ~Cx() { embobs_complex_free(k); }
};

struct Qt {
    embobs_quotient* y = nullptr;
    ~Qt() { embobs_quotient_free(y); }
};

} // namespace

TEST_CASE("version and error strings")
{
    CHECK(std::string(embobs_version()) == "1.0.0");
    embobs_string_free(nullptr); // must be a no-op
}

TEST_CASE("complex handles and JSON round trip")
{
    Cx k;
    const char* text = R"({"vertices":["a","b","c"],"facets":[["a","b"],["b","c"]]})";
    REQUIRE(embobs_complex_from_json(text, &k.k) == EMBOBS_OK);
    CHECK(embobs_complex_num_vertices(k.k) == 3);
    CHECK(embobs_complex_dim(k.k) == 1);

    Str emitted;
    REQUIRE(embobs_complex_to_json(k.k, &emitted.s) == EMBOBS_OK);
    Cx reloaded;
    REQUIRE(embobs_complex_from_json(emitted.s, &reloaded.k) == EMBOBS_OK);
    Str again;
    REQUIRE(embobs_complex_to_json(reloaded.k, &again.s) == EMBOBS_OK);
    CHECK(std::string(emitted.s) == std::string(again.s));

    Cx bad;
    CHECK(embobs_complex_from_json("{not json", &bad.k) == EMBOBS_ERR_PARSE);
    CHECK(std::string(embobs_last_error()).size() > 0);
    CHECK(embobs_complex_from_json(R"({"vertices":["a"],"facets":[["z"]]})", &bad.k) ==
          EMBOBS_ERR_PARSE);
}

TEST_CASE("builtin complexes")
{
    Cx boundary;
    REQUIRE(embobs_complex_boundary_simplex(4, &boundary.k) == EMBOBS_OK);
    CHECK(embobs_complex_num_vertices(boundary.k) == 5);
    CHECK(embobs_complex_dim(boundary.k) == 3);

    Cx k5;
    REQUIRE(embobs_complex_skeleton(boundary.k, 1, &k5.k) == EMBOBS_OK);
    CHECK(embobs_complex_dim(k5.k) == 1);

    Cx rp2;
    REQUIRE(embobs_complex_minimal_rp2(&rp2.k) == EMBOBS_OK);
    CHECK(embobs_complex_num_vertices(rp2.k) == 6);

    Cx bad;
    CHECK(embobs_complex_boundary_simplex(0, &bad.k) == EMBOBS_ERR_INVALID);
    CHECK(embobs_complex_skeleton(nullptr, 1, &bad.k) == EMBOBS_ERR_INVALID);
}

TEST_CASE("characteristic class reports")
{
    Str dual;
    REQUIRE(embobs_dualsw_rp(4, &dual.s) == EMBOBS_OK);
    json jd = dual.parsed();
    CHECK(jd["D"] == 7);
    CHECK(jd["dual_total"][1] == json::array({"T"}));
    CHECK(jd["dual_total"][4] == json::array());

    Str capd;
    REQUIRE(embobs_capd_rp(6, &capd.s) == EMBOBS_OK);
    CHECK(capd.parsed()["D"] == 7);

    Str div3, div4;
    REQUIRE(embobs_division_rp(2, 3, &div3.s) == EMBOBS_OK);
    CHECK(div3.parsed()["exists"] == false);
    REQUIRE(embobs_division_rp(2, 4, &div4.s) == EMBOBS_OK);
    CHECK(div4.parsed()["exists"] == true);
    CHECK(div4.parsed()["witness"] == "t + T");

    Str bad;
    CHECK(embobs_dualsw_rp(0, &bad.s) == EMBOBS_ERR_INVALID);
    CHECK(embobs_division_rp(2, 2, &bad.s) == EMBOBS_ERR_INVALID);

    // presented total class: the RP^4 data
    const char* rp4 = R"({
      "dimension": 4,
      "generators": [{"name": "T", "degree": 1, "truncation": 5}],
      "total": [["1"], ["T"], [], [], ["T^4"]]})";
    Str from_total;
    REQUIRE(embobs_dualsw_total(rp4, &from_total.s) == EMBOBS_OK);
    CHECK(from_total.parsed()["D"] == 7);

    CHECK(embobs_dualsw_total("{}", &bad.s) == EMBOBS_ERR_PARSE);
}

TEST_CASE("quotient handles")
{
    Cx boundary;
    REQUIRE(embobs_complex_boundary_simplex(4, &boundary.k) == EMBOBS_OK);

    Qt y;
    REQUIRE(embobs_quotient_build(boundary.k, "full", nullptr, -1, &y.y) == EMBOBS_OK);
    int index = -2;
    REQUIRE(embobs_quotient_z2_index(y.y, &index) == EMBOBS_OK);
    CHECK(index == 3);

    int nonzero = -1;
    REQUIRE(embobs_quotient_euler_power_nonzero(y.y, 3, &nonzero) == EMBOBS_OK);
    CHECK(nonzero == 1);
    REQUIRE(embobs_quotient_euler_power_nonzero(y.y, 4, &nonzero) == EMBOBS_OK);
    CHECK(nonzero == 0);
    CHECK(embobs_quotient_euler_power_nonzero(y.y, -1, &nonzero) == EMBOBS_ERR_INVALID);

    Qt capped;
    REQUIRE(embobs_quotient_build(boundary.k, "cap:1", nullptr, -1, &capped.y) == EMBOBS_OK);
    CHECK(embobs_quotient_euler_power_nonzero(capped.y, 2, &nonzero) == EMBOBS_ERR_INVALID);

    Qt bad;
    CHECK(embobs_quotient_build(boundary.k, "nonsense", nullptr, -1, &bad.y) ==
          EMBOBS_ERR_PARSE);
    CHECK(embobs_quotient_build(nullptr, "full", nullptr, -1, &bad.y) == EMBOBS_ERR_INVALID);
}

TEST_CASE("index report")
{
    Cx boundary, k5;
    REQUIRE(embobs_complex_boundary_simplex(4, &boundary.k) == EMBOBS_OK);
    REQUIRE(embobs_complex_skeleton(boundary.k, 1, &k5.k) == EMBOBS_OK);

    Str report;
    REQUIRE(embobs_index_report(k5.k, "full", nullptr, -1, 1, &report.s) == EMBOBS_OK);
    json j = report.parsed();
    CHECK(j["index"] == 2);
    CHECK(j["summary"]["pair_cells_per_degree"] == json::array({20, 60, 30}));
    CHECK(j["summary"]["orbit_cells_per_degree"] == json::array({10, 30, 15}));
    CHECK(j["euler_power_cocycles"].size() == 3);

    // the family mode reduces to the subcomplex A
    const char* family = R"({"kind": "skeleton", "m": 2})";
    Str fam_report;
    REQUIRE(embobs_index_report(boundary.k, "family", family, -1, 0, &fam_report.s) ==
            EMBOBS_OK);
    CHECK(fam_report.parsed()["index"] == 2);
    CHECK(fam_report.parsed()["subcomplex_size"] == 15);
}

TEST_CASE("cover check verdicts")
{
    Cx boundary;
    REQUIRE(embobs_complex_boundary_simplex(3, &boundary.k) == EMBOBS_OK);

    int holds = -1;
    Str good;
    REQUIRE(embobs_cover_check(boundary.k, R"({"kind":"skeleton","m":1})", 1, 1, 1, &holds,
                               &good.s) == EMBOBS_OK);
    CHECK(holds == 1);
    CHECK(good.parsed()["holds"] == true);

    Str broken;
    REQUIRE(embobs_cover_check(boundary.k, R"({"kind":"explicit","members":[[]]})", 1, 1, 1,
                               &holds, &broken.s) == EMBOBS_OK);
    CHECK(holds == 0);
    json cj = broken.parsed();
    CHECK(cj["holds"] == false);
    CHECK(cj["counterexample"]["I"] == json::array({"v0"}));
    CHECK(cj["counterexample"]["J"] == json::array({"v1"}));

    Str bad;
    CHECK(embobs_cover_check(boundary.k, R"({"kind":"skeleton","m":1})", 1, 2, 1, &holds,
                             &bad.s) == EMBOBS_ERR_PARSE);
}

TEST_CASE("coincidence reports and random maps")
{
    Cx boundary;
    REQUIRE(embobs_complex_boundary_simplex(3, &boundary.k) == EMBOBS_OK);

    Str map1, map2;
    REQUIRE(embobs_random_plmap(boundary.k, 2, 7, 1000, &map1.s) == EMBOBS_OK);
    REQUIRE(embobs_random_plmap(boundary.k, 2, 7, 1000, &map2.s) == EMBOBS_OK);
    CHECK(std::string(map1.s) == std::string(map2.s));

    Str witnesses;
    REQUIRE(embobs_coincide(boundary.k, map1.s, -1, 1, &witnesses.s) == EMBOBS_OK);
    json w = witnesses.parsed();
    CHECK(w["witness_count"].get<int>() >= 1);

    Str bad;
    CHECK(embobs_coincide(boundary.k, "{}", -1, 1, &bad.s) == EMBOBS_ERR_PARSE);
    CHECK(embobs_random_plmap(boundary.k, 0, 1, 10, &bad.s) == EMBOBS_ERR_INVALID);
}

TEST_CASE("ktheory report")
{
    Str report;
    REQUIRE(embobs_ktheory(4, 3, 5, &report.s) == EMBOBS_OK);
    json j = report.parsed();
    CHECK(j["atiyah_bound"] == 8);
    CHECK(j["gamma"][1]["mu"] == "3");
    CHECK(j["gamma"][0]["free"] == "1");

    Str bad;
    CHECK(embobs_ktheory(0, 1, 3, &bad.s) == EMBOBS_ERR_INVALID);
}

TEST_CASE("fh verdict")
{
    int ok = -1;
    Str report;
    REQUIRE(embobs_fh_admissible(1, 1, 2, 1, 3, &ok, &report.s) == EMBOBS_OK);
    CHECK(ok == 1);
    CHECK(report.parsed()["admissible"] == true);

    REQUIRE(embobs_fh_admissible(1, 2, 3, 1, 9, &ok, nullptr) == EMBOBS_OK);
    CHECK(ok == 0);
}
