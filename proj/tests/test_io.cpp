#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "lrclab/io.hpp"
#include "lrclab/presets.hpp"

using namespace lrclab;

TEST_SUITE("io") {

TEST_CASE("field description round-trips") {
    auto f = Field::make(6);
    auto j = field_json(*f);
    CHECK(j["m"] == 6);
    auto back = field_from_json(j);
    CHECK(back->modulus() == f->modulus());
    CHECK(back->generator() == f->generator());

    j["generator_bits"] = 7;  // not the canonical generator
    CHECK_THROWS_AS(field_from_json(j), UsageError);
}

TEST_CASE("places serialize to CSV and JSON with schema headers") {
    auto places = enumerate_places(TowerSpec::f4_tower(), 2);
    auto csv = places_csv(places);
    CHECK(csv.rfind("# lrclab-schema: places v1\n", 0) == 0);
    CHECK(csv.find("index,x0,x1,x2") != std::string::npos);
    // 8 places -> 2 header lines + 8 rows
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 10);

    auto j = places_json(places);
    CHECK(j["count"] == 8);
    CHECK(j["places"].size() == 8);
    CHECK(j["places"][0]["coords"].size() == 3);
}

TEST_CASE("split graph DOT export") {
    auto dot = split_graph_dot(split_graph(TowerSpec::f8_tower()));
    CHECK(std::count(dot.begin(), dot.end(), '>') == 12);  // one arrow per edge
    CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("generator matrix file carries the field model and all rows") {
    auto code = build_preset("f4-rem42a");
    std::ostringstream os;
    write_genmatrix(os, code);
    auto text = os.str();
    CHECK(text.rfind("# lrclab-schema: genmatrix v1\n", 0) == 0);
    CHECK(text.find("n=8 k_nominal=4 m=2 modulus=0x7") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);  // schema + header + 4 rows
}

TEST_CASE("distance report JSON") {
    DistanceReport rep;
    rep.d_lower = 4;
    rep.lower_provenance = "degree-bound";
    rep.d_upper = 4;
    rep.upper_provenance = "explicit-codeword";
    rep.exact = true;
    auto j = distance_report_json(rep);
    CHECK(j["d_lower"] == 4);
    CHECK(j["d_upper_provenance"] == "explicit-codeword");
    CHECK(j["exact"] == true);
}

TEST_CASE("scatter CSV schema") {
    auto rows = compare_points(table1_points(8), 8);
    auto csv = scatter_csv(rows);
    CHECK(csv.rfind("# lrclab-schema: scatter v1\n", 0) == 0);
    CHECK(csv.find("label,n,k,d,r,delta_num,delta_den,R_num,R_den,btv_ok,paper_ok,gv_ok") !=
          std::string::npos);
    CHECK(csv.find("gs-thm34-q8,3584,1400,1216,7,19,56,25,64") != std::string::npos);
    CHECK(csv.find("gs-thm36-q8,3584,1848,704,7,11,56,33,64") != std::string::npos);
}

TEST_CASE("code params JSON reports measured and claimed values") {
    auto code = build_preset("f8-prop44");
    auto j = code_params_json(code);
    CHECK(j["n"] == 24);
    CHECK(j["rank"] == 10);
    CHECK(j["r"] == 1);
    CHECK(j["claimed"]["d"] == 4);
}

}  // TEST_SUITE
