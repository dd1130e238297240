#include "doctest.h"
#include "ribbonmod/report.hpp"

using namespace ribbonmod;

TEST_CASE("component rows") {
    ComponentDescriptor c{ComponentKind::QlfCompleteType, {2, 1, 1, -1}, std::nullopt, 10, {true, true}};
    Report r = components_report(Json{{"gbar", 2}}, {c});
    CHECK(r.status == ReportStatus::Conjectural);
    CHECK(format_report(r, ReportFormat::Csv) == "kind,r0,r1,d0,d1,index,dimension\nqlf,2,1,1,-1,,10\n");

    auto j = Json::parse(format_report(r, ReportFormat::Json));
    CHECK(j["status"] == "conjectural");
    CHECK(j["components"][0]["index"].is_null());
    CHECK(j["components"][0]["d1"] == -1);

    ComponentDescriptor g{ComponentKind::GeneralizedVectorBundle, {1, 1, 2, 0}, 2, 5, {true, true}};
    auto row = component_row(g);
    CHECK(std::get<std::string>(row[0]) == "gvb");
    CHECK(std::get<Int>(row[5]) == 2);
}

TEST_CASE("empty component list") {
    Report r = components_report(Json{{"rank", 2}}, {});
    auto text = format_report(r, ReportFormat::Json);
    CHECK(text.find("\"components\": []") != std::string::npos);
    CHECK(format_report(r, ReportFormat::Csv) == "kind,r0,r1,d0,d1,index,dimension\n");
}

TEST_CASE("json key order and layout are stable") {
    Report r;
    r.command = "demo";
    r.query = Json{{"b", 1}, {"a", 2}};
    r.anchor = "x";
    r.columns = {"name", "value", "flag"};
    r.rows = {{Cell{std::string("p")}, Cell{Int{3}}, Cell{true}}, {Cell{std::string("q")}, Cell{}, Cell{false}}};
    r.notes = {"note one"};
    auto s = format_report(r, ReportFormat::Json);
    CHECK(s.back() == '\n');
    CHECK(s.find("\"command\"") < s.find("\"query\""));
    CHECK(s.find("\"query\"") < s.find("\"status\""));
    CHECK(s.find("\"b\"") < s.find("\"a\""));
    CHECK(s.find("\"results\"") < s.find("\"notes\""));
    CHECK(s == format_report(r, ReportFormat::Json));

    CHECK(format_report(r, ReportFormat::Csv) == "name,value,flag\np,3,true\nq,,false\n");

    auto t = format_report(r, ReportFormat::Text);
    CHECK(t.find("name  value  flag") != std::string::npos);
    CHECK(t.find("q     -      false") != std::string::npos);
    CHECK(t.find("note one") != std::string::npos);
}

TEST_CASE("csv round trip of a table") {
    Report r;
    r.command = "rank3";
    r.columns = {"d0", "d1", "verdict"};
    for (Int d1 = -3; d1 <= 0; ++d1) r.rows.push_back({Cell{Int{0}}, Cell{d1}, Cell{std::string("Stable")}});
    auto csv = format_report(r, ReportFormat::Csv);
    std::vector<std::vector<std::string>> parsed;
    std::stringstream ss(csv);
    for (std::string line; std::getline(ss, line);) {
        std::vector<std::string> fields;
        std::stringstream ls(line);
        for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
        parsed.push_back(fields);
    }
    REQUIRE(parsed.size() == r.rows.size() + 1);
    CHECK(parsed[0] == r.columns);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(std::stoll(parsed[i + 1][1]) == std::get<Int>(r.rows[i][1]));
        CHECK(parsed[i + 1][2] == std::get<std::string>(r.rows[i][2]));
    }
}
