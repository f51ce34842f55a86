#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fishlab/verify.hpp"

using namespace fishlab;

TEST_CASE("fault injection: a corrupted phi is caught with a small counterexample") {
    // swap the images of two weight-3 matrices
    auto corrupted = [](const FishburnMatrix& m) {
        auto twos = FishburnMatrix::validate({{2, 1}, {0, 1}});
        auto other = FishburnMatrix::validate({{1, 2}, {0, 1}});
        if (m == twos) return phi(other);
        if (m == other) return phi(twos);
        return phi(m);
    };
    auto report = checks::thm_fish1(4, corrupted);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.counterexample.empty());
    // the witness appears at weight <= 4, printed as a single-line matrix
    CHECK(report.counterexample.find("at") != std::string::npos);
}

TEST_CASE("honest phi passes the same check") {
    auto report = checks::thm_fish1(4);
    CHECK(report.pass);
}

TEST_CASE("degenerate bounds still pass") {
    SuiteOptions options;
    options.max_weight = 1;
    options.max_dyck_order = 1;
    options.series_degree = 1;
    auto reports = run_suite(options);
    for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.pass);
    }
}

TEST_CASE("bounds above the cap are rejected") {
    SuiteOptions options;
    options.max_weight = max_weight_cap() + 1;
    CHECK_THROWS_AS(run_suite(options), std::invalid_argument);
}

TEST_CASE("distribution tables") {
    // fig-biject style: weight 5, (ne, lc) joint counts are symmetric
    auto t = distribution_table(ObjectKind::Matrices, 5, {"ne", "lc"});
    auto cell = [&](int a, int b) -> std::int64_t {
        for (const auto& [key, count] : t.rows)
            if (key == std::vector<int>{a, b}) return count;
        return 0;
    };
    CHECK(cell(3, 2) == cell(2, 3));
    CHECK(cell(3, 2) > 0);
    std::int64_t total = 0;
    for (const auto& [key, count] : t.rows) total += count;
    CHECK(total == 53);

    // Narayana row 1,3,1
    auto peas = distribution_table(ObjectKind::Dyck, 3, {"pea"});
    REQUIRE(peas.rows.size() == 3);
    CHECK(peas.rows[0].second == 1);
    CHECK(peas.rows[1].second == 3);
    CHECK(peas.rows[2].second == 1);

    // primitive NW-free count at weight 4 is the Motzkin number 4
    auto motz = distribution_table(ObjectKind::Matrices, 4, {},
                                   {.primitive_only = true, .avoid = AvoidFilter::StrictNW});
    REQUIRE(motz.rows.size() == 1);
    CHECK(motz.rows[0].second == 4);

    CHECK_THROWS_AS(distribution_table(ObjectKind::Matrices, 3, {"nope"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(distribution_table(ObjectKind::Dyck, 3, {"nope"}), std::invalid_argument);
}

TEST_CASE("table formats") {
    auto t = distribution_table(ObjectKind::Dyck, 3, {"pea"});
    CHECK(table_to_csv(t) == "pea,count\n1,1\n2,3\n3,1\n");
    CHECK(table_to_json(t) ==
          R"([{"pea":1,"count":1},{"pea":2,"count":3},{"pea":3,"count":1}])");
    CHECK(table_to_text(t) == "pea\tcount\n1\t1\n2\t3\n3\t1\n");
}

TEST_CASE("parallel suite matches serial suite") {
    SuiteOptions serial;
    serial.max_weight = 3;
    serial.max_dyck_order = 4;
    serial.series_degree = 4;
    auto a = run_suite(serial);
    SuiteOptions parallel = serial;
    parallel.jobs = 4;
    auto b = run_suite(parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
    }
}
