#include <doctest.h>

#include <divcor/config.hpp>
#include <divcor/errors.hpp>

namespace {
using divcor::KeyValueConfig;
}

TEST_CASE("key=value parsing with comments and whitespace") {
    const auto cfg = KeyValueConfig::from_string(
        "# header comment\n"
        "alpha = 3\n"
        "name= run-a \n"
        "\n"
        "tol = 1e-6  \n"
        "shifts = 0.1, -0.2,0.3\n");
    CHECK(cfg.has("alpha"));
    CHECK(cfg.get_int("alpha", 0) == 3);
    CHECK(cfg.get("name") == "run-a");
    CHECK(cfg.get_double("tol", 0.0) == doctest::Approx(1e-6));
    const auto shifts = cfg.get_list("shifts");
    REQUIRE(shifts.size() == 3);
    CHECK(shifts[1] == doctest::Approx(-0.2));
    CHECK(cfg.get_list("absent").empty());
    CHECK(cfg.get("absent", "fallback") == "fallback");
    CHECK(cfg.get_uint("absent", 7) == 7);
}

TEST_CASE("malformed input is rejected with context") {
    CHECK_THROWS_AS((void)KeyValueConfig::from_string("novalue\n"), divcor::ConfigError);
    const auto cfg = KeyValueConfig::from_string("x = 12abc\ny = 1.5\n");
    CHECK_THROWS_AS((void)cfg.get_int("x", 0), divcor::ConfigError);
    CHECK_THROWS_AS((void)cfg.get_int("y", 0), divcor::ConfigError);
    CHECK_THROWS_AS((void)cfg.get("missing"), divcor::ConfigError);
    CHECK_THROWS_AS((void)KeyValueConfig::from_file("/nonexistent/path.cfg"),
                    divcor::ConfigError);
}

TEST_CASE("later assignments win and set() overrides") {
    auto cfg = KeyValueConfig::from_string("a = 1\na = 2\n");
    CHECK(cfg.get_int("a", 0) == 2);
    cfg.set("a", "5");
    CHECK(cfg.get_int("a", 0) == 5);
}
