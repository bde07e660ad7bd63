#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "bxp/commands.hpp"
#include "bxp/instance.hpp"

#include "brute.hpp"

using namespace bxp;
using namespace bxp::cli;

namespace {
  std::string const pair4 = BXP_FIXTURE_DIR "/pair4.json";
  std::string const split = BXP_FIXTURE_DIR "/nonuniform3.json";

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  template <typename Options, typename Cmd>
  Run run(Cmd cmd, Options const& opts) {
    std::ostringstream out, err;
    int const          code = cmd(opts, out, err);
    return {code, out.str(), err.str()};
  }

  Run check(std::string const& file,
            std::string const& f,
            std::string const& g,
            Relation           r,
            Format             fmt = Format::text) {
    return run(cmd_check, CheckOptions{file, f, g, r, fmt});
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("instance parsing") {
    auto const inst = parse_instance(
        R"({"n": 4, "blocks": [[2,3],[0,1]], "f": [0,0,2,2], "g": [1,1,3,3]})");
    CHECK(inst.partition == Partition({{0, 1}, {2, 3}}));
    CHECK(inst.at("g") == Transformation({1, 1, 3, 3}));
    CHECK_THROWS_AS(inst.at("nope"), ParseError);

    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(parse_instance("[]"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"blocks": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "blocks": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "blocks": [[0],[0,1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "blocks": [[0,1]], "f": [0]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "blocks": [[0,1]], "f": [0,2]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "blocks": [[0,1]], "f": [0,-1]})"),
                    ParseError);

    CHECK(parse_partition_spec("[[2],[0,1]]") == Partition({{0, 1}, {2}}));
    CHECK_THROWS_AS(parse_partition_spec("[[0],[2]]"), ParseError);
    CHECK_THROWS_AS(parse_partition_spec("0,1"), ParseError);
  }

  TEST_CASE("parse, print, parse is the identity") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t const n      = 1 + rng() % 7;
      auto const        all    = brute::set_partitions(n);
      auto const&       blocks = all[rng() % all.size()];
      InstanceFile      inst{Partition(blocks), {}};
      std::size_t const count = rng() % 5;
      for (std::size_t k = 0; k < count; ++k) {
        std::vector<point_type> images(n);
        for (auto& y : images) {
          y = rng() % n;
        }
        std::string name = k % 2 ? "f" + std::to_string(k) : "map \"" + std::to_string(k) + "\"";
        inst.maps.emplace(name, Transformation(images));
      }
      auto const text = print_instance(inst);
      auto const back = parse_instance(text);
      CHECK(back == inst);
      CHECK(print_instance(back) == text);
    }
  }

  TEST_CASE("check") {
    auto r = check(pair4, "f", "f", Relation::EqL);
    CHECK(r.code == exit_yes);
    CHECK(r.out == "YES\nalpha: [0, 1]\n");

    r = check(pair4, "f", "g", Relation::EqD);
    CHECK(r.code == exit_yes);
    CHECK(r.out.starts_with("YES\n"));

    r = check(pair4, "f", "g", Relation::EqL);
    CHECK(r.code == exit_no);
    CHECK(r.out == "NO\n");

    r = check(pair4, "f", "g", Relation::EqR);
    CHECK(r.code == exit_yes);

    r = check(pair4, "h", "f", Relation::EqJ);
    CHECK(r.code == exit_no);

    r = check(pair4, "f", "s", Relation::EqL, Format::structured);
    CHECK(r.code == exit_yes);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["holds"] == true);
    CHECK(j["relation"] == "L");
    CHECK(j["alpha"] == std::vector<int>{1, 0});

    r = check(pair4, "f", "id", Relation::LeqJ, Format::structured);
    CHECK(r.code == exit_yes);
    CHECK(nlohmann::json::parse(r.out).contains("alpha"));
  }

  TEST_CASE("check input errors") {
    auto r = check(split, "c", "id", Relation::EqL);
    CHECK(r.code == exit_input_error);
    CHECK(r.err.find("block 1") != std::string::npos);

    r = check(split, "f", "missing", Relation::EqL);
    CHECK(r.code == exit_input_error);

    r = check("/nonexistent/instance.json", "f", "g", Relation::EqL);
    CHECK(r.code == exit_input_error);
  }

  TEST_CASE("witness") {
    auto r = run(cmd_witness, WitnessOptions{pair4, "id", true, Format::text});
    CHECK(r.code == exit_yes);
    CHECK(r.out.starts_with("g: [0, 1, 2, 3]\n"));

    r = run(cmd_witness,
            WitnessOptions{pair4, "f", true, Format::structured});
    CHECK(r.code == exit_yes);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["fgf_eq_f"] == true);
    CHECK(j["g_is_unit"] == true);
    auto const g = j["g"].get<std::vector<std::size_t>>();
    brute::Map const f{0, 0, 2, 2};
    CHECK(brute::compose(brute::compose(f, g), f) == f);

    r = run(cmd_witness, WitnessOptions{split, "f", true, Format::text});
    CHECK(r.code == exit_no);
    CHECK(r.out == "NO: block 1 has c=1, d=0\n");

    r = run(cmd_witness, WitnessOptions{split, "f", false, Format::text});
    CHECK(r.code == exit_yes);

    r = run(cmd_witness, WitnessOptions{split, "c", false, Format::text});
    CHECK(r.code == exit_input_error);
  }

  TEST_CASE("survey") {
    SweepOptions o;
    o.format    = Format::structured;
    o.partition = "[[0],[1]]";
    auto r      = run(cmd_survey, o);
    CHECK(r.code == exit_yes);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 2);
    CHECK(j["classes"]["D"] == 1);
    CHECK(j["classes"]["H"] == 1);

    o.partition = "[[0,1],[2,3]]";
    r           = run(cmd_survey, o);
    CHECK(r.code == exit_yes);
    j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 32);
    CHECK(j["classes"]["D"] == j["distinct_size_profiles"]);
    CHECK(j["discrepancy_count"] == 0);

    o.partition = "[[0,1,2]]";
    r           = run(cmd_survey, o);
    j           = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 27);
    CHECK(j["classes"]["L"] == 7);
    CHECK(j["classes"]["R"] == 5);
    CHECK(j["classes"]["H"] == 13);
    CHECK(j["classes"]["D"] == 3);
    CHECK(j["classes"]["J"] == 3);

    o.partition = "[[0,1,2,3,4]]";
    o.cap       = 100;
    r           = run(cmd_survey, o);
    CHECK(r.code == exit_cap_exceeded);

    o.partition = "[[0],[2]]";
    r           = run(cmd_survey, o);
    CHECK(r.code == exit_input_error);
  }

  TEST_CASE("conjecture") {
    SweepOptions o;
    o.format    = Format::structured;
    o.partition = "[[0],[1],[2]]";
    auto r      = run(cmd_conjecture, o);
    CHECK(r.code == exit_yes);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 6);
    for (auto const& row : j["elements"]) {
      CHECK(row["profile"] == nlohmann::json{{"1", 3}});
      CHECK(row["K"].empty());
    }

    o.partition = "[[0,1],[2,3]]";
    r           = run(cmd_conjecture, o);
    CHECK(r.code == exit_yes);
    j = nlohmann::json::parse(r.out);
    CHECK(j["d_neq_j"] == 0);
    CHECK(j["two_consecutive"] == 32);

    o.partition = "[[0,1,2,3]]";
    r           = run(cmd_conjecture, o);
    CHECK(r.code == exit_yes);
    j = nlohmann::json::parse(r.out);
    CHECK(j["elements"].size() == 256);
  }

  TEST_CASE("dump") {
    DumpOptions o;
    o.partition = "[[0],[1,2]]";
    auto r      = run(cmd_dump, o);
    CHECK(r.code == exit_yes);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["format"] == "bxp-semigroup-table");
    CHECK(j["size"] == 6);
  }
}
