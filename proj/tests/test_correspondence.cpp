#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tqg/io.hpp"

using namespace tqg;

namespace {

const CheckRow& row(const VerificationReport& r, const std::string& id) {
  for (const auto& x : r.rows)
    if (x.id == id) return x;
  FAIL("missing row " << id);
  throw std::logic_error("unreachable");
}

std::vector<std::tuple<std::string, std::string, std::string, std::string>> stable_part(const VerificationReport& r) {
  std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
  for (const auto& x : r.rows) out.emplace_back(x.id, x.computed, x.expected, status_name(x.status));
  return out;
}

}  // namespace

TEST_CASE("full verification at p = 2") {
  RunConfig c;
  c.p = 2;
  VerificationReport r = run_verification(c);
  CHECK(r.global_pass());
  CHECK_FALSE(r.has_error());
  std::set<std::string> groups, ids;
  for (const auto& x : r.rows) {
    groups.insert(x.group);
    CHECK(ids.insert(x.id).second);
    CHECK_FALSE(x.anchor.empty());
    CHECK_FALSE(x.basis.empty());
  }
  CHECK(groups == std::set<std::string>{"quantum_integers", "uq_construction", "counts", "ext_and_cartan",
                                        "basic_algebra", "zhu", "characters", "fock_side"});
  // simples of U, simples of I, blocks, semisimple blocks: (4, 4, 3, 2)
  CHECK(row(r, "counts.uq_simples").computed == "4");
  CHECK(row(r, "counts.zhu_simples").computed == "4");
  CHECK(row(r, "counts.uq_blocks").computed == "3");
  CHECK(row(r, "counts.uq_semisimple").computed == "2");
  CHECK(row(r, "fock.kernel").computed == "[1,0,1,4,5,8,10,16,22]");
  CHECK(row(r, "fock.zero_modes").computed == "-4");
  CHECK(row(r, "fock.log.jordan.s1+").status == Status::pass);
  CHECK(row(r, "fock.log.relations.s1-").status == Status::pass);
}

TEST_CASE("report is deterministic and independent of scheduling") {
  RunConfig c;
  c.p = 3;
  c.fock_trunc = 4;
  auto a = run_verification(c);
  c.parallel = false;
  auto b = run_verification(c);
  CHECK(stable_part(a) == stable_part(b));
  CHECK(render(a, Format::json) == render(b, Format::json));
  CHECK(a.global_pass());
}

TEST_CASE("p = 3 block comparisons and skipped Fock rows") {
  RunConfig c;
  c.p = 3;
  c.fock_trunc = 0;
  auto r = run_verification(c);
  CHECK(r.global_pass());
  int two_simple = 0, same = 0;
  for (const auto& x : r.rows) {
    if (x.group == "fock_side") CHECK(x.status == Status::skipped);
    if (x.id.rfind("basic.iso.", 0) == 0) {
      ++two_simple;
      CHECK(x.status == Status::pass);
    }
    if (x.id.rfind("ext.same.", 0) == 0) ++same;
    if (x.id.rfind("basic.loewy.", 0) == 0) CHECK(x.status == Status::info);
  }
  CHECK(two_simple == 2);
  CHECK(same == 1);
}

TEST_CASE("configuration validation") {
  RunConfig c;
  c.p = 1;
  CHECK_THROWS_AS(run_verification(c), ParameterError);
  c.p = 2;
  c.s = 3;
  CHECK_THROWS_AS(validate(c), ParameterError);
  c.s = 2;
  CHECK_NOTHROW(validate(c));
  c.cutoff = 0;
  CHECK_THROWS_AS(validate(c), ParameterError);
  RunConfig d;
  d.p = 5;
  CHECK(effective_fock_trunc(d) == 4);
  d.p = 3;
  CHECK(effective_fock_trunc(d) == 8);
}

TEST_CASE("global flag follows row status") {
  VerificationReport r;
  r.rows.push_back({"a", "g", "claim", "1", "1", basis::closed_form, Status::pass, 0});
  r.rows.push_back({"b", "g", "claim", "", "", basis::structural, Status::skipped, 0});
  r.rows.push_back({"c", "g", "claim", "x", "", basis::structural, Status::info, 0});
  CHECK(r.global_pass());
  r.rows.push_back({"d", "g", "claim", "1", "2", basis::closed_form, Status::fail, 0});
  CHECK_FALSE(r.global_pass());
  CHECK_FALSE(r.has_error());
  r.rows.push_back({"e", "g", "claim", "exception: boom", "", basis::closed_form, Status::error, 0});
  CHECK(r.has_error());
}

TEST_CASE("check writer records exceptions as error rows") {
  std::vector<CheckRow> rows;
  detail::GroupWriter g("grp", rows);
  g.check("ok", "claim", basis::closed_form, [] { return detail::eq(2, 2); });
  g.check("bad", "claim", basis::closed_form, [] { return detail::eq(2, 3); });
  g.check("boom", "claim", basis::closed_form, []() -> detail::GroupWriter::Outcome {
    throw ConsistencyError("broken");
  });
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].status == Status::pass);
  CHECK(rows[1].status == Status::fail);
  CHECK(rows[1].computed == "2");
  CHECK(rows[1].expected == "3");
  CHECK(rows[2].status == Status::error);
  CHECK(rows[2].computed == "exception: broken");
}

TEST_CASE("serialization formats") {
  VerificationReport r;
  r.config.p = 2;
  r.rows.push_back({"x", "g", "a, \"quoted\" claim", "[1,2]", "a|b", basis::closed_form, Status::pass, 1.5});
  std::string csv = render(r, Format::csv);
  CHECK(csv == "id,group,anchor,computed,expected,basis,status\r\n"
               "x,g,\"a, \"\"quoted\"\" claim\",\"[1,2]\",a|b,closed form,pass\r\n");
  std::string md = render(r, Format::md);
  CHECK(md.find("| x | g | a, \"quoted\" claim | [1,2] | a\\|b | closed form | pass |") != std::string::npos);

  auto j = to_json(r);
  CHECK(j.begin().key() == "schema_version");
  CHECK(j["schema_version"] == 1);
  CHECK(j["global_pass"] == true);
  CHECK_FALSE(j["rows"][0].contains("runtime_ms"));
  CHECK(to_json(r, true)["rows"][0]["runtime_ms"] == 1.5);
  CHECK(ordered_json::parse(render(r, Format::json)) == j);
}

TEST_CASE("character tables") {
  CharacterTable t = character_table(2, 1, 10);
  CHECK(t.series.size() == 8);
  for (const auto& i : t.identities) CHECK(i.holds);
  // W(2) lowest weights: 1 > 3/8 > 0 > -1/8
  CHECK(t.weight_chain == std::vector<Rational>{Rational(1), Rational(3, 8), Rational(0), Rational(-1, 8)});
  CHECK(character_table(3, 3, 6).series.size() == 7);
  CHECK_THROWS_AS(character_table(2, 5, 10), ParameterError);
  std::string md = render(t, Format::md);
  CHECK(md.find("| 1 | 1 |") != std::string::npos);
  CHECK(md.find("| 4 | -1/8 |") != std::string::npos);
  auto j = ordered_json::parse(render(t, Format::json));
  // ch X_1^+ at p = 2 starts 1 + q^2 + ...
  CHECK(j["series"]["X+"]["coeffs"][0] == "1");
  CHECK(j["series"]["X+"]["coeffs"][1] == "0");
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("xml"), ParameterError);
}
