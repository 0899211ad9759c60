#include <doctest.h>

#include <filesystem>

#include "ordescent/fixtures.hpp"
#include "ordescent/instance_io.hpp"

using namespace ordescent;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InstanceError& e) {
    return e.line();
  }
  return 999;
}

const char* kSre =
    "x.size: 2\nx.leq: (0,1)\na.size: 3\na.leq: (1,2)\nalpha: 1 0 1\n"
    "b.size: 2\nb.leq: (0,1)\nbeta: 1 1\nf: 0 0 1\n";

}  // namespace

TEST_CASE("parses the documented format") {
  const Instance inst = parse_instance(kSre);
  CHECK(inst == fixtures::sre());
  CHECK(parse_instance(std::string("# comment\n") + kSre + "\n") == inst);
}

TEST_CASE("errors carry the line") {
  CHECK(error_line("x.size: 2\nx.leq: (0,1\n") == 2);
  CHECK(error_line("x.size: two\n") == 1);
  CHECK(error_line("x.size: 1\nbogus: 3\n") == 2);
  CHECK(error_line("x.size: 1\nx.size: 1\n") == 2);
  CHECK(error_line("x.size: 1\n") == 0);
  CHECK(error_line("x.size: 2\nx.leq: (0,2)\na.size: 0\nalpha:\nb.size: 0\nbeta:\nf:\n") == 2);
  CHECK(error_line("x.size: 2\na.size: 2\nalpha: 0\nb.size: 0\nbeta:\nf:\n") == 3);
}

TEST_CASE("invariant violations carry the witness") {
  try {
    parse_instance("x.size: 2\nx.leq: (0,1)\na.size: 2\na.leq: (0,1)\nalpha: 1 0\nb.size: 1\nbeta: 1\nf: 0 0\n");
    FAIL("accepted a non-monotone valuation");
  } catch (const InstanceError& e) {
    CHECK(e.line() == 5);
    REQUIRE(e.witness());
    CHECK(e.witness()->domain == std::vector<std::size_t>{0, 1});
  }
  CHECK_THROWS_AS(parse_instance("x.size: 2\nx.leq: (0,1)\na.size: 1\nalpha: 1\nb.size: 1\nbeta: 0\nf: 0\n"),
                  InstanceError);
}

TEST_CASE("empty domain loads") {
  const Instance inst = parse_instance("x.size: 1\na.size: 0\nalpha:\nb.size: 1\nbeta: 0\nf:\n");
  CHECK(inst.f.source.size() == 0);
}

TEST_CASE("dump reloads to an equal instance") {
  for (const Instance& inst : {fixtures::sre(), fixtures::cond3(), fixtures::js(), fixtures::identity_of(fixtures::js())})
    CHECK(parse_instance(dump_instance(inst)) == inst);
}

TEST_CASE("shipped fixture files match the built-in fixtures") {
  const std::filesystem::path dir = ORDESCENT_FIXTURE_DIR;
  CHECK(load_instance(dir / "sre.inst") == fixtures::sre());
  CHECK(load_instance(dir / "cond3.inst") == fixtures::cond3());
  CHECK(load_instance(dir / "js.inst") == fixtures::js());
  CHECK(load_instance(dir / "identity.inst") == fixtures::identity_of(fixtures::sre()));
  CHECK_THROWS_AS(load_instance(dir / "non_monotone_alpha.inst"), InstanceError);
  CHECK(load_instance(dir / "empty_domain.inst").f.source.size() == 0);
  CHECK_THROWS_AS(load_instance(dir / "missing.inst"), InstanceError);
}
