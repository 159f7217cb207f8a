#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = YDLCAT_FIXTURES;

int run(const std::string& args, std::string* output = nullptr) {
  const fs::path out = fs::temp_directory_path() / "ydlcat_cli_test.out";
  const std::string cmd =
      std::string("\"") + YDLCAT_CLI + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(out);
    std::ostringstream s;
    s << in.rdbuf();
    *output = s.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string fixture(const std::string& name) { return "\"" + (kFixtures / name).string() + "\""; }

}  // namespace

TEST_CASE("demo output is accepted by check") {
  const fs::path dir = fs::temp_directory_path() / "ydlcat_cli_demo";
  fs::create_directories(dir);
  struct Case {
    std::string demo, kind;
  };
  for (const auto& c : {Case{"sweedler", "hopf"}, Case{"group:S3", "hopf"}, Case{"group:C4", "hopf"},
                        Case{"trivial-module", "module"}, Case{"regular-module", "module"},
                        Case{"h4-module", "module"}, Case{"graded-demo", "graded"}}) {
    for (const char* field : {"", " --prime 7"}) {
      CAPTURE(c.demo);
      CAPTURE(field);
      const fs::path file = dir / "object.txt";
      REQUIRE(run("demo " + c.demo + field + " -o \"" + file.string() + "\"") == 0);
      std::string out;
      CHECK(run("check " + c.kind + " \"" + file.string() + "\"", &out) == 0);
      CHECK(out.find("result PASS") != std::string::npos);
    }
  }
}

TEST_CASE("exit code 0: passing checks") {
  CHECK(run("check hopf " + fixture("sweedler.hopf")) == 0);
  CHECK(run("check module " + fixture("trivial.mod")) == 0);
  CHECK(run("check graded " + fixture("s3_a.graded")) == 0);
  std::string out;
  CHECK(run("braid " + fixture("trivial.mod") + " " + fixture("trivial.mod"), &out) == 0);
  CHECK(out.find("braiding flip permutation") != std::string::npos);
  CHECK(run("braid " + fixture("s3_a.graded") + " " + fixture("s3_b.graded") + " --hexagons " +
            fixture("s3_c.graded") + " --phi " + fixture("s3_c.graded"), &out) == 0);
  CHECK(out.find("PASS graded_matches_generic") != std::string::npos);
  CHECK(run("braid " + fixture("h4.mod") + " " + fixture("counit.mod") + " --inverse", &out) == 0);
  CHECK(out.find("PASS inverse_after_braiding") != std::string::npos);
  CHECK(run("dual " + fixture("trivial.mod") + " --side left") == 0);
  CHECK(run("dual " + fixture("counit.mod") + " --side right") == 0);
  CHECK(run("iso " + fixture("counit.mod") + " --quadruple " + fixture("counit.quad"), &out) == 0);
  CHECK(out.find("PASS GF_left_action") != std::string::npos);
  CHECK(run("iso " + fixture("h4.mod") + " --quadruple " + fixture("h4.quad")) == 0);
}

TEST_CASE("exit code 1: failing checks name the identity and index") {
  std::string out;
  CHECK(run("check hopf " + fixture("sweedler_bad_antipode.hopf"), &out) == 1);
  CHECK(out.find("FAIL antipode_left  at input (3)") != std::string::npos);
  CHECK(run("check graded " + fixture("s3_off_grading.graded"), &out) == 1);
  CHECK(out.find("FAIL left_shift_rule") != std::string::npos);
  CHECK(run("iso " + fixture("counit.mod") + " --quadruple " + fixture("h4.quad"), &out) == 1);
  CHECK(out.find("FAIL alpha_twist") != std::string::npos);
}

TEST_CASE("exit code 2: parse errors") {
  std::string out;
  CHECK(run("check hopf " + fixture("malformed.hopf"), &out) == 2);
  CHECK(out.find("line 22") != std::string::npos);
  CHECK(run("check module " + fixture("sweedler.hopf")) == 2);
  CHECK(run("check hopf " + fixture("does-not-exist.hopf")) == 2);
  CHECK(run("check nonsense " + fixture("sweedler.hopf")) == 2);
}

TEST_CASE("exit code 3: semantic errors") {
  CHECK(run("check hopf " + fixture("wrong_dim.hopf")) == 3);
  CHECK(run("check graded " + fixture("s3_missing_block.graded")) == 3);
  CHECK(run("braid " + fixture("trivial.mod") + " " + fixture("counit.mod")) == 3);
  CHECK(run("demo no-such-object") == 3);
}

TEST_CASE("json reports carry the same results as text") {
  std::string text, js;
  CHECK(run("check hopf " + fixture("sweedler_bad_antipode.hopf"), &text) == 1);
  CHECK(run("--json check hopf " + fixture("sweedler_bad_antipode.hopf"), &js) == 1);
  CHECK(js.find("\"name\": \"antipode_left\"") != std::string::npos);
  CHECK(js.find("\"passed\": false") != std::string::npos);
  CHECK(js.find("\"witness\"") != std::string::npos);
  std::size_t text_failures = 0, pos = 0;
  while ((pos = text.find("FAIL ", pos)) != std::string::npos) ++text_failures, ++pos;
  std::size_t json_failures = 0;
  pos = 0;
  while ((pos = js.find("\"passed\": false", pos)) != std::string::npos) ++json_failures, ++pos;
  // Both count the overall verdict once: "result FAIL" and the top-level "passed".
  CHECK(json_failures == text_failures);
  CHECK(run("--json check hopf " + fixture("malformed.hopf"), &js) == 2);
  CHECK(js.find("\"error\": \"parse\"") != std::string::npos);
}
