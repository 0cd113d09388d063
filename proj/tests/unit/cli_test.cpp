#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace stalg::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STALG_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, CompileImplication) {
  const Result r = invoke({"compile"}, "E1 -> E2\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0-\n11\n");
}

TEST(Cli, CompileSeveralFormulasAsBlocks) {
  const Result r = invoke({"compile"}, "E1\nE2 | E3\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1--\n\n-1-\n-01\n");
}

TEST(Cli, CompileConstantsAndJson) {
  EXPECT_EQ(invoke({"compile"}, "true\n").out, "-\n");
  EXPECT_EQ(invoke({"compile"}, "false\n").out, "# empty\n");
  EXPECT_EQ(invoke({"compile", "-o", "json"}, "E1\n").out,
            "{\"universe\":1,\"rows\":[{\"upper\":[1],\"lower\":[],\"mult\":1}]}\n");
}

TEST(Cli, RowsRoundTrip) {
  const Result first = invoke({"compile", "--canonical"}, "(E1 & !E2) | E3\n");
  ASSERT_EQ(first.code, kOk);
  const Result second = invoke({"canon", "-f", "rows"}, first.out);
  ASSERT_EQ(second.code, kOk);
  EXPECT_EQ(first.out, second.out);
  const Result json = invoke({"compile", "-o", "json"}, "(E1 & !E2) | E3\n");
  const Result back = invoke({"compile", "-f", "json"}, json.out);
  EXPECT_EQ(back.out, invoke({"compile"}, "(E1 & !E2) | E3\n").out);
}

TEST(Cli, MalformedInputIsUsageError) {
  const Result r = invoke({"compile", data("malformed.dsl")});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("malformed.dsl:2:1: expected a variable"), std::string::npos);
  EXPECT_EQ(invoke({"compile", "/nonexistent/file.dsl"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"prove"}, "E1\n").code, kUsage);  // missing target
}

TEST(Cli, ProveExitCodes) {
  EXPECT_EQ(invoke({"prove", data("import_export.dsl"), "-t", "(E1 & E2) -> E3"}).code, kOk);
  EXPECT_EQ(invoke({"prove", "-t", "!E1"}, "E1\n").code, kNo);
  EXPECT_EQ(invoke({"prove", "-t", "E2"}, "E1\n").code, kContingent);
  EXPECT_EQ(invoke({"prove", "-t", "E2"}, "E1\n!E1\n").code, kUnsatisfiable);
  EXPECT_EQ(invoke({"prove", "-t", "E1", "-s", "guess"}, "E1\n").code, kUsage);
}

TEST(Cli, ProveDefinitionsAllStrategies) {
  for (const char* s : {"indicator", "valid-intersect", "info-count"}) {
    const Result r = invoke({"prove", data("definitions.dsl"), "-t", "E5 <-> E7", "-s", s});
    EXPECT_EQ(r.code, kOk) << s;
    EXPECT_EQ(r.out.rfind("entailed\n", 0), 0u) << s;
  }
}

TEST(Cli, ProveWitnessAndTrace) {
  const Result r = invoke({"prove", "-t", "E1", "--trace"}, "E1 | E2\n");
  EXPECT_EQ(r.code, kContingent);
  EXPECT_NE(r.out.find("witness: E1=0 E2=1"), std::string::npos);
  EXPECT_NE(r.out.find("step 1 formula 0 rows"), std::string::npos);
  const Result j = invoke({"prove", "-t", "E1", "-o", "json"}, "E1\n");
  EXPECT_NE(j.out.find("\"verdict\":\"entailed\""), std::string::npos);
}

TEST(Cli, CountFormats) {
  EXPECT_EQ(invoke({"count", data("or.cnf")}).out, "3\n");
  EXPECT_EQ(invoke({"count", data("e1_or_e2.rows")}).out, "3\n");
  EXPECT_EQ(invoke({"count"}, "rain -> wet\n").out, "3\n");
  EXPECT_EQ(invoke({"count", data("definitions.dsl")}).out, "8\n");
  EXPECT_EQ(invoke({"count", "-o", "json"}, "E1 | E2\n").out, "{\"count\":\"3\",\"universe\":2}\n");
}

TEST(Cli, DimacsWarningsAndStrict) {
  const std::string cnf = "p cnf 2 2\n1 2 0\n";
  const Result loose = invoke({"count", "-f", "dimacs"}, cnf);
  EXPECT_EQ(loose.code, kOk);
  EXPECT_NE(loose.err.find("warning"), std::string::npos);
  EXPECT_EQ(invoke({"count", "-f", "dimacs", "--strict"}, cnf).code, kUsage);
}

TEST(Cli, CanonWithOrder) {
  const std::string rows = "11\n10\n01\n";
  EXPECT_EQ(invoke({"canon", "--order", "1,2"}, rows).out, "1-\n01\n");
  EXPECT_EQ(invoke({"canon", "--order", "2,1"}, rows).out, "-1\n10\n");
  EXPECT_EQ(invoke({"canon", "--order", "1,7"}, rows).code, kUsage);
}

TEST(Cli, ReduceTrace) {
  const Result r = invoke({"reduce", "--trace"}, "11\n10\n01\n00\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("--\n"), std::string::npos);
  EXPECT_EQ(r.out.rfind("# ", 0), 0u);
}

TEST(Cli, Equiv) {
  EXPECT_EQ(invoke({"equiv"}, "E1 -> E2\n!E1 | E2\n").code, kOk);
  const Result no = invoke({"equiv"}, "E1 -> E2\nE2 -> E1\n");
  EXPECT_EQ(no.code, kNo);
  EXPECT_EQ(no.out, "not equivalent\n");
  EXPECT_EQ(invoke({"equiv"}, "E1\n").code, kUsage);
}

TEST(Cli, OracleCheck) {
  for (const char* op : {"product", "sum", "difference", "complement", "canonical", "reduce",
                         "valid-set", "count"}) {
    const Result r = invoke({"oracle-check", "--op", op}, "E1 | (E2 & !E3)\nE3 -> E4\n");
    EXPECT_EQ(r.code, kOk) << op << r.err;
    EXPECT_EQ(r.out, "agree\n") << op;
  }
  EXPECT_EQ(invoke({"oracle-check", "--op", "valid-set", data("definitions.dsl")}).out, "agree\n");
  EXPECT_EQ(invoke({"oracle-check", "--op", "count", "--oracle-cap", "3"}, "E1 & E4\n").code, kUsage);
  EXPECT_EQ(invoke({"oracle-check", "--op", "melt"}, "E1\n").code, kUsage);
}

TEST(Cli, EnvironmentDefaults) {
  ::setenv("STALG_OUTPUT", "json", 1);
  const Result r = invoke({"compile"}, "E1\n");
  ::unsetenv("STALG_OUTPUT");
  EXPECT_EQ(r.out.rfind("{\"universe\":1", 0), 0u);

  ::setenv("STALG_STRATEGY", "info-count", 1);
  const Result p = invoke({"prove", "-t", "E1", "-o", "json"}, "E1\n");
  ::unsetenv("STALG_STRATEGY");
  EXPECT_NE(p.out.find("\"strategy\":\"info-count\""), std::string::npos);

  // Explicit flags win over the environment.
  ::setenv("STALG_OUTPUT", "json", 1);
  const Result f = invoke({"compile", "-o", "rows"}, "E1\n");
  ::unsetenv("STALG_OUTPUT");
  EXPECT_EQ(f.out, "1\n");
}

TEST(Cli, ParallelMatchesSequential) {
  const std::string program =
      "(E1 | E2) & (E3 | !E4)\nE2 ^ E5 ^ E6\nE6 -> (E7 & E8)\n(E1 <-> E8) | E4\n";
  for (const char* cmd : {"compile", "canon"}) {
    EXPECT_EQ(invoke({cmd}, program).out, invoke({cmd, "--parallel"}, program).out) << cmd;
  }
  EXPECT_EQ(invoke({"prove", "-t", "E3"}, program).out,
            invoke({"prove", "-t", "E3", "--parallel"}, program).out);
}

TEST(Cli, DecompositionHidesSupplementaries) {
  const std::string wide = "E1 ^ E2 ^ E3 ^ E4 ^ E5 ^ E6\n";
  const Result r = invoke({"count", "--compile-cap", "4"}, wide);
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "32\n");
  const Result c = invoke({"compile", "--compile-cap", "4"}, wide);
  EXPECT_EQ(c.code, kOk);
  EXPECT_EQ(c.out.find("\n\n"), std::string::npos);  // one block
}

}  // namespace
}  // namespace stalg::cli
