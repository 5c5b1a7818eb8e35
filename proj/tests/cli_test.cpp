#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI through the shell, capturing stdout; stderr is dropped so
// expected error-path runs stay quiet in the test log.
RunResult run_cli(const std::string& args) {
  std::string command =
      std::string(VSTAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_piped(const std::string& stdin_text, const std::string& args) {
  std::string command = "printf '" + stdin_text + "' | " +
                        std::string(VSTAB_CLI_PATH) + " " + args +
                        " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli invariant values") {
  RunResult chi = run_cli("invariant --rho chi_prime Dhc");
  CHECK(chi.exit_code == 0);
  CHECK(chi.output == "3\n");

  CHECK(run_cli("invariant --rho class Dhc").output == "2\n");
  CHECK(run_cli("invariant --rho connectivity Dhc").output == "2\n");
  CHECK(run_cli("invariant --rho t_star Dhc").output == "1\n");
  CHECK(run_cli("invariant --rho components Dhc").output == "1\n");
}

TEST_CASE("cli stability output shape") {
  RunResult vs = run_cli("stability --rho chi_prime Dhc");
  CHECK(vs.exit_code == 0);
  CHECK(vs.output == "vs=1 witness=[0]\n");

  RunResult es = run_cli("stability --rho chi_prime --edges Dhc");
  CHECK(es.exit_code == 0);
  CHECK(es.output == "es=1 witness=[(0,1)]\n");

  RunResult two = run_cli("stability --rho chi_prime C~");
  CHECK(two.output == "vs=2 witness=[0,1]\n");
}

TEST_CASE("cli witness certificate") {
  RunResult json = run_cli("witness --rho chi_prime Dhc --json");
  CHECK(json.exit_code == 0);
  CHECK(json.output ==
        "{\"graph6\":\"Dhc\",\"invariant\":\"chi_prime\",\"value\":1,"
        "\"removal_set\":[0],\"rho_before\":3,\"rho_after\":2,"
        "\"coloring\":{\"k\":2,\"edges\":[[0,1,1],[1,2,0],[2,3,1]]},"
        "\"max_cardinality_fully_searched\":0}\n");

  RunResult human = run_cli("witness --rho chi_prime Dhc");
  CHECK(human.exit_code == 0);
  CHECK(human.output.find("graph: Dhc") != std::string::npos);
  CHECK(human.output.find("value: 1") != std::string::npos);
  CHECK(human.output.find("removal_set: [0]") != std::string::npos);
}

TEST_CASE("cli verify exit codes") {
  RunResult paths = run_cli("verify --claims thm-paths --max-n 10");
  CHECK(paths.exit_code == 0);
  CHECK(paths.output.find("thm-paths") != std::string::npos);
  CHECK(paths.output.find("pass") != std::string::npos);

  RunResult discrepancy = run_cli("verify --claims tstar-paths-formula");
  CHECK(discrepancy.exit_code == 0);
  CHECK(discrepancy.output.find("documented-discrepancy") !=
        std::string::npos);
  CHECK(discrepancy.output.find("path(4)") != std::string::npos);

  RunResult apex = run_cli("verify --claims thm-apex --max-n 3");
  CHECK(apex.exit_code == 1);
  CHECK(apex.output.find("counterexample") != std::string::npos);

  RunResult porcelain =
      run_cli("verify --claims thm-paths --max-n 5 --porcelain");
  CHECK(porcelain.exit_code == 0);
  CHECK(porcelain.output == "thm-paths\tpass\t3\t-1\t-1\t0\t0\n");

  RunResult multiple =
      run_cli("verify --claims thm-paths,thm-cycles --max-n 6 --porcelain");
  CHECK(multiple.exit_code == 0);
  CHECK(multiple.output ==
        "thm-cycles\tpass\t4\t-1\t-1\t0\t0\n"
        "thm-paths\tpass\t4\t-1\t-1\t0\t0\n");

  RunResult unknown = run_cli("verify --claims thm-fermat");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("cli generation and corpus") {
  RunResult gadget = run_cli("gen --family gadget_chain --params 1");
  CHECK(gadget.exit_code == 0);
  CHECK(gadget.output == "Bw\n");

  RunResult wheel = run_cli("gen --family wheel --params 4 --format edgelist");
  CHECK(wheel.exit_code == 0);
  CHECK(wheel.output == "5 8\n0 1\n0 3\n0 4\n1 2\n1 4\n2 3\n2 4\n3 4\n");

  RunResult apex = run_cli("gen --family complete_plus_apex --params 3,2");
  CHECK(apex.exit_code == 0);

  RunResult bad_family = run_cli("gen --family moebius --params 4");
  CHECK(bad_family.exit_code == 2);

  RunResult bad_params = run_cli("gen --family cycle --params 2");
  CHECK(bad_params.exit_code == 2);

  RunResult corpus = run_cli("corpus --n 2");
  CHECK(corpus.exit_code == 0);
  CHECK(corpus.output == "A?\nA_\n");

  RunResult too_big = run_cli("corpus --n 7");
  CHECK(too_big.exit_code == 2);
}

TEST_CASE("cli graph input forms") {
  RunResult inline_edgelist =
      run_cli("invariant --rho chi_prime '3 2\n0 1\n1 2'");
  CHECK(inline_edgelist.exit_code == 0);
  CHECK(inline_edgelist.output == "2\n");

  RunResult piped = run_piped("3 2\\n0 1\\n1 2", "invariant --rho chi_prime -");
  CHECK(piped.exit_code == 0);
  CHECK(piped.output == "2\n");

  std::string path = "cli_test_graph.txt";
  {
    std::ofstream file(path);
    file << "Dhc\n";
  }
  RunResult from_file = run_cli("stability --rho chi_prime " + path);
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output == "vs=1 witness=[0]\n");
  std::remove(path.c_str());

  RunResult forced = run_cli("invariant --rho chi_prime --format g6 Dhc");
  CHECK(forced.exit_code == 0);
  CHECK(forced.output == "3\n");
}

TEST_CASE("cli usage errors exit with status two") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("stability Dhc").exit_code == 2);
  CHECK(run_cli("invariant --rho chi_prime 'A'").exit_code == 2);
  CHECK(run_cli("invariant --rho girth Dhc").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
