#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

namespace {

struct cli_result {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with the given arguments (and optional stdin
// text), capturing stdout and the exit code through shell redirection.
cli_result run_cli(const std::string& args, const std::string& stdin_text = "") {
    static int counter = 0;
    const std::string stem = "/tmp/milnor_cli_" + std::to_string(getpid()) +
                             "_" + std::to_string(counter++);
    const std::string in_path = stem + ".in";
    const std::string out_path = stem + ".out";
    {
        std::ofstream in(in_path);
        in << stdin_text;
    }
    const std::string cmd = std::string("\"") + MILNOR_CLI_PATH + "\" " + args +
                            " < " + in_path + " > " + out_path + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    cli_result r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream out(out_path);
    std::ostringstream buf;
    buf << out.rdbuf();
    r.out = buf.str();
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("nf subcommand prints canonical forms") {
    const cli_result id = run_cli("nf --strands 3 \"1 -1\"");
    CHECK(id.exit_code == 0);
    CHECK(id.out == "identity\n");

    CHECK(run_cli("nf --strands 3 \"1 2 1\"").out ==
          run_cli("nf --strands 3 \"2 1 2\"").out);
    CHECK(run_cli("nf --strands 3 \"-1\"").out == "D^-1 | 1 2\n");
    CHECK(run_cli("nf --strands 2 1").out == "D^1\n");
    CHECK(run_cli("--seed 5 nf --strands 2 1").exit_code == 0);
}

TEST_CASE("nf rejects bad words with exit code 2") {
    CHECK(run_cli("nf --strands 3 \"1 5\"").exit_code == 2);
    CHECK(run_cli("nf --strands 3 \"1 x\"").exit_code == 2);
    CHECK(run_cli("nf \"1\"").exit_code == 2);  // --strands is required
}

TEST_CASE("classify reports the pinned exotic example") {
    const cli_result r =
        run_cli("classify --m 2 --n 3 --base 1,2 --conj \"1 1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("symplectic: exotic_structure") != std::string::npos);
    CHECK(r.out.find("matched segment: none") != std::string::npos);
    CHECK(r.out.find("homology class: [2, 1]") != std::string::npos);
    CHECK(r.out.find("self-intersection: 4") != std::string::npos);
    CHECK(r.out.find("diffeo: distinguished_by_pairing") != std::string::npos);
}

TEST_CASE("classify reports chords as standard") {
    const cli_result r = run_cli("classify --m 2 --n 3 --base 0,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("symplectic: standard_cotangent (0,2)") !=
          std::string::npos);
    CHECK(r.out.find("diffeo: standard_cotangent") != std::string::npos);
}

TEST_CASE("classify json output is single-line and deterministic") {
    const std::string args =
        "classify --m 2 --n 3 --base 1,2 --conj \"1 1\" --json";
    const cli_result a = run_cli(args);
    const cli_result b =
        run_cli("classify --m 2 --n 3 --base 1,2 --conj \"1 1\" --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == run_cli(args).out);
    CHECK(a.out.find("\"symplectic\":\"exotic_structure\"") !=
          std::string::npos);
    CHECK(a.out.find("\"homology_class\":[2,1]") != std::string::npos);
    // exactly one line
    CHECK(a.out.find('\n') == a.out.size() - 1);
}

TEST_CASE("classify input errors exit with 2") {
    CHECK(run_cli("classify --m 2 --n 3 --base 1,1").exit_code == 2);
    CHECK(run_cli("classify --m 2 --n 3 --base nope").exit_code == 2);
    CHECK(run_cli("classify --m 2 --n 1 --base 0,1").exit_code == 2);
    CHECK(run_cli("classify --n 3 --base 0,1").exit_code == 2);
    CHECK(run_cli("classify --m 2 --n 3 --base 0,1 --format yaml").exit_code ==
          2);
    CHECK(run_cli("classify --m 2 --n 3 --base 0,1 --conj \"7\"").exit_code ==
          2);
}

TEST_CASE("orbit lists tuples with a summary line") {
    const cli_result r = run_cli("orbit --m 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(0,1) (1,2)\n") != std::string::npos);
    CHECK(r.out.find("count=3 monodromy=") != std::string::npos);

    const cli_result r3 = run_cli("orbit --m 3");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out.find("count=16 ") != std::string::npos);

    const cli_result j = run_cli("orbit --m 2 --json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"count\":3,\"monodromy\":\"") != std::string::npos);
    CHECK(j.out.find("{\"arcs\":[") != std::string::npos);
}

TEST_CASE("orbit over the cap exits with 3") {
    CHECK(run_cli("orbit --m 4 --cap 10").exit_code == 3);
    CHECK(run_cli("orbit --m 2 --cap 3").exit_code == 0);
}

TEST_CASE("decompose reads a rep from stdin") {
    const cli_result r =
        run_cli("decompose", R"({"dims":[1,1],"maps":[[[1]]]})");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[{\"k\":0,\"l\":2,\"shift\":0,\"mult\":1}]\n");

    const cli_result split =
        run_cli("decompose", R"({"dims":[1,1],"maps":[[[0]]]})");
    CHECK(split.out ==
          "[{\"k\":0,\"l\":1,\"shift\":0,\"mult\":1},"
          "{\"k\":1,\"l\":2,\"shift\":0,\"mult\":1}]\n");

    CHECK(run_cli("decompose", "{oops").exit_code == 2);
    CHECK(run_cli("decompose", R"({"dims":[1,99],"maps":[[[1]]]})").exit_code ==
          2);
}

TEST_CASE("bad invocations exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("orbit").exit_code == 2);  // --m is required
}
