// Golden tests for the cwf command line tool.  The binary path arrives in
// the CWF_BIN environment variable.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CWF_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CWF_BIN must point at the cwf binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        out.append(buffer, got);
    }
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("row output is the space-separated row") {
    RunResult r = run_cli("row --u 2 --v 3 --root 5/2 --n 2");
    CHECK(r.status == 0);
    CHECK(r.out == "5/22 41/12 11/24 17/2\n");

    r = run_cli("row --n 2");  // defaults: (1,1) rooted at 1
    CHECK(r.status == 0);
    CHECK(r.out == "1/3 3/2 2/3 3\n");
}

TEST_CASE("row json record pins the schema") {
    RunResult r = run_cli("--json row --u 2 --v 3 --root 5/2 --n 2");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"n\":2,\"op\":\"row\",\"root\":\"5/2\",\"u\":2,\"v\":3,"
          "\"values\":[\"5/22\",\"41/12\",\"11/24\",\"17/2\"]}\n");
}

TEST_CASE("ancestors trace matches the worked example") {
    RunResult r = run_cli("ancestors --u 2 --v 3 2147/620");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "287/620 = [0,2,6,4,5,2] (undid R)\n"
          "287/46 = [6,4,5,2] (undid L)\n"
          "149/46 = [3,4,5,2] (undid R)\n"
          "11/46 = [0,4,5,2] (undid R)\n"
          "11/24 = [0,2,5,2] (undid L)\n"
          "11/2 = [5,2] (undid L)\n"
          "5/2 = [2,2] (orphan)\n");

    r = run_cli("ancestors --u 2 --v 3 5/2");
    CHECK(r.status == 0);
    CHECK(r.out == "5/2 = [2,2] (orphan)\n");
}

TEST_CASE("ancestors json streams one record per step") {
    RunResult r = run_cli("--json ancestors --u 2 --v 3 11/2");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"cf\":\"[2,2]\",\"op\":\"ancestors\",\"orphan\":true,"
          "\"query\":\"11/2\",\"step\":1,\"u\":2,\"undid\":\"R\",\"v\":3,"
          "\"value\":\"5/2\"}\n");
}

TEST_CASE("depth and path of the worked example") {
    RunResult r = run_cli("depth --u 2 --v 3 --root 5/2 2147/620");
    CHECK(r.status == 0);
    CHECK(r.out == "7\n");

    r = run_cli("path --u 2 --v 3 --root 5/2 2147/620");
    CHECK(r.status == 0);
    CHECK(r.out == "word: R L R^2 L^2 R\nexponents: [1,1,2,2,1,0]\n");
}

TEST_CASE("member prints a boolean and always exits zero") {
    RunResult r = run_cli("member --u 2 --v 3 --root 5/2 2147/620");
    CHECK(r.status == 0);
    CHECK(r.out == "true\n");

    r = run_cli("member --u 2 --v 3 --root 11/2 5/32");
    CHECK(r.status == 0);
    CHECK(r.out == "false\n");
}

TEST_CASE("domain errors exit 1") {
    CHECK(run_cli("depth --u 2 --v 3 --root 11/2 5/32").status == 1);
    CHECK(run_cli("parent --u 2 --v 3 5/2").status == 1);
    CHECK(run_cli("successor --u 2 --v 3 5/2").status == 1);
    CHECK(run_cli("orphan-root 0/3").status == 1);
    CHECK(run_cli("orphan-root 1.5").status == 1);
    CHECK(run_cli("row --u 0 --n 1").status == 1);
    CHECK(run_cli("row --n 30").status == 1);  // row cap
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("vertex --n 2").status == 2);  // missing --i
    CHECK(run_cli("row").status == 2);           // missing --n
    CHECK(run_cli("").status == 2);              // missing subcommand
}

TEST_CASE("parent describes the inverted move") {
    RunResult r = run_cli("parent --u 2 --v 3 5/12");
    CHECK(r.status == 0);
    CHECK(r.out == "left child of 5/2\n");

    r = run_cli("parent --u 2 --v 3 17/2");
    CHECK(r.status == 0);
    CHECK(r.out == "right child of 11/2\n");
}

TEST_CASE("codes encode and decode") {
    RunResult r = run_cli("encode --u 2 --v 3 --code 110 RL");
    CHECK(r.status == 0);
    CHECK(r.out == "11011100_2\n");

    r = run_cli("decode --u 2 --v 3 1100");
    CHECK(r.status == 0);
    CHECK(r.out == "left child of 11_2\n");

    r = run_cli("decode --u 2 --v 3 110001110001");
    CHECK(r.status == 0);
    CHECK(r.out == "orphan\n");

    r = run_cli("decode --u 2 --v 3 --to-root 110001110000");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "1100011100_2\n"
          "11000111_2\n"
          "11000_2\n"
          "110_2 (orphan)\n");
}

TEST_CASE("orphans and vertex lookups") {
    RunResult r = run_cli("orphans --u 2 --v 3 --bound 2");
    CHECK(r.status == 0);
    CHECK(r.out == "1/2 1 2\n");

    r = run_cli("vertex --n 2 --i 3");
    CHECK(r.status == 0);
    CHECK(r.out == "2/3\n");

    r = run_cli("successor --u 2 --v 3 41/12");
    CHECK(r.status == 0);
    CHECK(r.out == "11/24\n");

    r = run_cli("orphan-root --u 2 --v 3 2147/620");
    CHECK(r.status == 0);
    CHECK(r.out == "5/2\n");
}

TEST_CASE("mirror prints both matrices") {
    RunResult r = run_cli("mirror --u 2 --v 3 --n 2 --i 1");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "position: (2,1)\n"
          "matrix: [[1,0],[4,1]]\n"
          "mirror position: (2,4)\n"
          "mirror matrix: [[1,6],[0,1]]\n");
}

TEST_CASE("dot export") {
    RunResult r = run_cli("dot --u 2 --v 3 --root 5/2 --depth 1");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "digraph cwforest {\n"
          "  node [shape=box];\n"
          "  \"5/2\";\n"
          "  \"5/2\" -> \"5/12\" [label=\"L\"];\n"
          "  \"5/2\" -> \"11/2\" [label=\"R\"];\n"
          "}\n");
    CHECK(run_cli("dot --depth 11").status == 1);
}

TEST_CASE("verify suites pass and exit zero") {
    RunResult r = run_cli("verify skew nathanson");
    CHECK(r.status == 0);
    CHECK(r.out == "skew: PASS\nnathanson: PASS\n");

    r = run_cli("--json verify skew");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"holds\":true,\"op\":\"verify\",\"suite\":\"skew\"}\n");

    CHECK(run_cli("verify bogus").status == 1);
}
