#include <catch2/catch_amalgamated.hpp>

#include <invtab/invtab.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#define INVTAB_STR_INNER(x) #x
#define INVTAB_STR(x) INVTAB_STR_INNER(x)

namespace {

const std::string bin = INVTAB_STR(INVTAB_BIN);

struct cli_result {
    int status = -1;
    std::string out;
};

cli_result run_cli(const std::string& args, const std::string& feed = "") {
    std::string cmd = bin + " " + args + " 2>/dev/null";
    if (!feed.empty()) {
        std::ofstream f("/tmp/invtab_cli_in.txt", std::ios::binary);
        f << feed;
        f.close();
        cmd += " < /tmp/invtab_cli_in.txt";
    } else {
        cmd += " < /dev/null";
    }
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    cli_result r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli pairs") {
    cli_result r = run_cli("pairs", "1 3 7 8\n4 5 6 8\n2 5 7\n");
    CHECK(r.status == 0);
    CHECK(r.out == "(2,4)^1 (3,5)^2 (6,7)^3\ncount=3\n");
    cli_result json = run_cli("pairs -", "{\"rows\":[[1,3,7,8],[4,5,6,8],[2,5,7]]}");
    CHECK(json.out == r.out);
}

TEST_CASE("cli standardize") {
    cli_result r = run_cli("standardize", "1 5 8 9\n3 4 6\n2 7\n");
    CHECK(r.status == 0);
    CHECK(r.out == "1 4 6 9\n2 5 8\n3 7\n");
    cli_result j = run_cli("standardize --json", "1 5 8 9\n3 4 6\n2 7\n");
    CHECK(j.status == 0);
    CHECK(j.out == "{\"rows\":[[1,4,6,9],[2,5,8],[3,7]]}\n");
}

TEST_CASE("cli count") {
    CHECK(run_cli("count --shape 4,3,2 --content 1,1,1,1,1,1,1,1,1").out == "1260\n");
    CHECK(run_cli("count --shape 1,1,1 --content 1,2").out == "3\n");
    // no closed form: falls back to full enumeration
    invtab::bigint expect = invtab::inversion_distribution(invtab::shape({2, 2, 1}),
                                                           invtab::content({2, 2, 1}))
                                .total();
    CHECK(run_cli("count --shape 2,2,1 --content 2,2,1").out ==
          expect.str() + "\n");
}

TEST_CASE("cli gf") {
    cli_result r = run_cli("gf --shape 1,1,1 --content 1,2");
    CHECK(r.status == 0);
    CHECK(r.out == "1 1 1\n");
    CHECK(run_cli("gf --shape 1,1,1 --content 1,2 --pretty").out == "1 + q + q^2\n");
    CHECK(run_cli("gf --shape 2,2 --content 1,1,1,1").out == "2 3 1\n");
    // identical invocations produce identical bytes
    CHECK(run_cli("gf --shape 4,3,2 --content 1,1,1,1,1,1,1,1,1").out ==
          run_cli("gf --shape 4,3,2 --content 1,1,1,1,1,1,1,1,1").out);
}

TEST_CASE("cli enumerate") {
    cli_result r = run_cli("enumerate --shape 1,1,1 --content 1,2");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n2\n2\n\n2\n1\n2\n\n2\n2\n1\n");
}

TEST_CASE("cli maxinv and taumax") {
    cli_result r = run_cli("maxinv --shape 3,3,2,2 --content 2,3,2,1,2");
    CHECK(r.status == 0);
    CHECK(r.out == "7\n1 4 5\n2 3 5\n2 3\n1 2\n");
    CHECK(run_cli("taumax --shape 3,3,2,2 --content 2,3,2,1,2").out ==
          "1 4 5\n2 3 5\n2 3\n1 2\n");
}

TEST_CASE("cli swap") {
    cli_result r = run_cli("swap --a 1", "2\n1\n2\n");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n2\n1\n");
}

TEST_CASE("cli bump, trace, unbump") {
    cli_result r = run_cli("bump", "1 3 4\n3 4 5\n2 4 6\n4 6 7\n");
    CHECK(r.status == 0);
    CHECK(r.out == "1 3 4 5\n2 3 4\n4 6 7\n4 6\n");
    cli_result tr = run_cli("bump --trace", "1 3 4\n3 4 5\n2 4 6\n4 6 7\n");
    CHECK(tr.status == 0);
    std::string want;
    std::vector<std::string> frames;
    invtab::phi1_bump_full(
        invtab::parse_tableau("1 3 4\n3 4 5\n2 4 6\n4 6 7\n"), &frames);
    CHECK(frames.size() == 8);
    for (std::size_t i = 0; i < frames.size(); ++i)
        want += (i ? "\n" : "") + frames[i] + "\n";
    CHECK(tr.out == want);
    cli_result back =
        run_cli("unbump --original-shape 3,3,3,3", "1 3 4 5\n2 3 4\n4 6 7\n4 6\n");
    CHECK(back.status == 0);
    CHECK(back.out == "1 3 4\n3 4 5\n2 4 6\n4 6 7\n");
    CHECK(run_cli("unbump --original-shape 3,3,3", "1 2 4 5\n2 4 5\n3 6\n").out ==
          "2 4 5\n1 2 5\n3 4 6\n");
}

TEST_CASE("cli deltas") {
    cli_result r = run_cli("deltas --shape 4,3,2,2");
    CHECK(r.status == 0);
    CHECK(r.out == "5,2,2,2\n5,3,2,1\n4,4,2,1\n4,3,3,1\n");
    CHECK(run_cli("deltas --shape 3,3,3,3").out == "4,3,3,2\n");
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("pairs", "1 1\n").status == 1);
    CHECK(run_cli("pairs", "1 x\n").status == 1);
    CHECK(run_cli("count --shape 2,2 --content 1,1,1").status == 2);
    CHECK(run_cli("maxinv --shape 3,1 --content 2,2").status == 2);
    CHECK(run_cli("swap --a 5", "1 2\n").status == 2);
    CHECK(run_cli("bump", "1 2\n1 2\n").status == 2);
    CHECK(run_cli("unbump --original-shape 2,2", "1 2\n1 2\n").status == 2);
    CHECK(run_cli("count --shape 2,2").status == 1);
    CHECK(run_cli("nonsense").status == 1);
    CHECK(run_cli("").status == 1);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("cli verify smoke") {
    cli_result r = run_cli("verify --max-cells 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    std::size_t passes = 0;
    for (std::size_t pos = 0; (pos = r.out.find("PASS ", pos)) != std::string::npos;
         ++pos)
        ++passes;
    CHECK(passes == 14);
}
