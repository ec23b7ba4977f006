#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(EKLAB_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

} // namespace

TEST_CASE("list is stable and exits cleanly") {
    std::string cmd = std::string(EKLAB_CLI_PATH) + " list > /tmp/eklab_list1.txt 2>/dev/null";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    cmd = std::string(EKLAB_CLI_PATH) + " list > /tmp/eklab_list2.txt 2>/dev/null";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    std::string a = slurp("/tmp/eklab_list1.txt");
    CHECK(a == slurp("/tmp/eklab_list2.txt"));
    // six suites
    long lines = std::count(a.begin(), a.end(), '\n');
    CHECK(lines == 6);
}

TEST_CASE("schema violations exit with code 2") {
    write_file("/tmp/eklab_bad1.json", "{ not json");
    CHECK(run_cli("run /tmp/eklab_bad1.json") == 2);

    write_file("/tmp/eklab_bad2.json", R"({"kind": "polylog", "unexpected": 1})");
    CHECK(run_cli("run /tmp/eklab_bad2.json") == 2);

    write_file("/tmp/eklab_bad3.json", R"({"kind": "no-such-suite"})");
    CHECK(run_cli("run /tmp/eklab_bad3.json") == 2);

    write_file("/tmp/eklab_bad4.json", R"({"kind": "polylog", "params": {"bogus_knob": 3}})");
    CHECK(run_cli("run /tmp/eklab_bad4.json") == 2);

    CHECK(run_cli("run /tmp/eklab_missing_file.json") == 2);
}

TEST_CASE("deterministic byte-identical reports") {
    write_file("/tmp/eklab_det.json",
               R"({"kind": "identities", "seed": 7,
                   "params": {"det_identity_count": 20, "det_identity_dim4_count": 5,
                              "five_term_count": 10, "chain45_count": 2, "chain56_count": 1,
                              "residue_count": 8, "entry_bound": 12},
                   "output": "/tmp/eklab_det_out1.json"})");
    REQUIRE(run_cli("run /tmp/eklab_det.json") == 0);
    write_file("/tmp/eklab_det2.json",
               R"({"kind": "identities", "seed": 7,
                   "params": {"det_identity_count": 20, "det_identity_dim4_count": 5,
                              "five_term_count": 10, "chain45_count": 2, "chain56_count": 1,
                              "residue_count": 8, "entry_bound": 12},
                   "output": "/tmp/eklab_det_out2.json"})");
    REQUIRE(run_cli("run /tmp/eklab_det2.json") == 0);
    std::string r1 = slurp("/tmp/eklab_det_out1.json");
    CHECK(!r1.empty());
    CHECK(r1 == slurp("/tmp/eklab_det_out2.json"));
    // a different seed changes the randomized draws but not determinism
    write_file("/tmp/eklab_det3.json",
               R"({"kind": "identities", "seed": 8,
                   "params": {"det_identity_count": 20, "det_identity_dim4_count": 5,
                              "five_term_count": 10, "chain45_count": 2, "chain56_count": 1,
                              "residue_count": 8, "entry_bound": 12},
                   "output": "/tmp/eklab_det_out3.json"})");
    REQUIRE(run_cli("run /tmp/eklab_det3.json") == 0);
    CHECK(slurp("/tmp/eklab_det_out3.json") != r1);
}
