#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string theta5 = std::string(FIXTURE_DIR) + "/theta5.json";
const std::string family = std::string(FIXTURE_DIR) + "/fig5_family.json";

} // namespace

TEST_CASE("usage errors exit 64") {
    CHECK(run("definitely-not-a-command").exit_code == 64);
    CHECK(run("build --no-such-flag").exit_code == 64);
    CHECK(run("gen theta").exit_code == 64); // --m is required
}

TEST_CASE("gen and build round trip") {
    std::string tmp = "/tmp/braidconf_test_theta5.json";
    CHECK(run("gen theta --m 5 -o " + tmp).exit_code == 0);
    RunResult r = run("build --graph " + tmp + " --strands 3 --stats");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["f"] == json::array({35, 100, 60}));
    CHECK(j["chi"] == -5);
    std::remove(tmp.c_str());
}

TEST_CASE("build output is byte-stable") {
    std::string args = "build --graph " + theta5 + " --strands 3";
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("precondition failures exit 2") {
    CHECK(run("build --graph /nonexistent.json --strands 3").exit_code == 2);
    // bare theta (parallel edges) is inadmissible without --force
    std::string bare = "/tmp/braidconf_test_bare.json";
    json j;
    j["vertices"] = {"a", "b"};
    j["edges"] = json::array({{"a", "b"}, {"a", "b"}, {"a", "b"}});
    FILE* f = fopen(bare.c_str(), "w");
    fputs(j.dump().c_str(), f);
    fclose(f);
    CHECK(run("build --graph " + bare + " --strands 3 --stats").exit_code == 2);
    RunResult forced = run("build --graph " + bare + " --strands 3 --stats --force");
    CHECK(forced.exit_code == 0);
    CHECK(json::parse(forced.out).contains("warning"));
    std::remove(bare.c_str());
}

TEST_CASE("links analysis and planarity exit codes") {
    CHECK(run("links --graph " + theta5 + " --strands 3 --check-planar").exit_code == 0);
    std::string t6 = "/tmp/braidconf_test_theta6.json";
    REQUIRE(run("gen theta --m 6 -o " + t6).exit_code == 0);
    RunResult r = run("links --graph " + t6 + " --strands 3 --check-planar");
    CHECK(r.exit_code == 1); // some link non-planar
    bool witness_seen = false;
    for (const auto& lr : json::parse(r.out))
        if (!lr["planar"].get<bool>()) {
            CHECK(lr["kuratowski"]["kind"] == "K33");
            witness_seen = true;
        }
    CHECK(witness_seen);
    std::remove(t6.c_str());
}

TEST_CASE("homology JSON") {
    std::string t4 = "/tmp/braidconf_test_theta4.json";
    REQUIRE(run("gen theta --m 4 -o " + t4).exit_code == 0);
    RunResult r = run("homology --graph " + t4 + " --strands 3 --coeff z");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["coeff"] == "Z");
    CHECK(j["H"][0]["rank"] == 1);
    CHECK(j["H"][1]["rank"] == 6);
    CHECK(j["H"][2]["rank"] == 1);
    std::remove(t4.c_str());
}

TEST_CASE("lasheras verify exit codes") {
    RunResult r = run("lasheras verify --graph " + theta5 + " --strands 3 --family " + family);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["zero"] == true);
    CHECK(j["coboundary"] == true);
    CHECK(run("lasheras verify --graph " + theta5 + " --strands 3 --family /nope.json")
              .exit_code == 2);
}

TEST_CASE("lasheras search: found and timeout") {
    RunResult ok =
        run("lasheras search --graph " + theta5 + " --strands 3 --seed 1 --budget-ms 60000");
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out)["outcome"] == "found");
    RunResult to =
        run("lasheras search --graph " + theta5 + " --strands 3 --seed 1 --budget-ms -1");
    CHECK(to.exit_code == 3);
    CHECK(json::parse(to.out)["outcome"] == "timeout");
}

TEST_CASE("search output re-verifies") {
    std::string fam = "/tmp/braidconf_test_found.json";
    REQUIRE(run("lasheras search --graph " + theta5 + " --strands 3 --seed 9 -o " + fam)
                .exit_code == 0);
    CHECK(run("lasheras verify --graph " + theta5 + " --strands 3 --family " + fam)
              .exit_code == 0);
    std::remove(fam.c_str());
}

TEST_CASE("sub check") {
    std::string t7 = "/tmp/braidconf_test_theta7.json";
    REQUIRE(run("gen theta --m 7 -o " + t7).exit_code == 0);
    RunResult r = run("sub check --ambient " + t7 + " --strands 3 --sub a,b,1,2,3,4");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["full"] == true);
    CHECK(run("sub check --ambient " + t7 + " --strands 3 --sub a,1").exit_code == 2);
    std::remove(t7.c_str());
}

TEST_CASE("exports") {
    RunResult dot = run("export dot --graph " + theta5 + " --strands 3 --what xprime");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph xprime {") != std::string::npos);
    CHECK(dot.out == run("export dot --graph " + theta5 + " --strands 3 --what xprime").out);

    RunResult link = run("export dot --graph " + theta5 + " --strands 3 --what link --vertex ab1");
    CHECK(link.exit_code == 0);
    // 8 nodes with both labelings
    size_t nodes = 0, pos = 0;
    while ((pos = link.out.find("[dir=", pos)) != std::string::npos) {
        ++nodes;
        ++pos;
    }
    CHECK(nodes == 8);

    // an inadmissible graph forced through yields an empty stanza
    std::string bare = "/tmp/braidconf_test_bare2.json";
    json bj;
    bj["vertices"] = {"a", "b"};
    bj["edges"] = json::array({{"a", "b"}, {"a", "b"}});
    FILE* f = fopen(bare.c_str(), "w");
    fputs(bj.dump().c_str(), f);
    fclose(f);
    RunResult empty = run("export dot --graph " + bare + " --strands 3 --what skeleton --force");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "graph skeleton {\n}\n\n");
    std::remove(bare.c_str());

    RunResult cj = run("export json --graph " + theta5 + " --strands 3 --what complex");
    CHECK(cj.exit_code == 0);
    json j = json::parse(cj.out);
    CHECK(j["strands"] == 3);
    CHECK(j["cells"]["0"].size() == 35);
    CHECK(j["cells"]["2"].size() == 60);
}
