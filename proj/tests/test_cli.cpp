// Drives the installed binary end to end; the path comes in through
// NAKAYAMA_CLI_PATH from the build.

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(NAKAYAMA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("convert between the three kinds") {
    auto r = run_cli("convert --from dyck --to perm \"UUUDUUUDDDUDDDUD\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4 1 2 7 3 5 8 6\n");

    r = run_cli("convert --from perm --to kupisch \"1 2 3\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4,3,2,1\n");

    r = run_cli("convert --from kupisch --to dyck \"2,2,2,1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "UDUDUD\n");

    r = run_cli("convert --from dyck --to dyck \"UUDD\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "UUDD\n");
}

TEST_CASE("convert round trips on canonical text") {
    const std::array<std::pair<std::string, std::string>, 3> objects = {
        {{"dyck", "UUDUDD"}, {"perm", "2 1 4 3"}, {"kupisch", "3,3,2,1"}}};
    for (const auto& [from, payload] : objects) {
        for (const std::string to : {"dyck", "perm", "kupisch"}) {
            const auto there =
                run_cli("convert --from " + from + " --to " + to + " \"" + payload + "\"");
            REQUIRE(there.exit_code == 0);
            std::string text = there.out;
            text.pop_back(); // newline
            const auto back =
                run_cli("convert --from " + to + " --to " + from + " \"" + text + "\"");
            REQUIRE(back.exit_code == 0);
            CHECK(back.out == payload + "\n");
        }
    }
}

TEST_CASE("stats report") {
    const auto r = run_cli("stats --perm \"4 1 2 7 3 5 8 6\"");
    REQUIRE(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["permutation"]["fixed_points"] == 0);
    CHECK(report["permutation"]["support_size"] == 7);
    CHECK(report["algebra"]["dim_ext1_JJ"] == 7);
    CHECK(report["algebra"]["proj_id1"] == 0);
    CHECK(report["algebra"]["kupisch"] == nlohmann::json({4, 6, 5, 4, 4, 3, 2, 2, 1}));
    CHECK(report["dyck"]["steps"] == "UUUDUUUDDDUDDDUD");
    CHECK(report["formulas"]["radical_id_le1_from_perm"] == 2);

    const auto hereditary = nlohmann::json::parse(run_cli("stats --kupisch \"4,3,2,1\"").out);
    CHECK(hereditary["algebra"]["dim_ext1_JJ"] == 0);
    CHECK(hereditary["algebra"]["gldim"] == 1);

    const auto zigzag = nlohmann::json::parse(run_cli("stats --dyck \"UDUDUD\"").out);
    CHECK(zigzag["algebra"]["dim_ext1_JJ"] == 2);
    CHECK(zigzag["permutation"]["fixed_points"] == 0);
}

TEST_CASE("resolve prints minimal resolutions") {
    auto r = run_cli("resolve --kupisch \"4,6,5,4,4,3,2,2,1\" --module \"M(1,3)\" "
                     "--direction injective");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 -> M(1,3) -> M(0,4) -> M(0,1) -> 0\nid = 1\n");

    r = run_cli("resolve --kupisch \"2,2,2,1\" --module \"M(0,1)\" --direction injective");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 -> M(0,1) -> M(0,1) -> 0\nid = 0\n");

    r = run_cli("resolve --kupisch \"2,2,2,1\" --module \"M(1,2)\" --direction projective");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 -> M(1,2) -> M(1,2) -> 0\npd = 0\n");

    r = run_cli("resolve --kupisch \"2,2,1\" --module \"M(0,1)\" --direction projective");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 -> M(2,1) -> M(1,2) -> M(0,2) -> M(0,1) -> 0\npd = 2\n");
}

TEST_CASE("census command") {
    const auto r = run_cli("census --n 3");
    REQUIRE(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["total"] == 5);
    CHECK(report["distribution"] == nlohmann::json({{"0", 1}, {"1", 2}, {"2", 2}}));
    for (const auto& [name, outcome] : report["checks"].items())
        CHECK(outcome["pass"] == true);

    const auto csv = run_cli("census --n 2 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out == "path,kupisch,perm,fixed_points,support,proj_id1,dim_ext1_jj\n"
                     "UUDD,\"3,2,1\",1 2,2,0,2,0\n"
                     "UDUD,\"2,2,1\",2 1,0,1,0,1\n");

    const auto selected = run_cli("census --n 1 --checks theorem1,theorem2");
    REQUIRE(selected.exit_code == 0);
    CHECK(nlohmann::json::parse(selected.out)["checks"].size() == 2);

    const auto trivial = run_cli("census --n 0");
    REQUIRE(trivial.exit_code == 0);
    CHECK(nlohmann::json::parse(trivial.out)["total"] == 1);
}

TEST_CASE("render command") {
    const auto ascii = run_cli("render --dyck \"UUDD\" --format ascii");
    CHECK(ascii.exit_code == 0);
    CHECK(ascii.out.find("/\\") != std::string::npos);
    CHECK(ascii.out.find("peak levels: 3") != std::string::npos);

    const auto svg = run_cli("render --perm \"4 1 2 7 3 5 8 6\" --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);

    const auto marked = run_cli("render --kupisch \"2,2,2,1\" --homology");
    CHECK(marked.exit_code == 0);
    const std::string canvas = marked.out.substr(0, marked.out.find("peak levels:"));
    CHECK(std::count(canvas.begin(), canvas.end(), '#') == 2);
}

TEST_CASE("exit codes distinguish usage errors") {
    CHECK(run_cli("convert --from dyck --to perm \"UDDU\"").exit_code == 1);
    CHECK(run_cli("convert --from perm --to dyck \"3 2 1\"").exit_code == 1);
    CHECK(run_cli("stats --kupisch \"2,1,2\"").exit_code == 1);
    CHECK(run_cli("stats").exit_code == 1);
    CHECK(run_cli("census --n 2 --checks bogus").exit_code == 1);
    CHECK(run_cli("bogus-subcommand").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}
