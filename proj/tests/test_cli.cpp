#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "billiards/json_io.hpp"
#include "support/seeded_main.hpp"

using namespace billiards;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliFixture {
    std::string bin;
    fs::path dir;
    int counter = 0;

    CliFixture() {
        const char* env = std::getenv("BILLIARDS_BIN");
        REQUIRE_MESSAGE(env != nullptr, "BILLIARDS_BIN must point at the CLI binary");
        bin = env;
        dir = fs::temp_directory_path() /
              ("billiards_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }

    ~CliFixture() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }

    RunResult run(const std::string& args) {
        fs::path out_file = dir / ("run" + std::to_string(counter) + ".out");
        fs::path err_file = dir / ("run" + std::to_string(counter) + ".err");
        ++counter;
        std::string cmd = "\"" + bin + "\" " + args + " >\"" + out_file.string() + "\" 2>\"" +
                          err_file.string() + "\"";
        int status = std::system(cmd.c_str());
        int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return RunResult{code, slurp(out_file), slurp(err_file)};
    }

    fs::path write(const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p;
    }
};

int count_of(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("cli end to end") {
    CliFixture cli;
    AlphaSpecPtr spec = AlphaSpec::sqrt2();

    SUBCASE("build emits the default table") {
        RunResult r = cli.run("build");
        CHECK(r.code == 0);
        Json expected = json_of(build_polygon(default_params()));
        CHECK(Json::parse(r.out) == expected);
    }

    SUBCASE("build honors shape flags and rejects bad ones") {
        RunResult r3 = cli.run("build --alpha-u 3");
        CHECK(r3.code == 0);
        Json j = Json::parse(r3.out);
        CHECK(j["alpha"]["u"] == Json::array({"3", "1"}));
        CHECK(j["polygon"]["vertices"][0]["x"]["s"] == Json::array({"-1", "1"}));

        RunResult shallow = cli.run("build --l1 1");
        CHECK(shallow.code == 2);
        CHECK(shallow.err.find("error:") != std::string::npos);

        RunResult garbage = cli.run("build --alpha-u zz");
        CHECK(garbage.code == 2);
    }

    SUBCASE("verify reports every launch and exits clean") {
        RunResult r = cli.run("verify --n 5");
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        Json reports = Json::parse(r.out);
        REQUIRE(reports.size() == 6);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            CHECK(reports[i]["n"] == static_cast<long long>(i));
            CHECK(reports[i]["ok"] == true);
        }
    }

    SUBCASE("verify flags a corrupted table through exit code and stderr") {
        RunResult built = cli.run("build");
        REQUIRE(built.code == 0);
        Json table = Json::parse(built.out);
        table["O"]["x"]["r"] = Json::array({"1", "4"});
        fs::path bad = cli.write("bad_table.json", table.dump());

        RunResult r = cli.run("verify --n 0 --table \"" + bad.string() + "\"");
        CHECK(r.code == 1);
        CHECK(r.err.find("verification failed at n=0") != std::string::npos);
        Json reports = Json::parse(r.out);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0]["ok"] == false);
    }

    SUBCASE("verify rejects a negative budget") {
        RunResult r = cli.run("verify --n -1");
        CHECK(r.code == 2);
    }

    SUBCASE("evade finds witnesses and respects its scan budget") {
        Point crossing0{qel(-1, 1, spec), qel(1, 0, spec)};
        fs::path blockers =
            cli.write("blockers.json", json_of(BlockingSet{{crossing0}}).dump());

        RunResult hit = cli.run("evade --blockers \"" + blockers.string() + "\"");
        CHECK(hit.code == 0);
        Json out = Json::parse(hit.out);
        CHECK(out["witness_n"] == 1);
        CHECK(out["trajectory"]["status"] == "REACHED_TARGET");

        RunResult starved =
            cli.run("evade --n-max 0 --blockers \"" + blockers.string() + "\"");
        CHECK(starved.code == 3);
        Json failed = Json::parse(starved.out);
        CHECK(failed["error"] == "not_found_within_budget");
        CHECK(failed["hit_tallies"] == Json::array({1}));

        fs::path empty = cli.write("empty.json", json_of(BlockingSet{}).dump());
        RunResult trivial = cli.run("evade --blockers \"" + empty.string() + "\"");
        CHECK(trivial.code == 0);
        CHECK(Json::parse(trivial.out)["witness_n"] == 0);
    }

    SUBCASE("evade rejects invalid blocking sets and files") {
        Point origin{qel(0, 0, spec), qel(0, 0, spec)};
        fs::path with_o = cli.write("with_o.json", json_of(BlockingSet{{origin}}).dump());
        RunResult r = cli.run("evade --blockers \"" + with_o.string() + "\"");
        CHECK(r.code == 2);
        CHECK(r.err.find("coincides with O") != std::string::npos);

        fs::path mangled = cli.write("mangled.json", "{oops");
        CHECK(cli.run("evade --blockers \"" + mangled.string() + "\"").code == 2);

        RunResult missing = cli.run("evade --blockers /nonexistent/no.json");
        CHECK(missing.code == 2);
        CHECK(missing.err.find("cannot open") != std::string::npos);

        CHECK(cli.run("evade").code == 2);  // --blockers is required
    }

    SUBCASE("render produces the three figures") {
        RunResult table = cli.run("render");
        CHECK(table.code == 0);
        CHECK(table.out.rfind("<svg", 0) == 0);
        CHECK(count_of(table.out, "<path") == 1);
        CHECK(count_of(table.out, "<polyline") == 0);

        RunResult gamma0 = cli.run("render --what gamma --index 0");
        CHECK(gamma0.code == 0);
        CHECK(count_of(gamma0.out, "<polyline") == 1);

        fs::path svg_file = cli.dir / "unfolded.svg";
        RunResult unfolded =
            cli.run("render --what unfolded --index 0 -o \"" + svg_file.string() + "\"");
        CHECK(unfolded.code == 0);
        CHECK(unfolded.out.empty());
        std::string written = slurp(svg_file);
        CHECK(count_of(written, "<path") == 3);
        CHECK(written.find("4.828427124746") != std::string::npos);

        RunResult coarse = cli.run("render --what unfolded --index 0 --digits 3");
        CHECK(coarse.code == 0);
        CHECK(coarse.out.find("4.828,") != std::string::npos);

        CHECK(cli.run("render --what nonsense").code == 2);
        CHECK(cli.run("render --digits 0").code == 2);
    }

    SUBCASE("report lists the approximants") {
        RunResult r = cli.run("report --n 3");
        CHECK(r.code == 0);
        Json list = Json::parse(r.out);
        REQUIRE(list.size() == 4);
        std::vector<long long> expect_p{1, 2, 4, 5};
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(list[i]["q"] == static_cast<long long>(i) + 1);
            CHECK(list[i]["p"] == expect_p[i]);
        }
    }

    SUBCASE("bare invocations and help") {
        CHECK(cli.run("").code == 2);
        CHECK(cli.run("nonsense").code == 2);
        CHECK(cli.run("--help").code == 0);
        CHECK(cli.run("verify --help").code == 0);
    }
}
