#include <doctest.h>

#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("dephase_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + DEPHASE_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_to(const std::string& args, const fs::path& out) {
    const std::string cmd =
        std::string("\"") + DEPHASE_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

const std::string small_config = "q=0.05\nN=51\nx1=10\nxN=60\nstate=mixture\nc3=0.5\nt_max=80\nsteps=81\n";

}  // namespace

TEST_CASE("evolve writes a CSV time series") {
    TempDir tmp;
    spit(tmp.path / "run.cfg", small_config);
    const auto csv = tmp.path / "series.csv";
    REQUIRE(run("evolve --config " + (tmp.path / "run.cfg").string() + " --out " + csv.string()) == 0);
    const std::string text = slurp(csv);
    CHECK(text.rfind("t,C,D,I,J,absF1,absF2\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 82);

    const auto stdout_csv = tmp.path / "stdout.csv";
    REQUIRE(run_to("evolve --config " + (tmp.path / "run.cfg").string(), stdout_csv) == 0);
    CHECK(slurp(stdout_csv) == text);
}

TEST_CASE("exit codes") {
    TempDir tmp;
    spit(tmp.path / "bad.cfg", "q=0.05\nN=51\nx1=10\nstate=mixture\nc3=1.5\nt_max=80\nsteps=81\n");
    spit(tmp.path / "good.cfg", small_config);
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("evolve") == 2);
    CHECK(run("evolve --config " + (tmp.path / "bad.cfg").string()) == 2);
    CHECK(run("evolve --config " + (tmp.path / "missing.cfg").string()) == 1);
    CHECK(run("figure fig9 --out-dir " + tmp.path.string()) == 2);
    CHECK(run("evolve --config " + (tmp.path / "good.cfg").string() + " --out " +
              (tmp.path / "no" / "such" / "dir.csv").string()) == 1);
    CHECK(run("critical-times --config " + (tmp.path / "good.cfg").string() + " --c3 0.5") == 0);
    CHECK(run("critical-times --config " + (tmp.path / "good.cfg").string() + " --c3 1.5") == 1);
    CHECK(run("compare --config " + (tmp.path / "good.cfg").string()) == 0);
    CHECK(run("--help") == 0);
}

TEST_CASE("critical-times report") {
    TempDir tmp;
    spit(tmp.path / "fig.cfg", "q=0.005\nN=1001\nx1=100\nxN=1100\nstate=phi+\nt_max=1300\nsteps=1301\n");
    const auto out = tmp.path / "ct.txt";
    REQUIRE(run_to("critical-times --config " + (tmp.path / "fig.cfg").string() + " --c3 0.5", out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("sudden_death=209.75") != std::string::npos);
    CHECK(text.find("second_period_change=n/a") != std::string::npos);
}

TEST_CASE("figure output is byte identical across runs") {
    TempDir tmp;
    REQUIRE(run("figure fig4 --out-dir " + (tmp.path / "a").string() + " --plot") == 0);
    REQUIRE(run("figure fig4 --out-dir " + (tmp.path / "b").string() + " --plot") == 0);
    int files = 0;
    for (const auto& e : fs::directory_iterator(tmp.path / "a")) {
        ++files;
        REQUIRE(fs::exists(tmp.path / "b" / e.path().filename()));
        CHECK(slurp(e.path()) == slurp(tmp.path / "b" / e.path().filename()));
    }
    CHECK(files >= 4);
    CHECK(fs::exists(tmp.path / "a" / "fig4_c3_0.5.csv"));
}
