// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// End-to-end tests of the command-line tool. NYQSHAPE_CLI points at the
// built binary and NYQSHAPE_TEST_DATA at the committed fixture directory.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "nyqshape/io.hpp"

namespace fs = std::filesystem;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string cli_path() {
    const char* env = std::getenv("NYQSHAPE_CLI");
    REQUIRE(env != nullptr);
    return env;
}

std::string data_dir() {
    const char* env = std::getenv("NYQSHAPE_TEST_DATA");
    REQUIRE(env != nullptr);
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string stderr_text;
};

RunResult run_cli(const std::string& args, const fs::path& workdir) {
    const fs::path err_file = workdir / "stderr.txt";
    const std::string cmd = "cd '" + workdir.string() + "' && '" + cli_path() + "' " + args +
                            " 2>'" + err_file.string() + "' >/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (fs::exists(err_file)) {
        result.stderr_text = nyqshape::io::read_file(err_file);
        fs::remove(err_file);
    }
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("nyqshape_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("design subcommand writes the expected tap file") {
    TempDir tmp;
    const RunResult r = run_cli("design --family fexp --alpha 0.22 --symbol-rate 3.84e6 "
                                "--oversample 2 --delay 4 --norm dc --out taps.csv",
                                tmp.path);
    CHECK(r.exit_code == 0);

    const std::string content = nyqshape::io::read_file(tmp.path / "taps.csv");
    const auto taps = nyqshape::io::parse_taps_csv(content);
    REQUIRE(taps.size() == 17);

    // Matches the in-process design bit-exactly through the CSV round trip.
    const nyqshape::DesignSpec spec{{3.84e6, 0.22}, nyqshape::PulseFamily::FlippedExponential,
                                    2, 4, nyqshape::Normalization::UnitDcGain};
    const nyqshape::FirFilter f = nyqshape::design_frequency_sampling(spec);
    for (int i = 0; i < 17; ++i) CHECK(taps[i] == f.taps[i]);
}

TEST_CASE("design validates the roll-off bound with exit code 2") {
    TempDir tmp;
    const RunResult r = run_cli("design --alpha 1.5 --out taps.csv", tmp.path);
    CHECK(r.exit_code == 2);
    CHECK_THAT(r.stderr_text, ContainsSubstring("--alpha"));
    CHECK_THAT(r.stderr_text, ContainsSubstring("[0 - 1]"));
    CHECK_FALSE(fs::exists(tmp.path / "taps.csv"));
    CHECK_FALSE(fs::exists(tmp.path / "taps.csv.tmp"));
}

TEST_CASE("unknown flags and missing subcommands fail with exit code 2") {
    TempDir tmp;
    CHECK(run_cli("design --out t.csv --no-such-flag", tmp.path).exit_code == 2);
    CHECK(run_cli("", tmp.path).exit_code == 2);
    CHECK(run_cli("design", tmp.path).exit_code == 2); // --out is required
}

TEST_CASE("sweep subcommand emits one row per value") {
    TempDir tmp;
    const RunResult r = run_cli("sweep --axis delay --values 2,4,6,8,10 --family fexp "
                                "--alpha 0.22 --oversample 2 --format csv --out sweep.csv",
                                tmp.path);
    CHECK(r.exit_code == 0);
    const std::string content = nyqshape::io::read_file(tmp.path / "sweep.csv");
    CHECK(std::count(content.begin(), content.end(), '\n') == 6); // header + 5 rows
    CHECK(content.rfind("swept_value,", 0) == 0);
    CHECK_THAT(content, ContainsSubstring("\n10,41,"));
}

TEST_CASE("sweep enforces parity through exit codes") {
    TempDir tmp;
    const RunResult r =
        run_cli("sweep --axis oversample_even --values 3 --out sweep.csv", tmp.path);
    CHECK(r.exit_code == 2);
    CHECK_THAT(r.stderr_text, ContainsSubstring("parity"));
}

TEST_CASE("repeated identical invocations are byte-identical") {
    TempDir tmp;
    REQUIRE(run_cli("analyze --family fsech --delay 3 --points 512 --out a.csv", tmp.path)
                .exit_code == 0);
    REQUIRE(run_cli("analyze --family fsech --delay 3 --points 512 --out b.csv", tmp.path)
                .exit_code == 0);
    CHECK(nyqshape::io::read_file(tmp.path / "a.csv") ==
          nyqshape::io::read_file(tmp.path / "b.csv"));

    REQUIRE(run_cli("design --delay 5 --norm energy --format json --out a.json", tmp.path)
                .exit_code == 0);
    REQUIRE(run_cli("design --delay 5 --norm energy --format json --out b.json", tmp.path)
                .exit_code == 0);
    CHECK(nyqshape::io::read_file(tmp.path / "a.json") ==
          nyqshape::io::read_file(tmp.path / "b.json"));
}

TEST_CASE("golden regression of the frozen WCDMA design") {
    TempDir tmp;
    REQUIRE(run_cli("design --family fexp --alpha 0.22 --symbol-rate 3.84e6 --oversample 2 "
                    "--delay 4 --norm dc --out wcdma.csv",
                    tmp.path)
                .exit_code == 0);
    const std::string fresh = nyqshape::io::read_file(tmp.path / "wcdma.csv");
    const std::string golden =
        nyqshape::io::read_file(fs::path(data_dir()) / "wcdma_fexp_a022_m2_d4_dc_taps.csv");
    CHECK(fresh == golden);
}

TEST_CASE("meta sidecar is separate from the data file") {
    TempDir tmp;
    REQUIRE(run_cli("design --delay 2 --meta --out taps.csv", tmp.path).exit_code == 0);
    REQUIRE(fs::exists(tmp.path / "taps.csv.meta"));
    const auto meta = nlohmann::json::parse(nyqshape::io::read_file(tmp.path / "taps.csv.meta"));
    CHECK(meta["tool"] == "nyqshape");
    CHECK(meta["command"] == "design");
    CHECK(meta.contains("generated_utc"));
    // The data file itself carries no run metadata.
    const std::string data = nyqshape::io::read_file(tmp.path / "taps.csv");
    CHECK(data.rfind("index,tap\n", 0) == 0);
}

TEST_CASE("config file supplies defaults and flags override it") {
    TempDir tmp;
    {
        std::ofstream cfg(tmp.path / "run.cfg");
        cfg << "# WCDMA base configuration\n"
            << "family=fsech\n"
            << "delay=4\n"
            << "norm=dc\n";
    }
    REQUIRE(run_cli("design --config run.cfg --out a.csv", tmp.path).exit_code == 0);
    const auto a = nyqshape::io::parse_taps_csv(nyqshape::io::read_file(tmp.path / "a.csv"));
    CHECK(a.size() == 17); // delay=4 from the config file

    REQUIRE(run_cli("design --config run.cfg --delay 2 --out b.csv", tmp.path).exit_code == 0);
    const auto b = nyqshape::io::parse_taps_csv(nyqshape::io::read_file(tmp.path / "b.csv"));
    CHECK(b.size() == 9); // command line wins
}

TEST_CASE("compare subcommand writes family table and tradeoff grid") {
    TempDir tmp;
    const RunResult r = run_cli("compare --alpha 0.22 --oversample 2 --delay 2 "
                                "--out families.csv --tradeoff-out grid.csv",
                                tmp.path);
    CHECK(r.exit_code == 0);
    const std::string families = nyqshape::io::read_file(tmp.path / "families.csv");
    CHECK(std::count(families.begin(), families.end(), '\n') == 6);
    const std::string grid = nyqshape::io::read_file(tmp.path / "grid.csv");
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 55);
}
