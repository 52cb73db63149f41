// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <string>

#include "nyqshape/io.hpp"
#include "nyqshape/rng.hpp"
#include "nyqshape/sweep.hpp"

using namespace nyqshape;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("tap CSV round-trips bit-exactly") {
    Splitmix64 rng(0x5eed0005);
    std::vector<double> taps(33);
    for (double& t : taps) t = 2.0 * rng.uniform() - 1.0;
    taps[3] = 1e-300;
    taps[4] = -0.0;
    taps[5] = 12345.678901234567;

    const std::string csv = io::taps_to_csv(taps);
    const std::vector<double> parsed = io::parse_taps_csv(csv);
    REQUIRE(parsed.size() == taps.size());
    for (std::size_t i = 0; i < taps.size(); ++i) {
        CHECK(parsed[i] == taps[i]);
    }
}

TEST_CASE("tap CSV format") {
    const std::string csv = io::taps_to_csv(std::vector<double>{0.25, 0.5, 0.25});
    CHECK_THAT(csv, ContainsSubstring("index,tap\n"));
    CHECK_THAT(csv, ContainsSubstring("0,2.5000000000000000e-01\n"));
    CHECK_THAT(csv, ContainsSubstring("1,5.0000000000000000e-01\n"));
    CHECK(csv.back() == '\n');
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("tap CSV parser rejects malformed input") {
    CHECK_THROWS_AS(io::parse_taps_csv(""), InvalidArg);
    CHECK_THROWS_AS(io::parse_taps_csv("tap,index\n0,1.0\n"), InvalidArg);
    CHECK_THROWS_AS(io::parse_taps_csv("index,tap\n0;1.0\n"), InvalidArg);
    CHECK_THROWS_AS(io::parse_taps_csv("index,tap\n0,zebra\n"), InvalidArg);
}

TEST_CASE("response and sweep CSV headers are stable") {
    const DesignSpec spec = wcdma_base_spec();
    const FirFilter f = design_frequency_sampling(spec);
    const ResponseGrid grid = frequency_response(f, 512, 0.5 * f.sample_rate_hz);

    const std::string response_csv = io::response_to_csv(grid);
    CHECK(response_csv.rfind("f_hz,norm_freq,mag_db,phase_deg,group_delay_samples\n", 0) == 0);
    CHECK(std::count(response_csv.begin(), response_csv.end(), '\n') == 513);

    const SweepReport report = sweep_delay(spec, {2, 4});
    const std::string sweep_csv = io::sweep_to_csv(report);
    CHECK(sweep_csv.rfind("swept_value,n_taps,occupied_bw_hz,main_lobe_edge_hz,"
                          "stopband_start_hz,peak_sidelobe_db,peak_distortion,"
                          "rms_distortion,phase_at_nu1_deg\n",
                          0) == 0);
    CHECK(std::count(sweep_csv.begin(), sweep_csv.end(), '\n') == 3);
    CHECK_THAT(sweep_csv, ContainsSubstring("\n2,9,"));
    CHECK_THAT(sweep_csv, ContainsSubstring("\n4,17,"));
}

TEST_CASE("JSON output mirrors the CSV fields") {
    const DesignSpec spec = wcdma_base_spec();
    const FirFilter f = design_frequency_sampling(spec);

    const auto taps_doc = nlohmann::json::parse(io::taps_to_json(f.taps));
    REQUIRE(taps_doc.contains("taps"));
    REQUIRE(taps_doc["taps"].size() == f.taps.size());
    CHECK(taps_doc["taps"][0]["index"] == 0);
    CHECK(taps_doc["taps"][0]["tap"].get<double>() == f.taps[0]);

    const ResponseGrid grid = frequency_response(f, 512, 0.5 * f.sample_rate_hz);
    const auto resp_doc = nlohmann::json::parse(io::response_to_json(grid));
    REQUIRE(resp_doc["points"].size() == 512);
    for (const char* key :
         {"f_hz", "norm_freq", "mag_db", "phase_deg", "group_delay_samples"}) {
        CHECK(resp_doc["points"][0].contains(key));
    }
    CHECK(resp_doc["points"][511]["norm_freq"].get<double>() == 1.0);

    const SweepReport report = sweep_alpha(spec, {0.22});
    const auto sweep_doc = nlohmann::json::parse(io::sweep_to_json(report));
    CHECK(sweep_doc["axis_name"] == "alpha");
    REQUIRE(sweep_doc["records"].size() == 1);
    for (const char* key : {"swept_value", "n_taps", "occupied_bw_hz", "main_lobe_edge_hz",
                            "stopband_start_hz", "peak_sidelobe_db", "peak_distortion",
                            "rms_distortion", "phase_at_nu1_deg"}) {
        CHECK(sweep_doc["records"][0].contains(key));
    }
    CHECK(sweep_doc["records"][0]["swept_value"].get<double>() == 0.22);
}

TEST_CASE("comparison serialization") {
    const FamilyComparison cmp = family_comparison(PulseParams{3.84e6, 0.22}, 2, 2);
    const std::string csv = io::comparison_to_csv(cmp);
    CHECK(csv.rfind("family,n_taps,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK_THAT(csv, ContainsSubstring("\nrc,"));
    CHECK_THAT(csv, ContainsSubstring("\nfarcsech,"));

    const std::string grid_csv = io::tradeoff_to_csv(cmp);
    CHECK(grid_csv.rfind("family,delay,oversample,n_taps,peak_distortion,peak_sidelobe_db\n",
                         0) == 0);
    CHECK(std::count(grid_csv.begin(), grid_csv.end(), '\n') == 1 + 9 * 6);

    const auto doc = nlohmann::json::parse(io::comparison_to_json(cmp));
    CHECK(doc["families"].size() == 5);
    CHECK(doc["tradeoff"].size() == 54);
}

TEST_CASE("serialization is deterministic") {
    const DesignSpec spec = wcdma_base_spec();
    const SweepReport a = sweep_oversample(spec, {2, 4}, Parity::Even);
    const SweepReport b = sweep_oversample(spec, {2, 4}, Parity::Even);
    CHECK(io::sweep_to_csv(a) == io::sweep_to_csv(b));
    CHECK(io::sweep_to_json(a) == io::sweep_to_json(b));
}

TEST_CASE("atomic writes leave no temp files behind") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "nyqshape_io_test";
    fs::create_directories(dir);
    const fs::path target = dir / "taps.csv";

    io::write_file_atomic(target, "index,tap\n0,1.0000000000000000e+00\n");
    CHECK(fs::exists(target));
    CHECK_FALSE(fs::exists(dir / "taps.csv.tmp"));
    CHECK(io::read_file(target) == "index,tap\n0,1.0000000000000000e+00\n");

    // Overwrite is atomic as well.
    io::write_file_atomic(target, "index,tap\n");
    CHECK(io::read_file(target) == "index,tap\n");

    // Unwritable destination: error, and no partial file appears.
    const fs::path bad = dir / "missing_subdir" / "taps.csv";
    CHECK_THROWS_AS(io::write_file_atomic(bad, "x"), Error);
    CHECK_FALSE(fs::exists(bad));
    fs::remove_all(dir);
}

TEST_CASE("number formatting is locale independent and exact") {
    CHECK(io::format_sci17(0.25) == "2.5000000000000000e-01");
    CHECK(io::format_sci17(-1.0) == "-1.0000000000000000e+00");
    CHECK(io::format_shortest(0.1) == "0.1");
    CHECK(io::format_shortest(3.84e6) == "3840000");
    CHECK(io::format_shortest(-720.0) == "-720");
    CHECK(io::parse_double("2.5000000000000000e-01") == 0.25);
    CHECK_THROWS_AS(io::parse_double("1.0x"), InvalidArg);
}
