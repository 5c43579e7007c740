#include <gtest/gtest.h>

#include <fstream>

#include "report.hpp"

TEST(RunReport, JsonRoundTrip) {
    cli::RunReport r;
    r.command = "check-thin";
    r.inputs.push_back({"a.json", std::string(64, 'f')});
    r.result = {{"instances", thincoalg::Json::array({{{"path", "a.json"}, {"thin", true}, {"root", 0}}})}};
    r.timing_ms = 1.5;
    r.exit_code = cli::kNegative;
    const cli::RunReport back = cli::report_from_json(thincoalg::parse_json(cli::to_json(r).dump()));
    EXPECT_EQ(back.command, r.command);
    ASSERT_EQ(back.inputs.size(), 1u);
    EXPECT_EQ(back.inputs[0].path, "a.json");
    EXPECT_EQ(back.inputs[0].sha256, r.inputs[0].sha256);
    EXPECT_EQ(back.result, r.result);
    EXPECT_EQ(back.timing_ms, r.timing_ms);
    EXPECT_EQ(back.exit_code, r.exit_code);
}

TEST(RunReport, Sha256OfKnownContent) {
    const auto path = std::filesystem::temp_directory_path() / "thincoalg_sha_test.txt";
    std::ofstream(path, std::ios::binary) << "abc";
    EXPECT_EQ(cli::sha256_file(path), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    std::filesystem::remove(path);
}
