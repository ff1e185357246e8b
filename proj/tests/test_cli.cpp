#include "fano/commands.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

using namespace fano;
using namespace fano::cli;

namespace {

const std::string kSamples = FANO_SAMPLES_DIR;
const std::string kBinary = FANO_K0_BINARY;

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = kBinary + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  int raw = pclose(pipe.release());
  return {WEXITSTATUS(raw), out};
}

}  // namespace

TEST(Commands, Classify) {
  auto r = cmd_classify();
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.payload.size(), 17u);
  EXPECT_EQ(cmd_classify(2).payload.size(), 5u);
  EXPECT_EQ(cmd_classify(1).payload.size(), 10u);
  EXPECT_EQ(cmd_classify(5).exit_code, kUsageError);
}

TEST(Commands, K0) {
  auto r = cmd_k0(1, 22);
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.payload["chi0_coefficients"][1], "23/6");
  EXPECT_EQ(r.payload["gram_determinant"], "1");
  EXPECT_EQ(cmd_k0(1, 21).exit_code, kUsageError);
  EXPECT_EQ(cmd_k0(2, 6).exit_code, kUsageError);
}

TEST(Commands, VerifyRr) {
  auto all = cmd_verify_rr(std::nullopt, true);
  EXPECT_EQ(all.exit_code, kSuccess);
  ASSERT_TRUE(all.payload.is_array());
  EXPECT_EQ(all.payload.size(), 5u);
  std::size_t lines = 0, pos = 0;
  while ((pos = all.rendered.find("PASS", pos)) != std::string::npos) ++lines, ++pos;
  EXPECT_EQ(lines, 5u);
  EXPECT_NE(all.rendered.find("witness [[0,1],[-1,-2]]"), std::string::npos) << all.rendered;

  auto three = cmd_verify_rr(3, false);
  EXPECT_EQ(three.payload["gramB"], Json::parse(R"([["-1","-1"],["-2","-3"]])"));
  EXPECT_EQ(three.payload["gramA"], Json::parse(R"([["-3","-4"],["-5","-7"]])"));
  EXPECT_TRUE(three.payload["passed"].get<bool>());

  EXPECT_EQ(cmd_verify_rr(7, false).exit_code, kUsageError);
  EXPECT_EQ(cmd_verify_rr(std::nullopt, false).exit_code, kUsageError);
  EXPECT_EQ(cmd_verify_rr(3, true).exit_code, kUsageError);
}

TEST(Commands, Sod) {
  EXPECT_EQ(cmd_sod(2, 5).exit_code, kSuccess);
  EXPECT_EQ(cmd_sod(1, 22).payload["complement"]["rank"], 2);
  EXPECT_EQ(cmd_sod(4, 1).payload["complement"]["rank"], 0);
  EXPECT_EQ(cmd_sod(1, 12).payload["complement"]["rank"], 3);
}

TEST(Commands, Bundle) {
  auto r = cmd_bundle("index2", 3, 2);
  EXPECT_EQ(r.payload["chi"], "6");
  EXPECT_EQ(r.payload["degree_computed"], "4");
  auto s = cmd_bundle("index1", 5, 2);
  EXPECT_EQ(s.payload["degree_computed"], "4");
  EXPECT_EQ(s.payload["degree_paper"], "12");
  EXPECT_TRUE(s.payload["discrepancy"].get<bool>());
  EXPECT_EQ(cmd_bundle("index3", 1, 1).exit_code, kUsageError);
  EXPECT_EQ(cmd_bundle("index1", 9, 1).exit_code, kUsageError);
}

TEST(Commands, Coincidence) {
  auto r = cmd_coincidence(5, 4, 2);
  EXPECT_TRUE(r.payload["dimensions_coincide"].get<bool>());
  EXPECT_TRUE(r.payload["degrees_coincide"].get<bool>());
  EXPECT_FALSE(r.payload["closed_form_degrees_coincide"].get<bool>());
}

TEST(Commands, Isometry) {
  auto r = cmd_isometry(read_json_file(kSamples + "/chiA_g8.json"), read_json_file(kSamples + "/chiB_d3.json"), 3);
  EXPECT_EQ(r.exit_code, kSuccess);
  EXPECT_EQ(r.payload["count"], 2);
  bool found = false;
  for (const auto& w : r.payload["witnesses"]) found = found || w == Json::parse(R"([["0","1"],["-1","-2"]])");
  EXPECT_TRUE(found);
  EXPECT_EQ(cmd_isometry(Json{{"gram", {{1, 2}}}}, Json{{"gram", {{1}}}}).exit_code, kUsageError);
  EXPECT_EQ(cmd_isometry(Json{{"rank", 3}, {"gram", {{1}}}}, Json{{"gram", {{1}}}}).exit_code, kUsageError);
}

TEST(Commands, Ak) {
  auto r = cmd_ak(read_json_file(kSamples + "/fano3.json"));
  EXPECT_TRUE(r.payload["verdict"].get<bool>());
  EXPECT_EQ(r.payload["reason"], "dimension ≤ 3");
  EXPECT_TRUE(cmd_ak(read_json_file(kSamples + "/cubic4.json")).payload["verdict"].get<bool>());
  auto bad = cmd_ak(read_json_file(kSamples + "/det3_fourfold.json"));
  EXPECT_FALSE(bad.payload["verdict"].get<bool>());
  EXPECT_EQ(bad.payload["failing_p"], 3);
  EXPECT_EQ(cmd_ak(Json{{"n", 3}}).exit_code, kUsageError);
}

TEST(Json, RoundTrips) {
  for (const auto& f : all_descriptors()) {
    EXPECT_EQ(io::descriptor_from_json(io::to_json(f)), f);
    for (const auto& b : structure_sheaf_basis(f)) {
      EXPECT_EQ(io::kclass_from_json(io::to_json(b)), b);
      // through text as well
      EXPECT_EQ(io::kclass_from_json(Json::parse(io::to_json(b).dump())), b);
    }
    auto g = BilinearLattice(structure_sheaf_gram(f).matrix);
    EXPECT_EQ(io::lattice_from_json(io::to_json(g)), g);
  }
  auto p = fano_pairing_data(validate(1, 22));
  auto back = io::pairing_from_json(io::to_json(p));
  EXPECT_EQ(back.n, p.n);
  EXPECT_EQ(back.ranks, p.ranks);
  EXPECT_EQ(back.pairings, p.pairings);
  EXPECT_EQ(io::rational_from_json(io::to_json(Rational(-1, 6))), Rational(-1, 6));
  EXPECT_EQ(io::to_json(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(io::rational_from_json("4/-6"), Rational(-2, 3));
  EXPECT_THROW(io::rational_from_json("1/0"), ValidationError);
}

TEST(Json, Deterministic) {
  EXPECT_EQ(cmd_verify_rr(std::nullopt, true).payload.dump(), cmd_verify_rr(std::nullopt, true).payload.dump());
  EXPECT_EQ(cmd_k0(2, 3).payload.dump(), cmd_k0(2, 3).payload.dump());
}

TEST(Binary, ExitCodesAndOutput) {
  auto k0 = run("k0 --index 1 --degree 22 --json");
  EXPECT_EQ(k0.status, 0);
  EXPECT_EQ(Json::parse(k0.out)["chi0_coefficients"][1], "23/6");
  EXPECT_EQ(run("--json k0 --index 1 --degree 22").out, k0.out);
  EXPECT_EQ(run("k0 --index 1 --degree 21").status, 1);
  EXPECT_EQ(run("verify-rr --all").status, 0);
  EXPECT_EQ(run("verify-rr 7").status, 1);
  EXPECT_EQ(run("bogus").status, 1);
  EXPECT_EQ(run("bundle index2 --d 3 --t 1").status, 1);
  auto b = run("bundle index2 --d 3 --k 2 --json");
  EXPECT_EQ(Json::parse(b.out)["chi"], "6");
  auto ak = run("ak --input " + kSamples + "/fano3.json --json");
  EXPECT_TRUE(Json::parse(ak.out)["verdict"].get<bool>());
  EXPECT_EQ(run("ak --input /nonexistent.json").status, 1);
  auto iso = run("isometry --g1 " + kSamples + "/chiA_g8.json --g2 " + kSamples + "/chiB_d3.json --bound 3 --json");
  EXPECT_EQ(iso.status, 0);
  EXPECT_EQ(Json::parse(iso.out)["count"], 2);
  EXPECT_EQ(run("classify --quiet").out, "");
  EXPECT_EQ(run("--help").status, 0);
}
