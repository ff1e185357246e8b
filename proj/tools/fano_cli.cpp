// fano-k0: command-line front end for the numerical K-theory toolkit.

#include "fano/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

int emit(const fano::cli::CommandResult& r, bool json, bool quiet) {
  if (r.exit_code == fano::cli::kUsageError) {
    if (!quiet) std::cerr << r.rendered;
    if (json) std::cout << r.payload.dump(2) << "\n";
    return r.exit_code;
  }
  if (json)
    std::cout << r.payload.dump(2) << "\n";
  else if (!quiet)
    std::cout << r.rendered;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fano::cli;

  CLI::App app{"Numerical K-theory of Picard-rank-1 Fano threefolds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool quiet = false;
  app.add_flag("--json", json, "Print the JSON payload instead of a table");
  app.add_flag("--quiet", quiet, "Suppress table output; rely on the exit code");

  std::optional<int> classify_index;
  auto* classify = app.add_subcommand("classify", "List the 17 deformation classes");
  classify->add_option("--index", classify_index, "Restrict to one index");

  int index = 0, degree = 0;
  auto* k0 = app.add_subcommand("k0", "Structure-sheaf basis, Todd class and Euler Gram of K_0(X)_num");
  k0->add_option("--index", index)->required();
  k0->add_option("--degree", degree)->required();

  std::optional<int> rr_d;
  bool rr_all = false;
  int rr_bound = fano::kDefaultIsometryBound;
  auto* rr = app.add_subcommand("verify-rr", "Compare the complements on Y_d and X_{4d+2}");
  rr->add_option("d", rr_d, "Degree d of Y_d");
  rr->add_flag("--all", rr_all, "Run d = 1..5");
  rr->add_option("--bound", rr_bound, "Entry bound for the isometry search")->check(CLI::PositiveNumber);

  int sod_index = 0, sod_degree = 0;
  auto* sod = app.add_subcommand("sod", "Exceptional collection and its right orthogonal");
  sod->add_option("--index", sod_index)->required();
  sod->add_option("--degree", sod_degree)->required();

  std::string side;
  int b_d = 0;
  std::optional<int> b_k, b_t;
  auto* bundle = app.add_subcommand("bundle", "Rank-2 bundle numerology (index1: --d --t, index2: --d --k)");
  bundle->add_option("side", side)->required()->check(CLI::IsMember({"index1", "index2"}));
  bundle->add_option("--d", b_d)->required();
  bundle->add_option("--k", b_k);
  bundle->add_option("--t", b_t);

  int c_d = 0, c_k = 0, c_t = 0;
  auto* coincidence = app.add_subcommand("coincidence", "Compare dimensions and degrees for (d, k, t)");
  coincidence->add_option("--d", c_d)->required();
  coincidence->add_option("--k", c_k)->required();
  coincidence->add_option("--t", c_t)->required();

  std::string g1_path, g2_path;
  int iso_bound = fano::kDefaultIsometryBound;
  auto* isometry = app.add_subcommand("isometry", "Bounded search for A with A^T g2 A = g1");
  isometry->add_option("--g1", g1_path)->required();
  isometry->add_option("--g2", g2_path)->required();
  isometry->add_option("--bound", iso_bound)->check(CLI::PositiveNumber);

  std::string ak_path;
  auto* ak = app.add_subcommand("ak", "Decide AK-compatibility from intersection pairing data");
  ak->add_option("--input", ak_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  CommandResult r;
  if (*classify) {
    r = cmd_classify(classify_index);
  } else if (*k0) {
    r = cmd_k0(index, degree);
  } else if (*rr) {
    r = cmd_verify_rr(rr_d, rr_all, rr_bound);
  } else if (*sod) {
    r = cmd_sod(sod_index, sod_degree);
  } else if (*bundle) {
    if (side == "index1" && (!b_t || b_k))
      r = detail::usage_error("bundle index1 takes --d and --t");
    else if (side == "index2" && (!b_k || b_t))
      r = detail::usage_error("bundle index2 takes --d and --k");
    else
      r = cmd_bundle(side, b_d, side == "index1" ? *b_t : *b_k);
  } else if (*coincidence) {
    r = cmd_coincidence(c_d, c_k, c_t);
  } else if (*isometry) {
    try {
      r = cmd_isometry(read_json_file(g1_path), read_json_file(g2_path), iso_bound);
    } catch (const fano::ValidationError& e) {
      r = detail::usage_error(e.what());
    }
  } else if (*ak) {
    try {
      r = cmd_ak(read_json_file(ak_path));
    } catch (const fano::ValidationError& e) {
      r = detail::usage_error(e.what());
    }
  }
  return emit(r, json, quiet);
}
