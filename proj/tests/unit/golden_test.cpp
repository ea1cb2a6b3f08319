#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "config.hpp"
#include "kplane/parallel.hpp"
#include "runner.hpp"

using namespace kplane::cli;

namespace {

const std::filesystem::path kRoot(KPLANE_SOURCE_DIR);

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Golden : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(Golden, ReportIsByteIdentical) {
  const std::string name = GetParam();
  const RunConfig c = load_config((kRoot / "configs" / (name + ".yaml")).string());
  const std::filesystem::path expected = kRoot / "tests" / "golden" / name / "report.json";
  ASSERT_TRUE(std::filesystem::exists(expected)) << expected;
  const unsigned before = kplane::parallel::threads();
  for (unsigned threads : {1u, 3u}) {
    kplane::parallel::set_threads(threads);
    const std::string got = run_experiment(c).to_json().dump(2) + "\n";
    EXPECT_EQ(got, slurp(expected)) << name << " with " << threads << " threads";
  }
  kplane::parallel::set_threads(before);
}

INSTANTIATE_TEST_SUITE_P(Configs, Golden,
                         ::testing::Values("p1_monotonicity", "affirmative_3d", "general_slicing_pinched_3d",
                                           "pinched_slicing", "pinched_slicing_p4", "solmon_2d", "solmon_3d",
                                           "cap_measure", "decay", "counterexample_no_atoms"));
