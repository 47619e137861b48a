#include "flatcover/flatcover.h"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace {

nlohmann::json take(char* s) {
  auto j = nlohmann::json::parse(s);
  fc_string_free(s);
  return j;
}

}  // namespace

TEST(CApi, VersionAndErrors) {
  EXPECT_STRNE(fc_version(), "");
  fc_pointset* s = nullptr;
  EXPECT_EQ(fc_pointset_new(-1, &s), FC_EPARAM);
  EXPECT_EQ(s, nullptr);
  EXPECT_STRNE(fc_last_error(), "");
  EXPECT_EQ(fc_pointset_load("/nonexistent/flatset.txt", &s), FC_EIO);
  EXPECT_EQ(fc_set_r_max(0), FC_EPARAM);
  EXPECT_EQ(fc_set_threads(0), FC_OK);
}

TEST(CApi, PointSetOperations) {
  const uint64_t pts[] = {6, 1, 1};
  fc_pointset* s = nullptr;
  ASSERT_EQ(fc_pointset_from_points(3, pts, 3, &s), FC_OK);
  EXPECT_EQ(fc_pointset_dim(s), 3);
  EXPECT_EQ(fc_pointset_size(s), 2u);
  EXPECT_EQ(fc_pointset_insert(s, 8), FC_EPARAM);
  EXPECT_EQ(fc_pointset_insert(s, 3), FC_OK);
  EXPECT_EQ(fc_pointset_erase(s, 6), FC_OK);
  EXPECT_EQ(fc_pointset_contains(s, 3), 1);
  EXPECT_EQ(fc_pointset_contains(s, 6), 0);
  uint64_t buf[1];
  size_t n = 0;
  ASSERT_EQ(fc_pointset_points(s, buf, 1, &n), FC_OK);
  EXPECT_EQ(n, 2u);
  EXPECT_EQ(buf[0], 1u);

  const auto path = (std::filesystem::temp_directory_path() / "flatcover_capi_set.txt").string();
  ASSERT_EQ(fc_pointset_save(s, path.c_str(), 1), FC_OK);
  fc_pointset* back = nullptr;
  ASSERT_EQ(fc_pointset_load(path.c_str(), &back), FC_OK);
  EXPECT_EQ(fc_pointset_size(back), 2u);
  EXPECT_EQ(fc_pointset_contains(back, 3), 1);
  fc_pointset_free(back);
  std::filesystem::remove(path);
  fc_pointset_free(s);
}

TEST(CApi, ConstructAndCheck) {
  fc_record* rec = nullptr;
  ASSERT_EQ(fc_construct("balanced", 8, 2, nullptr, 0, 0, &rec), FC_OK);
  char* json = nullptr;
  ASSERT_EQ(fc_record_json(rec, &json), FC_OK);
  const auto j = take(json);
  EXPECT_EQ(j.at("size"), 24);

  ASSERT_EQ(fc_record_check(rec, nullptr, 0, 7, &json), FC_OK);
  EXPECT_TRUE(take(json).at("holds").get<bool>());

  fc_pointset* set = nullptr;
  ASSERT_EQ(fc_record_set(rec, &set), FC_OK);
  EXPECT_EQ(fc_pointset_size(set), 24u);
  ASSERT_EQ(fc_verify(set, 2, "nonblocking", "search", 0, &json), FC_OK);
  take(json);
  ASSERT_EQ(fc_verify(set, 2, "nonblocking", "enumerate", 0, &json), FC_OK);
  take(json);
  EXPECT_EQ(fc_pointset_insert(set, 0b11000000), FC_OK);
  EXPECT_EQ(fc_record_check(rec, set, 0, 7, &json), FC_FAILS);
  take(json);
  EXPECT_EQ(fc_verify(set, 2, "nonblocking", "duality", 0, &json), FC_FAILS);
  take(json);
  fc_pointset_free(set);

  char* sidecar = nullptr;
  ASSERT_EQ(fc_record_json(rec, &sidecar), FC_OK);
  fc_record* rebuilt = nullptr;
  EXPECT_EQ(fc_record_from_json(sidecar, nullptr, &rebuilt), FC_OK);
  fc_string_free(sidecar);
  ASSERT_EQ(fc_record_check(rebuilt, nullptr, 0, 7, &json), FC_OK);
  take(json);
  fc_record_free(rebuilt);
  fc_record_free(rec);

  EXPECT_EQ(fc_construct("nonsense", 8, 2, nullptr, 0, 0, &rec), FC_EPARAM);
  EXPECT_EQ(fc_construct("multiblock", 9, 2, "9:2", 0, 0, &rec), FC_EPARAM);
  EXPECT_NE(std::string(fc_last_error()).find("r_i <= d + d_i"), std::string::npos);
  EXPECT_EQ(fc_record_from_json("{", nullptr, &rec), FC_EFORMAT);
}

TEST(CApi, VerifyBudgetAndModes) {
  fc_pointset* s = nullptr;
  ASSERT_EQ(fc_pointset_new(8, &s), FC_OK);
  for (uint64_t p = 0; p < 256; ++p) fc_pointset_insert(s, p);
  char* json = nullptr;
  EXPECT_EQ(fc_verify(s, 3, "complete", "search", 10, &json), FC_INFEASIBLE);
  EXPECT_EQ(fc_verify(s, 3, "complete", "search", 0, &json), FC_OK);
  take(json);
  EXPECT_EQ(fc_verify(s, 3, "sideways", "search", 0, &json), FC_EPARAM);
  EXPECT_EQ(fc_verify(s, 9, "complete", "search", 0, &json), FC_EPARAM);
  fc_pointset_free(s);
}

TEST(CApi, ExactBoundsAndTables) {
  char* json = nullptr;
  ASSERT_EQ(fc_exact(3, 2, "gamma", 0, nullptr, &json), FC_OK);
  EXPECT_EQ(take(json).at("value"), 6);
  EXPECT_EQ(fc_exact(7, 3, "gamma", 0, nullptr, &json), FC_INFEASIBLE);
  EXPECT_EQ(fc_exact(3, 2, "delta", 0, nullptr, &json), FC_EPARAM);

  ASSERT_EQ(fc_bounds(6, 2, &json), FC_OK);
  const auto b = take(json);
  EXPECT_TRUE(b.contains("gamma") && b.contains("beta"));

  ASSERT_EQ(fc_table(2, 4, 3, 0, nullptr, &json), FC_OK);
  take(json);
  ASSERT_EQ(fc_compare_lower(20, &json), FC_OK);
  take(json);
  ASSERT_EQ(fc_code_weights("dual-bch", 4, 2, &json), FC_OK);
  EXPECT_EQ(take(json).at("max"), 12);
  EXPECT_EQ(fc_code_weights("hamming", 3, 0, &json), FC_EPARAM);
}
