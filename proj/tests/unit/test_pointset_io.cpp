#include "flatcover/config.hpp"
#include "flatcover/error.hpp"
#include "flatcover/flatset_io.hpp"
#include "flatcover/pointset.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

using namespace flatcover;

namespace {

PointSetF2 random_set(std::mt19937_64& rng, int r) {
  PointSetF2 s(r);
  for (Point p = 0; p < s.universe(); ++p)
    if (rng() % 3 == 0) s.insert(p);
  return s;
}

}  // namespace

TEST(PointSet, BasicOperationsMatchStdSet) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const int r = rng() % 9;
    PointSetF2 s(r);
    std::set<Point> ref;
    for (int k = 0; k < 40; ++k) {
      const Point p = rng() & low_mask(r);
      if (rng() & 1) {
        s.insert(p);
        ref.insert(p);
      } else {
        s.erase(p);
        ref.erase(p);
      }
    }
    EXPECT_EQ(s.size(), ref.size());
    EXPECT_EQ(s.points(), std::vector<Point>(ref.begin(), ref.end()));
    const auto c = s.complement();
    EXPECT_EQ(c.size() + s.size(), s.universe());
    for (Point p = 0; p < s.universe(); ++p) EXPECT_NE(c.contains(p), s.contains(p));
    const Point shift = rng() & low_mask(r);
    const auto moved = s.translate(shift);
    for (Point p : ref) EXPECT_TRUE(moved.contains(p ^ shift));
    EXPECT_EQ(moved.size(), s.size());
  }
}

TEST(PointSet, RejectsOutOfRange) {
  PointSetF2 s(3);
  EXPECT_THROW(s.insert(8), ParameterError);
  EXPECT_THROW(PointSetF2(-1), ParameterError);
  EXPECT_THROW(PointSetF2(r_max() + 1), ParameterError);
  EXPECT_EQ(PointSetF2::full(4).size(), 16u);
}

TEST(Flatset, RoundTripBothModes) {
  std::mt19937_64 rng(12);
  for (int r = 0; r <= 10; ++r)
    for (auto mode : {FlatsetMode::points, FlatsetMode::hexmask}) {
      const auto s = random_set(rng, r);
      std::stringstream ss;
      write_flatset(ss, s, mode);
      EXPECT_EQ(read_flatset(ss), s) << r;
    }
}

TEST(Flatset, PointsFormatIsExact) {
  const Point pts[] = {0b001, 0b110};
  std::stringstream ss;
  write_flatset(ss, PointSetF2::from_points(3, pts), FlatsetMode::points);
  EXPECT_EQ(ss.str(), "# flatset v1\nr=3\nmode=points\n100\n011\n");
}

TEST(Flatset, HexmaskLayout) {
  // points 0 and 5: nibble 0 = 0b0001, nibble 1 = 0b0010
  const Point pts[] = {0, 5};
  std::stringstream ss;
  write_flatset(ss, PointSetF2::from_points(3, pts), FlatsetMode::hexmask);
  EXPECT_EQ(ss.str(), "# flatset v1\nr=3\nmode=hexmask\n12\n");
  std::stringstream one_bit("# flatset v1\nr=1\nmode=hexmask\n2\n");
  EXPECT_EQ(read_flatset(one_bit).points(), std::vector<Point>{1});
}

TEST(Flatset, MalformedInputIsAFormatError) {
  const char* bad[] = {
      "",
      "# flatset v2\nr=3\nmode=points\n",
      "# flatset v1\nr=x\nmode=points\n",
      "# flatset v1\nr=3\nmode=dots\n",
      "# flatset v1\nr=3\nmode=points\n10\n",
      "# flatset v1\nr=3\nmode=points\n1a0\n",
      "# flatset v1\nr=3\nmode=hexmask\n1\n",
      "# flatset v1\nr=3\nmode=hexmask\n123\n",
      "# flatset v1\nr=3\nmode=hexmask\nzz\n",
      "# flatset v1\nr=1\nmode=hexmask\n4\n",
  };
  for (const char* text : bad) {
    std::stringstream ss(text);
    EXPECT_THROW(read_flatset(ss), FormatError) << text;
  }
}

TEST(Flatset, FileErrorsAreIoErrors) {
  EXPECT_THROW(load_flatset("/nonexistent/dir/set.txt"), IoError);
  EXPECT_THROW(save_flatset("/nonexistent/dir/set.txt", PointSetF2(2), FlatsetMode::points), IoError);
  const auto path = std::filesystem::temp_directory_path() / "flatcover_unit_roundtrip.txt";
  const auto s = PointSetF2::full(5);
  save_flatset(path.string(), s, FlatsetMode::hexmask);
  EXPECT_EQ(load_flatset(path.string()), s);
  std::filesystem::remove(path);
}

TEST(Config, BudgetFromEnvironment) {
  ::setenv("FLATCOVER_BUDGET", "12345", 1);
  EXPECT_EQ(default_budget(), 12345u);
  ::unsetenv("FLATCOVER_BUDGET");
  EXPECT_EQ(default_budget(), kDefaultBudget);
}

TEST(Config, RMaxIsAdjustable) {
  const int old = r_max();
  set_r_max(8);
  EXPECT_THROW(PointSetF2(9), ParameterError);
  set_r_max(old);
  EXPECT_NO_THROW(PointSetF2(9));
}
