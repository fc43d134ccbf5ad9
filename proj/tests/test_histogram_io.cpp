#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "entpow/errors.hpp"
#include "entpow/histogram.hpp"
#include "entpow/io.hpp"
#include "entpow/random.hpp"

using namespace entpow;

TEST_CASE("histogram binning") {
  Histogram h(-1.0, 1.0, 4);
  CHECK(h.bin_width() == 0.5);
  CHECK(h.bin_center(0) == -0.75);
  CHECK(h.bin_of(-1.0) == 0);
  CHECK(h.bin_of(1.0) == 3);
  CHECK(h.bin_of(1.0 + 1e-12) == 3);
  CHECK(h.bin_of(-1.0 - 1e-12) == 0);
  CHECK(h.bin_of(0.0) == 2);
  CHECK_THROWS_AS(h.add(1.1), BinOverflow);
  CHECK_THROWS_AS(h.add(-1.0 - 1e-6), BinOverflow);
}

TEST_CASE("histogram density integrates to one") {
  Histogram h(0.0, 1.0, 37);
  RngStream rng(41, 0);
  for (int i = 0; i < 10000; ++i) h.add(rng.uniform());
  CHECK(h.total() == 10000);
  CHECK(std::abs(h.integral() - 1.0) < 1e-12);

  Histogram empty(0.0, 1.0, 5);
  CHECK(empty.integral() == 0.0);
}

TEST_CASE("histogram merge") {
  Histogram a(0, 1, 10), b(0, 1, 10), c(0, 2, 10);
  a.add(0.05);
  b.add(0.05);
  b.add(0.95);
  a.merge(b);
  CHECK(a.total() == 3);
  CHECK(a.counts()[0] == 2);
  CHECK(a.counts()[9] == 1);
  CHECK_THROWS_AS(a.merge(c), DimensionMismatch);
}

TEST_CASE("mean accumulator") {
  MeanAccumulator m, m1, m2;
  for (double x : {1.0, 2.0, 3.0, 4.0}) m.add(x);
  m1.add(1.0);
  m1.add(2.0);
  m2.add(3.0);
  m2.add(4.0);
  m1.merge(m2);
  CHECK(m.mean() == 2.5);
  CHECK(m.variance() == doctest::Approx(5.0 / 3.0));
  CHECK(m.stderr_of_mean() == doctest::Approx(std::sqrt(5.0 / 12.0)));
  CHECK(m1.mean() == m.mean());
  CHECK(m1.variance() == m.variance());
}

TEST_CASE("compare_histograms") {
  Histogram a(0, 1, 2), b(0, 1, 2);
  for (int i = 0; i < 100; ++i) {
    a.add(0.25);
    b.add(i < 50 ? 0.25 : 0.75);
  }
  const auto c = compare_histograms(a, b);
  CHECK(c.sup_difference == doctest::Approx(1.0));
  CHECK(c.worst_bin == 0);
  CHECK(c.combined_stderr > 0.0);
  CHECK_FALSE(c.agree());
  CHECK(compare_histograms(a, a).sup_difference == 0.0);
}

TEST_CASE("csv layout and round trip") {
  Histogram h(-1.0, 1.0, 5);
  h.meta.experiment = "fig1";
  h.meta.label = "cnot";
  h.meta.seed = 7;
  h.meta.params["gate"] = "cnot";
  h.meta.params["zeta"] = "1";
  h.meta.params["alpha"] = "2";
  h.add(0.1);
  h.add(0.1);
  h.add(-0.9);

  const std::string text = histogram_csv(h);
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 11 + 5);
  CHECK(lines[0] == "# experiment: fig1");
  CHECK(lines[1] == "# label: cnot");
  CHECK(lines[2] == "# seed: 7");
  CHECK(lines[3] == "# samples: 3");
  CHECK(lines[4] == "# gate: cnot");
  CHECK(lines[5] == "# bins: 5");
  CHECK(lines[8] == "# alpha: 2");
  CHECK(lines[9] == "# zeta: 1");
  CHECK(lines[10] == "bin_center,density");
  CHECK(lines[11].rfind("-0.80000000000000004,", 0) == 0);

  const auto parsed = parse_histogram_csv(text);
  CHECK(parsed.get("experiment") == "fig1");
  CHECK(parsed.get("seed") == "7");
  CHECK(parsed.get("gate") == "cnot");
  CHECK_THROWS_AS(parsed.get("missing"), Error);
  REQUIRE(parsed.densities.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(parsed.bin_centers[i] == h.bin_center(i));
    CHECK(parsed.densities[i] == h.density(i));
  }
  CHECK(parsed.densities[1] == 0.0);  // empty bins keep their row

  double integral = 0.0;
  for (double d : parsed.densities) integral += d * h.bin_width();
  CHECK(std::abs(integral - 1.0) < 1e-9);
}

TEST_CASE("csv without a gate says none") {
  Histogram h(0, 1, 3);
  h.add(0.5);
  CHECK(histogram_csv(h).find("# gate: none\n") != std::string::npos);
}

TEST_CASE("csv file io") {
  const auto dir = std::filesystem::temp_directory_path() / "entpow_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  Histogram h(0, 1, 4);
  h.meta.experiment = "x";
  h.add(0.3);
  write_csv(h, dir / "h.csv");
  const auto back = read_histogram_csv(dir / "h.csv");
  CHECK(back.get("experiment") == "x");
  CHECK(back.densities[1] == 4.0);

  try {
    write_csv(h, dir / "missing" / "h.csv");
    FAIL("expected an IO error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("missing") != std::string::npos);
  }
  CHECK_THROWS_AS(read_histogram_csv(dir / "nope.csv"), Error);
  CHECK_THROWS_AS(parse_histogram_csv("# a: 1\nwrong,header\n"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("curve_path") {
  CHECK(curve_path("out/fig3", "na2", false) == std::filesystem::path("out/fig3_na2.csv"));
  CHECK(curve_path("out/fig6", "dw", true) == std::filesystem::path("out/fig6.csv"));
}
