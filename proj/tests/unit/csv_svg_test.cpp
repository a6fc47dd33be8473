#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "rfa/csv.hpp"
#include "rfa/errors.hpp"
#include "rfa/svg.hpp"

using namespace rfa;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("doubles survive the shortest round trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e300, -2.5e-308, 0.0, -17.25,
                   123456789.123456789}) {
    CHECK(csv::parse_double(csv::format_double(v)) == v);
  }
  CHECK(csv::format_double(0.5) == "0.5");
  CHECK(csv::format_row({1.0, 0.25, -3.0}) == "1,0.25,-3");
  CHECK_THROWS_AS(csv::parse_double("abc"), InputError);
  CHECK_THROWS_AS(csv::parse_double("1.5x"), InputError);
  CHECK_THROWS_AS(csv::parse_double("  "), InputError);
}

TEST_CASE("two-column reader accepts clean files") {
  TempFile f("csv_test_ok.csv", "x,y\r\n0,1\n\n0.5,2.5\n1,-3e-2\n");
  const csv::XY xy = csv::read_xy(f.path);
  REQUIRE(xy.x.size() == 3);
  CHECK(xy.x[1] == 0.5);
  CHECK(xy.y[2] == -0.03);
}

TEST_CASE("reader failures carry the location") {
  TempFile bad_header("csv_test_h.csv", "u,v\n0,1\n");
  CHECK_THROWS_WITH_AS(csv::read_xy(bad_header.path),
                       doctest::Contains("header"), InputError);

  TempFile bad_cell("csv_test_c.csv", "x,y\n0,1\nq,2\n");
  CHECK_THROWS_WITH_AS(csv::read_xy(bad_cell.path), doctest::Contains(":3"),
                       InputError);

  TempFile three_cols("csv_test_3.csv", "x,y\n0,1,2\n");
  CHECK_THROWS_AS(csv::read_xy(three_cols.path), InputError);

  TempFile empty("csv_test_e.csv", "x,y\n");
  CHECK_THROWS_AS(csv::read_xy(empty.path), InputError);

  CHECK_THROWS_WITH_AS(csv::read_xy("does_not_exist.csv"),
                       doctest::Contains("cannot open"), InputError);
}

TEST_CASE("svg chart embeds the series") {
  svg::Polyline line;
  line.xs = {0.0, 0.5, 1.0};
  line.ys = {0.0, 1.0, 0.0};
  line.color = "#cc0000";
  svg::Markers dots;
  dots.xs = {0.5};
  dots.ys = {1.0};
  const std::string s = svg::chart("tent & dots", {line}, {dots});
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find("polyline") != std::string::npos);
  CHECK(s.find("#cc0000") != std::string::npos);
  CHECK(s.find("circle") != std::string::npos);
  CHECK(s.find("tent &amp; dots") != std::string::npos);

  CHECK_THROWS_AS(svg::chart("empty", {}), InvalidArgument);
  svg::Polyline mismatched;
  mismatched.xs = {0.0, 1.0};
  mismatched.ys = {0.0};
  CHECK_THROWS_AS(svg::chart("bad", {mismatched}), InvalidArgument);
}
