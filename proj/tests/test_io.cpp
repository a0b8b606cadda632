#include "doctest.h"

#include "diskgeo/io.hpp"

using namespace diskgeo;

TEST_CASE("parse_complex accepts the flag grammar") {
    CHECK(parse_complex("0") == Complex(0, 0));
    CHECK(parse_complex("-0.3") == Complex(-0.3, 0));
    CHECK(parse_complex("0.5+0.1i") == Complex(0.5, 0.1));
    CHECK(parse_complex("0.5-0.1i") == Complex(0.5, -0.1));
    CHECK(parse_complex("1+1i") == Complex(1, 1));
    CHECK(parse_complex("-2.25-3i") == Complex(-2.25, -3));
    CHECK(parse_complex("0+1i") == Complex(0, 1));
}

TEST_CASE("parse_complex rejects everything else") {
    for (const char* bad : {"", "abc", "0.5 + 0.1i", "1e-3", "i", "+0.5", "0.5+i", "0.5+0.1j",
                            "0.5+0.1i junk", "1.", "--1", "0.5+-0.1i"})
        CHECK_THROWS_AS(parse_complex(bad), Error);
}

TEST_CASE("parse_polygon_text") {
    const ConvexPolygon square = parse_polygon_text(
        "# unit square, counterclockwise\n"
        "1 -1\n"
        "1 1   # top right\n"
        "\n"
        "-1 1\n"
        "-1 -1\n");
    CHECK(square.size() == 4);
    CHECK(square.contains(Complex(0, 0)));

    CHECK_THROWS_AS(parse_polygon_text("0 0\n1 0\n"), InvalidPolygon);
    CHECK_THROWS_AS(parse_polygon_text("0 0\n0 1\n1 0\n"), InvalidPolygon);  // clockwise
    CHECK_THROWS_AS(parse_polygon_text("0 0\nbogus line\n1 1\n"), Error);
    CHECK_THROWS_AS(parse_polygon_text("0 0 0\n1 0\n0 1\n"), Error);  // three fields
}

TEST_CASE("read_polygon_file reports missing files") {
    CHECK_THROWS_AS(read_polygon_file("/nonexistent/path/poly.txt"), Error);
}
