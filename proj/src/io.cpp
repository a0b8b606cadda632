#include "diskgeo/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace diskgeo {

namespace {

// Consumes [-]ddd[.ddd] starting at pos; returns false if no digits found.
bool scan_real(const std::string& s, std::size_t& pos, bool allow_sign, double& out) {
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || (allow_sign && s[pos] == '+'))) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) { ++pos; ++digits; }
    if (digits == 0) { pos = start; return false; }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::size_t frac = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) { ++pos; ++frac; }
        if (frac == 0) { pos = start; return false; }
    }
    out = std::stod(s.substr(start, pos - start));
    return true;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::size_t pos = 0;
    double re = 0.0;
    if (!scan_real(text, pos, /*allow_sign=*/false, re))
        throw Error("parse_complex: '" + text + "' is not a complex literal");
    if (pos == text.size()) return Complex(re, 0.0);

    if (text[pos] != '+' && text[pos] != '-')
        throw Error("parse_complex: '" + text + "' is not a complex literal");
    double im = 0.0;
    if (!scan_real(text, pos, /*allow_sign=*/true, im) ||
        pos + 1 != text.size() || text[pos] != 'i')
        throw Error("parse_complex: '" + text + "' is not a complex literal");
    return Complex(re, im);
}

ConvexPolygon parse_polygon_text(const std::string& text) {
    std::vector<Complex> vertices;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        double x, y;
        if (fields >> x >> y) {
            std::string rest;
            if (fields >> rest)
                throw Error("polygon: trailing content on line " + std::to_string(line_no));
            vertices.emplace_back(x, y);
        } else {
            std::string rest;
            std::istringstream check(line);
            if (check >> rest)
                throw Error("polygon: malformed vertex on line " + std::to_string(line_no));
        }
    }
    return ConvexPolygon(std::move(vertices));
}

ConvexPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("polygon: cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_polygon_text(buffer.str());
}

}  // namespace diskgeo
