#include <starsys/matrix_io.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <starsys/errors.hpp>

namespace starsys {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Cursor {
  const std::string& line;
  std::size_t line_no;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < line.size() && is_space(line[pos])) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos == line.size();
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, line_no, at + 1);
  }
  void expect(char c) {
    if (pos >= line.size() || line[pos] != c)
      fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  double number() {
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("invalid number", pos);
    if (!std::isfinite(v)) fail("non-finite number", pos);
    pos += static_cast<std::size_t>(ptr - first);
    return v;
  }
  std::size_t dimension() {
    skip_space();
    const std::size_t start = pos;
    if (pos < line.size() && (line[pos] == '-' || line[pos] == '+'))
      fail("dimension must be a positive integer", start);
    const char* first = line.data() + pos;
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), v);
    if (ec != std::errc() || ptr == first) fail("expected a positive integer", start);
    pos += static_cast<std::size_t>(ptr - first);
    if (pos < line.size() && !is_space(line[pos])) fail("expected a positive integer", start);
    if (v == 0) fail("dimension must be a positive integer", start);
    return v;
  }
};

}  // namespace

CMat parse_matrix(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(std::move(l));
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos)
    lines.pop_back();
  if (lines.empty()) throw ParseError("empty input, expected header 'rows cols'", 1, 1);

  Cursor head{lines[0], 1};
  const std::size_t rows = head.dimension();
  const std::size_t cols = head.dimension();
  if (!head.at_end()) head.fail("unexpected text after header", head.pos);

  if (lines.size() - 1 != rows) {
    // First missing line, or the first line past the declared rows.
    const std::size_t at = lines.size() - 1 < rows ? lines.size() + 1 : rows + 2;
    throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     at, 1);
  }

  std::vector<cplx> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Cursor c{lines[i + 1], i + 2};
    for (std::size_t j = 0; j < cols; ++j) {
      if (c.at_end())
        c.fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(j),
               c.pos);
      if (j > 0 && !is_space(c.line[c.pos - 1])) c.fail("entries must be separated by whitespace", c.pos);
      c.expect('(');
      const double re = c.number();
      c.expect(',');
      const double im = c.number();
      c.expect(')');
      if (c.pos < c.line.size() && !is_space(c.line[c.pos]))
        c.fail("entries must be separated by whitespace", c.pos);
      data.emplace_back(re, im);
    }
    if (!c.at_end()) c.fail("more than " + std::to_string(cols) + " entries", c.pos);
  }
  return CMat(rows, cols, std::move(data));
}

CMat parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

CMat read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_matrix(in);
}

namespace {

void put_double(std::string& out, double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.append(buf, ptr);
}

}  // namespace

std::string format_matrix(const CMat& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += '(';
      put_double(out, a(i, j).real());
      out += ',';
      put_double(out, a(i, j).imag());
      out += ')';
    }
    out += '\n';
  }
  return out;
}

void write_matrix(std::ostream& out, const CMat& a) { out << format_matrix(a); }

void write_matrix(const std::filesystem::path& path, const CMat& a) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << format_matrix(a);
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace starsys
