#include "loops/loop_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "loops/error.hpp"

namespace loops {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw LoopError(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                          ": not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

LoopTable parse_loop(std::string_view text) {
  // Collect non-empty logical lines with their 1-based line numbers.
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    pos = end + 1;
  }
  if (lines.empty()) throw LoopError(ErrorKind::Parse, "empty input");
  if (lines[0].second.size() != 1) {
    throw LoopError(ErrorKind::Parse,
                    "line " + std::to_string(lines[0].first) + ": expected the order alone");
  }
  const int order = parse_int(lines[0].second[0], lines[0].first);
  if (order <= 0 || static_cast<std::size_t>(order) > kMaxOrder) {
    throw LoopError(ErrorKind::BadDimensions, "order out of range: " + std::to_string(order));
  }
  const auto n = static_cast<std::size_t>(order);
  if (lines.size() < n + 1) {
    throw LoopError(ErrorKind::BadDimensions, "expected " + std::to_string(n) + " rows");
  }
  if (lines.size() > n + 1) {
    throw LoopError(ErrorKind::Parse, "line " + std::to_string(lines[n + 1].first) +
                                          ": trailing content after the table");
  }
  std::vector<int> cells;
  cells.reserve(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    const auto& [no, tokens] = lines[r];
    if (tokens.size() != n) {
      throw LoopError(ErrorKind::BadDimensions, "line " + std::to_string(no) + ": expected " +
                                                    std::to_string(n) + " entries");
    }
    for (auto token : tokens) cells.push_back(parse_int(token, no));
  }
  return LoopTable::validate_flat(n, cells);
}

LoopTable read_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoopError(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_loop(buffer.str());
}

std::string format_loop(const LoopTable& q) {
  std::ostringstream out;
  write_loop(out, q);
  return out.str();
}

void write_loop(std::ostream& out, const LoopTable& q) {
  const std::size_t n = q.order();
  out << n << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << static_cast<int>(q.mul(static_cast<Element>(x), static_cast<Element>(y)));
    }
    out << '\n';
  }
}

void write_loop_file(const std::string& path, const LoopTable& q) {
  std::ofstream out(path);
  if (!out) throw LoopError(ErrorKind::Parse, "cannot write " + path);
  write_loop(out, q);
}

}  // namespace loops
