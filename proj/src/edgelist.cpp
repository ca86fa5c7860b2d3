#include "etg4/edgelist.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "etg4/error.hpp"

namespace etg4 {
namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

int parse_id(std::string_view field, int line) {
  if (field.empty()) parse_error(line, "empty field");
  if (field.size() > 1 && field.front() == '0') parse_error(line, "leading zero in '" + std::string(field) + "'");
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0)
    parse_error(line, "not a decimal id: '" + std::string(field) + "'");
  return value;
}

std::pair<std::string_view, std::string_view> split_once(std::string_view s, int line) {
  const auto space = s.find(' ');
  if (space == std::string_view::npos) parse_error(line, "expected two space-separated fields");
  return {s.substr(0, space), s.substr(space + 1)};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  if (!text.empty() && text.back() != '\n') {
    int lines = 1;
    for (char c : text) lines += (c == '\n');
    parse_error(lines, "missing trailing newline");
  }
  std::optional<int> n;
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    if (line.find('\r') != std::string_view::npos) parse_error(line_no, "carriage return");
    if (!n) {
      auto [key, value] = split_once(line, line_no);
      if (key != "n") parse_error(line_no, "expected header 'n <vertex_count>'");
      n = parse_id(value, line_no);
      continue;
    }
    auto [a_field, b_field] = split_once(line, line_no);
    const int a = parse_id(a_field, line_no);
    const int b = parse_id(b_field, line_no);
    if (a >= *n || b >= *n) parse_error(line_no, "vertex id out of range");
    if (a == b) parse_error(line_no, "loop at vertex " + std::to_string(a));
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
      parse_error(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    pairs.emplace_back(a, b);
  }
  if (!n) parse_error(line_no + 1, "missing header 'n <vertex_count>'");
  return Graph::from_edge_list(*n, pairs);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Graph& g, std::string_view comment) {
  std::string out;
  std::size_t pos = 0;
  while (pos < comment.size()) {
    const auto end = std::min(comment.find('\n', pos), comment.size());
    out += "# ";
    out += comment.substr(pos, end - pos);
    out += '\n';
    pos = end + 1;
  }
  out += "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

void write_edge_list(const Graph& g, const std::filesystem::path& path, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot write " + path.string());
  out << format_edge_list(g, comment);
  if (!out) fail(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace etg4
