#include "lifetrace/pattern_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lifetrace {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Pattern from_rows(const std::vector<std::vector<Symbol>>& rows_top_first) {
  std::size_t width = 0;
  for (const auto& r : rows_top_first) width = std::max(width, r.size());
  const int height = int(rows_top_first.size());
  Pattern p(Coordinate{0, 0}, int(width), height);
  for (int k = 0; k < height; ++k) {
    const auto& row = rows_top_first[std::size_t(k)];
    for (std::size_t i = 0; i < row.size(); ++i) p.set_local(int(i), height - 1 - k, row[i]);
  }
  return p;
}

bool looks_like_rle(const std::vector<std::string>& lines) {
  for (const auto& raw : lines) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("x", 0) == 0 && line.find('=') != std::string::npos) return true;
    for (char c : line)
      if (c == 'b' || c == 'o' || c == '$') return true;
  }
  return false;
}

}  // namespace

Pattern parse_plain_pattern(std::string_view text) {
  std::vector<std::vector<Symbol>> rows;
  for (const auto& raw : split_lines(text)) {
    const std::string line = trim(raw);
    if (!line.empty() && (line[0] == '!' || line[0] == '#')) continue;
    if (line.empty()) {
      // Blank lines inside a grid are all-zero rows; leading/trailing ones are dropped below.
      rows.emplace_back();
      continue;
    }
    std::vector<Symbol> row;
    for (char c : line) {
      if (c == '.' || c == '0') row.push_back(0);
      else if (c == 'O' || c == 'o' || c == '*') row.push_back(1);
      else if (c >= '1' && c <= '9') row.push_back(Symbol(c - '0'));
      else if (std::isspace(static_cast<unsigned char>(c))) continue;
      else throw std::invalid_argument(std::string("unexpected character in pattern: '") + c + "'");
    }
    rows.push_back(std::move(row));
  }
  while (!rows.empty() && rows.front().empty()) rows.erase(rows.begin());
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return from_rows(rows);
}

Pattern parse_rle_pattern(std::string_view text) {
  std::vector<std::vector<Symbol>> rows(1);
  int declared_w = -1, declared_h = -1;
  bool done = false;
  for (const auto& raw : split_lines(text)) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == 'x' && line.find('=') != std::string::npos) {
      std::string cleaned;
      for (char c : line) cleaned.push_back(c == ',' ? ' ' : c);
      std::istringstream in(cleaned);
      std::string key, eq, value;
      while (in >> key >> eq >> value) {
        if (key == "x") declared_w = std::stoi(value);
        else if (key == "y") declared_h = std::stoi(value);
      }
      continue;
    }
    long run = 0;
    for (char c : line) {
      if (done) break;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        run = run * 10 + (c - '0');
        continue;
      }
      const long n = run == 0 ? 1 : run;
      run = 0;
      switch (c) {
        case 'b': case '.': rows.back().insert(rows.back().end(), std::size_t(n), Symbol{0}); break;
        case 'o': case 'A': rows.back().insert(rows.back().end(), std::size_t(n), Symbol{1}); break;
        case '$': for (long i = 0; i < n; ++i) rows.emplace_back(); break;
        case '!': done = true; break;
        default:
          if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("unexpected character in RLE: '") + c + "'");
      }
    }
    if (done) break;
  }
  if (declared_h > 0)
    while (int(rows.size()) < declared_h) rows.emplace_back();
  Pattern p = from_rows(rows);
  if (declared_w > p.width() && declared_w > 0) p = p.embedded(Rect{0, 0, declared_w, p.height()});
  return p;
}

Pattern parse_pattern(std::string_view text) {
  const auto lines = split_lines(text);
  return looks_like_rle(lines) ? parse_rle_pattern(text) : parse_plain_pattern(text);
}

std::string format_pattern(const Pattern& p, PatternFormat format) {
  std::string out;
  if (format == PatternFormat::Text) {
    for (int j = p.height() - 1; j >= 0; --j) {
      for (int i = 0; i < p.width(); ++i) {
        const Symbol s = p.local(i, j);
        out.push_back(s == 0 ? '.' : s == 1 ? 'O' : char('0' + s));
      }
      out.push_back('\n');
    }
    return out;
  }
  if (p.max_symbol() > 1) throw std::invalid_argument("RLE output supports binary patterns only");
  out = "x = " + std::to_string(p.width()) + ", y = " + std::to_string(p.height()) + "\n";
  std::string body;
  auto emit = [&body](long n, char c) {
    if (n <= 0) return;
    if (n > 1) body += std::to_string(n);
    body.push_back(c);
  };
  long pending_rows = 0;
  for (int j = p.height() - 1; j >= 0; --j) {
    if (j != p.height() - 1) ++pending_rows;
    int last = p.width() - 1;
    while (last >= 0 && p.local(last, j) == 0) --last;
    if (last < 0) continue;
    emit(pending_rows, '$');
    pending_rows = 0;
    int i = 0;
    while (i <= last) {
      const Symbol s = p.local(i, j);
      int k = i;
      while (k <= last && p.local(k, j) == s) ++k;
      emit(k - i, s ? 'o' : 'b');
      i = k;
    }
  }
  body.push_back('!');
  for (std::size_t i = 0; i < body.size(); i += 70) out += body.substr(i, 70) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

Pattern read_pattern_file(const std::filesystem::path& path) { return parse_pattern(read_text_file(path)); }

LocalRule parse_rule(std::string_view text) {
  int alphabet = 2, radius = 1;
  std::string bs, table;
  for (const auto& raw : split_lines(text)) {
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string key, value;
    in >> key >> value;
    if (key == "alphabet") alphabet = std::stoi(value);
    else if (key == "radius") radius = std::stoi(value);
    else if (key == "rule") bs = value;
    else if (key == "table") table = value;
    else if (key == "life") bs = "B3/S23";
    else throw std::invalid_argument("unknown rule-file key: " + key);
  }
  if (!bs.empty()) {
    if (alphabet != 2) throw std::invalid_argument("B/S rules are binary");
    return outer_totalistic(bs, radius);
  }
  if (table.empty()) throw std::invalid_argument("rule file needs a 'rule' or 'table' line");
  std::vector<Symbol> outputs;
  outputs.reserve(table.size());
  for (char c : table) {
    if (c < '0' || c > '9') throw std::invalid_argument("rule table digits must be 0-9");
    outputs.push_back(Symbol(c - '0'));
  }
  return LocalRule::from_table(alphabet, radius, std::move(outputs));
}

LocalRule read_rule_file(const std::filesystem::path& path) { return parse_rule(read_text_file(path)); }

}  // namespace lifetrace
