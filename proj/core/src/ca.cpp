#include "lifetrace/ca.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace lifetrace {

namespace {

constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 24;
constexpr std::uint64_t kForbiddenSetLimit = std::uint64_t{1} << 26;

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    result *= base;
  }
  return result;
}

void check_rule_shape(int alphabet_size, int radius) {
  if (alphabet_size < 2 || alphabet_size > 256) throw std::invalid_argument("alphabet size must be in [2, 256]");
  if (radius < 1) throw std::invalid_argument("rule radius must be at least 1");
}

}  // namespace

bool Rect::contains(const Rect& other) const {
  if (other.empty()) return true;
  return other.x >= x && other.x_end() <= x_end() && other.y >= y && other.y_end() <= y_end();
}

// ---------------------------------------------------------------- Pattern

Pattern::Pattern(Rect domain, Symbol fill) : domain_(domain) {
  if (domain.width < 0 || domain.height < 0) throw std::invalid_argument("pattern dimensions must be non-negative");
  cells_.assign(std::size_t(domain.area()), fill);
}

bool Pattern::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](Symbol s) { return s == 0; });
}

Symbol Pattern::max_symbol() const {
  return cells_.empty() ? Symbol{0} : *std::max_element(cells_.begin(), cells_.end());
}

Pattern Pattern::translated(int dx, int dy) const {
  Pattern out = *this;
  out.domain_.x += dx;
  out.domain_.y += dy;
  return out;
}

Pattern Pattern::restricted(const Rect& r) const {
  if (!domain_.contains(r)) throw std::out_of_range("restriction rectangle outside pattern domain");
  Pattern out(r);
  for (int j = 0; j < r.height; ++j)
    for (int i = 0; i < r.width; ++i) out.set_local(i, j, at(r.x + i, r.y + j));
  return out;
}

Pattern Pattern::embedded(const Rect& r) const {
  Pattern out(r);
  for (int j = 0; j < r.height; ++j)
    for (int i = 0; i < r.width; ++i) out.set_local(i, j, value_or_zero(r.x + i, r.y + j));
  return out;
}

// ---------------------------------------------------------------- FiniteConfig

FiniteConfig::FiniteConfig(Pattern support) : pattern_(std::move(support)) {}

Rect FiniteConfig::support_box() const {
  int x0 = std::numeric_limits<int>::max(), y0 = x0;
  int x1 = std::numeric_limits<int>::min(), y1 = x1;
  const Rect& d = pattern_.domain();
  for (int j = 0; j < d.height; ++j)
    for (int i = 0; i < d.width; ++i)
      if (pattern_.local(i, j) != 0) {
        x0 = std::min(x0, d.x + i);
        x1 = std::max(x1, d.x + i);
        y0 = std::min(y0, d.y + j);
        y1 = std::max(y1, d.y + j);
      }
  if (x0 > x1) return {};
  return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

bool operator==(const FiniteConfig& a, const FiniteConfig& b) {
  const Rect ra = a.support_box();
  const Rect rb = b.support_box();
  if (ra != rb) return false;
  for (int y = ra.y; y < ra.y_end(); ++y)
    for (int x = ra.x; x < ra.x_end(); ++x)
      if (a.at(x, y) != b.at(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------- LocalRule

LocalRule LocalRule::from_table(int alphabet_size, int radius, std::vector<Symbol> table) {
  check_rule_shape(alphabet_size, radius);
  LocalRule rule;
  rule.alphabet_size_ = alphabet_size;
  rule.radius_ = radius;
  rule.neighborhood_count_ = saturating_pow(std::uint64_t(alphabet_size), rule.window_cells());
  if (table.size() != rule.neighborhood_count_) throw std::invalid_argument("rule table size does not match |A|^((2r+1)^2)");
  for (Symbol s : table)
    if (s >= alphabet_size) throw std::invalid_argument("rule table output outside the alphabet");
  rule.table_ = std::move(table);
  return rule;
}

LocalRule LocalRule::from_function(int alphabet_size, int radius, Function fn) {
  check_rule_shape(alphabet_size, radius);
  LocalRule rule;
  rule.alphabet_size_ = alphabet_size;
  rule.radius_ = radius;
  rule.neighborhood_count_ = saturating_pow(std::uint64_t(alphabet_size), rule.window_cells());
  rule.fn_ = std::move(fn);
  if (rule.neighborhood_count_ <= kMaterializeLimit) {
    rule.table_.resize(rule.neighborhood_count_);
    for (std::uint64_t code = 0; code < rule.neighborhood_count_; ++code) {
      const Symbol out = rule.fn_(rule.decode(code));
      if (out >= alphabet_size) throw std::invalid_argument("rule output outside the alphabet");
      rule.table_[code] = out;
    }
  }
  return rule;
}

Symbol LocalRule::apply(std::span<const Symbol> window) const {
  if (!table_.empty()) return table_[encode(window)];
  return fn_(window);
}

Symbol LocalRule::apply_code(std::uint64_t code) const {
  if (!table_.empty()) return table_[code];
  return fn_(decode(code));
}

std::vector<Symbol> LocalRule::decode(std::uint64_t code) const {
  std::vector<Symbol> cells(window_cells());
  for (auto& c : cells) {
    c = Symbol(code % std::uint64_t(alphabet_size_));
    code /= std::uint64_t(alphabet_size_);
  }
  return cells;
}

std::uint64_t LocalRule::encode(std::span<const Symbol> window) const {
  std::uint64_t code = 0;
  for (std::size_t i = window.size(); i-- > 0;) code = code * std::uint64_t(alphabet_size_) + window[i];
  return code;
}

std::string LocalRule::fingerprint() const {
  // FNV-1a over shape and outputs.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(std::uint64_t(alphabet_size_));
  mix(std::uint64_t(radius_));
  if (!table_.empty()) {
    for (Symbol s : table_) mix(s);
  } else {
    // Lazily evaluated rules are fingerprinted on a fixed sample of codes.
    std::uint64_t code = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 1 << 16; ++i) {
      code = code * 6364136223846793005ull + 1442695040888963407ull;
      mix(apply_code(neighborhood_count_ == std::numeric_limits<std::uint64_t>::max() ? code : code % neighborhood_count_));
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LocalRule game_of_life() {
  return LocalRule::from_function(2, 1, [](std::span<const Symbol> w) -> Symbol {
    int sum = 0;
    for (Symbol s : w) sum += s;
    const Symbol center = w[4];
    if (center == 0) return sum == 3 ? 1 : 0;
    return (sum == 3 || sum == 4) ? 1 : 0;
  });
}

LocalRule outer_totalistic(const std::string& bs, int radius) {
  const std::size_t slash = bs.find('/');
  if (bs.empty() || (bs[0] != 'B' && bs[0] != 'b') || slash == std::string::npos || slash + 1 >= bs.size() ||
      (bs[slash + 1] != 'S' && bs[slash + 1] != 's'))
    throw std::invalid_argument("expected rule in B<digits>/S<digits> notation: " + bs);
  const int side = 2 * radius + 1;
  const int neighbors = side * side - 1;
  std::vector<bool> birth(std::size_t(neighbors) + 1), survive(std::size_t(neighbors) + 1);
  auto parse = [&](std::size_t from, std::size_t to, std::vector<bool>& out) {
    for (std::size_t i = from; i < to; ++i) {
      const int d = bs[i] - '0';
      if (d < 0 || d > 9 || d > neighbors) throw std::invalid_argument("bad neighbor count in rule: " + bs);
      out[std::size_t(d)] = true;
    }
  };
  parse(1, slash, birth);
  parse(slash + 2, bs.size(), survive);
  const std::size_t center = std::size_t(side * side / 2);
  return LocalRule::from_function(2, radius, [=](std::span<const Symbol> w) -> Symbol {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != center) count += w[i];
    return w[center] ? Symbol(survive[std::size_t(count)]) : Symbol(birth[std::size_t(count)]);
  });
}

LocalRule identity_rule(int alphabet_size, int radius) {
  return LocalRule::from_function(alphabet_size, radius,
                                  [](std::span<const Symbol> w) { return w[w.size() / 2]; });
}

LocalRule constant_zero_rule(int alphabet_size, int radius) {
  return LocalRule::from_function(alphabet_size, radius, [](std::span<const Symbol>) { return Symbol{0}; });
}

// ---------------------------------------------------------------- ForbiddenSet

ForbiddenSet::ForbiddenSet(int alphabet_size, int radius, std::vector<std::uint8_t> membership)
    : alphabet_size_(alphabet_size), radius_(radius), membership_(std::move(membership)) {
  count_ = std::size_t(std::count_if(membership_.begin(), membership_.end(), [](std::uint8_t m) { return m != 0; }));
}

std::uint64_t ForbiddenSet::encode(const Pattern& window) const {
  if (window.width() != side() || window.height() != side())
    throw std::invalid_argument("forbidden-set patterns must be (2r+1)x(2r+1)");
  std::uint64_t code = 0;
  const auto cells = window.cells();
  for (std::size_t i = cells.size(); i-- > 0;) code = code * std::uint64_t(alphabet_size_) + cells[i];
  return code;
}

Pattern ForbiddenSet::decode(std::uint64_t code) const {
  Pattern p(Coordinate{-radius_, -radius_}, side(), side());
  for (auto& c : p.cells()) {
    c = Symbol(code % std::uint64_t(alphabet_size_));
    code /= std::uint64_t(alphabet_size_);
  }
  return p;
}

bool ForbiddenSet::contains(const Pattern& p) const { return contains_code(encode(p)); }

std::vector<Pattern> ForbiddenSet::patterns() const {
  std::vector<Pattern> out;
  out.reserve(count_);
  for (std::uint64_t code = 0; code < membership_.size(); ++code)
    if (membership_[code]) out.push_back(decode(code));
  return out;
}

ForbiddenSet ForbiddenSet::remapped(const std::function<Coordinate(Coordinate)>& cell_map) const {
  // cell_map sends a cell of the new window to the cell of the old window it copies.
  const int s = side();
  std::vector<std::size_t> source(std::size_t(s) * std::size_t(s));
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < s; ++i) {
      const Coordinate old = cell_map({i - radius_, j - radius_});
      source[std::size_t(j * s + i)] = std::size_t((old.y + radius_) * s + (old.x + radius_));
    }
  std::vector<std::uint8_t> out(membership_.size());
  std::vector<std::uint64_t> pow(source.size());
  for (std::size_t i = 0; i < pow.size(); ++i) pow[i] = i == 0 ? 1 : pow[i - 1] * std::uint64_t(alphabet_size_);
  std::vector<Symbol> digits(source.size());
  for (std::uint64_t code = 0; code < membership_.size(); ++code) {
    std::uint64_t c = code;
    for (auto& d : digits) {
      d = Symbol(c % std::uint64_t(alphabet_size_));
      c /= std::uint64_t(alphabet_size_);
    }
    // digits describe the new window; gather the old window's code.
    std::uint64_t old_code = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) old_code += digits[i] * pow[source[i]];
    out[code] = membership_[old_code];
  }
  return ForbiddenSet(alphabet_size_, radius_, std::move(out));
}

ForbiddenSet ForbiddenSet::rotated90() const {
  // New cell (a, b) holds what the old window had at (-b, a).
  return remapped([](Coordinate c) { return Coordinate{-c.y, c.x}; });
}

ForbiddenSet ForbiddenSet::rotated(int quarter_turns) const {
  ForbiddenSet out = *this;
  for (int i = 0; i < ((quarter_turns % 4) + 4) % 4; ++i) out = out.rotated90();
  return out;
}

ForbiddenSet ForbiddenSet::reflected_horizontally() const {
  return remapped([](Coordinate c) { return Coordinate{-c.x, c.y}; });
}

ForbiddenSet ForbiddenSet::reflected_vertically() const {
  return remapped([](Coordinate c) { return Coordinate{c.x, -c.y}; });
}

ForbiddenSet derive_forbidden(const LocalRule& rule, Symbol target) {
  const std::uint64_t total = rule.neighborhood_count();
  if (total > kForbiddenSetLimit)
    throw std::length_error("forbidden set too large to materialize (" + std::to_string(total) + " neighborhoods)");
  std::vector<std::uint8_t> membership(total);
  for (std::uint64_t code = 0; code < total; ++code) membership[code] = rule.apply_code(code) != target ? 1 : 0;
  return ForbiddenSet(rule.alphabet_size(), rule.radius(), std::move(membership));
}

// ---------------------------------------------------------------- geometry

Coordinate rotate90(Coordinate c) { return {c.y, -c.x}; }

Coordinate rotate(Coordinate c, int quarter_turns) {
  for (int i = 0; i < ((quarter_turns % 4) + 4) % 4; ++i) c = rotate90(c);
  return c;
}

Pattern rotate90(const Pattern& p) {
  const Rect d = p.domain();
  Pattern out(Rect{d.y, -d.x - d.width + 1, d.height, d.width});
  for (int y = d.y; y < d.y_end(); ++y)
    for (int x = d.x; x < d.x_end(); ++x) {
      const Coordinate c = rotate90(Coordinate{x, y});
      out.set(c.x, c.y, p.at(x, y));
    }
  return out;
}

ForbiddenSet rotate90(const ForbiddenSet& f) { return f.rotated90(); }

Pattern rotate(const Pattern& p, int quarter_turns) {
  Pattern out = p;
  for (int i = 0; i < ((quarter_turns % 4) + 4) % 4; ++i) out = rotate90(out);
  return out;
}

Pattern apply_rule(const LocalRule& rule, const Pattern& p) {
  const int r = rule.radius();
  const Rect d = p.domain();
  if (d.width < 2 * r + 1 || d.height < 2 * r + 1) return Pattern(Rect{d.x + r, d.y + r, 0, 0});
  Pattern out(d.eroded(r));
  const int s = rule.side();
  std::vector<Symbol> window(rule.window_cells());
  for (int y = d.y + r; y < d.y_end() - r; ++y)
    for (int x = d.x + r; x < d.x_end() - r; ++x) {
      for (int j = 0; j < s; ++j)
        for (int i = 0; i < s; ++i) window[std::size_t(j * s + i)] = p.at(x - r + i, y - r + j);
      out.set(x, y, rule.apply(window));
    }
  return out;
}

Pattern pad0(const Pattern& p, int c) {
  if (c < 0) throw std::invalid_argument("padding thickness must be non-negative");
  return p.embedded(p.domain().dilated(c));
}

}  // namespace lifetrace
