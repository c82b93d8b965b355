#pragma once

// Cellular-automaton basics: rectangular patterns, local rules, forbidden
// neighborhoods, and the geometric operations the trace machinery needs.
//
// Axis convention: x grows to the east, y grows to the north. Pattern storage
// is row-major with row 0 the southernmost row, so "bottom-to-top" is the
// natural iteration order everywhere in the library.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lifetrace {

using Symbol = std::uint8_t;

struct Coordinate {
  int x = 0;
  int y = 0;

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

// Half-open integer rectangle [x, x + width) x [y, y + height).
struct Rect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  int x_end() const { return x + width; }
  int y_end() const { return y + height; }
  bool empty() const { return width <= 0 || height <= 0; }
  bool contains(int cx, int cy) const {
    return cx >= x && cx < x_end() && cy >= y && cy < y_end();
  }
  bool contains(const Rect& other) const;
  Rect dilated(int c) const { return {x - c, y - c, width + 2 * c, height + 2 * c}; }
  Rect eroded(int c) const { return dilated(-c); }
  std::int64_t area() const { return empty() ? 0 : std::int64_t(width) * height; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// A finite pattern on a rectangular domain. Every domain used by the toolkit
// is a rectangle; irregular inputs are zero-extended to their bounding box.
class Pattern {
 public:
  Pattern() = default;
  Pattern(Rect domain, Symbol fill = 0);
  Pattern(Coordinate origin, int width, int height, Symbol fill = 0)
      : Pattern(Rect{origin.x, origin.y, width, height}, fill) {}

  const Rect& domain() const { return domain_; }
  Coordinate origin() const { return {domain_.x, domain_.y}; }
  int width() const { return domain_.width; }
  int height() const { return domain_.height; }
  bool empty() const { return domain_.empty(); }

  bool contains(int x, int y) const { return domain_.contains(x, y); }
  // Absolute coordinates.
  Symbol at(int x, int y) const { return cells_[index(x - domain_.x, y - domain_.y)]; }
  void set(int x, int y, Symbol v) { cells_[index(x - domain_.x, y - domain_.y)] = v; }
  // Absolute coordinates; zero outside the domain.
  Symbol value_or_zero(int x, int y) const { return contains(x, y) ? at(x, y) : Symbol{0}; }
  // Coordinates relative to the south-west corner.
  Symbol local(int i, int j) const { return cells_[index(i, j)]; }
  void set_local(int i, int j, Symbol v) { cells_[index(i, j)] = v; }

  std::span<const Symbol> cells() const { return cells_; }
  std::span<Symbol> cells() { return cells_; }

  bool is_zero() const;
  Symbol max_symbol() const;
  Pattern translated(int dx, int dy) const;
  Pattern moved_to(Coordinate origin) const { return translated(origin.x - domain_.x, origin.y - domain_.y); }
  // Restriction to a sub-rectangle, which must lie inside the domain.
  Pattern restricted(const Rect& r) const;
  // Copy onto a (possibly larger) domain; cells outside this pattern are zero.
  Pattern embedded(const Rect& r) const;

  // Positional equality: same domain, same values.
  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t index(int i, int j) const { return std::size_t(j) * std::size_t(domain_.width) + std::size_t(i); }

  Rect domain_{};
  std::vector<Symbol> cells_;
};

// Finite-support configuration conf_0(P): the pattern on a zero background.
class FiniteConfig {
 public:
  FiniteConfig() = default;
  explicit FiniteConfig(Pattern support);

  const Pattern& pattern() const { return pattern_; }
  Symbol at(int x, int y) const { return pattern_.value_or_zero(x, y); }
  // Smallest rectangle containing every nonzero cell, empty for the zero configuration.
  Rect support_box() const;
  bool is_zero() const { return support_box().empty(); }

  // Equality as total functions on Z^2.
  friend bool operator==(const FiniteConfig& a, const FiniteConfig& b);

 private:
  Pattern pattern_;
};

// Radius-r local rule over symbols 0..alphabet_size-1.
//
// Neighborhood codes: the (2r+1)^2 cells are listed row by row from south to
// north, each row west to east, and the code is sum(v_i * |A|^i). The table is
// materialized when it has at most 2^24 entries; otherwise evaluation goes
// through the supplied function.
class LocalRule {
 public:
  using Function = std::function<Symbol(std::span<const Symbol>)>;

  LocalRule() = default;
  static LocalRule from_table(int alphabet_size, int radius, std::vector<Symbol> table);
  static LocalRule from_function(int alphabet_size, int radius, Function fn);

  int alphabet_size() const { return alphabet_size_; }
  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }
  std::size_t window_cells() const { return std::size_t(side()) * std::size_t(side()); }
  // |A|^((2r+1)^2); saturates at UINT64_MAX for absurdly large rules.
  std::uint64_t neighborhood_count() const { return neighborhood_count_; }
  bool materialized() const { return !table_.empty(); }

  Symbol apply(std::span<const Symbol> window) const;
  Symbol apply_code(std::uint64_t code) const;

  std::vector<Symbol> decode(std::uint64_t code) const;
  std::uint64_t encode(std::span<const Symbol> window) const;

  // Stable hash of the full table, used to tie trace constants to a rule.
  std::string fingerprint() const;

 private:
  int alphabet_size_ = 2;
  int radius_ = 1;
  std::uint64_t neighborhood_count_ = 0;
  std::vector<Symbol> table_;
  Function fn_;
};

// Conway's Life. The sum runs over the full 3x3 block including the center:
// a dead cell is born at sum 3, a live cell survives at sum 3 or 4.
LocalRule game_of_life();

// Binary outer-totalistic rule in the usual B/S notation, where counts exclude
// the center cell ("B3/S23" is Life). Radius defaults to 1 (Moore neighborhood).
LocalRule outer_totalistic(const std::string& bs_notation, int radius = 1);

LocalRule identity_rule(int alphabet_size = 2, int radius = 1);
LocalRule constant_zero_rule(int alphabet_size = 2, int radius = 1);

// Neighborhoods whose image differs from a target symbol, indexed by
// neighborhood code. Stripe machinery uses n = 2r.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  ForbiddenSet(int alphabet_size, int radius, std::vector<std::uint8_t> membership);

  int alphabet_size() const { return alphabet_size_; }
  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }
  int stripe_height() const { return 2 * radius_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains_code(std::uint64_t code) const { return membership_[code] != 0; }
  // p must have the window shape (any origin).
  bool contains(const Pattern& p) const;
  std::vector<Pattern> patterns() const;
  std::uint64_t encode(const Pattern& window) const;
  Pattern decode(std::uint64_t code) const;

  ForbiddenSet rotated90() const;
  ForbiddenSet rotated(int quarter_turns) const;
  ForbiddenSet reflected_horizontally() const;
  ForbiddenSet reflected_vertically() const;
  bool rotation_invariant() const { return rotated90() == *this; }

  friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;

 private:
  ForbiddenSet remapped(const std::function<Coordinate(Coordinate)>& cell_map) const;

  int alphabet_size_ = 2;
  int radius_ = 1;
  std::vector<std::uint8_t> membership_;
  std::size_t count_ = 0;
};

ForbiddenSet derive_forbidden(const LocalRule& rule, Symbol target = 0);

// Clockwise quarter turn about the origin: (x, y) -> (y, -x).
Coordinate rotate90(Coordinate c);
Pattern rotate90(const Pattern& p);
ForbiddenSet rotate90(const ForbiddenSet& f);
Pattern rotate(const Pattern& p, int quarter_turns);
Coordinate rotate(Coordinate c, int quarter_turns);

// Image on the erosion of the domain by the rule radius; empty when the
// domain is too small.
Pattern apply_rule(const LocalRule& rule, const Pattern& p);

// Zero-padding of thickness c on every side.
Pattern pad0(const Pattern& p, int c);

}  // namespace lifetrace
