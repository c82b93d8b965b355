#pragma once

// Semilinear configurations and the periodization pipeline.
//
// A SemilinearConfig is stored in a canonical nine-region form: a core box
// [x0, x1] x [y0, y1], four periods (north, south, east, west), and a
// generator pattern on the box extended by one period on every side. The
// value at (x, y) is the generator at (fold_x(x), fold_y(y)) where, east of
// the core, fold_x(x) = x1 + 1 + ((x - x1 - 1) mod pE), symmetrically on the
// west, and likewise for rows. Columns east of the core are therefore
// horizontally pE-periodic, rows north of it vertically pN-periodic, and the
// four corner quadrants are doubly periodic.
//
// periodize() turns a preimage window of a finite-support configuration y
// into such a configuration whose image is exactly y:
//
//   x1  north half-plane above row t = N + r replaced: k free rows, then a
//       p-periodic band (the lexicographically least continuation)
//   x2  the same for the south, x3 west, x4 east
//   x5  each side spliced at the first repeated height-n stripe at or above
//       row N + r + k + 1
//
// where N bounds the support of y and (n, k, p) are the trace constants of
// the side's direction. Each continuation is chosen by dynamic programming
// over columns: the continuation rows of 2r consecutive columns form the
// state, every window that touches the new rows is checked, and the tails
// beyond the core follow the least cycle in the finite graph of states
// paired with the phase of the existing horizontal period.
//
// verify_image() is a complete check, not a sample: outside the box
// [min(x0 - r, support), max(x1 + r, support)] (and likewise for rows) both
// the image and y are periodic with the config's periods, so one extra
// period on each side covers every case.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lifetrace/ca.hpp"
#include "lifetrace/constants.hpp"
#include "lifetrace/preimage.hpp"

namespace lifetrace {

class NotPeriodizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoreBox {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  friend bool operator==(const CoreBox&, const CoreBox&) = default;
};

struct Periods {
  int north = 1, south = 1, east = 1, west = 1;
  int max() const;
  friend bool operator==(const Periods&, const Periods&) = default;
};

enum class RegionKind { Core, North, South, East, West, NorthEast, NorthWest, SouthEast, SouthWest };
std::string to_string(RegionKind k);

struct RegionSpec {
  RegionKind kind = RegionKind::Core;
  // Bounds of the region; nullopt means unbounded in that direction.
  std::optional<int> x_min, x_max, y_min, y_max;
  // One fundamental domain, anchored at the region's inner corner.
  Rect anchor;
  std::vector<Coordinate> periods;
  Pattern generator;

  bool contains(int x, int y) const;
};

class SemilinearConfig {
 public:
  using Evaluator = std::function<Symbol(int, int)>;

  SemilinearConfig() : SemilinearConfig(zero()) {}

  static SemilinearConfig zero(int alphabet_size = 2);
  // conf_0(p): the pattern on a zero background.
  static SemilinearConfig from_finite(const Pattern& p, int alphabet_size = 2);
  // Samples `eval` on the extended box; the caller guarantees that the
  // configuration it describes has the given periods outside the box.
  static SemilinearConfig build(int alphabet_size, CoreBox box, Periods periods, const Evaluator& eval);
  // Takes the generator as is; throws if its domain is not the extended box.
  static SemilinearConfig from_parts(int alphabet_size, CoreBox box, Periods periods, Pattern generator);

  int alphabet_size() const { return alphabet_size_; }
  const CoreBox& core() const { return box_; }
  const Periods& periods() const { return periods_; }
  const Pattern& generator() const { return generator_; }
  Rect extended_box() const;

  Symbol at(int x, int y) const;
  int fold_x(int x) const;
  int fold_y(int y) const;
  Pattern window(const Rect& r) const;

  // Clockwise quarter turns, as for patterns: (x, y) -> (y, -x).
  SemilinearConfig rotated(int quarter_turns) const;

  std::vector<RegionSpec> regions() const;

  friend bool operator==(const SemilinearConfig&, const SemilinearConfig&) = default;

 private:
  SemilinearConfig(int alphabet_size, CoreBox box, Periods periods, Pattern generator);

  int alphabet_size_ = 2;
  CoreBox box_;
  Periods periods_;
  Pattern generator_;
};

// Does every cell of `window` lie in exactly one region? Also checks that the
// region bounds split each axis into consecutive intervals covering Z.
bool regions_partition(const std::vector<RegionSpec>& regions, const Rect& window);

// Equality as functions on Z^2.
bool same_configuration(const SemilinearConfig& a, const SemilinearConfig& b);

// First cell where the image of x differs from y, scanning the complete
// finite set of representative cells.
std::optional<Coordinate> first_image_mismatch(const LocalRule& rule, const SemilinearConfig& x, const FiniteConfig& y);
bool verify_image(const LocalRule& rule, const SemilinearConfig& x, const FiniteConfig& y);

enum class Quadrant { NorthEast, NorthWest, SouthEast, SouthWest };
Quadrant parse_quadrant(const std::string& s);
std::string to_string(Quadrant q);

// Replaces the generator block of one quadrant by 1-cells. The result is not
// verified here.
SemilinearConfig replace_quadrant_all_ones(const SemilinearConfig& x, Quadrant q);

// One north stage in a frame where the processed side is north: rows <= t
// are kept, rows t+1 .. t+k are free, rows above are p-periodic. `f` is the
// forbidden set of that frame.
SemilinearConfig periodize_north(const SemilinearConfig& x, const ForbiddenSet& f, int t, int k, int p);

// Same for any side, by rotating the side to the north and back.
SemilinearConfig periodize_side(const SemilinearConfig& x, const ForbiddenSet& f, Side side, int t, int k, int p);

// Rows at and above a replaced by a repetition of rows a .. b - 1, for the
// least a >= h1 and then the least b in (a, a + bound] such that the height-n
// stripes at a and b are equal. a = h1 whenever the core ends below h1.
// Throws NotPeriodizable if there is no such pair.
SemilinearConfig splice_north(const SemilinearConfig& x, int h1, int n, std::uint64_t bound);

struct HalfplaneResult {
  SemilinearConfig config;
  int threshold = 0;
  // Rows threshold+1 .. threshold+k+p over the window's columns.
  Pattern continuation;
  int period = 1;
};

// Periodizes the half-plane beyond the window's outermost n rows on one side,
// treating the window as zero-extended.
HalfplaneResult periodize_halfplane(const LocalRule& rule, const Pattern& x_window, Side side,
                                    const TraceConstants& constants);

struct Stage {
  std::string name;
  SemilinearConfig config;
};

struct PeriodizationCertificate {
  Pattern y;
  Pattern x_window;
  TraceConstants constants;
  int N = 0;
  int threshold = 0;
  std::vector<Stage> stages;  // x, x1, x2, x3, x4, x5
  Rect display;
  bool protected_agrees = false;
  bool verified = false;
};

struct PeriodizationResult {
  SemilinearConfig config;
  PeriodizationCertificate certificate;
};

// y is given by its pattern (zero outside); x_window must reproduce y under
// the rule on its eroded domain and cover [-N-r-k-p, N+r+k+p]^2, where
// [-N, N]^2 contains the support of y.
PeriodizationResult periodize(const LocalRule& rule, const FiniteConfig& y, const Pattern& x_window,
                              const TraceConstants& constants);

// Text grid of the window, north at the top, with '|' and '-' marking the
// core box boundaries.
std::string render(const SemilinearConfig& x, const Rect& window);

}  // namespace lifetrace
