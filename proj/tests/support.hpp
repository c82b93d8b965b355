#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "lifetrace/ca.hpp"
#include "oracles.hpp"

namespace testsupport {

inline oracle::Grid to_grid(const lifetrace::Pattern& p) {
  oracle::Grid g = oracle::zeros(p.width(), p.height());
  for (int j = 0; j < p.height(); ++j)
    for (int i = 0; i < p.width(); ++i) g[std::size_t(j)][std::size_t(i)] = p.local(i, j);
  return g;
}

inline lifetrace::Pattern from_bits(int w, int h, std::uint64_t bits, lifetrace::Coordinate origin = {0, 0}) {
  lifetrace::Pattern p(origin, w, h);
  for (int i = 0; i < w * h; ++i) p.set_local(i % w, i / w, lifetrace::Symbol((bits >> i) & 1));
  return p;
}

inline lifetrace::Pattern random_pattern(std::mt19937& rng, int w, int h, int percent = 50,
                                         lifetrace::Coordinate origin = {0, 0}) {
  lifetrace::Pattern p(origin, w, h);
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) p.set_local(i, j, lifetrace::Symbol(int(rng() % 100) < percent ? 1 : 0));
  return p;
}

}  // namespace testsupport

namespace testsupport {

// A random window on [-R, R]^2 whose image under Life (zero outside the
// window) vanishes outside [-N, N]^2, obtained by local repair. Returns
// false if the repair budget runs out.
inline bool repaired_window(std::mt19937& rng, int N, int R, lifetrace::Pattern& out, int percent = 25) {
  using namespace lifetrace;
  const Rect dom{-R, -R, 2 * R + 1, 2 * R + 1};
  Pattern xw(dom);
  for (int y = -R; y <= R; ++y)
    for (int x = -R; x <= R; ++x) xw.set(x, y, Symbol(int(rng() % 100) < percent ? 1 : 0));
  for (int it = 0; it < 200000; ++it) {
    const Pattern img = apply_rule(game_of_life(), xw.embedded(dom.dilated(1)));
    std::vector<Coordinate> bad;
    for (int y = img.domain().y; y < img.domain().y_end(); ++y)
      for (int x = img.domain().x; x < img.domain().x_end(); ++x)
        if (img.at(x, y) && (std::abs(x) > N || std::abs(y) > N)) bad.push_back({x, y});
    if (bad.empty()) {
      out = xw;
      return true;
    }
    const Coordinate b = bad[rng() % bad.size()];
    const int dx = int(rng() % 3) - 1, dy = int(rng() % 3) - 1;
    if (dom.contains(b.x + dx, b.y + dy)) xw.set(b.x + dx, b.y + dy, Symbol(1 - xw.at(b.x + dx, b.y + dy)));
  }
  return false;
}

// The image of the zero extension of a window, as a finite configuration.
inline lifetrace::FiniteConfig image_of(const lifetrace::Pattern& xw) {
  using namespace lifetrace;
  return FiniteConfig(apply_rule(game_of_life(), xw.embedded(xw.domain().dilated(1))));
}

}  // namespace testsupport
