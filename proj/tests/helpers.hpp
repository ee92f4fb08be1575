#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "isoperim/grid.hpp"
#include "isoperim/word.hpp"

namespace isoperim::testing {

// Uniform random reduced word of the given length, deterministic per seed.
inline Word random_reduced_word(std::mt19937_64& rng, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  while (letters.size() < length) {
    const Letter cand = Letter::from_code(static_cast<std::uint8_t>(rng() % 6));
    if (!letters.empty() && letters.back() == cand.inverse()) continue;
    letters.push_back(cand);
  }
  return Word(std::move(letters));
}

// Arbitrary (not necessarily reduced) random word.
inline Word random_raw_word(std::mt19937_64& rng, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back(Letter::from_code(static_cast<std::uint8_t>(rng() % 6)));
  }
  return Word(std::move(letters));
}

// Nonempty cyclically reduced word with zero ab-displacement: shuffles a
// balanced multiset of letters and cyclically reduces, retrying on
// collapse. Suitable as a closed-cycle word for the grid complex.
inline Word random_closed_word(std::mt19937_64& rng, int max_pair_count = 3) {
  for (;;) {
    std::vector<Letter> bag;
    const int na = static_cast<int>(rng() % static_cast<std::uint64_t>(max_pair_count + 1));
    const int nb = static_cast<int>(rng() % static_cast<std::uint64_t>(max_pair_count + 1));
    const int nc = static_cast<int>(rng() % 3);
    const int nC = static_cast<int>(rng() % 3);
    for (int i = 0; i < na; ++i) {
      bag.push_back(Letter(Letter::Sym::a, false));
      bag.push_back(Letter(Letter::Sym::a, true));
    }
    for (int i = 0; i < nb; ++i) {
      bag.push_back(Letter(Letter::Sym::b, false));
      bag.push_back(Letter(Letter::Sym::b, true));
    }
    for (int i = 0; i < nc; ++i) bag.push_back(Letter(Letter::Sym::c, false));
    for (int i = 0; i < nC; ++i) bag.push_back(Letter(Letter::Sym::c, true));
    if (bag.size() < 2) continue;
    std::shuffle(bag.begin(), bag.end(), rng);
    const Word core = cyclic_reduce(Word(std::move(bag))).core;
    if (!core.empty()) return core;
  }
}

// Tight perturbed copy of the irreducible cycle of w: every straight run
// zigzags across its own edge (so the snapped cycle reproduces the edge
// regardless of side conventions), circle arcs are pushed outward to
// radius eps + delta, and each traversal gets its own delta < eps/2 so
// repeated passes stay apart. A jitter of eps/200 keeps the crossings in
// general position. Snapping the result recovers w up to conjugacy.
inline Polyline perturbed_cycle_polyline(const Word& w, const GridModel& model,
                                         std::mt19937_64& rng) {
  const GridCycle cycle = word_to_cycle(w, model);
  const auto& pieces = cycle.pieces();
  const double eps = model.epsilon();
  const double base = eps / 4.0;
  const std::size_t total = pieces.size();

  Polyline p;
  const auto jitter = [&rng, eps] {
    return (eps / 200.0) * (2.0 * (static_cast<double>(rng() % 1000003) / 1000003.0) - 1.0);
  };
  const auto push = [&p, &jitter](double x, double y) {
    p.points.push_back(Vec2{x + jitter(), y + jitter()});
  };

  for (std::size_t k = 0; k < total; ++k) {
    const double delta = base * (1.0 + 0.5 * static_cast<double>(k) / static_cast<double>(total));
    if (const auto* s = std::get_if<StraightPiece>(&pieces[k])) {
      const Vec2 a = straight_param_point(*s, s->t0, model);
      const Vec2 b = straight_param_point(*s, s->t1, model);
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const Vec2 left{-(b.y - a.y) / len, (b.x - a.x) / len};
      constexpr double kFracs[4] = {0.03, 0.35, 0.65, 0.97};
      for (int j = 0; j < 4; ++j) {
        const double side = (j % 2 == 0) ? 1.0 : -1.0;
        push(a.x + kFracs[j] * (b.x - a.x) + side * delta * left.x,
             a.y + kFracs[j] * (b.y - a.y) + side * delta * left.y);
      }
    } else {
      const auto& arc = std::get<ArcPiece>(pieces[k]);
      auto [lo, hi] = arc_angle_range(arc.quadrant);
      constexpr double kMargin = 0.2;  // radians trimmed at the quadrant ends
      const double begin = arc.dir > 0 ? lo + kMargin : hi - kMargin;
      const double end = arc.dir > 0 ? hi - kMargin : lo + kMargin;
      const double radius = eps + delta;
      constexpr int kSamples = 4;
      for (int i = 0; i < kSamples; ++i) {
        const double theta = begin + (end - begin) * i / (kSamples - 1);
        push(arc.center.x + radius * std::cos(theta), arc.center.y + radius * std::sin(theta));
      }
    }
  }
  return p;
}

}  // namespace isoperim::testing
