#include "twospec/tiling.hpp"

#include <algorithm>

namespace twospec {

namespace {

struct Event {
  Rational at;
  int delta;  // +1 opens an interval, -1 closes one
};

}  // namespace

TilingResult tilesWith(const Rational& alpha, const Rational& beta,
                       const TilingSet& tiling, const Rational& windowLo,
                       const Rational& windowHi) {
  if (!(Rational(1) <= alpha) || !(alpha < beta)) {
    throw std::domain_error("tilesWith: need 1 <= alpha < beta");
  }
  if (tiling.period.num <= 0) {
    throw std::domain_error("tilesWith: tiling period must be positive");
  }
  if (!(windowLo < windowHi)) {
    throw std::domain_error("tilesWith: empty window");
  }

  // Every translate Ω + f + k·c meeting the window, as exact endpoint events.
  std::vector<Event> events;
  for (const Rational& f : tiling.offsets) {
    // a = f + k·c intersects [wLo, wHi] iff a + β >= wLo and a <= wHi
    const std::int64_t kLo = ceilDiv(windowLo - beta - f, tiling.period);
    const std::int64_t kHi = floorDiv(windowHi - f, tiling.period);
    for (std::int64_t k = kLo; k <= kHi; ++k) {
      const Rational a = f + tiling.period * Rational(k);
      events.push_back({a, +1});
      events.push_back({a + Rational(1), -1});
      events.push_back({a + alpha, +1});
      events.push_back({a + beta, -1});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
    if (x.at != y.at) return x.at < y.at;
    return x.delta > y.delta;  // group, then net out at equal endpoints
  });

  TilingResult result;
  result.tiles = true;
  auto fail = [&result](const Rational& segLo, const Rational& segHi, int depth) {
    result.tiles = false;
    result.witness = (segLo + segHi) * Rational(1, 2);
    result.defectDepth = depth;
  };

  // leading uncovered stretch of the window
  if (events.empty() || windowLo < events.front().at) {
    const Rational segHi =
        events.empty() ? windowHi : std::min(events.front().at, windowHi);
    if (windowLo < segHi) {
      fail(windowLo, segHi, 0);
      return result;
    }
  }

  int depth = 0;
  std::size_t i = 0;
  while (i < events.size()) {
    const Rational here = events[i].at;
    while (i < events.size() && events[i].at == here) {
      depth += events[i].delta;
      ++i;
    }
    // segment (here, next) carries constant indicator sum = depth
    const Rational next = i < events.size() ? events[i].at : windowHi;
    const Rational segLo = std::max(here, windowLo);
    const Rational segHi = std::min(next, windowHi);
    if (segLo < segHi && depth != 1) {
      fail(segLo, segHi, depth);
      return result;
    }
  }
  return result;
}

TilingResult tilesWith(const IntervalPair& d, const TilingSet& tiling,
                       double windowLo, double windowHi) {
  d.validate();
  const Rational a = rationalize(d.alpha);
  const Rational b = rationalize(d.beta);
  return tilesWith(a, b, tiling, rationalize(windowLo), rationalize(windowHi));
}

}  // namespace twospec
