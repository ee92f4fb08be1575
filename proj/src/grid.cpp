#include "isoperim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "isoperim/decompose.hpp"

namespace isoperim {

namespace {

constexpr double kTol = 1e-9;

std::string fmt_point(double x, double y) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ")";
  return os.str();
}

}  // namespace

GridModel::GridModel(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.1)) {
    throw std::invalid_argument("grid epsilon must lie in (0, 0.1)");
  }
}

double GridModel::straight_length() const { return 1.0 - 2.0 * epsilon_; }
double GridModel::quarter_arc_length() const { return std::numbers::pi * epsilon_ / 2.0; }
double GridModel::face_area() const { return 1.0 - std::numbers::pi * epsilon_ * epsilon_; }

// ---------------------------------------------------------------------------
// Cycle reduction
// ---------------------------------------------------------------------------

namespace {

bool same_edge(const StraightPiece& a, const StraightPiece& b) {
  return a.vertical == b.vertical && a.base == b.base;
}

enum class Combine { keep, merged, gone };

// Q follows P in the traversal. Same-edge straights merge into their net
// sub-segment; a full arc followed by its reverse disappears.
Combine try_combine(const CyclePiece& P, const CyclePiece& Q, CyclePiece* out) {
  if (const auto* ps = std::get_if<StraightPiece>(&P)) {
    const auto* qs = std::get_if<StraightPiece>(&Q);
    if (!qs || !same_edge(*ps, *qs)) return Combine::keep;
    if (std::abs(ps->t1 - qs->t0) > kTol) return Combine::keep;
    if (std::abs(qs->t1 - ps->t0) < 1e-12) return Combine::gone;
    *out = StraightPiece{ps->vertical, ps->base, ps->t0, qs->t1};
    return Combine::merged;
  }
  const auto& pa = std::get<ArcPiece>(P);
  const auto* qa = std::get_if<ArcPiece>(&Q);
  if (!qa || pa.center != qa->center || pa.quadrant != qa->quadrant) return Combine::keep;
  if (pa.dir == -qa->dir) return Combine::gone;
  return Combine::keep;
}

}  // namespace

std::vector<CyclePiece> reduce_cycle(std::vector<CyclePiece> pieces) {
  std::vector<CyclePiece> stack;
  stack.reserve(pieces.size());
  const auto push = [&stack](CyclePiece piece) {
    for (;;) {
      if (stack.empty()) {
        stack.push_back(std::move(piece));
        return;
      }
      CyclePiece merged;
      switch (try_combine(stack.back(), piece, &merged)) {
        case Combine::keep:
          stack.push_back(std::move(piece));
          return;
        case Combine::merged:
          stack.pop_back();
          piece = merged;
          break;
        case Combine::gone:
          stack.pop_back();
          return;
      }
    }
  };
  for (auto& p : pieces) push(std::move(p));

  // Seam: the sequence is cyclic, so the last piece meets the first.
  for (;;) {
    if (stack.size() < 2) {
      if (stack.size() == 1) {
        if (const auto* s = std::get_if<StraightPiece>(&stack.front());
            s && std::abs(s->t1 - s->t0) < 1e-12) {
          stack.clear();
        }
      }
      break;
    }
    CyclePiece merged;
    const Combine res = try_combine(stack.back(), stack.front(), &merged);
    if (res == Combine::keep) break;
    stack.pop_back();
    stack.erase(stack.begin());
    if (res == Combine::merged) stack.insert(stack.begin(), merged);
  }
  return stack;
}

Vec2 straight_param_point(const StraightPiece& s, double t, const GridModel& model) {
  const double eps = model.epsilon();
  const double along = eps + t * model.straight_length();
  if (s.vertical) return Vec2{static_cast<double>(s.base.x), s.base.y + along};
  return Vec2{s.base.x + along, static_cast<double>(s.base.y)};
}

std::pair<double, double> arc_angle_range(Quadrant q) {
  const double half_pi = std::numbers::pi / 2.0;
  switch (q) {
    case Quadrant::BottomRight: return {-half_pi, 0.0};
    case Quadrant::RightTop: return {0.0, half_pi};
    case Quadrant::TopLeft: return {half_pi, 2 * half_pi};
    case Quadrant::LeftBottom: return {2 * half_pi, 3 * half_pi};
  }
  throw std::logic_error("unreachable");
}

GridCycle::GridCycle(GridModel model, std::vector<CyclePiece> pieces)
    : model_(model), pieces_(reduce_cycle(std::move(pieces))) {}

double GridCycle::length() const {
  double total = 0.0;
  for (const auto& piece : pieces_) {
    if (const auto* s = std::get_if<StraightPiece>(&piece)) {
      total += std::abs(s->t1 - s->t0) * model_.straight_length();
    } else {
      total += model_.quarter_arc_length();
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Words <-> cycles
// ---------------------------------------------------------------------------

namespace {

void append_letter_pieces(std::vector<CyclePiece>& out, Letter l, LatticePoint& v) {
  using Q = Quadrant;
  const bool inv = l.is_inverse();
  switch (l.symbol()) {
    case Letter::Sym::a:
      if (!inv) {
        out.push_back(ArcPiece{v, Q::LeftBottom, -1});
        out.push_back(ArcPiece{v, Q::TopLeft, -1});
        out.push_back(StraightPiece{true, v, 0.0, 1.0});
        v.y += 1;
      } else {
        const LatticePoint u{v.x, v.y - 1};
        out.push_back(StraightPiece{true, u, 1.0, 0.0});
        out.push_back(ArcPiece{u, Q::TopLeft, +1});
        out.push_back(ArcPiece{u, Q::LeftBottom, +1});
        v.y -= 1;
      }
      break;
    case Letter::Sym::b:
      if (!inv) {
        out.push_back(ArcPiece{v, Q::BottomRight, +1});
        out.push_back(StraightPiece{false, v, 0.0, 1.0});
        out.push_back(ArcPiece{LatticePoint{v.x + 1, v.y}, Q::LeftBottom, +1});
        v.x += 1;
      } else {
        const LatticePoint u{v.x - 1, v.y};
        out.push_back(ArcPiece{v, Q::LeftBottom, -1});
        out.push_back(StraightPiece{false, u, 1.0, 0.0});
        out.push_back(ArcPiece{u, Q::BottomRight, -1});
        v.x -= 1;
      }
      break;
    case Letter::Sym::c:
      if (!inv) {
        out.push_back(ArcPiece{v, Q::BottomRight, +1});
        out.push_back(ArcPiece{v, Q::RightTop, +1});
        out.push_back(ArcPiece{v, Q::TopLeft, +1});
        out.push_back(ArcPiece{v, Q::LeftBottom, +1});
      } else {
        out.push_back(ArcPiece{v, Q::LeftBottom, -1});
        out.push_back(ArcPiece{v, Q::TopLeft, -1});
        out.push_back(ArcPiece{v, Q::RightTop, -1});
        out.push_back(ArcPiece{v, Q::BottomRight, -1});
      }
      break;
  }
}

// Symbolic node of the complex: a compass point of one boundary circle.
struct Node {
  LatticePoint center;
  int compass;  // 0=E 1=N 2=W 3=S
  friend constexpr auto operator<=>(Node, Node) = default;
};

bool is_endpoint_param(double t) { return std::abs(t) < kTol || std::abs(t - 1.0) < kTol; }

Node straight_node(const StraightPiece& s, double t) {
  const bool at_one = std::abs(t - 1.0) < kTol;
  if (s.vertical) {
    return at_one ? Node{LatticePoint{s.base.x, s.base.y + 1}, 3} : Node{s.base, 1};
  }
  return at_one ? Node{LatticePoint{s.base.x + 1, s.base.y}, 2} : Node{s.base, 0};
}

Node arc_node(const ArcPiece& a, bool start) {
  const int q = static_cast<int>(a.quadrant);
  const int ccw_start = (q + 3) % 4;
  const int ccw_end = q;
  const bool take_start = (a.dir == 1) == start;
  return Node{a.center, take_start ? ccw_start : ccw_end};
}

Node piece_node(const CyclePiece& piece, bool start) {
  if (const auto* s = std::get_if<StraightPiece>(&piece)) {
    const double t = start ? s->t0 : s->t1;
    if (!is_endpoint_param(t)) {
      throw MalformedCycle("cycle piece stops in the interior of an edge");
    }
    return straight_node(*s, t);
  }
  return arc_node(std::get<ArcPiece>(piece), start);
}

}  // namespace

GridCycle word_to_cycle(const Word& w, const GridModel& model) {
  const Word reduced = free_reduce(w);
  if (!reduced.is_cyclically_reduced() || reduced != w) {
    throw std::invalid_argument("word_to_cycle expects a cyclically reduced word");
  }
  if (abelianize_ab(w) != std::pair<int, int>{0, 0}) {
    throw NotClosed("word " + w.str() + " has nonzero ab-displacement and is not a closed cycle");
  }
  std::vector<CyclePiece> pieces;
  pieces.reserve(4 * w.length());
  LatticePoint v{0, 0};
  for (Letter l : w.letters()) append_letter_pieces(pieces, l, v);
  return GridCycle(model, std::move(pieces));
}

Word cycle_to_word(const GridCycle& cycle) {
  const auto& pieces = cycle.pieces();
  if (pieces.empty()) return Word();

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Node end = piece_node(pieces[i], false);
    const Node start = piece_node(pieces[(i + 1) % pieces.size()], true);
    if (end != start) {
      throw MalformedCycle("cycle pieces are not a closed chain of generator-path segments");
    }
  }

  // Non-tree edges of the quotient complex carry the group elements:
  // a full vertical edge reads "ca", a horizontal edge "b", and the
  // top-left quarter arc "c"; the remaining arcs span the tree.
  std::vector<Letter> letters;
  for (const auto& piece : pieces) {
    if (const auto* s = std::get_if<StraightPiece>(&piece)) {
      const bool forward = s->t1 > s->t0;
      const Word& contribution = [&]() -> const Word& {
        static const Word v_fwd = Word::parse("ca");
        static const Word v_bwd = Word::parse("AC");
        static const Word h_fwd = Word::parse("b");
        static const Word h_bwd = Word::parse("B");
        if (s->vertical) return forward ? v_fwd : v_bwd;
        return forward ? h_fwd : h_bwd;
      }();
      letters.insert(letters.end(), contribution.letters().begin(), contribution.letters().end());
    } else {
      const auto& a = std::get<ArcPiece>(piece);
      if (a.quadrant == Quadrant::TopLeft) {
        letters.push_back(Letter(Letter::Sym::c, a.dir != 1));
      }
    }
  }
  return cyclic_reduce(Word(std::move(letters))).core;
}

// ---------------------------------------------------------------------------
// Snapping
// ---------------------------------------------------------------------------

double polyline_length(const Polyline& p) {
  const std::size_t n = p.points.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = p.points[i];
    const Vec2& b = p.points[(i + 1) % n];
    total += std::hypot(b.x - a.x, b.y - a.y);
  }
  return total;
}

double SnapTrace::total_area_bound() const {
  double total = 0.0;
  for (const auto& rec : records) total += rec.area_bound;
  return total;
}

namespace {

struct EdgeRef {
  bool vertical;
  LatticePoint base;
};

struct Crossing {
  std::size_t seg;
  double t;        // parameter along the segment
  Vec2 point;
  EdgeRef edge;
  double edge_t;   // parameter along the hosting straight edge
  bool vertical_line;
  int line;
};

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

void check_clearance(const Polyline& p, double eps) {
  const std::size_t n = p.points.size();
  for (const Vec2& v : p.points) {
    if (std::abs(v.x - std::round(v.x)) < kTol || std::abs(v.y - std::round(v.y)) < kTol) {
      throw NotGeneralPosition("polyline vertex lies on a grid line at " + fmt_point(v.x, v.y));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = p.points[i];
    const Vec2 b = p.points[(i + 1) % n];
    const int x_lo = static_cast<int>(std::floor(std::min(a.x, b.x) - eps)) - 1;
    const int x_hi = static_cast<int>(std::ceil(std::max(a.x, b.x) + eps)) + 1;
    const int y_lo = static_cast<int>(std::floor(std::min(a.y, b.y) - eps)) - 1;
    const int y_hi = static_cast<int>(std::ceil(std::max(a.y, b.y) + eps)) + 1;
    for (int x = x_lo; x <= x_hi; ++x) {
      for (int y = y_lo; y <= y_hi; ++y) {
        const double d = point_segment_distance(Vec2{double(x), double(y)}, a, b);
        if (d < eps - kTol) {
          throw InsideForbiddenZone("curve enters the epsilon-disk around lattice point " +
                                    fmt_point(x, y));
        }
        if (d < eps + kTol) {
          throw NotGeneralPosition("curve is tangent to the circle around " + fmt_point(x, y));
        }
      }
    }
  }
}

std::vector<Crossing> collect_crossings(const Polyline& p, double eps) {
  std::vector<Crossing> crossings;
  const std::size_t n = p.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = p.points[i];
    const Vec2 b = p.points[(i + 1) % n];
    std::vector<Crossing> seg_hits;

    const auto scan_lines = [&](bool vertical_line) {
      const double a1 = vertical_line ? a.x : a.y;
      const double b1 = vertical_line ? b.x : b.y;
      const int lo = static_cast<int>(std::ceil(std::min(a1, b1)));
      const int hi = static_cast<int>(std::floor(std::max(a1, b1)));
      for (int line = lo; line <= hi; ++line) {
        if (std::abs(b1 - a1) < 1e-15) continue;
        const double t = (line - a1) / (b1 - a1);
        if (t <= 0.0 || t >= 1.0) continue;
        const Vec2 pt{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        const double other = vertical_line ? pt.y : pt.x;
        const double frac = other - std::floor(other);
        const double dist_on_line = std::min(frac, 1.0 - frac);
        if (std::abs(dist_on_line - eps) < kTol) {
          throw NotGeneralPosition("crossing too close to a grid node at " + fmt_point(pt.x, pt.y));
        }
        if (dist_on_line < eps) {
          throw InsideForbiddenZone("crossing inside the forbidden zone at " + fmt_point(pt.x, pt.y));
        }
        Crossing c;
        c.seg = i;
        c.t = t;
        c.point = pt;
        c.vertical_line = vertical_line;
        c.line = line;
        const int base_other = static_cast<int>(std::floor(other));
        c.edge = vertical_line ? EdgeRef{true, LatticePoint{line, base_other}}
                               : EdgeRef{false, LatticePoint{base_other, line}};
        c.edge_t = (frac - eps) / (1.0 - 2.0 * eps);
        seg_hits.push_back(c);
      }
    };
    scan_lines(true);
    scan_lines(false);
    std::sort(seg_hits.begin(), seg_hits.end(),
              [](const Crossing& u, const Crossing& v) { return u.t < v.t; });
    crossings.insert(crossings.end(), seg_hits.begin(), seg_hits.end());
  }

  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (std::size_t j = i + 1; j < crossings.size(); ++j) {
      const double d = std::hypot(crossings[i].point.x - crossings[j].point.x,
                                  crossings[i].point.y - crossings[j].point.y);
      if (d < kTol) {
        throw NotGeneralPosition("polyline self-intersects on the grid at " +
                                 fmt_point(crossings[i].point.x, crossings[i].point.y));
      }
    }
  }
  return crossings;
}

double segment_length(const Polyline& p, std::size_t i) {
  const Vec2& a = p.points[i];
  const Vec2& b = p.points[(i + 1) % p.points.size()];
  return std::hypot(b.x - a.x, b.y - a.y);
}

Vec2 segment_point(const Polyline& p, std::size_t i, double t) {
  const Vec2& a = p.points[i];
  const Vec2& b = p.points[(i + 1) % p.points.size()];
  return Vec2{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Arc length of the polyline from crossing c0 forward to crossing c1.
double sub_arc_length(const Polyline& p, const Crossing& c0, const Crossing& c1) {
  if (c0.seg == c1.seg && c1.t > c0.t) {
    return (c1.t - c0.t) * segment_length(p, c0.seg);
  }
  const std::size_t n = p.points.size();
  double total = (1.0 - c0.t) * segment_length(p, c0.seg);
  for (std::size_t s = (c0.seg + 1) % n; s != c1.seg; s = (s + 1) % n) {
    total += segment_length(p, s);
  }
  total += c1.t * segment_length(p, c1.seg);
  return total;
}

// A point strictly between c0 and the next event on its segment; it pins
// down the open cell containing the sub-arc.
Vec2 sub_arc_probe(const Polyline& p, const Crossing& c0, const Crossing& c1) {
  const double t_next = (c0.seg == c1.seg && c1.t > c0.t) ? c1.t : 1.0;
  return segment_point(p, c0.seg, 0.5 * (c0.t + t_next));
}

enum Side : int { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };

Side side_of_crossing(const Crossing& c, LatticePoint cell) {
  if (c.vertical_line) {
    if (c.line == cell.x) return kLeft;
    if (c.line == cell.x + 1) return kRight;
  } else {
    if (c.line == cell.y) return kBottom;
    if (c.line == cell.y + 1) return kTop;
  }
  throw std::logic_error("snap: crossing is not on the boundary of its sub-arc cell");
}

EdgeRef side_edge(LatticePoint cell, Side s) {
  switch (s) {
    case kBottom: return EdgeRef{false, cell};
    case kRight: return EdgeRef{true, LatticePoint{cell.x + 1, cell.y}};
    case kTop: return EdgeRef{false, LatticePoint{cell.x, cell.y + 1}};
    case kLeft: return EdgeRef{true, cell};
  }
  throw std::logic_error("unreachable");
}

double ccw_exit_param(Side s) { return (s == kBottom || s == kRight) ? 1.0 : 0.0; }
double ccw_entry_param(Side s) { return (s == kBottom || s == kRight) ? 0.0 : 1.0; }

// Corner arc between side s and the ccw-next side; walking ccw around
// the cell runs clockwise around each corner circle.
ArcPiece arc_after(LatticePoint cell, Side s) {
  switch (s) {
    case kBottom: return ArcPiece{LatticePoint{cell.x + 1, cell.y}, Quadrant::TopLeft, -1};
    case kRight: return ArcPiece{LatticePoint{cell.x + 1, cell.y + 1}, Quadrant::LeftBottom, -1};
    case kTop: return ArcPiece{LatticePoint{cell.x, cell.y + 1}, Quadrant::BottomRight, -1};
    case kLeft: return ArcPiece{cell, Quadrant::RightTop, -1};
  }
  throw std::logic_error("unreachable");
}

StraightPiece straight_on(EdgeRef e, double t0, double t1) {
  return StraightPiece{e.vertical, e.base, t0, t1};
}

std::vector<CyclePiece> ccw_route(LatticePoint cell, Side sx, double tx, Side sy, double ty) {
  std::vector<CyclePiece> out;
  out.push_back(straight_on(side_edge(cell, sx), tx, ccw_exit_param(sx)));
  Side s = sx;
  for (;;) {
    out.push_back(arc_after(cell, s));
    s = static_cast<Side>((s + 1) % 4);
    if (s == sy) break;
    out.push_back(straight_on(side_edge(cell, s), ccw_entry_param(s), ccw_exit_param(s)));
  }
  out.push_back(straight_on(side_edge(cell, sy), ccw_entry_param(sy), ty));
  return out;
}

std::vector<CyclePiece> reversed_route(std::vector<CyclePiece> route) {
  std::reverse(route.begin(), route.end());
  for (auto& piece : route) {
    if (auto* s = std::get_if<StraightPiece>(&piece)) {
      std::swap(s->t0, s->t1);
    } else {
      std::get<ArcPiece>(piece).dir = -std::get<ArcPiece>(piece).dir;
    }
  }
  return route;
}

double route_length(const std::vector<CyclePiece>& route, const GridModel& model) {
  double total = 0.0;
  for (const auto& piece : route) {
    if (const auto* s = std::get_if<StraightPiece>(&piece)) {
      total += std::abs(s->t1 - s->t0) * model.straight_length();
    } else {
      total += model.quarter_arc_length();
    }
  }
  return total;
}

}  // namespace

std::pair<GridCycle, SnapTrace> snap_to_grid(const Polyline& p, const GridModel& model) {
  const double eps = model.epsilon();
  check_clearance(p, eps);
  const std::vector<Crossing> crossings = collect_crossings(p, eps);

  SnapTrace trace;
  if (crossings.empty()) {
    // The whole curve sits in one cell; it contracts along itself.
    const double len = polyline_length(p);
    trace.records.push_back(SnapRecord{3, len, 0.0, len});
    return {GridCycle(model, {}), trace};
  }

  std::vector<CyclePiece> pieces;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c0 = crossings[i];
    const Crossing& c1 = crossings[(i + 1) % crossings.size()];
    const double len_f = sub_arc_length(p, c0, c1);
    const Vec2 probe = sub_arc_probe(p, c0, c1);
    const LatticePoint cell{static_cast<int>(std::floor(probe.x)),
                            static_cast<int>(std::floor(probe.y))};
    const Side sx = side_of_crossing(c0, cell);
    const Side sy = side_of_crossing(c1, cell);

    std::vector<CyclePiece> route;
    int case_tag;
    double area_bound;
    if (sx == sy) {
      case_tag = 3;
      route.push_back(straight_on(side_edge(cell, sx), c0.edge_t, c1.edge_t));
      area_bound = len_f;
    } else if ((sx + 2) % 4 == sy) {
      case_tag = 2;
      auto ccw = ccw_route(cell, sx, c0.edge_t, sy, c1.edge_t);
      auto cw = reversed_route(ccw_route(cell, sy, c1.edge_t, sx, c0.edge_t));
      route = route_length(cw, model) + 1e-12 < route_length(ccw, model) ? std::move(cw)
                                                                         : std::move(ccw);
      area_bound = len_f;
    } else {
      case_tag = 1;
      route = (sx + 1) % 4 == sy
                  ? ccw_route(cell, sx, c0.edge_t, sy, c1.edge_t)
                  : reversed_route(ccw_route(cell, sy, c1.edge_t, sx, c0.edge_t));
      area_bound = std::numbers::sqrt2 * len_f;
    }

    const double len_g = route_length(route, model);
    const double allowed = case_tag == 1   ? std::numbers::sqrt2 * len_f
                           : case_tag == 2 ? 2.0 * len_f
                                           : len_f;
    if (len_g > allowed + kTol) {
      throw std::logic_error("snap: boundary path violates its case length bound");
    }
    trace.records.push_back(SnapRecord{case_tag, len_f, len_g, area_bound});
    pieces.insert(pieces.end(), route.begin(), route.end());
  }

  return {GridCycle(model, std::move(pieces)), trace};
}

CurveCertificate certify_curve(const Polyline& p, const GridModel& model) {
  auto [cycle, trace] = snap_to_grid(p, model);
  CurveCertificate cert;
  cert.epsilon = model.epsilon();
  cert.curve_length = polyline_length(p);
  cert.cycle_length = cycle.length();
  cert.word = cycle_to_word(cycle);
  cert.contractible = is_in_N(cert.word);
  cert.decomposition_size = 0;
  cert.trace = std::move(trace);

  if (cert.cycle_length > 2.0 * cert.curve_length + kTol) {
    throw std::logic_error("certify_curve: snapped length exceeds twice the curve length");
  }
  const double lemma_lhs = (1.0 - 2.0 * model.epsilon()) * ab_length(cert.word);
  if (lemma_lhs > cert.cycle_length + kTol) {
    throw std::logic_error("certify_curve: ab-length bound against the cycle length failed");
  }

  if (cert.contractible) {
    const Decomposition d = decompose(cert.word);
    cert.decomposition_size = static_cast<int>(d.size());
    if (!verify_decomposition(cert.word, d)) {
      throw std::logic_error("certify_curve: decomposition failed verification");
    }
    if (!cert.word.empty() && 2 * cert.decomposition_size > ab_length(cert.word)) {
      throw std::logic_error("certify_curve: isoperimetric bound violated");
    }
    const double bound =
        cert.trace.total_area_bound() + model.face_area() * cert.decomposition_size;
    cert.area_bound = bound;
    if (cert.curve_length > 0.0) cert.ratio = bound / cert.curve_length;
  }
  return cert;
}

}  // namespace isoperim
