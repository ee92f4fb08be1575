#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "isoperim/word.hpp"

namespace isoperim {

struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedCycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotGeneralPosition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsideForbiddenZone : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(LatticePoint, LatticePoint) = default;
};

// The grid complex: unit grid lines with epsilon-disks around lattice
// points removed and the boundary circles adjoined.
class GridModel {
 public:
  explicit GridModel(double epsilon);

  double epsilon() const { return epsilon_; }
  double straight_length() const;    // 1 - 2 eps, one full grid-line edge
  double quarter_arc_length() const; // pi eps / 2
  double face_area() const;          // 1 - pi eps^2, one relator face

 private:
  double epsilon_;
};

// Circle quadrants, named start-to-end counterclockwise: BottomRight
// runs from the bottom point of the circle to its right point, etc.
enum class Quadrant : std::uint8_t { BottomRight = 0, RightTop = 1, TopLeft = 2, LeftBottom = 3 };

// Partial or full traversal of one straight edge. A vertical edge based
// at lattice point p runs from (p.x, p.y+eps) at t=0 to (p.x, p.y+1-eps)
// at t=1; a horizontal edge from (p.x+eps, p.y) to (p.x+1-eps, p.y).
struct StraightPiece {
  bool vertical;
  LatticePoint base;
  double t0;
  double t1;
};

// Full traversal of one quarter arc; dir +1 is counterclockwise.
struct ArcPiece {
  LatticePoint center;
  Quadrant quadrant;
  int dir;
};

using CyclePiece = std::variant<StraightPiece, ArcPiece>;

// Cancels backtracks in a cyclic traversal sequence: consecutive pieces
// on the same straight edge merge into their net sub-segment, and
// opposite traversals of the same arc annihilate.
std::vector<CyclePiece> reduce_cycle(std::vector<CyclePiece> pieces);

// Euclidean coordinates of the point at parameter t on a straight edge.
Vec2 straight_param_point(const StraightPiece& s, double t, const GridModel& model);

// Counterclockwise angle range [start, end] of a quadrant, in radians.
std::pair<double, double> arc_angle_range(Quadrant q);

// A closed curve on the grid complex, stored as its geometrically
// irreducible traversal sequence (reduced on construction).
class GridCycle {
 public:
  GridCycle(GridModel model, std::vector<CyclePiece> pieces);

  const GridModel& model() const { return model_; }
  const std::vector<CyclePiece>& pieces() const { return pieces_; }
  bool trivial() const { return pieces_.empty(); }
  double length() const;

 private:
  GridModel model_;
  std::vector<CyclePiece> pieces_;
};

// Concatenates the generator paths of the letters of w (cyclically
// reduced, zero ab-displacement) along the developing path.
GridCycle word_to_cycle(const Word& w, const GridModel& model);

// Inverse translation; the output word is cyclically reduced and well
// defined up to rotation.
Word cycle_to_word(const GridCycle& cycle);

struct SnapRecord {
  int case_tag;       // 1, 2 or 3
  double arc_length;  // length of the input sub-arc f
  double path_length; // exact length of the chosen boundary path g
  double area_bound;  // certified homotopy-area bound for this sub-arc
};

struct SnapTrace {
  std::vector<SnapRecord> records;
  double total_area_bound() const;
};

// Closed polyline (the segment from the last point back to the first is
// implicit).
struct Polyline {
  std::vector<Vec2> points;
};

double polyline_length(const Polyline& p);

// Snaps a closed polyline in general position onto the grid complex,
// replacing every sub-arc between consecutive crossings by a boundary
// path of its cell with certified length and homotopy-area accounting.
std::pair<GridCycle, SnapTrace> snap_to_grid(const Polyline& p, const GridModel& model);

struct CurveCertificate {
  double epsilon;
  double curve_length;              // L_alpha
  double cycle_length;              // L_gamma
  Word word;                        // cyclically reduced
  bool contractible;                // word in the normal closure
  int decomposition_size;           // d, 0 when non-contractible
  std::optional<double> area_bound; // sum of homotopy bounds + (1-pi eps^2) d
  std::optional<double> ratio;      // area_bound / curve_length
  SnapTrace trace;
};

// Full pipeline: snap, read off the word, test contractibility, and
// certify the area bound. Non-contractible curves come back with
// contractible = false and no bound.
CurveCertificate certify_curve(const Polyline& p, const GridModel& model);

}  // namespace isoperim
