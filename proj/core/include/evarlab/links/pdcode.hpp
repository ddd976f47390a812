#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace evarlab::links {

// Planar diagram code.  Each crossing lists the four edge labels around it
// starting with the incoming under-strand edge and proceeding
// counterclockwise, so slot 0 passes under and exits at slot 2, while the
// over-strand occupies slots 1 and 3.  Orientations are recovered from the
// labels, not stored.
//
// A crossing is positive when the over-strand runs from slot 1 to slot 3:
//
//        out                 out
//      3  ^                    ^  3
//       \ |                    | /
//        \|                    |/
//   ------+----> over   <------+------ over
//         |\                  /|
//         | \                / |
//      in |  1              1  | in
//
//        sign +1             sign -1
//
// (under-strand drawn vertically, entering at slot 0 below).
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;  // crossingless unknot components
};

// Accepts the text form `PD[X[a,b,c,d],...]` ("PD[]" is a zero-crossing
// unknot) and the JSON object form
// `{"crossings": [[a,b,c,d],...], "free_loops": n, ...}`.
// Validates arity, the two-occurrence rule, and orientability; diagnostics
// name the offending crossing.
PDCode parse_pd(const std::string& text);

// Per-crossing oriented data, derived during validation.
struct CrossingGeometry {
  int sign;  // +1 or -1
  int under_in, under_out;
  int over_in, over_out;
};

struct Components {
  // One cycle per edge-bearing component: edges in traversal order starting
  // at the component's smallest label.  Cycles sorted by that label.
  std::vector<std::vector<int>> edge_cycles;
  int free_loops = 0;

  std::size_t count() const { return edge_cycles.size() + free_loops; }
};

struct DiagramAnalysis {
  std::vector<CrossingGeometry> geometry;  // parallel to pd.crossings
  Components components;
  // Wirtinger arcs: maximal over-strand runs of edges.  arc_of[e] maps an
  // edge label to its arc id; arcs are numbered by smallest member edge.
  std::vector<std::vector<int>> arcs;
  std::vector<int> arc_of;  // indexed by edge label (entry 0 unused)
  std::vector<std::size_t> component_of_arc;
};

DiagramAnalysis analyze(const PDCode& pd);

Components components(const PDCode& pd);

// Symmetric, zero diagonal; entry (i,j) is half the signed crossing count
// between distinct components.  Rows/columns follow Components ordering
// (free loops last, always zero).
std::vector<std::vector<int>> linking_matrix(const PDCode& pd);

bool homologically_trivial(const std::vector<std::vector<int>>& lk);

// Self-writhe per component: signed count of a component's crossings with
// itself (used for the longitude framing correction).
std::vector<int> self_writhe(const PDCode& pd);

// Diagram of the sublink spanned by `keep` (component indices into the
// Components ordering).  Crossings with a removed strand are spliced out.
PDCode sublink(const PDCode& pd, const std::vector<std::size_t>& keep);

}  // namespace evarlab::links
