#pragma once

#include <string>
#include <vector>

#include "dtwist/graph_of_groups.hpp"

namespace dtwist {

enum class ViolationKind {
  NotMinimal,        // valence-1 vertex whose edge covers its group
  InvisibleVertex,   // valence-2 vertex covered by both incident edges
  UnusedEdge,        // geometric edge with twistor exponent zero
  ProperPower,       // edge image is a proper power
  PositivelyBonded,  // two edge ends twisting along the same ray
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string location;
  bool operator==(const Violation&) const = default;
};

std::string violation_str(const Violation& v);

// Relative position of the twistors of two edge ends at a common vertex.
// Positive means the two twist rays share a direction up to conjugacy,
// Negative means they oppose, None means unrelated or some twistor vanishes.
enum class Bonding { Positive, Negative, None };

// Requires tau(e1) == tau(e2); throws Error otherwise.
Bonding bonding(const GraphOfGroups& g, const DehnTwistData& d, OrientedEdge e1,
                OrientedEdge e2);

// All violations, in a fixed deterministic order: NotMinimal and
// InvisibleVertex by vertex index, UnusedEdge by geometric edge index,
// ProperPower by oriented edge, PositivelyBonded by oriented edge pair.
std::vector<Violation> check_efficient(const GraphOfGroups& g,
                                       const DehnTwistData& d);

// Same checks except the two vertex conditions are waived at v, which the
// surrounding theory pins as a basepoint that must survive.
std::vector<Violation> check_pointedly_efficient(const GraphOfGroups& g,
                                                 const DehnTwistData& d, int v);

// Graph surgeries that remove violations. M1 prunes a covered valence-1
// vertex, M2 splices out an invisible vertex, M3 folds two positively bonded
// edges together, M4 collapses an edge with trivial twistor, M5 passes an
// edge image to its primitive root. M1p and M2p are the pointed variants
// that refuse to touch the basepoint.
enum class MoveKind { M1, M2, M3, M4, M5, M1p, M2p };

const char* move_kind_name(MoveKind k);

// NotApplicable: the violation the move targets is not present there.
// NotSupported: the violation is present but this implementation does not
// carry out the surgery for that shape; the note says why.
enum class MoveStatus { Applied, NotApplicable, NotSupported };

struct MoveLocation {
  OrientedEdge e1{-1, false};  // M3, M4, M5
  OrientedEdge e2{-1, false};  // M3
  int vertex = -1;             // M1, M2 and their pointed variants
};

struct MoveResult {
  MoveStatus status = MoveStatus::NotApplicable;
  GraphOfGroups g;
  DehnTwistData d;
  std::string note;
};

MoveResult apply_move(const GraphOfGroups& g, const DehnTwistData& d,
                      MoveKind kind, MoveLocation loc);

struct MoveRecord {
  MoveKind kind;
  std::string location;
  long chi_before = 0;
  long chi_after = 0;
};

struct EfficiencyRun {
  GraphOfGroups g;
  DehnTwistData d;
  std::vector<MoveRecord> log;
  // Violations no supported move could remove; empty on full success.
  std::vector<Violation> outstanding;
};

// Applies supported moves until no violation remains or none applies.
// With pointed set, uses the pointed checks at g.basepoint and the pointed
// move variants. Every applied move strictly decreases efficiency_measure
// and preserves euler_characteristic; violations of either throw Error.
EfficiencyRun make_efficient(GraphOfGroups g, DehnTwistData d,
                             bool pointed = false);

// Lexicographic termination measure: total primitive-root exponent over all
// oriented edge images, then geometric edge count, then violation count.
std::vector<long> efficiency_measure(const GraphOfGroups& g,
                                     const DehnTwistData& d,
                                     bool pointed = false);

}  // namespace dtwist
