#include <algorithm>

#include "dtwist/efficiency.hpp"
#include "dtwist/errors.hpp"

namespace dtwist {

namespace {

bool covers(const GraphOfGroups& g, OrientedEdge e) {
  return g.vertex_basis[g.tau(e)].rank() == 1 && g.image(e).length() == 1;
}

std::vector<OrientedEdge> oriented_edges(const GraphOfGroups& g) {
  std::vector<OrientedEdge> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    out.push_back({e, false});
    out.push_back({e, true});
  }
  return out;
}

std::vector<OrientedEdge> ends_at(const GraphOfGroups& g, int v) {
  std::vector<OrientedEdge> out;
  for (OrientedEdge e : oriented_edges(g))
    if (g.tau(e) == v) out.push_back(e);
  return out;
}

// exponent k with w = t^k in a rank-1 vertex group
long rank1_exponent(const Word& w) {
  if (w.empty()) return 0;
  return sign_of(w.letter(0)) * static_cast<long>(w.length());
}

MoveResult declined(MoveStatus status, std::string note) {
  MoveResult r;
  r.status = status;
  r.note = std::move(note);
  return r;
}

// Removes a vertex and a geometric edge, compacting indices. The caller has
// already retargeted every surviving edge end and moved the basepoint away.
void compact(GraphOfGroups& g, DehnTwistData& d, int dead_vertex,
             int dead_edge) {
  if (dead_edge >= 0) {
    g.edge_names.erase(g.edge_names.begin() + dead_edge);
    g.edge_tau.erase(g.edge_tau.begin() + dead_edge);
    g.edge_image.erase(g.edge_image.begin() + dead_edge);
    d.m.erase(d.m.begin() + dead_edge);
  }
  if (dead_vertex >= 0) {
    g.vertex_names.erase(g.vertex_names.begin() + dead_vertex);
    g.vertex_basis.erase(g.vertex_basis.begin() + dead_vertex);
    for (auto& t : g.edge_tau)
      for (int s : {0, 1}) {
        if (t[s] == dead_vertex)
          throw Error("internal: compacting a vertex still in use");
        if (t[s] > dead_vertex) --t[s];
      }
    if (g.basepoint == dead_vertex)
      throw Error("internal: compacting the basepoint");
    if (g.basepoint > dead_vertex) --g.basepoint;
  }
}

void check_edge_range(const GraphOfGroups& g, OrientedEdge e) {
  if (e.geom < 0 || e.geom >= g.num_edges())
    throw Error("edge index out of range");
}

MoveResult move5(const GraphOfGroups& g, const DehnTwistData& d,
                 OrientedEdge e) {
  check_edge_range(g, e);
  const auto [root, p] = primitive_root(g.image(e));
  if (p < 2) return declined(MoveStatus::NotApplicable, "image is not a proper power");
  const auto [oroot, q] = primitive_root(g.image(bar(e)));
  if (q % p != 0)
    return declined(MoveStatus::NotSupported,
                    "opposite image is not a power with matching exponent");
  MoveResult r;
  r.status = MoveStatus::Applied;
  r.g = g;
  r.d = d;
  r.g.edge_image[e.geom][e.rev ? 1 : 0] = root;
  r.g.edge_image[e.geom][e.rev ? 0 : 1] = oroot.pow(q / p);
  r.d.m[e.geom][0] *= p;
  r.d.m[e.geom][1] *= p;
  return r;
}

MoveResult move4(const GraphOfGroups& g, const DehnTwistData& d,
                 OrientedEdge e) {
  check_edge_range(g, e);
  if (twistor_exponent(d, e) != 0)
    return declined(MoveStatus::NotApplicable, "twistor exponent is nonzero");
  const int w = g.tau(e), u = g.iota(e);
  if (w == u) return declined(MoveStatus::NotSupported, "edge is a loop");
  if (!covers(g, e))
    return declined(MoveStatus::NotSupported,
                    "image does not cover the collapsing vertex group");
  const Word far = g.image(bar(e));
  std::vector<OrientedEdge> others;
  for (OrientedEdge oe : ends_at(g, w))
    if (!(oe == e)) others.push_back(oe);
  if (primitive_root(far).second > 1 && !others.empty())
    return declined(MoveStatus::NotSupported,
                    "opposite image is a proper power and other edges end here");
  MoveResult r;
  r.status = MoveStatus::Applied;
  r.g = g;
  r.d = d;
  const int sigma = sign_of(g.image(e).letter(0));
  for (OrientedEdge oe : others) {
    const long k = rank1_exponent(r.g.image(oe));
    r.g.edge_image[oe.geom][oe.rev ? 1 : 0] = far.pow(sigma * k);
    r.g.edge_tau[oe.geom][oe.rev ? 1 : 0] = u;
  }
  if (r.g.basepoint == w) r.g.basepoint = u;
  compact(r.g, r.d, w, e.geom);
  return r;
}

MoveResult move3(const GraphOfGroups& g, const DehnTwistData& d,
                 OrientedEdge e1, OrientedEdge e2) {
  check_edge_range(g, e1);
  check_edge_range(g, e2);
  if (e1 == e2)
    return declined(MoveStatus::NotApplicable, "need two distinct edge ends");
  if (bonding(g, d, e1, e2) != Bonding::Positive)
    return declined(MoveStatus::NotApplicable, "edge ends are not positively bonded");
  if (e1.geom == e2.geom)
    return declined(MoveStatus::NotSupported, "ends share a geometric edge");
  if (!(g.image(e1) == g.image(e2)))
    return declined(MoveStatus::NotSupported, "images at the common vertex differ");
  const int w = g.tau(e1);
  const int u1 = g.iota(e1), u2 = g.iota(e2);
  if (u1 == w || u2 == w)
    return declined(MoveStatus::NotSupported, "a folded edge is a loop");
  if (u1 == u2)
    return declined(MoveStatus::NotSupported, "ends start at the same vertex");
  if (d.m_of(e1) != d.m_of(e2) || d.m_of(bar(e1)) != d.m_of(bar(e2)))
    return declined(MoveStatus::NotSupported, "twist exponents differ");
  if (g.vertex_basis[u2].rank() != 1)
    return declined(MoveStatus::NotSupported,
                    "absorbed vertex group has rank above one");
  const Word x2 = g.image(bar(e2));
  if (x2.length() != 1)
    return declined(MoveStatus::NotSupported, "absorbed image is not a single letter");
  const Word x1 = g.image(bar(e1));
  const bool lone = g.valence(u2) == 1;
  if (!lone && x1.length() != 1)
    return declined(MoveStatus::NotSupported,
                    "substitution would lengthen images at the absorbed vertex");
  const int s = sign_of(x2.letter(0));
  MoveResult r;
  r.status = MoveStatus::Applied;
  r.g = g;
  r.d = d;
  const Word rep = s > 0 ? x1 : x1.inverse();  // generator of the absorbed group
  for (OrientedEdge oe : ends_at(g, u2)) {
    if (oe == bar(e2)) continue;
    const long k = rank1_exponent(r.g.image(oe));
    r.g.edge_image[oe.geom][oe.rev ? 1 : 0] = rep.pow(k);
    r.g.edge_tau[oe.geom][oe.rev ? 1 : 0] = u1;
  }
  if (r.g.basepoint == u2) r.g.basepoint = u1;
  compact(r.g, r.d, u2, e2.geom);
  return r;
}

MoveResult move2(const GraphOfGroups& g, const DehnTwistData& d, int w,
                 bool pointed) {
  if (w < 0 || w >= g.num_vertices()) throw Error("vertex index out of range");
  if (pointed && w == g.basepoint)
    return declined(MoveStatus::NotApplicable, "vertex is the basepoint");
  const std::vector<OrientedEdge> ends = ends_at(g, w);
  if (ends.size() != 2)
    return declined(MoveStatus::NotApplicable, "vertex does not have exactly two edge ends");
  const OrientedEdge e1 = ends[0], e2 = ends[1];
  if (!covers(g, e1) || !covers(g, e2))
    return declined(MoveStatus::NotApplicable, "edge images do not cover the vertex group");
  if (e2 == bar(e1))
    return declined(MoveStatus::NotSupported, "the two ends belong to a loop");
  const int u1 = g.tau(bar(e1)), u2 = g.tau(bar(e2));
  const int s1 = sign_of(g.image(e1).letter(0));
  const int s2 = sign_of(g.image(e2).letter(0));
  MoveResult r;
  r.status = MoveStatus::Applied;
  r.g = g;
  r.d = d;
  // Reuse e1's geometric slot for the spliced edge; the plus end lands at u2.
  const Word far1 = g.image(bar(e1)), far2 = g.image(bar(e2));
  r.g.edge_tau[e1.geom] = {u2, u1};
  r.g.edge_image[e1.geom] = {far2, s1 * s2 > 0 ? far1 : far1.inverse()};
  r.d.m[e1.geom] = {d.m_of(bar(e2)),
                    s1 * s2 * (d.m_of(bar(e1)) - d.m_of(e1)) + d.m_of(e2)};
  if (r.g.basepoint == w) r.g.basepoint = u1;
  compact(r.g, r.d, w, e2.geom);
  return r;
}

MoveResult move1(const GraphOfGroups& g, const DehnTwistData& d, int w,
                 bool pointed) {
  if (w < 0 || w >= g.num_vertices()) throw Error("vertex index out of range");
  if (pointed && w == g.basepoint)
    return declined(MoveStatus::NotApplicable, "vertex is the basepoint");
  const std::vector<OrientedEdge> ends = ends_at(g, w);
  if (ends.size() != 1)
    return declined(MoveStatus::NotApplicable, "vertex does not have exactly one edge end");
  const OrientedEdge e = ends[0];
  if (!covers(g, e))
    return declined(MoveStatus::NotApplicable, "edge image does not cover the vertex group");
  if (twistor_exponent(d, e) != 0)
    return declined(MoveStatus::NotSupported, "twistor exponent is nonzero");
  MoveResult r;
  r.status = MoveStatus::Applied;
  r.g = g;
  r.d = d;
  if (r.g.basepoint == w) r.g.basepoint = g.iota(e);
  compact(r.g, r.d, w, e.geom);
  return r;
}

}  // namespace

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotMinimal: return "not-minimal";
    case ViolationKind::InvisibleVertex: return "invisible-vertex";
    case ViolationKind::UnusedEdge: return "unused-edge";
    case ViolationKind::ProperPower: return "proper-power";
    case ViolationKind::PositivelyBonded: return "positively-bonded";
  }
  return "?";
}

std::string violation_str(const Violation& v) {
  return std::string(violation_kind_name(v.kind)) + " at " + v.location;
}

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::M1: return "M1";
    case MoveKind::M2: return "M2";
    case MoveKind::M3: return "M3";
    case MoveKind::M4: return "M4";
    case MoveKind::M5: return "M5";
    case MoveKind::M1p: return "M1'";
    case MoveKind::M2p: return "M2'";
  }
  return "?";
}

Bonding bonding(const GraphOfGroups& g, const DehnTwistData& d, OrientedEdge e1,
                OrientedEdge e2) {
  check_edge_range(g, e1);
  check_edge_range(g, e2);
  if (g.tau(e1) != g.tau(e2))
    throw Error("bonding: edge ends meet different vertices");
  const long d1 = twistor_exponent(d, e1), d2 = twistor_exponent(d, e2);
  if (d1 == 0 || d2 == 0) return Bonding::None;
  const Word r1 = primitive_root(g.image(e1)).first;
  const Word r2 = primitive_root(g.image(e2)).first;
  const bool same_sign = (d1 > 0) == (d2 > 0);
  if (are_conjugate(r1, r2)) return same_sign ? Bonding::Positive : Bonding::Negative;
  if (are_conjugate(r1, r2.inverse()))
    return same_sign ? Bonding::Negative : Bonding::Positive;
  return Bonding::None;
}

static std::vector<Violation> check_impl(const GraphOfGroups& g,
                                         const DehnTwistData& d, int skip) {
  std::vector<Violation> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == skip) continue;
    const auto ends = ends_at(g, v);
    if (ends.size() == 1 && covers(g, ends[0]))
      out.push_back({ViolationKind::NotMinimal, g.vertex_names[v]});
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == skip) continue;
    const auto ends = ends_at(g, v);
    if (ends.size() == 2 && covers(g, ends[0]) && covers(g, ends[1]))
      out.push_back({ViolationKind::InvisibleVertex, g.vertex_names[v]});
  }
  for (int e = 0; e < g.num_edges(); ++e)
    if (twistor_exponent(d, {e, false}) == 0)
      out.push_back({ViolationKind::UnusedEdge, g.edge_names[e]});
  for (OrientedEdge e : oriented_edges(g))
    if (primitive_root(g.image(e)).second > 1)
      out.push_back({ViolationKind::ProperPower, g.edge_str(e)});
  const auto all = oriented_edges(g);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (g.tau(all[i]) != g.tau(all[j])) continue;
      if (bonding(g, d, all[i], all[j]) == Bonding::Positive)
        out.push_back({ViolationKind::PositivelyBonded,
                       g.edge_str(all[i]) + "," + g.edge_str(all[j])});
    }
  return out;
}

std::vector<Violation> check_efficient(const GraphOfGroups& g,
                                       const DehnTwistData& d) {
  return check_impl(g, d, -1);
}

std::vector<Violation> check_pointedly_efficient(const GraphOfGroups& g,
                                                 const DehnTwistData& d,
                                                 int v) {
  if (v < 0 || v >= g.num_vertices())
    throw Error("check_pointedly_efficient: vertex index out of range");
  return check_impl(g, d, v);
}

MoveResult apply_move(const GraphOfGroups& g, const DehnTwistData& d,
                      MoveKind kind, MoveLocation loc) {
  switch (kind) {
    case MoveKind::M1: return move1(g, d, loc.vertex, false);
    case MoveKind::M1p: return move1(g, d, loc.vertex, true);
    case MoveKind::M2: return move2(g, d, loc.vertex, false);
    case MoveKind::M2p: return move2(g, d, loc.vertex, true);
    case MoveKind::M3: return move3(g, d, loc.e1, loc.e2);
    case MoveKind::M4: return move4(g, d, loc.e1);
    case MoveKind::M5: return move5(g, d, loc.e1);
  }
  throw Error("apply_move: unknown move kind");
}

std::vector<long> efficiency_measure(const GraphOfGroups& g,
                                     const DehnTwistData& d, bool pointed) {
  long exps = 0;
  for (OrientedEdge e : oriented_edges(g)) exps += primitive_root(g.image(e)).second;
  const auto viols = pointed ? check_pointedly_efficient(g, d, g.basepoint)
                             : check_efficient(g, d);
  return {exps, g.num_edges(), static_cast<long>(viols.size())};
}

EfficiencyRun make_efficient(GraphOfGroups g, DehnTwistData d, bool pointed) {
  EfficiencyRun run;
  for (;;) {
    const auto viols = pointed ? check_pointedly_efficient(g, d, g.basepoint)
                               : check_efficient(g, d);
    if (viols.empty()) break;
    const auto measure = efficiency_measure(g, d, pointed);
    const long chi = euler_characteristic(g);

    MoveResult applied;
    MoveKind applied_kind = MoveKind::M5;
    std::string applied_loc;
    auto attempt = [&](MoveKind kind, MoveLocation loc, std::string where) {
      if (applied.status == MoveStatus::Applied) return;
      MoveResult r = apply_move(g, d, kind, loc);
      if (r.status == MoveStatus::Applied) {
        applied = std::move(r);
        applied_kind = kind;
        applied_loc = std::move(where);
      }
    };

    for (OrientedEdge e : oriented_edges(g))
      attempt(MoveKind::M5, {.e1 = e}, g.edge_str(e));
    for (OrientedEdge e : oriented_edges(g))
      attempt(MoveKind::M4, {.e1 = e}, g.edge_str(e));
    const auto all = oriented_edges(g);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) {
        if (g.tau(all[i]) != g.tau(all[j])) continue;
        attempt(MoveKind::M3, {.e1 = all[i], .e2 = all[j]},
                g.edge_str(all[i]) + "," + g.edge_str(all[j]));
      }
    for (int v = 0; v < g.num_vertices(); ++v)
      attempt(pointed ? MoveKind::M2p : MoveKind::M2, {.vertex = v},
              g.vertex_names[v]);
    for (int v = 0; v < g.num_vertices(); ++v)
      attempt(pointed ? MoveKind::M1p : MoveKind::M1, {.vertex = v},
              g.vertex_names[v]);

    if (applied.status != MoveStatus::Applied) {
      run.outstanding = viols;
      break;
    }
    g = std::move(applied.g);
    d = std::move(applied.d);
    if (euler_characteristic(g) != chi)
      throw Error("make_efficient: move changed the Euler characteristic");
    if (!(efficiency_measure(g, d, pointed) < measure))
      throw Error("make_efficient: move did not decrease the measure");
    run.log.push_back({applied_kind, applied_loc, chi, euler_characteristic(g)});
  }
  run.g = std::move(g);
  run.d = std::move(d);
  return run;
}

}  // namespace dtwist
