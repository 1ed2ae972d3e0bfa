#include "setopt/usop.hpp"

#include <algorithm>
#include <set>

#include "setopt/scalarize.hpp"

namespace setopt::usop {

namespace {

void require_labels(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty()) throw PreconditionError("EmptyLabelSet", std::string(what) + " must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw PreconditionError("DuplicateLabel", std::string(what) + " label '" + l + "' repeated");
  }
}

void require_block(const PolyhedralCone& k, const Vector& e, const SetTable& table, std::size_t nx, std::size_t nu,
                   const char* what) {
  if (!is_pointed(k)) throw PreconditionError("ConeNotPointed", std::string(what) + " cone is not pointed");
  Direction check(e, k);
  if (table.size() != nx) throw PreconditionError("IncompleteTable", std::string(what) + " table misses decisions");
  for (const auto& row : table) {
    if (row.size() != nu) throw PreconditionError("IncompleteTable", std::string(what) + " table misses uncertainty");
    for (const auto& s : row) {
      if (s.dim() != k.dim()) throw PreconditionError("DimensionMismatch", std::string(what) + " set dimension");
    }
  }
}

ExtReal gap_difference(const ExtReal& a, const ExtReal& b) {
  try {
    return ext_sub(a, b);
  } catch (const Error& err) {
    if (err.kind() != "IndeterminateSum") throw;
    throw PreconditionError("IndeterminateGap", "gap " + a.str() + " - " + b.str() + " is undefined");
  }
}

bool parallel(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

// A second direction in K' \ {0}, not parallel to e' when the space allows it.
Vector alternate_direction(const PolyhedralCone& k, const Vector& e) {
  for (std::size_t j = 0; j < e.dim(); ++j) {
    Vector v = e + Vector::unit(e.dim(), j);
    if (!v.is_zero() && contains(k, v) && !parallel(v, e)) return v;
  }
  return e * Rational(2);
}

bool all_nonpositive(const std::vector<ExtReal>& v) {
  return std::all_of(v.begin(), v.end(), [](const ExtReal& x) { return x <= ExtReal(0); });
}

bool all_negative(const std::vector<ExtReal>& v) {
  return std::all_of(v.begin(), v.end(), [](const ExtReal& x) { return x < ExtReal(0); });
}

Relation uppercase_of(Relation r) {
  switch (r) {
    case Relation::l:
      return Relation::L;
    case Relation::u:
      return Relation::U;
    case Relation::s:
      return Relation::S;
    default:
      return r;
  }
}

RelationVerdict relate(const Instance& inst, Relation r, std::size_t a, std::size_t b) {
  const PolyhedralCone& k = inst.objective().cone;
  const SetFamily fa = inst.family(a);
  const SetFamily fb = inst.family(b);
  RelationVerdict v;
  switch (r) {
    case Relation::L:
      return leq_L(k, fa, fb);
    case Relation::U:
      return leq_U(k, fa, fb);
    case Relation::S:
      return leq_S(k, fa, fb);
    case Relation::l:
      v = union_leq_l(k, fa, fb);
      break;
    case Relation::u:
      v = union_leq_u(k, fa, fb);
      break;
    case Relation::s:
      v = union_leq_s(k, fa, fb);
      break;
  }
  if (!v.exact()) {
    throw PreconditionError("NonExactPathRefused", "union relation between '" + inst.decisions()[a] + "' and '" +
                                                       inst.decisions()[b] + "' is only sampled");
  }
  return v;
}

std::vector<std::size_t> feasible_indices(const Instance& inst) {
  std::vector<std::size_t> out;
  for (const auto& x : robust_feasible_set(inst)) out.push_back(inst.index_of(x));
  return out;
}

int which_for(Relation target) {
  switch (target) {
    case Relation::L:
      return 2;
    case Relation::U:
      return 4;
    case Relation::S:
      return 5;
    default:
      throw PreconditionError("UnsupportedTarget", "characterization targets are L, U and S");
  }
}

}  // namespace

Instance::Instance(std::vector<std::string> decisions, std::vector<std::string> uncertainty, ObjectiveBlock objective,
                   std::vector<ConstraintBlock> constraints)
    : decisions_(std::move(decisions)),
      uncertainty_(std::move(uncertainty)),
      objective_(std::move(objective)),
      constraints_(std::move(constraints)) {
  require_labels(decisions_, "decision");
  require_labels(uncertainty_, "uncertainty");
  require_block(objective_.cone, objective_.e, objective_.H, decisions_.size(), uncertainty_.size(), "objective");
  for (const auto& c : constraints_) {
    require_block(c.cone, c.e, c.F, decisions_.size(), uncertainty_.size(), "constraint");
  }
}

std::size_t Instance::index_of(const std::string& decision) const {
  auto it = std::find(decisions_.begin(), decisions_.end(), decision);
  if (it == decisions_.end()) throw PreconditionError("UnknownDecision", "no decision '" + decision + "'");
  return static_cast<std::size_t>(it - decisions_.begin());
}

SetFamily Instance::family(std::size_t x) const {
  std::vector<FamilyMember> members;
  for (std::size_t u = 0; u < uncertainty_.size(); ++u) members.push_back({uncertainty_[u], objective_.H[x][u]});
  return SetFamily(std::move(members));
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::l:
      return "l";
    case Relation::u:
      return "u";
    case Relation::s:
      return "s";
    case Relation::L:
      return "L";
    case Relation::U:
      return "U";
    case Relation::S:
      return "S";
  }
  return "?";
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Strict:
      return "strict";
    case Variant::Minimal:
      return "minimal";
    case Variant::MinimalMixed:
      return "minimal-mixed";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  for (Relation r : {Relation::l, Relation::u, Relation::s, Relation::L, Relation::U, Relation::S}) {
    if (s == to_string(r)) return r;
  }
  throw SchemaError("UnknownRelation", "relation '" + s + "' is not one of l,u,s,L,U,S");
}

Variant parse_variant(const std::string& s) {
  for (Variant v : {Variant::Strict, Variant::Minimal, Variant::MinimalMixed}) {
    if (s == to_string(v)) return v;
  }
  throw SchemaError("UnknownVariant", "variant '" + s + "' is not one of strict,minimal,minimal-mixed");
}

const char* to_string(DualStatus s) {
  switch (s) {
    case DualStatus::Confirmed:
      return "confirmed";
    case DualStatus::ProbeInconclusive:
      return "probe-inconclusive";
    case DualStatus::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

std::vector<ExtReal> feasibility_vector(const Instance& inst, const std::string& x,
                                        const std::vector<Vector>& e_primes) {
  const std::size_t xi = inst.index_of(x);
  const auto& cs = inst.constraints();
  if (e_primes.size() != cs.size()) throw PreconditionError("DimensionMismatch", "one e' per constraint expected");
  std::vector<ExtReal> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ExtReal sup = ExtReal::neg_inf();
    for (const auto& f : cs[i].F[xi]) sup = std::max(sup, script_z2(cs[i].cone, e_primes[i], f).value);
    out.push_back(sup);
  }
  return out;
}

std::vector<ExtReal> feasibility_vector(const Instance& inst, const std::string& x) {
  std::vector<Vector> es;
  for (const auto& c : inst.constraints()) es.push_back(c.e);
  return feasibility_vector(inst, x, es);
}

bool directly_feasible(const Instance& inst, const std::string& x) {
  const std::size_t xi = inst.index_of(x);
  for (const auto& c : inst.constraints()) {
    const VSet origin = VSet::polyhedron({Vector(c.cone.dim())});
    for (const auto& f : c.F[xi]) {
      if (!leq_u(c.cone, f, origin).holds) return false;
    }
  }
  return true;
}

std::vector<std::string> robust_feasible_set(const Instance& inst) {
  std::vector<Vector> alt;
  for (const auto& c : inst.constraints()) alt.push_back(alternate_direction(c.cone, c.e));
  std::vector<std::string> out;
  for (const auto& x : inst.decisions()) {
    const bool feasible = all_nonpositive(feasibility_vector(inst, x));
    if (feasible != directly_feasible(inst, x)) {
      throw InternalError("LevelSetBridge", "scalar and direct feasibility of '" + x + "' disagree");
    }
    if (feasible != all_nonpositive(feasibility_vector(inst, x, alt))) {
      throw InternalError("FeasibleSetDependsOnDirection", "feasibility of '" + x + "' changes with e'");
    }
    if (feasible) out.push_back(x);
  }
  return out;
}

RobustVerdict is_robust(const Instance& inst, const std::string& x_star, RobustKind kind) {
  const std::size_t xs = inst.index_of(x_star);
  const auto feasible = feasible_indices(inst);
  if (std::find(feasible.begin(), feasible.end(), xs) == feasible.end()) {
    throw PreconditionError("NotRobustFeasible", "'" + x_star + "' is not robust feasible");
  }
  const Relation hyp = kind.relation;
  const Relation concl = kind.variant == Variant::MinimalMixed ? uppercase_of(hyp) : hyp;
  RobustVerdict out;
  for (std::size_t x0 : feasible) {
    if (x0 == xs) continue;
    RelationVerdict fwd = relate(inst, hyp, x0, xs);
    if (!fwd.holds) continue;
    if (kind.variant == Variant::Strict) {
      out.robust = false;
    } else {
      RelationVerdict back = relate(inst, concl, xs, x0);
      if (back.holds) continue;
      out.robust = false;
      out.backward = back;
    }
    out.witness = inst.decisions()[x0];
    out.forward = fwd;
    return out;
  }
  return out;
}

std::vector<GapVector> gap_table(const Instance& inst, const std::string& x_star, int which) {
  if (which < 1 || which > 5) throw PreconditionError("UnknownGap", "gap index must be 1..5");
  const std::size_t xs = inst.index_of(x_star);
  const auto& obj = inst.objective();
  const auto& k = obj.cone;
  const auto& e = obj.e;
  const std::size_t nu = inst.uncertainty().size();

  auto inf_z1 = [&](std::size_t x) {
    ExtReal v = ExtReal::pos_inf();
    for (const auto& h : obj.H[x]) v = std::min(v, script_z1(k, e, h).value);
    return v;
  };
  auto sup_z2 = [&](std::size_t x) {
    ExtReal v = ExtReal::neg_inf();
    for (const auto& h : obj.H[x]) v = std::max(v, script_z2(k, e, h).value);
    return v;
  };
  // sup_a inf_u Z1(H(x,u), H(x*,a)).
  auto pair2 = [&](std::size_t x, bool& exact) {
    ExtReal sup = ExtReal::neg_inf();
    for (std::size_t a = 0; a < nu; ++a) {
      ExtReal inf = ExtReal::pos_inf();
      for (std::size_t u = 0; u < nu; ++u) {
        auto r = z1_pair(k, e, obj.H[x][u], obj.H[xs][a]);
        exact = exact && r.exactness == Exactness::Exact;
        inf = std::min(inf, r.value);
      }
      sup = std::max(sup, inf);
    }
    return sup;
  };
  // sup_u inf_a Z2(H(x,u), H(x*,a)).
  auto pair4 = [&](std::size_t x, bool& exact) {
    ExtReal sup = ExtReal::neg_inf();
    for (std::size_t u = 0; u < nu; ++u) {
      ExtReal inf = ExtReal::pos_inf();
      for (std::size_t a = 0; a < nu; ++a) {
        auto r = z2_pair(k, e, obj.H[x][u], obj.H[xs][a]);
        exact = exact && r.exactness == Exactness::Exact;
        inf = std::min(inf, r.value);
      }
      sup = std::max(sup, inf);
    }
    return sup;
  };

  std::optional<ExtReal> star1;
  std::optional<ExtReal> star3;
  if (which == 1) star1 = inf_z1(xs);
  if (which == 3) star3 = sup_z2(xs);

  std::vector<GapVector> out;
  for (std::size_t x = 0; x < inst.decisions().size(); ++x) {
    if (x == xs) continue;
    GapVector row{inst.decisions()[x], ExtReal(0), feasibility_vector(inst, inst.decisions()[x]), true};
    switch (which) {
      case 1:
        row.gap = gap_difference(inf_z1(x), *star1);
        break;
      case 2:
        row.gap = pair2(x, row.exact);
        break;
      case 3:
        row.gap = gap_difference(sup_z2(x), *star3);
        break;
      case 4:
        row.gap = pair4(x, row.exact);
        break;
      case 5: {
        ExtReal g2 = pair2(x, row.exact);
        ExtReal g4 = pair4(x, row.exact);
        row.gap = std::max(g2, g4);
        break;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

RHatVerdict r_hat_meets_C(const Instance& inst, const std::string& x_star, int which) {
  RHatVerdict out;
  out.table = gap_table(inst, x_star, which);
  for (const auto& row : out.table) {
    if (row.gap <= ExtReal(0) && all_nonpositive(row.feas)) {
      out.meets = true;
      out.witness = row.decision;
      break;
    }
  }
  return out;
}

CharacterizationCheck verify_characterization(const Instance& inst, const std::string& x_star, Relation target) {
  const int which = which_for(target);
  CharacterizationCheck out{target, which, is_robust(inst, x_star, {target, Variant::Strict}),
                            r_hat_meets_C(inst, x_star, which), false};
  out.consistent = out.robust.robust == !out.r_hat.meets;
  const bool exact = std::all_of(out.r_hat.table.begin(), out.r_hat.table.end(),
                                 [](const GapVector& g) { return g.exact; });
  if (!out.consistent && exact) {
    throw InternalError("EquivalenceViolation", std::string(to_string(target)) + "-robustness of '" + x_star +
                                                    "' disagrees with the gap criterion");
  }
  return out;
}

SufficiencyCheck verify_sufficiency(const Instance& inst, const std::string& x_star, int which) {
  if (which != 1 && which != 3) throw PreconditionError("UnknownGap", "sufficiency criteria are 1 and 3");
  const Relation target = which == 1 ? Relation::L : Relation::U;
  RHatVerdict rh = r_hat_meets_C(inst, x_star, which);
  SufficiencyCheck out{which, !rh.meets, is_robust(inst, x_star, {target, Variant::Strict}), false};
  if (out.premise && !out.robust.robust) {
    throw InternalError("SufficiencyViolation", "gap criterion holds but '" + x_star + "' is not robust");
  }
  out.converse_failure = out.robust.robust && !out.premise;
  return out;
}

DualNecessaryReport dual_necessary(const Instance& inst, const std::string& x_star, Relation target) {
  if (target != Relation::L && target != Relation::U) {
    throw PreconditionError("UnsupportedTarget", "dual necessary conditions exist for L and U");
  }
  const auto& obj = inst.objective();
  for (const auto& row : obj.H) {
    for (const auto& h : row) {
      const auto& pts = h.vertices();
      if (h.is_points() && std::any_of(pts.begin(), pts.end(), [&](const Vector& p) { return p != pts.front(); })) {
        throw PreconditionError("NonConvexObjective", "objective values must be convex polyhedra");
      }
    }
  }
  const std::size_t xs = inst.index_of(x_star);
  DualNecessaryReport out;
  out.x_star_robust = is_robust(inst, x_star, {target, Variant::Strict}).robust;

  for (const auto& w : dual_generators(obj.cone)) {
    const PolyhedralCone kw = cone_halfspace(w);
    auto scalar = [&](std::size_t x) {
      ExtReal v = target == Relation::L ? ExtReal::pos_inf() : ExtReal::neg_inf();
      for (const auto& h : obj.H[x]) {
        v = target == Relation::L ? std::min(v, script_z1(kw, w, h).value) : std::max(v, script_z2(kw, w, h).value);
      }
      return v;
    };
    const ExtReal star = scalar(xs);
    DualProbeRow probe{w, {}, std::nullopt};
    for (std::size_t x = 0; x < inst.decisions().size(); ++x) {
      if (x == xs) continue;
      GapVector row{inst.decisions()[x], gap_difference(scalar(x), star),
                    feasibility_vector(inst, inst.decisions()[x]), true};
      if (!probe.witness && row.gap < ExtReal(0) && all_negative(row.feas)) probe.witness = row.decision;
      probe.table.push_back(std::move(row));
    }
    if (!probe.witness && !out.good_w) out.good_w = w;
    out.probes.push_back(std::move(probe));
  }
  if (!out.x_star_robust) {
    out.status = DualStatus::NotApplicable;
  } else {
    out.status = out.good_w ? DualStatus::Confirmed : DualStatus::ProbeInconclusive;
  }
  return out;
}

}  // namespace setopt::usop
