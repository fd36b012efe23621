#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qm/fp.hpp"
#include "qm/quiver.hpp"
#include "qm/systems.hpp"

namespace qm {

/// Element of [0, infinity] over Q.
struct ExtRat {
  bool inf = false;
  Rat v;

  static ExtRat infinity() { return {true, Rat()}; }
  static ExtRat of(const Rat& r) { return {false, r}; }

  bool operator==(const ExtRat& o) const { return inf == o.inf && (inf || v == o.v); }
  bool operator!=(const ExtRat& o) const { return !(*this == o); }
  bool operator<(const ExtRat& o) const {
    if (inf) return false;
    if (o.inf) return true;
    return v < o.v;
  }
  std::string str() const { return inf ? "inf" : v.str(); }
};

/// The finite wall set {v/u : 0 <= v <= n+p, 0 <= u <= n}, with v/0 read
/// as infinity and 0/0 excluded. Stability can only change across these.
struct LambdaSet {
  int n = 0, p = 0;
  std::vector<ExtRat> values;  // deduplicated, ascending, infinity last

  bool contains(const ExtRat& x) const;
};

LambdaSet lambda_set(int n, int p);

/// Position of a character ray in the wall-and-chamber structure. An open
/// interval between consecutive walls is simultaneously the upper chamber
/// of its right wall and the lower chamber of its left wall.
struct ChamberLocation {
  enum class Kind { Wall, Interval, OutsideCone };
  Kind kind = Kind::OutsideCone;
  ExtRat wall;   // for Wall
  ExtRat lower;  // for Interval: the open interval (lower, upper)
  ExtRat upper;

  static ChamberLocation outside() { return {}; }
  static ChamberLocation at_wall(const ExtRat& w) {
    return {Kind::Wall, w, ExtRat{}, ExtRat{}};
  }
  static ChamberLocation in_interval(const ExtRat& lo, const ExtRat& hi) {
    return {Kind::Interval, ExtRat{}, lo, hi};
  }

  bool is_upper_interval_of(const ExtRat& w) const {
    return kind == Kind::Interval && upper == w;
  }
  bool is_lower_interval_of(const ExtRat& w) const {
    return kind == Kind::Interval && lower == w;
  }
  bool operator==(const ChamberLocation& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::Wall: return wall == o.wall;
      case Kind::Interval: return lower == o.lower && upper == o.upper;
      case Kind::OutsideCone: return true;
    }
    return false;
  }
  std::string str() const;
};

/// Locates the ray -chi0/chi1. Outside the cone (chi0 > 0, chi1 < 0, or
/// n chi0 + (n+p) chi1 < 0) no semistable systems exist.
ChamberLocation classify_lomadze_character(long long chi0, long long chi1, int n, int p);

enum class VerdictKind {
  Stable,
  SemistableNotStable,
  Unstable,
  NoSemistablePoints,
  Unsupported,
};

std::string verdict_name(VerdictKind k);

struct StabilityVerdict {
  VerdictKind kind;
  std::optional<SubrepWitness<Fp>> witness;      // from the exhaustive oracle
  std::optional<ChamberLocation> chamber;        // for pencil-system verdicts
};

/// chi > 0: stable iff controllable; chi < 0: stable iff observable;
/// chi = 0: everything is semistable, stable iff controllable and
/// observable.
template <class F>
StabilityVerdict sigma_stability(const SigmaSystemT<F>& s, long long chi) {
  const bool c = sigma_controllable(s);
  const bool o = sigma_observable(s);
  if (chi > 0) return {c ? VerdictKind::Stable : VerdictKind::Unstable, {}, {}};
  if (chi < 0) return {o ? VerdictKind::Stable : VerdictKind::Unstable, {}, {}};
  return {(c && o) ? VerdictKind::Stable : VerdictKind::SemistableNotStable, {}, {}};
}

/// Upper chamber at wall 1: controllable <=> stable. Lower chamber at
/// wall 1: observable <=> stable. On the wall itself both notions combine.
/// Other walls and chambers have no decision procedure and come back
/// Unsupported.
StabilityVerdict lomadze_stability(const LomadzeSystem& s, long long chi0, long long chi1);

/// The character chamber n*r + (n-1)*s + min(p,n)*t < 0, r+s > 0, t > 0,
/// where stable = semistable = controllable.
bool helmke_chamber_ok(int n, int p, long long r, long long s, long long t);
StabilityVerdict helmke_stability(const HelmkeSystem& sys, long long r, long long s,
                                  long long t);

inline constexpr long long kOracleBudget = 1000000;

/// Exhaustive subrepresentation test over F_q. Enumerates all subspace
/// families closed under the edge maps with the two boundary patterns at
/// unmarked vertices (all zero / all full); a strict violation yields
/// Unstable, a tie on a proper family yields SemistableNotStable, both
/// with the enumeration-order-first witness.
StabilityVerdict king_exhaustive(const Representation<Fp>& rep, const Character& chi,
                                 long long budget = kOracleBudget);

}  // namespace qm
