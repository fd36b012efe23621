#include "qm/stability.hpp"

#include <algorithm>

namespace qm {

bool LambdaSet::contains(const ExtRat& x) const {
  return std::binary_search(values.begin(), values.end(), x);
}

LambdaSet lambda_set(int n, int p) {
  if (n < 1) throw ShapeError("lambda set needs n >= 1");
  if (p < 0) throw ShapeError("lambda set needs p >= 0");
  std::vector<ExtRat> vals;
  for (int u = 0; u <= n; ++u)
    for (int v = 0; v <= n + p; ++v) {
      if (u == 0 && v == 0) continue;
      vals.push_back(u == 0 ? ExtRat::infinity() : ExtRat::of(Rat(v, u)));
    }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return {n, p, std::move(vals)};
}

std::string ChamberLocation::str() const {
  switch (kind) {
    case Kind::Wall: return "wall " + wall.str();
    case Kind::Interval: return "(" + lower.str() + ", " + upper.str() + ")";
    case Kind::OutsideCone: return "outside cone";
  }
  return "";
}

ChamberLocation classify_lomadze_character(long long chi0, long long chi1, int n, int p) {
  if (n < 1 || p < 0) throw ShapeError("character classification needs n >= 1, p >= 0");
  if (chi0 == 0 && chi1 == 0) throw ShapeError("zero character");
  if (chi0 > 0 || chi1 < 0 ||
      static_cast<long long>(n) * chi0 + static_cast<long long>(n + p) * chi1 < 0)
    return ChamberLocation::outside();

  const ExtRat x = chi1 == 0 ? ExtRat::infinity()
                             : ExtRat::of(Rat(bigint_of(-chi0), bigint_of(chi1)));
  const LambdaSet lam = lambda_set(n, p);
  if (lam.contains(x)) return ChamberLocation::at_wall(x);
  auto hi = std::upper_bound(lam.values.begin(), lam.values.end(), x);
  // 0 and infinity are walls, so x always has neighbors on both sides.
  return ChamberLocation::in_interval(*std::prev(hi), *hi);
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Stable: return "stable";
    case VerdictKind::SemistableNotStable: return "semistable_not_stable";
    case VerdictKind::Unstable: return "unstable";
    case VerdictKind::NoSemistablePoints: return "no_semistable_points";
    case VerdictKind::Unsupported: return "unsupported";
  }
  return "";
}

StabilityVerdict lomadze_stability(const LomadzeSystem& s, long long chi0, long long chi1) {
  s.validate();
  const ChamberLocation loc = classify_lomadze_character(chi0, chi1, s.n, s.p);
  if (loc.kind == ChamberLocation::Kind::OutsideCone)
    return {VerdictKind::NoSemistablePoints, {}, loc};

  const ExtRat one = ExtRat::of(Rat(1));
  if (loc.is_upper_interval_of(one)) {
    const bool c = lomadze_controllable(s);
    return {c ? VerdictKind::Stable : VerdictKind::Unstable, {}, loc};
  }
  if (loc.is_lower_interval_of(one)) {
    const bool o = lomadze_observable(s);
    return {o ? VerdictKind::Stable : VerdictKind::Unstable, {}, loc};
  }
  if (loc.kind == ChamberLocation::Kind::Wall && loc.wall == one) {
    const bool c = lomadze_controllable(s);
    const bool o = lomadze_observable(s);
    if (c && o) return {VerdictKind::Stable, {}, loc};
    if (c || o) return {VerdictKind::SemistableNotStable, {}, loc};
    // Neither flag decides the wall: semistable systems exist with both
    // false (the embedded zero system), so no verdict is available here.
    return {VerdictKind::Unsupported, {}, loc};
  }
  return {VerdictKind::Unsupported, {}, loc};
}

bool helmke_chamber_ok(int n, int p, long long r, long long s, long long t) {
  if (n < 1 || p < 0) throw ShapeError("helmke chamber needs n >= 1, p >= 0");
  const long long mn = std::min<long long>(p, n);
  return static_cast<long long>(n) * r + static_cast<long long>(n - 1) * s + mn * t < 0 &&
         r + s > 0 && t > 0;
}

StabilityVerdict helmke_stability(const HelmkeSystem& sys, long long r, long long s,
                                  long long t) {
  sys.validate();
  if (!helmke_chamber_ok(sys.n, sys.p, r, s, t))
    return {VerdictKind::Unsupported, {}, {}};
  const bool c = helmke_controllable(sys);
  return {c ? VerdictKind::Stable : VerdictKind::Unstable, {}, {}};
}

namespace {

bool is_proper(const SubrepWitness<Fp>& w, const MarkedQuiver& mq) {
  bool some_positive = false, some_proper = false;
  for (int v = 0; v < mq.quiver.vertices; ++v) {
    if (w.subspaces[v].dim() > 0) some_positive = true;
    if (w.subspaces[v].dim() < mq.dims[v]) some_proper = true;
  }
  return some_positive && some_proper;
}

}  // namespace

StabilityVerdict king_exhaustive(const Representation<Fp>& rep, const Character& chi,
                                 long long budget) {
  rep.validate();
  const MarkedQuiver& mq = rep.mq;
  if (chi.weights.size() != mq.marked.size())
    throw ShapeError("character arity does not match marked set");

  std::uint32_t q = 0;
  for (const auto& m : rep.maps) {
    const std::uint32_t mq_mod = m.zero().modulus();
    if (q != 0 && mq_mod != q) throw ShapeError("mixed field moduli across edge maps");
    q = mq_mod;
  }
  if (q == 0) {
    // No edges carry a modulus; the representation is degenerate for the
    // oracle's purposes.
    throw ShapeError("representation without edge maps has no modulus");
  }

  std::vector<std::vector<Subspace<Fp>>> lattice;
  long long combos = 1;
  for (int v : mq.marked) {
    lattice.push_back(enumerate_subspaces(mq.dims[v], q));
    combos *= static_cast<long long>(lattice.back().size());
    if (combos > budget) throw BudgetError("oracle enumeration budget exceeded");
  }

  const long long full_pairing = pairing_full(chi, mq);
  std::optional<SubrepWitness<Fp>> tie;

  // Pattern order: unmarked all zero, then unmarked all full; within a
  // pattern the marked subspaces run in odometer order over the canonical
  // subspace lists. The first strict violator decides Unstable.
  for (int pattern = 0; pattern < 2; ++pattern) {
    const bool full_at_unmarked = pattern == 1;
    const long long bound = full_at_unmarked ? full_pairing : 0;
    std::vector<std::size_t> idx(mq.marked.size(), 0);
    while (true) {
      SubrepWitness<Fp> w;
      w.subspaces.reserve(mq.quiver.vertices);
      for (int v = 0; v < mq.quiver.vertices; ++v) {
        const int mi = mq.marked_index(v);
        if (mi >= 0) w.subspaces.push_back(lattice[mi][idx[mi]]);
        else if (full_at_unmarked)
          w.subspaces.push_back(Subspace<Fp>::full(mq.dims[v], Fp::zero(q)));
        else
          w.subspaces.push_back(Subspace<Fp>::zero(mq.dims[v], Fp::zero(q)));
      }
      if (subrep_is_valid(rep, w)) {
        const long long val = pairing(chi, w, mq);
        if (val < bound) return {VerdictKind::Unstable, std::move(w), {}};
        if (val == bound && !tie && is_proper(w, mq)) tie = w;
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == lattice[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }

  if (tie) return {VerdictKind::SemistableNotStable, std::move(tie), {}};
  return {VerdictKind::Stable, {}, {}};
}

}  // namespace qm
