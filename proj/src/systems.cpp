#include "qm/systems.hpp"

namespace qm {

void LomadzeSystem::validate() const {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("lomadze system needs n >= 1, m, p >= 0");
  if (K.rows() != n + p || K.cols() != n || L.rows() != n + p || L.cols() != n ||
      M.rows() != n + p || M.cols() != p + m)
    throw ShapeError("lomadze system matrix shapes inconsistent");
}

void HelmkeSystem::validate() const {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("helmke system needs n >= 1, m, p >= 0");
  if (E.rows() != n || E.cols() != n || A.rows() != n || A.cols() != n ||
      B.rows() != n || B.cols() != m || C.rows() != p || C.cols() != n ||
      D.rows() != p || D.cols() != m || F.rows() != p || F.cols() != p)
    throw ShapeError("helmke system matrix shapes inconsistent");
}

GroupElement::GroupElement(std::vector<Matrix<Rat>> blocks) : blocks_(std::move(blocks)) {
  inverses_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (b.rows() != b.cols()) throw ShapeError("group blocks must be square");
    try {
      inverses_.push_back(inverse(b));
    } catch (const ShapeError&) {
      throw ShapeError("group block is not invertible");
    }
  }
}

GroupElement GroupElement::identity(const std::vector<int>& sizes) {
  std::vector<Matrix<Rat>> blocks;
  blocks.reserve(sizes.size());
  for (int s : sizes) blocks.push_back(Matrix<Rat>::identity(s, Rat()));
  return GroupElement(std::move(blocks));
}

bool lomadze_controllable(const LomadzeSystem& s) {
  s.validate();
  if (pencil_generic_rank(s.K, s.L) != s.n) return false;
  if (pencil_generic_rank(s.K, s.L, s.M) != s.n + s.p) return false;
  return pencil_minors_gcd(s.K, s.L, s.M, s.n + s.p).degree() == 0;
}

bool lomadze_observable(const LomadzeSystem& s) {
  s.validate();
  if (pencil_generic_rank(s.K, s.L) != s.n) return false;
  if (pencil_minors_gcd(s.K, s.L, std::nullopt, s.n).degree() != 0) return false;
  return pencil_generic_rank(s.K, s.L, s.M) == s.n + s.p;
}

bool lomadze_regular(const LomadzeSystem& s) {
  s.validate();
  std::vector<int> rows(s.n + s.p), first_p(s.p);
  for (int i = 0; i < s.n + s.p; ++i) rows[i] = i;
  for (int j = 0; j < s.p; ++j) first_p[j] = j;
  return rank_bareiss(hcat(s.K, s.M.submatrix(rows, first_p))) == s.n + s.p;
}

bool helmke_controllable(const HelmkeSystem& s) {
  s.validate();
  if (pencil_det(s.E, s.A).is_zero()) return false;
  if (pencil_minors_gcd(s.E, s.A, s.B, s.n).degree() != 0) return false;
  return rank_bareiss(hcat(hcat(s.F, s.C), s.D)) == s.p;
}

LomadzeSystem embed_sigma_lomadze(const SigmaSystem& s) {
  s.validate();
  const Rat z;
  Matrix<Rat> k = vcat(Matrix<Rat>::identity(s.n, z), Matrix<Rat>(s.p, s.n, z));
  Matrix<Rat> l = vcat(s.A, s.C);
  Matrix<Rat> m = vcat(hcat(Matrix<Rat>(s.n, s.p, z), s.B),
                       hcat(Matrix<Rat>::identity(s.p, z), s.D));
  LomadzeSystem out{s.n, s.m, s.p, std::move(k), std::move(l), std::move(m)};
  out.validate();
  return out;
}

HelmkeSystem embed_sigma_helmke(const SigmaSystem& s) {
  s.validate();
  const Rat z;
  HelmkeSystem out{s.n,
                   s.m,
                   s.p,
                   Matrix<Rat>::identity(s.n, z),
                   s.A,
                   s.B,
                   s.C,
                   s.D,
                   Matrix<Rat>::identity(s.p, z)};
  out.validate();
  return out;
}

GroupElement lomadze_group_of_sigma(const Matrix<Rat>& g0, int p) {
  const int n = g0.rows();
  Matrix<Rat> g1(n + p, n + p, Rat());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g1.at(i, j) = g0.at(i, j);
  for (int i = 0; i < p; ++i) g1.at(n + i, n + i) = Rat(1);
  return GroupElement({g0, std::move(g1)});
}

GroupElement helmke_group_of_sigma(const Matrix<Rat>& g0, int p) {
  return GroupElement({g0, g0, Matrix<Rat>::identity(p, Rat())});
}

SigmaSystem act_sigma(const GroupElement& g, const SigmaSystem& s) {
  s.validate();
  if (g.size() != 1 || g.block(0).rows() != s.n)
    throw ShapeError("sigma action needs one n x n block");
  return {s.n, s.m, s.p, g.block(0) * s.A * g.inv(0), g.block(0) * s.B,
          s.C * g.inv(0), s.D};
}

LomadzeSystem act_lomadze(const GroupElement& g, const LomadzeSystem& s) {
  s.validate();
  if (g.size() != 2 || g.block(0).rows() != s.n || g.block(1).rows() != s.n + s.p)
    throw ShapeError("lomadze action needs blocks of sizes n and n+p");
  return {s.n, s.m, s.p, g.block(1) * s.K * g.inv(0), g.block(1) * s.L * g.inv(0),
          g.block(1) * s.M};
}

HelmkeSystem act_helmke(const GroupElement& g, const HelmkeSystem& s) {
  s.validate();
  if (g.size() != 3 || g.block(0).rows() != s.n || g.block(1).rows() != s.n ||
      g.block(2).rows() != s.p)
    throw ShapeError("helmke action needs blocks of sizes n, n, p");
  return {s.n,
          s.m,
          s.p,
          g.block(1) * s.E * g.inv(0),
          g.block(1) * s.A * g.inv(0),
          g.block(1) * s.B,
          g.block(2) * s.C * g.inv(0),
          g.block(2) * s.D,
          g.block(2) * s.F};
}

LomadzeSystem transform_T(const Matrix<Rat>& omega, const Matrix<Rat>& h,
                          const LomadzeSystem& s) {
  s.validate();
  if (omega.rows() != 2 || omega.cols() != 2) throw ShapeError("omega must be 2 x 2");
  if (h.rows() != s.p + s.m || h.cols() != s.p + s.m)
    throw ShapeError("h must be (p+m) x (p+m)");
  if (det_bareiss(omega).is_zero()) throw ShapeError("omega is singular");
  if (rank_bareiss(h) != h.rows()) throw ShapeError("h is singular");
  return {s.n,
          s.m,
          s.p,
          s.K.scaled(omega.at(0, 0)) + s.L.scaled(omega.at(0, 1)),
          s.K.scaled(omega.at(1, 0)) + s.L.scaled(omega.at(1, 1)),
          s.M * h};
}

namespace {

// (1,0), (0,1), (1,1), (1,-1), then for h = 2, 3, ...: (a, +-h), (h, +-a)
// over a < h coprime to h.
std::vector<std::pair<long, long>> coprime_points(int count) {
  std::vector<std::pair<long, long>> pts = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (long h = 2; static_cast<int>(pts.size()) < count; ++h)
    for (long a = 1; a < h && static_cast<int>(pts.size()) < count; ++a) {
      long x = a, y = h;
      while (y) { long t = x % y; x = y; y = t; }
      if (x != 1) continue;
      pts.push_back({a, h});
      pts.push_back({a, -h});
      pts.push_back({h, a});
      pts.push_back({h, -a});
    }
  pts.resize(count);
  return pts;
}

}  // namespace

std::optional<RegularizeResult> regularize(const LomadzeSystem& s) {
  s.validate();
  const Rat z;
  if (lomadze_regular(s))
    return RegularizeResult{Matrix<Rat>::identity(2, z),
                            Matrix<Rat>::identity(s.p + s.m, z)};

  // Bad points are roots of two fixed nonzero minors, at most 2n+p of
  // them, so this sample count always suffices when a good point exists.
  for (auto [s0, t0] : coprime_points(4 * (s.n + s.p) + 4)) {
    Matrix<Rat> pencil = s.K.scaled(Rat(s0)) + s.L.scaled(Rat(t0));
    if (rank_bareiss(pencil) != s.n) continue;
    if (rank_bareiss(hcat(pencil, s.M)) != s.n + s.p) continue;

    Matrix<Rat> omega(2, 2, z);
    omega.at(0, 0) = Rat(s0);
    omega.at(0, 1) = Rat(t0);
    if (s0 != 0) omega.at(1, 1) = Rat(1);
    else omega.at(1, 0) = Rat(1);

    // Greedy: p columns of M completing the pencil columns to full rank.
    std::vector<int> selected;
    Matrix<Rat> acc = pencil;
    for (int j = 0; j < s.p + s.m && static_cast<int>(selected.size()) < s.p; ++j) {
      Matrix<Rat> cand = hcat(acc, s.M.col(j));
      if (rank_bareiss(cand) > rank_bareiss(acc)) {
        selected.push_back(j);
        acc = std::move(cand);
      }
    }
    std::vector<bool> used(s.p + s.m, false);
    for (int j : selected) used[j] = true;
    std::vector<int> order = selected;
    for (int j = 0; j < s.p + s.m; ++j)
      if (!used[j]) order.push_back(j);
    Matrix<Rat> h(s.p + s.m, s.p + s.m, z);
    for (int jn = 0; jn < s.p + s.m; ++jn) h.at(order[jn], jn) = Rat(1);
    return RegularizeResult{std::move(omega), std::move(h)};
  }
  return std::nullopt;
}

namespace {

using SparseRow = std::vector<std::pair<int, Rat>>;

int kernel_dim_of(const std::vector<SparseRow>& rows, int vars) {
  Matrix<Rat> m(static_cast<int>(rows.size()), vars, Rat());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) m.at(static_cast<int>(i), j) += v;
  return vars - rank_bareiss(m);
}

}  // namespace

int stabilizer_lie_dimension(const LomadzeSystem& s) {
  s.validate();
  const int n = s.n, np = s.n + s.p, pm = s.p + s.m;
  const int vars = n * n + np * np;
  const auto x0 = [&](int b, int c) { return b * n + c; };
  const auto x1 = [&](int a, int c) { return n * n + a * np + c; };

  std::vector<SparseRow> rows;
  // x1 * G - G * x0 = 0 for G in {K, L}.
  for (const Matrix<Rat>* G : {&s.K, &s.L})
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < n; ++j) {
        SparseRow row;
        for (int a = 0; a < np; ++a)
          if (!G->at(a, j).is_zero()) row.push_back({x1(i, a), G->at(a, j)});
        for (int b = 0; b < n; ++b)
          if (!G->at(i, b).is_zero()) row.push_back({x0(b, j), -G->at(i, b)});
        rows.push_back(std::move(row));
      }
  // x1 * M = 0.
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < pm; ++j) {
      SparseRow row;
      for (int a = 0; a < np; ++a)
        if (!s.M.at(a, j).is_zero()) row.push_back({x1(i, a), s.M.at(a, j)});
      rows.push_back(std::move(row));
    }

  return kernel_dim_of(rows, vars);
}

int stabilizer_lie_dimension(const HelmkeSystem& s) {
  s.validate();
  const int n = s.n, p = s.p, m = s.m;
  const int vars = 2 * n * n + p * p;
  const auto x0 = [&](int b, int c) { return b * n + c; };
  const auto x1 = [&](int a, int c) { return n * n + a * n + c; };
  const auto x2 = [&](int a, int c) { return 2 * n * n + a * p + c; };

  std::vector<SparseRow> rows;
  // x1 * G - G * x0 = 0 for G in {E, A}.
  for (const Matrix<Rat>* G : {&s.E, &s.A})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        SparseRow row;
        for (int a = 0; a < n; ++a)
          if (!G->at(a, j).is_zero()) row.push_back({x1(i, a), G->at(a, j)});
        for (int b = 0; b < n; ++b)
          if (!G->at(i, b).is_zero()) row.push_back({x0(b, j), -G->at(i, b)});
        rows.push_back(std::move(row));
      }
  // x1 * B = 0.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      SparseRow row;
      for (int a = 0; a < n; ++a)
        if (!s.B.at(a, j).is_zero()) row.push_back({x1(i, a), s.B.at(a, j)});
      rows.push_back(std::move(row));
    }
  // x2 * C - C * x0 = 0.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < n; ++j) {
      SparseRow row;
      for (int a = 0; a < p; ++a)
        if (!s.C.at(a, j).is_zero()) row.push_back({x2(i, a), s.C.at(a, j)});
      for (int b = 0; b < n; ++b)
        if (!s.C.at(i, b).is_zero()) row.push_back({x0(b, j), -s.C.at(i, b)});
      rows.push_back(std::move(row));
    }
  // x2 * D = 0 and x2 * F = 0.
  for (const Matrix<Rat>* G : {&s.D, &s.F})
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < G->cols(); ++j) {
        SparseRow row;
        for (int a = 0; a < p; ++a)
          if (!G->at(a, j).is_zero()) row.push_back({x2(i, a), G->at(a, j)});
        rows.push_back(std::move(row));
      }

  return kernel_dim_of(rows, vars);
}

LomadzeSystem forget_output(const HelmkeSystem& s) {
  s.validate();
  LomadzeSystem out{s.n, s.m, 0, s.E, s.A, s.B};
  out.validate();
  return out;
}

long long moduli_dimension(int n, int m, int p) {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("moduli dimension needs n >= 1, m, p >= 0");
  return static_cast<long long>(n) * (m + p) + static_cast<long long>(p) * m;
}

}  // namespace qm
