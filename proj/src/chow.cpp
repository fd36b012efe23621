#include "qm/chow.hpp"

#include <algorithm>
#include <functional>

#include "qm/fp.hpp"
#include "qm/matrix.hpp"

namespace qm {

IntPolynomial IntPolynomial::constant(const BigInt& c, std::size_t nvars) {
  IntPolynomial p;
  if (c != 0) p.terms[std::vector<unsigned>(nvars, 0)] = c;
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t index, std::size_t nvars, unsigned power) {
  if (index >= nvars) throw ShapeError("variable index out of range");
  IntPolynomial p;
  std::vector<unsigned> e(nvars, 0);
  e[index] = power;
  p.terms[std::move(e)] = 1;
  return p;
}

std::size_t IntPolynomial::nvars() const {
  return terms.empty() ? 0 : terms.begin()->first.size();
}

void IntPolynomial::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second == 0 ? terms.erase(it) : std::next(it);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [e, c] : o.terms) r.terms[e] += c;
  r.prune();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [e, c] : o.terms) r.terms[e] -= c;
  r.prune();
  return r;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r;
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      if (ea.size() != eb.size()) throw ShapeError("mixed variable counts");
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.terms[std::move(e)] += ca * cb;
    }
  r.prune();
  return r;
}

IntPolynomial IntPolynomial::widened(std::size_t nvars) const {
  IntPolynomial r;
  for (const auto& [e, c] : terms) {
    if (e.size() > nvars) throw ShapeError("cannot shrink a polynomial");
    std::vector<unsigned> w = e;
    w.resize(nvars, 0);
    r.terms[std::move(w)] = c;
  }
  return r;
}

long long GradedPresentation::weighted_degree(const std::vector<unsigned>& exps) const {
  if (exps.size() != vars.size()) throw ShapeError("exponent arity mismatch");
  long long d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    d += static_cast<long long>(exps[i]) * vars[i].weight;
  return d;
}

std::optional<long long> GradedPresentation::homogeneous_degree(const IntPolynomial& p) const {
  std::optional<long long> deg;
  for (const auto& [e, c] : p.terms) {
    (void)c;
    const long long d = weighted_degree(e);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<long long>(0);
}

void GradedPresentation::validate() const {
  for (const auto& v : vars)
    if (v.weight == 0) throw ShapeError("variable weights must be positive");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].name == vars[j].name) throw ShapeError("duplicate variable name");
  for (const auto& r : relations) {
    if (!r.is_zero() && r.terms.begin()->first.size() != vars.size())
      throw ShapeError("relation arity mismatch");
    const auto d = homogeneous_degree(r);
    if (!d) throw ShapeError("relations must be homogeneous");
    if (!r.is_zero() && *d == 0) throw ShapeError("nonzero constant relation");
  }
  if (top_degree < 0) throw ShapeError("negative top degree");
}

GradedPresentation presentation_point() { return {}; }

GradedPresentation presentation_projective_space(long long N) {
  if (N < 0) throw ShapeError("projective space needs N >= 0");
  GradedPresentation pres;
  pres.vars = {{"h", 1}};
  pres.relations = {IntPolynomial::variable(0, 1, static_cast<unsigned>(N + 1))};
  pres.top_degree = N;
  pres.validate();
  return pres;
}

GradedPresentation grassmann_bundle_presentation(const GradedPresentation& base,
                                                 const ChernClassVector& chern, int d, int r,
                                                 std::optional<long long> fiber_top) {
  base.validate();
  if (d < 0 || r < 0 || d > r) throw ShapeError("grassmann bundle needs 0 <= d <= r");
  if (chern.classes.size() != static_cast<std::size_t>(r) + 1)
    throw ShapeError("chern vector must have r+1 entries");
  if (!(chern.classes[0] == IntPolynomial::constant(1, base.vars.size())))
    throw ShapeError("chern class 0 must be 1");
  for (int k = 0; k <= r; ++k) {
    const auto& ck = chern.classes[k];
    if (!ck.is_zero() && ck.terms.begin()->first.size() != base.vars.size())
      throw ShapeError("chern class arity mismatch");
    const auto deg = base.homogeneous_degree(ck);
    if (!deg || (!ck.is_zero() && *deg != k))
      throw ShapeError("chern class k must be homogeneous of weight k");
  }
  if (d == 0) return base;

  GradedPresentation out;
  out.vars = base.vars;
  for (int i = 1; i <= d; ++i)
    out.vars.push_back({"X" + std::to_string(i), static_cast<unsigned>(i)});
  for (int j = 1; j <= r - d; ++j)
    out.vars.push_back({"Y" + std::to_string(j), static_cast<unsigned>(j)});
  const std::size_t nv = out.vars.size();
  const std::size_t nb = base.vars.size();

  for (const auto& rel : base.relations) out.relations.push_back(rel.widened(nv));

  // index of X_i / Y_j in the joint variable list; X_0 = Y_0 = 1.
  const auto xvar = [&](int i) { return nb + static_cast<std::size_t>(i) - 1; };
  const auto yvar = [&](int j) { return nb + static_cast<std::size_t>(d) + j - 1; };

  for (int k = 1; k <= r; ++k) {
    IntPolynomial rel;
    for (int i = std::max(0, k - (r - d)); i <= std::min(k, d); ++i) {
      const int j = k - i;
      IntPolynomial term = IntPolynomial::constant(1, nv);
      if (i > 0) term = term * IntPolynomial::variable(xvar(i), nv);
      if (j > 0) term = term * IntPolynomial::variable(yvar(j), nv);
      rel = rel + term;
    }
    rel = rel - chern.classes[k].widened(nv);
    out.relations.push_back(std::move(rel));
  }
  out.top_degree = base.top_degree +
                   (fiber_top ? *fiber_top : static_cast<long long>(d) * (r - d));
  out.validate();
  return out;
}

GradedPresentation presentation_H_single_input(int n, int p) {
  if (n < 1 || p < 0) throw ShapeError("single-input presentation needs n >= 1, p >= 0");
  GradedPresentation base = presentation_projective_space(n);
  const int r = n + 1 + p;
  ChernClassVector chern;
  chern.classes.reserve(r + 1);
  for (int k = 0; k <= r; ++k) {
    if (k > n) {
      chern.classes.push_back(IntPolynomial());
      continue;
    }
    IntPolynomial c = IntPolynomial::constant(binomial(n, k), 1);
    if (k > 0) c = c * IntPolynomial::variable(0, 1, static_cast<unsigned>(k));
    chern.classes.push_back(std::move(c));
  }
  return grassmann_bundle_presentation(base, chern, p, r);
}

GradedPresentation presentation_L_single_input(int n, int p) {
  if (n < 1 || p < 0) throw ShapeError("single-input presentation needs n >= 1, p >= 0");
  return presentation_projective_space(static_cast<long long>(p + 1) * (n + 1) - 1);
}

namespace {

// Sparse Gaussian elimination: rows are sorted (column, coefficient)
// lists; stored pivot rows are normalized. Works over any field.
template <class K>
class SparseEliminator {
 public:
  explicit SparseEliminator(int cols) : pivot_of_(cols, -1) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  void add_row(std::vector<std::pair<int, K>> row) {
    while (!row.empty()) {
      const int lead = row.front().first;
      const int p = pivot_of_[lead];
      if (p < 0) {
        const K inv_led = row.front().second.one().div_exact(row.front().second);
        for (auto& [c, v] : row) v = v * inv_led;
        pivot_of_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      row = axpy(row, rows_[p], row.front().second);
    }
  }

 private:
  // row - f * pivot, merging sorted supports.
  static std::vector<std::pair<int, K>> axpy(const std::vector<std::pair<int, K>>& row,
                                             const std::vector<std::pair<int, K>>& pivot,
                                             const K& f) {
    std::vector<std::pair<int, K>> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.push_back({pivot[j].first, -(f * pivot[j].second)});
        ++j;
      } else {
        const K v = row[i].second - f * pivot[j].second;
        if (!v.is_zero()) out.push_back({row[i].first, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<int> pivot_of_;
  std::vector<std::vector<std::pair<int, K>>> rows_;
};

// Monomials of the given weighted degree, in a deterministic graded
// reverse-lexicographic order.
void collect_monomials(const GradedPresentation& pres, std::size_t var, long long remaining,
                       std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out,
                       std::size_t budget) {
  if (var == pres.vars.size()) {
    if (remaining == 0) {
      if (out.size() >= budget) throw BudgetError("monomial budget exceeded");
      out.push_back(cur);
    }
    return;
  }
  const long long w = pres.vars[var].weight;
  for (long long e = 0; e * w <= remaining; ++e) {
    cur[var] = static_cast<unsigned>(e);
    collect_monomials(pres, var + 1, remaining - e * w, cur, out, budget);
  }
  cur[var] = 0;
}

std::vector<std::vector<unsigned>> monomials_of_degree(const GradedPresentation& pres,
                                                       long long degree, std::size_t budget) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(pres.vars.size(), 0);
  collect_monomials(pres, 0, degree, cur, out, budget);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    // grevlex within fixed weighted degree: compare last differing slot.
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  });
  return out;
}

}  // namespace

namespace {

// Graded piece dimension at one degree: monomial count minus the rank of
// the Macaulay matrix, over K (exact over Rat; over a prime field the
// piece can only grow, so a zero piece mod p certifies a zero piece
// over Q).
template <class K>
long long graded_piece(const GradedPresentation& pres,
                       const std::vector<long long>& rel_deg, long long d,
                       std::size_t monomial_budget, const std::function<K(const BigInt&)>& lift) {
  const auto mons = monomials_of_degree(pres, d, monomial_budget);
  std::map<std::vector<unsigned>, int> col;
  for (std::size_t j = 0; j < mons.size(); ++j) col[mons[j]] = static_cast<int>(j);

  SparseEliminator<K> elim(static_cast<int>(mons.size()));
  for (std::size_t ri = 0; ri < pres.relations.size(); ++ri) {
    if (pres.relations[ri].is_zero() || rel_deg[ri] > d) continue;
    for (const auto& shift : monomials_of_degree(pres, d - rel_deg[ri], monomial_budget)) {
      std::vector<std::pair<int, K>> row;
      for (const auto& [e, c] : pres.relations[ri].terms) {
        std::vector<unsigned> prod(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + shift[i];
        const K v = lift(c);
        if (!v.is_zero()) row.push_back({col.at(prod), v});
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      elim.add_row(std::move(row));
    }
  }
  return static_cast<long long>(mons.size()) - elim.rank();
}

}  // namespace

RankReport additive_rank(const GradedPresentation& pres, std::size_t monomial_budget) {
  pres.validate();
  unsigned max_weight = 1;
  for (const auto& v : pres.vars) max_weight = std::max(max_weight, v.weight);

  std::vector<long long> rel_deg(pres.relations.size(), 0);
  for (std::size_t i = 0; i < pres.relations.size(); ++i)
    rel_deg[i] = *pres.homogeneous_degree(pres.relations[i]);

  const std::function<Rat(const BigInt&)> lift_q = [](const BigInt& c) { return Rat(c); };
  // Fixed 31-bit prime for the fast certificate at degrees above the top.
  constexpr std::uint32_t kCertPrime = 2147483629u;
  const std::function<Fp(const BigInt&)> lift_p = [](const BigInt& c) {
    return Fp(static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), kCertPrime)), kCertPrime);
  };

  RankReport report;
  report.per_degree.reserve(pres.top_degree + 1);
  for (long long d = 0; d <= pres.top_degree; ++d) {
    const long long piece = graded_piece<Rat>(pres, rel_deg, d, monomial_budget, lift_q);
    report.per_degree.push_back(piece);
    report.total += piece;
  }
  // Vanishing in max_weight consecutive degrees above the top forces
  // vanishing everywhere above, since every deeper monomial has a
  // divisor landing in that window. A zero piece modulo a prime already
  // certifies a zero piece over Q; only a nonzero residue needs the
  // exact rerun.
  for (long long d = pres.top_degree + 1; d <= pres.top_degree + max_weight; ++d) {
    if (graded_piece<Fp>(pres, rel_deg, d, monomial_budget, lift_p) == 0) continue;
    if (graded_piece<Rat>(pres, rel_deg, d, monomial_budget, lift_q) != 0)
      throw PresentationError("nonzero graded piece above the declared top degree");
  }
  return report;
}

BigInt rank_L_formula(int n, int m, int p) {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("rank formula needs n >= 1, m, p >= 0");
  return binomial(m + p, p) * binomial(n + 2 * m - 1, n);
}

BigInt rank_H_formula(int n, int m, int p) {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("rank formula needs n >= 1, m, p >= 0");
  return binomial(n + p + m, p) * binomial(n + 2 * m - 1, n);
}

NonIsoCertificate not_isomorphic(int n, int m, int p) {
  NonIsoCertificate cert{p > 0, rank_L_formula(n, m, p), rank_H_formula(n, m, p)};
  return cert;
}

long long quot_dimension(int q, int r, int d) {
  if (r < 0 || d < 0 || q < 1) throw ShapeError("quot dimension needs q >= 1, r, d >= 0");
  if (r >= q) throw ShapeError("quot dimension needs r < q");
  return static_cast<long long>(q) * (r + d) - static_cast<long long>(r) * r;
}

std::string poly_to_string(const IntPolynomial& p,
                           const std::vector<GradedPresentation::Var>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms) {
    if (e.size() != vars.size()) throw ShapeError("polynomial arity mismatch");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i].name;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    const BigInt a = c < 0 ? BigInt(-c) : c;
    if (mono.empty()) term = a.get_str();
    else if (a == 1) term = mono;
    else term = a.get_str() + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t i = 0;
  const std::vector<GradedPresentation::Var>& vars;

  void skip_ws() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  BigInt parse_int() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (start == i) throw ParseError("expected integer in polynomial: " + s);
    return BigInt(s.substr(start, i - start));
  }
  std::optional<std::size_t> parse_var() {
    skip_ws();
    std::size_t best = vars.size();
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const auto& name = vars[v].name;
      if (name.size() > best_len && s.compare(i, name.size(), name) == 0) {
        best = v;
        best_len = name.size();
      }
    }
    if (best == vars.size()) return std::nullopt;
    i += best_len;
    return best;
  }
  // term := [int] ('*'? factor)* ; factor := var ['^' int]
  IntPolynomial parse_term() {
    IntPolynomial acc = IntPolynomial::constant(1, vars.size());
    bool saw_factor = false;
    skip_ws();
    if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      acc = IntPolynomial::constant(parse_int(), vars.size());
      saw_factor = true;
    }
    while (true) {
      const std::size_t save = i;
      const bool star = eat('*');
      auto v = parse_var();
      if (!v) {
        if (star) throw ParseError("dangling '*' in polynomial: " + s);
        i = save;
        break;
      }
      unsigned pow = 1;
      if (eat('^')) pow = static_cast<unsigned>(parse_int().get_ui());
      acc = acc * IntPolynomial::variable(*v, vars.size(), pow);
      saw_factor = true;
    }
    if (!saw_factor) throw ParseError("empty term in polynomial: " + s);
    return acc;
  }
  IntPolynomial parse() {
    IntPolynomial acc;
    bool negate = eat('-');
    if (!negate) eat('+');
    while (true) {
      IntPolynomial t = parse_term();
      acc = negate ? acc - t : acc + t;
      skip_ws();
      if (i >= s.size()) break;
      if (eat('+')) negate = false;
      else if (eat('-')) negate = true;
      else throw ParseError("unexpected character in polynomial: " + s);
    }
    return acc;
  }
};

}  // namespace

IntPolynomial poly_parse(const std::string& text,
                         const std::vector<GradedPresentation::Var>& vars) {
  if (text == "0") return IntPolynomial();
  PolyParser parser{text, 0, vars};
  return parser.parse();
}

}  // namespace qm
