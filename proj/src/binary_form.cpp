#include "qm/binary_form.hpp"

#include <algorithm>

namespace qm {

namespace {

// Dense univariate polynomial in t over Q, coefficient of t^i at index i.
// Trailing zeros trimmed; the zero polynomial is the empty vector.
using UniPoly = std::vector<Rat>;

UniPoly trim(UniPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

// Euclidean remainder over Q.
UniPoly rem(UniPoly a, UniPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  if (b.empty()) throw ShapeError("polynomial division by zero");
  while (deg(a) >= deg(b)) {
    const Rat f = a.back() / b.back();
    const int shift = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= f * b[i];
    a = trim(std::move(a));
  }
  return a;
}

// Exact quotient; throws if the division leaves a remainder.
UniPoly div_exact_uni(UniPoly a, UniPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  if (b.empty()) throw ShapeError("polynomial division by zero");
  UniPoly q(a.empty() ? 0 : std::max(0, deg(a) - deg(b) + 1), Rat());
  while (deg(a) >= deg(b)) {
    const Rat f = a.back() / b.back();
    const int shift = deg(a) - deg(b);
    q[shift] = f;
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= f * b[i];
    a = trim(std::move(a));
  }
  if (!a.empty()) throw ShapeError("inexact binary form division");
  return q;
}

UniPoly gcd_uni(UniPoly a, UniPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    a = rem(std::move(a), b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree_ < 0 || c_.size() != static_cast<std::size_t>(degree_) + 1)
    throw ShapeError("binary form needs degree+1 coefficients");
  canonicalize();
}

void BinaryForm::canonicalize() {
  for (const Rat& x : c_)
    if (!x.is_zero()) return;
  degree_ = 0;
  c_.assign(1, Rat());
}

BinaryForm BinaryForm::linear(const Rat& ks, const Rat& kt) {
  return BinaryForm(1, {ks, kt});
}

bool BinaryForm::is_zero() const { return degree_ == 0 && c_[0].is_zero(); }

int BinaryForm::s_multiplicity() const {
  for (int i = degree_; i >= 0; --i)
    if (!c_[i].is_zero()) return degree_ - i;
  return 0;
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
  // Powers by running products; degrees are small throughout.
  std::vector<Rat> sp(degree_ + 1, Rat(1)), tp(degree_ + 1, Rat(1));
  for (int i = 1; i <= degree_; ++i) {
    sp[i] = sp[i - 1] * s;
    tp[i] = tp[i - 1] * t;
  }
  Rat acc;
  for (int i = 0; i <= degree_; ++i) acc += c_[i] * sp[degree_ - i] * tp[i];
  return acc;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (degree_ != o.degree_)
    throw ShapeError("adding binary forms of different degrees");
  std::vector<Rat> c(c_);
  for (int i = 0; i <= degree_; ++i) c[i] += o.c_[i];
  return BinaryForm(degree_, std::move(c));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  if (is_zero() || o.is_zero()) return BinaryForm();
  std::vector<Rat> c(static_cast<std::size_t>(degree_) + o.degree_ + 1, Rat());
  for (int i = 0; i <= degree_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j <= o.degree_; ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return BinaryForm(degree_ + o.degree_, std::move(c));
}

BinaryForm BinaryForm::div_exact(const BinaryForm& o) const {
  if (o.is_zero()) throw ShapeError("division by the zero form");
  if (is_zero()) return BinaryForm();
  if (o.is_constant()) {
    std::vector<Rat> c(c_);
    for (Rat& x : c) x = x / o.c_[0];
    return BinaryForm(degree_, std::move(c));
  }
  const int d = degree_ - o.degree_;
  if (d < 0) throw ShapeError("inexact binary form division");
  // Dehomogenize at s=1 (coefficient-preserving), divide, rehomogenize.
  UniPoly q = div_exact_uni(UniPoly(c_.begin(), c_.end()), UniPoly(o.c_.begin(), o.c_.end()));
  if (deg(q) > d) throw ShapeError("inexact binary form division");
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat());
  for (int i = 0; i <= deg(q); ++i) c[i] = q[i];
  return BinaryForm(d, std::move(c));
}

BinaryForm BinaryForm::normalized() const {
  if (is_zero()) return BinaryForm();
  BigInt l = 1;
  for (const Rat& x : c_)
    if (!x.is_zero()) l = lcm(l, x.den());
  BigInt g = 0;
  for (const Rat& x : c_) g = gcd(g, BigInt(x.num() * (l / x.den())));
  Rat scale = Rat(l, g);
  for (int i = 0; i <= degree_; ++i)
    if (!c_[i].is_zero()) {
      if ((c_[i] * scale).sgn() < 0) scale = -scale;
      break;
    }
  std::vector<Rat> c(c_);
  for (Rat& x : c) x = x * scale;
  return BinaryForm(degree_, std::move(c));
}

std::string BinaryForm::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree_; ++i) {
    if (c_[i].is_zero()) continue;
    const Rat a = c_[i];
    std::string term;
    const int se = degree_ - i, te = i;
    std::string mono;
    if (se > 0) mono += "s" + (se > 1 ? "^" + std::to_string(se) : "");
    if (te > 0) mono += (mono.empty() ? "" : "*") + std::string("t") +
                        (te > 1 ? "^" + std::to_string(te) : "");
    if (mono.empty()) term = a.str();
    else if (a == Rat(1)) term = mono;
    else if (a == Rat(-1)) term = "-" + mono;
    else term = a.str() + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const int sa = a.s_multiplicity(), sb = b.s_multiplicity();
  UniPoly ua(a.degree() + 1), ub(b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) ua[i] = a.coeff(i);
  for (int i = 0; i <= b.degree(); ++i) ub[i] = b.coeff(i);
  UniPoly g = gcd_uni(std::move(ua), std::move(ub));
  const int spow = std::min(sa, sb);
  const int d = deg(g) + spow;
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat());
  for (int i = 0; i <= deg(g); ++i) c[i] = g[i];
  return BinaryForm(d, std::move(c)).normalized();
}

BinaryForm form_gcd(const std::vector<BinaryForm>& forms) {
  BinaryForm g;
  for (const BinaryForm& f : forms) {
    g = form_gcd(g, f);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

}  // namespace qm
