#include "quivercount/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "quivercount/errors.hpp"

namespace quivercount {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0) throw InputError("malformed rational literal '" + text + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

int mobius(unsigned long k) {
  if (k == 0) throw InputError("mobius requires k >= 1");
  int sign = 1;
  for (unsigned long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

// ---------------------------------------------------------------- PolyQ

PolyQ::PolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::variable() { return monomial(1, 1); }

void PolyQ::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational PolyQ::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool PolyQ::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

bool PolyQ::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

PolyQ& PolyQ::operator+=(const PolyQ& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::string PolyQ::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------- BinomialPolyG

BinomialPolyG::BinomialPolyG(std::map<unsigned, Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

void BinomialPolyG::normalize() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Rational BinomialPolyG::coefficient(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int BinomialPolyG::degree() const {
  return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
}

bool BinomialPolyG::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return is_integer(kv.second); });
}

Rational binomial_at(const Rational& g, unsigned k) {
  Rational num = 1;
  for (unsigned i = 0; i < k; ++i) num *= g - i;
  return num / Rational(factorial(k));
}

Rational BinomialPolyG::operator()(const Rational& g) const {
  Rational acc = 0;
  for (const auto& [k, c] : coeffs_) acc += c * binomial_at(g, k);
  return acc;
}

BinomialPolyG& BinomialPolyG::operator+=(const BinomialPolyG& other) {
  for (const auto& [k, c] : other.coeffs_) coeffs_[k] += c;
  normalize();
  return *this;
}

BinomialPolyG& BinomialPolyG::operator-=(const BinomialPolyG& other) {
  for (const auto& [k, c] : other.coeffs_) coeffs_[k] -= c;
  normalize();
  return *this;
}

BinomialPolyG& BinomialPolyG::operator*=(const Rational& c) {
  for (auto& kv : coeffs_) kv.second *= c;
  normalize();
  return *this;
}

std::string BinomialPolyG::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "C(g," << k << ")";
  }
  return os.str();
}

PolyQ binomial_to_monomial(const BinomialPolyG& p) {
  PolyQ out;
  for (const auto& [k, c] : p.coefficients()) {
    PolyQ falling = PolyQ::constant(1);
    for (unsigned i = 0; i < k; ++i) falling *= PolyQ({Rational(-static_cast<long>(i)), Rational(1)});
    out += falling * (c / Rational(factorial(k)));
  }
  return out;
}

BinomialPolyG monomial_to_binomial(const PolyQ& p) {
  if (p.is_zero()) return {};
  const auto n = static_cast<unsigned>(p.degree());
  std::vector<Rational> diffs;
  diffs.reserve(n + 1);
  for (unsigned g = 0; g <= n; ++g) diffs.push_back(p(Rational(g)));
  std::map<unsigned, Rational> coeffs;
  // c_k = (Delta^k p)(0)
  for (unsigned k = 0; k <= n; ++k) {
    coeffs[k] = diffs[0];
    for (unsigned i = 0; i + 1 < diffs.size() - k; ++i) diffs[i] = diffs[i + 1] - diffs[i];
  }
  return BinomialPolyG(std::move(coeffs));
}

// ---------------------------------------------------------------- interpolation

InterpolationTable::InterpolationTable(std::vector<std::pair<Rational, Rational>> points) {
  for (auto& [x, y] : points) add(x, y);
}

void InterpolationTable::add(const Rational& x, const Rational& y) {
  for (const auto& p : points_) {
    if (p.first == x) throw InputError("duplicate abscissa " + x.get_str() + " in interpolation table");
  }
  points_.emplace_back(x, y);
}

PolyQ lagrange_interpolate(const InterpolationTable& table) {
  const auto& pts = table.points();
  if (pts.empty()) throw InputError("interpolation needs at least one point");
  const std::size_t n = pts.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - level].first);
    }
  }
  // Horner on the Newton form.
  std::vector<Rational> acc{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * pts[i].first;
    }
    next[0] += dd[i];
    acc = std::move(next);
  }
  return PolyQ(std::move(acc));
}

}  // namespace quivercount
