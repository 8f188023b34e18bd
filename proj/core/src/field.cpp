#include "quivercount/field.hpp"

#include "quivercount/errors.hpp"

namespace quivercount {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t x, std::uint32_t p, std::uint32_t r) {
  Digits d(r, 0);
  for (std::uint32_t i = 0; i < r; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// Product of two residues modulo the monic modulus over F_p.
Digits mul_mod(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  const std::size_t r = modulus.size() - 1;
  Digits prod(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > r;) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= r; ++i) {
      prod[k - r + i] = (prod[k - r + i] + (p - c) * modulus[i]) % p;
    }
  }
  prod.resize(r);
  return prod;
}

// Monic polynomial over F_p is irreducible iff it has no monic factor of degree <= deg/2.
bool is_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return n == 1;
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Digits g = to_digits(c, p, static_cast<std::uint32_t>(deg));
      g.push_back(1);
      Digits rem = f;
      for (std::size_t k = rem.size(); k-- > deg;) {
        const std::uint32_t lead = rem[k];
        if (lead == 0) continue;
        for (std::size_t i = 0; i <= deg; ++i) rem[k - deg + i] = (rem[k - deg + i] + (p - lead) * g[i]) % p;
      }
      bool divides = true;
      for (std::size_t i = 0; i < deg; ++i) divides = divides && rem[i] == 0;
      if (divides) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string FieldSpec::name() const {
  if (is_rational()) return "QQ";
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < degree(); ++i) q *= characteristic;
  return "GF(" + std::to_string(q) + ")";
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  if (q < 2 || q > 256) throw InputError("finite field order must be in [2, 256]");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t r = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw InputError(std::to_string(q) + " is not a prime power");
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) count *= p;
  for (std::uint32_t c = 0; c < count; ++c) {
    Digits f = to_digits(c, p, r);
    f.push_back(1);
    if (is_irreducible(f, p)) return FiniteField(p, f);
  }
  throw ConsistencyError("no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw InputError("modulus must be monic of degree >= 1");
  for (auto c : modulus_) {
    if (c >= p) throw InputError("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus_, p)) throw InputError("modulus is reducible");
  const auto r = static_cast<std::uint32_t>(modulus_.size() - 1);
  q_ = 1;
  for (std::uint32_t i = 0; i < r; ++i) q_ *= p;
  if (q_ > 256) throw InputError("finite field order must be <= 256");

  std::vector<Digits> digits(q_);
  for (std::uint32_t x = 0; x < q_; ++x) digits[x] = to_digits(x, p, r);
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits n(r);
    for (std::uint32_t i = 0; i < r; ++i) n[i] = (p - digits[a][i]) % p;
    neg_[a] = static_cast<Element>(from_digits(n, p));
    for (std::uint32_t b = 0; b < q_; ++b) {
      Digits s(r);
      for (std::uint32_t i = 0; i < r; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
      add_[a * q_ + b] = static_cast<Element>(from_digits(s, p));
      mul_[a * q_ + b] = static_cast<Element>(from_digits(mul_mod(digits[a], digits[b], modulus_, p), p));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Element>(b);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    std::uint32_t order = 1;
    Element x = static_cast<Element>(a);
    while (x != 1) {
      x = mul(x, static_cast<Element>(a));
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = static_cast<Element>(a);
      break;
    }
  }
}

}  // namespace quivercount
