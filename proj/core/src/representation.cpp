#include "quivercount/representation.hpp"

#include <optional>

namespace quivercount {

std::size_t semisimple_quotient_dimension(const RationalField& k, const HomBasis<RationalField>& end) {
  const std::size_t n = end.dimension();
  auto gram = zeros(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational tr = 0;
      for (std::size_t x = 0; x < end.basis[i].size(); ++x) {
        const auto& a = end.basis[i][x];
        const auto& b = end.basis[j][x];
        for (std::size_t r = 0; r < a.rows(); ++r) {
          for (std::size_t c = 0; c < a.cols(); ++c) tr += a(r, c) * b(c, r);
        }
      }
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  }
  return rank(k, gram);
}

// ------------------------------------------------------------------ GF(q)

FactorResult<FiniteField> find_factor(const FiniteField& k, const UPoly<FiniteField>& p,
                                      std::uint64_t budget) {
  FactorResult<FiniteField> out;
  const auto f = make_monic(k, p);
  const int n = degree<FiniteField>(f);
  if (n < 2) {
    out.status = FactorSearch::irreducible;
    return out;
  }
  std::uint64_t work = 0;
  for (int s = 1; 2 * s <= n; ++s) {
    // Monic candidates of degree s, lower coefficients as base-q digits.
    UPoly<FiniteField> cand(static_cast<std::size_t>(s) + 1, 0);
    cand[s] = 1;
    while (true) {
      if (++work > budget) return out;
      if (poly_mod(k, f, cand).empty()) {
        out.status = FactorSearch::found;
        out.factor = cand;
        return out;
      }
      int i = 0;
      while (i < s && ++cand[i] == k.order()) cand[i++] = 0;
      if (i == s) break;
    }
  }
  out.status = FactorSearch::irreducible;
  return out;
}

// ------------------------------------------------------------------ QQ

namespace {

using IntPoly = std::vector<Integer>;

IntPoly primitive_integer_form(const UPoly<RationalField>& p) {
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
  IntPoly out;
  Integer content = 0;
  for (const auto& c : p) {
    Integer v = Integer(c.get_num()) * (den / Integer(c.get_den()));
    content = gcd(content, v);
    out.push_back(v);
  }
  if (content != 0) {
    for (auto& c : out) c /= content;
  }
  if (!out.empty() && out.back() < 0) {
    for (auto& c : out) c = -c;
  }
  return out;
}

Integer eval(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Positive divisors of |n| (n != 0) by trial division, or nullopt past the budget.
std::optional<std::vector<Integer>> divisors(Integer n, std::uint64_t& work, std::uint64_t budget) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (++work > budget) return std::nullopt;
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

UPoly<RationalField> to_rational(const IntPoly& p) {
  UPoly<RationalField> out;
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

bool divides(const RationalField& k, const UPoly<RationalField>& f, const UPoly<RationalField>& g) {
  return poly_mod(k, f, g).empty();
}

// Lagrange interpolation through (xs[i], ys[i]); low degree first.
UPoly<RationalField> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t m = xs.size();
  UPoly<RationalField> result(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    UPoly<RationalField> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      UPoly<RationalField> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    const Rational scale = Rational(ys[i]) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += basis[t] * scale;
  }
  return result;
}

}  // namespace

FactorResult<RationalField> find_factor(const RationalField& k, const UPoly<RationalField>& p,
                                        std::uint64_t budget) {
  FactorResult<RationalField> out;
  const auto monic = make_monic(k, p);
  const int n = degree<RationalField>(monic);
  if (n < 2) {
    out.status = FactorSearch::irreducible;
    return out;
  }
  const IntPoly f = primitive_integer_form(monic);
  std::uint64_t work = 0;

  // Rational roots r/s with r | a_0 and s | a_n.
  if (f.front() == 0) {
    out.status = FactorSearch::found;
    out.factor = {Rational(0), Rational(1)};
    return out;
  }
  const auto num_divs = divisors(f.front(), work, budget);
  const auto den_divs = divisors(f.back(), work, budget);
  if (!num_divs || !den_divs) return out;
  for (const auto& r : *num_divs) {
    for (const auto& s : *den_divs) {
      for (int sign : {1, -1}) {
        if (++work > budget) return out;
        Rational root(sign * r, s);
        root.canonicalize();
        Rational value = 0;
        for (std::size_t i = monic.size(); i-- > 0;) value = value * root + monic[i];
        if (value == 0) {
          out.status = FactorSearch::found;
          out.factor = {-root, Rational(1)};
          return out;
        }
      }
    }
  }
  if (n < 4) {
    out.status = FactorSearch::irreducible;
    return out;
  }

  // Kronecker: a factor of degree s is pinned down by its values at s + 1 integers,
  // each of which divides the corresponding value of f.
  const auto rf = to_rational(f);
  for (int s = 2; 2 * s <= n; ++s) {
    std::vector<Integer> xs;
    std::vector<std::vector<Integer>> candidates;
    for (long t = 0; xs.size() < static_cast<std::size_t>(s) + 1; ++t) {
      const Integer x = (t % 2 == 0) ? Integer(t / 2) : Integer(-(t + 1) / 2);
      const auto v = eval(f, x);
      auto divs = divisors(v, work, budget);
      if (!divs) return out;
      xs.push_back(x);
      candidates.push_back(std::move(*divs));
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    std::vector<int> signs(xs.size(), 1);
    // Odometer over divisor choices and signs; the first value is kept positive.
    while (true) {
      if (++work > budget) return out;
      std::vector<Integer> ys(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = signs[i] * candidates[i][idx[i]];
      auto g = interpolate(xs, ys);
      trim(k, g);
      if (degree<RationalField>(g) == s && divides(k, rf, g)) {
        out.status = FactorSearch::found;
        out.factor = make_monic(k, g);
        return out;
      }
      std::size_t i = 0;
      for (; i < xs.size(); ++i) {
        if (i > 0 && signs[i] == 1) {
          signs[i] = -1;
          break;
        }
        signs[i] = 1;
        if (++idx[i] < candidates[i].size()) break;
        idx[i] = 0;
      }
      if (i == xs.size()) break;
    }
  }
  out.status = FactorSearch::irreducible;
  return out;
}

}  // namespace quivercount
