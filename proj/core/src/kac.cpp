#include "quivercount/kac.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "quivercount/errors.hpp"
#include "quivercount/partition.hpp"

namespace quivercount {

long euler_form(const Quiver& q, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count()) {
    throw InputError("dimension vector length mismatch");
  }
  long total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) total += static_cast<long>(d[i] * e[i]);
  for (const auto& a : q.arrows()) total -= static_cast<long>(d[a.tail] * e[a.head]);
  return total;
}

// ------------------------------------------------------------------ MultiSeries

MultiSeries::MultiSeries(std::vector<std::size_t> bound) : bound_(std::move(bound)), stride_(bound_.size()) {
  std::size_t n = 1;
  for (std::size_t i = bound_.size(); i-- > 0;) {
    stride_[i] = n;
    n *= bound_[i] + 1;
  }
  coeffs_.assign(n, Rational(0));
}

std::size_t MultiSeries::index(const std::vector<std::size_t>& e) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > bound_[i]) throw InputError("exponent beyond series truncation");
    idx += e[i] * stride_[i];
  }
  return idx;
}

std::vector<std::size_t> MultiSeries::exponent(std::size_t index) const {
  std::vector<std::size_t> e(bound_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = index / stride_[i];
    index %= stride_[i];
  }
  return e;
}

MultiSeries MultiSeries::log() const {
  if (coeffs_.empty() || coeffs_[0] != 1) throw InputError("log of a series without constant term 1");
  // With D the total-degree Euler operator, D P = P * D L, solved degree by degree.
  MultiSeries out(bound_);
  std::vector<std::vector<std::size_t>> exps;
  std::vector<std::size_t> degs;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    exps.push_back(exponent(i));
    degs.push_back(std::accumulate(exps.back().begin(), exps.back().end(), std::size_t{0}));
  }
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    Rational acc = Rational(degs[i]) * coeffs_[i];
    for (std::size_t j = 1; j < i; ++j) {
      if (sgn(out.coeffs_[j]) == 0) continue;
      bool below = true;
      std::vector<std::size_t> rest(exps[i].size());
      for (std::size_t v = 0; v < rest.size() && below; ++v) {
        below = exps[j][v] <= exps[i][v];
        if (below) rest[v] = exps[i][v] - exps[j][v];
      }
      if (!below) continue;
      acc -= Rational(degs[j]) * out.coeffs_[j] * coeffs_[index(rest)];
    }
    out.coeffs_[i] = acc / Rational(degs[i]);
  }
  return out;
}

// ------------------------------------------------------------------ Hua series

MultiSeries hua_series_at(const Quiver& q, const std::vector<std::size_t>& bound, const Integer& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1) throw InputError("Hua series needs q0 outside {-1, 0, 1}");
  if (bound.size() != q.vertex_count()) throw InputError("dimension vector length mismatch");
  const std::size_t nv = q.vertex_count();
  const std::size_t top = bound.empty() ? 0 : *std::max_element(bound.begin(), bound.end());
  std::vector<std::vector<Partition>> parts(top + 1);
  for (std::size_t n = 0; n <= top; ++n) parts[n] = partitions_of(static_cast<unsigned>(n));
  const Rational q0r(q0);
  const Rational inv_q0 = 1 / q0r;

  MultiSeries series(bound);
  std::vector<const Partition*> chosen(nv);
  for (std::size_t idx = 0; idx < series.size(); ++idx) {
    const auto e = series.exponent(idx);
    Rational sum = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == nv) {
        long exponent = 0;
        Rational denom = 1;
        for (const auto& a : q.arrows()) {
          exponent += static_cast<long>(partition_pairing(*chosen[a.tail], *chosen[a.head]));
        }
        for (std::size_t i = 0; i < nv; ++i) {
          exponent -= static_cast<long>(partition_pairing(*chosen[i], *chosen[i]));
          denom *= b_poly_at(*chosen[i], inv_q0);
        }
        const Rational scale = exponent >= 0 ? power(q0r, static_cast<unsigned long>(exponent))
                                             : power(inv_q0, static_cast<unsigned long>(-exponent));
        sum += scale / denom;
        return;
      }
      for (const auto& p : parts[e[v]]) {
        chosen[v] = &p;
        rec(v + 1);
      }
    };
    rec(0);
    series.at_index(idx) = sum;
  }
  return series;
}

std::string to_string(HuaRecipe r) { return r == HuaRecipe::primary ? "primary" : "alternate"; }

Rational hua_value_at(const Quiver& q, const std::vector<std::size_t>& d, const Integer& q0, HuaRecipe recipe) {
  if (d.size() != q.vertex_count()) throw InputError("dimension vector length mismatch");
  std::size_t g = 0;
  for (auto x : d) g = std::gcd(g, x);
  if (g == 0) throw InputError("dimension vector must be nonzero");
  Rational total = 0;
  for (std::size_t k = 1; k <= g; ++k) {
    if (g % k != 0) continue;
    const int mu = mobius(k);
    if (mu == 0) continue;
    std::vector<std::size_t> reduced(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) reduced[i] = d[i] / k;
    const Integer qk = power(q0, k);
    const auto logp = hua_series_at(q, reduced, qk).log();
    Rational term = Rational(mu, static_cast<unsigned long>(k)) * logp[reduced];
    if (recipe == HuaRecipe::alternate) term *= Rational(qk - 1);
    total += term;
  }
  if (recipe == HuaRecipe::primary) total *= Rational(q0 - 1);
  return total;
}

// ------------------------------------------------------------------ Kac polynomial

namespace {

KacResult interpolate_kac(const Quiver& q, const std::vector<std::size_t>& d, HuaRecipe recipe,
                          const KacOptions& options) {
  const long predicted = 1 - euler_form(q, d, d);
  long bound = std::max(predicted, 0L);
  std::map<long, Rational> values;
  auto value = [&](long x) -> const Rational& {
    auto it = values.find(x);
    if (it == values.end()) it = values.emplace(x, hua_value_at(q, d, Integer(x), recipe)).first;
    return it->second;
  };
  while (true) {
    if (bound > options.max_degree) {
      throw ResourceError("Kac polynomial degree bound exceeded " + std::to_string(options.max_degree));
    }
    InterpolationTable table;
    for (long x = 2; x <= bound + 2; ++x) table.add(Rational(x), value(x));
    auto poly = lagrange_interpolate(table);
    const long check = bound + 3;
    if (poly(Rational(check)) == value(check)) {
      if (!poly.has_integer_coefficients() || !(poly.is_zero() || poly.is_monic())) {
        throw ConsistencyError("Kac polynomial of " + q.to_string() + " is not a monic integer polynomial: " +
                               poly.to_string());
      }
      KacResult out;
      out.quiver = q;
      out.dims = d;
      out.value_at_one = poly(Rational(1));
      out.degree = poly.degree();
      out.polynomial = std::move(poly);
      out.skip_chars = skipped_characteristics(q, d);
      out.recipe = recipe;
      return out;
    }
    bound = 2 * bound + 1;
  }
}

}  // namespace

Quiver two_two_one_quiver() { return Quiver(3, {{1, 0}, {1, 0}, {2, 1}}); }

HuaRecipe validated_recipe() {
  static std::once_flag once;
  static std::optional<HuaRecipe> chosen;
  std::call_once(once, [] {
    const PolyQ pin_loop{0, 0, 0, 1, 0, 1};  // q^5 + q^3
    const PolyQ pin_three{2, 2, 1};           // q^2 + 2q + 2
    for (auto recipe : {HuaRecipe::primary, HuaRecipe::alternate}) {
      KacOptions opt;
      try {
        if (interpolate_kac(Quiver::loop_quiver(2), {2}, recipe, opt).polynomial == pin_loop &&
            interpolate_kac(two_two_one_quiver(), {2, 2, 1}, recipe, opt).polynomial == pin_three) {
          chosen = recipe;
          return;
        }
      } catch (const ConsistencyError&) {
      }
    }
  });
  if (!chosen) throw ConsistencyError("no Hua recipe reproduces the pinned Kac polynomials");
  return *chosen;
}

KacResult kac_polynomial(const Quiver& q, const std::vector<std::size_t>& d, const KacOptions& options) {
  if (d.size() != q.vertex_count()) throw InputError("dimension vector length mismatch");
  if (std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 0; })) {
    throw InputError("dimension vector must be nonzero");
  }
  return interpolate_kac(q, d, options.recipe ? *options.recipe : validated_recipe(), options);
}

BinomialPolyG kac_at_one_in_g(unsigned d, const std::vector<unsigned>& g_values, const KacOptions& options) {
  if (d == 0) throw InputError("dimension must be positive");
  std::vector<unsigned> gs = g_values;
  if (gs.empty()) {
    for (unsigned g = 0; g < d; ++g) gs.push_back(g);
  }
  if (gs.size() != d) throw InputError("kac_at_one_in_g needs exactly d values of g");
  auto at_one = [&](unsigned g) { return kac_polynomial(Quiver::loop_quiver(g), {d}, options).value_at_one; };
  InterpolationTable table;
  for (auto g : gs) table.add(Rational(g), at_one(g));
  const auto poly = lagrange_interpolate(table);
  const unsigned extra = *std::max_element(gs.begin(), gs.end()) + 1;
  if (poly(Rational(extra)) != at_one(extra)) {
    throw ConsistencyError("A_{S_g}(" + std::to_string(d) + ", 1) is not of degree " + std::to_string(d - 1) +
                           " in g");
  }
  return monomial_to_binomial(poly);
}

AtOneLeadingCheck at_one_leading_check(unsigned d, const std::optional<BinomialPolyG>& at_one, const KacOptions& options) {
  if (d == 0) throw InputError("dimension must be positive");
  AtOneLeadingCheck out;
  out.d = d;
  out.expected = Rational(power(Integer(2), d - 1)) * power(Rational(d), d - 1) / Rational(d) /
                 Rational(factorial(d));
  const auto poly = binomial_to_monomial(at_one ? *at_one : kac_at_one_in_g(d, {}, options));
  out.degree = poly.degree();
  out.computed = poly.leading();
  return out;
}

// ------------------------------------------------------------------ bad characteristics

bool same_quiver_and_dims(const Quiver& a, const std::vector<std::size_t>& da, const Quiver& b,
                          const std::vector<std::size_t>& db) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.arrow_count() != b.arrow_count() || n > 8) return false;
  if (da.size() != n || db.size() != n) return false;
  auto target = b.arrows();
  std::sort(target.begin(), target.end());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool dims_ok = true;
    for (std::size_t i = 0; i < n && dims_ok; ++i) dims_ok = da[i] == db[perm[i]];
    if (!dims_ok) continue;
    std::vector<Arrow> mapped;
    for (const auto& arr : a.arrows()) mapped.push_back({perm[arr.tail], perm[arr.head]});
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

const std::vector<BadCharacteristic>& bad_characteristic_list() {
  static const std::vector<BadCharacteristic> list{
      {two_two_one_quiver(), {2, 2, 1}, {2},
       "characteristic 2 is bad for dimension vector (2,2,1) on the double-arrow quiver"},
  };
  return list;
}

std::vector<std::uint32_t> skipped_characteristics(const Quiver& q, const std::vector<std::size_t>& d) {
  std::vector<std::uint32_t> out;
  for (const auto& entry : bad_characteristic_list()) {
    if (same_quiver_and_dims(q, d, entry.quiver, entry.dims)) {
      out.insert(out.end(), entry.characteristics.begin(), entry.characteristics.end());
    }
  }
  return out;
}

}  // namespace quivercount
