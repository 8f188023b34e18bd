#include <deque>

#include "quivercount/errors.hpp"
#include "quivercount/kac.hpp"
#include "quivercount/representation.hpp"

namespace quivercount {

namespace {

using FFMatrix = MatrixOver<FiniteField>;

struct Generator {
  std::size_t vertex;
  FFMatrix g;
  FFMatrix g_inv;
};

// Transvections I + c E_rc (c running over powers of a primitive element, which span the
// field over its prime field) and diag(w, 1, ..., 1) generate GL(n).
std::vector<Generator> gl_generators(const FiniteField& k, const std::vector<std::size_t>& d) {
  std::vector<Generator> out;
  const auto w = k.primitive_element();
  const auto degree = k.spec().degree();
  for (std::size_t v = 0; v < d.size(); ++v) {
    const std::size_t n = d[v];
    if (n == 0) continue;
    if (k.order() > 2) {
      auto diag = identity(k, n);
      diag(0, 0) = w;
      out.push_back({v, diag, *inverse(k, diag)});
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (r == c) continue;
        FiniteField::Element coeff = k.one();
        for (std::uint32_t j = 0; j < degree; ++j) {
          auto t = identity(k, n);
          t(r, c) = coeff;
          out.push_back({v, t, *inverse(k, t)});
          coeff = k.mul(coeff, w);
        }
      }
    }
  }
  return out;
}

}  // namespace

FFCount count_abs_indec_ff(const Quiver& q, const std::vector<std::size_t>& d, const FiniteField& k,
                           const FFOracleOptions& options) {
  if (d.size() != q.vertex_count()) throw InputError("dimension vector length mismatch");
  std::size_t entries = 0;
  for (const auto& a : q.arrows()) entries += d[a.tail] * d[a.head];
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < entries; ++i) {
    states *= k.order();
    if (states > options.max_states) {
      throw ResourceError("finite-field census exceeds " + std::to_string(options.max_states) + " states");
    }
  }

  const auto base = zero_maps_rep(k, q, d);
  // Row-major entries, arrow by arrow; the first entry is the most significant digit.
  auto decode = [&](std::uint64_t index) {
    auto m = base;
    for (std::size_t a = m.maps.size(); a-- > 0;) {
      auto& data = m.maps[a].data();
      for (std::size_t j = data.size(); j-- > 0;) {
        data[j] = static_cast<FiniteField::Element>(index % k.order());
        index /= k.order();
      }
    }
    return m;
  };
  auto encode = [&](const Rep<FiniteField>& m) {
    std::uint64_t index = 0;
    for (const auto& mat : m.maps) {
      for (auto x : mat.data()) index = index * k.order() + x;
    }
    return index;
  };

  const auto gens = gl_generators(k, d);
  std::vector<bool> seen(states, false);
  FFCount out;
  out.representations = states;
  for (std::uint64_t start = 0; start < states; ++start) {
    if (seen[start]) continue;
    ++out.orbits;
    seen[start] = true;
    std::deque<std::uint64_t> todo{start};
    while (!todo.empty()) {
      const auto m = decode(todo.front());
      todo.pop_front();
      for (const auto& gen : gens) {
        auto next = m;
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
          const auto& arr = q.arrow(a);
          if (arr.head == gen.vertex) next.maps[a] = multiply(k, gen.g, next.maps[a]);
          if (arr.tail == gen.vertex) next.maps[a] = multiply(k, next.maps[a], gen.g_inv);
        }
        const auto idx = encode(next);
        if (!seen[idx]) {
          seen[idx] = true;
          todo.push_back(idx);
        }
      }
    }
    // start is the smallest index of its orbit: every smaller index was already seen.
    if (is_absolutely_indecomposable(k, decode(start))) ++out.absolutely_indecomposable;
  }
  return out;
}

}  // namespace quivercount
