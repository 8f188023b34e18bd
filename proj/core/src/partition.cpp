#include "quivercount/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "quivercount/errors.hpp"

namespace quivercount {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InputError("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
  std::vector<unsigned> cols;
  if (!parts_.empty()) {
    cols.assign(parts_.front(), 0);
    for (unsigned p : parts_) {
      for (unsigned j = 0; j < p; ++j) ++cols[j];
    }
  }
  return Partition(std::move(cols));
}

unsigned Partition::multiplicity(unsigned part) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

unsigned long partition_pairing(const Partition& lam, const Partition& mu) {
  const auto a = lam.conjugate().parts();
  const auto b = mu.conjugate().parts();
  unsigned long total = 0;
  for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) {
    total += static_cast<unsigned long>(a[j]) * b[j];
  }
  return total;
}

Rational b_poly_at(const Partition& lam, const Rational& t) {
  Rational result = 1;
  const auto& parts = lam.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned long>(j - i);
    Rational t_pow = 1;
    for (unsigned long m = 1; m <= mult; ++m) {
      t_pow *= t;
      result *= Rational(1) - t_pow;
    }
    i = j;
  }
  return result;
}

}  // namespace quivercount
