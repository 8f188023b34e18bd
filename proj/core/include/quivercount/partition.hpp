#ifndef QUIVERCOUNT_PARTITION_HPP
#define QUIVERCOUNT_PARTITION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quivercount/exact.hpp"

namespace quivercount {

/// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Conjugate partition (column lengths of the Young diagram).
  Partition conjugate() const;

  /// Multiplicity of the part value `part`.
  unsigned multiplicity(unsigned part) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned size_ = 0;
};

/// All partitions of n in lexicographically descending order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(unsigned n);

/// <lam, mu> = sum_j lam'_j mu'_j over conjugate columns.
unsigned long partition_pairing(const Partition& lam, const Partition& mu);

/// b_lam(t) = prod over part values i of prod_{m=1}^{mult_i} (1 - t^m).
Rational b_poly_at(const Partition& lam, const Rational& t);

}  // namespace quivercount

#endif  // QUIVERCOUNT_PARTITION_HPP
