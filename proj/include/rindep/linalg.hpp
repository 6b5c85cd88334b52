#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rindep {

/// Coefficient field: characteristic 0 means the rationals, otherwise the
/// prime field GF(p).
class FieldSpec {
 public:
  /// Throws InputError unless p is 0 or a prime below 2^31.
  explicit FieldSpec(std::uint32_t characteristic = 2);
  static FieldSpec rationals() { return FieldSpec(0); }

  std::uint32_t characteristic() const { return p_; }
  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

/// Integer matrix in row-sparse form; entries are small (boundary
/// coefficients are ±1).
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> row_entries;  // (col, value)
};

/// Rank over the given field by exact elimination: bit-packed for GF(2),
/// modular arithmetic for odd p, fraction-free (Bareiss) over big integers
/// for characteristic 0.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

}  // namespace rindep
