#include "rindep/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "rindep/error.hpp"

namespace rindep {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (1U << 31))) {
    throw InputError("field characteristic must be 0 or a prime below 2^31, got " +
                     std::to_string(p_));
  }
}

namespace {

std::size_t rank_gf2(const SparseMatrix& m) {
  const std::size_t words = (static_cast<std::size_t>(m.cols) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(m.rows);
  for (const auto& entries : m.row_entries) {
    std::vector<std::uint64_t> bits(words, 0);
    for (auto [c, v] : entries) {
      if (v & 1) bits[c / 64] ^= std::uint64_t{1} << (c % 64);
    }
    rows.push_back(std::move(bits));
  }
  std::size_t rank = 0;
  for (int c = 0; c < m.cols && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][w] & bit) {
        for (std::size_t k = w; k < words; ++k) rows[i][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  for (int r = 0; r < m.rows; ++r) {
    for (auto [c, v] : m.row_entries[r]) {
      const long long reduced = ((static_cast<long long>(v) % static_cast<long long>(p)) +
                                 static_cast<long long>(p)) % static_cast<long long>(p);
      rows[r][c] = (rows[r][c] + static_cast<std::uint64_t>(reduced)) % p;
    }
  }
  std::size_t rank = 0;
  for (int c = 0; c < m.cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = inverse_mod(rows[rank][c], p);
    for (int k = c; k < m.cols; ++k) rows[rank][k] = rows[rank][k] * inv % p;
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const std::uint64_t factor = rows[i][c];
      if (factor == 0) continue;
      for (int k = c; k < m.cols; ++k) {
        rows[i][k] = (rows[i][k] + (p - factor) * rows[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const SparseMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols, 0));
  for (int r = 0; r < m.rows; ++r) {
    for (auto [c, v] : m.row_entries[r]) a[r][c] += v;
  }
  // Fraction-free elimination; every intermediate entry is a minor of the
  // input, so the divisions below are exact.
  cpp_int previous = 1;
  std::size_t rank = 0;
  for (int c = 0; c < m.cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (int k = c + 1; k < m.cols; ++k) {
        a[i][k] = (a[rank][c] * a[i][k] - a[i][c] * a[rank][k]) / previous;
      }
      a[i][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (static_cast<int>(m.row_entries.size()) != m.rows) {
    throw InputError("sparse matrix row count mismatch");
  }
  switch (field.characteristic()) {
    case 0: return rank_rational(m);
    case 2: return rank_gf2(m);
    default: return rank_mod_p(m, field.characteristic());
  }
}

}  // namespace rindep
