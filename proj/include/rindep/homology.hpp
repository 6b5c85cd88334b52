#pragma once

#include <cstdint>
#include <vector>

#include "rindep/betti.hpp"
#include "rindep/complex.hpp"
#include "rindep/linalg.hpp"

namespace rindep {

/// Reduced homology dimensions of the augmented chain complex.
struct ReducedHomology {
  /// dims[k + 1] = dim H~_k, for k = -1 .. dim.
  std::vector<std::uint64_t> dims;
  /// The void complex has no chain complex at all; dims is then empty.
  bool void_complex = false;

  /// dim H~_k, zero outside the stored range.
  std::uint64_t at(int k) const;
  /// Largest k with H~_k != 0, or -2 when everything vanishes.
  int top_nonzero() const;
};

/// Boundary ranks by exact elimination over `field`. Each call checks the
/// Euler-Poincaré relation and nonnegativity; a violation throws
/// InconsistencyError.
ReducedHomology reduced_homology_dims(const SimplicialComplex& d,
                                      const FieldSpec& field = FieldSpec(2));

/// Default vertex cap for the 2^n subcomplex sums.
inline constexpr int kOracleVertexLimit = 12;

/// Graded Betti numbers of R/I_Δ by Hochster's formula
///   beta_{i,j}(I_Δ) = sum_{|W| = j} dim H~_{j-i-2}(Δ[W]).
/// InputError when n exceeds `max_vertices`.
BettiTable hochster_betti(const SimplicialComplex& d, const FieldSpec& field = FieldSpec(2),
                          int max_vertices = kOracleVertexLimit);

/// Least L with H~_k(Δ[W]) = 0 for all W and all k >= L.
int leray_number(const SimplicialComplex& d, const FieldSpec& field = FieldSpec(2),
                 int max_vertices = kOracleVertexLimit);

/// Both of the above from a single pass over the induced subcomplexes.
struct OracleReport {
  BettiTable betti;
  int leray = 0;
};
OracleReport run_oracle(const SimplicialComplex& d, const FieldSpec& field = FieldSpec(2),
                        int max_vertices = kOracleVertexLimit);

}  // namespace rindep
