#pragma once

#include <vector>

#include "affine.hpp"
#include "series.hpp"

namespace apav {

/// Gap counts between consecutive defining beads of an abacus diagram.
/// Any vector of n-1 nonnegative integers is the gap vector of exactly one
/// minimal length coset representative.
struct GapVector {
  int n = 0;
  std::vector<long long> gaps;  // n-1 entries, all >= 0
};

/// A minimal abacus: delta vector with entries in 1..n-1. `offset` is its
/// own gap vector (the shift of the cone cell) and `floor_table` holds
/// floor((delta_i + ... + delta_{j-1}) / n) for 1 <= i < j <= n.
struct Bias {
  int n = 0;
  std::vector<int> delta;
  std::vector<long long> offset;
  std::vector<std::vector<long long>> floor_table;

  long long floor_between(int i, int j) const { return floor_table[i][j]; }  // 1 <= i < j <= n
  /// sum (n-i) * offset_i; the length of the minimal abacus element.
  long long grading_constant() const;
  bool operator==(const Bias& o) const { return n == o.n && delta == o.delta; }
};

/// Location of a coset representative inside its shifted dilated cone:
/// gap_i = i * t_i + offset_i.
struct AbacusCoords {
  Bias bias;
  std::vector<long long> t;  // n-1 entries, all >= 0
};

/// Gap counts of the abacus of u; requires a sorted base window.
GapVector gap_vector(const AffinePermutation& u);

/// Consecutive differences of the sorted base window.
std::vector<long long> delta_vector(const AffinePermutation& u);

/// The unique minimal length coset representative with the given gaps.
AffinePermutation from_gap_vector(const GapVector& g);

/// Coxeter length from gap counts: sum (n-i) * gap_i.
long long length_from_gaps(const GapVector& g);

Bias make_bias(int n, std::vector<int> delta);

/// All (n-1)! biases, ordered lexicographically by delta vector.
std::vector<Bias> enumerate_biases(int n);

/// Componentwise residue of the delta vector; requires a sorted window.
Bias bias_of(const AffinePermutation& u);

AbacusCoords cone_coords(const AffinePermutation& u);
AffinePermutation from_cone_coords(const AbacusCoords& c);

/// Bott's formula. coset_only gives 1 / prod (1 - x^i) for i = 1..n-1;
/// the full series multiplies in the finite symmetric group numerator.
RationalFunction bott_series(int n, bool coset_only);

}  // namespace apav
