#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace apav {

/// Strand-assignment enumeration is exponential in the pattern size.
inline constexpr int kMaxPatternSize = 12;

/// A finite permutation pattern in one-line notation, values 1..k.
struct Pattern {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const Pattern& o) const { return values == o.values; }
  bool operator<(const Pattern& o) const { return values < o.values; }
};

/// Rank transform of a sequence of distinct integers (smallest -> 1).
Pattern normalize_pattern(const std::vector<long long>& raw);
Pattern identity_pattern(int k);
std::vector<int> pattern_inverse(const Pattern& p);
long long inversion_count(const Pattern& p);
/// All k! patterns of size k in lexicographic order.
std::vector<Pattern> all_patterns(int k);

/// Length of the longest strictly decreasing subsequence ("strands").
int strand_count(const Pattern& p);

/// An affine permutation of size n in base-window notation:
/// w(i + n) = w(i) + n and the window sums to n(n+1)/2.
struct AffinePermutation {
  int n = 0;
  std::vector<long long> window;  // [w(1) .. w(n)]

  bool operator==(const AffinePermutation& o) const { return n == o.n && window == o.window; }
};

/// Validates the window-sum and distinct-residue conditions.
AffinePermutation make_affine(std::vector<long long> window, int n);
AffinePermutation affine_identity(int n);

long long value_at(const AffinePermutation& w, long long i);
bool window_sorted(const AffinePermutation& w);

/// Number of inversions (i, j), 1 <= i <= n, i < j, w(i) > w(j).
long long coxeter_length(const AffinePermutation& w);

/// Rank sequence of the base window.
Pattern flattening(const AffinePermutation& w);

/// Splits w into the sorted-window coset representative u and the
/// flattening v, with coxeter_length(w) = coxeter_length(u) + inv(v).
std::pair<AffinePermutation, Pattern> parabolic_decompose(const AffinePermutation& w);

/// Rearranges the sorted window of u by v: w(i) = (sorted window)[v_i].
AffinePermutation compose_sorted(const AffinePermutation& u, const Pattern& v);

/// Strand of Z-position i: the rank (1-based, 1 = smallest) of the base
/// window entry whose translates occupy position i.
int strand_of(const AffinePermutation& w, long long i);

/// An occurrence of a pattern in Z-notation.
struct PatternInstance {
  std::vector<long long> positions;  // strictly increasing
  std::vector<long long> values;
};

/// Searches for an occurrence of p in w; the search window is bounded and
/// complete (see the derivation in the implementation). When `strands` is
/// given, only witnesses whose positions realize that strand assignment
/// are accepted.
std::optional<PatternInstance> contains_pattern(const AffinePermutation& w, const Pattern& p,
                                                const std::vector<int>* strands = nullptr);

/// Checks that the given positions form an occurrence of p in w.
bool is_instance(const AffinePermutation& w, const Pattern& p,
                 const std::vector<long long>& positions);

}  // namespace apav
