#include "affine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace apav {

Pattern normalize_pattern(const std::vector<long long>& raw) {
  if (raw.empty()) throw std::invalid_argument("empty pattern");
  std::vector<long long> sorted(raw);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("pattern entries must be pairwise distinct");
  Pattern p;
  p.values.reserve(raw.size());
  for (long long v : raw) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    p.values.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return p;
}

Pattern identity_pattern(int k) {
  Pattern p;
  p.values.resize(k);
  std::iota(p.values.begin(), p.values.end(), 1);
  return p;
}

std::vector<int> pattern_inverse(const Pattern& p) {
  std::vector<int> inv(p.size() + 1, 0);
  for (int i = 0; i < p.size(); ++i) inv[p.values[i]] = i + 1;
  return inv;
}

long long inversion_count(const Pattern& p) {
  long long count = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.values[i] > p.values[j]) ++count;
  return count;
}

std::vector<Pattern> all_patterns(int k) {
  std::vector<Pattern> out;
  Pattern p = identity_pattern(k);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.values.begin(), p.values.end()));
  return out;
}

int strand_count(const Pattern& p) {
  // longest strictly decreasing subsequence, O(k^2)
  int k = p.size();
  std::vector<int> best(k, 1);
  int m = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j)
      if (p.values[j] > p.values[i]) best[i] = std::max(best[i], best[j] + 1);
    m = std::max(m, best[i]);
  }
  return m;
}

AffinePermutation make_affine(std::vector<long long> window, int n) {
  if (n < 2) throw std::invalid_argument("affine permutation size must be at least 2");
  if (static_cast<int>(window.size()) != n)
    throw std::invalid_argument("base window length must equal n");
  long long sum = std::accumulate(window.begin(), window.end(), 0LL);
  long long expected = static_cast<long long>(n) * (n + 1) / 2;
  if (sum != expected)
    throw std::invalid_argument("base window must sum to n(n+1)/2");
  std::set<long long> residues;
  for (long long v : window) residues.insert(((v % n) + n) % n);
  if (static_cast<int>(residues.size()) != n)
    throw std::invalid_argument("base window residues modulo n must be distinct");
  return AffinePermutation{n, std::move(window)};
}

AffinePermutation affine_identity(int n) {
  std::vector<long long> w(n);
  std::iota(w.begin(), w.end(), 1LL);
  return make_affine(std::move(w), n);
}

namespace {

long long floor_div_ll(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// max_i (w(i) - i) - min_i (w(i) - i) over the base window; the displacement
// spread of w. No inversion of w spans more than s positions.
long long displacement_spread(const AffinePermutation& w) {
  long long mx = w.window[0] - 1, mn = w.window[0] - 1;
  for (int i = 0; i < w.n; ++i) {
    long long d = w.window[i] - (i + 1);
    mx = std::max(mx, d);
    mn = std::min(mn, d);
  }
  return mx - mn;
}

}  // namespace

long long value_at(const AffinePermutation& w, long long i) {
  long long q = floor_div_ll(i - 1, w.n);
  long long r = i - q * w.n;  // in 1..n
  return w.window[r - 1] + q * w.n;
}

bool window_sorted(const AffinePermutation& w) {
  return std::is_sorted(w.window.begin(), w.window.end());
}

long long coxeter_length(const AffinePermutation& w) {
  // Every inversion class (i + mn, j + mn) has exactly one representative
  // with 1 <= i <= n, and w(i) > w(j) forces j - i <= displacement spread.
  long long s = displacement_spread(w);
  long long count = 0;
  for (long long i = 1; i <= w.n; ++i) {
    long long wi = value_at(w, i);
    for (long long j = i + 1; j <= i + s; ++j)
      if (wi > value_at(w, j)) ++count;
  }
  return count;
}

Pattern flattening(const AffinePermutation& w) {
  return normalize_pattern(w.window);
}

std::pair<AffinePermutation, Pattern> parabolic_decompose(const AffinePermutation& w) {
  std::vector<long long> sorted(w.window);
  std::sort(sorted.begin(), sorted.end());
  return {AffinePermutation{w.n, std::move(sorted)}, flattening(w)};
}

AffinePermutation compose_sorted(const AffinePermutation& u, const Pattern& v) {
  if (v.size() != u.n) throw std::invalid_argument("flattening size must equal n");
  std::vector<long long> sorted(u.window);
  std::sort(sorted.begin(), sorted.end());
  std::vector<long long> window(u.n);
  for (int i = 0; i < u.n; ++i) window[i] = sorted[v.values[i] - 1];
  return AffinePermutation{u.n, std::move(window)};
}

int strand_of(const AffinePermutation& w, long long i) {
  long long q = floor_div_ll(i - 1, w.n);
  long long r = i - q * w.n;
  long long entry = w.window[r - 1];
  int rank = 1;
  for (long long v : w.window)
    if (v < entry) ++rank;
  return rank;
}

namespace {

struct Search {
  const AffinePermutation& w;
  const Pattern& p;
  const std::vector<int>* strands;
  long long max_gap;
  std::vector<long long> positions;
  std::vector<long long> values;

  bool extend(int m) {
    int k = p.size();
    if (m == k) return true;
    long long lo = (m == 0) ? 1 : positions[m - 1] + 1;
    long long hi = (m == 0) ? w.n : positions[m - 1] + max_gap;
    for (long long pos = lo; pos <= hi; ++pos) {
      if (strands && strand_of(w, pos) != (*strands)[m]) continue;
      long long val = value_at(w, pos);
      bool ok = true;
      for (int q = 0; q < m && ok; ++q)
        ok = ((val > values[q]) == (p.values[m] > p.values[q]));
      if (!ok) continue;
      positions.push_back(pos);
      values.push_back(val);
      if (extend(m + 1)) return true;
      positions.pop_back();
      values.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<PatternInstance> contains_pattern(const AffinePermutation& w, const Pattern& p,
                                                const std::vector<int>* strands) {
  if (strands && static_cast<int>(strands->size()) != p.size())
    throw std::invalid_argument("strand filter length must equal pattern size");
  // Completeness of the bounded search. Let s be the displacement spread of
  // w. If an occurrence has a positional gap i_{m+1} - i_m > s + n, shift
  // the suffix i_{m+1}, ..., i_k left by n. Descending cross pairs stay
  // descending (values drop by n). Ascending cross pairs (b <= m < c) stay
  // ascending because
  //   w(i_c) - w(i_b) = (w(i_c) - i_c) - (w(i_b) - i_b) + (i_c - i_b)
  //                  >= -s + (i_{m+1} - i_m) > n,
  // so subtracting n keeps w(i_c) - n > w(i_b). Iterating yields an
  // occurrence with every gap at most s + n, and translating by multiples
  // of n puts its first position into 1..n.
  Search search{w, p, strands, displacement_spread(w) + w.n, {}, {}};
  search.positions.reserve(p.size());
  search.values.reserve(p.size());
  if (search.extend(0)) return PatternInstance{search.positions, search.values};
  return std::nullopt;
}

bool is_instance(const AffinePermutation& w, const Pattern& p,
                 const std::vector<long long>& positions) {
  if (static_cast<int>(positions.size()) != p.size()) return false;
  for (size_t i = 1; i < positions.size(); ++i)
    if (positions[i] <= positions[i - 1]) return false;
  std::vector<long long> values;
  values.reserve(positions.size());
  for (long long pos : positions) values.push_back(value_at(w, pos));
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if ((values[i] < values[j]) != (p.values[i] < p.values[j])) return false;
  return true;
}

}  // namespace apav
