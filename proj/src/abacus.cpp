#include "abacus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apav {

namespace {

long long floor_div_ll(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// integers x with lo < x < hi and x = a (mod n)
long long count_residue_between(long long lo, long long hi, long long a, int n) {
  if (hi - lo < 2) return 0;
  return floor_div_ll(hi - 1 - a, n) - floor_div_ll(lo - a, n);
}

void require_sorted(const AffinePermutation& u) {
  if (!window_sorted(u))
    throw std::invalid_argument("operation requires a sorted base window");
}

// Balances positions by a constant shift so the window sums to n(n+1)/2.
// Distinct residues make the required shift an integer; the sum identity is
// asserted after the shift.
AffinePermutation balance(std::vector<long long> positions, int n) {
  long long target = static_cast<long long>(n) * (n + 1) / 2;
  long long sum = std::accumulate(positions.begin(), positions.end(), 0LL);
  if ((target - sum) % n != 0)
    throw std::invalid_argument("abacus cannot be balanced: residues collide modulo n");
  long long shift = (target - sum) / n;
  for (long long& v : positions) v += shift;
  return make_affine(std::move(positions), n);  // validates the sum identity
}

}  // namespace

long long Bias::grading_constant() const {
  long long c = 0;
  for (size_t i = 0; i < offset.size(); ++i) c += (n - 1 - static_cast<long long>(i)) * offset[i];
  return c;
}

GapVector gap_vector(const AffinePermutation& u) {
  require_sorted(u);
  GapVector g{u.n, std::vector<long long>(u.n - 1, 0)};
  // An entry strictly between beads i and i+1 is a gap exactly when its
  // column's defining bead is one of beads 1..i.
  for (int i = 0; i < u.n - 1; ++i)
    for (int m = 0; m <= i; ++m)
      g.gaps[i] += count_residue_between(u.window[i], u.window[i + 1], u.window[m], u.n);
  return g;
}

std::vector<long long> delta_vector(const AffinePermutation& u) {
  require_sorted(u);
  std::vector<long long> d(u.n - 1);
  for (int i = 0; i + 1 < u.n; ++i) d[i] = u.window[i + 1] - u.window[i];
  return d;
}

AffinePermutation from_gap_vector(const GapVector& g) {
  int n = g.n;
  if (n < 2 || static_cast<int>(g.gaps.size()) != n - 1)
    throw std::invalid_argument("gap vector must have n-1 entries");
  for (long long v : g.gaps)
    if (v < 0) throw std::invalid_argument("gap counts must be nonnegative");
  // Place the largest defining bead at 0, then walk downward. Entries whose
  // residue matches an already placed bead are beads of those columns; the
  // walk skips them, passes gap_i gaps, and lands on the next defining bead.
  std::vector<long long> positions(n);
  std::vector<bool> used(n, false);
  positions[n - 1] = 0;
  used[0] = true;
  for (int i = n - 2; i >= 0; --i) {
    long long x = positions[i + 1];
    long long remaining = g.gaps[i] + 1;
    while (remaining > 0) {
      --x;
      int r = static_cast<int>(((x % n) + n) % n);
      if (!used[r]) --remaining;
    }
    positions[i] = x;
    used[static_cast<int>(((x % n) + n) % n)] = true;
  }
  return balance(std::move(positions), n);
}

long long length_from_gaps(const GapVector& g) {
  long long len = 0;
  for (size_t i = 0; i < g.gaps.size(); ++i)
    len += (g.n - 1 - static_cast<long long>(i)) * g.gaps[i];
  return len;
}

Bias make_bias(int n, std::vector<int> delta) {
  if (n < 2 || static_cast<int>(delta.size()) != n - 1)
    throw std::invalid_argument("delta vector must have n-1 entries");
  for (int v : delta)
    if (v < 1 || v > n - 1) throw std::invalid_argument("bias delta entries must lie in 1..n-1");
  std::vector<long long> positions(n);
  positions[0] = 0;
  for (int i = 0; i + 1 < n; ++i) positions[i + 1] = positions[i] + delta[i];
  AffinePermutation u = balance(std::move(positions), n);  // throws on residue clash
  Bias b;
  b.n = n;
  b.delta = std::move(delta);
  b.offset = gap_vector(u).gaps;
  b.floor_table.assign(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 1; i < n; ++i) {
    long long sum = 0;
    for (int j = i + 1; j <= n; ++j) {
      sum += b.delta[j - 2];
      b.floor_table[i][j] = sum / n;  // partial delta sums are positive
    }
  }
  return b;
}

std::vector<Bias> enumerate_biases(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  std::vector<Bias> out;
  std::vector<int> delta;
  // Lexicographic DFS over delta vectors in {1..n-1}^{n-1}; a prefix is
  // viable when no interval sum is divisible by n (distinct residues).
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(delta.size()) == n - 1) {
      out.push_back(make_bias(n, delta));
      return;
    }
    for (int v = 1; v <= n - 1; ++v) {
      long long sum = v;
      bool ok = true;
      for (int i = static_cast<int>(delta.size()) - 1; i >= 0 && ok; --i) {
        if (sum % n == 0) ok = false;
        sum += delta[i];
      }
      if (sum % n == 0) ok = false;
      if (!ok) continue;
      delta.push_back(v);
      self(self);
      delta.pop_back();
    }
  };
  rec(rec);
  long long expected = 1;
  for (int i = 2; i < n; ++i) expected *= i;
  if (static_cast<long long>(out.size()) != expected)
    throw std::logic_error("bias enumeration did not produce (n-1)! minimal abaci");
  return out;
}

Bias bias_of(const AffinePermutation& u) {
  std::vector<long long> d = delta_vector(u);
  std::vector<int> delta(d.size());
  for (size_t i = 0; i < d.size(); ++i)
    delta[i] = static_cast<int>(((d[i] % u.n) + u.n) % u.n);  // never 0: residues are distinct
  return make_bias(u.n, std::move(delta));
}

AbacusCoords cone_coords(const AffinePermutation& u) {
  Bias b = bias_of(u);
  GapVector g = gap_vector(u);
  std::vector<long long> t(g.gaps.size());
  for (size_t i = 0; i < g.gaps.size(); ++i) {
    long long diff = g.gaps[i] - b.offset[i];
    long long dil = static_cast<long long>(i) + 1;
    if (diff < 0 || diff % dil != 0)
      throw std::logic_error("gap vector is not in the cone of its bias");
    t[i] = diff / dil;
  }
  return AbacusCoords{std::move(b), std::move(t)};
}

AffinePermutation from_cone_coords(const AbacusCoords& c) {
  GapVector g{c.bias.n, std::vector<long long>(c.t.size())};
  for (size_t i = 0; i < c.t.size(); ++i) {
    if (c.t[i] < 0) throw std::invalid_argument("cone coordinates must be nonnegative");
    g.gaps[i] = (static_cast<long long>(i) + 1) * c.t[i] + c.bias.offset[i];
  }
  return from_gap_vector(g);
}

RationalFunction bott_series(int n, bool coset_only) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  Polynomial den{1};
  for (int i = 1; i < n; ++i) {
    std::vector<Int> f(i + 1, Int(0));
    f[0] = 1;
    f[i] = -1;
    den = den * Polynomial(std::move(f));
  }
  Polynomial num{1};
  if (!coset_only) {
    for (int j = 2; j <= n; ++j) {
      std::vector<Int> f(j, Int(1));
      num = num * Polynomial(std::move(f));
    }
  }
  return rf(std::move(num), std::move(den));
}

}  // namespace apav
