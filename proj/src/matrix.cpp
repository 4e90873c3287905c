#include "stw/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace stw {

void SymBitMatrix::check_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rows[i].test(j) != rows[j].test(i))
        throw Error(Errc::BadDivision, "matrix not symmetric at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
}

SymBitMatrix adjacency_matrix(const OrderedGraph& g) {
  SymBitMatrix m = SymBitMatrix::zero(g.n);
  for (auto [u, v] : g.edges) m.set_sym(u, v, true);
  return m;
}

SymDivision SymDivision::finest(int n) {
  SymDivision d;
  d.boundaries.resize(n + 1);
  std::iota(d.boundaries.begin(), d.boundaries.end(), 0);
  return d;
}

SymDivision SymDivision::coarsest(int n) {
  SymDivision d;
  d.boundaries = {0, n};
  return d;
}

SymDivision SymDivision::from_boundaries(int n, std::vector<int> b) {
  if (b.size() < 2 || b.front() != 0 || b.back() != n)
    throw Error(Errc::BadDivision, "boundaries must run from 0 to n");
  for (size_t i = 1; i < b.size(); ++i)
    if (b[i] <= b[i - 1]) throw Error(Errc::BadDivision, "boundaries not strictly increasing");
  SymDivision d;
  d.boundaries = std::move(b);
  return d;
}

SymDivision SymDivision::merged(int i) const {
  if (i < 0 || i + 1 >= parts()) throw Error(Errc::OutOfRange, "no consecutive pair at " + std::to_string(i));
  SymDivision d;
  d.boundaries = boundaries;
  d.boundaries.erase(d.boundaries.begin() + i + 1);
  return d;
}

void DivisionSequence::validate(int n) const {
  if (chain.empty()) throw Error(Errc::BadDivision, "empty division chain");
  if (chain.front().parts() != n) throw Error(Errc::BadDivision, "chain must start at the finest division");
  if (chain.back().parts() != 1) throw Error(Errc::BadDivision, "chain must end at the coarsest division");
  for (size_t s = 1; s < chain.size(); ++s) {
    const auto& prev = chain[s - 1].boundaries;
    const auto& cur = chain[s].boundaries;
    if (cur.size() + 1 != prev.size())
      throw Error(Errc::BadDivision, "chain step " + std::to_string(s) + " removes != 1 boundary");
    if (!std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()))
      throw Error(Errc::BadDivision, "chain step " + std::to_string(s) + " is not a coarsening");
  }
}

int distinct_rows_masked(const SymBitMatrix& m, int row_lo, int row_hi, const Bitset& col_mask) {
  if (!col_mask.any()) return 0;
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  int distinct = 0;
  for (int r = row_lo; r < row_hi; ++r) {
    uint64_t h = m.rows[r].masked_hash(col_mask);
    auto& bucket = buckets[h];
    bool found = false;
    for (int prev : bucket)
      if (m.rows[prev].masked_equal(m.rows[r], col_mask)) {
        found = true;
        break;
      }
    if (!found) {
      bucket.push_back(r);
      ++distinct;
    }
  }
  return distinct;
}

namespace {

// Mask of the columns NOT covered by blocks [blo, bhi] of d (clamped).
Bitset outside_mask(const SymDivision& d, int blo, int bhi) {
  int n = d.n();
  Bitset mask(n);
  int lo = std::max(0, blo), hi = std::min(d.parts() - 1, bhi);
  int cut_lo = lo <= hi ? d.block_lo(lo) : n;
  int cut_hi = lo <= hi ? d.block_hi(hi) : n;
  for (int c = 0; c < cut_lo; ++c) mask.set(c);
  for (int c = cut_hi; c < n; ++c) mask.set(c);
  return mask;
}

}  // namespace

bool is_part_wide(const SymBitMatrix& m, const SymDivision& d, int i, int k) {
  if (i < 0 || i >= d.parts()) throw Error(Errc::OutOfRange, "block index out of range");
  if (k < 1) throw Error(Errc::OutOfRange, "k must be >= 1");
  if (d.block_size(i) < k) return false;  // fewer rows than required distinct ones
  if (k >= d.parts()) return false;       // some window covers every block
  for (int j = i - k + 1; j <= i; ++j) {
    Bitset mask = outside_mask(d, j, j + k - 1);
    if (distinct_rows_masked(m, d.block_lo(i), d.block_hi(i), mask) < k) return false;
  }
  return true;
}

int distinct_rows_outside_band(const SymBitMatrix& m, const SymDivision& d, int i, int k) {
  if (i < 0 || i >= d.parts()) throw Error(Errc::OutOfRange, "block index out of range");
  Bitset mask = outside_mask(d, i - k + 1, i + k - 1);
  return distinct_rows_masked(m, d.block_lo(i), d.block_hi(i), mask);
}

bool is_division_diagonal(const SymBitMatrix& m, const SymDivision& d, int q) {
  // the matrix is symmetric, so column wideness mirrors row wideness
  for (int i = 0; i < d.parts(); ++i)
    if (is_part_wide(m, d, i, q)) return false;
  return true;
}

GreedyDivisionResult greedy_diagonal_sequence(const SymBitMatrix& m, int q) {
  if (q < 2) throw Error(Errc::OutOfRange, "q must be >= 2");
  GreedyDivisionResult res;
  SymDivision cur = SymDivision::finest(m.n);
  res.chain.chain.push_back(cur);
  if (m.n == 0) throw Error(Errc::OutOfRange, "empty matrix");
  while (cur.parts() > 1) {
    int chosen = -1;
    for (int i = 0; i + 1 < cur.parts(); ++i) {
      SymDivision cand = cur.merged(i);
      // only the merged block can have become q-wide
      if (!is_part_wide(m, cand, i, q)) {
        chosen = i;
        cur = std::move(cand);
        break;
      }
    }
    if (chosen < 0) {
      res.stuck = true;
      // pairwise merge; odd part counts fold the last three blocks together
      std::vector<int> b;
      b.push_back(0);
      int p = cur.parts();
      for (int i = 2; i < p; i += 2) b.push_back(cur.block_lo(i));
      if (p % 2 == 1 && b.size() > 1) b.pop_back();
      b.push_back(m.n);
      res.stuck_witness = SymDivision::from_boundaries(m.n, std::move(b));
      return res;
    }
    res.chain.chain.push_back(cur);
  }
  return res;
}

namespace {

// Equal-row classes of every block of d outside its central band, as a
// symmetric vertex partition. Classes within a block are listed by the
// lexicographic rank of their masked row vector.
std::vector<std::vector<int>> band_classes(const SymBitMatrix& m, const SymDivision& d, int q) {
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < d.parts(); ++i) {
    Bitset mask = outside_mask(d, i - q + 1, i + q - 1);
    std::vector<int> rows(d.block_size(i));
    std::iota(rows.begin(), rows.end(), d.block_lo(i));
    // group equal masked rows, ordered lexicographically
    std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) {
      for (int c = mask.next(0); c != -1; c = mask.next(c + 1)) {
        bool ba = m.rows[a].test(c), bb = m.rows[b].test(c);
        if (ba != bb) return bb;  // 0 before 1
      }
      return false;
    });
    std::vector<int> cls = {rows[0]};
    for (size_t r = 1; r < rows.size(); ++r) {
      if (m.rows[rows[r]].masked_equal(m.rows[rows[r - 1]], mask)) {
        cls.push_back(rows[r]);
      } else {
        classes.push_back(std::move(cls));
        cls = {rows[r]};
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

PartitionSequence sequence_from_divisions(const SymBitMatrix& m, const DivisionSequence& chain,
                                          int q) {
  chain.validate(m.n);
  for (size_t s = 0; s < chain.chain.size(); ++s)
    if (!is_division_diagonal(m, chain.chain[s], q))
      throw Error(Errc::NotDiagonal, "division at chain step " + std::to_string(s) +
                                         " is not " + std::to_string(q) + "-diagonal");

  PartitionSequence seq;
  // union-find keeping the minimum member as root
  std::vector<int> dsu(m.n), bsize(m.n, 1);
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](int v) {
    while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    seq.merges.emplace_back(a, b);
    dsu[b] = a;
    bsize[a] += bsize[b];
    return a;
  };

  for (size_t s = 1; s < chain.chain.size(); ++s) {
    auto classes = band_classes(m, chain.chain[s], q);
    for (const auto& cls : classes) {
      // constituent blocks ordered by representative
      std::vector<int> reps;
      for (int v : cls) {
        int r = find(v);
        if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
      }
      std::sort(reps.begin(), reps.end());
      int acc = reps[0];
      for (size_t j = 1; j < reps.size(); ++j) acc = unite(acc, reps[j]);
      // refinement invariant: the class is now exactly one block
      if (bsize[find(acc)] != static_cast<int>(cls.size()))
        throw Error(Errc::BadDivision, "division chain does not refine its band classes");
    }
  }
  // trivial tail in case the coarsest classes left several blocks
  int root = find(0);
  for (int v = 1; v < m.n; ++v)
    if (find(v) != root) root = unite(root, v);
  return seq;
}

int matrix_partition_stretch(const SymBitMatrix& m, const VertexPartition& p) {
  if (p.n != m.n) throw Error(Errc::BadPartition, "partition size mismatch");
  int k = p.size();
  std::vector<Bitset> masks(k, Bitset(m.n));
  std::vector<int> lo(k), hi(k);
  for (int b = 0; b < k; ++b) {
    lo[b] = p.blocks[b].front();
    hi[b] = p.blocks[b].back();
    for (int v : p.blocks[b]) masks[b].set(v);
  }
  // zone (rows of a) x (cols of b) is constant iff every row slice is all-0
  // or every row slice is all-1
  auto zone_constant = [&](int a, int b) {
    bool all0 = true, all1 = true;
    for (int r : p.blocks[a]) {
      if (m.rows[r].intersects(masks[b])) all0 = false;
      if (!m.rows[r].contains_all(masks[b])) all1 = false;
      if (!all0 && !all1) return false;
    }
    return all0 || all1;
  };
  int worst = 0;
  for (int a = 0; a < k; ++a) {
    int nlo = lo[a], nhi = hi[a];  // span of the symmetric part and all
                                   // non-constant column parts
    for (int b = 0; b < k; ++b) {
      if (b == a) continue;
      if (!zone_constant(a, b)) {
        nlo = std::min(nlo, lo[b]);
        nhi = std::max(nhi, hi[b]);
      }
    }
    int cnt = 0;
    for (int b = 0; b < k; ++b)
      if (b != a && lo[b] <= nhi && nlo <= hi[b]) ++cnt;
    worst = std::max(worst, cnt);
  }
  return worst;
}

int matrix_sequence_stretch(const SymBitMatrix& m, const PartitionSequence& seq) {
  if (static_cast<int>(seq.merges.size()) != std::max(0, m.n - 1))
    throw Error(Errc::BadSequence, "sequence length mismatch");
  PartitionState st(m.n);
  int worst = matrix_partition_stretch(m, st.snapshot());
  for (auto [a, b] : seq.merges) {
    st.merge(a, b);
    worst = std::max(worst, matrix_partition_stretch(m, st.snapshot()));
  }
  return worst;
}

unsigned long long approx_bound(int k) {
  // 32(9k+1)^3 saturated
  unsigned __int128 t = 9ull * k + 1;
  unsigned __int128 b = 32 * t * t * t;
  unsigned __int128 cap = ~0ull;
  return static_cast<unsigned long long>(b > cap ? cap : b);
}

ApproxOutcome approx_stw(const SymBitMatrix& m, int k) {
  if (k < 1) throw Error(Errc::OutOfRange, "k must be >= 1");
  int q = 2 * (9 * k + 1);
  ApproxOutcome out;
  out.bound = approx_bound(k);
  GreedyDivisionResult greedy = greedy_diagonal_sequence(m, q);
  if (greedy.stuck) {
    out.success = false;
    out.refusal_witness = greedy.stuck_witness;
    out.wide_k = 9 * k;
    return out;
  }
  out.success = true;
  out.witness = sequence_from_divisions(m, greedy.chain, q);
  out.verified_stretch = matrix_sequence_stretch(m, out.witness);
  if (static_cast<unsigned long long>(out.verified_stretch) > out.bound)
    throw Error(Errc::BadSequence, "verified stretch exceeds the certified bound");
  return out;
}

}  // namespace stw
