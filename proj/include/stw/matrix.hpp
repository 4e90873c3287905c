#pragma once

#include <string>
#include <vector>

#include "stw/graph.hpp"

namespace stw {

struct SymBitMatrix {
  int n = 0;
  std::vector<Bitset> rows;

  static SymBitMatrix zero(int n) {
    SymBitMatrix m;
    m.n = n;
    m.rows.assign(n, Bitset(n));
    return m;
  }
  bool get(int i, int j) const { return rows[i].test(j); }
  void set_sym(int i, int j, bool v) {
    if (v) {
      rows[i].set(j);
      rows[j].set(i);
    } else {
      rows[i].reset(j);
      rows[j].reset(i);
    }
  }
  void check_symmetric() const;
};

SymBitMatrix adjacency_matrix(const OrderedGraph& g);

// Symmetric division into consecutive blocks: cut positions
// 0 = b_0 < b_1 < ... < b_p = n. Block i covers [b_i, b_{i+1}).
struct SymDivision {
  std::vector<int> boundaries;

  static SymDivision finest(int n);
  static SymDivision coarsest(int n);
  static SymDivision from_boundaries(int n, std::vector<int> b);

  int parts() const { return static_cast<int>(boundaries.size()) - 1; }
  int n() const { return boundaries.back(); }
  int block_lo(int i) const { return boundaries[i]; }
  int block_hi(int i) const { return boundaries[i + 1]; }  // exclusive
  int block_size(int i) const { return block_hi(i) - block_lo(i); }
  SymDivision merged(int i) const;  // merge blocks i and i+1
};

struct DivisionSequence {
  std::vector<SymDivision> chain;  // finest (p=n) first, coarsest (p=1) last
  void validate(int n) const;
};

// Distinct row vectors of rows [row_lo, row_hi) restricted to the columns
// where col_mask is set; 0 when col_mask is empty.
int distinct_rows_masked(const SymBitMatrix& m, int row_lo, int row_hi, const Bitset& col_mask);

// k-wideness of block i: every window of k consecutive column blocks that
// contains block i leaves at least k distinct rows in block i. Out-of-range
// window positions denote empty blocks.
bool is_part_wide(const SymBitMatrix& m, const SymDivision& d, int i, int k);

// Distinct rows of block i outside the fixed central band of column blocks
// i-k+1 .. i+k-1.
int distinct_rows_outside_band(const SymBitMatrix& m, const SymDivision& d, int i, int k);

bool is_division_diagonal(const SymBitMatrix& m, const SymDivision& d, int q);

struct GreedyDivisionResult {
  bool stuck = false;
  DivisionSequence chain;     // on success the full chain; else the prefix built
  SymDivision stuck_witness;  // pairwise-merged division, only when stuck
};

// Greedy left-to-right merging keeping every division q-diagonal. When no
// merge preserves q-diagonality the pairwise-merged division is returned; it
// is (q/2 - 1)-wide.
GreedyDivisionResult greedy_diagonal_sequence(const SymBitMatrix& m, int q);

// Partition sequence realizing a chain of q-diagonal divisions, with blocks
// split into equal-row classes outside the central band. Matrix stretch of
// every intermediate partition is at most 4q^3.
PartitionSequence sequence_from_divisions(const SymBitMatrix& m, const DivisionSequence& chain,
                                          int q);

// Stretch value of a symmetric row/column partition of m.
int matrix_partition_stretch(const SymBitMatrix& m, const VertexPartition& p);

int matrix_sequence_stretch(const SymBitMatrix& m, const PartitionSequence& seq);

struct ApproxOutcome {
  bool success = false;
  // success payload
  PartitionSequence witness;
  int verified_stretch = 0;
  unsigned long long bound = 0;  // 32(9k+1)^3, saturated at 2^64-1
  // refusal payload
  SymDivision refusal_witness;
  int wide_k = 0;  // the witness division is wide_k-wide (= 9k)
};

unsigned long long approx_bound(int k);

// Approximation pipeline: greedy q-diagonal chain with q = 2(9k+1), then the
// division-to-sequence construction; refusal carries a 9k-wide division.
ApproxOutcome approx_stw(const SymBitMatrix& m, int k);

}  // namespace stw
