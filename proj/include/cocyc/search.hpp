#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cocyc/sign_matrix.hpp"

// Exhaustive enumeration of all 2^{4t} coboundary masks. Candidates are
// visited in Gray-code order so each step XORs a single precomputed
// coboundary pattern into the packed matrix and refreshes the per-row
// popcounts; the row-sum test is the inner-loop filter and the full Gram
// check runs on hits only.

namespace cocyc {

// Incremental state: the assembled matrix of the current mask plus per-row
// popcounts and the count of rows failing the row-sum condition.
class SearchState {
 public:
  SearchState(int t, bool include_rho = true);
  SearchState(int t, const std::vector<uint64_t>& base_mask, bool include_rho = true);

  int t() const { return t_; }
  void flip(int d);  // toggle index d (1-based) and update the matrix
  bool rowsum_ok() const { return bad_rows_ == 0; }
  const std::vector<uint64_t>& mask_words() const { return mask_; }
  std::vector<int> mask_set() const;
  SignMatrix matrix() const;
  bool full_ok() const;  // Gram check on the current matrix

 private:
  int t_, n_, wpr_;
  int half_;
  int bad_rows_;
  std::vector<uint64_t> state_;   // n_ * wpr_ words
  std::vector<uint64_t> deltas_;  // 4t flip patterns, n_ * wpr_ words each
  std::vector<int> negcnt_;
  std::vector<uint64_t> mask_;
};

struct SearchSummary {
  int t = 0;
  bool quotient_v = false;
  bool aborted = false;
  unsigned long long visited = 0;
  unsigned long long hits = 0;
  unsigned long long hits_with_index1 = 0;
  double seconds = 0.0;
  std::string space_size;  // decimal 2^{4t} (full mask space)
};

// Returning false from the sink aborts the sweep; the summary then carries
// the partial counts with aborted set.
using HitSink = std::function<bool(const std::vector<int>& indices)>;

// Visits every mask exactly once. With quotient_v set, only V-canonical
// classes are enumerated (bits 2 and 3 pinned to zero, one representative
// per class, a 4x cut) and each hit is emitted as its V-canonical set.
SearchSummary search_exhaustive(int t, const HitSink& sink, bool quotient_v = false);

// Enumerates exactly the masks whose top prefix_bits bits equal
// prefix_value; the union over all prefix values of a width partitions the
// full space.
SearchSummary search_partition(int t, int prefix_bits, unsigned long long prefix_value,
                               const HitSink& sink, bool quotient_v = false);

// Round-robins partitions over `workers` threads and merges the hit sets
// into a deterministic sorted list.
SearchSummary search_parallel(int t, int workers, std::vector<std::vector<int>>& hits_out,
                              bool quotient_v = false);

// Hits file: header "# t=<t> total=<2^{4t}> hits=<n>", then one ascending
// comma-separated index set per line.
void write_hits_file(std::ostream& os, const SearchSummary& summary,
                     const std::vector<std::vector<int>>& hits);
// Reads index-set lines, skipping '#' comment lines.
std::vector<std::vector<int>> read_sets_file(std::istream& is, int t);

}  // namespace cocyc
