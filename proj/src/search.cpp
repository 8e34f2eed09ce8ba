#include "cocyc/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iostream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cocyc/diagram.hpp"
#include "cocyc/generators.hpp"
#include "cocyc/group.hpp"

namespace cocyc {

namespace {

std::string pow2_decimal(int exponent) {
  if (exponent >= 127) throw std::invalid_argument("mask space exceeds 2^126");
  unsigned __int128 v = static_cast<unsigned __int128>(1) << exponent;
  std::string out;
  while (v) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out.empty() ? "1" : out;
}

// Multi-word step counter for the reflected Gray code: the bit flipped at
// step s is the number of trailing zeros of s.
class GrayCounter {
 public:
  explicit GrayCounter(int bits) : bits_(bits), w_((bits + 63) / 64 + 1, 0) {}

  // Increments and returns the trailing-zero count of the new value;
  // a return >= bits_ means the sweep is complete.
  int next() {
    for (size_t i = 0; i < w_.size(); ++i)
      if (++w_[i] != 0) return static_cast<int>(64 * i) + std::countr_zero(w_[i]);
    return bits_;  // unreachable: the counter has a spare word
  }

 private:
  int bits_;
  std::vector<uint64_t> w_;
};

}  // namespace

SearchState::SearchState(int t, bool include_rho)
    : SearchState(t, std::vector<uint64_t>((4 * t + 63) / 64, 0), include_rho) {}

SearchState::SearchState(int t, const std::vector<uint64_t>& base_mask, bool include_rho)
    : t_(t), n_(4 * t), wpr_((4 * t + 63) / 64), half_(2 * t), bad_rows_(0), mask_(base_mask) {
  require_valid_t(t);
  mask_.resize(static_cast<size_t>(wpr_), 0);

  // Flip patterns of the normalized coboundary generators: the d = 1
  // pattern is the complement of the raw delta pattern, so products track
  // assemble() exactly.
  deltas_.assign(static_cast<size_t>(n_) * n_ * wpr_, 0);
  for (int d = 1; d <= n_; ++d) {
    SignMatrix dm = delta_matrix(d, t);
    if (d == 1) dm.negate_all();
    uint64_t* dst = deltas_.data() + static_cast<size_t>(d - 1) * n_ * wpr_;
    for (int r = 0; r < n_; ++r) {
      auto row = dm.row(r);
      for (int w = 0; w < wpr_; ++w) dst[static_cast<size_t>(r) * wpr_ + w] = row[w];
    }
  }

  SignMatrix base = assemble_mask(mask_, t, include_rho);
  state_.assign(static_cast<size_t>(n_) * wpr_, 0);
  negcnt_.assign(n_, 0);
  for (int r = 0; r < n_; ++r) {
    auto row = base.row(r);
    for (int w = 0; w < wpr_; ++w) state_[static_cast<size_t>(r) * wpr_ + w] = row[w];
    negcnt_[r] = base.neg_count(r);
    if (r > 0 && negcnt_[r] != half_) ++bad_rows_;
  }
}

void SearchState::flip(int d) {
  mask_[(d - 1) >> 6] ^= 1ull << ((d - 1) & 63);
  const uint64_t* dp = deltas_.data() + static_cast<size_t>(d - 1) * n_ * wpr_;
  if (wpr_ == 1) {
    uint64_t* sp = state_.data();
    int bad = bad_rows_;
    sp[0] ^= dp[0];
    negcnt_[0] = std::popcount(sp[0]);
    for (int r = 1; r < n_; ++r) {
      const uint64_t w = sp[r] ^ dp[r];
      sp[r] = w;
      const int c = std::popcount(w);
      bad += (c != half_) - (negcnt_[r] != half_);
      negcnt_[r] = c;
    }
    bad_rows_ = bad;
    return;
  }
  int bad = bad_rows_;
  for (int r = 0; r < n_; ++r) {
    uint64_t* row = state_.data() + static_cast<size_t>(r) * wpr_;
    const uint64_t* drow = dp + static_cast<size_t>(r) * wpr_;
    int c = 0;
    for (int w = 0; w < wpr_; ++w) {
      row[w] ^= drow[w];
      c += std::popcount(row[w]);
    }
    if (r > 0) bad += (c != half_) - (negcnt_[r] != half_);
    negcnt_[r] = c;
  }
  bad_rows_ = bad;
}

std::vector<int> SearchState::mask_set() const {
  std::vector<int> out;
  for (int w = 0; w < wpr_; ++w)
    for (int b = 0; b < 64; ++b)
      if (mask_[w] >> b & 1) out.push_back(64 * w + b + 1);
  return out;
}

SignMatrix SearchState::matrix() const {
  SignMatrix m(n_);
  for (int r = 0; r < n_; ++r)
    m.xor_row(r, {state_.data() + static_cast<size_t>(r) * wpr_, static_cast<size_t>(wpr_)});
  return m;
}

bool SearchState::full_ok() const { return hadamard_full(matrix()); }

namespace {

// V-canonical set of the current hit (quotient mode emission).
std::vector<int> v_canonical_set(const SearchState& st, int t) {
  const Diagram d = v_canonical(diagram_from_set(st.mask_set(), t));
  return set_from_diagram(d);
}

SearchSummary sweep(int t, const std::vector<int>& free_bits,
                    const std::vector<uint64_t>& base_mask, const HitSink& sink,
                    bool quotient_v) {
  const auto start = std::chrono::steady_clock::now();
  SearchSummary summary;
  summary.t = t;
  summary.quotient_v = quotient_v;
  summary.space_size = pow2_decimal(4 * t);

  SearchState st(t, base_mask);
  const auto consider = [&]() -> bool {
    if (!st.rowsum_ok()) return true;
    if (!st.full_ok())
      throw std::logic_error("row-sum hit failed the Gram check; engine state corrupt");
    std::vector<int> set = quotient_v ? v_canonical_set(st, t) : st.mask_set();
    ++summary.hits;
    if (!set.empty() && set.front() == 1) ++summary.hits_with_index1;
    return sink(set);
  };

  summary.visited = 1;
  bool ok = consider();
  if (ok) {
    GrayCounter ctr(static_cast<int>(free_bits.size()));
    const int nbits = static_cast<int>(free_bits.size());
    for (;;) {
      const int b = ctr.next();
      if (b >= nbits) break;
      st.flip(free_bits[b] + 1);
      ++summary.visited;
      if (!consider()) {
        ok = false;
        break;
      }
    }
  }
  summary.aborted = !ok;
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::vector<int> free_bit_list(int t, int reserved_top, bool quotient_v) {
  std::vector<int> bits;
  for (int b = 0; b < 4 * t - reserved_top; ++b) {
    if (quotient_v && (b == 1 || b == 2)) continue;  // indices 2 and 3 pinned
    bits.push_back(b);
  }
  return bits;
}

void warn_large_t(int t) {
  if (t > 7)
    std::cerr << "warning: exhaustive search at t=" << t << " visits 2^" << 4 * t
              << " masks; expect a very long run\n";
}

}  // namespace

SearchSummary search_exhaustive(int t, const HitSink& sink, bool quotient_v) {
  require_valid_t(t);
  warn_large_t(t);
  const std::vector<uint64_t> base((4 * t + 63) / 64, 0);
  return sweep(t, free_bit_list(t, 0, quotient_v), base, sink, quotient_v);
}

SearchSummary search_partition(int t, int prefix_bits, unsigned long long prefix_value,
                               const HitSink& sink, bool quotient_v) {
  require_valid_t(t);
  const int n = 4 * t;
  if (prefix_bits < 0 || prefix_bits > n)
    throw std::invalid_argument("prefix width out of range");
  if (prefix_bits < 64 && prefix_value >> prefix_bits)
    throw std::invalid_argument("prefix value wider than the prefix");
  if (quotient_v && prefix_bits > n - 3)
    throw std::invalid_argument("prefix overlaps the pinned quotient bits");

  std::vector<uint64_t> base((n + 63) / 64, 0);
  for (int i = 0; i < prefix_bits; ++i)
    if (prefix_value >> i & 1) {
      const int b = n - prefix_bits + i;
      base[b >> 6] |= 1ull << (b & 63);
    }
  return sweep(t, free_bit_list(t, prefix_bits, quotient_v), base, sink, quotient_v);
}

SearchSummary search_parallel(int t, int workers, std::vector<std::vector<int>>& hits_out,
                              bool quotient_v) {
  require_valid_t(t);
  workers = std::max(1, workers);
  if (workers == 1) {
    SearchSummary summary = search_exhaustive(
        t,
        [&](const std::vector<int>& s) {
          hits_out.push_back(s);
          return true;
        },
        quotient_v);
    std::sort(hits_out.begin(), hits_out.end());
    return summary;
  }

  int prefix_bits = 0;
  while ((1 << prefix_bits) < workers) ++prefix_bits;
  prefix_bits = std::min(prefix_bits + 1, std::max(0, 4 * t - (quotient_v ? 3 : 0) - 1));
  const int partitions = 1 << prefix_bits;

  std::vector<std::vector<std::vector<int>>> hits_per(partitions);
  std::vector<SearchSummary> summaries(partitions);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (int p = w; p < partitions; p += workers) {
        summaries[p] = search_partition(
            t, prefix_bits, static_cast<unsigned long long>(p),
            [&hits = hits_per[p]](const std::vector<int>& s) {
              hits.push_back(s);
              return true;
            },
            quotient_v);
      }
    });
  for (auto& th : pool) th.join();

  SearchSummary total;
  total.t = t;
  total.quotient_v = quotient_v;
  total.space_size = pow2_decimal(4 * t);
  double max_seconds = 0.0;
  for (int p = 0; p < partitions; ++p) {
    total.visited += summaries[p].visited;
    total.hits += summaries[p].hits;
    total.hits_with_index1 += summaries[p].hits_with_index1;
    total.aborted = total.aborted || summaries[p].aborted;
    max_seconds = std::max(max_seconds, summaries[p].seconds);
    for (auto& h : hits_per[p]) hits_out.push_back(std::move(h));
  }
  total.seconds = max_seconds;
  std::sort(hits_out.begin(), hits_out.end());
  return total;
}

void write_hits_file(std::ostream& os, const SearchSummary& summary,
                     const std::vector<std::vector<int>>& hits) {
  os << "# t=" << summary.t << " total=" << summary.space_size << " hits=" << summary.hits
     << '\n';
  for (const auto& h : hits) os << format_index_set(h) << '\n';
}

std::vector<std::vector<int>> read_sets_file(std::istream& is, int t) {
  std::vector<std::vector<int>> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_index_set(line, t));
  }
  return out;
}

}  // namespace cocyc
