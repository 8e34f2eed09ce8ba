#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "cocyc/diagram.hpp"
#include "cocyc/generators.hpp"
#include "cocyc/search.hpp"

using namespace cocyc;

namespace {

std::set<std::vector<int>> run_search(int t, bool quotient = false) {
  std::set<std::vector<int>> hits;
  search_exhaustive(
      t,
      [&](const std::vector<int>& h) {
        hits.insert(h);
        return true;
      },
      quotient);
  return hits;
}

}  // namespace

TEST_CASE("incremental engine equals the naive full-Gram oracle at t=3") {
  const auto hits = run_search(3);

  std::set<std::vector<int>> naive;
  for (uint64_t mask = 0; mask < 4096; ++mask) {
    const std::vector<uint64_t> mw = {mask};
    if (hadamard_full(assemble_mask(mw, 3, true))) {
      std::vector<int> s;
      for (int d = 1; d <= 12; ++d)
        if (mask >> (d - 1) & 1) s.push_back(d);
      naive.insert(s);
    }
  }
  CHECK(hits == naive);
  CHECK(hits.size() % 4 == 0);
  CHECK(!hits.count(std::vector<int>{}));  // the empty mask is never a hit
}

TEST_CASE("t=5 sweep") {
  unsigned long long count = 0;
  const SearchSummary s = search_exhaustive(5, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  CHECK(s.visited == (1ull << 20));
  CHECK(s.hits == count);
  CHECK(s.hits % 4 == 0);
  CHECK(s.hits > 0);
  CHECK(s.space_size == "1048576");
  CHECK(!s.aborted);
}

TEST_CASE("state integrity against fresh assembly") {
  std::mt19937_64 rng(131);
  SearchState st(5);
  for (int step = 0; step < 1000; ++step) {
    st.flip(1 + static_cast<int>(rng() % 20));
    if (step % 10 == 0) {
      CHECK(st.matrix() == assemble_mask(st.mask_words(), 5, true));
      CHECK(st.rowsum_ok() == hadamard_rowsum(st.matrix()));
    }
  }
}

TEST_CASE("partitions merge to the full hit set and are disjoint") {
  const auto full = run_search(3);

  std::set<std::vector<int>> merged;
  unsigned long long visited = 0;
  for (unsigned long long p = 0; p < 4; ++p) {
    const SearchSummary s = search_partition(3, 2, p, [&](const std::vector<int>& h) {
      CHECK(!merged.count(h));  // disjoint
      merged.insert(h);
      return true;
    });
    visited += s.visited;
  }
  CHECK(visited == 4096);
  CHECK(merged == full);

  // width 0 is the exhaustive sweep
  std::set<std::vector<int>> w0;
  search_partition(3, 0, 0, [&](const std::vector<int>& h) {
    w0.insert(h);
    return true;
  });
  CHECK(w0 == full);

  CHECK_THROWS_AS(search_partition(3, 13, 0, [](const std::vector<int>&) { return true; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_partition(3, 2, 4, [](const std::vector<int>&) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("parallel search is deterministic and matches single-threaded") {
  std::vector<std::vector<int>> seq, par;
  search_parallel(3, 1, seq);
  const SearchSummary s = search_parallel(3, 4, par);
  CHECK(seq == par);
  CHECK(s.visited == 4096);
  CHECK(s.hits == seq.size());
}

TEST_CASE("quotient mode emits one V-canonical representative per class") {
  const auto full = run_search(3);
  const auto quotient = run_search(3, true);

  std::set<std::vector<int>> canon;
  for (const auto& h : full)
    canon.insert(set_from_diagram(v_canonical(diagram_from_set(h, 3))));
  CHECK(quotient == canon);
  CHECK(quotient.size() * 4 == full.size());
}

TEST_CASE("sink abort reports partial counts") {
  unsigned long long delivered = 0;
  const SearchSummary s = search_exhaustive(3, [&](const std::vector<int>&) {
    ++delivered;
    return delivered < 5;
  });
  CHECK(s.aborted);
  CHECK(s.hits == 5);
  CHECK(s.visited < 4096);
}

TEST_CASE("hits file io") {
  std::vector<std::vector<int>> hits;
  const SearchSummary s = search_parallel(3, 2, hits);

  std::ostringstream os;
  write_hits_file(os, s, hits);
  const std::string text = os.str();
  CHECK(text.rfind("# t=3 total=4096 hits=", 0) == 0);

  std::istringstream is(text);
  const auto parsed = read_sets_file(is, 3);
  CHECK(parsed == hits);
}
