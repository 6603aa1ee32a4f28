#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "facticity/bitcodec.hpp"
#include "facticity/microvm.hpp"
#include "facticity/report.hpp"

namespace facticity {

// Everything the enumeration learned about one output x.  Lengths of code
// parts fit in 32 bits with room to spare (inputs are at most 30 bits).
struct CodeEntry {
  std::uint64_t k2 = 0;   // minimal |frame(i)| + |p| over successful runs
  std::uint64_t phi = 0;  // minimal raw |i| among k2-optimal runs
  std::optional<std::uint64_t> k1;  // minimal |w| among runs with p = epsilon
  bool certified = false;           // |x| + 1 <= L_max: the minimum is exact
  // Distinct (|i|, |p|) pairs achieving k2, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> witnesses;
  // For each total length that produced x: the minimal raw |i| at that
  // total, ascending by total.  Feeds the sophistication queries.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> models_by_total;
  // min over successful runs of sd_len(|i|) + (|frame(i)| + |p|); feeds the
  // coarse-sophistication query.
  std::uint64_t min_penalized = 0;
};

// Immutable result of enumerating every input w with |w| <= max_code_len.
// Safe for shared concurrent reads.
class CodeTable {
 public:
  CodeTable(std::uint64_t max_code_len, Budget budget)
      : max_code_len_(max_code_len), budget_(budget) {}

  std::uint64_t max_code_len() const { return max_code_len_; }
  const Budget& budget() const { return budget_; }
  std::size_t size() const { return entries_.size(); }

  // Table hit or null.  Hits are exact minima over all inputs of length
  // <= max_code_len under this budget.
  const CodeEntry* find(const BitString& x) const;

  // Entry for any x with |x| <= budget().max_output: the stored entry, or
  // the synthesized identity fallback {k2 = |x|+1, phi = 0, uncertified}.
  CodeEntry lookup(const BitString& x) const;

  // Entries in shortlex order of x; the canonical presentation.
  std::vector<std::pair<BitString, CodeEntry>> sorted_entries() const;

  // Canonical serialization of the whole table; byte-identical tables are
  // equal tables.
  std::string canonical_bytes() const;

 private:
  friend CodeTable enumerate(std::uint64_t, const Budget&, unsigned);

  std::uint64_t max_code_len_;
  Budget budget_;
  std::unordered_map<BitString, CodeEntry, BitStringHash> entries_;
};

// Runs the machine on every input of length <= max_code_len (at most 30,
// about 2^31 runs) and tabulates every successful output no longer than
// b.max_output.  Partitioned across `threads` workers (0 = resolve from
// FACTICITY_THREADS or machine parallelism); the merge is associative and
// pointwise, so the table is identical for every worker count.
CodeTable enumerate(std::uint64_t max_code_len, const Budget& b,
                    unsigned threads = 0);

// Model share of x per the table, with its certification flag.
std::pair<std::uint64_t, bool> facticity_of(const CodeTable& t, const BitString& x);

// Minimal raw index length over successful pairs within slack bits of the
// optimum: min{|i| : |frame(i)| + |p| <= k2(x) + slack}.  Exact when
// k2(x) + slack <= max_code_len; otherwise the enumerated upper bound.
std::uint64_t soph(const CodeTable& t, const BitString& x, std::uint64_t slack);

// min over successful pairs of (2|frame(i)| + |p|) - k2(x).  The subtrahend
// is the one-part complexity C(x), which equals k2(x) on this table by
// construction.
std::int64_t csoph(const CodeTable& t, const BitString& x);

// Report fields derived from one table entry for a string of length n.
FacticityReport entry_report(const CodeEntry& e, std::uint64_t n);

// Exact-table report for x (see lookup for the fallback on uncovered x).
FacticityReport exact_report(const CodeTable& t, const BitString& x);

struct Sample {
  BitString x;
  std::uint64_t k2 = 0;
};

// Draws inputs w (uniform length in [1, L], then uniform bits), keeps the
// successful outputs, annotates each with its table k2.  Deterministic per
// seed.  The table overload reuses an existing enumeration.
std::vector<Sample> universal_sample(const CodeTable& t, std::size_t n_samples,
                                     std::uint64_t seed);
std::vector<Sample> universal_sample(std::uint64_t max_code_len,
                                     std::size_t n_samples, const Budget& b,
                                     std::uint64_t seed);

}  // namespace facticity
