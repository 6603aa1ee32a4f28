#include "facticity/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "facticity/intmath.hpp"
#include "facticity/parallel.hpp"
#include "facticity/rng.hpp"

namespace facticity {

namespace {

constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

// Per-output accumulator while a scan is running.
struct Build {
  std::uint64_t k2 = kUnset;
  std::uint64_t k1 = kUnset;
  std::uint64_t pen = kUnset;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> wit;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> models;
};

using BuildMap = std::unordered_map<BitString, Build, BitStringHash>;

void record(Build& b, std::uint32_t ilen, std::uint32_t plen, std::uint64_t wlen) {
  if (wlen < b.k2) {
    b.k2 = wlen;
    b.wit.assign(1, {ilen, plen});
  } else if (wlen == b.k2) {
    const std::pair<std::uint32_t, std::uint32_t> key{ilen, plen};
    if (std::find(b.wit.begin(), b.wit.end(), key) == b.wit.end()) {
      b.wit.push_back(key);
    }
  }
  if (plen == 0 && wlen < b.k1) b.k1 = wlen;
  const std::uint64_t pen = sd_len(ilen) + wlen;
  if (pen < b.pen) b.pen = pen;
  auto it = std::find_if(b.models.begin(), b.models.end(),
                         [&](const auto& m) { return m.first == wlen; });
  if (it == b.models.end()) {
    b.models.emplace_back(static_cast<std::uint32_t>(wlen), ilen);
  } else if (ilen < it->second) {
    it->second = ilen;
  }
}

// Pointwise minima and unions; commutative and associative, so the fold
// result is independent of how the input range was partitioned.
void merge_into(Build& dst, Build&& src) {
  if (src.k2 < dst.k2) {
    dst.k2 = src.k2;
    dst.wit = std::move(src.wit);
  } else if (src.k2 == dst.k2) {
    for (const auto& key : src.wit) {
      if (std::find(dst.wit.begin(), dst.wit.end(), key) == dst.wit.end()) {
        dst.wit.push_back(key);
      }
    }
  }
  dst.k1 = std::min(dst.k1, src.k1);
  dst.pen = std::min(dst.pen, src.pen);
  for (const auto& m : src.models) {
    auto it = std::find_if(dst.models.begin(), dst.models.end(),
                           [&](const auto& d) { return d.first == m.first; });
    if (it == dst.models.end()) {
      dst.models.push_back(m);
    } else if (m.second < it->second) {
      it->second = m.second;
    }
  }
}

// Inputs are indexed by the integer whose binary expansion is "1" + w, so
// index order is exactly shortlex order over inputs: by length, then value.
void scan_range(std::uint64_t lo, std::uint64_t hi, const Budget& budget,
                BuildMap& map) {
  BitString w;
  w.reserve(32);
  for (std::uint64_t n = lo; n < hi; ++n) {
    const std::uint64_t len = floor_log2(n);
    w.clear();
    for (std::uint64_t t = len; t-- > 0;) {
      w.push_back(static_cast<int>((n >> t) & 1));
    }
    RunOutcome res = run(w, budget);
    if (!res.ok()) continue;
    std::size_t pos = 0;
    const auto index = decode_sd_at(w.bits(), pos);
    record(map[std::move(res.output)], static_cast<std::uint32_t>(index.size()),
           static_cast<std::uint32_t>(w.size() - pos), w.size());
  }
}

void check_budget(const Budget& b, const char* who) {
  if (b.max_steps < 1 || b.max_output < 1) {
    throw DomainError(std::string(who) + ": budget fields must both be >= 1");
  }
}

}  // namespace

CodeTable enumerate(std::uint64_t max_code_len, const Budget& b, unsigned threads) {
  if (max_code_len < 1) throw DomainError("enumerate: max_code_len must be >= 1");
  if (max_code_len > 30) throw CapacityError("enumerate: max_code_len is capped at 30");
  check_budget(b, "enumerate");

  const std::uint64_t end = std::uint64_t{1} << (max_code_len + 1);
  const std::uint64_t total = end - 1;
  unsigned workers = resolve_threads(threads);
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, total));

  std::vector<BuildMap> maps(workers);
  if (workers == 1) {
    scan_range(1, end, b, maps[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
      const std::uint64_t lo = 1 + (total * i) / workers;
      const std::uint64_t hi = 1 + (total * (i + 1)) / workers;
      pool.emplace_back(scan_range, lo, hi, std::cref(b), std::ref(maps[i]));
    }
    for (auto& th : pool) th.join();
  }

  for (unsigned i = 1; i < workers; ++i) {
    for (auto& [x, bld] : maps[i]) {
      merge_into(maps[0][x], std::move(bld));
    }
    maps[i].clear();
  }

  CodeTable table(max_code_len, b);
  table.entries_.reserve(maps[0].size());
  while (!maps[0].empty()) {
    auto node = maps[0].extract(maps[0].begin());
    Build& bld = node.mapped();
    CodeEntry e;
    e.k2 = bld.k2;
    e.phi = kUnset;
    for (const auto& [ilen, plen] : bld.wit) {
      e.phi = std::min<std::uint64_t>(e.phi, ilen);
    }
    if (bld.k1 != kUnset) e.k1 = bld.k1;
    e.certified = node.key().size() + 1 <= max_code_len;
    std::sort(bld.wit.begin(), bld.wit.end());
    std::sort(bld.models.begin(), bld.models.end());
    e.witnesses = std::move(bld.wit);
    e.models_by_total = std::move(bld.models);
    e.min_penalized = bld.pen;
    table.entries_.emplace(std::move(node.key()), std::move(e));
  }
  return table;
}

const CodeEntry* CodeTable::find(const BitString& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? nullptr : &it->second;
}

CodeEntry CodeTable::lookup(const BitString& x) const {
  if (x.size() > budget_.max_output) {
    throw DomainError("lookup: |x| exceeds the table's max_output");
  }
  if (const CodeEntry* e = find(x)) return *e;
  // Identity fallback.  Uncovered implies |x| + 1 > max_code_len, so the
  // identity value is an upper bound, never a certified minimum.
  const std::uint64_t n = x.size();
  CodeEntry e;
  e.k2 = n + 1;
  e.phi = 0;
  e.certified = false;
  e.witnesses = {{0, static_cast<std::uint32_t>(n)}};
  e.models_by_total = {{static_cast<std::uint32_t>(n + 1), 0}};
  e.min_penalized = sd_len(0) + n + 1;
  return e;
}

std::vector<std::pair<BitString, CodeEntry>> CodeTable::sorted_entries() const {
  std::vector<std::pair<BitString, CodeEntry>> out;
  out.reserve(entries_.size());
  for (const auto& [x, e] : entries_) out.emplace_back(x, e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return ShortlexLess{}(a.first, b.first);
  });
  return out;
}

std::string CodeTable::canonical_bytes() const {
  std::string out;
  out += "codetable max_code_len=" + std::to_string(max_code_len_) +
         " max_steps=" + std::to_string(budget_.max_steps) +
         " max_output=" + std::to_string(budget_.max_output) + "\n";
  for (const auto& [x, e] : sorted_entries()) {
    out += "x=" + x.to_text();
    out += " k2=" + std::to_string(e.k2);
    out += " phi=" + std::to_string(e.phi);
    out += " k1=" + (e.k1 ? std::to_string(*e.k1) : std::string("-"));
    out += " certified=" + std::string(e.certified ? "1" : "0");
    out += " witnesses=";
    for (const auto& [ilen, plen] : e.witnesses) {
      out += std::to_string(ilen) + ":" + std::to_string(plen) + ",";
    }
    out += " models=";
    for (const auto& [total, ilen] : e.models_by_total) {
      out += std::to_string(total) + ":" + std::to_string(ilen) + ",";
    }
    out += " penalized=" + std::to_string(e.min_penalized);
    out += "\n";
  }
  return out;
}

std::pair<std::uint64_t, bool> facticity_of(const CodeTable& t, const BitString& x) {
  const CodeEntry e = t.lookup(x);
  return {e.phi, e.certified};
}

std::uint64_t soph(const CodeTable& t, const BitString& x, std::uint64_t slack) {
  const CodeEntry* e = t.find(x);
  if (e == nullptr || !e->certified) {
    throw UncertifiedError("soph: x is not certified in this table");
  }
  const std::uint64_t limit = e->k2 + slack;
  std::uint64_t best = kUnset;
  for (const auto& [total, ilen] : e->models_by_total) {
    if (total <= limit && ilen < best) best = ilen;
  }
  return best;  // the k2 witnesses always qualify, so best is set
}

std::int64_t csoph(const CodeTable& t, const BitString& x) {
  const CodeEntry* e = t.find(x);
  if (e == nullptr || !e->certified) {
    throw UncertifiedError("csoph: x is not certified in this table");
  }
  return static_cast<std::int64_t>(e->min_penalized) -
         static_cast<std::int64_t>(e->k2);
}

FacticityReport entry_report(const CodeEntry& e, std::uint64_t n) {
  FacticityReport r;
  r.k2 = e.k2;
  r.phi = e.phi;
  r.delta = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(e.k2);
  r.rho = static_cast<std::int64_t>(e.k2) - static_cast<std::int64_t>(sd_len(e.phi));
  r.label = taxonomy_label(e.phi, e.k2, n, derived_block_size(n));
  r.certified = e.certified;
  return r;
}

FacticityReport exact_report(const CodeTable& t, const BitString& x) {
  return entry_report(t.lookup(x), x.size());
}

std::vector<Sample> universal_sample(const CodeTable& t, std::size_t n_samples,
                                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Sample> out;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const std::uint64_t len = 1 + rng.below(t.max_code_len());
    BitString w;
    w.reserve(len);
    for (std::uint64_t j = 0; j < len; ++j) w.push_back(rng.next_bit());
    RunOutcome res = run(w, t.budget());
    if (!res.ok()) continue;
    const CodeEntry* e = t.find(res.output);
    if (e == nullptr) continue;  // unreachable: successful inputs were enumerated
    out.push_back(Sample{std::move(res.output), e->k2});
  }
  return out;
}

std::vector<Sample> universal_sample(std::uint64_t max_code_len,
                                     std::size_t n_samples, const Budget& b,
                                     std::uint64_t seed) {
  if (max_code_len > 30) {
    throw CapacityError("universal_sample: max_code_len is capped at 30");
  }
  const CodeTable t = enumerate(max_code_len, b);
  return universal_sample(t, n_samples, seed);
}

}  // namespace facticity
