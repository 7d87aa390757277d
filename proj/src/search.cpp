#include "spectra/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "spectra/error.hpp"
#include "spectra/integer_math.hpp"
#include "spectra/kernels.hpp"

namespace spectra::search {

namespace {

using kernels::Count;
using RowIndex = std::uint32_t;

struct Family {
  std::vector<Row> rows;
  std::vector<std::uint64_t> row_gcd;

  std::size_t index_of(const Row& row) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), row);
    if (it == rows.end() || *it != row) return rows.size();
    return static_cast<std::size_t>(it - rows.begin());
  }
};

Family make_family(const SearchBounds& bounds) {
  Family fam;
  fam.rows = row_family(bounds);
  fam.row_gcd.reserve(fam.rows.size());
  for (const Row& r : fam.rows) {
    std::uint64_t g = 0;
    for (Value v : r) g = gcd_u64(g, static_cast<std::uint64_t>(v));
    fam.row_gcd.push_back(g);
  }
  return fam;
}

// Lexicographic comparison of the concatenated rows, then of row lengths.
bool flattened_less(const Family& fam, const std::vector<RowIndex>& a,
                    const std::vector<RowIndex>& b) {
  std::size_t ra = 0, ia = 0, rb = 0, ib = 0;
  while (ra < a.size() && rb < b.size()) {
    const Row& x = fam.rows[a[ra]];
    const Row& y = fam.rows[b[rb]];
    if (x[ia] != y[ib]) return x[ia] < y[ib];
    if (++ia == x.size()) ia = 0, ++ra;
    if (++ib == y.size()) ib = 0, ++rb;
  }
  if ((ra < a.size()) != (rb < b.size())) return rb < b.size();
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto la = fam.rows[a[n]].size(), lb = fam.rows[b[n]].size();
    if (la != lb) return la < lb;
  }
  return false;
}

// Keeps the best multiplicity seen and its smallest maximizers.
class Collector {
 public:
  Collector(const Family& fam, std::size_t cap) : fam_(&fam), cap_(cap) {}

  std::uint64_t best() const noexcept { return best_; }
  const std::vector<std::vector<RowIndex>>& witnesses() const noexcept { return witnesses_; }

  void offer(std::uint64_t m, const std::vector<RowIndex>& chosen) {
    if (m < best_) return;
    if (m > best_) {
      best_ = m;
      witnesses_.clear();
    }
    if (cap_ == 0) return;
    auto less = [this](const auto& x, const auto& y) { return flattened_less(*fam_, x, y); };
    if (witnesses_.size() == cap_ && !less(chosen, witnesses_.back())) return;
    witnesses_.insert(std::upper_bound(witnesses_.begin(), witnesses_.end(), chosen, less),
                      chosen);
    if (witnesses_.size() > cap_) witnesses_.pop_back();
  }

  void merge(const Collector& other) {
    if (other.best_ < best_) return;
    if (other.best_ > best_) {
      best_ = other.best_;
      witnesses_.clear();
    }
    for (const auto& w : other.witnesses_) offer(other.best_, w);
  }

 private:
  const Family* fam_;
  std::size_t cap_;
  std::uint64_t best_ = 0;
  std::vector<std::vector<RowIndex>> witnesses_;
};

struct Shared {
  std::atomic<std::uint64_t> best{0};
  std::atomic<std::uint64_t> next_partition{0};
  std::atomic<std::uint64_t> examined{0};
};

// Depth-first walk over nondecreasing row-index sequences. Level r keeps
// the histogram of partial sums of the first r rows on [0, cap[r]], where
// cap[r] is the k-th smallest partial sum: the rows still to come all
// contain 0, so cap[r] bounds lambda_k of every completion.
class Worker {
 public:
  Worker(const SearchBounds& bounds, const SearchOptions& options, const Family& fam,
         Shared& shared)
      : bounds_(bounds),
        options_(options),
        fam_(fam),
        shared_(shared),
        collector_(fam, options.witness_cap),
        rank_cap_(saturating_pow(bounds.k, bounds.n - 1)) {
    const std::size_t depth = bounds.n;
    const std::uint64_t top = bounds.n * bounds.max_entry;
    hist_.assign(depth + 1, std::vector<Count>(top + 1, 0));
    hist_[0][0] = 1;
    cap_.assign(depth + 1, top);
    gcd_.assign(depth + 1, 0);
    chosen_.assign(depth, 0);
    prefix_.resize(top + 1);
    // choose_[f][s] = C(s + f - 2, f - 2): index tuples of f-1 rows summing to s.
    choose_.assign(depth + 1, std::vector<std::uint64_t>(top + 1, 0));
    for (std::size_t f = 2; f <= depth; ++f) {
      for (std::uint64_t s = 0; s <= top; ++s) {
        choose_[f][s] = checked_binomial(s + f - 2, f - 2).value_or(rank_cap_);
      }
    }
  }

  void run() {
    const std::uint64_t total = fam_.rows.size();
    for (;;) {
      const std::uint64_t first = shared_.next_partition.fetch_add(1);
      if (first >= total) break;
      place(0, static_cast<RowIndex>(first));
    }
    flush_examined();
  }

  const Collector& collector() const noexcept { return collector_; }
  std::uint64_t examined() const noexcept { return examined_; }
  std::uint64_t pruned() const noexcept { return pruned_; }

 private:
  void descend(std::size_t depth, RowIndex from) {
    for (std::size_t i = from; i < fam_.rows.size(); ++i) place(depth, static_cast<RowIndex>(i));
  }

  void place(std::size_t depth, RowIndex index) {
    const Row& row = fam_.rows[index];
    const std::uint64_t cap = cap_[depth];

    // Entries above cap never take part in a sum <= lambda_k. If cutting
    // them yields a row that is also admissible here, that matrix has the
    // same m(k) and is visited instead.
    if (static_cast<std::uint64_t>(row.back()) > cap) {
      Row cut;
      for (Value v : row) {
        if (static_cast<std::uint64_t>(v) > cap) break;
        cut.push_back(v);
      }
      const std::size_t cut_index = fam_.index_of(cut);
      const std::size_t floor = depth == 0 ? 0 : chosen_[depth - 1];
      if (cut_index < fam_.rows.size() && cut_index >= floor) {
        ++pruned_;
        return;
      }
    }

    offsets_.clear();
    for (Value v : row) {
      if (static_cast<std::uint64_t>(v) > cap) break;
      offsets_.push_back(static_cast<std::uint64_t>(v));
    }
    const std::span<const Count> src(hist_[depth].data(), cap + 1);
    const std::span<Count> dst(hist_[depth + 1].data(), cap + 1);
    kernels::convolve_indicator(src, offsets_, dst);

    chosen_[depth] = index;
    gcd_[depth + 1] = gcd_u64(gcd_[depth], fam_.row_gcd[index]);
    const std::size_t pos = kernels::rank_position(dst, bounds_.k);
    cap_[depth + 1] = pos <= cap ? pos : cap;

    if (depth + 1 == bounds_.n) {
      if (gcd_[depth + 1] > 1) return;  // a scaled copy of a smaller matrix
      if (pos > cap) return;            // fewer than k eigenvalues
      ++examined_;
      if ((examined_ & 0x3ff) == 0) flush_examined();
      const std::uint64_t m = dst[pos];
      if (m >= collector_.best()) {
        collector_.offer(m, chosen_);
        std::uint64_t seen = shared_.best.load(std::memory_order_relaxed);
        while (m > seen && !shared_.best.compare_exchange_weak(seen, m)) {
        }
      }
      return;
    }

    const std::uint64_t threshold =
        std::max({collector_.best(), shared_.best.load(std::memory_order_relaxed),
                  options_.prune_below});
    if (threshold > 0 && upper_bound(depth + 1) < threshold) {
      ++pruned_;
      return;
    }
    descend(depth + 1, index);
  }

  // Bound on m(k) over all completions of the first `depth` rows. With
  // P(x) = #partial tuples with sum <= x and f free rows, a representation
  // of lambda is fixed by its partial tuple and f-1 free indices (the last
  // free entry is forced); free index tuples with index sum s number
  // C(s + f - 2, f - 2) and add at least s to the sum. Only lambda with
  // P(lambda - 1) <= k - 1 can be lambda_k.
  std::uint64_t upper_bound(std::size_t depth) {
    const std::size_t free = bounds_.n - depth;
    const std::uint64_t cap = cap_[depth];
    const auto& h = hist_[depth];
    std::uint64_t running = 0;
    for (std::uint64_t v = 0; v <= cap; ++v) prefix_[v] = running += h[v];

    std::uint64_t bound = 0;
    for (std::uint64_t lambda = 0; lambda <= cap; ++lambda) {
      if (lambda > 0 && prefix_[lambda - 1] >= bounds_.k) break;
      std::uint64_t value = 0;
      if (free == 1) {
        value = prefix_[lambda];
      } else {
        for (std::uint64_t s = 0; s <= lambda; ++s) {
          value += prefix_[lambda - s] * choose_[free][s];
          if (value >= rank_cap_) break;
        }
      }
      bound = std::max(bound, value);
      if (bound >= rank_cap_) return rank_cap_;
    }
    return std::min(bound, rank_cap_);
  }

  void flush_examined() {
    shared_.examined.fetch_add(examined_ - flushed_, std::memory_order_relaxed);
    flushed_ = examined_;
  }

  const SearchBounds& bounds_;
  const SearchOptions& options_;
  const Family& fam_;
  Shared& shared_;
  Collector collector_;
  std::uint64_t rank_cap_;

  std::vector<std::vector<Count>> hist_;
  std::vector<std::uint64_t> cap_;
  std::vector<std::uint64_t> gcd_;
  std::vector<RowIndex> chosen_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::vector<std::uint64_t>> choose_;

  std::uint64_t examined_ = 0;
  std::uint64_t flushed_ = 0;
  std::uint64_t pruned_ = 0;
};

}  // namespace

SearchBounds SearchBounds::make(std::uint64_t n, std::uint64_t k, std::uint64_t max_entry,
                                std::uint64_t max_row_len) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidBounds, why); };
  if (n == 0) fail("N must be >= 1");
  if (k == 0) fail("k must be >= 1");
  if (max_entry == 0) fail("max entry B must be >= 1");
  if (max_row_len == 0 || max_row_len > k) fail("max row length L must lie in [1, k]");
  if (k >= 2 && max_row_len < 2) fail("max row length L must be >= 2 when k >= 2");
  if (max_entry > (std::uint64_t{1} << 20)) fail("max entry B is unreasonably large");
  if (n > 64) fail("N must be <= 64");
  return SearchBounds{n, k, max_entry, max_row_len};
}

SearchBounds SearchBounds::defaults(std::uint64_t n, std::uint64_t k) {
  return make(n, k, std::max<std::uint64_t>(1, k == 0 ? 0 : k - 1), k);
}

const char* to_string(ResultStatus status) noexcept {
  return status == ResultStatus::Saturated ? "saturated" : "lower_bound";
}

std::uint64_t row_family_size(const SearchBounds& bounds) {
  const std::uint64_t longest = std::min(bounds.max_row_len, bounds.max_entry + 1);
  std::uint64_t total = 0;
  for (std::uint64_t len = 1; len <= longest; ++len) {
    auto c = checked_binomial(bounds.max_entry, len - 1);
    auto sum = c ? checked_add(total, *c) : std::nullopt;
    if (!sum) return std::numeric_limits<std::uint64_t>::max();
    total = *sum;
  }
  return total;
}

std::uint64_t estimate_space(const SearchBounds& bounds) {
  const std::uint64_t rows = row_family_size(bounds);
  if (rows == std::numeric_limits<std::uint64_t>::max()) return rows;
  return checked_binomial(rows + bounds.n - 1, bounds.n)
      .value_or(std::numeric_limits<std::uint64_t>::max());
}

std::vector<Row> row_family(const SearchBounds& bounds) {
  if (row_family_size(bounds) > (std::uint64_t{1} << 24)) {
    throw Error(ErrorKind::EstimateTooLarge, "row family has more than 2^24 members");
  }
  std::vector<Row> out;
  Row current{0};
  // Depth-first in lexicographic order: a prefix precedes its extensions.
  auto rec = [&](auto&& self) -> void {
    out.push_back(current);
    if (current.size() >= bounds.max_row_len) return;
    for (Value next = current.back() + 1; next <= static_cast<Value>(bounds.max_entry); ++next) {
      current.push_back(next);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

SearchReport search_max(const SearchBounds& bounds, const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.bounds = bounds;
  report.estimate = estimate_space(bounds);
  if (report.estimate > options.budget) {
    throw Error(ErrorKind::EstimateTooLarge,
                "search space estimate " + std::to_string(report.estimate) +
                    " exceeds budget " + std::to_string(options.budget));
  }

  const Family fam = make_family(bounds);
  Shared shared;
  const unsigned threads = std::clamp<unsigned>(
      options.threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, fam.rows.size())));

  std::vector<Worker> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) workers.emplace_back(bounds, options, fam, shared);

  std::vector<std::exception_ptr> failures(threads);
  std::atomic<unsigned> running{threads};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        workers[t].run();
      } catch (...) {
        failures[t] = std::current_exception();
      }
      running.fetch_sub(1);
    });
  }
  if (options.progress) {
    while (running.load() > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(250));
      options.progress(shared.examined.load(), report.estimate);
    }
  }
  for (auto& th : pool) th.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  Collector merged(fam, options.witness_cap);
  for (const Worker& w : workers) {
    merged.merge(w.collector());
    report.examined += w.examined();
    report.pruned += w.pruned();
  }
  report.best = merged.best();
  for (const auto& chosen : merged.witnesses()) {
    std::vector<Row> rows;
    for (RowIndex i : chosen) rows.push_back(fam.rows[i]);
    report.witnesses.push_back(SpectralMatrix::validate(std::move(rows)));
  }

  if (options.check_saturation && report.best > 0) {
    SearchBounds wider = bounds;
    wider.max_entry += 1;
    if (estimate_space(wider) <= options.budget) {
      SearchOptions probe = options;
      probe.check_saturation = false;
      probe.prune_below = report.best + 1;
      probe.witness_cap = 0;
      probe.progress = nullptr;
      const SearchReport wide = search_max(wider, probe);
      report.status = wide.best > report.best ? ResultStatus::LowerBound : ResultStatus::Saturated;
    }
  }
  report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

SearchBounds bounds_for(std::uint64_t n, std::uint64_t k, const BoundsPolicy& policy) {
  const std::uint64_t entry = policy.max_entry.value_or(std::max<std::uint64_t>(1, k - 1));
  std::uint64_t len = policy.max_row_len.value_or(k);
  len = std::min(len, k);
  if (k >= 2) len = std::max<std::uint64_t>(len, 2);
  return SearchBounds::make(n, k, entry, len);
}

std::vector<SearchReport> search_table(std::uint64_t n, std::uint64_t k_max,
                                       const BoundsPolicy& policy,
                                       const SearchOptions& options) {
  if (k_max == 0) throw Error(ErrorKind::InvalidBounds, "k_max must be >= 1");
  std::vector<SearchReport> out;
  out.reserve(k_max);
  for (std::uint64_t k = 1; k <= k_max; ++k) out.push_back(search_max(bounds_for(n, k, policy), options));
  return out;
}

bool verify_witness(const SpectralMatrix& a, std::uint64_t k, std::uint64_t claimed,
                    Truncation truncation) {
  return multiplicity_at(a, RankQuery(k), truncation).multiplicity == claimed;
}

}  // namespace spectra::search
