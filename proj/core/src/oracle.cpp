#include "oddlen/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace oddlen {

namespace {

int max_odd_length(int n) { return (n / 2) * ((n + 1) / 2); }

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

void check_cap(int n, int cap, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + " needs n >= 1");
  if (n > cap)
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap));
}

unsigned pick_threads(unsigned requested, int n) {
  if (requested != 0) return requested;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return std::min(hw, static_cast<unsigned>(n));
}

struct PermStats {
  std::uint32_t descent_mask = 0;
  int odd_len = 0;
  bool negative = false;  // parity of the inversion count
  ChessboardClass chess = ChessboardClass::NotChessboard;
};

// v holds the images of positions 1..n at 0-based indices.
PermStats stats_of(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  PermStats st;
  bool parity = false;
  int odd_len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] > v[j]) {
        parity = !parity;
        odd_len += (i ^ j) & 1;
      }
  st.negative = parity;
  st.odd_len = odd_len;
  for (int i = 1; i < n; ++i)
    if (v[i - 1] > v[i]) st.descent_mask |= 1u << i;
  bool all_even = true, all_odd = true;
  for (int i = 0; i < n; ++i) {
    if (((i + 1 + v[i]) & 1) == 0)
      all_odd = false;
    else
      all_even = false;
  }
  st.chess = all_even ? ChessboardClass::EvenChessboard
             : all_odd ? ChessboardClass::OddChessboard
                       : ChessboardClass::NotChessboard;
  return st;
}

// Dense accumulation buffers; converted to sparse polynomials once at the end.
struct Accum {
  int n, width;
  std::vector<long long> sums;    // [bucket][population][odd_len]
  std::vector<long long> counts;  // [bucket]

  explicit Accum(int n_)
      : n(n_),
        width(max_odd_length(n_) + 1),
        sums(static_cast<std::size_t>(1u << (n_ - 1)) * 3 * width, 0),
        counts(static_cast<std::size_t>(1u << (n_ - 1)), 0) {}

  std::size_t index(std::uint32_t descent_mask, int pop, int odd_len) const {
    return (static_cast<std::size_t>(descent_mask >> 1) * 3 + pop) * width + odd_len;
  }

  void add(const PermStats& st) {
    const long long delta = st.negative ? -1 : 1;
    sums[index(st.descent_mask, 0, st.odd_len)] += delta;
    if (st.chess == ChessboardClass::EvenChessboard)
      sums[index(st.descent_mask, 1, st.odd_len)] += delta;
    else if (st.chess == ChessboardClass::OddChessboard)
      sums[index(st.descent_mask, 2, st.odd_len)] += delta;
    counts[st.descent_mask >> 1] += 1;
  }

  void merge(const Accum& other) {
    for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += other.sums[i];
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  }
};

// Runs fn over every permutation with the given first entry, in lexicographic
// order of the remaining entries.
template <typename Fn>
void enumerate_first_fixed(int n, int first, Fn&& fn) {
  std::vector<int> v;
  v.reserve(n);
  v.push_back(first);
  for (int x = 1; x <= n; ++x)
    if (x != first) v.push_back(x);
  do {
    fn(v);
  } while (std::next_permutation(v.begin() + 1, v.end()));
}

// Fills one partition slot per first entry, spreading partitions over worker
// threads. Slots are merged by the caller in index order, so results are
// independent of the thread count.
template <typename Partition>
void run_partitioned(int n, unsigned threads,
                     std::vector<Partition>& partitions,
                     void (*work)(int, int, Partition&)) {
  if (threads <= 1) {
    for (int first = 1; first <= n; ++first)
      work(n, first, partitions[first - 1]);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int slot; (slot = next.fetch_add(1)) < n;)
      work(n, slot + 1, partitions[slot]);
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

void bucket_work(int n, int first, Accum& acc) {
  enumerate_first_fixed(n, first,
                        [&](const std::vector<int>& v) { acc.add(stats_of(v)); });
}

void distribution_work(int n, int first, std::vector<long long>& acc) {
  enumerate_first_fixed(n, first, [&](const std::vector<int>& v) {
    int odd_len = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (v[i] > v[j]) odd_len += (i ^ j) & 1;
    acc[odd_len] += 1;
  });
}

SignedPoly dense_to_poly(const long long* coeffs, int width) {
  std::vector<std::pair<int, long long>> terms;
  for (int e = 0; e < width; ++e)
    if (coeffs[e] != 0) terms.emplace_back(e, coeffs[e]);
  return SignedPoly::from_terms(terms);
}

int population_slot(Population pop) {
  switch (pop) {
    case Population::FullSn: return 0;
    case Population::ChessEven: return 1;
    case Population::ChessOdd: return 2;
    case Population::ChessAll: break;
  }
  throw std::invalid_argument("bucket cells store sn, cn+ and cn- only");
}

}  // namespace

BucketTable::BucketTable(int n)
    : n_(n), cells_(std::size_t{1} << (n - 1)), counts_(std::size_t{1} << (n - 1), 0) {}

std::size_t BucketTable::index_of(std::uint32_t descent_mask) const {
  return descent_mask >> 1;
}

const SignedPoly& BucketTable::cell(const PositionSet& exact_descents,
                                    Population pop) const {
  if (!exact_descents.empty() && exact_descents.max() > n_ - 1)
    throw std::invalid_argument("descent positions must lie in [1, n-1]");
  return cells_[index_of(exact_descents.mask())][population_slot(pop)];
}

long long BucketTable::permutation_count(const PositionSet& exact_descents) const {
  if (!exact_descents.empty() && exact_descents.max() > n_ - 1)
    throw std::invalid_argument("descent positions must lie in [1, n-1]");
  return counts_[index_of(exact_descents.mask())];
}

BucketTable build_bucket_table(int n, const BuildOptions& options) {
  check_cap(n, options.cap, "build_bucket_table");
  std::vector<Accum> partitions;
  partitions.reserve(n);
  for (int i = 0; i < n; ++i) partitions.emplace_back(n);
  run_partitioned<Accum>(n, pick_threads(options.threads, n), partitions,
                         bucket_work);
  Accum total(n);
  for (const Accum& part : partitions) total.merge(part);

  BucketTable table(n);
  const int width = total.width;
  for (std::size_t bucket = 0; bucket < table.cells_.size(); ++bucket) {
    const std::uint32_t mask = static_cast<std::uint32_t>(bucket) << 1;
    for (int pop = 0; pop < 3; ++pop)
      table.cells_[bucket][pop] =
          dense_to_poly(&total.sums[total.index(mask, pop, 0)], width);
    table.counts_[bucket] = total.counts[bucket];
    table.total_ += total.counts[bucket];
  }
  if (table.total_ != factorial(n))
    throw std::logic_error("bucket counts do not add up to n!");
  return table;
}

SignedPoly signed_poly(const ClassSpec& c, Population pop, const BucketTable* table) {
  const int n = c.n();
  if (table != nullptr) {
    if (table->n() != n)
      throw std::invalid_argument("bucket table is for n = " +
                                  std::to_string(table->n()) +
                                  ", class has n = " + std::to_string(n));
    if (pop == Population::ChessAll)
      return signed_poly(c, Population::ChessEven, table) +
             signed_poly(c, Population::ChessOdd, table);
    const int slot = population_slot(pop);
    const std::uint32_t desc = c.descents().mask();
    const std::uint32_t full = (n >= 2) ? ((1u << n) - 2u) : 0u;
    const std::uint32_t free = full & ~(desc | c.ascents().mask());
    SignedPoly out;
    // Submask walk: every descent set between the forced descents and the
    // complement of the forced ascents.
    for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
      out += table->cells_[table->index_of(desc | sub)][slot];
      if (sub == 0) break;
    }
    return out;
  }

  // Filtered path: fresh enumeration, membership test per permutation.
  std::vector<long long> dense(max_odd_length(n) + 1, 0);
  const std::uint32_t asc = c.ascents().mask();
  const std::uint32_t desc = c.descents().mask();
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    const PermStats st = stats_of(v);
    if ((st.descent_mask & asc) != 0) continue;
    if ((desc & ~st.descent_mask) != 0) continue;
    switch (pop) {
      case Population::FullSn: break;
      case Population::ChessAll:
        if (st.chess == ChessboardClass::NotChessboard) continue;
        break;
      case Population::ChessEven:
        if (st.chess != ChessboardClass::EvenChessboard) continue;
        break;
      case Population::ChessOdd:
        if (st.chess != ChessboardClass::OddChessboard) continue;
        break;
    }
    dense[st.odd_len] += st.negative ? -1 : 1;
  } while (std::next_permutation(v.begin(), v.end()));
  return dense_to_poly(dense.data(), static_cast<int>(dense.size()));
}

SignedPoly distribution(int n, int cap) {
  check_cap(n, cap, "distribution");
  const int width = max_odd_length(n) + 1;
  std::vector<std::vector<long long>> partitions(n, std::vector<long long>(width, 0));
  run_partitioned<std::vector<long long>>(n, pick_threads(0, n), partitions,
                                          distribution_work);
  std::vector<long long> total(width, 0);
  for (const auto& part : partitions)
    for (int e = 0; e < width; ++e) total[e] += part[e];
  return dense_to_poly(total.data(), width);
}

}  // namespace oddlen
