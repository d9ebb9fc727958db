#pragma once

// Exhaustive enumeration of the line sets that exactly partition (Exact mode)
// or cover at least once (AtLeastOnce mode) the internal points of C.
//
// Exact mode is Algorithm X over dancing links with the minimum-remaining-
// candidates column heuristic. Cover mode is a bounded set-cover enumeration:
// branch on an uncovered point, try each remaining line through it in id
// order, and exclude smaller ids on backtracking so every irredundant cover
// is produced exactly once. Both solvers share a node budget and can split
// the root branching across threads; results are merged deterministically.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "pgconic/families.hpp"

namespace pgconic {

enum class CoverMode { Exact, AtLeastOnce };

inline const char* to_string(CoverMode m) {
  return m == CoverMode::Exact ? "exact" : "cover";
}

struct CoverInstance {
  int q = 0;
  CoverMode mode = CoverMode::Exact;
  std::optional<int> size_filter;
  std::vector<int> columns;                // internal point ids, ascending
  std::vector<int> rows;                   // candidate line ids, ascending
  std::vector<std::vector<int>> row_cols;  // per row: column ordinals, ascending
};

// Universe = internal points of K; candidate rows = all secant and external
// lines (tangents carry no internal point).
inline CoverInstance build_instance(const Conic& K, CoverMode mode,
                                    std::optional<int> size_filter = {}) {
  const Plane& pl = K.plane();
  CoverInstance inst;
  inst.q = pl.q();
  inst.mode = mode;
  inst.size_filter = size_filter;
  inst.columns = K.internal_points();
  std::vector<int> ordinal(pl.size(), -1);
  for (size_t i = 0; i < inst.columns.size(); ++i) ordinal[inst.columns[i]] = static_cast<int>(i);
  for (int lid = 0; lid < pl.size(); ++lid) {
    if (K.classify_line(lid) == LineClass::Tangent) continue;
    std::vector<int> cols;
    for (int pid : pl.points_on_line(lid))
      if (ordinal[pid] >= 0) cols.push_back(ordinal[pid]);
    std::sort(cols.begin(), cols.end());
    inst.rows.push_back(lid);
    inst.row_cols.push_back(std::move(cols));
  }
  return inst;
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t solution_count = 0;
  double elapsed_seconds = 0.0;
};

struct SolutionSet {
  CoverMode mode = CoverMode::Exact;
  std::vector<LineSet> solutions;  // sorted by canonical id lists
  SearchStats stats;
};

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;
  int threads = 1;
  std::uint64_t progress_interval = 5'000'000;
  std::function<void(std::uint64_t nodes, std::uint64_t solutions)> progress;
};

namespace detail {

// Shared bookkeeping: node budget, progress callback, solution tally.
struct SearchMonitor {
  explicit SearchMonitor(const SearchOptions& opts) : opts(opts) {}

  void count_node() {
    const std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > opts.node_budget)
      fail(errc::instance_too_large, "node budget of " + std::to_string(opts.node_budget) +
                                         " exceeded");
    if (opts.progress && n % opts.progress_interval == 0) {
      std::lock_guard<std::mutex> lock(mutex);
      opts.progress(n, solutions.load(std::memory_order_relaxed));
    }
  }

  const SearchOptions& opts;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> solutions{0};
  std::mutex mutex;
};

// Dancing links over the instance matrix. Column heads occupy node ids
// 0..ncols-1; row entries are contiguous so rows need no horizontal links.
struct DlxState {
  int ncols = 0;
  int root = 0;
  std::vector<int> left, right, len;
  std::vector<int> up, down, colof, rowof;
  std::vector<std::pair<int, int>> rowspan;

  explicit DlxState(const CoverInstance& inst) {
    ncols = static_cast<int>(inst.columns.size());
    root = ncols;
    left.resize(ncols + 1);
    right.resize(ncols + 1);
    for (int i = 0; i <= ncols; ++i) {
      left[i] = (i + ncols) % (ncols + 1);
      right[i] = (i + 1) % (ncols + 1);
    }
    len.assign(ncols, 0);
    size_t entries = 0;
    for (const auto& cols : inst.row_cols) entries += cols.size();
    up.resize(ncols + entries);
    down.resize(ncols + entries);
    colof.resize(ncols + entries);
    rowof.assign(ncols + entries, -1);
    for (int c = 0; c < ncols; ++c) {
      up[c] = down[c] = c;
      colof[c] = c;
    }
    rowspan.reserve(inst.row_cols.size());
    int node = ncols;
    for (size_t r = 0; r < inst.row_cols.size(); ++r) {
      const int begin = node;
      for (int c : inst.row_cols[r]) {
        colof[node] = c;
        rowof[node] = static_cast<int>(r);
        up[node] = up[c];
        down[node] = c;
        down[up[c]] = node;
        up[c] = node;
        ++len[c];
        ++node;
      }
      rowspan.emplace_back(begin, node);
    }
  }

  void cover(int c) {
    right[left[c]] = right[c];
    left[right[c]] = left[c];
    for (int i = down[c]; i != c; i = down[i]) {
      const auto [b, e] = rowspan[rowof[i]];
      for (int j = b; j < e; ++j) {
        if (j == i) continue;
        up[down[j]] = up[j];
        down[up[j]] = down[j];
        --len[colof[j]];
      }
    }
  }

  void uncover(int c) {
    for (int i = up[c]; i != c; i = up[i]) {
      const auto [b, e] = rowspan[rowof[i]];
      for (int j = e - 1; j >= b; --j) {
        if (j == i) continue;
        ++len[colof[j]];
        up[down[j]] = j;
        down[up[j]] = j;
      }
    }
    right[left[c]] = c;
    left[right[c]] = c;
  }

  int min_len_column() const {
    int best = -1;
    for (int c = right[root]; c != root; c = right[c])
      if (best < 0 || len[c] < len[best]) best = c;
    return best;
  }

  void select_row(int r) {
    const auto [b, e] = rowspan[r];
    for (int j = b; j < e; ++j) cover(colof[j]);
  }

  void deselect_row(int r) {
    const auto [b, e] = rowspan[r];
    for (int j = e - 1; j >= b; --j) uncover(colof[j]);
  }
};

struct DlxSearch {
  DlxState st;
  std::optional<int> filter;
  SearchMonitor* monitor;
  std::vector<int> stack;
  std::vector<std::vector<int>> found;  // row ordinal lists

  DlxSearch(const CoverInstance& inst, SearchMonitor* mon)
      : st(inst), filter(inst.size_filter), monitor(mon) {}

  void emit() {
    if (filter && static_cast<int>(stack.size()) != *filter) return;
    auto rows = stack;
    std::sort(rows.begin(), rows.end());
    found.push_back(std::move(rows));
    monitor->solutions.fetch_add(1, std::memory_order_relaxed);
  }

  void run(int depth) {
    if (st.right[st.root] == st.root) {
      emit();
      return;
    }
    if (filter && depth >= *filter) return;
    const int c = st.min_len_column();
    if (st.len[c] == 0) return;
    st.cover(c);
    for (int i = st.down[c]; i != c; i = st.down[i]) {
      monitor->count_node();
      const int r = st.rowof[i];
      const auto [b, e] = st.rowspan[r];
      for (int j = b; j < e; ++j)
        if (j != i) st.cover(st.colof[j]);
      stack.push_back(r);
      run(depth + 1);
      stack.pop_back();
      for (int j = e - 1; j >= b; --j)
        if (j != i) st.uncover(st.colof[j]);
    }
    st.uncover(c);
  }
};

// Bounded set-cover enumeration with exclusion sets (see file comment).
struct CoverSearch {
  const CoverInstance* inst;
  int ncols, nrows, bound, max_row_size = 0;
  std::optional<int> filter;
  SearchMonitor* monitor;
  std::vector<std::vector<int>> col_rows;
  std::vector<int> covered, avail, chosen;
  std::vector<char> excluded;
  int uncovered;
  std::vector<std::vector<int>> found;

  CoverSearch(const CoverInstance& i, SearchMonitor* mon) : inst(&i), monitor(mon) {
    ncols = static_cast<int>(i.columns.size());
    nrows = static_cast<int>(i.rows.size());
    filter = i.size_filter;
    bound = filter ? *filter : ncols;
    col_rows.assign(ncols, {});
    for (int r = 0; r < nrows; ++r) {
      max_row_size = std::max(max_row_size, static_cast<int>(i.row_cols[r].size()));
      for (int c : i.row_cols[r]) col_rows[c].push_back(r);
    }
    covered.assign(ncols, 0);
    avail.assign(ncols, 0);
    for (int c = 0; c < ncols; ++c) avail[c] = static_cast<int>(col_rows[c].size());
    excluded.assign(nrows, 0);
    uncovered = ncols;
  }

  void exclude(int r) {
    excluded[r] = 1;
    for (int c : inst->row_cols[r]) --avail[c];
  }
  void include_back(int r) {
    excluded[r] = 0;
    for (int c : inst->row_cols[r]) ++avail[c];
  }
  void take(int r) {
    for (int c : inst->row_cols[r])
      if (covered[c]++ == 0) --uncovered;
    chosen.push_back(r);
  }
  void untake(int r) {
    chosen.pop_back();
    for (int c : inst->row_cols[r])
      if (--covered[c] == 0) ++uncovered;
  }

  void emit() {
    if (filter && static_cast<int>(chosen.size()) != *filter) return;
    auto rows = chosen;
    std::sort(rows.begin(), rows.end());
    found.push_back(std::move(rows));
    monitor->solutions.fetch_add(1, std::memory_order_relaxed);
  }

  int branch_column() const {
    int best = -1;
    for (int c = 0; c < ncols; ++c) {
      if (covered[c] > 0) continue;
      if (best < 0 || avail[c] < avail[best]) best = c;
      if (avail[c] == 0) break;
    }
    return best;
  }

  void run() {
    if (uncovered == 0) {
      emit();
      return;
    }
    const int depth = static_cast<int>(chosen.size());
    if (depth >= bound) return;
    if (static_cast<std::uint64_t>(uncovered) >
        static_cast<std::uint64_t>(bound - depth) * max_row_size)
      return;
    const int c = branch_column();
    if (avail[c] == 0) return;
    std::vector<int> frame;
    for (int r : col_rows[c]) {
      if (excluded[r]) continue;
      monitor->count_node();
      exclude(r);
      take(r);
      run();
      untake(r);
      frame.push_back(r);  // stays excluded for the remaining branches
    }
    for (int r : frame) include_back(r);
  }
};

inline LineSet rows_to_line_set(const CoverInstance& inst, const std::vector<int>& row_ordinals) {
  std::vector<int> ids;
  ids.reserve(row_ordinals.size());
  for (int r : row_ordinals) ids.push_back(inst.rows[r]);
  std::sort(ids.begin(), ids.end());
  return LineSet{inst.q, std::move(ids), Provenance::SearchResult};
}

std::vector<std::vector<int>> run_root_split_dlx(const CoverInstance& inst,
                                                 SearchMonitor* monitor, int threads);
std::vector<std::vector<int>> run_root_split_cover(const CoverInstance& inst,
                                                   SearchMonitor* monitor, int threads);

}  // namespace detail

// Complete enumeration. Every Exact-mode solution on a genuine conic instance
// is checked against verify_partition before emission; output order is the
// lexicographic order of sorted line-id lists, independent of thread count.
inline SolutionSet solve_all(const Conic& K, const CoverInstance& inst,
                             const SearchOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::SearchMonitor monitor(opts);
  std::vector<std::vector<int>> raw;

  const int threads = std::max(1, opts.threads);
  if (inst.mode == CoverMode::Exact) {
    if (threads == 1) {
      detail::DlxSearch s(inst, &monitor);
      s.run(0);
      raw = std::move(s.found);
    } else {
      raw = detail::run_root_split_dlx(inst, &monitor, threads);
    }
  } else {
    if (threads == 1) {
      detail::CoverSearch s(inst, &monitor);
      s.run();
      raw = std::move(s.found);
    } else {
      raw = detail::run_root_split_cover(inst, &monitor, threads);
    }
  }

  SolutionSet out;
  out.mode = inst.mode;
  out.solutions.reserve(raw.size());
  const bool genuine = inst.columns == K.internal_points() && inst.q == K.plane().q();
  for (const auto& rows : raw) {
    LineSet ls = detail::rows_to_line_set(inst, rows);
    if (inst.mode == CoverMode::Exact && genuine) {
      const PartitionReport rep = verify_partition(K, ls);
      if (!rep.is_exact_partition)
        throw std::logic_error("exact-cover solution failed partition verification");
    }
    out.solutions.push_back(std::move(ls));
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  out.stats.nodes = monitor.nodes.load();
  out.stats.solution_count = out.solutions.size();
  out.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// Naive subset backtracking over rows in id order, with no dancing-links
// machinery; the independent oracle for solve_all on tiny instances.
inline SolutionSet brute_force_solve(const CoverInstance& inst) {
  if (inst.q > 5)
    fail(errc::instance_too_large, "brute force oracle is limited to q <= 5");
  if (inst.mode == CoverMode::AtLeastOnce && !inst.size_filter)
    fail(errc::bad_argument, "cover-mode brute force needs a size filter");
  const auto t0 = std::chrono::steady_clock::now();
  const int ncols = static_cast<int>(inst.columns.size());
  const int nrows = static_cast<int>(inst.rows.size());
  std::vector<int> covered(ncols, 0);
  int uncovered = ncols;
  std::vector<int> chosen;
  std::vector<std::vector<int>> raw;
  std::uint64_t nodes = 0;

  auto overlaps = [&](int r) {
    for (int c : inst.row_cols[r])
      if (covered[c]) return true;
    return false;
  };
  auto take = [&](int r) {
    ++nodes;
    for (int c : inst.row_cols[r])
      if (covered[c]++ == 0) --uncovered;
    chosen.push_back(r);
  };
  auto untake = [&](int r) {
    chosen.pop_back();
    for (int c : inst.row_cols[r])
      if (--covered[c] == 0) ++uncovered;
  };

  const std::optional<int> filter = inst.size_filter;
  std::function<void(int)> rec;
  if (inst.mode == CoverMode::Exact) {
    rec = [&](int i) {
      if (uncovered == 0) {
        if (!filter || static_cast<int>(chosen.size()) == *filter) raw.push_back(chosen);
        return;
      }
      if (i == nrows) return;
      rec(i + 1);
      if (!overlaps(i) && (!filter || static_cast<int>(chosen.size()) < *filter)) {
        take(i);
        rec(i + 1);
        untake(i);
      }
    };
  } else {
    rec = [&](int i) {
      if (static_cast<int>(chosen.size()) == *filter) {
        if (uncovered == 0) raw.push_back(chosen);
        return;
      }
      if (i == nrows) return;
      rec(i + 1);
      take(i);
      rec(i + 1);
      untake(i);
    };
  }
  rec(0);

  SolutionSet out;
  out.mode = inst.mode;
  for (const auto& rows : raw) out.solutions.push_back(detail::rows_to_line_set(inst, rows));
  std::sort(out.solutions.begin(), out.solutions.end());
  out.stats.nodes = nodes;
  out.stats.solution_count = out.solutions.size();
  out.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

namespace detail {

// Root-level parallel split: the branching made at the root is distributed
// over a worker pool, each worker owning a private copy of the state. Node
// totals match the single-threaded run; solution order is restored by the
// final sort in solve_all.
inline std::vector<std::vector<int>> run_root_split_dlx(const CoverInstance& inst,
                                                        SearchMonitor* monitor, int threads) {
  DlxState probe(inst);
  if (probe.right[probe.root] == probe.root)
    return inst.size_filter && *inst.size_filter != 0 ? std::vector<std::vector<int>>{}
                                                      : std::vector<std::vector<int>>{{}};
  const int c = probe.min_len_column();
  std::vector<int> branch_rows;
  for (int i = probe.down[c]; i != c; i = probe.down[i]) branch_rows.push_back(probe.rowof[i]);
  if (branch_rows.empty()) return {};

  std::vector<std::vector<std::vector<int>>> slots(branch_rows.size());
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const int nworkers = std::min<int>(threads, static_cast<int>(branch_rows.size()));
  for (int w = 0; w < nworkers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const size_t k = next.fetch_add(1);
          if (k >= branch_rows.size()) break;
          DlxSearch s(inst, monitor);
          s.st.cover(c);
          monitor->count_node();
          const int r = branch_rows[k];
          const auto [b, e] = s.st.rowspan[r];
          for (int j = b; j < e; ++j)
            if (s.st.colof[j] != c) s.st.cover(s.st.colof[j]);
          s.stack.push_back(r);
          s.run(1);
          slots[k] = std::move(s.found);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  std::vector<std::vector<int>> merged;
  for (auto& slot : slots)
    for (auto& rows : slot) merged.push_back(std::move(rows));
  return merged;
}

inline std::vector<std::vector<int>> run_root_split_cover(const CoverInstance& inst,
                                                          SearchMonitor* monitor, int threads) {
  CoverSearch probe(inst, monitor);
  if (probe.uncovered == 0)
    return inst.size_filter && *inst.size_filter != 0 ? std::vector<std::vector<int>>{}
                                                      : std::vector<std::vector<int>>{{}};
  if (probe.bound == 0) return {};
  const int c = probe.branch_column();
  if (probe.avail[c] == 0) return {};
  const std::vector<int> candidates = probe.col_rows[c];

  std::vector<std::vector<std::vector<int>>> slots(candidates.size());
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const int nworkers = std::min<int>(threads, static_cast<int>(candidates.size()));
  for (int w = 0; w < nworkers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const size_t k = next.fetch_add(1);
          if (k >= candidates.size()) break;
          CoverSearch s(inst, monitor);
          for (size_t j = 0; j < k; ++j) s.exclude(candidates[j]);
          monitor->count_node();
          const int r = candidates[k];
          s.exclude(r);
          s.take(r);
          s.run();
          slots[k] = std::move(s.found);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  std::vector<std::vector<int>> merged;
  for (auto& slot : slots)
    for (auto& rows : slot) merged.push_back(std::move(rows));
  return merged;
}

}  // namespace detail

}  // namespace pgconic
