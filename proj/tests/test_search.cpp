#include <catch2/catch_amalgamated.hpp>

#include <pgconic/search.hpp>

#include <map>

using namespace pgconic;

namespace {

std::map<int, int> size_histogram(const SolutionSet& s) {
  std::map<int, int> h;
  for (const LineSet& ls : s.solutions) ++h[static_cast<int>(ls.line_ids.size())];
  return h;
}

}  // namespace

TEST_CASE("instance shapes") {
  Context c3(3);
  const CoverInstance i3 = build_instance(c3.conic, CoverMode::Exact);
  REQUIRE(i3.columns.size() == 3);
  REQUIRE(i3.rows.size() == 9);
  std::map<size_t, int> row_sizes;
  for (const auto& cols : i3.row_cols) ++row_sizes[cols.size()];
  REQUIRE(row_sizes[1] == 6);  // secants
  REQUIRE(row_sizes[2] == 3);  // external lines

  Context c7(7);
  const CoverInstance i7 = build_instance(c7.conic, CoverMode::Exact);
  REQUIRE(i7.columns.size() == 21);
  REQUIRE(i7.rows.size() == 49);
  row_sizes.clear();
  for (const auto& cols : i7.row_cols) ++row_sizes[cols.size()];
  REQUIRE(row_sizes[3] == 28);
  REQUIRE(row_sizes[4] == 21);
}

TEST_CASE("exact enumeration for q = 3") {
  Context ctx(3);
  const SolutionSet s = solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::Exact));
  const auto h = size_histogram(s);
  REQUIRE(h.size() == 2);
  REQUIRE(h.at(2) == 6);  // one per external point
  // Four conic-point pencils plus four triangles of secants whose vertices
  // are conic points: with only three internal points, each triangle side
  // carries exactly the one internal point it must.
  REQUIRE(h.at(3) == 8);
  int concurrent = 0;
  for (const LineSet& ls : s.solutions) {
    if (ls.line_ids.size() != 3) continue;
    const int a = ls.line_ids[0], b = ls.line_ids[1], c = ls.line_ids[2];
    const int p = ctx.plane.meet(a, b);
    if (ctx.plane.incident(p, c)) {
      ++concurrent;
      REQUIRE(ctx.conic.classify_point(p) == PointClass::OnConic);
    } else {
      // triangle: all three vertices lie on the conic
      for (int v : {ctx.plane.meet(a, b), ctx.plane.meet(a, c), ctx.plane.meet(b, c)})
        REQUIRE(ctx.conic.classify_point(v) == PointClass::OnConic);
    }
  }
  REQUIRE(concurrent == 4);
}

TEST_CASE("exact enumeration for q = 5") {
  Context ctx(5);
  const SolutionSet s = solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::Exact));
  const auto h = size_histogram(s);
  REQUIRE(h.at(4) == 15);
  REQUIRE(h.at(5) == 6);
  REQUIRE(s.stats.solution_count == 21);
}

TEST_CASE("exact enumeration counts for q = 7 and q = 9") {
  Context c7(7);
  auto h = size_histogram(solve_all(c7.conic, build_instance(c7.conic, CoverMode::Exact)));
  REQUIRE(h.at(6) == 28);
  REQUIRE(h.at(7) == 8);

  Context c9(3, 2);
  h = size_histogram(solve_all(c9.conic, build_instance(c9.conic, CoverMode::Exact)));
  REQUIRE(h.at(8) == 45);
  REQUIRE(h.at(9) == 40);  // 10 conic-point pencils + 30 Baer partitions
}

TEST_CASE("size dichotomy and line-type structure") {
  for (int q : {3, 5, 7, 9}) {
    Context ctx(q == 9 ? 3 : q, q == 9 ? 2 : 1);
    const SolutionSet s = solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::Exact));
    for (const LineSet& ls : s.solutions) {
      const int size = static_cast<int>(ls.line_ids.size());
      REQUIRE((size == q - 1 || size == q));
      const PartitionReport r = verify_partition(ctx.conic, ls);
      if (size == q) {
        REQUIRE(r.secant_count == q);  // size-q partitions are all secants
      } else {
        REQUIRE(r.secant_count == (q - 1) / 2);
        REQUIRE(r.external_line_count == (q - 1) / 2);
      }
    }
  }
}

TEST_CASE("brute force oracle agrees in exact mode") {
  for (int q : {3, 5}) {
    Context ctx(q);
    const CoverInstance inst = build_instance(ctx.conic, CoverMode::Exact);
    const SolutionSet fast = solve_all(ctx.conic, inst);
    const SolutionSet slow = brute_force_solve(inst);
    REQUIRE(fast.solutions == slow.solutions);
  }
}

TEST_CASE("brute force oracle agrees in cover mode at minimal size") {
  for (int q : {3, 5}) {
    Context ctx(q);
    const CoverInstance inst = build_instance(ctx.conic, CoverMode::AtLeastOnce, q - 1);
    const SolutionSet fast = solve_all(ctx.conic, inst);
    const SolutionSet slow = brute_force_solve(inst);
    REQUIRE(fast.solutions == slow.solutions);
  }
}

TEST_CASE("cover mode finds strictly more than the exact partitions") {
  Context ctx(5);
  const SolutionSet exact =
      solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::Exact, 4));
  const SolutionSet cover =
      solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::AtLeastOnce, 4));
  REQUIRE(cover.solutions.size() > exact.solutions.size());
  for (const LineSet& ls : exact.solutions)
    REQUIRE(std::find(cover.solutions.begin(), cover.solutions.end(), ls) !=
            cover.solutions.end());
  // the extra covers overlap somewhere
  for (const LineSet& ls : cover.solutions) {
    const PartitionReport r = verify_partition(ctx.conic, ls);
    REQUIRE(r.uncovered_internal == 0);
    if (std::find(exact.solutions.begin(), exact.solutions.end(), ls) == exact.solutions.end())
      REQUIRE(r.multiply_covered_internal > 0);
  }
}

TEST_CASE("the brute force oracle rejects larger fields") {
  Context ctx(7);
  const CoverInstance inst = build_instance(ctx.conic, CoverMode::Exact);
  REQUIRE_THROWS_MATCHES(brute_force_solve(inst), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == errc::instance_too_large;
                         }));
}

TEST_CASE("empty universe has exactly the empty solution") {
  Context ctx(3);
  CoverInstance inst;
  inst.q = 3;
  inst.mode = CoverMode::Exact;
  const SolutionSet s = solve_all(ctx.conic, inst);
  REQUIRE(s.solutions.size() == 1);
  REQUIRE(s.solutions.front().line_ids.empty());
  const SolutionSet b = brute_force_solve(inst);
  REQUIRE(b.solutions == s.solutions);
}

TEST_CASE("size filter restricts output without changing the matrix") {
  Context ctx(5);
  const CoverInstance all = build_instance(ctx.conic, CoverMode::Exact);
  const CoverInstance only4 = build_instance(ctx.conic, CoverMode::Exact, 4);
  REQUIRE(all.rows == only4.rows);
  REQUIRE(all.row_cols == only4.row_cols);
  const SolutionSet s = solve_all(ctx.conic, only4);
  REQUIRE(s.solutions.size() == 15);
  for (const LineSet& ls : s.solutions) REQUIRE(ls.line_ids.size() == 4);
}

TEST_CASE("node budget failure is loud") {
  Context ctx(5);
  SearchOptions opts;
  opts.node_budget = 3;
  REQUIRE_THROWS_MATCHES(solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::Exact), opts),
                         Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == errc::instance_too_large;
                         }));
}

TEST_CASE("runs are deterministic and thread count does not matter") {
  for (CoverMode mode : {CoverMode::Exact, CoverMode::AtLeastOnce}) {
    Context ctx(5);
    const CoverInstance inst = build_instance(ctx.conic, mode, 4);
    const SolutionSet a = solve_all(ctx.conic, inst);
    const SolutionSet b = solve_all(ctx.conic, inst);
    REQUIRE(a.solutions == b.solutions);
    REQUIRE(a.stats.nodes == b.stats.nodes);
    SearchOptions opts;
    opts.threads = 3;
    const SolutionSet c = solve_all(ctx.conic, inst, opts);
    REQUIRE(c.solutions == a.solutions);
    REQUIRE(c.stats.nodes == a.stats.nodes);
  }
}

TEST_CASE("progress callback fires") {
  Context ctx(7);
  SearchOptions opts;
  opts.progress_interval = 10;
  std::uint64_t calls = 0;
  opts.progress = [&](std::uint64_t, std::uint64_t) { ++calls; };
  solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::Exact), opts);
  REQUIRE(calls > 0);
}
