// Builds the partition families of a small plane and prints their census.

#include <pgconic/classify.hpp>

#include <cstdio>

using namespace pgconic;

int main(int argc, char** argv) {
  const int p = argc > 1 ? std::atoi(argv[1]) : 3;
  const int h = argc > 2 ? std::atoi(argv[2]) : 2;
  Context ctx(p, h);
  const int q = ctx.q();
  std::printf("PG(2,%d): %d points, conic with %d points, %d internal points\n", q,
              ctx.plane.size(), static_cast<int>(ctx.conic.points_on().size()),
              ctx.conic.internal_count());

  int external = 0;
  while (ctx.conic.classify_point(external) != PointClass::External) ++external;
  for (const LineSet& fam : {external_pencil_partition(ctx.conic, external),
                             conic_point_pencil_partition(ctx.conic, ctx.plane.y_infinity())}) {
    const PartitionReport r = verify_partition(ctx.conic, fam);
    std::printf("%-20s size %2d  exact=%d  secants=%d externals=%d\n",
                to_string(fam.provenance), r.size, r.is_exact_partition, r.secant_count,
                r.external_line_count);
  }
  if (ctx.field.square_order()) {
    const LineSet baer = baer_subplane_partition(ctx.conic);
    const PartitionReport r = verify_partition(ctx.conic, baer);
    std::printf("%-20s size %2d  exact=%d  secants=%d\n", to_string(baer.provenance), r.size,
                r.is_exact_partition, r.secant_count);
  }

  const SolutionSet sols = solve_all(ctx.conic, build_instance(ctx.conic, CoverMode::Exact));
  const StabilizerGroup g = conic_stabilizer(ctx.conic);
  const OrbitReport orbits = classify_solutions(ctx.conic, sols, g);
  std::printf("exhaustive search: %d partitions in %zu orbits under the order-%d stabilizer\n",
              orbits.total_solutions, orbits.orbits.size(), g.order());
  for (const Orbit& o : orbits.orbits)
    std::printf("  %-20s orbit size %d (representative size %zu)\n", to_string(o.label),
                o.orbit_size, o.canonical_form.line_ids.size());
  return 0;
}
