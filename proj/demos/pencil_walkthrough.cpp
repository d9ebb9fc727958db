// Walks the pencil C_s: Y = X^2 - s over a small field: tangency indices,
// internal/external relations between members, and the character matrix of
// the non-squares.

#include <pgconic/conic.hpp>

#include <cstdio>

using namespace pgconic;

int main(int argc, char** argv) {
  const int p = argc > 1 ? std::atoi(argv[1]) : 7;
  Context ctx(p);
  const Field& f = ctx.field;
  const Plane& pl = ctx.plane;
  const int q = f.q();

  std::printf("GF(%d), conic C: X^2 - YZ = 0, pencil C_s: X^2 - sZ^2 - YZ = 0\n", q);

  std::printf("non-squares:");
  for (int s : f.nonsquares()) std::printf(" %s", f.to_string(s).c_str());
  std::printf("   (the pencil members made of internal points of C)\n");

  const int line = pl.line_id({f.from_int(2), f.neg(f.one()), f.from_int(3)});  // Y = 2X + 3
  std::printf("line %s is tangent to C_s for s = %s\n", pl.line_string(line).c_str(),
              f.to_string(tangent_pencil_index(pl, line)).c_str());

  for (int s : f.nonsquares())
    for (int s2 : f.nonsquares()) {
      if (s == s2) continue;
      const bool ext = pencil_relation(f, s, s2) == PencilRelation::ExternalTo;
      std::printf("  C_%s is %s to C_%s\n", f.to_string(s2).c_str(),
                  ext ? "external" : "internal", f.to_string(s).c_str());
    }

  if (q % 4 == 3) {
    const CharacterMatrixInfo info = character_matrix(f);
    std::printf("character matrix over the non-squares (rank %d, minor parity %s):\n",
                info.rank, info.minor_det_odd ? "odd" : "even");
    for (const auto& row : info.a) {
      std::printf("  [");
      for (int x : row) std::printf(" %2d", x);
      std::printf(" ]\n");
    }
  }
  return 0;
}
