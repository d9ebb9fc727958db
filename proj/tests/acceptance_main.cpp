// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <pgconic/report.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

using namespace pgconic;

namespace {

std::unique_ptr<Context> make_context(int q) {
  switch (q) {
    case 9: return std::make_unique<Context>(3, 2);
    case 25: return std::make_unique<Context>(5, 2);
    case 27: return std::make_unique<Context>(3, 3);
    default: return std::make_unique<Context>(q);
  }
}

RunConfig full_config(int q, CoverMode mode = CoverMode::Exact, std::optional<int> size = {}) {
  RunConfig cfg;
  switch (q) {
    case 9: cfg.p = 3; cfg.h = 2; break;
    case 25: cfg.p = 5; cfg.h = 2; break;
    case 27: cfg.p = 3; cfg.h = 3; break;
    default: cfg.p = q; cfg.h = 1; break;
  }
  cfg.command = "full";
  cfg.mode = mode;
  cfg.size = size;
  return cfg;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// criterion 1: lemma census, exact, < 1 s per q
void criterion_census(Outcome& out) {
  for (int q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto ctx = make_context(q);
    const Conic& C = ctx->conic;
    out.expect(C.internal_count() == q * (q - 1) / 2,
               "q=" + std::to_string(q) + ": internal point count");
    for (int lid = 0; lid < ctx->plane.size(); ++lid) {
      const int k = C.internal_points_on_line(lid);
      int want = 0;
      switch (C.classify_line(lid)) {
        case LineClass::Secant: want = (q - 1) / 2; break;
        case LineClass::ExternalLine: want = (q + 1) / 2; break;
        case LineClass::Tangent: want = 0; break;
      }
      if (k != want) {
        out.expect(false, "q=" + std::to_string(q) + ": internal points per line");
        break;
      }
    }
    const double dt = seconds_since(t0);
    out.expect(dt < 1.0, "q=" + std::to_string(q) + ": census took " + std::to_string(dt) + "s");
  }
}

// criterion 2: pencil lemmas for q = 3 mod 4, exact, < 10 s total
void criterion_pencil_lemmas(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int q : {3, 7, 11, 19, 23}) {
    auto ctx = make_context(q);
    const Field& f = ctx->field;
    const Plane& pl = ctx->plane;

    std::vector<Conic> pencil;
    for (int s = 0; s < q; ++s) pencil.emplace_back(pl, s);

    // every line off Y_inf is tangent to exactly one pencil member
    bool tangency_ok = true;
    for (int lid = 0; lid < pl.size() && tangency_ok; ++lid) {
      if (pl.incident(pl.y_infinity(), lid)) {
        try {
          tangent_pencil_index(pl, lid);
          tangency_ok = false;
        } catch (const Error&) {
        }
        continue;
      }
      const int s = tangent_pencil_index(pl, lid);
      int tangencies = 0;
      for (int s2 = 0; s2 < q; ++s2) {
        int hits = 0;
        for (int pid : pl.points_on_line(lid))
          if (pencil_form_value(f, s2, pl.point(pid)) == 0) ++hits;
        if (hits == 1 && ++tangencies && s2 != s) tangency_ok = false;
      }
      if (tangencies != 1) tangency_ok = false;
    }
    out.expect(tangency_ok, "q=" + std::to_string(q) + ": unique tangency");

    // uniform internal/external relation matching chi(s'-s), all pairs
    bool relation_ok = true;
    for (int s = 0; s < q && relation_ok; ++s)
      for (int s2 = 0; s2 < q && relation_ok; ++s2) {
        if (s == s2) continue;
        const PointClass want = f.chi(f.sub(s2, s)) == 1 ? PointClass::External
                                                         : PointClass::Internal;
        for (int a = 0; a < q; ++a) {
          const int pid = pl.point_id({a, f.sub(f.mul(a, a), s2), f.one()});
          if (pencil[s].classify_point(pid) != want) relation_ok = false;
        }
      }
    out.expect(relation_ok, "q=" + std::to_string(q) + ": uniform pencil relation");

    // |I_s| = (q-3)/4 for every s in I
    for (int s : internal_pencil_indices(f))
      out.expect(static_cast<int>(internal_subfamily(f, s).size()) == (q - 3) / 4,
                 "q=" + std::to_string(q) + ": |I_s| at s=" + std::to_string(s));

    // character matrix diagnostics
    const CharacterMatrixInfo info = character_matrix(f);
    out.expect(info.rank == (q - 1) / 2 - 1, "q=" + std::to_string(q) + ": rank(A)");
    out.expect(nullspace_is_all_ones_span(info),
               "q=" + std::to_string(q) + ": nullspace of A");
    out.expect(info.minor_det_odd, "q=" + std::to_string(q) + ": det(A_11) mod 2");
  }
  const double dt = seconds_since(t0);
  out.expect(dt < 10.0, "pencil lemmas took " + std::to_string(dt) + "s");
}

// criterion 3: the constructions verify as exact partitions, < 5 s
void criterion_constructions(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    auto ctx = make_context(q);
    const Conic& C = ctx->conic;
    bool ok = true;
    for (int pid = 0; pid < ctx->plane.size(); ++pid) {
      if (C.classify_point(pid) == PointClass::External) {
        const PartitionReport r = verify_partition(C, external_pencil_partition(C, pid));
        if (!r.is_exact_partition || r.size != q - 1) ok = false;
      } else if (C.classify_point(pid) == PointClass::OnConic) {
        const PartitionReport r = verify_partition(C, conic_point_pencil_partition(C, pid));
        if (!r.is_exact_partition || r.size != q) ok = false;
      }
    }
    out.expect(ok, "q=" + std::to_string(q) + ": pencil constructions");
  }
  for (int q : {9, 25}) {
    auto ctx = make_context(q);
    const int root = ctx->field.subfield_order();
    const BaerSubplane sub = subfield_subplane(ctx->plane);
    int common = 0;
    for (int pid : sub.point_ids)
      if (ctx->conic.classify_point(pid) == PointClass::OnConic) ++common;
    out.expect(common == root + 1,
               "q=" + std::to_string(q) + ": subplane/conic intersection");
    const LineSet L = baer_subplane_partition(ctx->conic);
    out.expect(static_cast<int>(L.line_ids.size()) == q,
               "q=" + std::to_string(q) + ": Baer partition size");
    out.expect(verify_partition(ctx->conic, L).is_exact_partition,
               "q=" + std::to_string(q) + ": Baer partition exactness");
  }
  const double dt = seconds_since(t0);
  out.expect(dt < 5.0, "constructions took " + std::to_string(dt) + "s");
}

// criterion 4: full classification in exact mode
void criterion_classification(Outcome& out) {
  for (int q : {3, 5, 7, 11, 13}) {
    const RunResult r = run_command(full_config(q));
    std::map<std::string, int> orbit_sizes;
    const auto& orbits = r.report.at("payload").at("classification").at("orbits");
    for (const auto& o : orbits)
      orbit_sizes[o.at("label").get<std::string>()] += o.at("orbit_size").get<int>();
    out.expect(orbits.size() == 2, "q=" + std::to_string(q) + ": expected 2 orbits, found " +
                                       std::to_string(orbits.size()));
    out.expect(orbit_sizes["external_pencil"] == q * (q + 1) / 2,
               "q=" + std::to_string(q) + ": external pencil solution count");
    out.expect(orbit_sizes["conic_point_pencil"] == q + 1,
               "q=" + std::to_string(q) + ": conic point pencil solution count");
    out.expect(orbit_sizes["unknown"] == 0,
               "q=" + std::to_string(q) + ": unknown orbit of " +
                   std::to_string(orbit_sizes["unknown"]) + " solutions");
  }
  const RunResult r9 = run_command(full_config(9));
  const auto& orbits9 = r9.report.at("payload").at("classification").at("orbits");
  std::map<std::string, int> sizes9;
  for (const auto& o : orbits9)
    sizes9[o.at("label").get<std::string>()] += o.at("orbit_size").get<int>();
  out.expect(orbits9.size() == 3, "q=9: expected 3 orbits");
  out.expect(sizes9["external_pencil"] == 45, "q=9: external pencil solution count");
  out.expect(sizes9["conic_point_pencil"] == 10, "q=9: conic point pencil solution count");
  out.expect(sizes9["baer_subplane"] > 0, "q=9: Baer orbit present");
  out.expect(sizes9["unknown"] == 0, "q=9: zero unknown orbits");
}

// criterion 5: oracle equivalence for q in {3,5}
void criterion_oracle(Outcome& out) {
  for (int q : {3, 5}) {
    auto ctx = make_context(q);
    const CoverInstance inst = build_instance(ctx->conic, CoverMode::Exact);
    const SolutionSet fast = solve_all(ctx->conic, inst);
    const SolutionSet slow = brute_force_solve(inst);
    out.expect(fast.solutions == slow.solutions,
               "q=" + std::to_string(q) + ": solver/oracle solution sets differ");
  }
}

// criterion 6: cover mode rediscovers the exceptional covers, < 10 min
void criterion_covers(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int q : {5, 7}) {
    const RunResult r = run_command(full_config(q, CoverMode::AtLeastOnce, q - 1));
    const auto& orbits = r.report.at("payload").at("classification").at("orbits");
    int external_pencils = 0, exceptional = 0;
    bool exceptional_has_external_line = false;
    auto ctx = make_context(q);
    for (const auto& o : orbits) {
      const std::string label = o.at("label").get<std::string>();
      if (label == "external_pencil") ++external_pencils;
      if (label == "exceptional_cover") {
        ++exceptional;
        for (int lid : o.at("canonical_form").at("line_ids").get<std::vector<int>>())
          if (ctx->conic.classify_line(lid) == LineClass::ExternalLine)
            exceptional_has_external_line = true;
      }
    }
    out.expect(orbits.size() == 2 && external_pencils == 1 && exceptional == 1,
               "q=" + std::to_string(q) + ": cover orbit census");
    out.expect(exceptional_has_external_line,
               "q=" + std::to_string(q) + ": exceptional cover uses external lines");
  }
  const RunResult r11 = run_command(full_config(11, CoverMode::AtLeastOnce, 10));
  const auto& orbits11 = r11.report.at("payload").at("classification").at("orbits");
  out.expect(orbits11.size() == 1 &&
                 orbits11.at(0).at("label").get<std::string>() == "external_pencil",
             "q=11: covers of size 10 beyond the external pencils");
  const double dt = seconds_since(t0);
  out.expect(dt < 600.0, "cover searches took " + std::to_string(dt) + "s");
}

// criterion 7: proof-structure properties over all size-q solutions
void criterion_proof_structure(Outcome& out) {
  for (int q : {7, 11}) {
    auto ctx = make_context(q);
    const SolutionSet sols =
        solve_all(ctx->conic, build_instance(ctx->conic, CoverMode::Exact, q));
    out.expect(!sols.solutions.empty(), "q=" + std::to_string(q) + ": no size-q solutions");
    for (const LineSet& L : sols.solutions) {
      const PartitionReport rep = verify_partition(ctx->conic, L);
      for (const auto& [pid, count] : rep.per_conic_point_line_counts)
        out.expect(count == 1 || count == q,
                   "q=" + std::to_string(q) + ": per-point count spectrum has " +
                       std::to_string(count));
      for (int pid : ctx->conic.points_on()) {
        const TangencyProfile prof = tangency_profile(ctx->conic, L, pid);
        out.expect(prof.identity_holds,
                   "q=" + std::to_string(q) + ": tangency identity at point " +
                       std::to_string(pid));
      }
    }
  }
  for (int q : {5, 9, 13}) {
    auto ctx = make_context(q);
    const SolutionSet sols =
        solve_all(ctx->conic, build_instance(ctx->conic, CoverMode::Exact, q));
    out.expect(!sols.solutions.empty(), "q=" + std::to_string(q) + ": no size-q solutions");
    for (const LineSet& L : sols.solutions)
      out.expect(verify_partition(ctx->conic, L).covers_all_conic_points,
                 "q=" + std::to_string(q) + ": a conic point misses every line");
  }
}

// criterion 8: stabilizer order and canonical-form class function
void criterion_group(Outcome& out) {
  for (int q : {3, 5, 7, 9, 11, 13}) {
    auto ctx = make_context(q);
    const StabilizerGroup g = conic_stabilizer(ctx->conic);
    out.expect(g.order() == (q + 1) * q * (q - 1),
               "q=" + std::to_string(q) + ": stabilizer order " + std::to_string(g.order()));

    const LineSet L =
        conic_point_pencil_partition(ctx->conic, ctx->conic.points_on().front());
    const LineSet canon = canonical_partition(L, g);
    std::mt19937 rng(99 + q);
    std::uniform_int_distribution<size_t> pick(0, g.line_perms.size() - 1);
    bool class_function = true;
    for (int trial = 0; trial < 100; ++trial) {
      const LineSet image = apply_to_line_set(g.line_perms[pick(rng)], L);
      if (!(canonical_partition(image, g) == canon)) class_function = false;
    }
    out.expect(class_function, "q=" + std::to_string(q) + ": canonical form class function");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"criterion 1: lemma census for q in {3,5,7,9,11,13,25,27}", criterion_census},
      {"criterion 2: pencil lemmas for q in {3,7,11,19,23}", criterion_pencil_lemmas},
      {"criterion 3: constructive families verify as exact partitions", criterion_constructions},
      {"criterion 4: exact-mode classification census", criterion_classification},
      {"criterion 5: solver/brute-force oracle equivalence", criterion_oracle},
      {"criterion 6: exceptional covers at size q-1", criterion_covers},
      {"criterion 7: proof-structure properties over all size-q solutions",
       criterion_proof_structure},
      {"criterion 8: stabilizer order and canonical-form sanity", criterion_group},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::printf("[%s] %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", name.c_str(), dt);
    for (const std::string& note : out.notes) std::printf("       - %s\n", note.c_str());
    if (!out.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
