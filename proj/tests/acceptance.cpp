#include <chrono>
#include <iostream>

#include "hopfca/io.hpp"

using namespace hopfca;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::cout << "criterion " << n << ": " << (ok ? "pass" : "FAIL") << " - " << what << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool fails_at(const VerificationReport& r, const std::string& id) {
  if (r.overall()) return false;
  for (const auto& e : r.entries())
    if (e.check_id == id && !e.pass) return true;
  return false;
}

bool same_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.dim == b.dim && a.field == b.field && a.mult == b.mult && a.unit == b.unit &&
         a.comult == b.comult && a.counit == b.counit && a.antipode == b.antipode;
}

bool suite_passes_everywhere(const std::string& suite) {
  for (const auto& name : registry_pairing_names())
    if (!run_suite(suite, name).overall()) return false;
  return true;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

}  // namespace

int main() {
  // 1: Hopf axioms for every registry algebra, under ten seconds total
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& name : registry_hopf_names()) ok = ok && verify_hopf(build_hopf(name)).overall();
    double dt = seconds_since(t0);
    line(1, ok && dt < 10.0, "hopf axiom suite, all registry algebras (" + fmt(dt) + ")");
  }

  // 2: partial dualization realizes the quantum double for every pairing
  {
    bool ok = true;
    double t_sw = 0, t_s3 = 0;
    for (const auto& name : registry_pairing_names()) {
      auto t0 = std::chrono::steady_clock::now();
      ok = ok && check_double_realization(build_pairing(name)).overall();
      double dt = seconds_since(t0);
      if (name == "eval-sweedler4") t_sw = dt;
      if (name == "eval-s3") t_s3 = dt;
    }
    line(2, ok && t_sw < 10.0 && t_s3 < 120.0,
         "double realization, all pairings (16-dim " + fmt(t_sw) + ", 36-dim " + fmt(t_s3) + ")");
  }

  // 3: full system ledgers pass; each mutation fixture fails at its condition
  {
    bool ok = true;
    for (const auto& name : registry_pairing_names())
      ok = ok && verify_pams(canonical_pams(build_pairing(name))).overall();
    ok = ok && fails_at(verify_pams(mutated_pams(1)), "6-convolution-identity");
    ok = ok && fails_at(verify_pams(mutated_pams(2)), "lemma-pi-gamma");
    ok = ok && fails_at(verify_pams(mutated_pams(3)), "B-comodule-algebra");
    line(3, ok, "mapping-system ledger and mutation fixtures");
  }

  // 4: trivial pairing collapses the double to a plain tensor product
  {
    HopfPairing p = build_pairing("trivial-c2-c3");
    HopfAlgebraData lhs = quantum_double(p);
    HopfAlgebraData rhs = tensor_product(variant(dual(p.k_alg), Variant::cop), p.h_alg);
    line(4, same_hopf(lhs, rhs), "trivial-pairing collapse to the plain tensor product");
  }

  // 5: the self-pairing double is the classical construction
  {
    bool ok = true;
    for (const char* name : {"c2", "s3", "sweedler4"})
      ok = ok && same_hopf(drinfeld_double(build_hopf(name)),
                           quantum_double(build_pairing(std::string("eval-") + name)));
    HopfAlgebraData d = drinfeld_double(build_hopf("c2"));
    for (int i = 0; i < d.dim && ok; ++i)
      for (int j = 0; j < d.dim && ok; ++j)
        for (int k = 0; k < d.dim && ok; ++k) {
          ok = d.mult.at(i * d.dim + j, k) == d.mult.at(j * d.dim + i, k) &&
               d.comult.at(k, i * d.dim + j) == d.comult.at(k, j * d.dim + i);
        }
    line(5, ok, "classical double agreement; order-2 case commutative and cocommutative");
  }

  // 6: module/representation round trips and monoidality, every pairing
  line(6, suite_passes_everywhere("yd-rep"), "module round trips and monoidality");

  // 7: the relative-module equivalence and its linearization, every pairing
  line(7, suite_passes_everywhere("phi-psi"), "relative-module equivalence round trips");

  // 8: the duality chain through coinvariants, every pairing
  line(8, suite_passes_everywhere("theorem-1-2"), "star-tensor and coinvariants chain");

  // 9: two-sided duality involution, comparison maps and coherence
  {
    bool ok = true;
    for (const char* name : {"eval-c2", "eval-sweedler4", "sign-s3-c2"}) {
      HopfPairing p = build_pairing(name);
      TwoSidedModule u = two_sided_unit(p, TwoSidedModule::Side::primal);
      TwoSidedModule d = two_sided_dualize(u);
      TwoSidedModule back = two_sided_dualize(d);
      ok = ok && back.left_action == u.left_action && back.right_action == u.right_action &&
           back.left_coaction == u.left_coaction && back.right_coaction == u.right_coaction;
      TwoSidedModule us = two_sided_unit(p, TwoSidedModule::Side::dual);
      TwoSidedModule s = two_sided_dualize(v_star_tensor_k(trivial_yd(p, 1)));
      ok = ok && j_morphism_check(us, s).overall() && j_morphism_check(s, us).overall();
      ok = ok && j_coherence_check(us, s, us).overall();
    }
    line(9, ok, "duality involution, comparison morphisms and coherence triples");
  }

  // 10: the self-paired four-dimensional specialization of the coinvariant action
  line(10, run_suite("schauenburg", "eval-sweedler4").overall(),
       "untwisted coinvariant action table in the self-paired case");

  // 11: serialization round trips, golden reports and exit codes
  {
    bool ok = true;
    for (const auto& name : registry_hopf_names()) {
      HopfAlgebraData h = build_hopf(name);
      ok = ok && same_hopf(parse_hopf(emit_hopf(h)), h);
    }
    for (const auto& name : registry_pairing_names()) {
      HopfPairing p = build_pairing(name);
      HopfPairing q = parse_pairing(emit_pairing(p));
      ok = ok && same_hopf(q.k_alg, p.k_alg) && same_hopf(q.h_alg, p.h_alg) && q.form == p.form;
    }
    std::string a = emit_report(run_suite("axioms", "c2"), ReportFormat::machine);
    std::string b = emit_report(run_suite("axioms", "c2"), ReportFormat::machine);
    ok = ok && a == b;
    line(11, ok, "serialization round trips and deterministic reports");
  }

  std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: FAILURES")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
