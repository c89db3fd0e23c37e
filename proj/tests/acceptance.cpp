// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Time limits are enforced as part of the verdict where the criterion has one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hhnum/hhnum.hpp"

namespace {

using hhnum::VerificationReport;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  long long checked = 0;
  std::string note;

  void absorb(const VerificationReport& r) {
    checked += r.instances_checked;
    if (!r.passed()) {
      ok = false;
      if (note.empty()) {
        const auto& f = r.failures.front();
        note = r.claim + ": " + std::to_string(r.failures.size()) + " failure(s), first ";
        for (const auto& g : f.graphs) note += g + " ";
        note += f.details;
      }
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds,
               const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.ok = false;
    o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!o.ok) ++failures;
  std::printf("criterion %d %s: %s (%lld checks, %.1fs%s%s)\n", id, title,
              o.ok ? "PASS" : "FAIL", o.checked, secs,
              o.note.empty() ? "" : ", ", o.note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  using namespace hhnum;

  criterion(1, "closed forms n=2..8", 300, [] {
    Outcome o;
    o.absorb(verify_closed_forms(8));
    return o;
  });

  criterion(2, "upper bound, H in {C_n, P_n-1}, n<=6", 600, [] {
    Outcome o;
    for (int n = 2; n <= 6; ++n) o.absorb(verify_upper_bound(n, HFamily::kCanonical, {.jobs = 2}));
    return o;
  });

  criterion(3, "upper bound, all connected H, n=5", 120, [] {
    Outcome o;
    o.absorb(verify_upper_bound(5, HFamily::kConnectedAll, {.jobs = 2}));
    return o;
  });

  criterion(4, "pathify soundness, 1000 seeded instances", 0, [] {
    Outcome o;
    o.absorb(verify_pathify_soundness({.samples = 1000, .seed = 20240501}));
    return o;
  });

  criterion(5, "surgery identities, 500 seeded trees", 0, [] {
    Outcome o;
    o.absorb(verify_surgery_lemmas({.samples = 500, .seed = 20240502}));
    return o;
  });

  criterion(6, "isomorphism via h_H, n<=5", 0, [] {
    Outcome o;
    o.absorb(verify_isomorphism_characterization(5));
    return o;
  });

  criterion(7, "branch-and-bound agrees with exhaustive", 0, [] {
    Outcome o;
    o.absorb(verify_solver_agreement(closed_form_instances(8), "criterion 1 instances"));
    for (int n = 2; n <= 6; ++n) {
      o.absorb(verify_solver_agreement(upper_bound_instances(n, HFamily::kCanonical),
                                       "criterion 2 instances"));
    }
    o.absorb(verify_solver_agreement(upper_bound_instances(5, HFamily::kConnectedAll),
                                     "criterion 3 instances"));
    o.absorb(verify_solver_agreement(random_instances(200, 7, 20240503), "random n=7"));
    return o;
  });

  criterion(8, "spanning-tree and non-articulation lemmas, n<=6", 0, [] {
    Outcome o;
    o.absorb(verify_spanning_tree_characterization(6));
    o.absorb(verify_non_articulation(6));
    return o;
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
