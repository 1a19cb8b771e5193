#include <algorithm>

#include "chatelet/bundle.hpp"

namespace chatelet {

BundleReport verify_pullback(const PulledBackBundle& W, const std::vector<ProjectivePoint>& ts,
                             const VerifyOptions& options) {
  BundleReport report;
  report.d = W.d();
  report.bad = bad_fibers(W.base());
  const PointSearchOptions search{options.search_height, options.witness_bound};

  for (const auto& t : ts) {
    FiberRecord rec;
    rec.t = t;
    rec.param = W.fiber_param(t);
    ChateletSurface fiber = W.fiber(t);
    rec.quartic = fiber.Ptilde();
    rec.smooth = fiber.is_smooth();
    rec.in_bad_set =
        std::find(report.bad.points.begin(), report.bad.points.end(), rec.param) != report.bad.points.end();
    const std::string where = "fiber t = " + t.to_string();
    if (!rec.smooth) {
      report.failures.push_back(where + ": singular");
      report.fibers.push_back(rec);
      continue;
    }
    if (rec.in_bad_set) report.failures.push_back(where + ": lies in the bad fiber set");
    rec.irreducible = quartic_irreducible(rec.quartic);
    if (!rec.irreducible && !t.is_infinity()) report.thin_set_hits.push_back(t);
    rec.local = verify_local_everywhere(fiber);
    rec.search = rational_point_search(fiber, search);
    if (t.is_infinity()) {
      rec.obstruction = obstruction_report(fiber, options.samples, options.seed);
      if (!rec.obstruction->certified_empty) report.failures.push_back(where + ": obstruction not certified");
      if (rec.search->status != PointSearchResult::Status::kNone) {
        report.failures.push_back(where + ": solvable fiber found on the special surface");
      }
    } else if (!rec.local.all_solvable) {
      report.failures.push_back(where + ": not everywhere locally solvable");
    }
    report.fibers.push_back(std::move(rec));
  }
  return report;
}

}  // namespace chatelet
