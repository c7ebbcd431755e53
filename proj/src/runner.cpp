#include "subsum/runner.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "subsum/pcut.hpp"
#include "subsum/props.hpp"
#include "subsum/render.hpp"

namespace subsum {

namespace {

void write_artifact(const RunConfig& cfg, const std::string& filename,
                    const std::string& bytes) {
  if (cfg.out_dir.empty()) return;
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream f(std::filesystem::path(cfg.out_dir) / filename, std::ios::binary);
  f << bytes;
}

std::string verdict_name(GNClassification::Verdict v) {
  switch (v) {
    case GNClassification::Verdict::Finite: return "Finite";
    case GNClassification::Verdict::FiniteUnionIntervals: return "FiniteUnionIntervals";
    case GNClassification::Verdict::Cantor: return "Cantor";
    case GNClassification::Verdict::KnownCantorval: return "KnownCantorval";
    case GNClassification::Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string certificate_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::None: return "none";
    case Certificate::Kind::FinitePoints: return "finite-points";
    case Certificate::Kind::SlowTail: return "slow-tail";
    case Certificate::Kind::FastTail: return "fast-tail";
    case Certificate::Kind::MultigeometricRatio: return "multigeometric-ratio";
    case Certificate::Kind::Registry: return "registry";
  }
  return "?";
}

int cmd_cover1d(const RunConfig& cfg, std::ostream& out) {
  const IntervalCover cover = cover1d(*cfg.spec1d, cfg.depth, cfg.limits);
  const std::string text = cover.serialize();
  out << "# cover1d depth " << cfg.depth << " intervals " << cover.size() << "\n" << text;
  write_artifact(cfg, "cover.txt", text);
  return kExitOk;
}

int cmd_cover2d(const RunConfig& cfg, std::ostream& out) {
  const BoxCover cover = cover2d(*cfg.spec2d, cfg.depth, cfg.limits);
  const std::string text = cover.serialize();
  out << "# cover2d depth " << cfg.depth << " boxes " << cover.size() << "\n" << text;
  write_artifact(cfg, "boxes.txt", text);
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Series1D& spec = *cfg.spec1d;
  const GNClassification gn = classify_gn(spec, cfg.depth, cfg.limits);
  std::ostringstream os;
  os << "verdict " << verdict_name(gn.verdict);
  if (!gn.cantorval_name.empty()) os << " (" << gn.cantorval_name << ")";
  os << "\n";
  os << "certificate " << certificate_name(gn.certificate.kind) << "\n";
  bool cert_ok = true;
  if (gn.verdict != GNClassification::Verdict::Undetermined) {
    const Series1D target = gn.certificate.kind == Certificate::Kind::FinitePoints
                                ? spec
                                : spec.abs_normalized();
    cert_ok = gn.certificate.validate(target);
    os << "certificate-valid " << (cert_ok ? "yes" : "no") << "\n";
  }
  if (gn.certificate.kind == Certificate::Kind::SlowTail ||
      gn.certificate.kind == Certificate::Kind::FastTail)
    os << "tail-index " << gn.certificate.from << "\n";
  if (gn.certificate.kind == Certificate::Kind::MultigeometricRatio) {
    os << "sigma-size " << gn.certificate.sigma.size() << " ratio "
       << gn.certificate.ratio << "\n";
  }
  if (gn.stats) {
    os << "cover-stats depth " << gn.stats->depth << " intervals "
       << gn.stats->interval_count << " length " << gn.stats->total_length << " hull ["
       << gn.stats->hull.lo << "," << gn.stats->hull.hi << "]\n";
  }
  try {
    const ConvergenceClass conv = classify_convergence(spec);
    switch (conv.kind) {
      case ConvergenceClass::Kind::SlowEverywhere:
        os << "convergence slow-everywhere\n";
        break;
      case ConvergenceClass::Kind::FastFromIndex:
        os << "convergence fast-from " << conv.fast_from << "\n";
        break;
      case ConvergenceClass::Kind::Mixed: {
        os << "convergence mixed";
        if (!conv.note.empty()) os << " (" << conv.note << ")";
        std::size_t shown = 0;
        for (const auto& [idx, slow] : conv.verdicts) {
          if (shown++ == 8) break;
          os << (shown == 1 ? ": " : ", ") << idx << (slow ? " slow" : " fast");
        }
        os << "\n";
        break;
      }
    }
  } catch (const DomainError& e) {
    os << "convergence unavailable (" << e.what() << ")\n";
  }
  const ExactSet1D exact = exact_set1d(spec, cfg.limits);
  switch (exact.kind) {
    case ExactSet1D::Kind::Intervals: {
      os << "exact-set intervals";
      for (const Interval& iv : exact.intervals) os << " [" << iv.lo << "," << iv.hi << "]";
      os << "\n";
      break;
    }
    case ExactSet1D::Kind::FinitePoints:
      os << "exact-set finite-points " << exact.points.size() << "\n";
      break;
    case ExactSet1D::Kind::CantorCode:
      os << "exact-set cantor-code fast-from " << exact.cantor.fast_from
         << " base-sums " << exact.cantor.base_sums.size() << " disjoint-to-depth "
         << exact.cantor.disjoint_checked_depth << "\n";
      break;
    case ExactSet1D::Kind::NotCertified:
      os << "exact-set not-certified (" << exact.reason << ")\n";
      break;
  }
  const std::string text = os.str();
  out << text;
  write_artifact(cfg, "classification.txt", text);
  return cert_ok ? kExitOk : kExitVerification;
}

int cmd_psum(const RunConfig& cfg, std::ostream& out) {
  const IntervalCover cover =
      psum_cover(cfg.psum_coeffs, *cfg.psum_weights, cfg.depth, cfg.limits);
  const std::string text = cover.serialize();
  out << "# psum depth " << cfg.depth << " intervals " << cover.size() << "\n" << text;
  write_artifact(cfg, "cover.txt", text);
  return kExitOk;
}

int cmd_pcut_build(const RunConfig& cfg, std::ostream& out) {
  const Series2D spec = build_pcut_sequence(*cfg.pcut);
  const std::uint64_t count = std::max<std::uint64_t>(cfg.pcut->k() * cfg.depth, 1);
  std::ostringstream os;
  for (std::uint64_t n = 1; n <= count; ++n) {
    const Point2 t = spec.term(n);
    os << n << " " << t.first << " " << t.second << "\n";
  }
  const std::string text = os.str();
  out << "# pcut sequence, first " << count << " terms\n" << text;
  write_artifact(cfg, "sequence.txt", text);
  return kExitOk;
}

int cmd_pcut_verify(const RunConfig& cfg, std::ostream& out) {
  const PcutReport report = verify_pcut_cut(*cfg.pcut, cfg.depth, cfg.limits);
  const std::string text = report.summary();
  out << text;
  write_artifact(cfg, "pcut_report.txt", text);
  return report.pass() ? kExitOk : kExitVerification;
}

int cmd_spectre(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream os;
  if (cfg.grid && cfg.grid->dims == 1) {
    const SpectreResult1 r = spectre_of_grid_1d(*cfg.grid);
    for (const Scalar& v : r.vectors) os << v << "\n";
  } else if (cfg.grid) {
    const SpectreResult2 r = spectre_of_grid(*cfg.grid);
    for (const Point2& v : r.vectors) os << v.first << " " << v.second << "\n";
  } else if (cfg.points1) {
    const SpectreResult1 r = spectre_of_finite_set(*cfg.points1);
    for (const Scalar& v : r.vectors) os << v << "\n";
  } else if (cfg.points2) {
    const SpectreResult2 r = spectre_of_finite_set(*cfg.points2);
    for (const Point2& v : r.vectors) os << v.first << " " << v.second << "\n";
  } else if (cfg.spec1d) {
    const auto points = partial_sums(*cfg.spec1d, cfg.depth, cfg.limits);
    const SpectreResult1 r = spectre_of_finite_set(points);
    for (const Scalar& v : r.vectors) os << v << "\n";
  } else {
    const auto points = partial_sums(*cfg.spec2d, cfg.depth, cfg.limits);
    const SpectreResult2 r = spectre_of_finite_set(points);
    for (const Point2& v : r.vectors) os << v.first << " " << v.second << "\n";
  }
  const std::string text = os.str();
  out << "# spectre vectors\n" << text;
  write_artifact(cfg, "spectre.txt", text);
  return kExitOk;
}

int cmd_center(const RunConfig& cfg, std::ostream& out) {
  std::vector<Scalar> center;
  if (cfg.grid) {
    center = center_of_distances_grid(*cfg.grid);
  } else if (cfg.points1) {
    center = center_of_distances(*cfg.points1);
  } else if (cfg.spec1d) {
    center = center_of_distances(partial_sums(*cfg.spec1d, cfg.depth, cfg.limits));
  } else {
    throw ConfigError("center needs a 1D grid, points, or a 1D spec");
  }
  std::ostringstream os;
  for (const Scalar& v : center) os << v << "\n";
  const std::string text = os.str();
  out << "# center of distances\n" << text;
  write_artifact(cfg, "center.txt", text);
  return kExitOk;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  RenderOptions opts;
  opts.width = cfg.width;
  opts.height = cfg.height;
  opts.viewport = cfg.viewport;
  opts.format = cfg.format == "pgm" ? ImageFormat::Pgm : ImageFormat::Svg;
  std::string bytes;
  if (cfg.spec1d) {
    bytes = render_cover(cover1d(*cfg.spec1d, cfg.depth, cfg.limits), opts);
  } else {
    bytes = render_cover(cover2d(*cfg.spec2d, cfg.depth, cfg.limits), opts);
  }
  const std::string filename =
      std::string("render.") + (opts.format == ImageFormat::Pgm ? "pgm" : "svg");
  if (cfg.out_dir.empty()) {
    std::ofstream f(filename, std::ios::binary);
    f << bytes;
    out << "wrote " << filename << " (" << bytes.size() << " bytes)\n";
  } else {
    write_artifact(cfg, filename, bytes);
    out << "wrote " << (std::filesystem::path(cfg.out_dir) / filename).string() << " ("
        << bytes.size() << " bytes)\n";
  }
  return kExitOk;
}

int cmd_explore_pq(const RunConfig& cfg, std::ostream& out) {
  const Scalar p = *cfg.pq_p;
  const Scalar q = *cfg.pq_q;
  if (p.sign() <= 0 || (Scalar(1) - p).sign() <= 0 || q.sign() <= 0 ||
      (Scalar(1) - q).sign() <= 0)
    throw ConfigError("explore-pq needs p, q in (0,1)");
  const Series1D xs = Series1D::geometric(Scalar(1), p);
  const Series1D ys = Series1D::geometric(Scalar(1), q);
  const Series2D spec = Series2D::pair_generator(xs, ys);
  const std::uint64_t d = cfg.depth;

  const auto points = partial_sums(spec, d, cfg.limits);
  const auto xsums = partial_sums(xs, d, cfg.limits);
  const auto ysums = partial_sums(ys, d, cfg.limits);
  const BoxCover cover = cover2d(spec, d, cfg.limits);

  // pairwise disjointness of the depth-d boxes
  bool disjoint = true;
  const auto& boxes = cover.boxes();
  for (std::size_t i = 0; i < boxes.size() && disjoint; ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (boxes[j].xlo > boxes[i].xhi) break;  // sorted by xlo
      if (boxes[j].ylo <= boxes[i].yhi && boxes[i].ylo <= boxes[j].yhi) {
        disjoint = false;
        break;
      }
    }
  }

  const std::uint64_t full = d >= 63 ? ~0ull : (1ull << d);
  std::ostringstream os;
  os << "p " << p << " q " << q << " depth " << d << "\n";
  os << "subsets " << full << "\n";
  os << "distinct-pairs " << points.size() << "\n";
  os << "distinct-x " << xsums.size() << " collisions " << (full - xsums.size()) << "\n";
  os << "distinct-y " << ysums.size() << " collisions " << (full - ysums.size()) << "\n";
  os << "boxes-pairwise-disjoint " << (disjoint ? "yes" : "no") << "\n";
  const CollisionReport rx = representation_collisions(xs, std::min<std::uint64_t>(d, 12),
                                                       cfg.limits);
  const CollisionReport ry = representation_collisions(ys, std::min<std::uint64_t>(d, 12),
                                                       cfg.limits);
  os << "x-potential-collisions " << rx.potential.size() << " exact " << rx.exact.size()
     << " tail-matches " << rx.tail_matches.size() << "\n";
  os << "y-potential-collisions " << ry.potential.size() << " exact " << ry.exact.size()
     << " tail-matches " << ry.tail_matches.size() << "\n";
  const std::string text = os.str();
  out << text;
  write_artifact(cfg, "explore.txt", text);
  return kExitOk;
}

int cmd_check_props(const RunConfig& cfg, std::ostream& out) {
  std::vector<PropResult> all;
  for (auto& r : run_spectre_properties(cfg.prop_count, cfg.seed)) all.push_back(r);
  for (auto& r : run_series_properties(cfg.prop_count, cfg.seed)) all.push_back(r);
  for (auto& r : run_cover_properties(cfg.prop_count, cfg.seed)) all.push_back(r);
  const std::string text = format_results(all);
  out << text;
  write_artifact(cfg, "props.txt", text);
  return all_passed(all) ? kExitOk : kExitVerification;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "cover1d") return cmd_cover1d(cfg, out);
  if (cfg.command == "cover2d") return cmd_cover2d(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out);
  if (cfg.command == "psum") return cmd_psum(cfg, out);
  if (cfg.command == "pcut-build") return cmd_pcut_build(cfg, out);
  if (cfg.command == "pcut-verify") return cmd_pcut_verify(cfg, out);
  if (cfg.command == "spectre") return cmd_spectre(cfg, out);
  if (cfg.command == "center") return cmd_center(cfg, out);
  if (cfg.command == "render") return cmd_render(cfg, out);
  if (cfg.command == "explore-pq") return cmd_explore_pq(cfg, out);
  if (cfg.command == "check-props") return cmd_check_props(cfg, out);
  throw ConfigError("unknown command " + cfg.command);
}

int run_command_safe(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return run_command(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace subsum
