#pragma once

// Driver behind the toric_census executable.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "toric/census.hpp"
#include "toric/serialize.hpp"

namespace toric::cli {

enum class Mode { reduce, check, bound, census };
enum class Format { table, json };

enum ExitCode : int {
  ok = 0,
  internal_error = 1,
  usage_error = 2,
  not_blowup_class = 3,
};

struct RunConfig {
  std::string vector;
  Mode mode = Mode::census;
  Format format = Format::table;
  std::optional<std::filesystem::path> svg_dir;
  unsigned jobs = 1;
  bool single_order = false;
  bool seed_list = false;
};

/// Accepts rationals and exact decimals ("0.3" is 3/10).
inline BlowupVector parse_vector(std::string_view s) { return parse_blowup_vector(s, /*allow_decimals=*/true); }

namespace detail {

inline std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace detail

/// SVG drawing of a polygon with (k, a) labels on its edges. The bounding
/// box is scaled uniformly onto a fixed 480x480 canvas with a 60px margin.
inline std::string render_svg(const DelzantPolygon& p) {
  constexpr double canvas = 480;
  constexpr double margin = 60;
  Rational min_x = p.vertex(0).x, max_x = min_x, min_y = p.vertex(0).y, max_y = min_y;
  for (const PlanePoint& v : p.vertices()) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const Rational extent = std::max(Rational(max_x - min_x), Rational(max_y - min_y));
  const double scale = (canvas - 2 * margin) / extent.convert_to<double>();
  auto sx = [&](const Rational& x) { return margin + Rational(x - min_x).convert_to<double>() * scale; };
  auto sy = [&](const Rational& y) { return canvas - margin - Rational(y - min_y).convert_to<double>() * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  os << "  <rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << (i ? " " : "") << detail::fixed(sx(p.vertex(i).x)) << ',' << detail::fixed(sy(p.vertex(i).y));
  }
  os << "\" fill=\"#dde8f4\" stroke=\"#1f3b5c\" stroke-width=\"2\"/>\n";

  const EdgeProfile prof = edge_profile(p);
  for (std::size_t j = 0; j < p.size(); ++j) {
    const PlanePoint& a = p.vertex(j);
    const PlanePoint& b = p.vertex(j + 1);
    const LatticeVector u = p.edge(j).normal;
    const double len = std::hypot(double(u.x), double(u.y));
    // Labels sit just outside the edge, opposite the inward normal.
    const double mx = (sx(a.x) + sx(b.x)) / 2 - 18 * u.x / len;
    const double my = (sy(a.y) + sy(b.y)) / 2 + 18 * u.y / len;
    os << "  <text x=\"" << detail::fixed(mx) << "\" y=\"" << detail::fixed(my)
       << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">(" << prof.entries[j].k << ", "
       << to_string(prof.entries[j].size) << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void emit_svg(const DelzantPolygon& p, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << render_svg(p);
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

inline std::string svg_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "class-%03zu.svg", index);
  return buf;
}

/// Everything a run computes. Fields are filled according to the mode.
struct Report {
  BlowupVector input;
  BlowupVector reduced;
  std::optional<DerivedParams> params;
  std::optional<NonexistenceVerdict> nonexistence;
  std::optional<BoundReport> bound;
  std::optional<CensusResult> census;
  std::optional<OrderAudit> audit;
  std::optional<std::vector<TrapezoidSeed>> seeds;
};

inline Report compute(const RunConfig& cfg) {
  const BlowupVector input = parse_vector(cfg.vector);
  Report r{input, reduce(input), {}, {}, {}, {}, {}, {}};
  if (cfg.seed_list) {
    r.params = derived_params(r.reduced);
    r.seeds = trapezoid_seeds(*r.params);
    return r;
  }
  if (cfg.mode == Mode::reduce) return r;
  r.params = derived_params(r.reduced);
  r.nonexistence = nonexistence_check(r.reduced);
  if (cfg.mode == Mode::check) return r;
  r.bound = bound_report(r.reduced);
  if (cfg.mode == Mode::bound) return r;

  CensusOptions opt;
  opt.jobs = cfg.jobs;
  opt.single_order = cfg.single_order;
  r.census = run_census(r.reduced, opt);
  if (cfg.single_order) {
    opt.single_order = false;
    r.audit = order_audit(run_census(r.reduced, opt), *r.census);
  }
  return r;
}

/// Stable document; keys appear in this order:
///   input, reduced_vector, params, nonexistence, bound, count, classes,
///   order_audit (single-order runs), seeds (--seed-list).
inline Json emit_json(const Report& r) {
  Json doc = Json::object();
  doc["input"] = to_string(r.input);
  doc["reduced_vector"] = to_string(r.reduced);
  if (r.params) doc["params"] = to_json(*r.params);
  if (r.nonexistence) doc["nonexistence"] = to_json(*r.nonexistence);
  if (r.bound) doc["bound"] = to_json(*r.bound);
  if (r.census) {
    doc["count"] = r.census->count;
    Json classes = Json::array();
    for (const ActionClass& c : r.census->classes) classes.push_back(to_json(c));
    doc["classes"] = std::move(classes);
  }
  if (r.audit) {
    Json audit = Json::object();
    audit["agree"] = r.audit->agree;
    Json a = Json::array(), s = Json::array();
    for (const auto& c : r.audit->only_all_orders) a.push_back(to_json(c));
    for (const auto& c : r.audit->only_single_order) s.push_back(to_json(c));
    audit["only_all_orders"] = std::move(a);
    audit["only_single_order"] = std::move(s);
    doc["order_audit"] = std::move(audit);
  }
  if (r.seeds) {
    Json seeds = Json::array();
    for (const TrapezoidSeed& s : *r.seeds) {
      Json j = Json::object();
      j["ell"] = s.ell;
      j["vertices"] = to_json(s.polygon);
      j["profile"] = to_json(edge_profile(s.polygon));
      seeds.push_back(std::move(j));
    }
    doc["seeds"] = std::move(seeds);
  }
  return doc;
}

inline void emit_table(const Report& r, std::ostream& os) {
  os << "input           " << to_string(r.input) << '\n';
  os << "reduced vector  " << to_string(r.reduced) << '\n';
  if (r.params) {
    os << "delta, a, b     " << to_string(r.params->delta) << ", " << to_string(r.params->a) << ", "
       << to_string(r.params->b) << '\n';
  }
  if (r.seeds) {
    os << "seeds           " << r.seeds->size() << '\n';
    for (const TrapezoidSeed& s : *r.seeds) {
      os << "  l = " << s.ell << "  " << s.polygon << "  " << edge_profile(s.polygon) << '\n';
    }
  }
  if (r.nonexistence) os << "nonexistence    " << to_string(r.nonexistence->verdict) << " (" << r.nonexistence->reason << ")\n";
  if (r.bound) {
    os << "upper bound     " << r.bound->bound.str() << "  conditions (i)-(iv):";
    for (bool c : r.bound->conditions) os << ' ' << (c ? "yes" : "no");
    os << "  attained: " << (r.bound->attained ? "yes" : "no") << '\n';
  }
  if (r.census) {
    os << "toric actions   " << r.census->count << '\n';
    for (std::size_t i = 0; i < r.census->classes.size(); ++i) {
      const ActionClass& c = r.census->classes[i];
      os << "  [" << std::setw(3) << i << "] " << c.canonical << "  from l = " << c.provenance.ell << '\n';
    }
  }
  if (r.audit) {
    os << "order audit     " << (r.audit->agree ? "single order agrees with all orders" : "DISCREPANCY") << '\n';
    for (const auto& c : r.audit->only_all_orders) os << "  only with all orders: " << c << '\n';
    for (const auto& c : r.audit->only_single_order) os << "  only with single order: " << c << '\n';
  }
}

/// Runs one configuration, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Report r = compute(cfg);
    if (cfg.format == Format::json) {
      out << emit_json(r).dump(2) << '\n';
    } else {
      emit_table(r, out);
    }
    if (cfg.svg_dir && r.census) {
      std::filesystem::create_directories(*cfg.svg_dir);
      for (std::size_t i = 0; i < r.census->classes.size(); ++i) {
        emit_svg(r.census->classes[i].representative, *cfg.svg_dir / svg_file_name(i));
      }
    }
    return ok;
  } catch (const NotBlowupClass& e) {
    err << "error: " << e.what() << '\n';
    return not_blowup_class;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace toric::cli
