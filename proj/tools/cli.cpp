#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "adenets/classify.hpp"
#include "adenets/numcheck.hpp"
#include "adenets/render.hpp"
#include "adenets/sweep.hpp"
#include "adenets/theta.hpp"

namespace adenets::cli {

namespace {

enum class Format { Text, Json, Dot };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  throw UsageError("unknown format '" + s + "' (expected text, json or dot)");
}

Format resolve_format(const std::string& flag, bool allow_dot) {
  std::string name = flag;
  if (name.empty()) {
    const char* env = std::getenv("ADENETS_FORMAT");
    name = env && *env ? env : "text";
  }
  const auto f = parse_format(name);
  if (f == Format::Dot && !allow_dot) throw UsageError("dot output is only available for graphs");
  return f;
}

std::string orbit_text(const VertexOrbit& orbit) {
  std::string s = "{";
  for (std::size_t i = 0; i < orbit.size(); ++i) s += (i ? "," : "") + std::to_string(orbit[i]);
  return s + "}";
}

// D4 tips form one orbit under the full S3 symmetry; marked so it is visible.
const char* s3_mark(const DynkinGraph& g, const VertexOrbit& orbit) {
  return g.kind() == GraphKind::D(4) && orbit.size() == 3 ? " [S3]" : "";
}

std::string central_charge(int m) {
  const int den = m * (m + 1);
  const int num = den - 6;
  const int g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

std::string fixed(double x, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

std::string normalized_text(const std::vector<NormalizedTerm>& terms) {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    if (t.mult != 1) s += std::to_string(t.mult) + "*";
    s += "s(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
  }
  return s.empty() ? "0" : s;
}

// classify --------------------------------------------------------------

int classify_su2(int level, Format fmt, const Limits& limits, std::ostream& out) {
  const auto invs = enumerate_su2(level, limits);
  if (fmt == Format::Json) {
    Json items = Json::array();
    for (const auto& inv : invs) {
      auto j = to_json(inv);
      j["theta"] = to_json(su2_canonical_endo(inv));
      items.push_back(std::move(j));
    }
    out << Json{{"kind", "su2"}, {"level", level}, {"count", invs.size()}, {"invariants", items}}
               .dump(2)
        << '\n';
    return kPass;
  }
  out << "su2 level=" << level << " coxeter=" << level + 2 << " invariants=" << invs.size() << '\n';
  for (const auto& inv : invs)
    out << "  " << std::left << std::setw(5) << inv.graph.kind().name() << " v=" << std::setw(3)
        << inv.vertex() << " orbit=" << std::setw(10) << orbit_text(inv.orbit)
        << " theta=" << to_string(su2_canonical_endo(inv)) << s3_mark(inv.graph, inv.orbit)
        << '\n';
  return kPass;
}

int classify_vir(int m, Format fmt, const Limits& limits, std::ostream& out) {
  const auto invs = enumerate_vir(m, limits);
  if (fmt == Format::Json) {
    Json items = Json::array();
    for (const auto& inv : invs) items.push_back(to_json(inv));
    out << Json{{"kind", "vir"}, {"m", m}, {"c", central_charge(m)}, {"count", invs.size()},
                {"invariants", items}}
               .dump(2)
        << '\n';
    return kPass;
  }
  out << "vir m=" << m << " c=" << central_charge(m) << " invariants=" << invs.size() << '\n';
  for (const auto& inv : invs)
    out << "  " << std::left << std::setw(5) << inv.g1.kind().name() << " v1=" << std::setw(3)
        << inv.v1() << " orbit1=" << std::setw(10) << orbit_text(inv.orbit1) << " "
        << std::setw(5) << inv.g2.kind().name() << " v2=" << std::setw(3) << inv.v2()
        << " orbit2=" << std::setw(10) << orbit_text(inv.orbit2)
        << (is_known_local(inv) ? " local" : "") << s3_mark(inv.g1, inv.orbit1)
        << s3_mark(inv.g2, inv.orbit2) << '\n';
  return kPass;
}

// theta -----------------------------------------------------------------

int theta_table(Format fmt, std::ostream& out) {
  const auto rows = table41(Execution::Parallel);
  if (fmt == Format::Dot) throw UsageError("dot output is not available for --table41");
  if (fmt == Format::Json) {
    Json items = Json::array();
    for (const auto& r : rows) items.push_back(to_json(r));
    out << Json{{"rows", items}}.dump(2) << '\n';
  } else {
    out << std::left << std::setw(6) << "G2" << std::setw(7) << "m'" << std::setw(6) << "dist"
        << "theta\n";
    for (const auto& r : rows)
      out << std::setw(6) << r.g2 << std::setw(7) << r.coxeter << std::setw(6) << r.distance
          << r.theta << (r.pattern_holds ? "" : "   [MISMATCH]") << '\n';
    out << "instances:\n";
    for (const auto& r : rows) {
      if (r.g2 != "A_n" && r.g2 != "D_n") continue;
      for (const auto& i : r.instances)
        out << "  " << std::setw(5) << i.g2.name() << " dist=" << std::setw(4) << r.distance
            << " m=" << std::setw(3) << i.m << " tip=" << std::setw(3) << i.tip << " "
            << to_string(i.theta) << '\n';
    }
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pattern_holds; });
  return ok ? kPass : kFail;
}

int theta_one(int m, const std::string& g1, int v1, const std::string& g2, int v2, Format fmt,
              std::ostream& out) {
  const auto inv = make_vir_invariant(m, GraphKind::parse(g1), v1, GraphKind::parse(g2), v2);
  const auto fg = fusion_graph(inv);
  const SectorAction action(fg);
  const auto endo = canonical_endo(fg, action, fg.distinguished);
  const auto vertical = vertical_orbit_graph(fg);
  switch (fmt) {
    case Format::Dot: out << to_dot(fg); break;
    case Format::Json: out << theta_json(inv, fg, endo, vertical).dump(2) << '\n'; break;
    case Format::Text: {
      const auto [d1, d2] = fg.classes[fg.distinguished];
      out << "invariant       m=" << m << " c=" << central_charge(m) << " G1=" << g1 << " [v1]="
          << orbit_text(inv.orbit1) << " G2=" << g2 << " [v2]=" << orbit_text(inv.orbit2) << '\n'
          << "fusion graph    classes=" << fg.size() << " distinguished=(" << d1 << "," << d2
          << ")\n"
          << "theta           " << to_string(endo.theta) << '\n'
          << "theta dim       " << fixed(sector_dim(endo.theta), 6) << '\n'
          << "normalized      " << normalized_text(endo.normalized)
          << (endo.swapped ? "  (G1/G2 swapped)" : "") << '\n'
          << "vertical orbit  " << vertical.kind.name() << " (" << vertical.size
          << " sectors, position " << vertical.distinguished << ")\n"
          << "known local     " << (is_known_local(inv) ? "yes" : "no") << '\n';
      break;
    }
  }
  return kPass;
}

// graph / bratteli ------------------------------------------------------

int graph_cmd(const std::string& kind_text, Format fmt, std::ostream& out) {
  const DynkinGraph g(GraphKind::parse(kind_text));
  if (fmt == Format::Dot) {
    out << to_dot(g);
    return kPass;
  }
  Json orbits = Json::array();
  Json autos = Json::array();
  Json pf = nullptr;
  if (g.kind().is_ade()) {
    for (const auto& o : vertex_orbits(g)) orbits.push_back(o);
    for (const auto& a : automorphism_group(g)) autos.push_back(a.perm);
    pf = pf_data(g).eigenvector;
  }
  if (fmt == Format::Json) {
    out << Json{{"graph", g.kind().name()},
                {"vertices", g.vertex_count()},
                {"coxeter", g.coxeter()},
                {"automorphisms", autos},
                {"orbits", orbits},
                {"pf_eigenvector", pf}}
               .dump(2)
        << '\n';
    return kPass;
  }
  out << g.kind().name() << " vertices=" << g.vertex_count() << " coxeter=" << g.coxeter()
      << " automorphisms=" << autos.size() << " orbits=" << orbits.size() << '\n';
  if (g.kind().is_ade()) {
    const auto x = pf_data(g).eigenvector;
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "  " << v << " " << (g.parity(v) == Parity::Even ? "even" : "odd ")
          << " pf=" << fixed(x[v], 6);
      if (auto leg = g.leg_distance(v)) out << " leg=" << *leg;
      out << '\n';
    }
  }
  return kPass;
}

int bratteli_cmd(const std::string& kind_text, int v, int depth, Format fmt, std::ostream& out) {
  const DynkinGraph g(GraphKind::parse(kind_text));
  const auto b = depth < 0 ? bratteli(g, v) : bratteli(g, v, depth);
  if (fmt == Format::Json) {
    out << to_json(b).dump(2) << '\n';
    return kPass;
  }
  for (int d = 0; d <= b.depth(); ++d) {
    out << std::setw(3) << d << ":";
    for (auto x : b.levels[d]) out << ' ' << x;
    out << '\n';
  }
  return kPass;
}

// verify ----------------------------------------------------------------

int finish(const char* check, Json items, int checked, int failed, Format fmt, std::ostream& out,
           Json extra = Json::object()) {
  const bool pass = failed == 0;
  if (fmt == Format::Json) {
    Json doc = {{"check", check}, {"pass", pass}, {"checked", checked}, {"failed", failed}};
    for (auto& [k, v] : extra.items()) doc[k] = v;
    doc["items"] = std::move(items);
    out << doc.dump(2) << '\n';
  } else {
    out << "result: " << (pass ? "PASS" : "FAIL") << " check=" << check << " checked=" << checked
        << " failed=" << failed;
    for (auto& [k, v] : extra.items()) out << ' ' << k << '=' << v.dump();
    out << '\n';
  }
  return pass ? kPass : kFail;
}

int verify_lemma(int max_m, double tol, Execution exec, Format fmt, std::ostream& out) {
  if (max_m < 1) throw UsageError("--max-m must be >= 1");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  const auto reports = lemma_sweep(max_m, tol, exec);
  Json items = Json::array();
  int failed = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) {
    if (!r.disjoint) ++failed;
    worst = std::min(worst, r.min_separation);
    if (fmt == Format::Json) items.push_back(to_json(r));
    else if (!r.disjoint)
      out << "  FAIL m=" << r.m << " " << r.graph.name() << " separation=" << sci(r.min_separation) << '\n';
  }
  return finish("lemma", std::move(items), static_cast<int>(reports.size()), failed, fmt, out,
                {{"max_m", max_m}, {"tol", tol}, {"min_separation", worst}});
}

int verify_nimrep(int max_h, Execution exec, Format fmt, std::ostream& out) {
  if (max_h < 2) throw UsageError("--max-h must be >= 2");
  const auto checks = nimrep_sweep(max_h, exec);
  Json items = Json::array();
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.ok()) ++failed;
    if (fmt == Format::Json) items.push_back(to_json(c));
    else
      out << "  " << std::left << std::setw(5) << c.kind.name() << " h=" << std::setw(3)
          << c.coxeter << " nonneg=" << c.nonnegative << " perm=" << c.permutation
          << " tau=" << (c.tau_nontrivial ? "flip" : "id  ") << (c.ok() ? "" : "  FAIL") << '\n';
  }
  return finish("nimrep", std::move(items), static_cast<int>(checks.size()), failed, fmt, out,
                {{"max_h", max_h}});
}

int verify_theta(const char* check, int max_m, Execution exec, ThetaSweepOptions opts, Format fmt,
                 std::ostream& out, bool with_fusion_dims) {
  if (max_m < 3) throw UsageError("--max-m must be >= 3");
  const auto checks = theta_sweep(max_m, exec, opts);
  Json items = Json::array();
  int failed = 0;
  double worst = 0;
  for (const auto& c : checks) {
    if (!c.ok()) ++failed;
    worst = std::max(worst, c.dim_deviation);
    if (fmt == Format::Json) items.push_back(to_json(c));
    else
      out << "  m=" << std::left << std::setw(3) << c.m << std::setw(5) << c.g1.name()
          << std::setw(5) << c.g2.name() << " classes=" << std::setw(4) << c.classes
          << " dim_dev=" << sci(c.dim_deviation) << " shifts=" << c.shift_checked
          << (c.ok() ? "" : "  FAIL " + c.error) << '\n';
  }
  Json extra = {{"max_m", max_m}, {"max_dim_deviation", worst}};
  int checked = static_cast<int>(checks.size());
  if (with_fusion_dims) {
    const double fusion_err = fusion_dim_sweep(max_m, exec);
    extra["fusion_dim_error"] = fusion_err;
    ++checked;
    if (!(fusion_err <= 1e-9)) ++failed;
  }
  return finish(check, std::move(items), checked, failed, fmt, out, extra);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"A-D-E classification of extensions of SU(2)_k and Virasoro c<1 nets", "adenets"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  Limits limits;
  bool serial = false;
  app.add_option("--format", format, "text | json | dot (default: $ADENETS_FORMAT or text)");
  app.add_option("--max-coxeter", limits.max_coxeter, "largest Coxeter number to enumerate")
      ->capture_default_str();
  app.add_flag("--serial", serial, "use the serial reference kernels");

  auto* classify = app.add_subcommand("classify", "enumerate complete invariants");
  classify->require_subcommand(1);
  int level = 0, m = 0;
  auto* c_su2 = classify->add_subcommand("su2", "pairs (G,[v]) for SU(2)_k");
  c_su2->add_option("--level", level, "level k")->required();
  auto* c_vir = classify->add_subcommand("vir", "quadruples (G1,[v1],G2,[v2]) for Vir_c");
  c_vir->add_option("--m", m, "c = 1 - 6/(m(m+1))")->required();

  auto* theta = app.add_subcommand("theta", "canonical endomorphism and fusion graph");
  bool table = false;
  std::string g1, g2;
  int v1 = -1, v2 = -1;
  theta->add_flag("--table41", table, "canonical endomorphisms at all extremal pairs");
  auto* o_m = theta->add_option("--m", m);
  auto* o_g1 = theta->add_option("--g1", g1);
  auto* o_v1 = theta->add_option("--v1", v1);
  auto* o_g2 = theta->add_option("--g2", g2);
  auto* o_v2 = theta->add_option("--v2", v2);

  auto* graph = app.add_subcommand("graph", "describe or export a Dynkin graph");
  std::string kind;
  graph->add_option("kind", kind, "A<n>, D<n>, E6, E7, E8 or T<n>")->required();

  auto* brat = app.add_subcommand("bratteli", "Bratteli diagram from a vertex");
  int vertex = 0, depth = -1;
  brat->add_option("--graph", kind)->required();
  brat->add_option("--v", vertex)->required();
  brat->add_option("--depth", depth, "default 2h");

  auto* verify = app.add_subcommand("verify", "verification sweeps");
  verify->require_subcommand(1);
  int max_m = 0, max_h = 0;
  double tol = 1e-9;
  auto* v_lemma = verify->add_subcommand("lemma", "PF-ratio / quantum-integer disjointness");
  v_lemma->add_option("--max-m", max_m)->required();
  v_lemma->add_option("--tol", tol)->capture_default_str();
  auto* v_dims = verify->add_subcommand("dims", "dimension consistency of theta and fusion");
  v_dims->add_option("--max-m", max_m)->required();
  auto* v_nimrep = verify->add_subcommand("nimrep", "nimrep integrality and tau pattern");
  v_nimrep->add_option("--max-h", max_h)->required();
  auto* v_theta = verify->add_subcommand("theta", "structural theta checks and shift identity");
  v_theta->add_option("--max-m", max_m)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Execution exec = serial ? Execution::Serial : Execution::Parallel;
  try {
    if (*classify) {
      const auto fmt = resolve_format(format, false);
      if (*c_su2) return classify_su2(level, fmt, limits, out);
      return classify_vir(m, fmt, limits, out);
    }
    if (*theta) {
      const auto fmt = resolve_format(format, true);
      if (table) {
        if (*o_m || *o_g1 || *o_g2 || *o_v1 || *o_v2)
          throw UsageError("--table41 takes no invariant options");
        return theta_table(fmt, out);
      }
      if (!*o_m || !*o_g1 || !*o_v1 || !*o_g2 || !*o_v2)
        throw UsageError("theta needs --m, --g1, --v1, --g2, --v2 (or --table41)");
      if (m + 1 > limits.max_coxeter) throw UsageError("m exceeds --max-coxeter");
      return theta_one(m, g1, v1, g2, v2, fmt, out);
    }
    if (*graph) return graph_cmd(kind, resolve_format(format, true), out);
    if (*brat) return bratteli_cmd(kind, vertex, depth, resolve_format(format, false), out);
    if (*verify) {
      const auto fmt = resolve_format(format, false);
      if (*v_lemma) return verify_lemma(max_m, tol, exec, fmt, out);
      if (*v_nimrep) return verify_nimrep(max_h, exec, fmt, out);
      if (*v_dims)
        return verify_theta("dims", max_m, exec, {false, false}, fmt, out, true);
      return verify_theta("theta", max_m, exec, {}, fmt, out, false);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace adenets::cli
