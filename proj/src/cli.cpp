#include "newtonlab/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "newtonlab/families.hpp"
#include "newtonlab/parallel.hpp"
#include "newtonlab/report.hpp"
#include "newtonlab/strata.hpp"
#include "newtonlab/zeta.hpp"

namespace newtonlab::cli {
namespace {

struct Settings {
  ReportFormat format = ReportFormat::KeyValue;
  unsigned threads = 1;
};

class Options {
 public:
  Options(const std::string& verb, const std::vector<std::string>& tokens,
          const std::set<std::string>& allowed)
      : verb_(verb) {
    for (const auto& t : tokens) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) usage("expected key=value, got '" + t + "'");
      const std::string key = t.substr(0, eq);
      if (!allowed.count(key)) {
        std::string keys;
        for (const auto& k : allowed) keys += (keys.empty() ? "" : ", ") + k;
        usage("unknown key '" + key + "' (allowed: " + keys + ")");
      }
      if (!values_.emplace(key, t.substr(eq + 1)).second) usage("duplicate key '" + key + "'");
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string str(const std::string& key, std::optional<std::string> fallback = std::nullopt) const {
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    if (fallback) return *fallback;
    usage("missing required key '" + key + "'");
  }

  std::int64_t integer(const std::string& key, std::optional<std::int64_t> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      usage("missing required key '" + key + "'");
    }
    return parse_int(key, str(key));
  }

  std::pair<std::int64_t, std::int64_t> range(const std::string& key) const {
    const std::string v = str(key);
    const auto dots = v.find("..");
    if (dots == std::string::npos) {
      const std::int64_t x = parse_int(key, v);
      return {x, x};
    }
    const std::int64_t lo = parse_int(key, v.substr(0, dots));
    const std::int64_t hi = parse_int(key, v.substr(dots + 2));
    if (lo > hi) usage(key + " range " + v + " is empty");
    if (hi - lo > 100000) usage(key + " range " + v + " is too long");
    return {lo, hi};
  }

  [[noreturn]] void usage(const std::string& msg) const { fail(ErrorCode::UsageError, verb_ + ": " + msg); }

 private:
  std::int64_t parse_int(const std::string& key, const std::string& v) const {
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      usage("key '" + key + "' needs an integer, got '" + v + "'");
    }
    return x;
  }

  std::string verb_;
  std::map<std::string, std::string> values_;
};

std::vector<Rational> parse_slope_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (!text.empty()) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> member_columns(FamilySource source) {
  if (source == FamilySource::ManyBranchPoints) {
    return {"source", "p", "d", "g", "k", "delta", "i", "j", "slopes", "exact"};
  }
  return {"source", "p", "g", "k", "d", "i", "u", "v", "branches", "split", "slopes", "exact"};
}

std::vector<std::string> member_row(const FamilyMember& m) {
  auto s = [](std::int64_t v) { return std::to_string(v); };
  const std::string exact(to_string(m.exactness));
  if (m.source == FamilySource::ManyBranchPoints) {
    return {"T4", s(m.p), s(m.d), s(m.g), s(m.k), s(m.delta), s(m.i), s(m.j), m.predicted.str(), exact};
  }
  return {"T5", s(m.p), s(m.g), s(m.k), s(m.d), s(m.i), s(m.u), s(m.v), format_branches(m.spec.branches),
          m.split_pole ? "d-2,1" : "none", m.predicted.str(), exact};
}

FamilySource parse_source(const Options& o) {
  const std::string src = o.str("source", "T4");
  if (src == "T4") return FamilySource::ManyBranchPoints;
  if (src == "T5") return FamilySource::OneBranchPoint;
  o.usage("source must be T4 or T5");
}

Report cmd_predict(const Options& o) {
  CoverSpec spec;
  spec.p = o.integer("p");
  spec.base_genus = o.integer("gX", 0);
  const std::string ord = o.str("ordinary", "true");
  if (ord != "true" && ord != "false") o.usage("ordinary must be true or false");
  spec.base_ordinary = ord == "true";
  spec.branches = parse_branches(o.str("branches", ""));
  spec.validate();
  Report r{"predict", {"slopes", "exact", "genus", "prank"}, {}, {}};
  r.add_row({hodge_lower_bound(spec).str(), std::string(to_string(exactness_class(spec))),
             std::to_string(rh_genus(spec)),
             spec.base_ordinary ? std::to_string(ds_prank(spec)) : "unknown"});
  return r;
}

Report cmd_construct(const Options& o) {
  const FamilySource source = parse_source(o);
  FamilyMember m = source == FamilySource::ManyBranchPoints
                       ? construct_theorem4(o.integer("p"), o.integer("d"), o.integer("g"), o.integer("k"))
                       : construct_theorem5(o.integer("p"), o.integer("g"));
  if (source == FamilySource::OneBranchPoint && (o.has("d") || o.has("k"))) {
    o.usage("source=T5 derives d and k from g");
  }
  Report r{"construct", member_columns(source), {}, {}};
  r.add_row(member_row(m));
  if (m.split_pole) r.notes.push_back("p divides d: poles of orders d-2 and 1 keep the genus at g");
  return r;
}

Report cmd_zeta_verify(const Options& o, const Settings& settings, bool& counterexample) {
  ZetaOptions zo;
  zo.threads = settings.threads;
  zo.field_guard = field_guard_from_env();
  const std::string kernel = o.str("kernel", "auto");
  if (kernel == "scalar") {
    zo.kernel = kernels::Path::Scalar;
  } else if (kernel == "avx2") {
    zo.kernel = kernels::Path::Avx2;
  } else if (kernel != "auto") {
    o.usage("kernel must be auto, scalar or avx2");
  }
  const VerificationReport v = verify_prediction(o.str("f"), o.integer("p"), zo);
  counterexample = v.verdict == Verdict::Counterexample;
  Report r{"zeta-verify",
           {"verdict", "measured", "predicted", "genus", "branches", "exact", "prank_measured",
            "prank_predicted", "reduced", "L", "verified_through", "kernel"},
           {},
           {}};
  r.add_row({std::string(to_string(v.verdict)), v.measured.str(), v.predicted.str(), std::to_string(v.genus),
             format_branches(v.spec.branches), std::string(to_string(v.exactness)),
             std::to_string(v.prank_measured), std::to_string(v.prank_predicted), v.reduced.str(), v.l.str(),
             std::to_string(v.l.verified_through), std::string(kernels::to_string(v.kernel))});
  if (v.l.truncated) r.notes.push_back("round-trip recount stopped before N_2g (field guard or budget)");
  if (counterexample) r.notes.push_back("COUNTEREXAMPLE: " + v.failures);
  return r;
}

Report cmd_codim(const Options& o) {
  const NewtonPolygon p = NewtonPolygon::parse(o.str("slopes"));
  if (o.has("g") && o.integer("g") != p.genus()) {
    o.usage("g=" + o.str("g") + " does not match slope count " + std::to_string(p.height()));
  }
  const UnlikelyReport u = is_unlikely_polygon(p);
  Report r{"codim", {"omega", "exact", "unlikely", "g", "codimT", "dimA", "marginal"}, {}, {}};
  r.add_row({std::to_string(u.omega.count), bool_str(u.omega.exact_codimension), bool_str(u.is_unlikely),
             std::to_string(p.genus()), std::to_string(u.codim_torelli), std::to_string(u.ambient_dim),
             bool_str(u.marginal)});
  return r;
}

GenusIndex parse_pair(const Options& o, const std::string& key) {
  const std::string v = o.str(key);
  const auto comma = v.find(',');
  if (comma == std::string::npos) o.usage(key + " must be g,k");
  std::int64_t g = 0, k = 0;
  auto r1 = std::from_chars(v.data(), v.data() + comma, g);
  auto r2 = std::from_chars(v.data() + comma + 1, v.data() + v.size(), k);
  if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != v.data() + comma || r2.ptr != v.data() + v.size()) {
    o.usage(key + " must be g,k");
  }
  return {g, k};
}

Report cmd_oort(const Options& o) {
  const OortWitness w = oort_witness(o.integer("p"), o.integer("d"), parse_pair(o, "first"), parse_pair(o, "second"));
  Report r{"oort", {"holds", "g", "k", "amalgam", "predicted"}, {}, {}};
  r.add_row({bool_str(w.holds), std::to_string(w.combined.g), std::to_string(w.combined.k), w.amalgam.str(),
             w.combined.predicted.str()});
  return r;
}

std::vector<FamilyMember> sweep_members(const Options& o, unsigned threads) {
  const FamilySource source = parse_source(o);
  const std::int64_t p = o.integer("p");
  const auto [g_lo, g_hi] = o.range("g");
  if (source == FamilySource::OneBranchPoint && (o.has("d") || o.has("k"))) {
    o.usage("source=T5 derives d and k from g");
  }
  std::optional<std::int64_t> fixed_k;
  if (o.str("k", "max") != "max") fixed_k = o.integer("k");
  const std::int64_t d = source == FamilySource::ManyBranchPoints ? o.integer("d") : 0;
  const std::size_t n = static_cast<std::size_t>(g_hi - g_lo + 1);
  std::vector<std::optional<FamilyMember>> slots(n);
  std::exception_ptr error;
  std::mutex mu;
  parallel_for(n, threads, [&](std::size_t idx) {
    const std::int64_t g = g_lo + static_cast<std::int64_t>(idx);
    try {
      if (source == FamilySource::OneBranchPoint) {
        slots[idx] = construct_theorem5(p, g);
        return;
      }
      const auto k = fixed_k ? fixed_k : theorem4_max_k(p, d, g);
      if (!k) return;
      slots[idx] = construct_theorem4(p, d, g, *k);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Inadmissible || e.code() == ErrorCode::GenusTooSmall) return;
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  });
  if (error) std::rethrow_exception(error);
  std::vector<FamilyMember> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

Report cmd_sweep(const Options& o, const Settings& settings) {
  const std::vector<FamilyMember> members = sweep_members(o, settings.threads);
  const std::string kind = o.str("report", "members");
  if (kind == "members") {
    Report r{"sweep", member_columns(parse_source(o)), {}, {}};
    for (const auto& m : members) r.add_row(member_row(m));
    return r;
  }
  if (kind == "unlikely") {
    std::vector<FamilyMemberPolygon> polys;
    for (const auto& m : members) polys.push_back({m.g, m.predicted});
    const auto rep = unlikely_family_report(std::move(polys), BasicGraph::parabola(), settings.threads);
    Report r{"sweep", {"g", "omega", "codimT", "dimA", "unlikely", "mingap", "growth"}, {}, {}};
    for (const auto& row : rep.rows) {
      r.add_row({std::to_string(row.g), std::to_string(row.verdict.omega.count),
                 std::to_string(row.verdict.codim_torelli), std::to_string(row.verdict.ambient_dim),
                 bool_str(row.verdict.is_unlikely), row.min_gap.str(), row.growth.str()});
    }
    r.notes.push_back("threshold=" + (rep.threshold ? std::to_string(*rep.threshold) : std::string("none")));
    return r;
  }
  if (kind == "frequency") {
    const auto rep = frequency_report(members, parse_slope_list(o.str("slopes")));
    Report r{"sweep", {"g"}, {}, {}};
    for (const auto& s : rep.distinct_slopes) r.columns.push_back("e[" + s.str() + "]");
    r.columns.push_back("sup");
    for (const auto& row : rep.rows) {
      std::vector<std::string> cells{std::to_string(row.g)};
      for (const auto& [s, e] : row.deviations) cells.push_back(e.str());
      cells.push_back(row.running_sup.str());
      r.add_row(std::move(cells));
    }
    r.notes.push_back("epsilon=" + rep.epsilon.str());
    return r;
  }
  o.usage("report must be members, unlikely or frequency");
}

Report cmd_asymptotics(const Options& o, const Settings& settings) {
  const std::int64_t p = o.integer("p");
  const auto [g_lo, g_hi] = o.range("g");
  const std::size_t n = static_cast<std::size_t>(g_hi - g_lo + 1);
  std::vector<std::optional<std::vector<std::string>>> rows(n);
  std::exception_ptr error;
  std::mutex mu;
  const BasicGraph parabola = BasicGraph::parabola();
  parallel_for(n, settings.threads, [&](std::size_t idx) {
    const std::int64_t g = g_lo + static_cast<std::int64_t>(idx);
    try {
      const FamilyMember m = construct_theorem5(p, g);
      const Rational gap = min_gap(scaled(m.predicted), parabola);
      rows[idx] = std::vector<std::string>{std::to_string(g), std::to_string(m.d), m.split_pole ? "d-2,1" : "none",
                                           gap.str(), (gap * Rational(g)).str()};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GenusTooSmall) return;
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  });
  if (error) std::rethrow_exception(error);
  Report r{"asymptotics", {"g", "d", "split", "mingap", "g_times_mingap"}, {}, {}};
  for (auto& row : rows) {
    if (row) r.add_row(std::move(*row));
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton polygons of Artin-Schreier curve families", "newtonlab"};
  app.require_subcommand(1);
  std::string format = "kv";
  unsigned threads = default_threads();
  app.add_option("--format", format, "kv or tsv")->check(CLI::IsMember({"kv", "tsv"}));
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));

  struct Verb {
    const char* name;
    const char* help;
    std::set<std::string> keys;
  };
  const std::vector<Verb> verbs = {
      {"predict", "bound and exactness for p= gX= ordinary= branches=d:deg,...", {"p", "gX", "ordinary", "branches"}},
      {"construct", "family member for source=T4 p= d= g= k= or source=T5 p= g=", {"source", "p", "d", "g", "k"}},
      {"zeta-verify", "brute-force check of p= f=<rational function>", {"p", "f", "kernel"}},
      {"codim", "lattice count and unlikely-intersection verdict for slopes=", {"slopes", "g"}},
      {"oort", "amalgamation witness for p= d= first=g,k second=g,k", {"p", "d", "first", "second"}},
      {"sweep", "members over g=a..b (k=max|int, report=members|unlikely|frequency)",
       {"source", "p", "d", "g", "k", "report", "slopes"}},
      {"asymptotics", "one-branch-point family over p= g=a..b against x^2/4", {"p", "g"}},
  };
  std::map<std::string, std::vector<std::string>> tokens;
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("args", tokens[v.name], "key=value arguments");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitInvalidInput;
  }

  Settings settings;
  settings.format = format == "tsv" ? ReportFormat::Tsv : ReportFormat::KeyValue;
  settings.threads = threads;
  try {
    for (const auto& v : verbs) {
      auto* sub = app.get_subcommand(v.name);
      if (!sub->parsed()) continue;
      const Options opts(v.name, tokens[v.name], v.keys);
      const std::string verb = v.name;
      bool counterexample = false;
      Report report;
      if (verb == "predict") report = cmd_predict(opts);
      else if (verb == "construct") report = cmd_construct(opts);
      else if (verb == "zeta-verify") report = cmd_zeta_verify(opts, settings, counterexample);
      else if (verb == "codim") report = cmd_codim(opts);
      else if (verb == "oort") report = cmd_oort(opts);
      else if (verb == "sweep") report = cmd_sweep(opts, settings);
      else report = cmd_asymptotics(opts, settings);
      out << report.emit(settings.format);
      return counterexample ? kExitInternal : kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_internal(e.code()) ? kExitInternal : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalidInput;
}

}  // namespace newtonlab::cli
