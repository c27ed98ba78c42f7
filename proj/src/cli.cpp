/*
   Copyright 2026 the brauercalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "brauer/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <sstream>

#include "brauer/io.hpp"
#include "brauer/sbfinite.hpp"
#include "brauer/selftest.hpp"

namespace brauer {

namespace {

struct Report {
  std::vector<std::string> lines;
  Json json = Json::object();
  bool unknown_seen = false;
};

std::string ext_name(const FieldPtr& ext) {
  return ext->short_name() + "/" + ext->base()->short_name();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<FieldElement> parse_lambda_list(const FieldPtr& field, const std::string& text) {
  std::vector<FieldElement> out;
  std::string s = text;
  if (!s.empty() && s.front() == '[' && s.back() == ']') {
    Json j = Json::parse(s);
    for (auto& e : j) out.push_back(element_from_json(field, e));
    return out;
  }
  for (auto& part : split_csv(s)) out.push_back(parse_element(field, part));
  return out;
}

std::string outcome_tag(Outcome o) { return to_string(o); }

void report_membership(Report& rep, const std::string& key, const NormMembership& nm) {
  std::ostringstream os;
  os << key << "=" << outcome_tag(nm.outcome);
  if (nm.outcome == Outcome::Proved) os << " witness=" << nm.witness->str();
  if (nm.outcome == Outcome::Refuted) os << " (" << nm.certificate << ")";
  if (nm.outcome == Outcome::Unknown) {
    os << " (searched height<=" << nm.bound << ")";
    rep.unknown_seen = true;
  }
  rep.lines.push_back(os.str());
  Json j;
  j["outcome"] = outcome_tag(nm.outcome);
  if (nm.outcome == Outcome::Proved) j["witness"] = element_to_json(*nm.witness);
  if (!nm.certificate.empty()) j["certificate"] = nm.certificate;
  j["bound"] = nm.bound;
  rep.json[key] = j;
}

StructureConstantAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open algebra file: " + path);
  Json j = Json::parse(in);
  return algebra_from_json(j);
}

GroupTable parse_group(const std::string& name) {
  if (name == "S3") return GroupTable::symmetric3();
  if (name.size() >= 2 && name.front() == 'Z') {
    std::string digits = name.substr(1);
    if (digits.front() == '/') digits = digits.substr(1);
    return GroupTable::cyclic(std::stol(digits));
  }
  // otherwise a path to a JSON multiplication table
  std::ifstream in(name);
  if (!in) throw ValidationError("unknown group (use Zn, S3, or a JSON table file): " + name);
  Json j = Json::parse(in);
  return GroupTable::from_table(j.get<std::vector<long>>());
}

// --------------------------------------------------------------------------

void run_field_norm(Report& rep, const FieldPtr& ext, const std::string& xlit) {
  FieldElement x = parse_element(ext, xlit);
  FieldElement n = norm(ext, x);
  rep.lines.push_back("norm=" + n.str());
  rep.json["norm"] = element_to_json(n);
  FieldElement t = trace(ext, x);
  rep.lines.push_back("trace=" + t.str());
  rep.json["trace"] = element_to_json(t);
}

void run_field_membership(Report& rep, const FieldPtr& ext, const std::string& alit,
                          long bound) {
  FieldElement a = parse_element(ext->base(), alit);
  report_membership(rep, "membership", norm_membership(ext, a, bound));
}

void run_field_hilbert90(Report& rep, const FieldPtr& ext, const std::string& lamlit) {
  FieldElement lam = parse_element(ext, lamlit);
  FieldElement w = hilbert90_witness(ext, lam);
  rep.lines.push_back("witness=" + w.str());
  rep.json["witness"] = element_to_json(w);
}

void run_algebra_check(Report& rep, const StructureConstantAlgebra& a) {
  rep.lines.push_back("dim=" + std::to_string(a.dim()));
  rep.json["dim"] = a.dim();
  long cd = static_cast<long>(center(a).dim());
  rep.lines.push_back("center_dim=" + std::to_string(cd));
  rep.json["center_dim"] = cd;
  try {
    long rd = static_cast<long>(radical(a).dim());
    rep.lines.push_back("radical_dim=" + std::to_string(rd));
    rep.json["radical_dim"] = rd;
    bool cs = (cd == 1 && rd == 0);
    rep.lines.push_back(std::string("central_simple=") + (cs ? "true" : "false"));
    rep.json["central_simple"] = cs;
  } catch (const UnsupportedError& e) {
    rep.lines.push_back(std::string("radical_dim=unsupported (") + e.what() + ")");
    rep.json["radical_dim"] = "unsupported";
    rep.unknown_seen = true;
  }
}

void run_algebra_ideals(Report& rep, const StructureConstantAlgebra& a) {
  auto print_set = [](const std::set<long>& dims) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (long d : dims) {
      if (!first) os << ",";
      first = false;
      os << d;
    }
    os << "}";
    return os.str();
  };
  std::set<long> right = right_ideal_dimensions(a);
  // left ideals are the right ideals of the opposite algebra; both
  // conventions are reported explicitly
  std::set<long> left = right_ideal_dimensions(opposite(a));
  rep.lines.push_back("right_ideal_dims=" + print_set(right));
  rep.lines.push_back("left_ideal_dims(right ideals of the opposite algebra)=" +
                      print_set(left));
  rep.json["right_ideal_dims"] = right;
  rep.json["left_ideal_dims"] = left;
}

void run_zero_divisor(Report& rep, const ZeroDivisorResult& zd,
                      const StructureConstantAlgebra& a) {
  std::ostringstream os;
  os << "zerodivisor=" << outcome_tag(zd.outcome);
  if (zd.outcome == Outcome::Proved)
    os << " x=" << a.element_str(zd.x) << " y=" << a.element_str(zd.y);
  else
    os << " (" << zd.certificate << ")";
  if (zd.outcome == Outcome::Unknown) rep.unknown_seen = true;
  rep.lines.push_back(os.str());
  Json j;
  j["outcome"] = outcome_tag(zd.outcome);
  j["certificate"] = zd.certificate;
  if (zd.outcome == Outcome::Proved) {
    Json jx = Json::array(), jy = Json::array();
    for (auto& c : zd.x) jx.push_back(element_to_json(c));
    for (auto& c : zd.y) jy.push_back(element_to_json(c));
    j["x"] = jx;
    j["y"] = jy;
  }
  rep.json["zerodivisor"] = j;
}

void run_cyclic_period(Report& rep, const CyclicBrauerClass& c, long bound) {
  PeriodResult pr = period(c, bound);
  std::ostringstream os;
  if (pr.decided) {
    os << "period=" << pr.value << " (proved: " << pr.certificate << ")";
  } else {
    os << "period>=" << pr.value << " (unknown, searched height<=" << pr.bound << ")";
    rep.unknown_seen = true;
  }
  rep.lines.push_back(os.str());
  Json j;
  j["decided"] = pr.decided;
  j["value"] = pr.value;
  j["certificate"] = pr.certificate;
  rep.json["period"] = j;
}

void run_cyclic_index(Report& rep, const CyclicBrauerClass& c, long bound) {
  IndexBounds ib = index_bounds(c, bound);
  std::ostringstream os;
  os << "index=(" << ib.lower << "," << ib.upper << ")";
  if (!ib.lower_decided) {
    os << " (period unknown)";
    rep.unknown_seen = true;
  } else if (ib.exact) {
    os << " (proved)";
  }
  rep.lines.push_back(os.str());
  rep.json["index"] = {{"lower", ib.lower},
                       {"upper", ib.upper},
                       {"lower_decided", ib.lower_decided},
                       {"exact", ib.exact}};
}

void run_cyclic_decompose(Report& rep, const CyclicBrauerClass& c, long bound) {
  auto parts = primary_decomposition(c, bound);
  rep.lines.push_back("parts=" + std::to_string(parts.size()));
  Json arr = Json::array();
  for (auto& p : parts) {
    rep.lines.push_back("part prime=" + std::to_string(p.prime) +
                        " period=" + std::to_string(p.prime_power) + " a=" + p.cls.a.str());
    arr.push_back({{"prime", p.prime},
                   {"period", p.prime_power},
                   {"a", element_to_json(p.cls.a)}});
  }
  rep.json["parts"] = arr;
}

void run_circle_class(Report& rep, const FieldPtr& ext, const SplitLineBundle& l, long bound) {
  SplitClassResult c1 = c1_split(l);
  CyclicBrauerClass cls = class_of_circle_bundle(ext, l);
  SplitVerdict sv = is_split(cls, bound);
  std::ostringstream os;
  os << "c1=" << cls.a.str() << " class=(" << ext_name(ext) << "," << cls.a.str() << ")"
     << " split=" << outcome_tag(sv.outcome);
  if (sv.outcome == Outcome::Unknown) rep.unknown_seen = true;
  rep.lines.push_back(os.str());
  rep.json["c1"] = element_to_json(cls.a);
  rep.json["class"] = class_to_json(cls);
  rep.json["split"] = outcome_tag(sv.outcome);
  (void)c1;
}

void run_selftest_cmd(Report& rep, const std::string& suite, bool quiet) {
  std::vector<SuiteResult> results;
  if (suite == "all")
    results = run_all_selftests();
  else
    results.push_back(run_selftest(suite));
  Json arr = Json::array();
  bool failed = false;
  for (auto& r : results) {
    std::ostringstream os;
    os << "suite=" << r.name << " checks=" << r.checks << " failures=" << r.failures
       << " time=" << r.millis << "ms";
    rep.lines.push_back(os.str());
    if (!quiet)
      for (auto& n : r.notes) rep.lines.push_back("  " + n);
    arr.push_back({{"suite", r.name},
                   {"checks", r.checks},
                   {"failures", r.failures},
                   {"millis", r.millis}});
    if (!r.passed()) failed = true;
  }
  rep.json["selftest"] = arr;
  if (failed) throw ValidationError("selftest failures");
}

// --- task documents ---------------------------------------------------------

struct TaskContext {
  std::map<std::string, FieldPtr> fields;
  std::map<std::string, StructureConstantAlgebra> algebras;
  std::map<std::string, CyclicBrauerClass> classes;
  std::map<std::string, SplitLineBundle> split_bundles;
  std::map<std::string, GaloisLineBundle> galois_bundles;
  std::map<std::string, GroupTable> curves;

  FieldPtr field(const Json& ref) const {
    if (ref.is_string()) {
      auto it = fields.find(ref.get<std::string>());
      if (it != fields.end()) return it->second;
      return parse_field_name(ref.get<std::string>());
    }
    return field_from_json(ref);
  }
};

void run_task(Report& rep, TaskContext& ctx, const Json& task, long default_bound) {
  std::string op = task.at("op").get<std::string>();
  long bound = task.value("bound", default_bound);
  if (op == "field.norm") {
    FieldPtr ext = ctx.field(task.at("ext"));
    FieldElement x = element_from_json(ext, task.at("x"));
    rep.lines.push_back("norm=" + norm(ext, x).str());
    return;
  }
  if (op == "field.membership") {
    FieldPtr ext = ctx.field(task.at("ext"));
    FieldElement a = element_from_json(ext->base(), task.at("a"));
    report_membership(rep, "membership", norm_membership(ext, a, bound));
    return;
  }
  if (op == "field.hilbert90") {
    FieldPtr ext = ctx.field(task.at("ext"));
    FieldElement lam = element_from_json(ext, task.at("lambda"));
    rep.lines.push_back("witness=" + hilbert90_witness(ext, lam).str());
    return;
  }
  if (op == "algebra.check" || op == "algebra.zerodivisor" || op == "algebra.ideals") {
    auto it = ctx.algebras.find(task.at("algebra").get<std::string>());
    if (it == ctx.algebras.end()) throw ValidationError("unresolved algebra reference");
    if (op == "algebra.check") run_algebra_check(rep, it->second);
    if (op == "algebra.zerodivisor")
      run_zero_divisor(rep, find_zero_divisor(it->second, bound), it->second);
    if (op == "algebra.ideals") run_algebra_ideals(rep, it->second);
    return;
  }
  if (op.rfind("cyclic.", 0) == 0) {
    CyclicBrauerClass c = [&] {
      if (task.contains("class")) {
        auto it = ctx.classes.find(task.at("class").get<std::string>());
        if (it == ctx.classes.end()) throw ValidationError("unresolved class reference");
        return it->second;
      }
      FieldPtr ext = ctx.field(task.at("ext"));
      return make_class(ext, element_from_json(ext->base(), task.at("a")));
    }();
    if (op == "cyclic.split") report_membership(rep, "split", is_split(c, bound).membership);
    else if (op == "cyclic.period") run_cyclic_period(rep, c, bound);
    else if (op == "cyclic.index") run_cyclic_index(rep, c, bound);
    else if (op == "cyclic.decompose") run_cyclic_decompose(rep, c, bound);
    else if (op == "cyclic.build") {
      StructureConstantAlgebra a = build_cyclic_algebra(c.ext, c.a);
      rep.lines.push_back("dim=" + std::to_string(a.dim()));
    } else
      throw ValidationError("unknown task op: " + op);
    return;
  }
  if (op == "sb.points") {
    FieldPtr f = ctx.field(task.at("field"));
    auto pts = projective_points(task.at("n").get<long>(), f);
    rep.lines.push_back("count=" + std::to_string(pts.size()));
    return;
  }
  if (op == "circle.class" || op == "circle.push" || op == "circle.end") {
    SplitLineBundle l = [&] {
      if (task.contains("bundle")) {
        auto it = ctx.split_bundles.find(task.at("bundle").get<std::string>());
        if (it == ctx.split_bundles.end()) throw ValidationError("unresolved bundle reference");
        return it->second;
      }
      // inline bundle with the circle field resolved through the document
      const Json& cj = task.at("circle");
      FieldPtr field = ctx.field(cj.at("field"));
      long length = cj.at("length").get<long>();
      std::vector<FieldElement> lambda;
      for (auto& e : task.at("lambda")) lambda.push_back(element_from_json(field, e));
      return make_split_line_bundle(make_split_circle(std::move(field), length),
                                    std::move(lambda));
    }();
    FieldPtr ext = task.contains("ext") ? ctx.field(task.at("ext")) : l.circle.field;
    if (op == "circle.class") {
      run_circle_class(rep, ext, l, bound);
    } else {
      GluedBundle b = pushforward(ext, l);
      if (op == "circle.push") {
        rep.lines.push_back("rank=" + std::to_string(b.rank) +
                            std::string(" geometrically_split=") +
                            (geometrically_split(b) ? "true" : "false"));
      } else {
        run_algebra_check(rep, global_end_algebra(b));
      }
    }
    return;
  }
  if (op == "circle.pull") {
    GaloisLineBundle l = [&] {
      if (task.contains("bundle")) {
        auto it = ctx.galois_bundles.find(task.at("bundle").get<std::string>());
        if (it == ctx.galois_bundles.end()) throw ValidationError("unresolved bundle reference");
        return it->second;
      }
      return galois_bundle_from_json(task);
    }();
    SplitLineBundle pb = pullback(l);
    rep.lines.push_back("c1=" + c1_split(pb).c1.str());
    return;
  }
  if (op == "curve.build") {
    GroupTable g = [&] {
      if (task.contains("curve")) {
        auto it = ctx.curves.find(task.at("curve").get<std::string>());
        if (it == ctx.curves.end()) throw ValidationError("unresolved curve reference");
        return it->second;
      }
      return GroupTable::from_table(task.at("table").get<std::vector<long>>());
    }();
    CurveGraph graph = build_universal_curve(g, task.at("generators").get<std::vector<long>>());
    rep.lines.push_back("vertices=" + std::to_string(graph.vertex_count()) +
                        " components=" + std::to_string(graph.edge_count()) +
                        " orbits=" + std::to_string(graph.orbit_count()));
    return;
  }
  throw ValidationError("unknown task op: " + op);
}

void run_task_document(Report& rep, const Json& doc, long default_bound) {
  TaskContext ctx;
  if (doc.contains("fields"))
    for (auto& [name, j] : doc.at("fields").items()) ctx.fields[name] = ctx.field(j);
  if (doc.contains("algebras"))
    for (auto& [name, j] : doc.at("algebras").items())
      ctx.algebras.emplace(name, algebra_from_json(j));
  if (doc.contains("classes"))
    for (auto& [name, j] : doc.at("classes").items()) {
      FieldPtr ext = ctx.field(j.at("ext"));
      ctx.classes.emplace(name,
                          make_class(ext, element_from_json(ext->base(), j.at("a"))));
    }
  if (doc.contains("bundles"))
    for (auto& [name, j] : doc.at("bundles").items()) {
      if (j.contains("lambda1"))
        ctx.galois_bundles.emplace(name, galois_bundle_from_json(j));
      else
        ctx.split_bundles.emplace(name, split_bundle_from_json(j));
    }
  if (doc.contains("curves"))
    for (auto& [name, j] : doc.at("curves").items())
      ctx.curves.emplace(name, GroupTable::from_table(j.get<std::vector<long>>()));
  if (!doc.contains("tasks")) throw ValidationError("task document has no tasks");
  long i = 0;
  for (auto& task : doc.at("tasks")) {
    rep.lines.push_back("task " + std::to_string(i) + ": " +
                        task.at("op").get<std::string>());
    run_task(rep, ctx, task, default_bound);
    ++i;
  }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computation with central simple algebras, Brauer classes, and bundles "
               "on circles of rational curves"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false, quiet = false;
  long bound = 10;
  app.add_flag("--json", json_mode, "machine-readable JSON output");
  app.add_flag("--quiet", quiet, "suppress detail lines");
  app.add_option("--bound", bound, "search bound for undecidable questions (height)");

  Report rep;
  std::function<void()> action;

  // field -------------------------------------------------------------------
  auto* field_cmd = app.add_subcommand("field", "field tower operations");
  std::string opt_ext, opt_x, opt_a, opt_lambda;
  auto* f_norm = field_cmd->add_subcommand("norm", "norm and trace of an element");
  f_norm->add_option("--ext", opt_ext, "extension K/k")->required();
  f_norm->add_option("--x", opt_x, "element of K")->required();
  f_norm->callback([&] { run_field_norm(rep, parse_extension_name(opt_ext), opt_x); });
  auto* f_mem = field_cmd->add_subcommand("membership", "decide a in norm(K*)");
  f_mem->add_option("--ext", opt_ext)->required();
  f_mem->add_option("--a", opt_a)->required();
  f_mem->callback(
      [&] { run_field_membership(rep, parse_extension_name(opt_ext), opt_a, bound); });
  auto* f_h90 = field_cmd->add_subcommand("hilbert90", "witness f with lambda = f/sigma(f)");
  f_h90->add_option("--ext", opt_ext)->required();
  f_h90->add_option("--lambda", opt_lambda)->required();
  f_h90->callback([&] { run_field_hilbert90(rep, parse_extension_name(opt_ext), opt_lambda); });

  // algebra -----------------------------------------------------------------
  auto* alg_cmd = app.add_subcommand("algebra", "structure-constant algebra operations");
  std::string opt_file, opt_file2;
  auto* a_check = alg_cmd->add_subcommand("check", "center, radical, central simplicity");
  a_check->add_option("--file", opt_file, "algebra JSON file")->required();
  a_check->callback([&] { run_algebra_check(rep, load_algebra(opt_file)); });
  auto* a_tensor = alg_cmd->add_subcommand("tensor", "tensor product of two algebras");
  a_tensor->add_option("--file", opt_file)->required();
  a_tensor->add_option("--file2", opt_file2)->required();
  a_tensor->callback([&] {
    StructureConstantAlgebra t = tensor_product(load_algebra(opt_file), load_algebra(opt_file2));
    rep.lines.push_back("dim=" + std::to_string(t.dim()));
    rep.json = algebra_to_json(t);
  });
  auto* a_opp = alg_cmd->add_subcommand("opp", "opposite algebra");
  a_opp->add_option("--file", opt_file)->required();
  a_opp->callback([&] {
    StructureConstantAlgebra o = opposite(load_algebra(opt_file));
    rep.lines.push_back("dim=" + std::to_string(o.dim()));
    rep.json = algebra_to_json(o);
  });
  auto* a_zd = alg_cmd->add_subcommand("zerodivisor", "zero divisor search");
  a_zd->add_option("--file", opt_file)->required();
  a_zd->callback([&] {
    StructureConstantAlgebra a = load_algebra(opt_file);
    run_zero_divisor(rep, find_zero_divisor(a, bound), a);
  });
  auto* a_ideals = alg_cmd->add_subcommand("ideals", "right-ideal dimension spectrum");
  a_ideals->add_option("--file", opt_file)->required();
  a_ideals->callback([&] { run_algebra_ideals(rep, load_algebra(opt_file)); });

  // cyclic ------------------------------------------------------------------
  auto* cyc_cmd = app.add_subcommand("cyclic", "cyclic algebras and Brauer classes");
  auto add_class_opts = [&](CLI::App* sub) {
    sub->add_option("--ext", opt_ext, "cyclic extension K/k")->required();
    sub->add_option("--a", opt_a, "class element in k*")->required();
  };
  auto get_class = [&] {
    FieldPtr ext = parse_extension_name(opt_ext);
    return make_class(ext, parse_element(ext->base(), opt_a));
  };
  auto* c_build = cyc_cmd->add_subcommand("build", "construct the cyclic algebra");
  add_class_opts(c_build);
  c_build->callback([&] {
    CyclicBrauerClass c = get_class();
    StructureConstantAlgebra a = build_cyclic_algebra(c.ext, c.a);
    rep.lines.push_back("dim=" + std::to_string(a.dim()));
    rep.lines.push_back(std::string("central_simple=") +
                        (is_central_simple(a) ? "true" : "false"));
    rep.json = algebra_to_json(a);
  });
  auto* c_split = cyc_cmd->add_subcommand("split", "split test by norm membership");
  add_class_opts(c_split);
  c_split->callback([&] {
    SplitVerdict sv = is_split(get_class(), bound);
    report_membership(rep, "split", sv.membership);
  });
  auto* c_period = cyc_cmd->add_subcommand("period", "order in the relative Brauer group");
  add_class_opts(c_period);
  c_period->callback([&] { run_cyclic_period(rep, get_class(), bound); });
  auto* c_index = cyc_cmd->add_subcommand("index", "index bounds");
  add_class_opts(c_index);
  c_index->callback([&] { run_cyclic_index(rep, get_class(), bound); });
  auto* c_dec = cyc_cmd->add_subcommand("decompose", "primary decomposition");
  add_class_opts(c_dec);
  c_dec->callback([&] { run_cyclic_decompose(rep, get_class(), bound); });
  auto* c_nrd = cyc_cmd->add_subcommand("nrd", "reduced norm form");
  add_class_opts(c_nrd);
  c_nrd->callback([&] {
    CyclicBrauerClass c = get_class();
    ReducedNormForm form = reduced_norm_form(c.ext, c.a);
    std::vector<std::string> names;
    for (long v = 0; v < form.variables(); ++v) names.push_back("x" + std::to_string(v));
    rep.lines.push_back("nrd=" + form.str(names));
    rep.json["degree"] = form.degree();
    rep.json["nrd"] = form.str(names);
  });

  // sb ----------------------------------------------------------------------
  auto* sb_cmd = app.add_subcommand("sb", "projective calculus over finite fields");
  long opt_n = 0, opt_q = 0;
  std::string opt_matrix;
  auto* s_points = sb_cmd->add_subcommand("points", "enumerate P^n(F_q)");
  s_points->add_option("--n", opt_n)->required();
  s_points->add_option("--q", opt_q)->required();
  s_points->callback([&] {
    auto pts = projective_points(opt_n, parse_field_name("F" + std::to_string(opt_q)));
    rep.lines.push_back("count=" + std::to_string(pts.size()));
    Json arr = Json::array();
    for (auto& p : pts) {
      if (!quiet) rep.lines.push_back(p.str());
      arr.push_back(p.str());
    }
    rep.json["count"] = pts.size();
    rep.json["points"] = arr;
  });
  auto* s_zeros = sb_cmd->add_subcommand("zeros", "zero locus of a tangent section");
  s_zeros->add_option("--n", opt_n)->required();
  s_zeros->add_option("--q", opt_q)->required();
  s_zeros->add_option("--matrix", opt_matrix, "JSON matrix (n+1)x(n+1)")->required();
  s_zeros->callback([&] {
    FieldPtr f = parse_field_name("F" + std::to_string(opt_q));
    Json j = Json::parse(opt_matrix);
    Matrix a(f, opt_n + 1, opt_n + 1);
    for (long r = 0; r <= opt_n; ++r)
      for (long c = 0; c <= opt_n; ++c) a.at(r, c) = element_from_json(f, j.at(r).at(c));
    ZeroLocus locus = section_zero_locus(make_tangent_section(std::move(a)), f);
    if (locus.scalar_section) {
      rep.lines.push_back("scalar_section (the zero section: locus is everything)");
      rep.json["scalar_section"] = true;
    } else {
      rep.lines.push_back("count=" + std::to_string(locus.zeros.size()));
      Json arr = Json::array();
      for (auto& p : locus.zeros) {
        if (!quiet) rep.lines.push_back(p.str());
        arr.push_back(p.str());
      }
      rep.json["count"] = locus.zeros.size();
      rep.json["zeros"] = arr;
    }
  });
  auto* s_dict = sb_cmd->add_subcommand("dictionary", "minimal right ideals <-> points");
  s_dict->add_option("--n", opt_n)->required();
  s_dict->add_option("--q", opt_q)->required();
  s_dict->callback([&] {
    IdealPointDictionary d =
        ideal_point_dictionary(opt_n, parse_field_name("F" + std::to_string(opt_q)));
    rep.lines.push_back("points=" + std::to_string(d.points.size()) +
                        " ideals=" + std::to_string(d.ideals.size()));
    rep.json["points"] = d.points.size();
    rep.json["ideals"] = d.ideals.size();
    if (!quiet)
      for (size_t i = 0; i < d.points.size(); ++i)
        rep.lines.push_back(d.points[i].str() + " <-> ideal dim " +
                            std::to_string(d.ideals[i].dim()));
  });

  // circle ------------------------------------------------------------------
  auto* circ_cmd = app.add_subcommand("circle", "bundles on circles of rational curves");
  std::string opt_k, opt_bigk, opt_lambda1, opt_zeros, opt_poles;
  auto* ci_class = circ_cmd->add_subcommand("class", "Brauer class of a split bundle over K");
  ci_class->add_option("--k", opt_k, "base field name")->required();
  ci_class->add_option("--K", opt_bigk, "extension field name")->required();
  ci_class->add_option("--lambda", opt_lambda, "gluing scalars over K")->required();
  ci_class->callback([&] {
    FieldPtr ext = parse_extension_name(opt_bigk + "/" + opt_k);
    std::vector<FieldElement> lambda = parse_lambda_list(ext, opt_lambda);
    long len = static_cast<long>(lambda.size());
    SplitLineBundle l = make_split_line_bundle(make_split_circle(ext, len), std::move(lambda));
    run_circle_class(rep, ext, l, bound);
  });
  auto* ci_push = circ_cmd->add_subcommand("push", "pushforward along the covering");
  ci_push->add_option("--K", opt_bigk, "extension K/k")->required();
  ci_push->add_option("--lambda", opt_lambda)->required();
  ci_push->callback([&] {
    FieldPtr ext = parse_extension_name(opt_bigk);
    std::vector<FieldElement> lambda = parse_lambda_list(ext, opt_lambda);
    long len = static_cast<long>(lambda.size());
    SplitLineBundle l = make_split_line_bundle(make_split_circle(ext, len), std::move(lambda));
    GluedBundle b = pushforward(ext, l);
    bool split = geometrically_split(b);
    rep.lines.push_back("rank=" + std::to_string(b.rank) +
                        std::string(" geometrically_split=") + (split ? "true" : "false"));
    rep.json["rank"] = b.rank;
    rep.json["geometrically_split"] = split;
    auto classes = base_change_classes(b);
    if (classes) {
      std::ostringstream os;
      os << "summand_c1=[";
      Json arr = Json::array();
      for (size_t i = 0; i < classes->size(); ++i) {
        if (i) os << ",";
        os << (*classes)[i].str();
        arr.push_back(element_to_json((*classes)[i]));
      }
      os << "]";
      rep.lines.push_back(os.str());
      rep.json["summand_c1"] = arr;
    }
  });
  auto* ci_pull = circ_cmd->add_subcommand("pull", "pull back a Galois line bundle");
  ci_pull->add_option("--K", opt_bigk)->required();
  ci_pull->add_option("--lambda1", opt_lambda1)->required();
  ci_pull->callback([&] {
    FieldPtr ext = parse_extension_name(opt_bigk);
    GaloisLineBundle l =
        make_galois_line_bundle(make_galois_circle(ext), parse_element(ext, opt_lambda1));
    SplitLineBundle pb = pullback(l);
    std::ostringstream os;
    os << "lambda=[";
    Json arr = Json::array();
    for (size_t i = 0; i < pb.lambda.size(); ++i) {
      if (i) os << ",";
      os << pb.lambda[i].str();
      arr.push_back(element_to_json(pb.lambda[i]));
    }
    os << "] c1=" << c1_split(pb).c1.str();
    rep.lines.push_back(os.str());
    rep.json["lambda"] = arr;
    rep.json["c1"] = element_to_json(c1_split(pb).c1);
  });
  auto* ci_end = circ_cmd->add_subcommand("end", "endomorphism algebra of a pushforward");
  ci_end->add_option("--K", opt_bigk)->required();
  ci_end->add_option("--lambda", opt_lambda)->required();
  ci_end->callback([&] {
    FieldPtr ext = parse_extension_name(opt_bigk);
    std::vector<FieldElement> lambda = parse_lambda_list(ext, opt_lambda);
    long len = static_cast<long>(lambda.size());
    SplitLineBundle l = make_split_line_bundle(make_split_circle(ext, len), std::move(lambda));
    StructureConstantAlgebra e = global_end_algebra(pushforward(ext, l));
    run_algebra_check(rep, e);
    if (json_mode) rep.json["algebra"] = algebra_to_json(e);
  });
  auto* ci_abel = circ_cmd->add_subcommand("abel", "degree-0 Abel invariant");
  ci_abel->add_option("--k", opt_k, "field of the split circle")->required();
  ci_abel->add_option("--m", opt_n, "circle length")->required();
  ci_abel->add_option("--zeros", opt_zeros, "JSON: per-component zero lists")->required();
  ci_abel->add_option("--poles", opt_poles, "JSON: per-component pole lists")->required();
  ci_abel->callback([&] {
    FieldPtr k = parse_field_name(opt_k);
    SplitCircle circle = make_split_circle(k, opt_n);
    auto parse_lists = [&](const std::string& text) {
      std::vector<std::vector<FieldElement>> out;
      for (auto& comp : Json::parse(text)) {
        std::vector<FieldElement> pts;
        for (auto& p : comp) pts.push_back(element_from_json(k, p));
        out.push_back(std::move(pts));
      }
      return out;
    };
    AbelResult r = abel_invariant_split(circle, parse_lists(opt_zeros), parse_lists(opt_poles));
    rep.lines.push_back("invariant=" + r.invariant.str() + std::string(" realizable=") +
                        (r.realizable ? "true" : "false"));
    rep.json["invariant"] = element_to_json(r.invariant);
    rep.json["realizable"] = r.realizable;
  });

  // curve -------------------------------------------------------------------
  auto* curve_cmd = app.add_subcommand("curve", "universal curve combinatorics");
  std::string opt_group, opt_gens;
  auto* cv_build = curve_cmd->add_subcommand("build", "build the curve graph for (G, g)");
  cv_build->add_option("--group", opt_group, "Zn, S3, or a JSON table file")->required();
  cv_build->add_option("--gens", opt_gens, "comma-separated generator indices")->required();
  cv_build->callback([&] {
    GroupTable g = parse_group(opt_group);
    std::vector<long> gens;
    for (auto& part : split_csv(opt_gens)) gens.push_back(std::stol(part));
    CurveGraph graph = build_universal_curve(g, gens);
    rep.lines.push_back(
        "vertices=" + std::to_string(graph.vertex_count()) +
        " components=" + std::to_string(graph.edge_count()) +
        " orbits=" + std::to_string(graph.orbit_count()) +
        std::string(" connected=") + (graph.connected ? "true" : "false"));
    if (!quiet)
      for (auto& e : graph.edges)
        rep.lines.push_back("component: 0 at node " + std::to_string(e.src) +
                            ", infinity at node " + std::to_string(e.dst) + ", orbit " +
                            std::to_string(e.orbit));
    rep.json = curve_graph_to_json(graph);
  });

  // selftest and task documents ----------------------------------------------
  std::string opt_suite = "all";
  auto* st_cmd = app.add_subcommand("selftest", "run the built-in verification suites");
  st_cmd->add_option("--suite", opt_suite, "suite name (default all)");
  st_cmd->callback([&] { run_selftest_cmd(rep, opt_suite, quiet); });

  auto* run_cmd = app.add_subcommand("run", "execute a task document");
  run_cmd->add_option("--file", opt_file, "task document (JSON)")->required();
  run_cmd->callback([&] {
    std::ifstream in(opt_file);
    if (!in) throw ValidationError("cannot open task document: " + opt_file);
    run_task_document(rep, Json::parse(in), bound);
  });

  try {
    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 1;
  }

  if (json_mode)
    out << rep.json.dump(2) << "\n";
  else
    for (auto& line : rep.lines) out << line << "\n";
  return rep.unknown_seen ? 2 : 0;
}

}  // namespace brauer
