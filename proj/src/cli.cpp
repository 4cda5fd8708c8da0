#include "strata/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "strata/final.hpp"
#include "strata/fzip.hpp"
#include "strata/shuffle.hpp"

namespace strata {

using ojson = nlohmann::ordered_json;

// ---- stratum table

std::vector<StratumRow> stratum_table(int n, Case c) {
  if (n < 3) throw std::invalid_argument("dimension must be at least 3");
  const int m = n / 2;
  if (n % 2) c = Case::Bodd;
  else if (c == Case::Bodd) throw std::invalid_argument("even dimension needs case D or Dtwisted");
  else if (m < 2) throw std::invalid_argument("even dimension must be at least 4");
  const bool twisted = c == Case::Dtwisted;
  std::vector<std::string> labels(2 * m + 1);
  auto note = [&](int idx, const std::string& s) {
    if (labels[idx] == s) return;  // height n/2 ignores the middle
    if (!labels[idx].empty()) labels[idx] += "; ";
    labels[idx] += s;
  };
  for (int split = 0; split <= (n % 2 ? 0 : 1); ++split)
    for (int v = 1; v <= m; ++v)
      for (auto kind : {Invariant::Height, Invariant::Artin}) {
        StratumRef ref = stratum_for_invariants(n, {kind, v}, split);
        if (ref.twisted != twisted) continue;
        std::string s = kind == Invariant::Height ? "height " + std::to_string(v) : "artin " + std::to_string(v);
        if (kind == Invariant::Artin && n % 2 && v == m) s = "supersingular, artin " + std::to_string(v);
        bool depends = n % 2 == 0 && v < m;
        if (depends) s += split ? " (split)" : " (non-split)";
        note(ref.index, s);
      }
  auto cls = compute_classes(c, m);
  std::vector<StratumRow> rows;
  for (int j = 1; j <= 2 * m; ++j) {
    StratumRow r;
    r.index = j;
    r.label = labels[j].empty() ? "empty" : labels[j];
    r.cls = cls[j - 1];
    rows.push_back(r);
  }
  return rows;
}

// ---- output

namespace {

struct Cell {
  ojson j;
  std::string text;
};

Cell cell(long v) { return {v, std::to_string(v)}; }
Cell cell(bool v) { return {v, v ? "yes" : "no"}; }
Cell cell(const std::string& s) { return {s, s}; }
Cell cell(const char* s) { return cell(std::string(s)); }

ojson poly_json(const PolyP& f) {
  ojson a = ojson::array();
  for (const auto& c : f.coeffs()) a.push_back(rational_string(c));
  return a;
}

Cell cell(const PolyP& f) { return {poly_json(f), f.str()}; }

Cell cell(const RatP& f) {
  if (f.is_poly()) return cell(f.as_poly());
  ojson o = ojson::object();
  o["num"] = poly_json(f.num());
  o["den"] = poly_json(f.den());
  return {o, f.str()};
}

struct Report {
  explicit Report(std::string v) : verb(std::move(v)) {}
  std::string verb;
  ojson params = ojson::object();
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> cols;
  std::vector<std::vector<Cell>> rows;
  bool ok = true;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void render(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ojson o;
    o["verb"] = r.verb;
    o["params"] = r.params;
    if (!r.summary.empty()) {
      ojson s = ojson::object();
      for (const auto& [k, c] : r.summary) s[k] = c.j;
      o["summary"] = s;
    }
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
      ojson jr = ojson::object();
      for (size_t i = 0; i < r.cols.size(); ++i) jr[r.cols[i]] = row[i].j;
      rows.push_back(jr);
    }
    o["rows"] = rows;
    o["ok"] = r.ok;
    out << o.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (size_t i = 0; i < r.cols.size(); ++i) out << (i ? "," : "") << csv_field(r.cols[i]);
    out << "\n";
    for (const auto& row : r.rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].text);
      out << "\n";
    }
    return;
  }
  for (const auto& [k, c] : r.summary) out << k << ": " << c.text << "\n";
  std::vector<size_t> width(r.cols.size());
  for (size_t i = 0; i < r.cols.size(); ++i) width[i] = r.cols[i].size();
  for (const auto& row : r.rows)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
  auto line = [&](auto get) {
    std::string s;
    for (size_t i = 0; i < r.cols.size(); ++i) {
      std::string t = get(i);
      s += t;
      if (i + 1 < r.cols.size()) s += std::string(width[i] - t.size() + 2, ' ');
    }
    out << s << "\n";
  };
  if (!r.cols.empty()) {
    line([&](size_t i) { return r.cols[i]; });
    for (const auto& row : r.rows) line([&](size_t i) { return row[i].text; });
  }
  out << (r.ok ? "result: pass" : "result: FAIL") << "\n";
}

struct Opts {
  std::string cas = "B";
  int m = 0;
  std::string m_range;
  int p = 3;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::vector<std::string> profile;
  int n = 0;
  std::string n_range;
  int index = 0;
  std::string element;
  std::string variant;
  int dim = 0;
  int samples = 50;
  bool all_finals = false;
};

std::vector<Case> cases_of(const std::string& s) {
  if (s == "all") return {Case::Bodd, Case::Duntwisted, Case::Dtwisted};
  return {parse_case(s)};
}

int min_rank(Case c) { return c == Case::Bodd ? 1 : 2; }

void check_rank(Case c, int m) {
  if (m < min_rank(c) || m > 40)
    throw std::invalid_argument("rank m=" + std::to_string(m) + " out of range for case " + case_name(c));
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like a..b: " + s);
  int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range " + s);
  return {lo, hi};
}

ConventionProfile profile_of(const Opts& o) {
  ConventionProfile prof;
  for (const auto& kv : o.profile) prof.set(kv);
  return prof;
}

std::string final_name(int index, bool twisted) { return "w" + std::to_string(index) + (twisted ? "'" : ""); }

std::string word_text(const std::vector<int>& word) {
  std::string s;
  for (int a : word) s += (s.empty() ? "" : " ") + (a ? std::to_string(a) : std::string("0"));
  return s;
}

Report final_elements_verb(const Opts& o) {
  Report r("final-elements");
  r.params["case"] = o.cas;
  r.params["m"] = o.m;
  r.cols = {"case", "name", "element", "word", "length", "final_by_r"};
  for (Case c : cases_of(o.cas)) {
    check_rank(c, o.m);
    for (const auto& fe : final_elements(case_family(c, o.m), case_twisted(c))) {
      bool byr = is_final_by_r(fe.element);
      r.ok = r.ok && byr;
      ojson word = fe.word;
      r.rows.push_back({cell(case_name(c)), cell(final_name(fe.index, fe.twisted)), cell(fe.element.str()),
                        {word, word_text(fe.word)}, cell(static_cast<long>(length(fe.element))), cell(byr)});
    }
  }
  return r;
}

Report colength_verb(const Opts& o) {
  Report r("colength");
  r.params["case"] = o.cas;
  r.params["m"] = o.m;
  if (o.index) r.params["index"] = o.index;
  r.cols = {"case", "final", "root", "element", "outcome", "target", "steps", "tabulated", "dichotomy"};
  for (Case c : cases_of(o.cas)) {
    check_rank(c, o.m);
    const Family f = case_family(c, o.m);
    for (const auto& fe : final_elements(f, case_twisted(c))) {
      if (o.index && fe.index != o.index) continue;
      auto table = tabulated_colength_roots(f, fe.index, fe.twisted);
      for (const auto& ce : colength_one_below(fe.element)) {
        ShuffleVerdict v = classify(ce.element);
        bool fin = v.outcome == ShuffleVerdict::Final;
        bool tab = std::find(table.begin(), table.end(), ce.root) != table.end();
        bool dich = dichotomy_check(ce.element);
        r.ok = r.ok && dich && fin == tab;
        static const char* reasons[] = {"", "ambiguous", "cyclic", "stuck"};
        r.rows.push_back({cell(case_name(c)), cell(final_name(fe.index, fe.twisted)), cell(ce.root.str()),
                          cell(ce.element.str()), cell(fin ? "final" : std::string("degenerate:") + reasons[v.reason]),
                          cell(fin ? final_name(v.target_index, v.target_twisted) : std::string("-")),
                          cell(static_cast<long>(v.steps)), cell(tab), cell(dich)});
      }
    }
  }
  return r;
}

Report shuffle_verb(const Opts& o) {
  Report r("shuffle");
  if (o.element.empty()) throw std::invalid_argument("shuffle needs --element, e.g. B3:[7,2,3]");
  WeylElement w = parse_element(o.element);
  r.params["element"] = w.str();
  ShuffleVerdict v = classify(w);
  bool fin = v.outcome == ShuffleVerdict::Final;
  static const char* reasons[] = {"none", "ambiguous", "cyclic", "stuck"};
  r.summary.push_back({"outcome", cell(fin ? "final" : "degenerate")});
  r.summary.push_back({"reason", cell(reasons[v.reason])});
  if (fin) r.summary.push_back({"target", cell(final_name(v.target_index, v.target_twisted))});
  r.summary.push_back({"steps", cell(static_cast<long>(v.steps))});
  bool dich = dichotomy_check(w);
  r.summary.push_back({"dichotomy", cell(dich)});
  r.ok = dich;
  r.cols = {"step", "i", "element"};
  long step = 0;
  for (const auto& [i, e] : v.path) r.rows.push_back({cell(++step), cell(static_cast<long>(i)), cell(e.str())});
  return r;
}

Report classes_verb(const Opts& o) {
  Report r("classes");
  r.params["case"] = o.cas;
  r.params["m"] = o.m;
  ConventionProfile prof = profile_of(o);
  r.params["profile"] = prof.str();
  r.cols = {"case", "index", "coeff_poly", "lambda_power"};
  for (Case c : cases_of(o.cas)) {
    check_rank(c, o.m);
    for (const auto& b : compute_classes(c, o.m, prof))
      r.rows.push_back({cell(case_name(c)), cell(static_cast<long>(b.final_index)), cell(b.coeff),
                        cell(static_cast<long>(b.lambda_power))});
  }
  return r;
}

Report verify_verb(const Opts& o) {
  Report r("verify-theorems");
  int lo = 2, hi = 12;
  if (!o.m_range.empty()) std::tie(lo, hi) = parse_range(o.m_range);
  else if (o.m) lo = hi = o.m;
  ConventionProfile prof = profile_of(o);
  r.params["case"] = o.cas;
  r.params["m_range"] = std::to_string(lo) + ".." + std::to_string(hi);
  r.params["profile"] = prof.str();
  r.cols = {"case", "m", "classes_match", "integral", "qbinomial", "first_bad_slot", "message"};
  for (Case c : cases_of(o.cas)) {
    int a = std::max(lo, min_rank(c));
    if (a > hi) continue;
    check_rank(c, a);
    check_rank(c, hi);
    for (const auto& e : verify(c, a, hi, prof)) {
      r.ok = r.ok && e.ok();
      r.rows.push_back({cell(case_name(c)), cell(static_cast<long>(e.m)), cell(e.classes_match), cell(e.integral),
                        cell(e.qbinomial_ok), cell(static_cast<long>(e.first_bad_slot)), cell(e.message)});
    }
  }
  return r;
}

Report degrees_verb(const Opts& o) {
  Report r("degrees");
  r.params["case"] = o.cas;
  r.params["m"] = o.m;
  r.cols = {"case", "index", "degree"};
  for (Case c : cases_of(o.cas)) {
    check_rank(c, o.m);
    for (int k = 1; k <= 2 * o.m; ++k)
      r.rows.push_back({cell(case_name(c)), cell(static_cast<long>(k)), cell(degree(c, k, o.m))});
  }
  return r;
}

Report count_verb(const Opts& o) {
  Report r("count");
  r.params["variant"] = o.variant.empty() ? "all" : o.variant;
  r.params["dim"] = o.dim;
  r.params["p"] = o.p;
  r.cols = {"variant", "dim", "p", "count", "closed_form", "closed_at_p", "match"};
  std::vector<QuadVariant> vs;
  if (o.variant.empty() || o.variant == "all") vs = {QuadVariant::Odd, QuadVariant::SplitEven, QuadVariant::NonsplitEven};
  else vs = {parse_variant(o.variant)};
  for (QuadVariant v : vs)
    for (int d = 1; d <= 8; ++d) {
      if (o.dim && d != o.dim) continue;
      if ((v == QuadVariant::Odd) != (d % 2 == 1)) continue;
      long cnt = count_isotropic_lines(v, d, o.p);
      PolyP closed = isotropic_lines_closed(v, d);
      mpq_class at = closed.eval(o.p);
      bool match = at == cnt;
      r.ok = r.ok && match;
      r.rows.push_back({cell(variant_name(v)), cell(static_cast<long>(d)), cell(static_cast<long>(o.p)), cell(cnt),
                        cell(closed), cell(at.get_str()), cell(match)});
    }
  if (r.rows.empty()) throw std::invalid_argument("no variant has dimension " + std::to_string(o.dim));
  return r;
}

Report fzip_verb(const Opts& o) {
  Report r("fzip-roundtrip");
  int lo = 5, hi = 8;
  if (!o.n_range.empty()) std::tie(lo, hi) = parse_range(o.n_range);
  else if (o.n) lo = hi = o.n;
  if (lo < 4 || hi > 10) throw std::invalid_argument("dimension range must lie in 4..10");
  r.params["p"] = o.p;
  r.params["n_range"] = std::to_string(lo) + ".." + std::to_string(hi);
  r.params["samples"] = o.samples;
  r.params["seed"] = o.seed;
  auto field = std::make_shared<const FqField>(o.p, 2);
  r.cols = {"check", "n", "element", "result", "expected", "ok"};
  std::mt19937_64 rng(o.seed);
  std::vector<FinalElement> pool;
  for (int n = lo; n <= hi; ++n) {
    const int m = n / 2;
    std::vector<FinalElement> fes = final_elements(n % 2 ? family_B(m) : family_D(m));
    if (n % 2 == 0)
      for (const auto& t : final_elements(family_D(m), true)) fes.push_back(t);
    for (const auto& fe : fes) {
      auto z = yw_point(fe.element, field);
      WeylElement got = final_type(z);
      bool ok = got == fe.element;
      r.ok = r.ok && ok;
      r.rows.push_back({cell("final_type"), cell(static_cast<long>(n)), cell(fe.element.str()), cell(got.str()),
                        cell(fe.element.str()), cell(ok)});
      pool.push_back(fe);
    }
  }
  for (int s = 0; s < o.samples && !pool.empty(); ++s) {
    const auto& fe = pool[rng() % pool.size()];
    const int n = fe.element.n();
    Mat x = random_admissible_params(n, *field, rng);
    int eps = n % 2 && rng() % 2 ? -1 : 1;
    auto z = yw_point(fe.element, field, &x, eps);
    int fixed = hodge_discriminant(z), formula = hodge_discriminant_formula(z);
    bool ok = fixed == formula;
    r.ok = r.ok && ok;
    r.rows.push_back({cell("hodge_disc"), cell(static_cast<long>(n)), cell(fe.element.str()),
                      cell(static_cast<long>(fixed)), cell(static_cast<long>(formula)), cell(ok)});
  }
  return r;
}

Report stratum_verb(const Opts& o) {
  Report r("stratum-table");
  if (!o.n) throw std::invalid_argument("stratum-table needs --n");
  Case c = o.n % 2 ? Case::Bodd : parse_case(o.cas == "B" ? "D" : o.cas);
  r.params["n"] = o.n;
  r.params["case"] = case_name(c);
  r.cols = {"index", "invariant", "coeff_poly", "lambda_power"};
  for (const auto& row : stratum_table(o.n, c))
    r.rows.push_back({cell(static_cast<long>(row.index)), cell(row.label), cell(row.cls.coeff),
                      cell(static_cast<long>(row.cls.lambda_power))});
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Final-type strata of orthogonal F-zips: Weyl combinatorics, cycle classes, F-zip experiments"};
  app.require_subcommand(1);
  Opts o;
  auto fmt = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto rank_opts = [&](CLI::App* sc) {
    sc->add_option("--case", o.cas, "B, D, Dtwisted or all");
    sc->add_option("--m", o.m, "rank")->required();
  };
  std::vector<std::pair<CLI::App*, Report (*)(const Opts&)>> verbs;

  auto* fe = app.add_subcommand("final-elements", "list final elements w_1..w_2m");
  rank_opts(fe);
  fmt(fe);
  verbs.push_back({fe, final_elements_verb});

  auto* co = app.add_subcommand("colength", "colength-one elements below final elements, classified by shuffling");
  rank_opts(co);
  co->add_option("--index", o.index, "only this final element");
  fmt(co);
  verbs.push_back({co, colength_verb});

  auto* sh = app.add_subcommand("shuffle", "shuffle one element to a final element or degeneracy");
  sh->add_option("--element", o.element, "e.g. B2:[5,2] or D3:[6,2,3]")->required();
  fmt(sh);
  verbs.push_back({sh, shuffle_verb});

  auto* cl = app.add_subcommand("classes", "cycle classes of the final strata by the Pieri recursion");
  rank_opts(cl);
  cl->add_option("--profile", o.profile, "convention override key=value");
  fmt(cl);
  verbs.push_back({cl, classes_verb});

  auto* ve = app.add_subcommand("verify-theorems", "recursion against closed forms, integrality, q-binomial forms");
  ve->add_option("--case", o.cas, "B, D, Dtwisted or all");
  ve->add_option("--m", o.m, "single rank");
  ve->add_option("--m-range", o.m_range, "a..b");
  ve->add_option("--profile", o.profile, "convention override key=value");
  fmt(ve);
  verbs.push_back({ve, verify_verb});

  auto* de = app.add_subcommand("degrees", "degrees of the projections from the flag spaces");
  rank_opts(de);
  fmt(de);
  verbs.push_back({de, degrees_verb});

  auto* cn = app.add_subcommand("count", "isotropic lines by enumeration against the closed forms");
  cn->add_option("--variant", o.variant, "odd, split, nonsplit or all");
  cn->add_option("--dim", o.dim, "dimension (all up to 8 if omitted)");
  cn->add_option("--p", o.p, "odd prime");
  fmt(cn);
  verbs.push_back({cn, count_verb});

  auto* fz = app.add_subcommand("fzip-roundtrip", "final type of explicit F-zips, discriminant cross-check");
  fz->add_option("--p", o.p, "odd prime");
  fz->add_option("--n", o.n, "dimension");
  fz->add_option("--n-range", o.n_range, "a..b, default 5..8");
  fz->add_flag("--all-finals", o.all_finals, "every final and twisted final element (always on)");
  fz->add_option("--samples", o.samples, "random zips for the discriminant check");
  fz->add_option("--seed", o.seed, "random seed");
  fmt(fz);
  verbs.push_back({fz, fzip_verb});

  auto* st = app.add_subcommand("stratum-table", "classes labelled by height and Artin invariant");
  st->add_option("--n", o.n, "dimension of primitive cohomology")->required();
  st->add_option("--case", o.cas, "D or Dtwisted for even n");
  fmt(st);
  verbs.push_back({st, stratum_verb});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  for (auto& [sc, fn] : verbs) {
    if (!sc->parsed()) continue;
    try {
      Report r = fn(o);
      render(r, o.format, out);
      return r.ok ? 0 : 1;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n" << sc->help();
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  err << app.help();
  return 2;
}

}  // namespace strata
