// cccg: batch front end for CCC-graph construction, Zagreb-index reports,
// prediction verification and parameter sweeps.
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ccc/families.hpp"
#include "ccc/format.hpp"
#include "ccc/predictions.hpp"
#include "ccc/presentation.hpp"

namespace {

using namespace ccc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct GroupSelector {
  std::string family;
  std::string aux;
  std::string presentation;
  std::string input_path;

  void attach(CLI::App* cmd, bool required = true) {
    auto* grp = cmd->add_option_group("group", "group selection");
    grp->add_option("--family", family, "family member, e.g. dihedral:12");
    grp->add_option("--aux", aux, "auxiliary group, e.g. frobenius:7,3");
    grp->add_option("--presentation", presentation,
                    "presentation text, e.g. 'a, b | a^5, b^2, b a b^-1 a'");
    grp->add_option("--input", input_path, "group JSON file ('-' = stdin)");
    grp->require_option(required ? 1 : 0, 1);
  }

  bool any() const {
    return !family.empty() || !aux.empty() || !presentation.empty() ||
           !input_path.empty();
  }

  std::string describe() const {
    if (!family.empty()) return family;
    if (!aux.empty()) return aux;
    if (!presentation.empty()) return "presentation";
    return input_path;
  }

  FiniteGroup build() const {
    if (!family.empty()) return build_family(FamilySpec::parse(family));
    if (!aux.empty()) return build_aux(AuxSpec::parse(aux));
    if (!presentation.empty()) return coset_enumerate(Presentation::parse(presentation));
    if (!input_path.empty()) {
      nlohmann::json j;
      if (input_path == "-") {
        std::cin >> j;
      } else {
        std::ifstream in(input_path);
        if (!in) throw std::invalid_argument("cannot open " + input_path);
        in >> j;
      }
      return FiniteGroup::from_json(j);
    }
    throw std::invalid_argument("one of --family/--aux/--presentation/--input required");
  }
};

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot open " + output_path);
  out << text;
}

struct Range {
  long lo = 0, hi = -1;  // empty by default

  bool empty() const { return lo > hi; }
};

Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stol(text);
    } else {
      r.lo = std::stol(text.substr(0, dots));
      r.hi = std::stol(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be <a> or <a>..<b>, got '" + text + "'");
  }
  if (r.empty()) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

nlohmann::json describe_group(const FiniteGroup& g) {
  ClassData data = conjugacy_data(g);
  nlohmann::json j = g.to_json();
  j["center_order"] = data.center.size();
  j["num_classes"] = data.classes.size();
  j["class_sizes"] = data.class_size_multiset();
  j["structure"] = recognize_structure(g).to_string();
  if (data.center.size() < static_cast<std::size_t>(g.order()))
    j["quotient_structure"] = recognize_structure(quotient_by_center(g)).to_string();
  return j;
}

// Appends the published order-p^3 corollary check to verification notes so
// formula/decomposition disagreements surface in reports.
void append_p3_notes(long order, VerificationRecord& rec) {
  for (long p = 2; p * p * p <= order; ++p) {
    if (p * p * p != order) continue;
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) return;
    for (const std::string& note : p3_corollary_discrepancy(p))
      rec.discrepancy_notes.push_back(note);
    return;
  }
}

int cmd_family(const GroupSelector& sel, const std::string& output) {
  emit(describe_group(sel.build()).dump(2) + "\n", output);
  return kExitOk;
}

int cmd_ccc(const GroupSelector& sel, const std::string& format,
            const std::string& output) {
  SimpleGraph g = ccc_graph(sel.build());
  if (format == "dot")
    emit(export_dot(g), output);
  else if (format == "json")
    emit(g.to_json().dump(2) + "\n", output);
  else
    throw std::invalid_argument("ccc format must be dot or json");
  return kExitOk;
}

int cmd_report(const GroupSelector& sel, const std::string& decomposition,
               const std::string& graph_expr, const std::string& format,
               const std::string& output) {
  ReportRow row;
  if (!decomposition.empty()) {
    CliqueDecomposition d = CliqueDecomposition::parse(decomposition);
    row = row_from_report("decomposition", d.to_string(), report_from_decomposition(d));
  } else if (!graph_expr.empty()) {
    row = row_from_report("graph", graph_expr, zagreb_report(parse_graph_expr(graph_expr)));
  } else if (sel.any()) {
    FiniteGroup g = sel.build();
    row = row_from_report(sel.describe(), "order=" + std::to_string(g.order()),
                          zagreb_report(ccc_graph(g)));
  } else {
    throw std::invalid_argument("report needs a group, --decomposition or --graph");
  }
  emit(format_rows({row}, parse_format(format)), output);
  return verdict_ok(row.report.verdict) ? kExitOk : kExitViolation;
}

int cmd_verify(const GroupSelector& sel, const std::string& case_text,
               const std::string& format, const std::string& output) {
  VerificationRecord rec;
  std::string params;
  long order;
  if (!sel.family.empty()) {
    FamilySpec spec = FamilySpec::parse(sel.family);
    rec = verify_family(spec);
    params = spec.label();
    order = spec.group_order();
  } else {
    FiniteGroup g = sel.build();
    QuotientCase qcase =
        case_text.empty() ? infer_quotient_case(g) : QuotientCase::parse(case_text);
    rec = verify_group(g, quotient_prediction(qcase));
    params = qcase.label();
    order = g.order();
  }
  append_p3_notes(order, rec);
  OutputFormat f = parse_format(format);
  if (f == OutputFormat::Json)
    emit(rec.to_json().dump(2) + "\n", output);
  else
    emit(format_rows({row_from_record(sel.describe(), params, rec)}, f), output);
  return rec.ok() ? kExitOk : kExitViolation;
}

struct ScanTask {
  std::string params;
  FamilySpec spec{};
  bool is_family = false;
  QuotientCase qcase{};
};

int cmd_scan(const std::string& family, const std::string& case_kind,
             const Range& mr, const Range& nr, const Range& pr, const Range& qr,
             const Range& xr, const std::string& mode, long jobs,
             const std::string& format, const std::string& output) {
  if (family.empty() == case_kind.empty())
    throw std::invalid_argument("scan needs exactly one of --family or --case");
  if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");

  std::vector<ScanTask> tasks;
  auto each = [](const Range& r, auto&& fn) {
    for (long v = r.lo; v <= r.hi; ++v) fn(v);
  };

  if (!family.empty()) {
    if (mr.empty()) throw std::invalid_argument("scan --family needs an --m range");
    auto push = [&](FamilySpec spec) {
      ScanTask t;
      t.is_family = true;
      t.spec = spec;
      t.params = spec.label();
      spec.validate();
      tasks.push_back(std::move(t));
    };
    if (family == "dihedral") {
      each(mr, [&](long m) { push(FamilySpec::dihedral(m)); });
    } else if (family == "dicyclic") {
      each(mr, [&](long m) { push(FamilySpec::dicyclic(m)); });
    } else if (family == "semidihedral") {
      each(mr, [&](long m) { push(FamilySpec::semidihedral(m)); });
    } else if (family == "v8m") {
      each(mr, [&](long m) { push(FamilySpec::v8m(m)); });
    } else if (family == "unm") {
      if (nr.empty()) throw std::invalid_argument("scan --family unm needs --n");
      each(nr, [&](long n) { each(mr, [&](long m) { push(FamilySpec::unm(n, m)); }); });
    } else if (family == "gpmn") {
      if (nr.empty() || pr.empty())
        throw std::invalid_argument("scan --family gpmn needs --p, --m and --n");
      each(pr, [&](long p) {
        each(mr, [&](long m) {
          each(nr, [&](long n) { push(FamilySpec::gpmn(p, m, n)); });
        });
      });
    } else {
      throw std::invalid_argument("unknown family '" + family + "'");
    }
  } else {
    if (xr.empty()) throw std::invalid_argument("scan --case needs an --x range");
    auto push = [&](QuotientCase c) {
      ScanTask t;
      t.qcase = c;
      t.params = c.label();
      tasks.push_back(std::move(t));
    };
    auto xs = [&](auto&& fill) {
      each(xr, [&](long x) {
        QuotientCase c;
        c.x = x;
        fill(c);
        push(c);
      });
    };
    if (case_kind == "qdihedral") {
      if (mr.empty()) throw std::invalid_argument("qdihedral scan needs --m");
      each(mr, [&](long m) {
        xs([&](QuotientCase& c) {
          c.kind = QuotientCase::Kind::DihedralQuotient;
          c.m = m;
        });
      });
    } else if (case_kind == "qzpzp") {
      if (pr.empty()) throw std::invalid_argument("qzpzp scan needs --p");
      each(pr, [&](long p) {
        xs([&](QuotientCase& c) {
          c.kind = QuotientCase::Kind::ElemAbelianQuotient;
          c.p = p;
        });
      });
    } else if (case_kind == "qfrobenius" || case_kind == "qp2q") {
      if (pr.empty() || qr.empty())
        throw std::invalid_argument(case_kind + " scan needs --p and --q");
      each(pr, [&](long p) {
        each(qr, [&](long q) {
          xs([&](QuotientCase& c) {
            if (case_kind == "qfrobenius")
              c.kind = QuotientCase::Kind::FrobeniusPQ;
            else
              c.kind = p < q ? QuotientCase::Kind::FrobeniusP2Q_PltQ
                             : QuotientCase::Kind::FrobeniusP2Q_PgtQ;
            c.p = p;
            c.q = q;
          });
        });
      });
    } else if (case_kind == "qa4") {
      xs([&](QuotientCase& c) { c.kind = QuotientCase::Kind::FrobeniusP2Q_A4; });
    } else if (case_kind == "qp3a" || case_kind == "qp3na") {
      if (pr.empty()) throw std::invalid_argument(case_kind + " scan needs --p");
      each(pr, [&](long p) {
        xs([&](QuotientCase& c) {
          c.kind = case_kind == "qp3a" ? QuotientCase::Kind::P3QuotientAbelian
                                       : QuotientCase::Kind::P3QuotientNonabelian;
          c.p = p;
        });
      });
    } else {
      throw std::invalid_argument("unknown quotient case '" + case_kind + "'");
    }
  }
  if (tasks.empty()) throw std::invalid_argument("scan produced no parameter tuples");

  const bool closed_only = mode == "closed";
  if (mode != "closed" && mode != "full")
    throw std::invalid_argument("--mode must be full or closed");

  struct Result {
    std::vector<ReportRow> rows;
    std::string skip;          // divisibility skips (case scans)
    std::string error;         // fatal
  };
  std::vector<Result> results(tasks.size());

  auto run_task = [&](std::size_t i) {
    const ScanTask& t = tasks[i];
    Result& res = results[i];
    try {
      if (t.is_family) {
        const std::string fam = family;
        if (!closed_only) {
          VerificationRecord rec = verify_family(t.spec);
          res.rows.push_back(row_from_record(fam, t.params, rec));
        } else {
          PredictedStructure pred = predicted_decomposition(t.spec);
          auto [f1, f2] = closed_form_indices(t.spec);
          ReportRow row = row_from_report(fam, t.params,
                                          report_from_decomposition(pred.decomposition));
          row.has_verification = true;
          row.closed_m1 = f1.str();
          row.closed_m2 = f2.str();
          row.case_label = pred.case_label;
          row.structure_match = f1 == pred.closed_m1 && f2 == pred.closed_m2;
          row.equality_as_predicted =
              verdict_is_equality(row.report.verdict) == pred.expected_equality;
          res.rows.push_back(std::move(row));
        }
      } else {
        for (const PredictedStructure& cand : quotient_prediction(t.qcase)) {
          ReportRow row = row_from_report(case_kind, t.params,
                                          report_from_decomposition(cand.decomposition));
          row.has_verification = true;
          row.closed_m1 = cand.closed_m1.str();
          row.closed_m2 = cand.closed_m2.str();
          row.case_label = cand.case_label;
          row.structure_match = true;
          row.equality_as_predicted =
              verdict_is_equality(row.report.verdict) == cand.expected_equality;
          res.rows.push_back(std::move(row));
        }
      }
    } catch (const DivisibilityError& e) {
      res.skip = e.what();
    } catch (const std::exception& e) {
      res.error = e.what();
    }
  };

  // Bounded worker pool; aggregation preserves tuple order via the indexed
  // results vector.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
      run_task(i);
  };
  std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < pool; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  std::vector<ReportRow> rows;
  for (const Result& res : results) {
    if (!res.error.empty()) throw std::runtime_error(res.error);
    if (!res.skip.empty()) std::cerr << "skipped: " << res.skip << "\n";
    rows.insert(rows.end(), res.rows.begin(), res.rows.end());
  }
  if (rows.empty()) throw std::invalid_argument("scan produced no rows");
  emit(format_rows(rows, parse_format(format)), output);

  bool bad = std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) {
    return !verdict_ok(r.report.verdict) ||
           (r.has_verification && !(r.structure_match && r.equality_as_predicted));
  });
  return bad ? kExitViolation : kExitOk;
}

int cmd_props(const GroupSelector& sel, const std::string& output) {
  FiniteGroup g = sel.build();
  ClassData data = conjugacy_data(g);
  nlohmann::json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["num_classes"] = data.classes.size();
  j["center_order"] = data.center.size();
  j["commuting_probability"] = commuting_probability(g).str();
  j["distinct_centralizers"] = distinct_centralizer_count(g);
  j["structure"] = recognize_structure(g).to_string();
  if (data.center.size() < static_cast<std::size_t>(g.order()))
    j["quotient_structure"] = recognize_structure(quotient_by_center(g)).to_string();
  try {
    if (auto f = frobenius_decomposition(g))
      j["frobenius"] = {{"kernel_order", f->kernel_order},
                        {"complement_order", f->complement_order}};
    else
      j["frobenius"] = nullptr;
  } catch (const CapExceeded& e) {
    j["frobenius"] = nullptr;
    j["frobenius_note"] = e.what();
  }
  emit(j.dump(2) + "\n", output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting conjugacy class graphs and Zagreb index verification"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("CCC_COSET_LIMIT")) {
    try {
      set_default_coset_limit(std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "bad CCC_COSET_LIMIT '" << env << "'\n";
      return kExitUsage;
    }
  }
  int coset_limit = 0;
  app.add_option("--coset-limit", coset_limit,
                 "coset table limit for presentation-built groups");

  std::string output;
  app.add_option("--output,-o", output, "output path (default stdout)");

  GroupSelector fam_sel, ccc_sel, rep_sel, ver_sel, props_sel;
  std::string ccc_format = "dot";
  std::string rep_format = "table", ver_format = "json", scan_format = "csv";
  std::string rep_decomposition, rep_graph, ver_case;
  std::string scan_family, scan_case, scan_mode = "full";
  std::string range_m, range_n, range_p, range_q, range_x;
  long jobs = static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));

  auto* c_family = app.add_subcommand("family", "build and describe a group");
  fam_sel.attach(c_family);

  auto* c_ccc = app.add_subcommand("ccc", "emit the CCC graph (DOT or JSON)");
  ccc_sel.attach(c_ccc);
  c_ccc->add_option("--format", ccc_format, "dot | json");

  auto* c_report = app.add_subcommand("report", "Zagreb report for a group or graph");
  rep_sel.attach(c_report, false);
  c_report->add_option("--decomposition", rep_decomposition,
                       "explicit clique union, e.g. 'K:4+2*K:1'");
  c_report->add_option("--graph", rep_graph, "graph expression, e.g. 'star:5+K:3'");
  c_report->add_option("--format", rep_format, "json | csv | table");

  auto* c_verify = app.add_subcommand("verify", "verify one group against predictions");
  ver_sel.attach(c_verify);
  c_verify->add_option("--case", ver_case,
                       "quotient case (default: inferred from G/Z), e.g. qzpzp:3,3");
  c_verify->add_option("--format", ver_format, "json | csv | table");

  auto* c_scan = app.add_subcommand("scan", "sweep a family or quotient case");
  c_scan->add_option("--family", scan_family,
                     "family name: dihedral, dicyclic, semidihedral, v8m, unm, gpmn");
  c_scan->add_option("--case", scan_case,
                     "case kind: qdihedral, qzpzp, qfrobenius, qa4, qp2q, qp3a, qp3na");
  c_scan->add_option("--m", range_m, "m range, e.g. 3..40");
  c_scan->add_option("--n", range_n, "n range");
  c_scan->add_option("--p", range_p, "p range");
  c_scan->add_option("--q", range_q, "q range");
  c_scan->add_option("--x", range_x, "x = |Z| range (case scans)");
  c_scan->add_option("--mode", scan_mode,
                     "full (build + brute-force verify) | closed (formulas only)");
  c_scan->add_option("--jobs", jobs, "worker pool size");
  c_scan->add_option("--format", scan_format, "json | csv | table");

  auto* c_props = app.add_subcommand("props", "group-theoretic properties");
  props_sel.attach(c_props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coset_limit > 0) set_default_coset_limit(coset_limit);
    if (c_family->parsed()) return cmd_family(fam_sel, output);
    if (c_ccc->parsed()) return cmd_ccc(ccc_sel, ccc_format, output);
    if (c_report->parsed())
      return cmd_report(rep_sel, rep_decomposition, rep_graph, rep_format, output);
    if (c_verify->parsed()) return cmd_verify(ver_sel, ver_case, ver_format, output);
    if (c_scan->parsed()) {
      auto opt_range = [](const std::string& text) {
        return text.empty() ? Range{} : parse_range(text);
      };
      return cmd_scan(scan_family, scan_case, opt_range(range_m), opt_range(range_n),
                      opt_range(range_p), opt_range(range_q), opt_range(range_x),
                      scan_mode, jobs, scan_format, output);
    }
    if (c_props->parsed()) return cmd_props(props_sel, output);
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what()
              << " (raise --coset-limit or CCC_COSET_LIMIT)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
