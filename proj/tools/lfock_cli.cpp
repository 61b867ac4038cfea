// lfock: verification suites, tables and evaluators for the Laguerre Fock
// space toolkit. Exit status: 0 all rows pass, 1 some row failed, 2 usage error.
#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfock/berezin.hpp"
#include "lfock/convergence.hpp"
#include "lfock/kernels.hpp"
#include "lfock/report.hpp"
#include "lfock/squeeze.hpp"
#include "lfock/suites.hpp"

using namespace lfock;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

// "1.5", "2i", "1-0.5i", "-i"
cplx parse_complex(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
  static const std::regex pure(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, pure)) {
    const double im = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -im : im};
  }
  if (std::regex_match(s, m, re) && (m[1].matched || m[2].matched)) {
    const double re_part = m[1].matched ? std::stod(m[1]) : 0.0;
    double im = 0.0;
    if (m[2].matched) im = (m[3].matched ? std::stod(m[3]) : 1.0) * (m[2] == "-" ? -1.0 : 1.0);
    return {re_part, im};
  }
  throw UsageError("not a complex number: '" + s + "'");
}

// "1:1" -> |w|^2; "2:1:0.5,0:0:-1" -> 0.5 w^2 conj(w) - 1
SymbolPoly parse_symbol(const std::string& s) {
  SymbolPoly f;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, ',')) {
    std::stringstream ts(term);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ts, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("symbol terms look like a:b or a:b:coefficient");
    try {
      const int a = std::stoi(parts[0]), b = std::stoi(parts[1]);
      if (a < 0 || b < 0) throw UsageError("symbol powers must be >= 0");
      const cplx c = parts.size() == 3 ? parse_complex(parts[2]) : cplx(1.0);
      f.coeffs[{a, b}] += c;
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const UsageError*>(&e)) throw;
      throw UsageError("bad symbol term '" + term + "'");
    }
  }
  if (f.coeffs.empty()) throw UsageError("empty symbol");
  return f;
}

PolyFamily parse_family(const std::string& s, double order) {
  if (s == "laguerre") return PolyFamily::laguerre(order);
  if (s == "hermite") return PolyFamily::hermite();
  if (s == "legendre") return PolyFamily::legendre();
  throw UsageError("unknown family '" + s + "' (laguerre, hermite, legendre)");
}

std::string cfmt(const char* pattern, double v) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laguerre Fock space quantization toolkit"};
  app.require_subcommand(1);

  std::string eps_s = "0.5", format_s = "csv", output, suite_s, family_s = "laguerre", seq_s, x_s = "1", y_s = "1",
              z_s = "1", symbol_s = "1:1";
  double order = 0.0, tol = 1e-8;
  int N = 80, M = 2, n_max = 10;

  auto common = [&](CLI::App* sub, bool grids) {
    auto* eps = sub->add_option("--eps", eps_s,
                                grids ? "comma-separated eps list (default: the suite's pinned grid)"
                                      : "comma-separated eps list");
    if (!grids) eps->capture_default_str();
    sub->add_option("--order", order, "Laguerre order a (default 0)");
    sub->add_option("--N", N, "truncation size (default 80; suites use their pinned size unless given)");
    sub->add_option("--order-m", M, "expansion order M (default 2)");
    sub->add_option("--tol", tol, "tolerance (default 1e-8)");
    sub->add_option("--format", format_s, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--output", output, "output path (default stdout)");
  };

  std::string verify_help = "run verification suites:";
  for (const auto& s : verify_suites()) verify_help += " " + s.id;
  auto* verify = app.add_subcommand("verify", verify_help);
  common(verify, true);
  verify->add_option("--suite", suite_s, "suite id or 'all'")->required();

  std::string table_help = "emit a parameter-sweep table:";
  for (const auto& s : table_suites()) table_help += " " + s.id;
  auto* table = app.add_subcommand("table", table_help + " (verify suite ids also accepted)");
  common(table, true);
  table->add_option("--suite", suite_s, "table suite id")->required();

  auto* kernel = app.add_subcommand("kernel", "evaluate a Poisson kernel: series with tail bound and closed form");
  common(kernel, false);
  kernel->add_option("--family", family_s, "laguerre, hermite, legendre or fock")->capture_default_str();
  kernel->add_option("--x", x_s, "first argument (complex allowed, e.g. 1+2i)")->capture_default_str();
  kernel->add_option("--y", y_s, "second argument")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "classify a coefficient sequence for a family");
  common(classify_cmd, false);
  classify_cmd->add_option("--family", family_s, "laguerre, hermite or legendre")->capture_default_str();
  classify_cmd->add_option("--seq", seq_s, "geometric:e, power:p, sexp:a,beta, exp-log, inv-factorial")->required();

  auto* squeeze = app.add_subcommand("squeeze", "compare the squeeze operator with the closed-form images");
  common(squeeze, false);
  squeeze->add_option("--n", n_max, "largest basis index (default 10)");

  auto* berezin = app.add_subcommand("berezin", "Berezin transform of a polynomial symbol");
  common(berezin, false);
  berezin->add_option("--symbol", symbol_s, "terms a:b[:coef] for coef w^a conj(w)^b, comma-separated")
      ->capture_default_str();
  berezin->add_option("--z", z_s, "evaluation point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  const bool eps_given = sub->count("--eps") > 0;
  std::vector<ReportRow> rows;
  try {
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (N < 2) throw UsageError("--N must be >= 2");
    if (M < 0) throw UsageError("--order-m must be >= 0");
    const std::vector<double> eps = parse_list(eps_s);
    for (double e : eps)
      if (!(e > 0.0 && e < 1.0)) throw UsageError("eps values must lie in (0, 1)");
    const TableFormat format = format_s == "json" ? TableFormat::Json : TableFormat::Csv;

    SuiteConfig cfg;
    if (eps_given) cfg.eps = eps;
    if (sub->count("--order")) cfg.order = order;
    if (sub->count("--N")) cfg.N = N;
    if (sub->count("--order-m")) cfg.M = M;
    if (sub->count("--tol")) cfg.tol = tol;

    auto run_one = [&](const SuiteInfo& s) {
      try {
        auto r = s.run(cfg);
        rows.insert(rows.end(), r.begin(), r.end());
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      } catch (const std::exception& e) {
        rows.push_back(make_row(s.id, std::string("suite error: ") + e.what(), std::nan(""), 0.0,
                                Provenance::Derived, 0.0));
      }
    };

    if (sub == verify) {
      if (suite_s == "all") {
        for (const auto& s : verify_suites()) run_one(s);
      } else {
        try {
          run_one(find_suite(suite_s));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
    } else if (sub == table) {
      const SuiteInfo* s = nullptr;
      try {
        s = &find_suite(suite_s);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      run_one(*s);
    } else if (sub == kernel) {
      const cplx x = parse_complex(x_s), y = parse_complex(y_s);
      for (double e : eps) {
        const std::string tag = cfmt(", eps=%.6g", e);
        KernelValue kv;
        if (family_s == "laguerre") {
          kv = laguerre_kernel_series(QuantParams(e), order, x, y, tol);
        } else if (family_s == "hermite") {
          if (x.imag() != 0.0 || y.imag() != 0.0) throw UsageError("Hermite kernel takes real x, y");
          kv = hermite_kernel_series(e, x.real(), y.real(), tol);
        } else if (family_s == "legendre") {
          kv = legendre_kernel_series(e, x, y, tol);
          rows.push_back(info_row("kernel", "inside convergence domain" + tag,
                                  legendre_domain_contains(e, x, y) ? 1.0 : 0.0, Provenance::Paper));
        } else if (family_s == "fock") {
          const cplx v = fock_kernel(QuantParams(e), order, x, y);
          kv.series_value = v;
        } else {
          throw UsageError("unknown family '" + family_s + "'");
        }
        rows.push_back(info_row("kernel", family_s + " value re" + tag, kv.series_value.real()));
        rows.push_back(info_row("kernel", family_s + " value im" + tag, kv.series_value.imag()));
        if (family_s != "fock") {
          rows.push_back(info_row("kernel", family_s + " tail bound" + tag, kv.tail_bound));
          rows.push_back(info_row("kernel", family_s + " terms" + tag, kv.terms_used));
        }
        if (kv.has_closed)
          rows.push_back(make_row("kernel", family_s + " |series - closed form|" + tag,
                                  std::abs(kv.series_value - kv.closed_value), 0.0, Provenance::Paper,
                                  std::max(tol * std::max(1.0, std::abs(kv.closed_value)), 2.0 * kv.tail_bound)));
      }
    } else if (sub == classify_cmd) {
      CoeffSeq c = CoeffSeq::geometric(0.5);
      try {
        c = CoeffSeq::parse(seq_s);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const PolyFamily fam = parse_family(family_s, order);
      const Verdict v = classify(fam, c);
      auto code = [](Tri t) { return t == Tri::True ? 1.0 : t == Tri::False ? 0.0 : 0.5; };
      const std::string tag = fam.name() + ", " + c.describe();
      rows.push_back(info_row("classify", "rkhs (1 true, 0 false, 0.5 indeterminate): " + tag, code(v.rkhs)));
      rows.push_back(info_row("classify", "entire extension (1 true, 0 false, 0.5 indeterminate): " + tag,
                              code(v.entire_extension)));
      if (!v.sum_evidence.ratios.empty())
        rows.push_back(info_row("classify", "last doubling ratio: " + tag, v.sum_evidence.ratios.back()));
      std::cerr << fam.name() << " " << c.describe() << ": rkhs=" << to_string(v.rkhs)
                << " entire_extension=" << to_string(v.entire_extension) << "\n";
    } else if (sub == squeeze) {
      if (n_max < 0 || n_max >= N) throw UsageError("--n must satisfy 0 <= n < N");
      for (double e : eps) {
        const auto checks = verify_theorem7_batch(e, n_max, N);
        for (int n = 0; n <= n_max; ++n)
          rows.push_back(make_row("squeeze", cfmt("||U e_n - E_n||, eps=%.6g", e) + cfmt(", n=%02.0f", n),
                                  checks[n].deviation, 0.0, Provenance::Paper, 1e-6));
      }
    } else if (sub == berezin) {
      const SymbolPoly f = parse_symbol(symbol_s);
      const cplx z = parse_complex(z_s);
      for (double e : eps) {
        const QuantParams p(e);
        const std::string tag = cfmt(", eps=%.6g", e);
        const BerezinValue b = berezin_numeric(p, f, z, tol);
        rows.push_back(info_row("berezin", "B f re (moment expansion)" + tag, b.value.real()));
        rows.push_back(info_row("berezin", "B f im (moment expansion)" + tag, b.value.imag()));
        rows.push_back(make_row("berezin", "|moment - quadrature|" + tag, std::abs(b.value - b.quadrature_value), 0.0,
                                Provenance::Derived, 100.0 * tol * std::max(1.0, std::abs(b.value))));
        if (z == cplx(0.0)) {
          int deg = 0;
          for (const auto& [k, c] : f.coeffs) deg = std::max(deg, k.first + k.second);
          rows.push_back(make_row("berezin", "origin formula" + tag, berezin_origin(p, f, deg), b.value.real(),
                                  Provenance::Paper, 1e-7));
        } else {
          const FormalOpSeries q = q_series(M);
          cplx s = 0.0;
          for (int m = 0; m <= M; ++m) s += q[m].apply(f, z) * std::pow(p.alpha_scale(), -m);
          rows.push_back(info_row("berezin", cfmt("expansion to order M=%.0f re", M) + tag, s.real()));
          rows.push_back(info_row("berezin", cfmt("|B f - expansion|, M=%.0f", M) + tag, std::abs(b.value - s)));
        }
      }
    }
    emit_table(rows, format, output);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return all_pass(rows) ? 0 : 1;
}
