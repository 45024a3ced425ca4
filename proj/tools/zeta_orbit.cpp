// Command-line front end: constructors, verification suites, orbit coefficients, exports.
//
// Exit status: 0 success, 1 a requested check failed, 2 usage error,
// 3 a window too small for the request (the required size is reported).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "zeta_orbit.hpp"

namespace zo = zeta_orbit;
using nlohmann::json;

namespace {

struct Options {
  std::int64_t size = 0;
  std::int64_t terms = 16;
  unsigned k = 0;
  std::string name;
  std::string suite;
  std::string oracle = "rhos";
  std::string word;
  std::string series = "zeta";
  std::string format = "json";
  std::string output;
  double re = 2.0;
  double im = 0.0;
  std::int64_t max_source = 0;
  std::int64_t index = 0;
  bool gl = false;
  unsigned threads = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::optional<zo::index_t> cap(const Options& o) {
  if (o.max_source > 0) return o.max_source;
  return std::nullopt;
}

std::int64_t need_size(const Options& o, std::int64_t fallback) {
  const std::int64_t n = o.size > 0 ? o.size : fallback;
  if (n < 1) throw UsageError("--size must be >= 1");
  return n;
}

std::size_t need_terms(const Options& o) {
  if (o.terms < 1) throw UsageError("--terms must be >= 1");
  return static_cast<std::size_t>(o.terms);
}

zo::Letter single_letter(const std::string& word, bool gl) {
  const auto w = zo::GroupWord::parse(word, gl);
  if (w.size() != 1) throw UsageError("--word must be a single letter here");
  return w.letters().front();
}

template <class Scalar>
std::string render_matrix(const zo::WindowedMatrix<Scalar>& m, const std::string& format) {
  if (format == "csv") return zo::matrix_to_csv(m);
  return zo::matrix_to_json(m).dump() + "\n";
}

template <class Scalar>
std::string render_series(const zo::DirichletSeries<Scalar>& a, const std::string& format,
                          const std::string& header = "n,value") {
  if (format == "csv") return zo::series_to_csv(a, header);
  return zo::series_to_json(a).dump() + "\n";
}

int cmd_alpha(const Options& o) {
  const auto m = static_cast<std::uint64_t>(need_size(o, 16));
  const zo::FactorizationTable table(m);
  const unsigned kmax = o.k > 0 ? o.k : table.max_k();
  if (o.format == "csv") {
    std::ostringstream out;
    out << "m,k,alpha\n";
    for (std::uint64_t i = 1; i <= m; ++i) {
      for (unsigned k = 1; k <= kmax; ++k) {
        const auto& v = table(k, i);
        if (v != 0) out << i << ',' << k << ',' << v.get_str() << '\n';
      }
    }
    emit(o, out.str());
  } else {
    json rows = json::array();
    for (std::uint64_t i = 1; i <= m; ++i) {
      for (unsigned k = 1; k <= kmax; ++k) {
        const auto& v = table(k, i);
        if (v != 0) rows.push_back({{"m", i}, {"k", k}, {"alpha", v.get_str()}});
      }
    }
    emit(o, rows.dump() + "\n");
  }
  return 0;
}

int cmd_matrix(const Options& o) {
  const auto n = need_size(o, 8);
  const std::string& name = o.name;
  if (name == "D") return emit(o, render_matrix(zo::divisor_matrix(n), o.format)), 0;
  if (name == "Mu") return emit(o, render_matrix(zo::moebius_matrix(n), o.format)), 0;
  if (name == "J") return emit(o, render_matrix(zo::matrix_J(n), o.format)), 0;
  if (name == "Jinf") return emit(o, render_matrix(zo::matrix_Jinf(n), o.format)), 0;
  if (name == "X") return emit(o, render_matrix(zo::matrix_X(n), o.format)), 0;
  if (name == "Z") return emit(o, render_matrix(zo::matrix_Z(n), o.format)), 0;
  if (name == "Zinv") return emit(o, render_matrix(zo::matrix_Zinv(n), o.format)), 0;
  if (name == "P") return emit(o, render_matrix(zo::matrix_P(n), o.format)), 0;
  if (name == "Q") return emit(o, render_matrix(zo::matrix_Q(n), o.format)), 0;
  if (name == "B" || name == "Bprime") {
    const auto pair = zo::counterexample_pair(n);
    return emit(o, render_matrix(name == "B" ? pair.first : pair.second, o.format)), 0;
  }
  if (name == "tau1" || name == "tau") {
    if (o.word.empty()) throw UsageError("--name " + name + " needs --word with one letter");
    const auto l = single_letter(o.word, o.gl);
    if (l == zo::Letter::W) {
      emit(o, render_matrix(name == "tau1" ? zo::tau1<zo::Rational>(l, n) : zo::tau<zo::Rational>(l, n), o.format));
    } else {
      emit(o, render_matrix(name == "tau1" ? zo::tau1<zo::Integer>(l, n) : zo::tau<zo::Integer>(l, n), o.format));
    }
    return 0;
  }
  if (name == "rho") {
    if (o.word.empty()) throw UsageError("--name rho needs --word");
    const auto w = zo::GroupWord::parse(o.word, o.gl);
    if (o.gl) {
      zo::Representation<zo::Rational> rep(true, cap(o));
      emit(o, render_matrix(rep.evaluate(w, n), o.format));
    } else {
      emit(o, render_matrix(zo::rho(w, n, cap(o)), o.format));
    }
    return 0;
  }
  throw UsageError("unknown matrix '" + name + "' (D, Mu, J, Jinf, X, Z, Zinv, P, Q, B, Bprime, tau1, tau, rho)");
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = zo::suite_names();
  } else {
    names.push_back(o.suite);
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& s : names) {
    const auto r = zo::run_suite(s, o.size);
    ok = ok && r.pass();
    reports.push_back(r.to_json());
  }
  emit(o, (names.size() == 1 ? reports[0] : reports).dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_phi(const Options& o) {
  const auto n = need_terms(o);
  if (o.oracle == "rhos") return emit(o, render_series(zo::phi_via_rhos(n).a, o.format, "n,a_n")), 0;
  if (o.oracle == "cubic") return emit(o, render_series(zo::phi_via_cubic(n).a, o.format, "n,a_n")), 0;
  if (o.oracle == "matrix") return emit(o, render_series(zo::phi_via_matrix(n, cap(o)).a, o.format, "n,a_n")), 0;
  if (o.oracle != "all") throw UsageError("--oracle must be rhos, matrix, cubic or all");
  const auto a = zo::phi_via_rhos(n).a;
  const auto b = zo::phi_via_matrix(n, cap(o)).a;
  const auto c = zo::phi_via_cubic(n).a;
  bool all = true;
  std::ostringstream csv;
  json rows = json::array();
  csv << "n,a_n,oracles_agree\n";
  for (std::size_t i = 1; i <= n; ++i) {
    const bool agree = a[i] == b[i] && a[i] == c[i];
    all = all && agree;
    csv << i << ',' << a[i].get_str() << ',' << (agree ? "true" : "false") << '\n';
    rows.push_back({{"n", i}, {"a_n", a[i].get_str()}, {"oracles_agree", agree}});
  }
  emit(o, o.format == "csv" ? csv.str() : rows.dump() + "\n");
  return all ? 0 : 1;
}

zo::IntSeries named_series(const Options& o, std::size_t n) {
  if (o.series == "zeta") return zo::zeta_series<zo::Integer>(n);
  if (o.series == "zeta-1") return zo::zeta_minus_one<zo::Integer>(n);
  if (o.series == "mu") return zo::moebius_series<zo::Integer>(n);
  if (o.series == "phi") return zo::phi_via_rhos(n).a;
  if (o.series == "orbit") {
    if (o.word.empty()) throw UsageError("--series orbit needs --word");
    return zo::orbit_series(zo::GroupWord::parse(o.word, o.gl), n, cap(o));
  }
  throw UsageError("unknown series '" + o.series + "' (zeta, zeta-1, mu, phi, orbit)");
}

int cmd_orbit(const Options& o) {
  if (o.word.empty()) throw UsageError("orbit needs --word");
  const auto w = zo::GroupWord::parse(o.word, o.gl);
  emit(o, render_series(zo::orbit_series(w, need_terms(o), cap(o)), o.format));
  return 0;
}

int cmd_eval(const Options& o) {
  const auto a = named_series(o, need_terms(o));
  const zo::Complex v = zo::eval_at(a, {o.re, o.im});
  std::ostringstream out;
  out << std::setprecision(17);
  if (o.format == "csv") {
    out << "re,im\n" << v.real() << ',' << v.imag() << '\n';
    emit(o, out.str());
  } else {
    emit(o, json{{"series", o.series}, {"terms", o.terms}, {"s", {o.re, o.im}}, {"re", v.real()}, {"im", v.imag()}}
                    .dump() +
                "\n");
  }
  return 0;
}

int cmd_export(const Options& o) {
  const auto n = need_terms(o);
  if (o.series == "g") return emit(o, zo::power_series_to_json(zo::series_g(n)).dump() + "\n"), 0;
  if (o.series == "h") {
    if (o.index < 0) throw UsageError("--index must be >= 0");
    return emit(o, zo::power_series_to_json(zo::series_h(static_cast<unsigned>(o.index), n)).dump() + "\n"), 0;
  }
  if (o.series == "W") {
    const auto w = zo::gamma_W(n);
    json m = json::array();
    for (int r = 0; r < 2; ++r) {
      json row = json::array();
      for (int c = 0; c < 2; ++c) row.push_back(zo::power_series_to_json(w(r, c)));
      m.push_back(row);
    }
    return emit(o, m.dump() + "\n"), 0;
  }
  if (o.series == "partitions") {
    const auto table = zo::partition_table(zo::phi_via_rhos(n).a);
    std::ostringstream csv;
    json rows = json::array();
    csv << "partition,a\n";
    for (const auto& [p, v] : table) {
      csv << '"' << zo::partition_string(p) << "\"," << v.get_str() << '\n';
      rows.push_back({{"partition", p}, {"a", v.get_str()}});
    }
    return emit(o, o.format == "csv" ? csv.str() : rows.dump() + "\n"), 0;
  }
  emit(o, render_series(named_series(o, n), o.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dirichlet-series representation of SL(2,Z): matrices, checks and the orbit series phi"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
    sub->add_option("--threads", o.threads, "worker threads (default: hardware, capped by ZETA_ORBIT_THREADS)");
  };

  auto* alpha = app.add_subcommand("alpha", "ordered factorization counts alpha_k(m) for m <= size");
  alpha->add_option("--size", o.size, "largest m");
  alpha->add_option("--k", o.k, "largest k (default: all nonzero levels)");
  add_common(alpha);

  auto* matrix = app.add_subcommand("matrix", "leading size x size window of a named matrix");
  matrix->add_option("--name", o.name, "D, Mu, J, Jinf, X, Z, Zinv, P, Q, B, Bprime, tau1, tau, rho")->required();
  matrix->add_option("--size", o.size, "columns");
  matrix->add_option("--word", o.word, "group word for tau1, tau and rho");
  matrix->add_option("--max-source", o.max_source, "refuse words whose source window exceeds this many rows");
  matrix->add_flag("--gl", o.gl, "allow the letter W (rational entries)");
  add_common(matrix);

  auto* verify = app.add_subcommand("verify", "run a verification suite and print its report");
  verify->add_option("--suite", o.suite, "suite name or 'all'")->required();
  verify->add_option("--size", o.size, "suite size (default: the suite's own)");
  add_common(verify);

  auto* phi = app.add_subcommand("phi", "coefficients a_1..a_terms of phi");
  phi->add_option("--terms", o.terms, "number of coefficients");
  phi->add_option("--oracle", o.oracle, "rhos, matrix, cubic or all")
      ->check(CLI::IsMember({"rhos", "matrix", "cubic", "all"}));
  phi->add_option("--max-source", o.max_source, "row cap for the matrix oracle");
  add_common(phi);

  auto* orbit = app.add_subcommand("orbit", "the series 1.rho(word)");
  orbit->add_option("--word", o.word, "group word, e.g. 'S T^2'")->required();
  orbit->add_option("--terms", o.terms, "number of coefficients");
  orbit->add_option("--max-source", o.max_source, "row cap for matrix evaluation");
  add_common(orbit);

  auto* eval = app.add_subcommand("eval", "evaluate a truncated Dirichlet series at s = re + i im");
  eval->add_option("--series", o.series, "zeta, zeta-1, mu, phi or orbit");
  eval->add_option("--word", o.word, "group word for --series orbit");
  eval->add_option("--terms", o.terms, "truncation length");
  eval->add_option("--re", o.re, "real part of s");
  eval->add_option("--im", o.im, "imaginary part of s");
  add_common(eval);

  auto* exp = app.add_subcommand("export", "export a series: g, h, W, partitions, zeta, zeta-1, mu, phi, orbit");
  exp->add_option("--series", o.series, "series name")->required();
  exp->add_option("--terms", o.terms, "order (power series) or length (Dirichlet series)");
  exp->add_option("--index", o.index, "n for --series h");
  exp->add_option("--word", o.word, "group word for --series orbit");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (o.threads > 0) zo::set_worker_count(o.threads);
  try {
    if (alpha->parsed()) return cmd_alpha(o);
    if (matrix->parsed()) return cmd_matrix(o);
    if (verify->parsed()) return cmd_verify(o);
    if (phi->parsed()) return cmd_phi(o);
    if (orbit->parsed()) return cmd_orbit(o);
    if (eval->parsed()) return cmd_eval(o);
    if (exp->parsed()) return cmd_export(o);
  } catch (const zo::InsufficientWindow& e) {
    std::cerr << json{{"error", "insufficient_window"},
                      {"message", e.what()},
                      {"required_rows", e.required_rows()},
                      {"required_cols", e.required_cols()}}
                     .dump()
              << "\nhint: raise --max-source to at least " << e.required_rows() << " or lower the size\n";
    return 3;
  } catch (const zo::WNotEnabled& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const zo::WordSyntaxError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "failure"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 2;
}
