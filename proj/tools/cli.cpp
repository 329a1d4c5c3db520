#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "golden/errors.hpp"
#include "golden/goldenfield.hpp"
#include "golden/hydroimages.hpp"
#include "golden/io.hpp"
#include "golden/oscillator.hpp"
#include "golden/qcalculus.hpp"
#include "golden/quantumapps.hpp"
#include "golden/sequences.hpp"
#include "golden/series.hpp"

namespace golden::cli {

namespace {

using nlohmann::json;

constexpr Precision kMinPrecision = 32;
constexpr Precision kMaxPrecision = 1 << 20;

enum class Format { plain, json, csv };

struct Common {
  long precision = kDefaultPrecision;
  long truncation = 100;
  std::string format = "plain";

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::plain;
  }
  Precision bits() const { return static_cast<Precision>(precision); }
};

// Raised when a requested bound is not met; maps to exit status 4.
struct BoundNotMet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void csv_row(std::ostream& out, const std::vector<std::string>& fields) { write_csv_row(out, fields); }

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

GoldenPolynomial parse_poly(const std::string& text) {
  std::vector<ComplexQuadratic> coeffs;
  for (const auto& c : split(text, ',')) coeffs.emplace_back(QuadraticNumber::parse(c));
  return GoldenPolynomial(std::move(coeffs));
}

std::vector<std::string> coeff_strings(const GoldenPolynomial& p) {
  std::vector<std::string> out;
  for (long n = 0; n <= p.degree(); ++n) out.push_back(p.coeff(n).to_string());
  return out;
}

std::vector<std::string> int_strings(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Real parse_real(const std::string& text, Precision bits) { return Real::parse(text, bits); }

// Emits a list of labelled values in the requested format.
void emit_values(std::ostream& out, Format fmt, const std::string& key, const std::vector<std::string>& values,
                 const json& extra = json::object()) {
  switch (fmt) {
    case Format::plain:
      out << join(values) << '\n';
      break;
    case Format::json: {
      json j = extra;
      j[key] = values;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      csv_row(out, {"index", key});
      for (std::size_t i = 0; i < values.size(); ++i) csv_row(out, {std::to_string(i), values[i]});
      break;
  }
}

void emit_record(std::ostream& out, Format fmt, const std::vector<std::pair<std::string, std::string>>& fields) {
  switch (fmt) {
    case Format::plain:
      for (const auto& [k, v] : fields) out << k << ' ' << v << '\n';
      break;
    case Format::json: {
      json j = json::object();
      for (const auto& [k, v] : fields) j[k] = v;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv: {
      std::vector<std::string> keys;
      std::vector<std::string> vals;
      for (const auto& [k, v] : fields) {
        keys.push_back(k);
        vals.push_back(v);
      }
      csv_row(out, keys);
      csv_row(out, vals);
      break;
    }
  }
}

void write_error(std::ostream& err, const std::string& kind, const std::string& code, const std::string& message) {
  err << json{{"error", kind}, {"code", code}, {"message", message}}.dump() << '\n';
}

class Cli {
 public:
  Cli(std::ostream& out) : out_(out) {  // NOLINT(explicit)
    app_.name("golden");
    app_.description("Quantum calculus of Fibonacci divisors");
    app_.require_subcommand(1);
    register_commands();
  }

  CLI::App& app() { return app_; }

  int dispatch() {
    for (auto& [name, action] : actions_) {
      if (app_.got_subcommand(name)) {
        check_precision();
        return action();
      }
    }
    return kUsage;
  }

 private:
  CLI::App* command(const std::string& name, const std::string& help) {
    CLI::App* sub = app_.add_subcommand(name, help);
    sub->add_option("--precision", common_.precision, "working precision in bits")
        ->envname("GOLDEN_PRECISION")
        ->capture_default_str();
    sub->add_option("--truncation", common_.truncation, "series truncation order")->capture_default_str();
    sub->add_option("--format", common_.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    return sub;
  }

  void check_precision() const {
    if (common_.precision < kMinPrecision || common_.precision > kMaxPrecision) {
      throw DomainError(ErrorCode::PrecisionUnachievable,
                        "precision must lie in [32, 1048576] bits, got " + std::to_string(common_.precision));
    }
    if (common_.truncation < 1) throw CLI::ValidationError("--truncation", "must be positive");
  }

  void on(const std::string& name, std::function<int()> action) { actions_[name] = std::move(action); }

  void register_commands();

  std::ostream& out_;
  CLI::App app_;
  Common common_;
  std::map<std::string, std::function<int()>> actions_;

  // Parameter storage shared by commands; each run parses exactly one command.
  long k_ = 1;
  long n_ = 5;
  long m_ = 0;
  long from_ = 1;
  long dim_ = 40;
  long terms_ = 12;
  long nx_ = 21;
  long ny_ = 21;
  bool row_ = false;
  bool magnitude_ = false;
  bool probabilities_ = false;
  std::string a_ = "1";
  std::string sign_ = "minus";
  std::string poly_;
  std::string fn_ = "exp";
  std::string variant_ = "e";
  std::string type_ = "boson";
  std::string sample_ = "diagonal";
  std::string flow_ = "annulus";
  std::string x_ = "1";
  std::string y_ = "0";
  std::string beta_re_ = "0.5";
  std::string beta_im_ = "0";
  std::string z0_re_ = "1.1";
  std::string z0_im_ = "0.2";
  std::string gamma_ = "1";
  std::string x_min_ = "-2";
  std::string x_max_ = "2";
  std::string y_min_ = "-2";
  std::string y_max_ = "2";
  std::string tolerance_ = "1e-25";
  std::string bound_;
};

void Cli::register_commands() {
  // -- sequences --
  {
    auto* c = command("seq", "Fibonacci divisors F_n^(k) for n = from..n");
    c->add_option("--k", k_, "order k (nonzero)")->required();
    c->add_option("--n", n_, "last index")->required();
    c->add_option("--from", from_, "first index")->capture_default_str();
    on("seq", [this] {
      std::vector<std::string> vals;
      for (long i = from_; i <= n_; ++i) vals.push_back(fib_divisor(i, k_).get_str());
      emit_values(out_, common_.fmt(), "values", vals, {{"k", k_}, {"from", from_}});
      return kOk;
    });
  }
  {
    auto* c = command("lucas", "Lucas number L_k");
    c->add_option("--k", k_, "index")->required();
    on("lucas", [this] {
      emit_record(out_, common_.fmt(), {{"k", std::to_string(k_)}, {"lucas", lucas(k_).get_str()}});
      return kOk;
    });
  }
  {
    auto* c = command("fibonomial", "k-th Fibonomial coefficient");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--n", n_, "upper index")->required();
    c->add_option("--m", m_, "lower index");
    c->add_flag("--row", row_, "print the whole row m = 0..n");
    on("fibonomial", [this] {
      if (row_) {
        emit_values(out_, common_.fmt(), "row", int_strings(fibonomial_row(n_, k_)), {{"k", k_}, {"n", n_}});
      } else {
        emit_values(out_, common_.fmt(), "value", {fibonomial(n_, m_, k_).get_str()},
                    {{"k", k_}, {"n", n_}, {"m", m_}});
      }
      return kOk;
    });
  }
  // -- qcalculus --
  {
    auto* c = command("binomial", "Golden binomial (x ± a)^n_F, coefficients lowest degree first");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--n", n_, "power")->required();
    c->add_option("--a", a_, "shift a in Q(sqrt5), e.g. 1/2+3*sqrt5")->capture_default_str();
    c->add_option("--sign", sign_, "plus or minus")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
    on("binomial", [this] {
      const auto sign = sign_ == "plus" ? BinomialSign::plus : BinomialSign::minus;
      const ComplexQuadratic a(QuadraticNumber::parse(a_));
      const auto product = golden_binomial(k_, n_, a, sign);
      if (!(product == golden_binomial_expansion(k_, n_, a, sign))) {
        throw BoundNotMet("product form and Fibonomial expansion disagree");
      }
      emit_values(out_, common_.fmt(), "coeffs", coeff_strings(product), {{"k", k_}, {"n", n_}});
      return kOk;
    });
  }
  {
    auto* c = command("derive", "k-th Golden derivative of a polynomial or of a named function");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--poly", poly_, "coefficients c0,c1,... in Q(sqrt5)");
    c->add_option("--fn", fn_, "exp or logsine")->check(CLI::IsMember({"exp", "logsine"}))->capture_default_str();
    c->add_option("--m", m_, "period order m of logsine, sin(pi ln|x| / ln phi^m)");
    c->add_option("--x", x_, "evaluation point (real part)")->capture_default_str();
    c->add_option("--y", y_, "evaluation point (imaginary part)")->capture_default_str();
    on("derive", [this] {
      if (!poly_.empty()) {
        emit_values(out_, common_.fmt(), "coeffs", coeff_strings(golden_derivative_poly(k_, parse_poly(poly_))),
                    {{"k", k_}});
        return kOk;
      }
      const NumericFunction f = fn_ == "exp" ? exponential_function() : log_periodic_sine(m_ == 0 ? 1 : m_);
      const Complex x(parse_real(x_, common_.bits()), parse_real(y_, common_.bits()));
      const Complex d = golden_derivative_fn(k_, f, x, common_.bits());
      emit_record(out_, common_.fmt(),
                  {{"function", f.label}, {"re", format_real(d.re)}, {"im", format_real(d.im)}});
      return kOk;
    });
  }
  {
    auto* c = command("taylor", "Golden Taylor coefficients c_n = (D^n p)(0)");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--poly", poly_, "coefficients c0,c1,... in Q(sqrt5)")->required();
    on("taylor", [this] {
      const auto p = parse_poly(poly_);
      const auto c = golden_taylor(k_, p);
      if (!(taylor_resum(k_, c) == p)) throw BoundNotMet("Taylor re-summation does not reproduce the polynomial");
      std::vector<std::string> vals;
      for (const auto& x : c) vals.push_back(x.to_string());
      emit_values(out_, common_.fmt(), "coefficients", vals, {{"k", k_}});
      return kOk;
    });
  }
  // -- series --
  {
    auto* c = command("genfun", "Maclaurin coefficients of x/(1 - L_k x + (-1)^k x^2)");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--n", n_, "highest coefficient")->required();
    on("genfun", [this] {
      emit_values(out_, common_.fmt(), "coefficients", int_strings(generating_coeffs(k_, n_)), {{"k", k_}});
      return kOk;
    });
  }
  {
    auto* c = command("identities", "trigonometric identity battery for order k");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--tolerance", tolerance_, "residual bound; exit 4 if any residual exceeds it")
        ->capture_default_str();
    on("identities", [this] {
      const auto reports = identity_suite(k_, common_.bits());
      const Real tol = parse_real(tolerance_, common_.bits());
      bool ok = true;
      if (common_.fmt() == Format::csv) csv_row(out_, {"id", "k", "x", "lhs", "rhs", "residual"});
      for (const auto& r : reports) {
        ok = ok && r.residual <= tol;
        switch (common_.fmt()) {
          case Format::json:
            out_ << to_json(r) << '\n';
            break;
          case Format::csv:
            csv_row(out_, {r.id, std::to_string(r.k), format_real(r.x), format_real(r.lhs), format_real(r.rhs),
                           format_real(r.residual)});
            break;
          case Format::plain:
            out_ << r.id << " residual=" << r.residual.to_string(6) << '\n';
            break;
        }
      }
      if (!ok) throw BoundNotMet("some identity residual exceeds " + tolerance_);
      return kOk;
    });
  }
  {
    auto* c = command("exp", "Golden exponential e_F or E_F with tail bound");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--variant", variant_, "e or E")->check(CLI::IsMember({"e", "E"}))->capture_default_str();
    c->add_option("--x", x_, "argument (real part)")->capture_default_str();
    c->add_option("--y", y_, "argument (imaginary part)")->capture_default_str();
    on("exp", [this] {
      const Complex x(parse_real(x_, common_.bits()), parse_real(y_, common_.bits()));
      const auto v = golden_exp_eval(k_, variant_ == "E" ? ExpVariant::E : ExpVariant::e, x, common_.truncation,
                                     common_.bits());
      emit_record(out_, common_.fmt(),
                  {{"re", format_real(v.value.re)}, {"im", format_real(v.value.im)},
                   {"tail_bound", format_real(v.tail_bound)}});
      return kOk;
    });
  }
  // -- oscillator --
  {
    auto* c = command("spectrum", "energy levels in half-quanta for n = from..n");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--n", n_, "last level")->required();
    c->add_option("--from", from_, "first level")->capture_default_str();
    c->add_option("--type", type_, "boson or fermion")->check(CLI::IsMember({"boson", "fermion"}))
        ->capture_default_str();
    c->add_flag("--magnitude", magnitude_, "print |E_n| (fermionic tables)");
    on("spectrum", [this] {
      if (from_ < 0 || from_ > n_) throw DomainError(ErrorCode::IndexOutOfRange, "need 0 <= from <= n");
      auto all = type_ == "boson" ? bosonic_spectrum(k_, n_) : fermionic_spectrum(k_, n_);
      std::vector<SpectrumEntry> entries(all.begin() + from_, all.end());
      if (magnitude_) {
        for (auto& e : entries) e.energy_halfquanta = abs(e.energy_halfquanta);
      }
      if (common_.fmt() == Format::csv) {
        write_spectrum_csv(out_, k_, entries);
      } else {
        std::vector<std::string> vals;
        for (const auto& e : entries) vals.push_back(e.energy_halfquanta.get_str());
        emit_values(out_, common_.fmt(), "energy_halfquanta", vals, {{"k", k_}, {"from", from_}, {"type", type_}});
      }
      return kOk;
    });
  }
  {
    auto* c = command("semiclassical", "Bernoulli-polynomial expansion of E_n for even k");
    c->add_option("--k", k_, "even order k")->required();
    c->add_option("--n", n_, "level")->required();
    c->add_option("--terms", terms_, "number S of correction terms")->capture_default_str();
    on("semiclassical", [this] {
      const Real approx = semiclassical_energy(k_, n_, terms_, common_.bits());
      const Integer exact = bosonic_spectrum(k_, n_).back().energy_halfquanta;
      const Real error = abs(approx - Real(exact, common_.bits()));
      emit_record(out_, common_.fmt(),
                  {{"approx", format_real(approx)}, {"exact", exact.get_str()}, {"error", format_real(error)}});
      return kOk;
    });
  }
  {
    auto* c = command("coherent", "truncated coherent state and its eigen-residual");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--beta-re", beta_re_, "Re beta")->capture_default_str();
    c->add_option("--beta-im", beta_im_, "Im beta")->capture_default_str();
    c->add_option("--dim", dim_, "Fock truncation D")->capture_default_str();
    on("coherent", [this] {
      const Complex beta(parse_real(beta_re_, common_.bits()), parse_real(beta_im_, common_.bits()));
      const auto s = coherent_state(k_, beta, dim_, common_.bits());
      if (common_.fmt() == Format::json) {
        json amps = json::array();
        for (const auto& a : s.amplitudes) amps.push_back({format_real(a.re), format_real(a.im)});
        out_ << json{{"k", s.k}, {"dim", s.dim}, {"residual", format_real(s.residual)}, {"amplitudes", amps}}.dump()
             << '\n';
      } else {
        emit_record(out_, common_.fmt(), {{"dim", std::to_string(s.dim)}, {"residual", format_real(s.residual)}});
      }
      return kOk;
    });
  }
  {
    auto* c = command("bargman", "z D_k acting on a polynomial (Fock-Bargman number operator)");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--poly", poly_, "coefficients c0,c1,... in Q(sqrt5)")->required();
    on("bargman", [this] {
      emit_values(out_, common_.fmt(), "coeffs", coeff_strings(bargman_apply(k_, parse_poly(poly_))), {{"k", k_}});
      return kOk;
    });
  }
  // -- quantumapps --
  {
    auto* c = command("qubit", "n-qubit state with Fibonacci-divisor amplitudes (odd k)");
    c->add_option("--k", k_, "odd order k")->required();
    c->add_option("--n", n_, "number of qubits")->required();
    c->add_flag("--probabilities", probabilities_, "print exact basis probabilities");
    on("qubit", [this] {
      const auto s = fibonacci_multiqubit(k_, n_);
      if (probabilities_) {
        std::vector<std::string> vals;
        for (const auto& p : s.probabilities()) vals.push_back(p.to_string());
        emit_values(out_, common_.fmt(), "probabilities", vals, {{"k", k_}, {"n", n_}});
      } else if (common_.fmt() == Format::plain) {
        std::vector<std::string> vals;
        for (const auto& a : s.amplitudes) vals.push_back(a.to_string());
        out_ << join(vals) << "\nnorm_sq " << s.norm_sq.to_string() << '\n';
      } else if (common_.fmt() == Format::json) {
        out_ << to_json(s) << '\n';
      } else {
        csv_row(out_, {"basis", "amplitude"});
        for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
          csv_row(out_, {std::to_string(i), s.amplitudes[i].to_string()});
        }
      }
      return kOk;
    });
  }
  {
    auto* c = command("concurrence", "concurrence of the two-qubit Fibonacci state");
    c->add_option("--k", k_, "odd order k")->required();
    on("concurrence", [this] {
      const auto s = fibonacci_multiqubit(k_, 2);
      emit_record(out_, common_.fmt(),
                  {{"closed_form", concurrence_closed(k_).get_str()},
                   {"pure_state", concurrence_pure(s).to_string()},
                   {"wootters", format_real(concurrence_wootters(s, common_.bits()))}});
      return kOk;
    });
  }
  {
    auto* c = command("bell", "Bell superpositions of antipodal qubits and their concurrence");
    c->add_option("--k", k_, "order k")->required();
    on("bell", [this] {
      const char* names[] = {"P+", "P-", "G+", "G-"};
      const auto states = bell_superpositions(k_);
      if (common_.fmt() == Format::csv) csv_row(out_, {"state", "amplitudes", "concurrence"});
      for (std::size_t i = 0; i < states.size(); ++i) {
        std::vector<std::string> amps;
        for (const auto& a : states[i].amplitudes) amps.push_back(a.to_string());
        const Real c = concurrence_wootters(states[i], common_.bits());
        switch (common_.fmt()) {
          case Format::json:
            out_ << json{{"state", names[i]}, {"amplitudes", amps}, {"concurrence", format_real(c)}}.dump() << '\n';
            break;
          case Format::csv:
            csv_row(out_, {names[i], join(amps, ";"), format_real(c)});
            break;
          case Format::plain:
            out_ << names[i] << ' ' << join(amps) << " concurrence=" << c.to_string(25) << '\n';
            break;
        }
      }
      return kOk;
    });
  }
  {
    auto* c = command("hecke", "R^n = F_n^(k) R + F_{n-1}^(k) I against repeated multiplication");
    c->add_option("--k", k_, "order k")->required();
    c->add_option("--n", n_, "power")->required();
    c->add_option("--sample", sample_, "diagonal or conjugated")
        ->check(CLI::IsMember({"diagonal", "conjugated"}))
        ->capture_default_str();
    on("hecke", [this] {
      TwoByTwoOperator R = hecke_diagonal_sample(k_);
      if (sample_ == "conjugated") {
        R = hecke_conjugated_sample(k_, TwoByTwoOperator(2, QuadraticNumber(Rational(1), Rational(1, 2)), 1, 3));
      }
      const auto formula = hecke_power(R, n_, k_);
      const auto direct = repeated_power(R, n_);
      std::vector<std::pair<std::string, std::string>> fields;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          fields.emplace_back("R" + std::to_string(i) + std::to_string(j), formula.at(i, j).to_string());
        }
      }
      fields.emplace_back("matches_repeated_product", formula == direct ? "true" : "false");
      emit_record(out_, common_.fmt(), fields);
      if (!(formula == direct)) throw BoundNotMet("F_n R + F_{n-1} I differs from R^n for this k");
      return kOk;
    });
  }
  // -- hydroimages --
  const auto flow_options = [this](CLI::App* c) {
    c->add_option("--k", k_, "annulus order k >= 1")->capture_default_str();
    c->add_option("--z0-re", z0_re_, "vortex position, real part")->capture_default_str();
    c->add_option("--z0-im", z0_im_, "vortex position, imaginary part")->capture_default_str();
    c->add_option("--gamma", gamma_, "circulation")->capture_default_str();
    c->add_option("--flow", flow_, "annulus or wedge")->check(CLI::IsMember({"annulus", "wedge"}))
        ->capture_default_str();
  };
  const auto make_cfg = [this] {
    const Precision b = common_.bits();
    return FlowConfig::make(Complex(parse_real(z0_re_, b), parse_real(z0_im_, b)), parse_real(gamma_, b),
                            common_.truncation, k_, b);
  };
  {
    auto* c = command("hydro-field", "complex velocity sampled on a grid (CSV)");
    flow_options(c);
    c->add_option("--xmin", x_min_)->capture_default_str();
    c->add_option("--xmax", x_max_)->capture_default_str();
    c->add_option("--ymin", y_min_)->capture_default_str();
    c->add_option("--ymax", y_max_)->capture_default_str();
    c->add_option("--nx", nx_)->capture_default_str();
    c->add_option("--ny", ny_)->capture_default_str();
    on("hydro-field", [this, make_cfg] {
      const Precision b = common_.bits();
      const auto samples = sample_field(make_cfg(), flow_ == "wedge" ? FlowKind::wedge : FlowKind::annulus,
                                        parse_real(x_min_, b), parse_real(x_max_, b), parse_real(y_min_, b),
                                        parse_real(y_max_, b), nx_, ny_);
      if (common_.fmt() == Format::json) {
        for (const auto& s : samples) {
          out_ << json{{"x", format_real(s.x)}, {"y", format_real(s.y)}, {"re", format_real(s.velocity.re)},
                       {"im", format_real(s.velocity.im)}}
                      .dump()
               << '\n';
        }
      } else {
        write_field_csv(out_, samples);
      }
      return kOk;
    });
  }
  {
    auto* c = command("hydro-residual", "self-similarity residual |V(phi^k z) phi^k - V(z)|");
    flow_options(c);
    c->add_option("--x", x_, "Re z")->capture_default_str();
    c->add_option("--y", y_, "Im z")->capture_default_str();
    c->add_option("--bound", bound_, "residual bound; exit 4 if exceeded");
    on("hydro-residual", [this, make_cfg] {
      const Precision b = common_.bits();
      const auto r = periodicity_residual(make_cfg(), Complex(parse_real(x_, b), parse_real(y_, b)),
                                          flow_ == "wedge" ? FlowKind::wedge : FlowKind::annulus);
      emit_record(out_, common_.fmt(),
                  {{"residual", format_real(r.residual)}, {"predicted_scale", format_real(r.predicted_scale)}});
      if (!bound_.empty() && r.residual > parse_real(bound_, b)) throw BoundNotMet("residual exceeds " + bound_);
      return kOk;
    });
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.app().parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << cli.app().help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << cli.app().help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.get_name(), e.what());
    return kUsage;
  }
  try {
    return cli.dispatch();
  } catch (const DomainError& e) {
    write_error(err, "domain", std::string(to_string(e.code())), e.what());
    return e.code() == ErrorCode::PrecisionUnachievable ? kPrecision : kDomain;
  } catch (const BoundNotMet& e) {
    write_error(err, "bound", "BoundNotMet", e.what());
    return kPrecision;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.get_name(), e.what());
    return kUsage;
  }
}

}  // namespace golden::cli
