#include "golden/io.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <ostream>

#include "golden/errors.hpp"

namespace golden {

namespace {

using nlohmann::json;

json parse_object(const std::string& text) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw DomainError(ErrorCode::InvalidArgument, "expected a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw DomainError(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError(ErrorCode::InvalidArgument, std::string("missing or mistyped field '") + key + "'");
  }
}

}  // namespace

int decimal_digits(Precision bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 1;
}

std::string format_real(const Real& x) { return x.to_string(decimal_digits(x.precision())); }

std::string to_json(const IdentityReport& report) {
  const json j = {{"id", report.id},
                  {"k", report.k},
                  {"x", format_real(report.x)},
                  {"lhs", format_real(report.lhs)},
                  {"rhs", format_real(report.rhs)},
                  {"residual", format_real(report.residual)}};
  return j.dump();
}

IdentityReport identity_report_from_json(const std::string& line, Precision precision_bits) {
  const json j = parse_object(line);
  IdentityReport r{field<std::string>(j, "id"),
                   field<long>(j, "k"),
                   Real::parse(field<std::string>(j, "x"), precision_bits),
                   Real::parse(field<std::string>(j, "lhs"), precision_bits),
                   Real::parse(field<std::string>(j, "rhs"), precision_bits),
                   Real(precision_bits)};
  r.recompute_residual();
  return r;
}

std::string to_json(const PureState& state) {
  json amps = json::array();
  for (const auto& a : state.amplitudes) amps.push_back(a.to_string());
  const json j = {{"n", state.num_qubits}, {"k", state.k}, {"amplitudes", amps}, {"norm_sq", state.norm_sq.to_string()}};
  return j.dump();
}

PureState pure_state_from_json(const std::string& text) {
  const json j = parse_object(text);
  std::vector<QuadraticNumber> amps;
  for (const auto& a : field<std::vector<std::string>>(j, "amplitudes")) amps.push_back(QuadraticNumber::parse(a));
  PureState s = PureState::from_amplitudes(field<long>(j, "n"), field<long>(j, "k"), std::move(amps));
  if (!(s.norm_sq == QuadraticNumber::parse(field<std::string>(j, "norm_sq")))) {
    throw DomainError(ErrorCode::InvalidArgument, "norm_sq does not match the amplitudes");
  }
  return s;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

void write_spectrum_csv(std::ostream& os, long k, const std::vector<SpectrumEntry>& entries, bool header) {
  if (header) os << "k,n,energy_halfquanta\n";
  for (const auto& e : entries) os << k << ',' << e.n << ',' << e.energy_halfquanta.get_str() << '\n';
}

void write_field_csv(std::ostream& os, const std::vector<FieldSample>& samples, bool header) {
  if (header) os << "x,y,Re(V),Im(V),|V|\n";
  for (const auto& s : samples) {
    os << format_real(s.x) << ',' << format_real(s.y) << ',' << format_real(s.velocity.re) << ','
       << format_real(s.velocity.im) << ',' << format_real(abs(s.velocity)) << '\n';
  }
}

}  // namespace golden
