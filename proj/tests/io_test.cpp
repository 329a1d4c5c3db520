#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "golden/errors.hpp"
#include "golden/io.hpp"
#include "golden/series.hpp"

using namespace golden;

TEST(Io, DecimalDigits) {
  EXPECT_GE(decimal_digits(128), 38);
  EXPECT_GE(decimal_digits(256), 77);
  EXPECT_LE(decimal_digits(64), 21);
}

TEST(Io, IdentityReportRoundTrip) {
  for (const auto& r : identity_suite(3, 192)) {
    const std::string line = to_json(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"id", "k", "x", "lhs", "rhs", "residual"}) EXPECT_TRUE(j.contains(key)) << key;
    const auto back = identity_report_from_json(line, 192);
    EXPECT_EQ(back.id, r.id);
    EXPECT_EQ(back.k, r.k);
    // Decimal export keeps enough digits to recover the binary value.
    EXPECT_EQ(back.lhs, r.lhs) << r.id;
    EXPECT_EQ(back.rhs, r.rhs) << r.id;
    EXPECT_EQ(back.x, r.x) << r.id;
  }
}

TEST(Io, PureStateRoundTrip) {
  const auto s = fibonacci_multiqubit(5, 3);
  const std::string text = to_json(s);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["k"], 5);
  EXPECT_EQ(j["amplitudes"].size(), 8u);
  EXPECT_TRUE(j["norm_sq"].is_string());
  const auto back = pure_state_from_json(text);
  EXPECT_EQ(back.amplitudes, s.amplitudes);
  EXPECT_EQ(back.norm_sq, s.norm_sq);
  auto tampered = j;
  tampered["norm_sq"] = "1";
  EXPECT_THROW(pure_state_from_json(tampered.dump()), DomainError);
}

TEST(Io, SpectrumCsv) {
  std::ostringstream os;
  write_spectrum_csv(os, 4, bosonic_spectrum(4, 2));
  EXPECT_EQ(os.str(), "k,n,energy_halfquanta\n4,0,1\n4,1,8\n4,2,55\n");
}

TEST(Io, FieldCsvHasHeader) {
  std::ostringstream os;
  write_field_csv(os, {});
  EXPECT_EQ(os.str(), "x,y,Re(V),Im(V),|V|\n");
}

TEST(Io, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  std::ostringstream os;
  write_csv_row(os, {"x", "1,2", ""});
  EXPECT_EQ(os.str(), "x,\"1,2\",\n");
}
