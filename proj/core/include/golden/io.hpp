#pragma once

/**
 * @file io.hpp
 * @brief Text serialization: JSON lines for identity reports and qubit
 *        states, CSV for spectra and sampled velocity fields.
 *
 * Reals are written as decimal strings carrying every significant digit of
 * their precision, so a round trip through text loses nothing.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "golden/hydroimages.hpp"
#include "golden/numeric.hpp"
#include "golden/oscillator.hpp"
#include "golden/quantumapps.hpp"
#include "golden/series.hpp"

namespace golden {

/// Enough decimal digits to recover a value of `bits` precision.
int decimal_digits(Precision bits);
/// Scientific notation with decimal_digits(x.precision()) digits.
std::string format_real(const Real& x);

/// {"id":…,"k":…,"x":…,"lhs":…,"rhs":…,"residual":…} on one line; reals as strings.
std::string to_json(const IdentityReport& report);
IdentityReport identity_report_from_json(const std::string& line, Precision precision_bits);

/// {"n":…,"k":…,"amplitudes":[…],"norm_sq":"…"} with exact Q(√5) strings.
std::string to_json(const PureState& state);
PureState pure_state_from_json(const std::string& text);

/// k,n,energy_halfquanta
/// RFC 4180 field: quoted when it holds a comma, quote or line break.
std::string csv_field(const std::string& field);
/// Fields joined by commas, newline-terminated.
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

void write_spectrum_csv(std::ostream& os, long k, const std::vector<SpectrumEntry>& entries, bool header = true);
/// x,y,Re(V),Im(V),|V|
void write_field_csv(std::ostream& os, const std::vector<FieldSample>& samples, bool header = true);

}  // namespace golden
