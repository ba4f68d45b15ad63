#pragma once

#include <json.hpp>

#include <string>

#include "linrec/matrix.hpp"
#include "linrec/period.hpp"
#include "linrec/recurrence.hpp"

namespace linrec::io {

/// Insertion-ordered JSON so every rendering is byte-stable.
using json = nlohmann::ordered_json;

/// Integers that fit 64 bits are emitted as JSON numbers, larger ones as
/// decimal strings. Parsing accepts both forms.
json bigint_to_json(const Bigint& x);
Bigint bigint_from_json(const json& j);

/// {"k": int, "coeffs": [int|str...], "init": [int|str...]}
json recurrence_to_json(const Recurrence& r);
Recurrence recurrence_from_json(const json& j);

/// {"rows": int, "cols": int, "entries": [[int|str...]...]}
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// {"m": int, "preperiod": int, "cycle_len": int, "fundamental_period": int|null}
json period_report_to_json(const period::PeriodReport& r);
period::PeriodReport period_report_from_json(const json& j);

/// Reads a Recurrence from a JSON file. Throws errc::bad_input on missing
/// files and malformed documents.
Recurrence load_recurrence_file(const std::string& path);

json parse(const std::string& text); // throws errc::bad_input

} // namespace linrec::io
