#include "linrec/json_io.hpp"

#include <fstream>
#include <sstream>

#include "linrec/errors.hpp"

namespace linrec::io {

json bigint_to_json(const Bigint& x) {
    if (fits_int64(x))
        return json(to_int64(x));
    return json(to_decimal(x));
}

Bigint bigint_from_json(const json& j) {
    if (j.is_number_integer())
        return Bigint(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned())
        return parse_decimal(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string())
        return parse_decimal(j.get<std::string>());
    throw error(errc::bad_input, "expected integer or decimal string");
}

namespace {

json bigint_array(const std::vector<Bigint>& xs) {
    json arr = json::array();
    for (const Bigint& x : xs)
        arr.push_back(bigint_to_json(x));
    return arr;
}

std::vector<Bigint> bigint_vector(const json& j, const char* what) {
    if (!j.is_array())
        throw error(errc::bad_input, std::string(what) + " must be an array");
    std::vector<Bigint> out;
    out.reserve(j.size());
    for (const auto& el : j)
        out.push_back(bigint_from_json(el));
    return out;
}

} // namespace

json recurrence_to_json(const Recurrence& r) {
    json j;
    j["k"] = r.order();
    j["coeffs"] = bigint_array(r.coeffs());
    j["init"] = bigint_array(r.init());
    return j;
}

Recurrence recurrence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("coeffs") ||
        !j.contains("init"))
        throw error(errc::bad_input,
                    "recurrence object needs keys k, coeffs, init");
    if (!j["k"].is_number_integer() && !j["k"].is_number_unsigned())
        throw error(errc::bad_input, "k must be an integer");
    const auto k = j["k"].get<std::int64_t>();
    std::vector<Bigint> coeffs = bigint_vector(j["coeffs"], "coeffs");
    std::vector<Bigint> init = bigint_vector(j["init"], "init");
    if (k < 1 || coeffs.size() != static_cast<std::size_t>(k) ||
        init.size() != static_cast<std::size_t>(k))
        throw error(errc::bad_input,
                    "k must be >= 1 and match the array lengths");
    return Recurrence(std::move(coeffs), std::move(init));
}

json matrix_to_json(const IntMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(bigint_to_json(m.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries") || !j["entries"].is_array())
        throw error(errc::bad_input,
                    "matrix object needs keys rows, cols, entries");
    const auto rows = j["rows"].get<std::int64_t>();
    const auto cols = j["cols"].get<std::int64_t>();
    if (rows < 1 || cols < 1 ||
        j["entries"].size() != static_cast<std::size_t>(rows))
        throw error(errc::bad_input, "matrix shape mismatch");
    std::vector<Bigint> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    for (const auto& row : j["entries"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
            throw error(errc::bad_input, "matrix row length mismatch");
        for (const auto& el : row)
            entries.push_back(bigint_from_json(el));
    }
    return IntMatrix(static_cast<std::size_t>(rows),
                     static_cast<std::size_t>(cols), std::move(entries));
}

json period_report_to_json(const period::PeriodReport& r) {
    json j;
    j["m"] = r.modulus;
    j["preperiod"] = r.cycle.preperiod;
    j["cycle_len"] = r.cycle.cycle_len;
    if (r.fundamental)
        j["fundamental_period"] = *r.fundamental;
    else
        j["fundamental_period"] = nullptr;
    return j;
}

period::PeriodReport period_report_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("preperiod") ||
        !j.contains("cycle_len") || !j.contains("fundamental_period"))
        throw error(errc::bad_input, "malformed period report");
    period::PeriodReport out{
        j["m"].get<std::uint32_t>(),
        period::CycleStructure{j["preperiod"].get<std::uint64_t>(),
                               j["cycle_len"].get<std::uint64_t>()},
        std::nullopt};
    if (!j["fundamental_period"].is_null())
        out.fundamental = j["fundamental_period"].get<std::uint64_t>();
    return out;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::bad_input, std::string("JSON parse: ") + e.what());
    }
}

Recurrence load_recurrence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::bad_input, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return recurrence_from_json(parse(buf.str()));
}

} // namespace linrec::io
