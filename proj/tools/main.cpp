// linrec: command-line frontend for the exact linear recurrence toolkit.
//
// Exit codes: 0 success, 1 usage/input error, 2 property violation.

#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "linrec/closedform.hpp"
#include "linrec/errors.hpp"
#include "linrec/gcdlib.hpp"
#include "linrec/json_io.hpp"
#include "linrec/period.hpp"
#include "linrec/recurrence.hpp"
#include "linrec/residue.hpp"

using namespace linrec;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

// ---------------------------------------------------------------- helpers

std::vector<Bigint> parse_int_list(const std::string& text) {
    std::vector<Bigint> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(parse_decimal(item));
    if (out.empty())
        throw error(errc::bad_input, "empty integer list");
    return out;
}

struct SourceOpts {
    std::string coeffs;
    std::string init;
    std::string file;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
    cmd->add_option("--coeffs", src.coeffs,
                    "comma-separated coefficients f_1..f_k");
    cmd->add_option("--init", src.init,
                    "comma-separated initial values a_1..a_k");
    cmd->add_option("--file", src.file,
                    "JSON file with {\"k\",\"coeffs\",\"init\"}");
}

Recurrence resolve_recurrence(const SourceOpts& src) {
    const bool inline_given = !src.coeffs.empty() || !src.init.empty();
    const bool file_given = !src.file.empty();
    if (inline_given == file_given)
        throw error(errc::bad_input,
                    "provide exactly one recurrence source: "
                    "--coeffs/--init or --file");
    if (file_given)
        return io::load_recurrence_file(src.file);
    if (src.coeffs.empty() || src.init.empty())
        throw error(errc::bad_input, "--coeffs and --init go together");
    return Recurrence(parse_int_list(src.coeffs), parse_int_list(src.init));
}

std::pair<std::uint64_t, std::uint64_t> parse_mod_range(const std::string& s) {
    const std::size_t pos = s.find("..");
    if (pos == std::string::npos)
        throw error(errc::bad_input, "--mod-range expects A..B");
    std::uint64_t lo = 0, hi = 0;
    try {
        lo = std::stoull(s.substr(0, pos));
        hi = std::stoull(s.substr(pos + 2));
    } catch (const std::exception&) {
        throw error(errc::bad_input, "--mod-range expects A..B");
    }
    if (lo == 0 || hi < lo)
        throw error(errc::bad_input,
                    "--mod-range must be non-empty with A >= 1");
    return {lo, hi};
}

// Applies f to every item, possibly on several threads, and returns the
// results in input order. Work items buffer their results; nothing is
// emitted out of order.
template <typename T, typename F>
auto ordered_map(const std::vector<T>& items, F f) {
    using R = std::invoke_result_t<F&, const T&>;
    std::vector<R> out(items.size());
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i)
            out[i] = f(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t workers = std::min<std::size_t>(hw, items.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size())
                    return;
                try {
                    out[i] = f(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    return;
                }
            }
        });
    for (std::thread& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- terms

struct TermsOpts {
    SourceOpts src;
    std::uint64_t from = 1;
    std::uint64_t count = 10;
    std::uint64_t mod = 0; // 0 = exact
    bool as_json = false;
};

int run_terms(const TermsOpts& opt) {
    const Recurrence r = resolve_recurrence(opt.src);
    std::vector<std::string> values;
    if (opt.mod == 0) {
        for (const Bigint& v :
             term_block(r, opt.from, static_cast<std::size_t>(opt.count)))
            values.push_back(to_decimal(v));
    } else {
        const ResidueRecurrence s = reduce(r, opt.mod);
        for (std::uint64_t i = 0; i < opt.count; ++i)
            values.push_back(
                std::to_string(residue_term_fast(s, opt.from + i)));
    }

    if (opt.as_json) {
        json j;
        j["from"] = opt.from;
        j["count"] = opt.count;
        if (opt.mod != 0)
            j["mod"] = opt.mod;
        else
            j["mod"] = nullptr;
        j["terms"] = values;
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << values[i] << (i + 1 == values.size() ? "\n" : " ");
    return kExitOk;
}

// ---------------------------------------------------------------- period

struct PeriodOpts {
    SourceOpts src;
    std::uint64_t mod = 0;
    std::string mod_range;
    std::uint64_t check = 0;
    std::uint64_t state_cap = period::kDefaultStateCap;
    bool as_json = false;
};

struct PeriodRow {
    period::PeriodReport report;
    std::optional<bool> check_is_period;
    std::optional<bool> check_necessary;  // absent when k = 1
    std::optional<bool> check_sufficient; // absent when shift <= k-1
    bool has_check = false;
    std::uint64_t check_shift = 0;
};

int run_period(const PeriodOpts& opt) {
    const Recurrence r = resolve_recurrence(opt.src);
    if ((opt.mod == 0) == opt.mod_range.empty())
        throw error(errc::bad_input,
                    "provide exactly one of --mod, --mod-range");

    std::vector<std::uint64_t> moduli;
    if (opt.mod != 0) {
        moduli.push_back(opt.mod);
    } else {
        const auto [lo, hi] = parse_mod_range(opt.mod_range);
        if (hi - lo >= 100000)
            throw error(errc::bad_input, "--mod-range spans too many moduli");
        for (std::uint64_t m = lo; m <= hi; ++m)
            moduli.push_back(m);
    }

    const std::vector<PeriodRow> rows =
        ordered_map(moduli, [&](const std::uint64_t& m) {
            const ResidueRecurrence s = reduce(r, m);
            PeriodRow row{period::analyze(s, opt.state_cap), std::nullopt,
                          std::nullopt, std::nullopt, false, 0};
            if (opt.check != 0) {
                row.has_check = true;
                row.check_shift = opt.check;
                row.check_is_period = period::is_period(s, opt.check);
                if (r.order() >= 2)
                    row.check_necessary =
                        period::necessary_condition_check(s, opt.check);
                if (opt.check + 1 > r.order())
                    row.check_sufficient =
                        period::sufficient_condition_check(s, opt.check);
            }
            return row;
        });

    // These implications hold by construction; a violation here is a bug.
    for (const PeriodRow& row : rows) {
        if (!row.has_check)
            continue;
        if (row.check_sufficient.value_or(false) && !*row.check_is_period) {
            std::cerr << "property violation: sufficient condition accepted "
                         "a non-period at m="
                      << row.report.modulus << "\n";
            return kExitViolation;
        }
        if (*row.check_is_period && !row.check_necessary.value_or(true)) {
            std::cerr << "property violation: necessary condition failed at "
                         "a period, m="
                      << row.report.modulus << "\n";
            return kExitViolation;
        }
    }

    if (opt.as_json) {
        auto to_json = [](const PeriodRow& row) {
            json j = io::period_report_to_json(row.report);
            if (row.has_check) {
                json c;
                c["ell"] = row.check_shift;
                c["is_period"] = *row.check_is_period;
                c["necessary"] = row.check_necessary
                                     ? json(*row.check_necessary)
                                     : json(nullptr);
                c["sufficient"] = row.check_sufficient
                                      ? json(*row.check_sufficient)
                                      : json(nullptr);
                j["check"] = c;
            }
            return j;
        };
        if (rows.size() == 1) {
            std::cout << to_json(rows.front()).dump() << "\n";
        } else {
            json arr = json::array();
            for (const PeriodRow& row : rows)
                arr.push_back(to_json(row));
            std::cout << arr.dump() << "\n";
        }
        return kExitOk;
    }

    for (const PeriodRow& row : rows) {
        std::cout << "m=" << row.report.modulus
                  << ": preperiod=" << row.report.cycle.preperiod
                  << " cycle_len=" << row.report.cycle.cycle_len
                  << " fundamental=";
        if (row.report.fundamental)
            std::cout << *row.report.fundamental;
        else
            std::cout << "none";
        std::cout << "\n";
        if (row.has_check)
            std::cout << "  check ell=" << row.check_shift
                      << ": is_period=" << bool_str(*row.check_is_period)
                      << " necessary="
                      << (row.check_necessary ? bool_str(*row.check_necessary)
                                              : "n/a")
                      << " sufficient="
                      << (row.check_sufficient
                              ? bool_str(*row.check_sufficient)
                              : "n/a")
                      << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- family

struct FamilyOpts {
    std::uint64_t q_max = 0;
    std::uint64_t state_cap = period::kDefaultStateCap;
    bool as_json = false;
};

struct FamilyRow {
    std::uint32_t q;
    std::uint32_t m;
    std::uint64_t ell;
    std::uint64_t fundamental;
    bool is_multiple; // ell a proper multiple of the fundamental
    bool ell_is_period;
};

int run_family(const FamilyOpts& opt) {
    if (opt.q_max < 1)
        throw error(errc::bad_input, "--q-max must be >= 1");

    std::vector<std::uint32_t> qs;
    for (std::uint64_t q = 1; q <= opt.q_max; q += 2) {
        try {
            period::fibonacci_family_period(static_cast<std::uint32_t>(q));
        } catch (const error& e) {
            if (e.code() == errc::non_prime_modulus)
                continue;
            throw;
        }
        qs.push_back(static_cast<std::uint32_t>(q));
    }

    const Recurrence fib = Recurrence::fibonacci();
    const std::vector<FamilyRow> rows =
        ordered_map(qs, [&](const std::uint32_t& q) {
            const period::FamilyPeriod fp =
                period::fibonacci_family_period(q);
            const ResidueRecurrence s = reduce(fib, fp.modulus);
            const std::uint64_t fund =
                period::fundamental_period(s, opt.state_cap).value();
            return FamilyRow{q,
                             fp.modulus,
                             fp.shift,
                             fund,
                             fp.shift != fund,
                             period::is_period(s, fp.shift)};
        });

    for (const FamilyRow& row : rows)
        if (!row.ell_is_period) {
            std::cerr << "property violation: family shift rejected at q="
                      << row.q << "\n";
            return kExitViolation;
        }

    if (opt.as_json) {
        json arr = json::array();
        for (const FamilyRow& row : rows) {
            json j;
            j["q"] = row.q;
            j["m"] = row.m;
            j["ell"] = row.ell;
            j["fundamental"] = row.fundamental;
            j["is_multiple"] = row.is_multiple;
            arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
        return kExitOk;
    }
    for (const FamilyRow& row : rows)
        std::cout << "q=" << row.q << " m=" << row.m << " ell=" << row.ell
                  << " fundamental=" << row.fundamental
                  << " multiple=" << (row.is_multiple ? "yes" : "no") << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    SourceOpts src;
    std::uint64_t mod = 0; // 0 = none given
    std::uint64_t bound = 40;
    std::uint64_t state_cap = period::kDefaultStateCap;
    bool corrupt_mk = false; // test hook: forces the matrix check to fail
};

int run_verify(const VerifyOpts& opt) {
    const Recurrence r = resolve_recurrence(opt.src);
    const std::size_t k = r.order();
    int failures = 0;

    auto pass = [&](const std::string& name) {
        std::cout << "[ ok ] " << name << "\n";
    };
    auto failed = [&](const std::string& name, const std::string& note) {
        std::cout << "[fail] " << name << ": " << note << "\n";
        ++failures;
    };
    auto skip = [&](const std::string& name, const std::string& note) {
        std::cout << "[skip] " << name << ": skipped: " << note << "\n";
    };

    // homomorphism commutation
    {
        std::vector<std::uint64_t> mods;
        if (opt.mod != 0)
            mods.push_back(opt.mod);
        else
            for (std::uint64_t m = 2; m <= 12; ++m)
                mods.push_back(m);
        bool ok = true;
        for (std::uint64_t m : mods)
            for (std::uint64_t i = 1; i <= 50 && ok; ++i)
                ok = commutation_check(r, m, i);
        ok ? pass("homomorphism commutation")
           : failed("homomorphism commutation", "commuting square broken");
    }

    // closed-form expansions
    {
        bool ok = true;
        for (std::size_t i = 1; i <= k && ok; ++i)
            ok = closedform::expand_term(r, i) == term(r, k + i);
        ok ? pass("closed-form expansion equals iteration")
           : failed("closed-form expansion equals iteration", "mismatch");
        if (k >= 2) {
            bool ok2 = true;
            for (std::size_t i = 1; i < k && ok2; ++i)
                ok2 = closedform::expand_term_grouped(r, i) == term(r, k + i);
            ok2 ? pass("grouped expansion equals iteration")
                : failed("grouped expansion equals iteration", "mismatch");
        } else {
            skip("grouped expansion equals iteration", "order 1");
        }
    }

    // advance matrix identities
    if (k >= 2) {
        IntMatrix mk = closedform::advance_matrix(r);
        if (opt.corrupt_mk)
            mk.at(k - 1, 0) += 1;
        (mk == companion_matrix(r).pow(k))
            ? pass("advance matrix equals companion power")
            : failed("advance matrix equals companion power",
                     "entries differ");
        (mk * r.init() == term_block(r, k + 1, k))
            ? pass("advance matrix maps the initial block")
            : failed("advance matrix maps the initial block",
                     "block differs");
    } else {
        skip("advance matrix equals companion power", "order 1");
    }

    // period-dependent checks
    std::optional<std::uint64_t> fund;
    if (opt.mod != 0) {
        const ResidueRecurrence s = reduce(r, opt.mod);
        fund = period::fundamental_period(s, opt.state_cap);
        if (!fund) {
            skip("necessary residue condition at the fundamental period",
                 "no fundamental period");
        } else if (k < 2) {
            skip("necessary residue condition at the fundamental period",
                 "order 1");
        } else {
            period::necessary_condition_check(s, *fund)
                ? pass("necessary residue condition at the fundamental period")
                : failed(
                      "necessary residue condition at the fundamental period",
                      "congruence failed");
        }
    } else {
        skip("necessary residue condition at the fundamental period",
             "no modulus given");
    }

    // strong divisibility and everything that depends on it
    const bool sd = gcdlib::is_strong_divisibility(
        r, static_cast<std::size_t>(std::max<std::uint64_t>(opt.bound, 2)));
    std::cout << "[info] strong divisibility up to " << opt.bound << ": "
              << bool_str(sd) << "\n";

    if (sd && opt.mod != 0 && fund) {
        bool ok = true;
        std::string note;
        try {
            for (std::uint64_t i = 1; i <= 6 && ok; ++i)
                for (std::uint64_t j = 1; j <= 6 && ok; ++j) {
                    const gcdlib::Witness w = gcdlib::period_shift_witness(
                        r, i, j, opt.mod, *fund);
                    ok = w.lhs_residue == w.rhs_residue;
                    const gcdlib::ScalingWitness sw =
                        gcdlib::index_scaling_witness(r, i, j, opt.mod,
                                                      *fund);
                    if (sw.z > 0)
                        ok = ok && sw.witness &&
                             sw.witness->lhs_residue ==
                                 sw.witness->rhs_residue;
                }
        } catch (const error& e) {
            ok = false;
            note = e.what();
        }
        ok ? pass("gcd witnesses at the fundamental period")
           : failed("gcd witnesses at the fundamental period",
                    note.empty() ? "residues differ" : note);
    } else {
        skip("gcd witnesses at the fundamental period",
             !sd            ? "not a strong divisibility sequence"
             : opt.mod == 0 ? "no modulus given"
                            : "no fundamental period");
    }

    if (sd && k >= 2) {
        try {
            closedform::gcd_block_check(
                r, static_cast<std::size_t>(
                       std::max<std::uint64_t>(opt.bound, 2 * k)))
                ? pass("gcd block identity")
                : failed("gcd block identity", "gcd equality failed");
        } catch (const error& e) {
            if (e.code() == errc::hypothesis_not_met)
                skip("gcd block identity", e.what());
            else
                failed("gcd block identity", e.what());
        }
    } else {
        skip("gcd block identity",
             sd ? "order 1" : "not a strong divisibility sequence");
    }

    if (failures != 0) {
        std::cout << failures << " check(s) failed\n";
        return kExitViolation;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

// ----------------------------------- coeffs / matrix / sd / solve-residue

int run_coeffs(const SourceOpts& src, bool as_json) {
    const Recurrence r = resolve_recurrence(src);
    const closedform::CoeffTable table = closedform::coeff_table(r);
    if (as_json) {
        json j;
        j["k"] = table.order;
        json vals = json::array();
        for (const Bigint& v : table.values)
            vals.push_back(io::bigint_to_json(v));
        j["values"] = vals;
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    for (std::size_t n = 0; n < table.values.size(); ++n)
        std::cout << to_decimal(table.values[n])
                  << (n + 1 == table.values.size() ? "\n" : " ");
    return kExitOk;
}

int run_matrix(const SourceOpts& src, bool as_json) {
    const Recurrence r = resolve_recurrence(src);
    const IntMatrix mk = closedform::advance_matrix(r);
    if (as_json) {
        std::cout << io::matrix_to_json(mk).dump() << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < mk.rows(); ++i)
        for (std::size_t j = 0; j < mk.cols(); ++j)
            std::cout << to_decimal(mk.at(i, j))
                      << (j + 1 == mk.cols() ? "\n" : " ");
    return kExitOk;
}

int run_sd(const SourceOpts& src, std::uint64_t bound, bool as_json) {
    const Recurrence r = resolve_recurrence(src);
    const bool sd =
        gcdlib::is_strong_divisibility(r, static_cast<std::size_t>(bound));
    if (as_json) {
        json j;
        j["bound"] = bound;
        j["strong_divisibility"] = sd;
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    std::cout << "strong_divisibility(bound=" << bound
              << "): " << bool_str(sd) << "\n";
    return kExitOk;
}

int run_solve_residue(const SourceOpts& src, std::uint64_t mod,
                      std::uint64_t bound, bool as_json) {
    const Recurrence r = resolve_recurrence(src);
    const ResidueRecurrence s = reduce(r, mod);
    const std::vector<std::uint32_t> residues =
        period::solve_period_residue(s);
    const std::vector<std::uint64_t> candidates =
        bound == 0 ? std::vector<std::uint64_t>{}
                   : period::candidate_periods_via_residue(s, bound);
    if (as_json) {
        json j;
        j["m"] = mod;
        j["residues"] = residues;
        j["bound"] = bound;
        j["candidates"] = candidates;
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    std::cout << "residues {";
    for (std::size_t i = 0; i < residues.size(); ++i)
        std::cout << residues[i] << (i + 1 == residues.size() ? "" : ", ");
    std::cout << "}\n";
    if (bound != 0) {
        std::cout << "candidates [";
        for (std::size_t i = 0; i < candidates.size(); ++i)
            std::cout << candidates[i]
                      << (i + 1 == candidates.size() ? "" : ", ");
        std::cout << "]\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for k-th order linear recurrences"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    TermsOpts terms_opt;
    CLI::App* terms =
        app.add_subcommand("terms", "print a_n exactly or modulo m");
    add_source_flags(terms, terms_opt.src);
    terms->add_option("--from", terms_opt.from, "first index (default 1)");
    terms->add_option("--count", terms_opt.count, "how many terms");
    terms->add_option("--mod", terms_opt.mod, "print residues mod m");
    terms->add_flag("--json", terms_opt.as_json, "machine-readable output");
    terms->callback([&] { exit_code = run_terms(terms_opt); });

    PeriodOpts period_opt;
    CLI::App* period_cmd = app.add_subcommand(
        "period", "cycle structure and period checks modulo m");
    add_source_flags(period_cmd, period_opt.src);
    period_cmd->add_option("--mod", period_opt.mod, "single modulus");
    period_cmd->add_option("--mod-range", period_opt.mod_range,
                           "inclusive modulus range A..B");
    period_cmd->add_option("--check", period_opt.check,
                           "also test whether this shift is a period");
    period_cmd->add_option("--state-cap", period_opt.state_cap,
                           "cycle-detection state budget");
    period_cmd->add_flag("--json", period_opt.as_json,
                         "machine-readable output");
    period_cmd->callback([&] { exit_code = run_period(period_opt); });

    FamilyOpts family_opt;
    CLI::App* family = app.add_subcommand(
        "family", "Fibonacci periods modulo primes 5q+2, odd q");
    family->add_option("--q-max", family_opt.q_max, "largest q to scan")
        ->required();
    family->add_option("--state-cap", family_opt.state_cap,
                       "cycle-detection state budget");
    family->add_flag("--json", family_opt.as_json, "machine-readable output");
    family->callback([&] { exit_code = run_family(family_opt); });

    VerifyOpts verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the cross-module identity suite on a recurrence");
    add_source_flags(verify, verify_opt.src);
    verify->add_option("--mod", verify_opt.mod,
                       "modulus for the period-dependent checks");
    verify->add_option("--bound", verify_opt.bound,
                       "strong-divisibility verification bound");
    verify->add_option("--state-cap", verify_opt.state_cap,
                       "cycle-detection state budget");
    verify->add_flag("--corrupt-mk", verify_opt.corrupt_mk)->group("");
    verify->callback([&] { exit_code = run_verify(verify_opt); });

    SourceOpts coeffs_src;
    bool coeffs_json = false;
    CLI::App* coeffs =
        app.add_subcommand("coeffs", "expansion coefficient table C_1..C_k");
    add_source_flags(coeffs, coeffs_src);
    coeffs->add_flag("--json", coeffs_json, "machine-readable output");
    coeffs->callback([&] { exit_code = run_coeffs(coeffs_src, coeffs_json); });

    SourceOpts matrix_src;
    bool matrix_json = false;
    CLI::App* matrix =
        app.add_subcommand("matrix", "k-step advance matrix of the recurrence");
    add_source_flags(matrix, matrix_src);
    matrix->add_flag("--json", matrix_json, "machine-readable output");
    matrix->callback([&] { exit_code = run_matrix(matrix_src, matrix_json); });

    SourceOpts sd_src;
    std::uint64_t sd_bound = 60;
    bool sd_json = false;
    CLI::App* sd =
        app.add_subcommand("sd", "strong-divisibility check up to a bound");
    add_source_flags(sd, sd_src);
    sd->add_option("--bound", sd_bound, "largest index pair to test");
    sd->add_flag("--json", sd_json, "machine-readable output");
    sd->callback([&] { exit_code = run_sd(sd_src, sd_bound, sd_json); });

    SourceOpts solve_src;
    std::uint64_t solve_mod = 0;
    std::uint64_t solve_bound = 0;
    bool solve_json = false;
    CLI::App* solve = app.add_subcommand(
        "solve-residue",
        "period-residue congruence solutions and candidate periods");
    add_source_flags(solve, solve_src);
    solve->add_option("--mod", solve_mod, "modulus")->required();
    solve->add_option("--bound", solve_bound,
                      "also scan for candidate periods up to this bound");
    solve->add_flag("--json", solve_json, "machine-readable output");
    solve->callback([&] {
        exit_code =
            run_solve_residue(solve_src, solve_mod, solve_bound, solve_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::invariant_violation ? kExitViolation
                                                     : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
