// Command-line front end: exact evaluation of intersection-number and
// Hodge-integral families, named series printing, and the verification
// suite.  All values are exact rationals; see README for the full grammar.
//
// Exit codes: 0 success, 1 verification failure (or route disagreement),
// 2 usage error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taut/hodge.hpp"
#include "taut/verify.hpp"
#include "taut/witten.hpp"

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string render(const taut::Rat& v, bool decimal) {
    std::string s = v.to_string();
    if (decimal) s += " (" + v.to_decimal_string() + ")";
    return s;
}

ordered_json rat_json(const taut::Rat& v, bool decimal) {
    if (!decimal) return v.to_string();
    ordered_json j;
    j["exact"] = v.to_string();
    j["decimal"] = v.to_decimal_string();
    return j;
}

long require_param(const std::optional<long>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

std::vector<long> parse_indices(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse index list \"" + text + "\"");
        }
    }
    if (out.empty()) throw UsageError("empty index list");
    return out;
}

/// Default truncation order: TAUT_ORDER environment variable if set,
/// else the given fallback.
int default_order(int fallback) {
    const char* env = std::getenv("TAUT_ORDER");
    if (env == nullptr || *env == '\0') return fallback;
    try {
        size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 1 || v > 512)
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("TAUT_ORDER must be a positive integer, got \"") + env +
                         "\"");
    }
}

// ---------------------------------------------------------------------------
// Bracket memo cache: JSON object mapping comma-joined sorted indices to
// rational strings, e.g. {"0,2,3": "1/24"}.
// ---------------------------------------------------------------------------

void load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // absent cache: will be created on save
    ordered_json doc;
    try {
        in >> doc;
        std::vector<std::pair<std::vector<long>, taut::Rat>> entries;
        for (const auto& [key, value] : doc.items())
            entries.emplace_back(parse_indices(key), taut::Rat(value.get<std::string>()));
        taut::Brackets::instance().import_memo(entries);
    } catch (const std::exception& ex) {
        throw IoError("cannot read cache " + path + ": " + ex.what());
    }
}

void save_cache(const std::string& path) {
    ordered_json doc = ordered_json::object();
    for (const auto& [indices, value] : taut::Brackets::instance().export_memo()) {
        std::string key;
        for (size_t i = 0; i < indices.size(); ++i) {
            if (i > 0) key += ",";
            key += std::to_string(indices[i]);
        }
        doc[key] = value.to_string();
    }
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("cannot write cache " + path);
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string quantity;
    std::optional<long> g, k, e, d;
    std::string indices;
    std::string name;
    bool as_json = false;
    bool decimal = false;
};

void emit_value(const std::string& quantity, const ordered_json& params, const taut::Rat& value,
                const EvalArgs& a) {
    if (a.as_json) {
        ordered_json doc;
        doc["quantity"] = quantity;
        doc["parameters"] = params;
        doc["value"] = rat_json(value, a.decimal);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << render(value, a.decimal) << "\n";
    }
}

int cmd_eval(const EvalArgs& a) {
    const std::string& q = a.quantity;
    if (q == "theorem1") {
        const long g = require_param(a.g, "--g");
        emit_value(q, {{"g", g}}, taut::socle_kappa_closed(g), a);
    } else if (q == "I") {
        const long g = require_param(a.g, "--g");
        const long k = require_param(a.k, "--k");
        emit_value(q, {{"g", g}, {"k", k}}, taut::i_value_closed(g, k), a);
    } else if (q == "Q") {
        const long g = require_param(a.g, "--g");
        const long e = require_param(a.e, "--e");
        emit_value(q, {{"g", g}, {"e", e}}, taut::q_value(g, e), a);
    } else if (q == "P") {
        const long g = require_param(a.g, "--g");
        const long k = require_param(a.k, "--k");
        emit_value(q, {{"g", g}, {"k", k}}, taut::socle_polynomial_stirling(g, k), a);
    } else if (q == "f") {
        const long g = require_param(a.g, "--g");
        const long d = require_param(a.d, "--d");
        const long e = require_param(a.e, "--e");
        emit_value(q, {{"g", g}, {"d", d}, {"e", e}}, taut::f_value(g, d, e), a);
    } else if (q == "hyperelliptic") {
        const long g = require_param(a.g, "--g");
        emit_value(q, {{"g", g}}, taut::hyperelliptic_closed(g), a);
    } else if (q == "bracket") {
        if (a.indices.empty()) throw UsageError("missing required option --indices");
        const std::vector<long> idx = parse_indices(a.indices);
        const taut::Rat v = taut::Brackets::instance().value(idx);
        ordered_json params;
        params["indices"] = idx;
        emit_value(q, params, v, a);
    } else if (q == "socle") {
        const long g = require_param(a.g, "--g");
        const std::vector<taut::Rat> values = taut::socle_integrals(g);
        if (a.as_json) {
            ordered_json doc;
            doc["quantity"] = q;
            doc["parameters"] = {{"g", g}};
            ordered_json list = ordered_json::array();
            for (long i = 0; i < g; ++i) {
                ordered_json entry;
                entry["lambda_index"] = i;
                entry["psi_power"] = g - 1 - i;
                entry["value"] = rat_json(values[static_cast<size_t>(i)], a.decimal);
                list.push_back(entry);
            }
            doc["values"] = list;
            std::cout << doc.dump(2) << "\n";
        } else {
            for (long i = 0; i < g; ++i)
                std::cout << "psi^" << (g - 1 - i) << " lambda_" << i << ": "
                          << render(values[static_cast<size_t>(i)], a.decimal) << "\n";
        }
    } else if (q == "named") {
        const long g = require_param(a.g, "--g");
        if (a.name.empty()) throw UsageError("missing required option --name");
        taut::Rat closed, cross;
        if (a.name == "kappa_top") {
            closed = taut::kappa_top_closed(g);
            cross = taut::one_point_lambda_integrals(g)[static_cast<size_t>(g)]
                                                       [static_cast<size_t>(g)];
        } else if (a.name == "kappa_lambda") {
            closed = taut::kappa_lambda_closed(g);
            cross = taut::kappa_lambda_series_coefficient(g);
        } else if (a.name == "socle_kappa") {
            closed = taut::socle_kappa_closed(g);
            cross = taut::bernoulli_weight(g) * taut::one_point_socle_kdv(g).assembled;
        } else if (a.name == "triple_lambda") {
            closed = taut::triple_lambda_closed(g);
            cross = taut::triple_lambda_via_socle_polynomial(g);
        } else {
            throw UsageError("unknown named quantity \"" + a.name +
                             "\" (kappa_top|kappa_lambda|socle_kappa|triple_lambda)");
        }
        if (!(closed == cross)) {
            std::cerr << "route disagreement for " << a.name << " at g=" << g
                      << ": closed=" << closed.to_string() << " cross=" << cross.to_string()
                      << "\n";
            return 1;
        }
        if (a.as_json) {
            ordered_json doc;
            doc["quantity"] = q;
            doc["name"] = a.name;
            doc["parameters"] = {{"g", g}};
            doc["value"] = rat_json(closed, a.decimal);
            doc["routes"] = {{"closed", closed.to_string()}, {"cross", cross.to_string()}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << render(closed, a.decimal) << "\n";
        }
    } else {
        throw UsageError("unknown quantity \"" + q +
                         "\" (theorem1|I|Q|P|f|hyperelliptic|bracket|socle|named)");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

struct SeriesArgs {
    std::string name;
    std::optional<long> k, d;
    int order = 0;
    bool as_json = false;
    bool decimal = false;
};

int cmd_series(const SeriesArgs& a) {
    std::string var = "t";
    taut::Series s(0);
    if (a.name == "G_k") {
        const long k = a.k.value_or(1);
        s = taut::jet_generating_series(k, a.order);
    } else if (a.name == "log_sinc") {
        s = taut::log_sinc_series(a.d.value_or(1), a.order);
    } else if (a.name == "sinc") {
        s = taut::sinc_series(a.d.value_or(1), a.order);
    } else if (a.name == "neg_log_cos_half") {
        s = taut::neg_log_cos_half_series(a.order);
    } else if (a.name == "H") {
        taut::Series h(a.order);
        for (long g = 1; 2 * g <= a.order; ++g)
            h.set_coefficient(static_cast<int>(2 * g), taut::hyperelliptic_series_coefficient(g));
        s = h;
    } else if (a.name == "tau") {
        var = "x";
        s = taut::tree_series(a.order);
    } else {
        throw UsageError("unknown series \"" + a.name +
                         "\" (G_k|log_sinc|sinc|neg_log_cos_half|H|tau)");
    }

    if (a.as_json) {
        ordered_json doc;
        doc["series"] = a.name;
        if (a.k) doc["k"] = *a.k;
        if (a.d) doc["d"] = *a.d;
        doc["order"] = a.order;
        ordered_json coeffs = ordered_json::array();
        for (int n = 0; n <= s.order(); ++n) {
            if (s.coefficient(n).is_zero()) continue;
            ordered_json entry;
            entry["power"] = n;
            entry["value"] = rat_json(s.coefficient(n), a.decimal);
            coeffs.push_back(entry);
        }
        doc["coefficients"] = coeffs;
        std::cout << doc.dump(2) << "\n";
    } else {
        bool any = false;
        for (int n = 0; n <= s.order(); ++n) {
            if (s.coefficient(n).is_zero()) continue;
            any = true;
            std::cout << var << "^" << n << ": " << render(s.coefficient(n), a.decimal) << "\n";
        }
        if (!any) std::cout << "0 (all coefficients vanish to order " << s.order() << ")\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    taut::VerifyBounds bounds;
    std::string json_path;
};

ordered_json report_json(const taut::CheckReport& r) {
    ordered_json j;
    j["identity_id"] = r.identity_id;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.parameters) params[name] = value;
    j["parameters"] = params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["equal"] = r.equal;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

int cmd_verify(const VerifyArgs& a) {
    const std::vector<taut::CheckReport> reports = taut::run_suite(a.suite, a.bounds);
    const bool ok = taut::all_passed(reports);

    size_t failed = 0;
    for (const auto& r : reports) {
        if (r.equal) continue;
        ++failed;
        std::cout << "FAIL " << r.identity_id << " {";
        for (size_t i = 0; i < r.parameters.size(); ++i) {
            if (i > 0) std::cout << ", ";
            std::cout << r.parameters[i].first << "=" << r.parameters[i].second;
        }
        std::cout << "}: lhs=" << r.lhs << " rhs=" << r.rhs << "\n";
    }
    std::cout << "suite '" << a.suite << "': " << reports.size() << " checks, "
              << (ok ? "all passed" : std::to_string(failed) + " failed") << "\n";

    if (!a.json_path.empty()) {
        ordered_json doc;
        doc["suite"] = a.suite;
        doc["bounds"] = {{"max_g", a.bounds.max_g},
                         {"max_k", a.bounds.max_k},
                         {"max_d", a.bounds.max_d},
                         {"order", a.bounds.order}};
        ordered_json list = ordered_json::array();
        for (const auto& r : reports) list.push_back(report_json(r));
        doc["reports"] = list;
        doc["all_passed"] = ok;
        std::ofstream out(a.json_path);
        out << doc.dump(2) << "\n";
        if (!out) throw IoError("cannot write report " + a.json_path);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation and verification of tautological-ring integral families"};
    app.require_subcommand(1);

    bool decimal = false;
    std::string cache_path;
    app.add_flag("--decimal", decimal, "Append approximate decimals to exact values");
    app.add_option("--cache", cache_path,
                   "JSON file persisting the bracket memo table across runs");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one exact quantity");
    eval->add_option("quantity", eval_args.quantity,
                     "theorem1|I|Q|P|f|hyperelliptic|bracket|socle|named")
        ->required();
    eval->add_option("--g", eval_args.g, "Genus");
    eval->add_option("--k", eval_args.k, "Jet depth / polynomial argument");
    eval->add_option("--e", eval_args.e, "Jet weight");
    eval->add_option("--d", eval_args.d, "Degree");
    eval->add_option("--indices", eval_args.indices, "Comma-separated bracket indices");
    eval->add_option("--name", eval_args.name,
                     "Named quantity: kappa_top|kappa_lambda|socle_kappa|triple_lambda");
    eval->add_flag("--json", eval_args.as_json, "Emit a JSON document");

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Print coefficients of a named series");
    series->add_option("--name", series_args.name, "G_k|log_sinc|sinc|neg_log_cos_half|H|tau")
        ->required();
    series->add_option("--k", series_args.k, "Jet depth for G_k (default 1)");
    series->add_option("--d", series_args.d, "Scale for log_sinc/sinc (default 1)");
    int series_order = 0;  // resolved after parse so TAUT_ORDER errors surface as usage errors
    series->add_option("--order", series_order, "Truncation order (default TAUT_ORDER or 16)");
    series->add_flag("--json", series_args.as_json, "Emit a JSON document");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run identity-check suites");
    verify->add_option("--suite", verify_args.suite,
                       "all|kdv|theorem1|theorem2|theorem3|prop1|prop2|hyperelliptic|"
                       "localization|coefficients");
    verify->add_option("--max-g", verify_args.bounds.max_g, "Largest genus (default 6)");
    verify->add_option("--max-k", verify_args.bounds.max_k, "Largest jet depth (default 6)");
    verify->add_option("--max-d", verify_args.bounds.max_d, "Largest degree (default 4)");
    int verify_order = 0;
    verify->add_option("--order", verify_order,
                       "Series truncation order (default TAUT_ORDER or 24)");
    verify->add_option("--json", verify_args.json_path, "Write the report document to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cache_path.empty()) load_cache(cache_path);
        int rc = 0;
        if (*eval) {
            eval_args.decimal = decimal;
            rc = cmd_eval(eval_args);
        } else if (*series) {
            series_args.decimal = decimal;
            series_args.order =
                series->count("--order") > 0 ? series_order : default_order(16);
            if (series_args.order < 0) throw UsageError("--order must be non-negative");
            rc = cmd_series(series_args);
        } else if (*verify) {
            verify_args.bounds.order =
                verify->count("--order") > 0 ? verify_order : default_order(24);
            rc = cmd_verify(verify_args);
        }
        if (!cache_path.empty()) save_cache(cache_path);
        return rc;
    } catch (const UsageError& ex) {
        std::cerr << "taut: " << ex.what() << "\n";
        return 2;
    } catch (const IoError& ex) {
        std::cerr << "taut: " << ex.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "taut: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "taut: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "taut: internal error: " << ex.what() << "\n";
        return 1;
    }
}
