#include "idiv/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "idiv/divgraph.hpp"
#include "idiv/divset.hpp"
#include "idiv/errors.hpp"
#include "idiv/orbit.hpp"
#include "idiv/permlocal.hpp"
#include "idiv/primes.hpp"
#include "idiv/records.hpp"
#include "idiv/zsigmondy.hpp"

namespace idiv {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    std::size_t begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

struct CommonOpts {
    std::string poly_text;
    std::string trinomial_text;
    std::string config_path;
    std::uint64_t window_bound = 2000;
    std::uint64_t prime_bound = 1'000'000;
    std::uint64_t n_max = 8;
    std::uint64_t bit_budget = kDefaultBitBudget;
    unsigned workers = 0; // 0 = hardware concurrency
    std::string format = "records";
    std::string out_path;
};

struct TrinomialTriple {
    std::uint64_t d = 0;
    std::uint64_t e = 0;
    BigInt c;
};

TrinomialTriple parse_trinomial_text(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(trim(item));
    if (parts.size() != 3) {
        throw std::invalid_argument("--trinomial expects d,e,c (e.g. 13,3,5)");
    }
    TrinomialTriple triple;
    triple.d = std::stoull(parts[0]);
    triple.e = std::stoull(parts[1]);
    triple.c = BigInt(parts[2]);
    if (!(triple.d > triple.e && triple.e >= 2)) {
        throw std::invalid_argument("--trinomial needs d > e >= 2");
    }
    return triple;
}

struct ResolvedInput {
    IntPolynomial f;
    std::string text; // echoed into records
    std::optional<TrinomialTriple> triple;
};

ResolvedInput resolve_input(const CommonOpts& opts) {
    if (opts.poly_text.empty() == opts.trinomial_text.empty()) {
        throw std::invalid_argument("exactly one of --poly or --trinomial is required");
    }
    ResolvedInput input;
    if (!opts.poly_text.empty()) {
        input.f = parse_poly(opts.poly_text);
        input.text = render_poly(input.f);
        if (auto shape = as_unit_trinomial(input.f)) {
            input.triple = TrinomialTriple{shape->d, shape->e, shape->c};
        }
    } else {
        TrinomialTriple triple = parse_trinomial_text(opts.trinomial_text);
        input.f = IntPolynomial::trinomial(triple.d, triple.e, triple.c);
        input.text = render_poly(input.f);
        input.triple = triple;
    }
    return input;
}

// Registers the shared flags on a subcommand and remembers the option handles
// so file-supplied values only apply when the flag was absent.
struct CommonBinding {
    CommonOpts* opts;
    std::map<std::string, CLI::Option*> options;

    void add(CLI::App* sub, CommonOpts& o) {
        opts = &o;
        options["poly"] = sub->add_option("--poly", o.poly_text, "polynomial, e.g. \"x^13+x^3+5\"");
        options["trinomial"] =
            sub->add_option("--trinomial", o.trinomial_text, "trinomial x^d+x^e+c as d,e,c");
        options["N"] = sub->add_option("--N", o.window_bound, "window bound for n");
        options["P"] = sub->add_option("--P", o.prime_bound, "prime bound");
        options["n-max"] = sub->add_option("--n-max", o.n_max, "exact orbit prefix length");
        options["bit-budget"] =
            sub->add_option("--bit-budget", o.bit_budget, "max bits per exact orbit term");
        options["workers"] = sub->add_option("--workers", o.workers, "worker threads (0 = auto)");
        options["format"] = sub->add_option("--format", o.format, "records | dot | csv");
        options["out"] = sub->add_option("--out", o.out_path, "output path (default stdout)");
        sub->add_option("--config", o.config_path, "key=value config file; flags override");
    }

    void apply_file_value(const std::string& key, const std::string& value) {
        CommonOpts& o = *opts;
        if (key == "poly") o.poly_text = value;
        else if (key == "trinomial") o.trinomial_text = value;
        else if (key == "N") o.window_bound = std::stoull(value);
        else if (key == "P") o.prime_bound = std::stoull(value);
        else if (key == "n-max") o.n_max = std::stoull(value);
        else if (key == "bit-budget") o.bit_budget = std::stoull(value);
        else if (key == "workers") o.workers = static_cast<unsigned>(std::stoul(value));
        else if (key == "format") o.format = value;
        else if (key == "out") o.out_path = value;
        else throw std::invalid_argument("unknown config key: " + key);
    }

    void load_config_file(const std::map<std::string, CLI::Option*>& extra_options,
                          const std::function<void(const std::string&, const std::string&)>&
                              extra_apply) {
        if (opts->config_path.empty()) return;
        std::ifstream in(opts->config_path);
        if (!in) throw std::invalid_argument("cannot open config file: " + opts->config_path);
        for (const auto& [key, value] : parse_kv_config(in)) {
            auto it = options.find(key);
            if (it != options.end()) {
                if (it->second->count() == 0) apply_file_value(key, value);
                continue;
            }
            auto extra = extra_options.find(key);
            if (extra != extra_options.end()) {
                if (extra->second->count() == 0) extra_apply(key, value);
                continue;
            }
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
};

int emit(const std::string& text, const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    if (opts.out_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << opts.out_path << "\n";
        return kExitUsage;
    }
    file << text;
    return kExitOk;
}

RecordConfig base_record_config(const ResolvedInput& input, const CommonOpts& opts) {
    RecordConfig config;
    config.poly = input.text;
    return config;
}

int run_divset(const CommonOpts& opts, bool closure, std::ostream& out, std::ostream& err) {
    ResolvedInput input = resolve_input(opts);
    DivisibilitySetWindow window = div_set_window(input.f, opts.window_bound, opts.workers);
    std::string text;
    bool violation = false;
    if (opts.format == "csv") {
        text = divset_csv(window);
        if (closure) {
            ClosureReport report = check_closure_properties(input.f, window);
            violation = !report.all_passed();
        }
    } else if (opts.format == "records") {
        RecordConfig config = base_record_config(input, opts);
        config.window_bound = opts.window_bound;
        if (closure) {
            ClosureReport report = check_closure_properties(input.f, window);
            violation = !report.all_passed();
            text = divset_records(config, window, &report);
        } else {
            text = divset_records(config, window);
        }
    } else {
        err << "error: divset supports --format records or csv\n";
        return kExitUsage;
    }
    int rc = emit(text, opts, out, err);
    if (rc != kExitOk) return rc;
    return violation ? kExitInvariant : kExitOk;
}

int run_graph(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    ResolvedInput input = resolve_input(opts);
    DivGraph graph = build_graph(input.f, opts.window_bound, opts.workers);
    std::string text;
    if (opts.format == "dot") {
        text = export_dot(graph);
    } else if (opts.format == "csv") {
        text = graph_csv(graph);
    } else if (opts.format == "records") {
        RecordConfig config = base_record_config(input, opts);
        config.window_bound = opts.window_bound;
        text = graph_records(config, graph);
    } else {
        err << "error: graph supports --format records, dot or csv\n";
        return kExitUsage;
    }
    return emit(text, opts, out, err);
}

int run_zsig(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    ResolvedInput input = resolve_input(opts);
    std::vector<PrimitiveSplit> splits =
        primitive_split_prefix(input.f, opts.n_max, opts.bit_budget);
    std::vector<std::uint64_t> window;
    for (const PrimitiveSplit& split : splits) {
        if (split.primitive == 1) window.push_back(split.n);
    }
    std::vector<GrowthCheck> growth = check_growth(input.f, opts.n_max, opts.bit_budget);

    std::optional<FinitenessVerdict> verdict;
    if (input.triple) {
        verdict = finiteness_verdict(input.triple->d, input.triple->e, input.triple->c,
                                     opts.window_bound, opts.workers);
    }
    std::string text;
    if (opts.format == "csv") {
        text = zsig_csv(splits);
    } else if (opts.format == "records") {
        RecordConfig config = base_record_config(input, opts);
        config.window_bound = input.triple ? opts.window_bound : 0;
        config.n_max = opts.n_max;
        config.bit_budget = opts.bit_budget;
        text = zsig_records(config, splits, window, growth, verdict ? &*verdict : nullptr);
    } else {
        err << "error: zsig supports --format records or csv\n";
        return kExitUsage;
    }
    int rc = emit(text, opts, out, err);
    if (rc != kExitOk) return rc;
    bool growth_ok = true;
    for (const GrowthCheck& check : growth) {
        growth_ok = growth_ok && check.cube_bound_ok && check.product_bound_ok;
    }
    if ((verdict && !verdict->consistent) || !growth_ok) return kExitInvariant;
    return kExitOk;
}

int run_perm(const CommonOpts& opts, std::uint64_t p, bool density, std::ostream& out,
             std::ostream& err) {
    if (opts.format != "records") {
        err << "error: perm supports --format records\n";
        return kExitUsage;
    }
    if (density) {
        DensityResult result = density_scan(opts.prime_bound, opts.workers);
        RecordConfig config;
        config.prime_bound = opts.prime_bound;
        return emit(density_records(config, result), opts, out, err);
    }
    if (p == 0) {
        err << "error: perm needs --p <prime> or --density\n";
        return kExitUsage;
    }
    ResolvedInput input = resolve_input(opts);
    PermutationProfile profile = profile_mod_p(input.f, p);
    bool injective = injectivity_resultant_check(input.f, p);
    std::optional<RestrictionReport> restrictions;
    if (input.triple) {
        restrictions = restriction_predicates(input.triple->d, input.triple->e, input.triple->c, p);
    }
    RecordConfig config = base_record_config(input, opts);
    config.extras["p"] = std::to_string(p);
    return emit(perm_records(config, profile, restrictions ? &*restrictions : nullptr, injective),
                opts, out, err);
}

std::vector<BigInt> parse_c_range(const std::string& text) {
    std::vector<BigInt> values;
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        values.push_back(BigInt(trim(text)));
        return values;
    }
    BigInt lo(trim(text.substr(0, dots)));
    BigInt hi(trim(text.substr(dots + 2)));
    if (lo > hi) throw std::invalid_argument("--c range is empty: " + text);
    for (BigInt c = lo; c <= hi; ++c) values.push_back(c);
    return values;
}

int run_survey(const CommonOpts& opts, const std::string& family, const std::string& c_range,
               std::ostream& out, std::ostream& err) {
    if (opts.format != "records") {
        err << "error: survey supports --format records\n";
        return kExitUsage;
    }
    if (family.empty()) {
        err << "error: survey needs --family\n";
        return kExitUsage;
    }
    std::vector<IntPolynomial> polys;
    for (const BigInt& c : parse_c_range(c_range)) {
        polys.push_back(instantiate_family(family, c));
    }
    std::vector<ScanResult> results = open_question_scan(polys, opts.window_bound, opts.workers);
    RecordConfig config;
    config.window_bound = opts.window_bound;
    config.extras["family"] = family;
    config.extras["c"] = c_range;
    std::string text = survey_records(config, results);
    int rc = emit(text, opts, out, err);
    if (rc != kExitOk) return rc;
    for (const ScanResult& result : results) {
        if (!result.untyped.empty()) return kExitInvariant;
    }
    return kExitOk;
}

} // namespace

std::map<std::string, std::string> parse_kv_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

IntPolynomial instantiate_family(const std::string& templ, const BigInt& c) {
    auto substituted = [&](char digit) {
        std::string s;
        for (char ch : templ) s += ch == 'c' ? digit : ch;
        return s;
    };
    // The grammar is linear in each placeholder occurrence, so two probe
    // parses recover f_c = base + c * mask.
    IntPolynomial base = parse_poly(substituted('0'));
    IntPolynomial step = parse_poly(substituted('1'));
    std::size_t size = std::max(base.coeffs().size(), step.coeffs().size());
    std::vector<BigInt> coeffs(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
        coeffs[i] = base.coeff(i) + c * (step.coeff(i) - base.coeff(i));
    }
    return IntPolynomial(std::move(coeffs));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"index divisibility sets, graphs, and mod-p structure of polynomial orbits"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    CommonOpts divset_opts;
    bool divset_closure = false;
    auto* divset_sub = app.add_subcommand("divset", "window scan of {n : n | f^n(0)}");
    auto divset_binding = std::make_shared<CommonBinding>();
    divset_binding->add(divset_sub, divset_opts);
    std::map<std::string, CLI::Option*> divset_extra;
    divset_extra["closure"] =
        divset_sub->add_flag("--closure", divset_closure, "verify the closure laws");
    divset_sub->callback([&, divset_binding] {
        divset_binding->load_config_file(divset_extra, [&](const std::string&, const std::string& v) {
            divset_closure = v == "true" || v == "1";
        });
        exit_code = run_divset(divset_opts, divset_closure, out, err);
    });

    CommonOpts graph_opts;
    auto* graph_sub = app.add_subcommand("graph", "index divisibility graph within the window");
    auto graph_binding = std::make_shared<CommonBinding>();
    graph_binding->add(graph_sub, graph_opts);
    graph_sub->callback([&, graph_binding] {
        graph_binding->load_config_file({}, nullptr);
        exit_code = run_graph(graph_opts, out, err);
    });

    CommonOpts zsig_opts;
    auto* zsig_sub = app.add_subcommand("zsig", "primitive parts, growth bounds, finiteness");
    auto zsig_binding = std::make_shared<CommonBinding>();
    zsig_binding->add(zsig_sub, zsig_opts);
    zsig_sub->callback([&, zsig_binding] {
        zsig_binding->load_config_file({}, nullptr);
        exit_code = run_zsig(zsig_opts, out, err);
    });

    CommonOpts perm_opts;
    std::uint64_t perm_p = 0;
    bool perm_density = false;
    auto* perm_sub = app.add_subcommand("perm", "mod-p profile and exclusion predicates");
    auto perm_binding = std::make_shared<CommonBinding>();
    perm_binding->add(perm_sub, perm_opts);
    std::map<std::string, CLI::Option*> perm_extra;
    perm_extra["p"] = perm_sub->add_option("--p", perm_p, "prime to profile");
    perm_extra["density"] =
        perm_sub->add_flag("--density", perm_density, "scan ord_p(2) parity density up to --P");
    perm_sub->callback([&, perm_binding] {
        perm_binding->load_config_file(perm_extra, [&](const std::string& k, const std::string& v) {
            if (k == "p") perm_p = std::stoull(v);
            if (k == "density") perm_density = v == "true" || v == "1";
        });
        exit_code = run_perm(perm_opts, perm_p, perm_density, out, err);
    });

    CommonOpts survey_opts;
    std::string survey_family;
    std::string survey_c = "1..100";
    auto* survey_sub = app.add_subcommand("survey", "open-question scan over a family");
    auto survey_binding = std::make_shared<CommonBinding>();
    survey_binding->add(survey_sub, survey_opts);
    std::map<std::string, CLI::Option*> survey_extra;
    survey_extra["family"] =
        survey_sub->add_option("--family", survey_family, "template, e.g. \"x^3+x+c\"");
    survey_extra["c"] = survey_sub->add_option("--c", survey_c, "range for c, e.g. 1..100");
    survey_sub->callback([&, survey_binding] {
        survey_binding->load_config_file(survey_extra,
                                         [&](const std::string& k, const std::string& v) {
                                             if (k == "family") survey_family = v;
                                             if (k == "c") survey_c = v;
                                         });
        exit_code = run_survey(survey_opts, survey_family, survey_c, out, err);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::stringstream out_buffer, err_buffer;
        int rc = app.exit(e, out_buffer, err_buffer);
        out << out_buffer.str();
        err << err_buffer.str();
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rigidity_error& e) {
        err << "finding: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const undecided_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}

} // namespace idiv
