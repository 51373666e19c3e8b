#include "lcd/cli.hpp"

#include "lcd/asymptotics.hpp"
#include "lcd/diagram.hpp"
#include "lcd/error.hpp"
#include "lcd/genfunc.hpp"
#include "lcd/oracle.hpp"
#include "lcd/output.hpp"
#include "lcd/recurrences.hpp"
#include "lcd/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace lcd::cli {

using output::Json;

unsigned max_series_order() {
    const char* raw = std::getenv("LCD_MAX_SERIES_ORDER");
    if (raw == nullptr || *raw == '\0') return 1000;
    try {
        return static_cast<unsigned>(std::stoul(raw));
    } catch (const std::exception&) {
        throw PreconditionError(std::string("LCD_MAX_SERIES_ORDER is not a number: ") + raw);
    }
}

namespace {

void check_order(unsigned order) {
    const unsigned cap = max_series_order();
    if (order > cap)
        throw CapExceeded("order " + std::to_string(order) + " exceeds the cap of " +
                          std::to_string(cap) + "; raise LCD_MAX_SERIES_ORDER to override");
}

struct TableArgs {
    std::string cls;
    unsigned n_max = 6;
    std::optional<unsigned> g_max;
    std::optional<unsigned> g;
    std::optional<unsigned> sigma;
    std::string source = "formula";
    std::string format = "json";
};

struct PolyArgs {
    std::string kind;
    std::optional<unsigned> g;
    std::optional<unsigned> n;
};

struct VerifyArgs {
    std::string suite;
    std::optional<unsigned> n_max;
    std::optional<unsigned> g_max;
    bool serial = false;
    std::vector<unsigned> corrupt;
};

struct SeriesArgs {
    std::string target;
    unsigned g = 1;
    std::optional<unsigned> sigma;
    unsigned order = 10;
};

struct AsymptoticsArgs {
    std::string what;
    unsigned g = 1;
    unsigned sigma = 2;
    unsigned n = 1000;
    unsigned n_max = 400;
    std::string width = "1/1000000000000";
};

// Largest genus that can occur in each class at size n_max.
unsigned natural_g_max(const std::string& cls, unsigned n_max) {
    return cls == "mm" ? n_max / 4 : n_max / 2;
}

GenusTable formula_table(const TableArgs& a, unsigned g_max) {
    if (a.cls == "cg") return cg_table(g_max, a.n_max);
    if (a.cls == "mm") {
        check_order(a.n_max);
        GenusTable t(DiagramClass::macromolecular, g_max, a.n_max, false, a.sigma);
        for (unsigned g = 0; g <= g_max; ++g) {
            const Series d = dg_sigma_series(g, *a.sigma, a.n_max);
            for (unsigned n = 0; n <= a.n_max; ++n) {
                ensure(is_integral(d[n]), "non-integral coefficient of D_g");
                t.set(g, n, d[n].get_num());
            }
        }
        return t;
    }
    check_order(a.n_max);
    const bool shapes = a.cls == "shapes";
    GenusTable t(shapes ? DiagramClass::shapes : DiagramClass::full, g_max, a.n_max, true);
    for (unsigned g = 0; g <= g_max; ++g) {
        const BiSeries b = shapes ? sg_bivariate(g, a.n_max, a.n_max) : cg_bivariate(g, a.n_max, a.n_max);
        for (unsigned n = 0; n <= a.n_max; ++n)
            for (unsigned m = 0; m <= n; ++m) {
                ensure(is_integral(b(n, m)), "non-integral bivariate coefficient");
                t.set(g, n, m, b(n, m).get_num());
            }
    }
    return t;
}

GenusTable oracle_table(const TableArgs& a) {
    const auto limits = oracle::EnumerationLimits::from_environment();
    if (a.cls == "cg") return oracle::oracle_cg(a.n_max, kernels::Exec::parallel, limits);
    if (a.cls == "cg-m") return oracle::oracle_cg_onechords(a.n_max, kernels::Exec::parallel, limits);
    if (a.cls == "shapes") return oracle::oracle_shapes(a.n_max, kernels::Exec::parallel, limits);
    return oracle::oracle_macromolecular(a.n_max, *a.sigma, kernels::Exec::parallel, limits);
}

int cmd_table(const TableArgs& a, output::Metadata& meta, std::ostream& out,
              const std::function<double()>& elapsed) {
    if (a.cls == "mm" && !a.sigma) throw PreconditionError("table mm requires --sigma");
    if (a.cls != "mm" && a.sigma) throw PreconditionError("--sigma applies to table mm only");
    if (a.sigma && *a.sigma < 1) throw PreconditionError("--sigma must be at least 1");
    const unsigned natural = natural_g_max(a.cls, a.n_max);
    unsigned g_lo = 0;
    unsigned g_hi = std::min(a.g_max.value_or(natural), natural);
    if (a.g) {
        if (*a.g > natural)
            throw PreconditionError("--g " + std::to_string(*a.g) + " exceeds the largest genus " +
                                    std::to_string(natural) + " at this size");
        g_lo = g_hi = *a.g;
    }
    const GenusTable t = a.source == "oracle" ? oracle_table(a) : formula_table(a, natural);

    meta.parameters = {{"class", a.cls}, {"n_max", std::to_string(a.n_max)}, {"source", a.source}};
    if (a.sigma) meta.parameters["sigma"] = std::to_string(*a.sigma);
    if (a.g) meta.parameters["g"] = std::to_string(*a.g);
    if (a.g_max) meta.parameters["g_max"] = std::to_string(*a.g_max);
    meta.runtime_ms = elapsed();
    if (a.format == "csv")
        out << output::table_csv(t, g_lo, g_hi, meta);
    else
        out << output::document(meta, output::table_payload(t, a.cls, a.source, g_lo, g_hi)).dump(2)
            << '\n';
    return kExitPass;
}

int cmd_poly(const PolyArgs& a, output::Metadata& meta, std::ostream& out,
             const std::function<double()>& elapsed) {
    Json payload;
    if (a.kind == "hz") {
        if (!a.n) throw PreconditionError("poly hz requires --n");
        check_order(*a.n);
        payload = output::poly_payload("hz", "n", *a.n, hz_polys(*a.n).at(*a.n), "x");
        meta.parameters = {{"kind", a.kind}, {"n", std::to_string(*a.n)}};
    } else {
        if (!a.g || *a.g < 1) throw PreconditionError("poly " + a.kind + " requires --g >= 1");
        if (*a.g > max_series_order() / 3)
            throw CapExceeded("genus " + std::to_string(*a.g) + " exceeds the series cap");
        const Poly p = a.kind == "pg" ? pg(*a.g) : a.kind == "rg" ? rg(*a.g) : qg(*a.g);
        payload = output::poly_payload(a.kind, "g", *a.g, p, "z");
        meta.parameters = {{"kind", a.kind}, {"g", std::to_string(*a.g)}};
    }
    meta.runtime_ms = elapsed();
    out << output::document(meta, std::move(payload)).dump(2) << '\n';
    return kExitPass;
}

int cmd_verify(const VerifyArgs& a, output::Metadata& meta, std::ostream& out, std::ostream& err,
               const std::function<double()>& elapsed) {
    VerifyOptions opt;
    opt.limits = oracle::EnumerationLimits::from_environment();
    opt.exec = a.serial ? kernels::Exec::serial : kernels::Exec::parallel;
    meta.parameters = {{"suite", a.suite}};
    if (a.n_max) {
        const unsigned n = *a.n_max;
        opt.oracle_n_max = n;
        opt.hz_n_max = n;
        opt.hz_oracle_n_max = std::min(n, 8U);
        opt.shapes_n_max = n;
        opt.cg_m_n_max = n;
        opt.mm_n_max = n;
        opt.mm_fiber_n_max = std::min(n, 10U);
        meta.parameters["n_max"] = std::to_string(n);
    }
    if (a.g_max) {
        if (*a.g_max < 1) throw PreconditionError("--g-max must be at least 1");
        opt.g_max = *a.g_max;
        meta.parameters["g_max"] = std::to_string(*a.g_max);
    }
    if (!a.corrupt.empty()) {
        if (a.corrupt.size() != 2) throw PreconditionError("--corrupt-cell takes G N");
        opt.corrupt = CorruptCell{a.corrupt[0], a.corrupt[1]};
        meta.parameters["corrupt_cell"] = std::to_string(a.corrupt[0]) + "," + std::to_string(a.corrupt[1]);
    }
    const VerifyReport rep = verify_suite(a.suite, opt);
    meta.runtime_ms = elapsed();
    out << output::document(meta, output::report_payload(rep)).dump(2) << '\n';
    for (const auto& c : rep.checks) {
        if (c.passed) continue;
        err << (c.gating ? "FAIL " : "NOTE ") << rep.suite << ": " << c.name;
        if (c.counterexample) err << ": " << *c.counterexample;
        err << '\n';
    }
    return rep.passed() ? kExitPass : kExitMismatch;
}

int cmd_series(const SeriesArgs& a, output::Metadata& meta, std::ostream& out,
               const std::function<double()>& elapsed) {
    check_order(a.order);
    Json params{{"g", a.g}};
    Series s;
    if (a.target == "cg") {
        if (a.sigma) throw PreconditionError("--sigma applies to series dg only");
        s = cg_series(a.g, a.order);
    } else {
        if (!a.sigma || *a.sigma < 1) throw PreconditionError("series dg requires --sigma >= 1");
        s = dg_sigma_series(a.g, *a.sigma, a.order);
        params["sigma"] = *a.sigma;
    }
    meta.parameters = {{"target", a.target}, {"g", std::to_string(a.g)}, {"order", std::to_string(a.order)}};
    if (a.sigma) meta.parameters["sigma"] = std::to_string(*a.sigma);
    meta.runtime_ms = elapsed();
    out << output::document(meta, output::series_payload(a.target, s, params)).dump(2) << '\n';
    return kExitPass;
}

int cmd_asymptotics(const AsymptoticsArgs& a, output::Metadata& meta, std::ostream& out,
                    const std::function<double()>& elapsed) {
    Json payload;
    if (a.what == "constant") {
        if (a.g < 1) throw PreconditionError("--g must be at least 1");
        if (a.n < 1) throw PreconditionError("--n must be at least 1");
        check_order(a.n);
        const AsymptoticEstimate est = cg_leading_constant(a.g);
        const RatioCheck rc = cg_ratio_check(a.g, a.n);
        payload = Json{{"g", a.g},
                       {"exponent", to_string(est.exponent)},
                       {"growth_rate", output::interval_json(est.growth_rate)},
                       {"constant_over_sqrt_pi", to_string(est.constant_over_sqrt_pi)},
                       {"constant", output::interval_json(est.constant)},
                       {"ratio_check",
                        {{"n", a.n},
                         {"ratio", output::interval_json(rc.ratio)},
                         {"relative_error", output::interval_json(rc.relative_error, 8)}}}};
        meta.parameters = {{"what", a.what}, {"g", std::to_string(a.g)}, {"n", std::to_string(a.n)}};
    } else if (a.what == "singularity") {
        const Rational width = parse_rational(a.width);
        if (sgn(width) <= 0) throw PreconditionError("--width must be positive");
        const RootIsolation root = dominant_singularity(a.sigma, width);
        payload = Json{{"sigma", a.sigma},
                       {"polynomial", output::strings(root.polynomial.coeffs())},
                       {"rho", output::interval_json({root.lo, root.hi})},
                       {"growth_rate", output::interval_json(growth_rate(root))},
                       {"sign_change", root.sign_change},
                       {"roots_below", root.roots_below},
                       {"roots_inside", root.roots_inside}};
        meta.parameters = {{"what", a.what}, {"sigma", std::to_string(a.sigma)}, {"width", a.width}};
    } else {
        check_order(a.n_max + 2 * a.sigma + 2);
        const EmpiricalGrowth emp = empirical_growth(a.g, a.sigma, a.n_max);
        const Interval rate = growth_rate(dominant_singularity(a.sigma));
        const Interval rel = abs(Interval::point(emp.ratio) / rate - Interval::point(1));
        payload = Json{{"g", a.g},
                       {"sigma", a.sigma},
                       {"n", emp.n},
                       {"ratio", to_string(emp.ratio)},
                       {"ratio_decimal", to_decimal(emp.ratio, 12)},
                       {"growth_rate", output::interval_json(rate)},
                       {"relative_difference", output::interval_json(rel, 8)}};
        meta.parameters = {{"what", a.what},
                           {"g", std::to_string(a.g)},
                           {"sigma", std::to_string(a.sigma)},
                           {"n_max", std::to_string(a.n_max)}};
    }
    meta.runtime_ms = elapsed();
    out << output::document(meta, std::move(payload)).dump(2) << '\n';
    return kExitPass;
}

int cmd_diagram(const std::string& encoding, output::Metadata& meta, std::ostream& out,
                const std::function<double()>& elapsed) {
    const PartialDiagram d = decode_partial(encoding);
    const DiagramStats s = stats(d);
    unsigned sigma_max = 0;
    while (sigma_max < d.chord_count() && is_macromolecular(d, sigma_max + 1)) ++sigma_max;
    Json sizes = Json::array();
    for (auto k : s.stack_sizes) sizes.push_back(k);
    Json payload{{"encoding", encode(d)},
                 {"vertices", d.vertex_count()},
                 {"chords", s.chord_count},
                 {"genus", s.genus},
                 {"boundary_components", s.boundary_components},
                 {"one_chords", s.one_chord_count},
                 {"stack_sizes", std::move(sizes)},
                 {"largest_sigma", sigma_max},
                 {"shape", encode(project_shape(d))}};
    meta.parameters = {{"encoding", encoding}};
    meta.runtime_ms = elapsed();
    out << output::document(meta, std::move(payload)).dump(2) << '\n';
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [start] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    CLI::App app{"Linear chord diagrams by genus: tables, polynomials, series and cross-checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", output::kVersion);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Emit a genus table");
    table->add_option("class", ta.cls, "cg, cg-m, shapes or mm")->required()->check(
        CLI::IsMember({"cg", "cg-m", "shapes", "mm"}));
    table->add_option("--n-max", ta.n_max, "Largest size n (vertices for mm)");
    table->add_option("--g-max", ta.g_max, "Largest genus emitted");
    table->add_option("--g", ta.g, "Emit a single genus");
    table->add_option("--sigma", ta.sigma, "Minimum stack size, required for mm");
    table->add_option("--source", ta.source, "formula or oracle")->check(CLI::IsMember({"formula", "oracle"}));
    table->add_option("--format", ta.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    PolyArgs pa;
    auto* poly = app.add_subcommand("poly", "Emit P_g, R_g, Q_g or the Harer-Zagier polynomial p(n,x)");
    poly->add_option("kind", pa.kind, "pg, rg, qg or hz")->required()->check(
        CLI::IsMember({"pg", "rg", "qg", "hz"}));
    poly->add_option("--g", pa.g, "Genus for pg, rg, qg");
    poly->add_option("--n", pa.n, "Chord count for hz");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a cross-check suite");
    verify->add_option("suite", va.suite, "Suite name")->required()->check(CLI::IsMember(verify_suite_names()));
    verify->add_option("--n-max", va.n_max, "Size bound for the suite");
    verify->add_option("--g-max", va.g_max, "Genus bound for theorem3");
    verify->add_flag("--serial", va.serial, "Use the serial oracle");
    verify->add_option("--corrupt-cell", va.corrupt, "Add 1 to recursion cell c_G(N) (failure-path testing)")
        ->expected(2);

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "Expand C_g(z) or D_{g,sigma}(z)");
    series->add_option("target", sa.target, "cg or dg")->required()->check(CLI::IsMember({"cg", "dg"}));
    series->add_option("--g", sa.g, "Genus");
    series->add_option("--sigma", sa.sigma, "Minimum stack size for dg");
    series->add_option("--order", sa.order, "Truncation order");

    AsymptoticsArgs aa;
    auto* asym = app.add_subcommand("asymptotics", "Leading constants and growth rates");
    asym->add_option("what", aa.what, "constant, singularity or growth")->required()->check(
        CLI::IsMember({"constant", "singularity", "growth"}));
    asym->add_option("--g", aa.g, "Genus");
    asym->add_option("--sigma", aa.sigma, "Minimum stack size")->check(CLI::PositiveNumber);
    asym->add_option("--n", aa.n, "Index for the constant ratio check");
    asym->add_option("--n-max", aa.n_max, "Index for the empirical ratio");
    asym->add_option("--width", aa.width, "Root enclosure width as p/q");

    std::string encoding;
    auto* diagram = app.add_subcommand("diagram", "Genus and stack statistics of an encoded diagram");
    diagram->add_option("encoding", encoding, "n;p1,...,pn with 0 for unmatched vertices")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    output::Metadata meta;
    try {
        if (*table) return meta.command = "table", cmd_table(ta, meta, out, elapsed);
        if (*poly) return meta.command = "poly", cmd_poly(pa, meta, out, elapsed);
        if (*verify) return meta.command = "verify", cmd_verify(va, meta, out, err, elapsed);
        if (*series) return meta.command = "series", cmd_series(sa, meta, out, elapsed);
        if (*asym) return meta.command = "asymptotics", cmd_asymptotics(aa, meta, out, elapsed);
        if (*diagram) return meta.command = "diagram", cmd_diagram(encoding, meta, out, elapsed);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}

}  // namespace lcd::cli
