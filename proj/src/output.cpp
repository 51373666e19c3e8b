#include "lcd/output.hpp"

#include "lcd/error.hpp"

#include <sstream>

namespace lcd::output {

Json strings(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

Json interval_json(const Interval& v, unsigned digits) {
    return Json{{"lo", to_string(v.lo)},
                {"hi", to_string(v.hi)},
                {"width", to_string(v.width())},
                {"decimal", to_decimal(v.midpoint(), digits)}};
}

Json table_payload(const GenusTable& t, const std::string& cls, const std::string& source,
                   unsigned g_lo, unsigned g_hi) {
    Json rows = Json::array();
    for (unsigned g = g_lo; g <= g_hi; ++g) {
        Json values = Json::array();
        for (unsigned n = 0; n <= t.n_max(); ++n) {
            if (!t.with_one_chords()) {
                values.push_back(to_string(t.at(g, n)));
                continue;
            }
            Json by_m = Json::array();
            for (unsigned m = 0; m <= n; ++m) by_m.push_back(to_string(t.at(g, n, m)));
            values.push_back(std::move(by_m));
        }
        rows.push_back(Json{{"g", g}, {"values", std::move(values)}});
    }
    Json p{{"class", cls},
           {"source", source},
           {"sigma", t.sigma() ? Json(*t.sigma()) : Json(nullptr)},
           {"n_max", t.n_max()},
           {"refined_by_one_chords", t.with_one_chords()},
           {"rows", std::move(rows)}};
    return p;
}

std::string table_csv(const GenusTable& t, unsigned g_lo, unsigned g_hi, const Metadata& meta) {
    std::ostringstream os;
    os << "# command=" << meta.command << " version=" << kVersion;
    for (const auto& [k, v] : meta.parameters) os << ' ' << k << '=' << v;
    os << '\n' << (t.with_one_chords() ? "g,n,m,count\n" : "g,n,count\n");
    for (unsigned g = g_lo; g <= g_hi; ++g)
        for (unsigned n = 0; n <= t.n_max(); ++n) {
            if (!t.with_one_chords()) {
                os << g << ',' << n << ',' << to_string(t.at(g, n)) << '\n';
                continue;
            }
            for (unsigned m = 0; m <= n; ++m)
                os << g << ',' << n << ',' << m << ',' << to_string(t.at(g, n, m)) << '\n';
        }
    return os.str();
}

Json poly_payload(const std::string& kind, const std::string& index_name, long index, const Poly& p,
                  const std::string& variable) {
    return Json{{"kind", kind},
                {index_name, index},
                {"variable", variable},
                {"degree", p.degree()},
                {"coefficients", strings(p.coeffs())}};
}

Json series_payload(const std::string& target, const Series& s, const Json& params) {
    Json p{{"target", target}};
    for (const auto& [k, v] : params.items()) p[k] = v;
    p["order"] = s.order();
    p["coefficients"] = strings(s.coeffs());
    return p;
}

Json report_payload(const VerifyReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j{{"name", c.name}, {"passed", c.passed}, {"gating", c.gating}, {"detail", c.detail}};
        j["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
        checks.push_back(std::move(j));
    }
    return Json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", std::move(checks)}};
}

Json document(const Metadata& meta, Json payload) {
    Json params = Json::object();
    for (const auto& [k, v] : meta.parameters) params[k] = v;
    return Json{{"format", "json"},
                {"metadata",
                 {{"command", meta.command},
                  {"parameters", std::move(params)},
                  {"version", kVersion},
                  {"runtime_ms", meta.runtime_ms}}},
                {"payload", std::move(payload)}};
}

GenusTable table_from_payload(const Json& payload, DiagramClass kind, std::optional<unsigned> sigma) {
    const unsigned n_max = payload.at("n_max").get<unsigned>();
    const bool refined = payload.at("refined_by_one_chords").get<bool>();
    unsigned g_max = 0;
    for (const auto& row : payload.at("rows")) g_max = std::max(g_max, row.at("g").get<unsigned>());
    GenusTable t(kind, g_max, n_max, refined, sigma);
    for (const auto& row : payload.at("rows")) {
        const unsigned g = row.at("g").get<unsigned>();
        const auto& values = row.at("values");
        require(values.size() == n_max + 1, "table row has the wrong length");
        for (unsigned n = 0; n <= n_max; ++n) {
            if (!refined) {
                t.set(g, n, Integer(values[n].get<std::string>()));
                continue;
            }
            for (unsigned m = 0; m < values[n].size(); ++m)
                t.set(g, n, m, Integer(values[n][m].get<std::string>()));
        }
    }
    return t;
}

}  // namespace lcd::output
