#include "greendt/json_io.hpp"

#include <fstream>
#include <limits>

#include "greendt/errors.hpp"

namespace greendt {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
    throw ParseError("malformed input: " + what);
}

int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        malformed(what + " must be an integer");
    return j.get<int>();
}

Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational(j.get<std::string>());
        } catch (const std::exception&) {
            malformed(what + ": cannot parse \"" + j.get<std::string>() +
                      "\" as a rational p/q");
        }
    }
    malformed(what + " must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<long long>::min() &&
        numerator(r) <= std::numeric_limits<long long>::max())
        return numerator(r).convert_to<long long>();
    return numerator(r).str() + "/" + denominator(r).str();
}

json class_to_json(const ClassVector& c) {
    json a = json::array();
    for (const Integer& x : c) {
        if (x >= std::numeric_limits<long long>::min() &&
            x <= std::numeric_limits<long long>::max())
            a.push_back(x.convert_to<long long>());
        else
            a.push_back(x.str());
    }
    return a;
}

} // namespace

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        malformed("quiver file needs an object with \"vertices\"");
    const int n = as_int(j["vertices"], "\"vertices\"");
    std::vector<Arrow> arrows;
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array())
            malformed("\"arrows\" must be an array");
        for (const json& a : j["arrows"]) {
            if (!a.is_array() || a.size() < 2 || a.size() > 3)
                malformed("each arrow must be [source, target] or [source, target, mult]");
            Arrow arrow;
            arrow.source = as_int(a[0], "arrow source");
            arrow.target = as_int(a[1], "arrow target");
            arrow.mult = a.size() == 3 ? as_int(a[2], "arrow multiplicity") : 1;
            arrows.push_back(arrow);
        }
    }
    return Quiver(n, arrows);
}

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (int i = 1; i <= q.size(); ++i)
        for (int j2 = 1; j2 <= q.size(); ++j2)
            if (const Integer& m = q.count(i, j2); m > 0)
                arrows.push_back(json::array({i, j2, m.convert_to<long long>()}));
    return json{{"vertices", q.size()}, {"arrows", arrows}};
}

CentralCharge charge_from_json(const json& j) {
    if (!j.is_object() || !j.contains("z") || !j["z"].is_array())
        malformed("charge file needs an object with a \"z\" array");
    std::vector<RationalComplex> z;
    for (size_t i = 0; i < j["z"].size(); ++i) {
        const json& w = j["z"][i];
        const std::string where = "z[" + std::to_string(i + 1) + "]";
        if (!w.is_array() || w.size() != 2)
            malformed(where + " must be a pair [re, im]");
        z.push_back({rational_from_json(w[0], where + " real part"),
                     rational_from_json(w[1], where + " imaginary part")});
    }
    return CentralCharge(std::move(z));
}

json charge_to_json(const CentralCharge& z) {
    json arr = json::array();
    for (const RationalComplex& w : z.values())
        arr.push_back(json::array({rational_to_json(w.re), rational_to_json(w.im)}));
    return json{{"z", arr}};
}

json run_to_json(const GreenRun& run) {
    json steps = json::array();
    for (const GreenStep& s : run.steps)
        steps.push_back(json{{"vertex", s.vertex},
                             {"class", class_to_json(s.stable_class)},
                             {"phase", s.phase_display}});
    json out{{"status", run.status == RunStatus::MaximalReached ? "maximal"
                                                                : "budget_exceeded"},
             {"steps", steps},
             {"final_quiver", quiver_to_json(principal_part(run.final))}};
    if (run.status == RunStatus::MaximalReached)
        out["permutation"] = self_duality_check(run);
    return out;
}

json series_to_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(json{{"exp", e}, {"num", c.num().str()}, {"den", c.den().str()}});
    return json{{"rank", s.algebra().rank},
                {"degree", s.algebra().degree_bound},
                {"terms", terms}};
}

json report_to_json(const IndependenceReport& report) {
    json results = json::array();
    for (const ChargeResult& r : report.results) {
        const char* status = r.status == ChargeStatus::Ok          ? "ok"
                             : r.status == ChargeStatus::Nondiscrete ? "nondiscrete"
                                                                     : "infinite";
        results.push_back(json{{"charge_index", r.charge_index}, {"status", status}});
    }
    json comparisons = json::array();
    for (const PairVerdict& v : report.comparisons)
        comparisons.push_back(json{{"i", v.i}, {"j", v.j}, {"equal", v.equal}});
    return json{{"results", results}, {"comparisons", comparisons}};
}

json mgs_to_json(const MgsEnumeration& e) {
    return json{{"sequences", e.sequences}, {"complete", e.complete}};
}

std::string canonical_dump(const json& j) { return j.dump(); }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace greendt
