#include "torimod/json_io.hpp"

#include "torimod/errors.hpp"

namespace torimod {

namespace {

Json rational_to_json(const Rational& x) {
    return Json::array({x.get_num().get_str(), x.get_den().get_str()});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("bad rational in JSON");
    auto part = [](const Json& v) -> Integer {
        if (v.is_number_integer()) return Integer(v.get<long>());
        if (v.is_string()) return Integer(v.get<std::string>());
        throw Error("bad rational component in JSON");
    };
    Rational q(part(j[0]), part(j[1]));
    if (q.get_den() == 0) throw Error("zero denominator in JSON rational");
    q.canonicalize();
    return q;
}

Json coeffs_to_json(const Cyclotomic& x) {
    Json arr = Json::array();
    for (const auto& c : x.coeffs()) arr.push_back(rational_to_json(c));
    return arr;
}

Cyclotomic coeffs_from_json(unsigned L, const Json& arr) {
    if (!arr.is_array()) throw Error("bad cyclotomic coefficient list");
    std::vector<Rational> cs;
    for (const auto& c : arr) cs.push_back(rational_from_json(c));
    if (cs.size() != euler_phi(L)) throw Error("cyclotomic coefficient list has wrong length");
    return Cyclotomic(L, std::move(cs));
}

}  // namespace

Json cyc_to_json(const Cyclotomic& x) {
    return Json{{"L", x.level()}, {"coeffs", coeffs_to_json(x)}};
}

Cyclotomic cyc_from_json(const Json& j) {
    unsigned L = j.at("L").get<unsigned>();
    if (L == 0) throw Error("cyclotomic level must be positive");
    return coeffs_from_json(L, j.at("coeffs"));
}

Json qseries_to_json(const QSeries& f) {
    Json coeffs = Json::array();
    for (long n = f.base(); n <= f.precision(); ++n)
        coeffs.push_back(coeffs_to_json(f.coefficient(n)));
    return Json{{"L", f.level()},
                {"valuation", f.base()},
                {"prec", f.precision()},
                {"coeffs", coeffs}};
}

QSeries qseries_from_json(const Json& j) {
    unsigned L = j.at("L").get<unsigned>();
    long base = j.at("valuation").get<long>();
    long prec = j.at("prec").get<long>();
    const Json& arr = j.at("coeffs");
    if (!arr.is_array() || static_cast<long>(arr.size()) != prec - base + 1)
        throw Error("q-series coefficient list has wrong length");
    std::vector<Cyclotomic> cs;
    for (const auto& c : arr) cs.push_back(coeffs_from_json(L, c));
    return QSeries(L, base, prec, std::move(cs));
}

Json fan_to_json(const Fan& f) {
    Json rays = Json::array();
    for (const auto& d : f.rays()) rays.push_back(d);
    Json cones = Json::array();
    for (const auto& c : f.max_cones()) cones.push_back(c.rays);
    return Json{{"rank", f.rank()}, {"rays", rays}, {"max_cones", cones}};
}

Fan fan_from_json(const Json& j) {
    int rank = j.at("rank").get<int>();
    std::vector<LatticeVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(r.get<LatticeVector>());
    std::vector<std::vector<int>> cones;
    for (const auto& c : j.at("max_cones")) cones.push_back(c.get<std::vector<int>>());
    return Fan(rank, std::move(rays), std::move(cones));
}

Json degree_to_json(const DegreeFunction& d) {
    return Json{{"l", d.level()}, {"values", d.values()}};
}

DegreeFunction degree_from_json(Fan fan, const Json& j) {
    long l = j.at("l").get<long>();
    std::vector<long long> values = j.at("values").get<std::vector<long long>>();
    return DegreeFunction(std::move(fan), l, std::move(values));
}

std::string pretty_cyclotomic(const Cyclotomic& x) {
    if (x.is_zero()) return "0";
    std::string out;
    const auto& cs = x.coeffs();
    bool first = true;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        Rational c = cs[i];
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        std::string var;
        if (i == 1)
            var = "z" + std::to_string(x.level());
        else if (i > 1)
            var = "z" + std::to_string(x.level()) + "^" + std::to_string(i);
        if (var.empty())
            out += c.get_str();
        else if (c == 1)
            out += var;
        else
            out += c.get_str() + "*" + var;
    }
    return out;
}

std::string pretty_qseries(const QSeries& f) {
    std::string out;
    bool first = true;
    for (long n = f.base(); n <= f.precision(); ++n) {
        const Cyclotomic& c = f.coefficient(n);
        if (c.is_zero()) continue;
        std::string cs = pretty_cyclotomic(c);
        bool needs_parens = cs.find(' ') != std::string::npos;
        std::string term;
        std::string qpow =
            n == 0 ? "" : (n == 1 ? "q" : "q^" + std::to_string(n));
        if (qpow.empty())
            term = needs_parens ? "(" + cs + ")" : cs;
        else if (cs == "1")
            term = qpow;
        else if (cs == "-1")
            term = "-" + qpow;
        else
            term = (needs_parens ? "(" + cs + ")" : cs) + "*" + qpow;
        if (!first) out += " + ";
        out += term;
        first = false;
    }
    if (first) out = "0";
    out += " + O(q^" + std::to_string(f.precision() + 1) + ")";
    return out;
}

}  // namespace torimod
