#include "superfrieze/json_io.hpp"

#include <cctype>

#include "superfrieze/errors.hpp"

namespace superfrieze {

using nlohmann::json;
using nlohmann::ordered_json;

GeneratorId label_to_generator(const std::string& label, Parity parity) {
    std::size_t k = 0;
    while (k < label.size() && std::isalpha(static_cast<unsigned char>(label[k]))) ++k;
    if (k == 0) throw InputError("generator label must start with a letter: '" + label + "'");
    const std::string name = label.substr(0, k);
    if (k == label.size()) return GeneratorId{name, -1, parity};
    for (std::size_t t = k; t < label.size(); ++t)
        if (!std::isdigit(static_cast<unsigned char>(label[t])))
            throw InputError("generator label must be letters then digits: '" + label + "'");
    return GeneratorId{name, std::stoi(label.substr(k)), parity};
}

ordered_json scalar_to_json(const SuperScalar& s) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : s.terms()) {
        ordered_json t;
        t["coeff"] = rat_to_string(c);
        ordered_json even = ordered_json::object();
        for (const auto& [g, e] : m.even) even[g.label()] = e;
        t["even"] = std::move(even);
        ordered_json odd = ordered_json::array();
        for (const auto& g : m.odd) odd.push_back(g.label());
        t["odd"] = std::move(odd);
        terms.push_back(std::move(t));
    }
    return terms;
}

SuperScalar scalar_from_json(const json& j) {
    if (!j.is_array()) throw InputError("scalar JSON must be an array of terms");
    SuperScalar s;
    for (const auto& t : j) {
        SuperMonomial m;
        if (t.contains("even"))
            for (const auto& [label, e] : t.at("even").items()) {
                if (!e.is_number_integer()) throw InputError("exponent must be an integer");
                const int exp = e.get<int>();
                if (exp != 0) m.even.emplace(label_to_generator(label, Parity::Even), exp);
            }
        if (t.contains("odd"))
            for (const auto& label : t.at("odd")) {
                m.odd.push_back(label_to_generator(label.get<std::string>(), Parity::Odd));
            }
        for (std::size_t k = 1; k < m.odd.size(); ++k)
            if (!(m.odd[k - 1] < m.odd[k]))
                throw InputError("odd factor list must be strictly increasing");
        const Rat c = rat_from_string(t.at("coeff").get<std::string>());
        s += SuperScalar::from_terms({{std::move(m), c}});
    }
    return s;
}

ordered_json matrix_to_json(const SuperMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["block"] = {m.block().first, m.block().second};
    ordered_json entries = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

SuperMatrix matrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    std::pair<int, int> block{0, 0};
    if (j.contains("block")) block = {j.at("block").at(0).get<int>(), j.at("block").at(1).get<int>()};
    SuperMatrix m(rows, cols, block);
    const auto& entries = j.at("entries");
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, scalar_from_json(entries.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c))));
    return m;
}

ordered_json hill_coefficients_to_json(const HillCoefficients& c) {
    ordered_json j;
    j["n"] = c.n;
    ordered_json a = ordered_json::array(), b = ordered_json::array();
    for (const auto& x : c.a) a.push_back(scalar_to_json(x));
    for (const auto& x : c.beta) b.push_back(scalar_to_json(x));
    j["a"] = std::move(a);
    j["beta"] = std::move(b);
    return j;
}

HillCoefficients hill_coefficients_from_json(const json& j) {
    std::vector<SuperScalar> a, b;
    for (const auto& x : j.at("a")) a.push_back(scalar_from_json(x));
    for (const auto& x : j.at("beta")) b.push_back(scalar_from_json(x));
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(a.size()))
        throw InputError("declared n disagrees with the coefficient lists");
    return HillCoefficients(std::move(a), std::move(b));
}

ordered_json frieze_to_json(const Superfrieze& fz) {
    ordered_json j;
    j["m"] = fz.width();
    j["n"] = fz.period();
    ordered_json entries = ordered_json::array();
    for (const auto& [key, val] : fz.f_entries()) {
        ordered_json e;
        e["i2"] = 2 * key.first;
        e["j2"] = 2 * key.second;
        e["kind"] = "f";
        e["value"] = scalar_to_json(val);
        entries.push_back(std::move(e));
    }
    for (const auto& [key, val] : fz.phi_entries()) {
        ordered_json e;
        e["i2"] = key.first;
        e["j2"] = key.second;
        e["kind"] = "phi";
        e["value"] = scalar_to_json(val);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

FriezeData frieze_data_from_json(const json& j) {
    FriezeData d;
    d.m = j.at("m").get<int>();
    d.n = j.at("n").get<int>();
    if (d.m < 1 || d.n != d.m + 3) throw InputError("frieze JSON needs m >= 1 and n = m + 3");
    for (const auto& e : j.at("entries")) {
        const int i2 = e.at("i2").get<int>();
        const int j2 = e.at("j2").get<int>();
        const std::string kind = e.at("kind").get<std::string>();
        const SuperScalar val = scalar_from_json(e.at("value"));
        if ((i2 + j2) % 2 != 0) throw InputError("entry at mixed half-integer position");
        if (kind == "f") {
            if (i2 % 2 != 0) throw InputError("even entry at half-integer position");
            if (!val.is_even()) throw InputError("even entry with odd terms at i2=" + std::to_string(i2));
            d.f[{i2 / 2, j2 / 2}] = val;
        } else if (kind == "phi") {
            if (!val.is_odd()) throw InputError("odd entry with even terms at i2=" + std::to_string(i2));
            d.phi[{i2, j2}] = val;
        } else {
            throw InputError("entry kind must be 'f' or 'phi'");
        }
    }
    return d;
}

Superfrieze frieze_from_json(const json& j) {
    const FriezeData d = frieze_data_from_json(j);
    std::vector<SuperScalar> a, beta;
    for (int i = 0; i < d.n; ++i) {
        auto fa = d.f.find({i, i});
        auto fb = d.phi.find({2 * i, 2 * i});
        if (fa == d.f.end() || fb == d.phi.end())
            throw InputError("frieze dump is missing first-row entries at i=" + std::to_string(i));
        a.push_back(fa->second);
        beta.push_back(fb->second);
    }
    const Superfrieze fz = frieze_from_first_rows(a, beta, d.m);
    for (const auto& [key, val] : d.f) {
        if (!fz.has_f(key.first, key.second))
            throw InputError("even entry outside the stored domain at " +
                             FriezeIndex{2 * key.first, 2 * key.second}.str());
        if (fz.f(key.first, key.second) != val)
            throw InputError("even entry disagrees with the first rows at " +
                             FriezeIndex{2 * key.first, 2 * key.second}.str());
    }
    for (const auto& [key, val] : d.phi) {
        if (!fz.has_phi2(key.first, key.second))
            throw InputError("odd entry outside the stored domain at " +
                             FriezeIndex{key.first, key.second}.str());
        if (fz.phi2(key.first, key.second) != val)
            throw InputError("odd entry disagrees with the first rows at " +
                             FriezeIndex{key.first, key.second}.str());
    }
    return fz;
}

} // namespace superfrieze
