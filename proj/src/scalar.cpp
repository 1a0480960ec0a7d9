#include "superfrieze/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "superfrieze/errors.hpp"

namespace superfrieze {

namespace {

// Merges two canonical odd-factor lists. Returns false when a generator
// repeats (the product vanishes); otherwise sets the Koszul sign of the
// interleaving permutation.
bool merge_odd(const std::vector<GeneratorId>& a, const std::vector<GeneratorId>& b,
               std::vector<GeneratorId>& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] moves past the remaining elements of a
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return true;
}

SuperMonomial mul_even_parts(const SuperMonomial& m, const SuperMonomial& n) {
    SuperMonomial r;
    r.even = m.even;
    for (const auto& [g, e] : n.even) {
        auto it = r.even.find(g);
        if (it == r.even.end()) {
            r.even.emplace(g, e);
        } else {
            it->second += e;
            if (it->second == 0) r.even.erase(it);
        }
    }
    return r;
}

} // namespace

SuperScalar::SuperScalar(const Rat& c) {
    if (c != 0) terms_.emplace(SuperMonomial{}, c);
}

SuperScalar SuperScalar::generator(const GeneratorId& id) {
    SuperMonomial m;
    if (id.parity == Parity::Even) {
        m.even.emplace(id, 1);
    } else {
        m.odd.push_back(id);
    }
    SuperScalar s;
    s.terms_.emplace(std::move(m), Rat(1));
    return s;
}

SuperScalar SuperScalar::from_terms(std::map<SuperMonomial, Rat> terms) {
    SuperScalar s;
    for (auto& [m, c] : terms)
        if (c != 0) s.terms_.emplace(m, c);
    return s;
}

void SuperScalar::add_term(const SuperMonomial& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool SuperScalar::is_even() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return !t.first.is_odd_parity(); });
}

bool SuperScalar::is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_odd_parity(); });
}

ParityClass SuperScalar::parity() const {
    if (is_even()) return ParityClass::Even;
    if (is_odd()) return ParityClass::Odd;
    return ParityClass::Mixed;
}

SuperScalar SuperScalar::body() const {
    SuperScalar s;
    for (const auto& [m, c] : terms_)
        if (m.odd.empty()) s.terms_.emplace(m, c);
    return s;
}

SuperScalar SuperScalar::soul() const {
    SuperScalar s;
    for (const auto& [m, c] : terms_)
        if (!m.odd.empty()) s.terms_.emplace(m, c);
    return s;
}

std::vector<GeneratorId> SuperScalar::odd_generators() const {
    std::vector<GeneratorId> gens;
    for (const auto& [m, c] : terms_)
        for (const auto& g : m.odd)
            if (!std::binary_search(gens.begin(), gens.end(), g)) {
                gens.insert(std::upper_bound(gens.begin(), gens.end(), g), g);
            }
    return gens;
}

SuperScalar SuperScalar::operator-() const {
    SuperScalar s;
    for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
    return s;
}

SuperScalar operator+(const SuperScalar& u, const SuperScalar& v) {
    SuperScalar s = u;
    for (const auto& [m, c] : v.terms_) s.add_term(m, c);
    return s;
}

SuperScalar operator-(const SuperScalar& u, const SuperScalar& v) {
    SuperScalar s = u;
    for (const auto& [m, c] : v.terms_) s.add_term(m, -c);
    return s;
}

SuperScalar operator*(const SuperScalar& u, const SuperScalar& v) {
    SuperScalar s;
    std::vector<GeneratorId> odd;
    for (const auto& [m, cm] : u.terms_) {
        for (const auto& [n, cn] : v.terms_) {
            int sign = 1;
            if (!merge_odd(m.odd, n.odd, odd, sign)) continue;
            SuperMonomial r = mul_even_parts(m, n);
            r.odd = odd;
            Rat c = cm * cn;
            if (sign < 0) c = -c;
            s.add_term(r, c);
        }
    }
    return s;
}

SuperScalar operator*(const Rat& c, const SuperScalar& u) {
    if (c == 0) return SuperScalar::zero();
    std::map<SuperMonomial, Rat> terms;
    for (const auto& [m, k] : u.terms()) terms.emplace(m, c * k);
    return SuperScalar::from_terms(std::move(terms));
}

SuperScalar SuperScalar::inverse() const {
    const SuperScalar b = body();
    if (b.terms_.size() != 1)
        throw NotInvertible("body must be a single Laurent monomial, got " + b.str());
    const auto& [bm, bc] = *b.terms_.begin();

    SuperMonomial inv_m;
    for (const auto& [g, e] : bm.even) inv_m.even.emplace(g, -e);
    SuperScalar inv_body;
    inv_body.terms_.emplace(std::move(inv_m), Rat(1) / bc);

    const SuperScalar s = soul();
    if (s.is_zero()) return inv_body;

    // u = b(1 + t) with t nilpotent: u^-1 = b^-1 sum (-t)^k
    const SuperScalar t = inv_body * s;
    const std::size_t cap = odd_generators().size() + 1;
    SuperScalar acc = SuperScalar::one();
    SuperScalar p = SuperScalar::one();
    for (std::size_t k = 1; k <= cap; ++k) {
        p = -(p * t);
        if (p.is_zero()) break;
        acc += p;
    }
    return inv_body * acc;
}

SuperScalar operator/(const SuperScalar& u, const SuperScalar& v) {
    return u * v.inverse();
}

SuperScalar SuperScalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    SuperScalar r = SuperScalar::one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

SuperScalar SuperScalar::substitute(const std::map<GeneratorId, SuperScalar>& assignment) const {
    for (const auto& [g, val] : assignment) {
        const bool ok = g.parity == Parity::Even ? val.is_even() : val.is_odd();
        if (!ok)
            throw ParityMismatch("value for " + g.label() + " has wrong parity");
    }
    SuperScalar out;
    for (const auto& [m, c] : terms_) {
        SuperScalar term(c);
        for (const auto& [g, e] : m.even) {
            auto it = assignment.find(g);
            const SuperScalar base = it == assignment.end() ? generator(g) : it->second;
            term = term * base.pow(e);
        }
        // odd factors multiply in canonical (stored) order
        for (const auto& g : m.odd) {
            auto it = assignment.find(g);
            term = term * (it == assignment.end() ? generator(g) : it->second);
        }
        out += term;
    }
    return out;
}

std::string SuperScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        std::vector<std::string> factors;
        for (const auto& [g, e] : m.even) {
            factors.push_back(e == 1 ? g.label() : g.label() + "^" + std::to_string(e));
        }
        for (const auto& g : m.odd) factors.push_back(g.label());

        if (factors.empty()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

} // namespace superfrieze
