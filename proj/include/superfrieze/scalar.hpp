#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "superfrieze/generator.hpp"
#include "superfrieze/rational.hpp"

namespace superfrieze {

/// One monomial: Laurent exponents on even generators (negative allowed)
/// times a strictly increasing list of odd generators (squares vanish).
struct SuperMonomial {
    std::map<GeneratorId, int> even; // exponent map, no zero exponents stored
    std::vector<GeneratorId> odd;    // canonical order, no repeats

    friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
    friend std::strong_ordering operator<=>(const SuperMonomial& a, const SuperMonomial& b) {
        if (auto c = a.odd <=> b.odd; c != 0) return c;
        return a.even <=> b.even;
    }

    bool is_odd_parity() const { return odd.size() % 2 == 1; }
};

enum class ParityClass { Even, Odd, Mixed };

/// Element of the free supercommutative ring over named generators:
/// exact rational coefficients, canonical term map. Immutable value type;
/// all operations are pure, so sharing across threads is safe.
class SuperScalar {
  public:
    SuperScalar() = default;
    explicit SuperScalar(const Rat& c);
    explicit SuperScalar(long c) : SuperScalar(Rat(c)) {}

    static SuperScalar zero() { return SuperScalar(); }
    static SuperScalar one() { return SuperScalar(Rat(1)); }
    static SuperScalar generator(const GeneratorId& id);

    const std::map<SuperMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_even() const;             // every term has even parity (true for 0)
    bool is_odd() const;              // every term has odd parity (true for 0)
    ParityClass parity() const;       // zero reports Even

    SuperScalar body() const;         // terms free of odd generators
    SuperScalar soul() const;         // the nilpotent rest

    /// Inverse when body() is a single Laurent monomial with nonzero
    /// coefficient; the soul is absorbed by a terminating geometric series.
    SuperScalar inverse() const;

    /// Ring homomorphism replacing generators by values of equal parity.
    SuperScalar substitute(const std::map<GeneratorId, SuperScalar>& assignment) const;

    /// Distinct odd generators appearing in any term.
    std::vector<GeneratorId> odd_generators() const;

    SuperScalar operator-() const;
    friend SuperScalar operator+(const SuperScalar& u, const SuperScalar& v);
    friend SuperScalar operator-(const SuperScalar& u, const SuperScalar& v);
    friend SuperScalar operator*(const SuperScalar& u, const SuperScalar& v);
    friend SuperScalar operator/(const SuperScalar& u, const SuperScalar& v);
    SuperScalar& operator+=(const SuperScalar& v) { return *this = *this + v; }
    SuperScalar& operator-=(const SuperScalar& v) { return *this = *this - v; }
    SuperScalar& operator*=(const SuperScalar& v) { return *this = *this * v; }

    /// Integer power; negative exponents go through inverse().
    SuperScalar pow(int e) const;

    friend bool operator==(const SuperScalar&, const SuperScalar&) = default;

    std::string str() const;

    /// Term-map constructor for deserialization; drops zero coefficients.
    static SuperScalar from_terms(std::map<SuperMonomial, Rat> terms);

  private:
    std::map<SuperMonomial, Rat> terms_;

    void add_term(const SuperMonomial& m, const Rat& c);
};

SuperScalar operator*(const Rat& c, const SuperScalar& u);
inline SuperScalar operator*(long c, const SuperScalar& u) { return Rat(c) * u; }
inline SuperScalar operator+(const SuperScalar& u, long c) { return u + SuperScalar(c); }
inline SuperScalar operator+(long c, const SuperScalar& u) { return SuperScalar(c) + u; }
inline SuperScalar operator-(const SuperScalar& u, long c) { return u - SuperScalar(c); }
inline SuperScalar operator-(long c, const SuperScalar& u) { return SuperScalar(c) - u; }

/// Convenience factories mirroring the generator helpers.
inline SuperScalar sc_even(std::string name, int index = -1) {
    return SuperScalar::generator(even_gen(std::move(name), index));
}
inline SuperScalar sc_odd(std::string name, int index = -1) {
    return SuperScalar::generator(odd_gen(std::move(name), index));
}

} // namespace superfrieze
