#pragma once

#include <json.hpp>

#include "superfrieze/frieze.hpp"
#include "superfrieze/hill.hpp"
#include "superfrieze/matrix.hpp"
#include "superfrieze/scalar.hpp"

namespace superfrieze {

// SuperScalar: array of terms, each
//   {"coeff": "p/q", "even": {"<label>": exponent, ...}, "odd": ["<label>", ...]}
// in canonical order; round-trips are bit-exact.
nlohmann::ordered_json scalar_to_json(const SuperScalar& s);
SuperScalar scalar_from_json(const nlohmann::json& j);

nlohmann::ordered_json matrix_to_json(const SuperMatrix& m);
SuperMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json hill_coefficients_to_json(const HillCoefficients& c);
HillCoefficients hill_coefficients_from_json(const nlohmann::json& j);

// Frieze dump: {"m": m, "n": n, "entries": [{"i2","j2","kind","value"}...]}
// where kind is "f" or "phi" (integer positions hold one of each).
nlohmann::ordered_json frieze_to_json(const Superfrieze& fz);

// Frieze files are validated structurally (positions, parities) but the
// entries are taken as given; the check subcommands decide the rest.
struct FriezeData {
    int m = 0;
    int n = 0;
    std::map<std::pair<int, int>, SuperScalar> f;
    std::map<std::pair<int, int>, SuperScalar> phi;
};
FriezeData frieze_data_from_json(const nlohmann::json& j);

// Rebuilds a Superfrieze from first rows found in a frieze dump and
// verifies every stored entry matches the rebuilt one; throws InputError
// with the first mismatch position otherwise.
Superfrieze frieze_from_json(const nlohmann::json& j);

// Parses a generator label: longest alphabetic prefix plus optional index.
GeneratorId label_to_generator(const std::string& label, Parity parity);

} // namespace superfrieze
