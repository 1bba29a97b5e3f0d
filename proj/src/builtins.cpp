#include "nilcert/builtins.hpp"

#include <algorithm>

namespace nilcert {

namespace {

// Heisenberg documents use basis order E12, E13, E23.
const char* heisenberg_phi1 = R"({
  "name": "heisenberg-phi1",
  "degree": 3,
  "pattern": [
    {"row": 1, "col": 2, "inverted_primes": []},
    {"row": 1, "col": 3, "inverted_primes": [2]},
    {"row": 2, "col": 3, "inverted_primes": [2]}
  ],
  "pi": [],
  "endomorphism": {
    "basis_order": [[1, 2], [1, 3], [2, 3]],
    "matrix": [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1/2"]]
  }
})";

const char* heisenberg_phi2 = R"({
  "name": "heisenberg-phi2",
  "degree": 3,
  "pattern": [
    {"row": 1, "col": 2, "inverted_primes": []},
    {"row": 1, "col": 3, "inverted_primes": [2]},
    {"row": 2, "col": 3, "inverted_primes": [2]}
  ],
  "pi": [],
  "endomorphism": {
    "basis_order": [[1, 2], [1, 3], [2, 3]],
    "matrix": [["2", "0", "0"], ["0", "2", "0"], ["0", "0", "1"]]
  }
})";

// E23 needs the central correction E13/2: exp(t(E12 + E23)) has t^2/2 in the corner.
const char* heisenberg_z = R"({
  "name": "heisenberg-z",
  "degree": 3,
  "pattern": [
    {"row": 1, "col": 2, "inverted_primes": []},
    {"row": 1, "col": 3, "inverted_primes": []},
    {"row": 2, "col": 3, "inverted_primes": []}
  ],
  "pi": [],
  "endomorphism": {
    "basis_order": [[1, 2], [1, 3], [2, 3]],
    "matrix": [["2", "0", "1"], ["0", "1", "1/2"], ["1", "0", "1"]]
  }
})";

const char* heisenberg_z_half_anosov = R"({
  "name": "heisenberg-z-half-anosov",
  "degree": 3,
  "pattern": [
    {"row": 1, "col": 2, "inverted_primes": [2]},
    {"row": 1, "col": 3, "inverted_primes": [2]},
    {"row": 2, "col": 3, "inverted_primes": [2]}
  ],
  "pi": [2],
  "endomorphism": {
    "basis_order": [[1, 2], [1, 3], [2, 3]],
    "matrix": [["2", "0", "0"], ["0", "2", "0"], ["0", "0", "1"]]
  }
})";

// φ = (E_ij ↦ -E_{5-j,5-i}) ∘ Ad(1 + E12 + E23 + E34), canonical basis order.
const char* ut4_integer = R"({
  "name": "ut4-integer",
  "degree": 4,
  "pattern": [
    {"row": 1, "col": 2, "inverted_primes": []},
    {"row": 2, "col": 3, "inverted_primes": []},
    {"row": 3, "col": 4, "inverted_primes": []},
    {"row": 1, "col": 3, "inverted_primes": []},
    {"row": 2, "col": 4, "inverted_primes": []},
    {"row": 1, "col": 4, "inverted_primes": []}
  ],
  "pi": [],
  "endomorphism": {
    "basis_order": [[1, 2], [2, 3], [3, 4], [1, 3], [2, 4], [1, 4]],
    "matrix": [
      ["0", "0", "-1", "0", "0", "0"],
      ["0", "-1", "0", "0", "0", "0"],
      ["-1", "0", "0", "0", "0", "0"],
      ["0", "1", "-1", "0", "-1", "0"],
      ["1", "-1", "0", "-1", "0", "0"],
      ["-1", "1", "0", "1", "-1", "-1"]
    ]
  }
})";

}  // namespace

const std::vector<BuiltinExample>& builtin_examples()
{
    static const std::vector<BuiltinExample> examples = {
        {"heisenberg-phi1", "Heisenberg group with rings Z, Z[1/2], Z[1/2]; E12 -> 2E12, E23 -> E23/2",
         heisenberg_phi1},
        {"heisenberg-phi2", "same group; E12 -> 2E12, E13 -> 2E13",
         heisenberg_phi2},
        {"heisenberg-z", "Heisenberg(Z), abelianisation map [[2,1],[1,1]], centre fixed", heisenberg_z},
        {"heisenberg-z-half-anosov", "Heisenberg group over Z[1/2] with pi = {2}; E12 -> 2E12, E13 -> 2E13", heisenberg_z_half_anosov},
        {"ut4-integer", "UT4(Z), transpose-inverse flip composed with an inner automorphism", ut4_integer},
    };
    return examples;
}

std::optional<BuiltinExample> find_builtin(const std::string& name)
{
    const auto& all = builtin_examples();
    const auto it = std::find_if(all.begin(), all.end(), [&](const BuiltinExample& e) { return e.name == name; });
    if (it == all.end())
        return std::nullopt;
    return *it;
}

}  // namespace nilcert
