#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcert/certifier.hpp"

namespace nilcert {

/// Malformed input: parse errors, closure violations, endomorphism invariant failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PatternEntry {
    std::size_t row = 0;  // 1-based
    std::size_t col = 0;  // 1-based
    std::vector<Prime> inverted_primes;
};

/*
 * The JSON input document.
 *
 * matrix[r][c] is the coefficient of basis_order[r] in φ(basis_order[c]), so
 * columns are images of basis vectors. Positions absent from `pattern` are zero.
 */
struct InputDocument {
    std::string name;
    std::size_t degree = 0;
    std::vector<PatternEntry> pattern;
    std::vector<Prime> pi;
    std::vector<std::pair<std::size_t, std::size_t>> basis_order;  // 1-based
    std::vector<std::vector<std::string>> matrix;

    static InputDocument parse(const std::string& text);
    nlohmann::ordered_json to_json() const;
};

/// A document resolved into validated certifier objects.
struct ResolvedInput {
    std::shared_ptr<const Pattern> pattern;
    std::shared_ptr<const LieLattice> lattice;
    std::optional<Endomorphism> endomorphism;
};

/// Builds the pattern, lattice and endomorphism; throws InputError naming the violation.
ResolvedInput resolve(const InputDocument& doc);

struct CheckOptions {
    enum class Format { text, json };
    Format format = Format::text;
    std::optional<PrimeSet> pi_override;
    bool run_oracle = true;
    std::uint64_t seed = 1;
};

/// Randomized group-level checks of σ, reproducible from the seed.
struct CrossChecks {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    bool homomorphism = true;        // σ(gh) = σ(g)σ(h) and σ(g) ∈ N
    bool exp_log = true;             // exp(log g) = g
    std::size_t roots_checked = 0;
    bool roots = true;               // rational_power(g, 1/p) ∈ N and its p-th power is g

    bool all_passed() const { return homomorphism && exp_log && roots; }
    friend bool operator==(const CrossChecks&, const CrossChecks&) = default;
};

struct CheckReport {
    std::string name;
    std::size_t degree = 0;
    std::vector<Prime> pi;
    std::size_t rank = 0;
    std::size_t nilpotency_class = 0;
    bool pi_divisible = false;
    std::vector<std::vector<std::string>> lower_central_sections;
    std::vector<std::vector<std::string>> upper_central_sections;
    std::string abelianisation_shape;
    std::string centre_shape;

    std::string determinant;
    std::string charpoly;
    std::string abelianisation_charpoly;
    std::string centre_determinant;

    Report verdicts;
    CrossChecks cross_checks;

    bool consistent() const { return !verdicts.soundness_bug && cross_checks.all_passed(); }

    nlohmann::ordered_json to_json() const;
    static CheckReport from_json(const nlohmann::json& j);
    std::string to_text() const;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

CheckReport build_report(const InputDocument& doc, const ResolvedInput& input, const CheckOptions& options);

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_malformed = 2, exit_soundness_bug = 3 };

/// Full pipeline for one document; writes the report to `out`, diagnostics to `err`.
int run_check(const std::string& document_text, const CheckOptions& options, std::ostream& out, std::ostream& err);

/// Parses "2,3" (or "") into a prime set.
PrimeSet parse_prime_list(const std::string& text);

}  // namespace nilcert
