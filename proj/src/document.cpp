#include "nilcert/document.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "nilcert/linear_algebra.hpp"

namespace nilcert {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <typename T>
T field(const json& j, const char* key)
{
    if (!j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field \"") + key + "\" has the wrong type");
    }
}

std::vector<std::string> section_labels(const LieLattice& lattice, const Section& s)
{
    std::vector<std::string> out;
    for (auto c : s.coordinates)
        out.push_back(lattice.basis()[c].label());
    return out;
}

ordered_json verdict_json(const Verdict& v)
{
    ordered_json hs = ordered_json::array();
    for (const auto& h : v.hypotheses)
        hs.push_back({{"name", h.name}, {"pass", h.passed}, {"witness", h.witness}});
    return {{"criterion", v.criterion}, {"hypotheses", hs}, {"conclusion", to_string(v.conclusion)}};
}

Verdict verdict_from_json(const json& j)
{
    Verdict v;
    v.criterion = j.at("criterion").get<std::string>();
    for (const auto& h : j.at("hypotheses"))
        v.hypotheses.push_back({h.at("name").get<std::string>(), h.at("pass").get<bool>(), h.at("witness").get<std::string>()});
    v.conclusion = j.at("conclusion").get<std::string>() == "automorphism" ? Conclusion::automorphism
                                                                          : Conclusion::not_applicable;
    return v;
}

OracleOutcome outcome_from_string(const std::string& s)
{
    if (s == "automorphism")
        return OracleOutcome::automorphism;
    if (s == "proper-injection")
        return OracleOutcome::proper_injection;
    return OracleOutcome::skipped;
}

// Random member: a product of elementary factors with small values in each ring.
GroupElement random_member(const std::shared_ptr<const Pattern>& pattern, std::mt19937_64& rng)
{
    GroupElement g = GroupElement::identity(pattern);
    for (const auto& pos : pattern->positions()) {
        Rational t(static_cast<long>(rng() % 7) - 3);
        for (Prime p : pattern->ring(pos).inverted())
            if (rng() % 2)
                t /= Rational(static_cast<long>(p));
        g = multiply(g, GroupElement::elementary(pattern, pos, t));
    }
    return g;
}

GroupElement integer_power(const GroupElement& g, unsigned k)
{
    GroupElement acc = GroupElement::identity(g.pattern_ptr());
    for (unsigned i = 0; i < k; ++i)
        acc = multiply(acc, g);
    return acc;
}

CrossChecks run_cross_checks(const ResolvedInput& input, const PrimeSet& pi, std::uint64_t seed)
{
    CrossChecks c;
    c.seed = seed;
    c.samples = 16;
    std::mt19937_64 rng(seed);
    const Endomorphism& e = *input.endomorphism;
    const bool divisible = !pi.empty() && is_pi_divisible(*input.pattern, pi);
    auto root_pattern = std::make_shared<Pattern>(*input.pattern);
    root_pattern->set_pi(pi);
    for (std::size_t s = 0; s < c.samples; ++s) {
        const GroupElement g = random_member(input.pattern, rng);
        const GroupElement h = random_member(input.pattern, rng);
        try {
            if (!(e.apply(multiply(g, h)) == multiply(e.apply(g), e.apply(h))))
                c.homomorphism = false;
        } catch (const std::invalid_argument&) {
            c.homomorphism = false;  // σ(g) left the pattern
        }
        if (!(exp(log(g)) == g.matrix()))
            c.exp_log = false;
        if (divisible) {
            const GroupElement gr(root_pattern, g.matrix());
            const Prime p = pi.primes()[rng() % pi.size()];
            ++c.roots_checked;
            try {
                const GroupElement root = rational_power(gr, Rational(1) / Rational(static_cast<long>(p)));
                if (!(integer_power(root, static_cast<unsigned>(p)) == gr))
                    c.roots = false;
            } catch (const std::exception&) {
                c.roots = false;
            }
        }
    }
    return c;
}

}  // namespace

PrimeSet parse_prime_list(const std::string& text)
{
    std::vector<Prime> primes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty())
            continue;
        if (!std::all_of(item.begin(), item.end(), ::isdigit))
            throw InputError("malformed prime list \"" + text + "\"");
        primes.push_back(std::stoull(item));
    }
    try {
        return PrimeSet(std::move(primes));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

InputDocument InputDocument::parse(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InputError("document must be a JSON object");
    InputDocument d;
    d.name = field<std::string>(j, "name");
    d.degree = field<std::size_t>(j, "degree");
    for (const auto& entry : field<json>(j, "pattern")) {
        PatternEntry p;
        p.row = field<std::size_t>(entry, "row");
        p.col = field<std::size_t>(entry, "col");
        p.inverted_primes = field<std::vector<Prime>>(entry, "inverted_primes");
        d.pattern.push_back(std::move(p));
    }
    d.pi = field<std::vector<Prime>>(j, "pi");
    const json endo = field<json>(j, "endomorphism");
    for (const auto& pair : field<std::vector<std::vector<std::size_t>>>(endo, "basis_order")) {
        if (pair.size() != 2)
            throw InputError("basis_order entries must be [row, col] pairs");
        d.basis_order.emplace_back(pair[0], pair[1]);
    }
    const json matrix = field<json>(endo, "matrix");
    if (!matrix.is_array())
        throw InputError("matrix must be a list of rows");
    for (const auto& row : matrix) {
        if (!row.is_array())
            throw InputError("matrix rows must be lists");
        std::vector<std::string> r;
        for (const auto& e : row) {
            if (!e.is_string())
                throw InputError("matrix entries must be rational strings, not numbers");
            r.push_back(e.get<std::string>());
        }
        d.matrix.push_back(std::move(r));
    }
    return d;
}

ordered_json InputDocument::to_json() const
{
    ordered_json pat = ordered_json::array();
    for (const auto& p : pattern)
        pat.push_back({{"row", p.row}, {"col", p.col}, {"inverted_primes", p.inverted_primes}});
    ordered_json order = ordered_json::array();
    for (const auto& [r, c] : basis_order)
        order.push_back({r, c});
    return {{"name", name},
            {"degree", degree},
            {"pattern", pat},
            {"pi", pi},
            {"endomorphism", {{"basis_order", order}, {"matrix", matrix}}}};
}

ResolvedInput resolve(const InputDocument& doc)
{
    if (doc.degree < 2)
        throw InputError("degree must be at least 2");
    PrimeSet pi;
    try {
        pi = PrimeSet(doc.pi);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("pi: ") + e.what());
    }
    auto pattern = std::make_shared<Pattern>(doc.degree, pi);
    std::vector<Position> seen;
    for (const auto& entry : doc.pattern) {
        if (entry.row < 1 || entry.row >= entry.col || entry.col > doc.degree)
            throw InputError("pattern position (" + std::to_string(entry.row) + "," + std::to_string(entry.col)
                             + ") is not strictly upper triangular");
        const Position pos{entry.row - 1, entry.col - 1};
        if (std::find(seen.begin(), seen.end(), pos) != seen.end())
            throw InputError("pattern position " + pos.label() + " listed twice");
        seen.push_back(pos);
        try {
            pattern->set_ring(pos.row, pos.col, LocalRing(PrimeSet(entry.inverted_primes)));
        } catch (const std::invalid_argument& e) {
            throw InputError("pattern position " + pos.label() + ": " + e.what());
        }
    }
    const auto violations = validate_pattern(*pattern);
    if (!violations.empty()) {
        std::string msg = "pattern closure violated:";
        for (const auto& v : violations)
            msg += " [" + v.reason + "]";
        throw InputError(msg);
    }

    ResolvedInput out;
    out.pattern = pattern;
    out.lattice = std::make_shared<LieLattice>(pattern);
    const LieLattice& lattice = *out.lattice;

    const std::size_t dim = lattice.dimension();
    if (doc.basis_order.size() != dim)
        throw InputError("basis_order must list exactly the " + std::to_string(dim) + " nonzero positions");
    std::vector<std::size_t> to_canonical;
    for (const auto& [r, c] : doc.basis_order) {
        if (r < 1 || c < 1)
            throw InputError("basis_order positions are 1-based");
        const auto idx = lattice.index_of(Position{r - 1, c - 1});
        if (!idx)
            throw InputError("basis_order lists (" + std::to_string(r) + "," + std::to_string(c)
                             + ") which is not a nonzero pattern position");
        if (std::find(to_canonical.begin(), to_canonical.end(), *idx) != to_canonical.end())
            throw InputError("basis_order repeats a position");
        to_canonical.push_back(*idx);
    }
    if (doc.matrix.size() != dim)
        throw InputError("endomorphism matrix must have " + std::to_string(dim) + " rows");
    RationalMatrix phi(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (doc.matrix[r].size() != dim)
            throw InputError("endomorphism matrix row " + std::to_string(r + 1) + " must have " + std::to_string(dim)
                             + " entries");
        for (std::size_t c = 0; c < dim; ++c) {
            try {
                phi(to_canonical[r], to_canonical[c]) = Rational::parse(doc.matrix[r][c]);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }
    }
    try {
        out.endomorphism = validate_endomorphism(out.lattice, std::move(phi));
    } catch (const EndomorphismError& e) {
        throw InputError(e.what());
    }
    return out;
}

CheckReport build_report(const InputDocument& doc, const ResolvedInput& input, const CheckOptions& options)
{
    const PrimeSet pi = options.pi_override ? *options.pi_override : input.pattern->pi();
    const LieLattice& lattice = *input.lattice;
    const Endomorphism& e = *input.endomorphism;

    CheckReport r;
    r.name = doc.name;
    r.degree = doc.degree;
    r.pi = pi.primes();
    r.rank = lattice.dimension();
    r.nilpotency_class = lattice.nilpotency_class();
    r.pi_divisible = is_pi_divisible(*input.pattern, pi);
    for (const auto& s : lattice.lower_central().sections)
        r.lower_central_sections.push_back(section_labels(lattice, s));
    for (const auto& s : lattice.upper_central().sections)
        r.upper_central_sections.push_back(section_labels(lattice, s));
    r.abelianisation_shape = lattice.abelianisation().shape.to_string();
    r.centre_shape = lattice.centre().shape.to_string();
    r.determinant = e.determinant().to_string();
    r.charpoly = characteristic_polynomial(e.phi()).to_string();
    r.abelianisation_charpoly = characteristic_polynomial(e.abelianisation_map()).to_string();
    r.centre_determinant = centre_determinant(e).to_string();
    r.verdicts = full_report(e, pi, options.run_oracle);
    r.cross_checks = run_cross_checks(input, pi, options.seed);
    return r;
}

ordered_json CheckReport::to_json() const
{
    ordered_json oracle = {{"result", to_string(verdicts.oracle.outcome)}};
    if (verdicts.oracle.witness) {
        const Witness& w = *verdicts.oracle.witness;
        oracle["witness"] = {{"position", w.position.label()},
                             {"row", w.position.row + 1},
                             {"col", w.position.col + 1},
                             {"value", w.value.to_string()},
                             {"section", w.section + 1}};
    } else {
        oracle["witness"] = nullptr;
    }
    oracle["section_surjective"] = verdicts.oracle.section_surjective;

    return {{"name", name},
            {"degree", degree},
            {"pi", pi},
            {"pattern",
             {{"rank", rank},
              {"class", nilpotency_class},
              {"pi_divisible", pi_divisible},
              {"lower_central", lower_central_sections},
              {"upper_central", upper_central_sections},
              {"abelianisation_shape", abelianisation_shape},
              {"centre_shape", centre_shape}}},
            {"endomorphism",
             {{"valid", true},
              {"determinant", determinant},
              {"charpoly", charpoly},
              {"abelianisation_charpoly", abelianisation_charpoly},
              {"centre_determinant", centre_determinant}}},
            {"criteria", {{"central", verdict_json(verdicts.central)}, {"tfab", verdict_json(verdicts.tfab)}}},
            {"oracle", oracle},
            {"soundness_bug", verdicts.soundness_bug},
            {"cross_checks",
             {{"seed", cross_checks.seed},
              {"samples", cross_checks.samples},
              {"homomorphism", cross_checks.homomorphism},
              {"exp_log", cross_checks.exp_log},
              {"roots_checked", cross_checks.roots_checked},
              {"roots", cross_checks.roots}}},
            {"consistency", consistent() ? "consistent" : "SOUNDNESS-BUG"}};
}

CheckReport CheckReport::from_json(const json& j)
{
    CheckReport r;
    r.name = j.at("name").get<std::string>();
    r.degree = j.at("degree").get<std::size_t>();
    r.pi = j.at("pi").get<std::vector<Prime>>();
    const json& pat = j.at("pattern");
    r.rank = pat.at("rank").get<std::size_t>();
    r.nilpotency_class = pat.at("class").get<std::size_t>();
    r.pi_divisible = pat.at("pi_divisible").get<bool>();
    r.lower_central_sections = pat.at("lower_central").get<std::vector<std::vector<std::string>>>();
    r.upper_central_sections = pat.at("upper_central").get<std::vector<std::vector<std::string>>>();
    r.abelianisation_shape = pat.at("abelianisation_shape").get<std::string>();
    r.centre_shape = pat.at("centre_shape").get<std::string>();
    const json& endo = j.at("endomorphism");
    r.determinant = endo.at("determinant").get<std::string>();
    r.charpoly = endo.at("charpoly").get<std::string>();
    r.abelianisation_charpoly = endo.at("abelianisation_charpoly").get<std::string>();
    r.centre_determinant = endo.at("centre_determinant").get<std::string>();
    r.verdicts.central = verdict_from_json(j.at("criteria").at("central"));
    r.verdicts.tfab = verdict_from_json(j.at("criteria").at("tfab"));
    const json& oracle = j.at("oracle");
    r.verdicts.oracle.outcome = outcome_from_string(oracle.at("result").get<std::string>());
    r.verdicts.oracle.section_surjective = oracle.at("section_surjective").get<std::vector<bool>>();
    if (!oracle.at("witness").is_null()) {
        const json& w = oracle.at("witness");
        r.verdicts.oracle.witness =
            Witness{Position{w.at("row").get<std::size_t>() - 1, w.at("col").get<std::size_t>() - 1},
                    Rational::parse(w.at("value").get<std::string>()), w.at("section").get<std::size_t>() - 1};
    }
    r.verdicts.soundness_bug = j.at("soundness_bug").get<bool>();
    const json& cc = j.at("cross_checks");
    r.cross_checks.seed = cc.at("seed").get<std::uint64_t>();
    r.cross_checks.samples = cc.at("samples").get<std::size_t>();
    r.cross_checks.homomorphism = cc.at("homomorphism").get<bool>();
    r.cross_checks.exp_log = cc.at("exp_log").get<bool>();
    r.cross_checks.roots_checked = cc.at("roots_checked").get<std::size_t>();
    r.cross_checks.roots = cc.at("roots").get<bool>();
    return r;
}

std::string CheckReport::to_text() const
{
    std::ostringstream os;
    const auto yes = [](bool b) { return b ? "yes" : "no"; };
    os << "name: " << name << "\n";
    os << "pi: " << PrimeSet(pi).to_string() << "\n";
    os << "pattern: degree " << degree << ", rank " << rank << ", class " << nilpotency_class
       << ", pi-divisible " << yes(pi_divisible) << "\n";
    os << "  lower central sections:";
    for (const auto& s : lower_central_sections) {
        os << " [";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i ? " " : "") << s[i];
        os << "]";
    }
    os << "\n  upper central sections:";
    for (const auto& s : upper_central_sections) {
        os << " [";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i ? " " : "") << s[i];
        os << "]";
    }
    os << "\n  abelianisation shape " << abelianisation_shape << ", centre shape " << centre_shape << "\n";
    os << "endomorphism: valid (Lie homomorphism, injective, pattern-preserving)\n";
    os << "  det " << determinant << "\n  charpoly " << charpoly << "\n  abelianisation charpoly "
       << abelianisation_charpoly << "\n  centre determinant " << centre_determinant << "\n";
    for (const Verdict* v : {&verdicts.central, &verdicts.tfab}) {
        os << v->criterion << ": " << to_string(v->conclusion) << "\n";
        for (const auto& h : v->hypotheses)
            os << "  [" << (h.passed ? "pass" : "fail") << "] " << h.name << ": " << h.witness << "\n";
    }
    os << "oracle: " << to_string(verdicts.oracle.outcome);
    if (verdicts.oracle.witness) {
        const Witness& w = *verdicts.oracle.witness;
        os << ", witness e" << w.position.row + 1 << w.position.col + 1 << "(" << w.value << ") in section "
           << w.section + 1;
    }
    os << "\n";
    os << "cross-checks (seed " << cross_checks.seed << ", " << cross_checks.samples << " samples): homomorphism "
       << yes(cross_checks.homomorphism) << ", exp/log " << yes(cross_checks.exp_log) << ", roots "
       << yes(cross_checks.roots) << " (" << cross_checks.roots_checked << " checked)\n";
    os << "consistency: " << (consistent() ? "consistent" : "SOUNDNESS-BUG") << "\n";
    return os.str();
}

int run_check(const std::string& document_text, const CheckOptions& options, std::ostream& out, std::ostream& err)
{
    try {
        const InputDocument doc = InputDocument::parse(document_text);
        const ResolvedInput input = resolve(doc);
        const CheckReport report = build_report(doc, input, options);
        if (options.format == CheckOptions::Format::json)
            out << report.to_json().dump(2) << "\n";
        else
            out << report.to_text();
        if (!report.consistent()) {
            err << "SOUNDNESS-BUG: criterion and oracle disagree or a cross-check failed\n";
            return exit_soundness_bug;
        }
        return exit_ok;
    } catch (const InputError& e) {
        err << "malformed input: " << e.what() << "\n";
        return exit_malformed;
    } catch (const std::logic_error& e) {
        err << "SOUNDNESS-BUG: " << e.what() << "\n";
        return exit_soundness_bug;
    }
}

}  // namespace nilcert
