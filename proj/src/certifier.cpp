#include "nilcert/certifier.hpp"

#include <algorithm>
#include <sstream>

#include "nilcert/linear_algebra.hpp"

namespace nilcert {

namespace {

// Coefficients of f in the basis C(t,0), C(t,1), … via forward differences at 0.
std::vector<Rational> binomial_coefficients(const Polynomial& f)
{
    const int d = f.degree();
    if (d < 0)
        return {};
    std::vector<Rational> values;
    for (int t = 0; t <= d; ++t)
        values.push_back(f.evaluate(Rational(t)));
    std::vector<Rational> out;
    for (int k = 0; k <= d; ++k) {
        out.push_back(values.front());
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return out;
}

std::string describe_polynomial_in_t(const Polynomial& f)
{
    std::string s = f.to_string();
    std::replace(s.begin(), s.end(), 'x', 't');
    return s;
}

void check_pattern_preservation(const LieLattice& lattice, const RationalMatrix& phi)
{
    const Pattern& pattern = lattice.pattern();
    const std::size_t n = pattern.degree();
    for (std::size_t a = 0; a < lattice.dimension(); ++a) {
        const Position& source = lattice.basis()[a];
        const LocalRing& source_ring = pattern.ring(source);
        const RationalMatrix y = LieVector::from_coordinates(pattern, phi.column(a)).matrix();

        // exp(tY) = Σ t^k Y^k / k!
        std::vector<RationalMatrix> terms;
        RationalMatrix term = RationalMatrix::identity(n);
        for (std::size_t k = 1; k < n; ++k) {
            term = term * y * (Rational(1) / Rational(static_cast<long>(k)));
            terms.push_back(term);
        }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                std::vector<Rational> coeffs(1);
                for (const auto& t : terms)
                    coeffs.push_back(t(u, v));
                const Polynomial f(std::move(coeffs));
                if (f.is_zero())
                    continue;
                const LocalRing& target = pattern.ring(u, v);
                const Position where{u, v};
                const auto fail = [&](const std::string& why) {
                    throw EndomorphismError(EndomorphismError::Kind::not_pattern_preserving,
                                            "pattern-preservation violated: image of " + source.label() + "(t), t in "
                                                + source_ring.to_string() + ", has entry " + describe_polynomial_in_t(f)
                                                + " at " + where.label() + " (ring " + target.to_string() + "): " + why);
                };
                if (target.is_zero())
                    fail("position is zero in the pattern");
                if (!source_ring.inverted().is_subset_of(target.inverted()))
                    fail("conductor is zero since " + source_ring.to_string() + " is not contained in "
                         + target.to_string());
                for (const auto& b : binomial_coefficients(f))
                    if (!target.contains(b))
                        fail("binomial-basis coefficient " + b.to_string() + " is not in " + target.to_string());
            }
    }
}

bool phi_preserves_filtration(const RationalMatrix& phi, const Filtration& f)
{
    return std::all_of(f.terms.begin(), f.terms.end(), [&](const Subspace& s) { return preserves_subspace(phi, s); });
}

Hypothesis make_hypothesis(std::string name, bool passed, std::string witness)
{
    return Hypothesis{std::move(name), passed, std::move(witness)};
}

Conclusion conclude(const std::vector<Hypothesis>& hs)
{
    const bool all = std::all_of(hs.begin(), hs.end(), [](const Hypothesis& h) { return h.passed; });
    return all ? Conclusion::automorphism : Conclusion::not_applicable;
}

std::optional<Witness> find_witness(const RationalMatrix& section_map, const Section& section, std::size_t index,
                                    const LieLattice& lattice)
{
    const std::size_t dim = section.coordinates.size();
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<Rational> candidates{Rational(1)};
        RationalVector unit(dim);
        unit[c] = 1;
        const RationalVector column = solve_linear(section_map, unit);
        for (Prime p : section.shape.ring(c).inverted()) {
            long top = 0;
            for (const auto& y : column)
                if (!y.is_zero())
                    top = std::max(top, valuation(y, p));
            candidates.push_back(Rational(1) / power(Rational(static_cast<long>(p)), static_cast<unsigned>(top + 1)));
        }
        for (const auto& t : candidates) {
            RationalVector target(dim);
            target[c] = t;
            if (!contains(section.shape, solve_linear(section_map, target)))
                return Witness{lattice.basis()[section.coordinates[c]], t, index};
        }
    }
    return std::nullopt;
}

}  // namespace

Endomorphism validate_endomorphism(std::shared_ptr<const LieLattice> lattice, RationalMatrix phi)
{
    using Kind = EndomorphismError::Kind;
    if (!lattice)
        throw std::invalid_argument("endomorphism needs a lattice");
    const std::size_t dim = lattice->dimension();
    if (phi.rows() != dim || phi.cols() != dim)
        throw EndomorphismError(Kind::size_mismatch, "endomorphism matrix must be " + std::to_string(dim) + "x"
                                                         + std::to_string(dim));

    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            const RationalVector lhs = phi * lattice->bracket(lattice->unit(a), lattice->unit(b));
            const RationalVector rhs = lattice->bracket(phi.column(a), phi.column(b));
            if (lhs != rhs)
                throw EndomorphismError(Kind::not_lie_homomorphism,
                                        "not a Lie homomorphism: phi[" + lattice->basis()[a].label() + ","
                                            + lattice->basis()[b].label() + "] != [phi "
                                            + lattice->basis()[a].label() + ", phi " + lattice->basis()[b].label()
                                            + "]");
        }

    Rational det = nilcert::determinant(phi);
    if (det.is_zero())
        throw EndomorphismError(Kind::not_injective, "not injective: det(phi) = 0");

    check_pattern_preservation(*lattice, phi);

    // An injective Lie endomorphism of a finite-dimensional nilpotent algebra
    // is an automorphism, so it fixes every characteristic ideal.
    if (!phi_preserves_filtration(phi, lattice->lower_central())
        || !phi_preserves_filtration(phi, lattice->upper_central()))
        throw InternalInconsistency("automorphism of V fails to preserve a central series");

    Endomorphism e;
    e.lattice_ = std::move(lattice);
    e.phi_ = std::move(phi);
    e.determinant_ = std::move(det);
    for (const auto& s : e.lattice_->lower_central().sections)
        e.lower_maps_.push_back(induced_section_map(e.phi_, s));
    for (const auto& s : e.lattice_->upper_central().sections)
        e.upper_maps_.push_back(induced_section_map(e.phi_, s));
    return e;
}

GroupElement Endomorphism::apply(const GroupElement& g) const
{
    const Pattern& p = lattice_->pattern();
    const RationalVector x = log(g).coordinates(p);
    const RationalMatrix image = exp(LieVector::from_coordinates(p, phi_ * x));
    return GroupElement(g.pattern_ptr(), image);
}

Endomorphism compose(const Endomorphism& e, const Endomorphism& f)
{
    if (e.lattice_ptr() != f.lattice_ptr() && !(e.lattice().pattern() == f.lattice().pattern()))
        throw std::invalid_argument("composing endomorphisms of different lattices");
    return validate_endomorphism(e.lattice_ptr(), e.phi() * f.phi());
}

bool coefficients_in(const Polynomial& p, const PrimeSet& pi)
{
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [&](const Rational& c) { return lies_in(c, pi); });
}

bool is_pi_like(const Endomorphism& e, const PrimeSet& pi, PiLikeRoute route)
{
    const auto by_charpoly = [&] { return coefficients_in(characteristic_polynomial(e.phi()), pi); };
    const auto by_abelianisation = [&] {
        return coefficients_in(characteristic_polynomial(e.abelianisation_map()), pi);
    };
    switch (route) {
    case PiLikeRoute::charpoly:
        return by_charpoly();
    case PiLikeRoute::abelianisation:
        return by_abelianisation();
    case PiLikeRoute::both: {
        const bool a = by_charpoly();
        const bool b = by_abelianisation();
        if (a != b)
            throw InternalInconsistency("pi-like routes disagree: charpoly says " + std::string(a ? "yes" : "no")
                                        + ", abelianisation says " + (b ? "yes" : "no"));
        return a;
    }
    }
    return false;
}

Rational centre_determinant(const Endomorphism& e)
{
    return nilcert::determinant(e.centre_map());
}

Verdict check_central_criterion(const Endomorphism& e, const PrimeSet& pi)
{
    Verdict v;
    v.criterion = "central";

    std::string missing;
    for (const auto& pos : e.lattice().basis())
        if (!pi.is_subset_of(e.lattice().pattern().ring(pos).inverted()))
            missing += (missing.empty() ? "" : ",") + pos.label();
    v.hypotheses.push_back(make_hypothesis("pi_divisible", missing.empty(),
                                           missing.empty() ? "every position contains Z[1/pi]"
                                                           : "positions not pi-divisible: " + missing));

    const bool pi_like = is_pi_like(e, pi, PiLikeRoute::both);
    v.hypotheses.push_back(make_hypothesis(
        "pi_like", pi_like, "abelianisation charpoly " + characteristic_polynomial(e.abelianisation_map()).to_string()));

    const Rational det = centre_determinant(e);
    v.hypotheses.push_back(make_hypothesis("centre_det_pi_unit", is_pi_unit(det, pi), "det = " + det.to_string()));

    v.conclusion = conclude(v.hypotheses);
    return v;
}

Verdict check_tfab_criterion(const Endomorphism& e)
{
    Verdict v;
    v.criterion = "tfab";
    const auto& section = e.lattice().abelianisation();
    const auto bad = surjectivity_failure_prime(e.abelianisation_map(), section.shape);
    v.hypotheses.push_back(make_hypothesis("tfab_surjective", !bad.has_value(),
                                           bad ? "not surjective locally at p = " + std::to_string(*bad)
                                               : "abelianisation map is onto " + section.shape.to_string()));
    v.conclusion = conclude(v.hypotheses);
    return v;
}

OracleResult surjectivity_oracle(const Endomorphism& e)
{
    OracleResult r;
    r.outcome = OracleOutcome::automorphism;
    const auto& sections = e.lattice().lower_central().sections;
    for (std::size_t k = 0; k < sections.size(); ++k) {
        const bool onto = map_surjective(e.lower_section_maps()[k], sections[k].shape);
        r.section_surjective.push_back(onto);
        if (onto || r.witness)
            continue;
        r.outcome = OracleOutcome::proper_injection;
        r.witness = find_witness(e.lower_section_maps()[k], sections[k], k, e.lattice());
        if (!r.witness)
            throw InternalInconsistency("section map is not surjective but no generator lacks a preimage");
    }
    return r;
}

Report full_report(const Endomorphism& e, const PrimeSet& pi, bool run_oracle)
{
    Report r;
    r.central = check_central_criterion(e, pi);
    r.tfab = check_tfab_criterion(e);
    if (run_oracle) {
        r.oracle = surjectivity_oracle(e);
        const bool claimed = r.central.conclusion == Conclusion::automorphism
                             || r.tfab.conclusion == Conclusion::automorphism;
        r.soundness_bug = claimed && r.oracle.outcome == OracleOutcome::proper_injection;
    }
    return r;
}

RationalMatrix hom_action(const RationalMatrix& phi_ab, const RationalMatrix& phi_centre)
{
    return kronecker(phi_centre, inverse(phi_ab).transposed());
}

RationalMatrix hom_inverse_action(const RationalMatrix& phi_ab, const RationalMatrix& phi_centre)
{
    return kronecker(inverse(phi_centre), phi_ab.transposed());
}

std::string to_string(Conclusion c)
{
    return c == Conclusion::automorphism ? "automorphism" : "not-applicable";
}

std::string to_string(OracleOutcome o)
{
    switch (o) {
    case OracleOutcome::automorphism:
        return "automorphism";
    case OracleOutcome::proper_injection:
        return "proper-injection";
    case OracleOutcome::skipped:
        return "skipped";
    }
    return "skipped";
}

}  // namespace nilcert
