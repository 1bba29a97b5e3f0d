#include <gtest/gtest.h>

#include "nilcert/certifier.hpp"
#include "nilcert/linear_algebra.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace nilcert;

namespace {

// Canonical Heisenberg basis order: E12, E23, E13.
RationalMatrix diag3(Rational a, Rational b, Rational c)
{
    return RationalMatrix{{a, 0, 0}, {0, b, 0}, {0, 0, c}};
}

std::shared_ptr<const LieLattice> mixed_heisenberg()
{
    return corpus::heisenberg({}, {2}, {2});
}

Endomorphism phi1()
{
    return validate_endomorphism(mixed_heisenberg(), diag3(2, Rational(1) / 2, 1));
}

Endomorphism phi2(std::shared_ptr<const LieLattice> l = mixed_heisenberg())
{
    return validate_endomorphism(std::move(l), diag3(2, 1, 2));
}

EndomorphismError::Kind rejection(std::shared_ptr<const LieLattice> l, RationalMatrix m)
{
    try {
        validate_endomorphism(std::move(l), std::move(m));
    } catch (const EndomorphismError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted";
    return EndomorphismError::Kind::size_mismatch;
}

}  // namespace

TEST(Validate, Phi1AndPhi2)
{
    const Endomorphism e = phi1();
    EXPECT_EQ(e.determinant(), Rational(1));
    // σ on (1 a c; 1 b; 1) gives (1 2a c; 1 b/2; 1).
    const auto& p = e.lattice().pattern_ptr();
    const GroupElement g(p, RationalMatrix{{1, 3, Rational(5) / 4}, {0, 1, Rational(7) / 2}, {0, 0, 1}});
    EXPECT_EQ(e.apply(g).matrix(), (RationalMatrix{{1, 6, Rational(5) / 4}, {0, 1, Rational(7) / 4}, {0, 0, 1}}));

    const Endomorphism f = phi2();
    EXPECT_EQ(f.apply(g).matrix(), (RationalMatrix{{1, 6, Rational(5) / 2}, {0, 1, Rational(7) / 2}, {0, 0, 1}}));
}

TEST(Validate, Rejections)
{
    const auto n = mixed_heisenberg();
    // E12 ↔ E23 swap: Z[1/2] lands in the Z position.
    const RationalMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
    EXPECT_EQ(rejection(n, swap), EndomorphismError::Kind::not_pattern_preserving);
    try {
        validate_endomorphism(n, swap);
    } catch (const EndomorphismError& e) {
        EXPECT_NE(std::string(e.what()).find("E12"), std::string::npos) << e.what();
    }
    EXPECT_EQ(rejection(n, diag3(2, 1, 3)), EndomorphismError::Kind::not_lie_homomorphism);
    EXPECT_EQ(rejection(n, diag3(0, 1, 0)), EndomorphismError::Kind::not_injective);
    EXPECT_EQ(rejection(n, RationalMatrix::identity(2)), EndomorphismError::Kind::size_mismatch);
}

// t(t-1)/2 is integer-valued although its coefficients are not integers.
TEST(Validate, BinomialBasisCheck)
{
    const auto h = corpus::heisenberg({}, {}, {});
    // E12 ↦ E12 + E23 - E13/2, E23 ↦ E23, E13 ↦ E13.
    const RationalMatrix good{{1, 0, 0}, {1, 1, 0}, {Rational(-1) / 2, 0, 1}};
    EXPECT_NO_THROW(validate_endomorphism(h, good));
    const RationalMatrix bad{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}};  // exp(t(E12+E23)) has t²/2 at E13
    EXPECT_EQ(rejection(h, bad), EndomorphismError::Kind::not_pattern_preserving);
    const RationalMatrix quarter{{1, 0, 0}, {1, 1, 0}, {Rational(1) / 4, 0, 1}};
    EXPECT_EQ(rejection(h, quarter), EndomorphismError::Kind::not_pattern_preserving);
}

TEST(Validate, AcceptedMapsKeepProbesInPattern)
{
    const auto instances = corpus::generate(101, 300);
    for (const auto& inst : instances) {
        const auto& l = inst.endo.lattice();
        for (std::size_t a = 0; a < l.dimension(); ++a)
            for (const auto& t : oracle::ring_probes(l.shape().ring(a), 4)) {
                RationalVector x(l.dimension());
                x[a] = t;
                const RationalMatrix img =
                    oracle::series_exp(LieVector::from_coordinates(l.pattern(), inst.endo.apply(x)).matrix());
                ASSERT_TRUE(oracle::in_pattern(l.pattern(), img)) << inst.endo.phi();
            }
    }
}

TEST(PiLike, Examples)
{
    EXPECT_FALSE(is_pi_like(phi1(), {}));
    EXPECT_FALSE(is_pi_like(phi1(), {}, PiLikeRoute::charpoly));
    EXPECT_TRUE(is_pi_like(phi1(), {2}));
    EXPECT_TRUE(is_pi_like(phi2(), {}));
    const Endomorphism id = validate_endomorphism(mixed_heisenberg(), RationalMatrix::identity(3));
    for (const PrimeSet& pi : {PrimeSet{}, PrimeSet{2}, PrimeSet{3, 5}})
        EXPECT_TRUE(is_pi_like(id, pi));
    EXPECT_EQ(characteristic_polynomial(phi1().abelianisation_map()).coefficient(1), Rational(-5) / 2);
}

TEST(CentreDeterminant, Examples)
{
    EXPECT_EQ(centre_determinant(phi1()), Rational(1));
    EXPECT_EQ(centre_determinant(phi2()), Rational(2));
    EXPECT_EQ(centre_determinant(validate_endomorphism(mixed_heisenberg(), RationalMatrix::identity(3))), Rational(1));
    const Endomorphism sq = compose(phi2(), phi2());
    EXPECT_EQ(centre_determinant(sq), Rational(4));
}

TEST(CentralCriterion, HeisenbergExamples)
{
    const Verdict v2 = check_central_criterion(phi2(), {});
    EXPECT_EQ(v2.criterion, "central");
    EXPECT_EQ(v2.conclusion, Conclusion::not_applicable);
    ASSERT_EQ(v2.hypotheses.size(), 3u);
    EXPECT_TRUE(v2.hypotheses[0].passed);
    EXPECT_TRUE(v2.hypotheses[1].passed);
    EXPECT_FALSE(v2.hypotheses[2].passed);
    EXPECT_EQ(v2.hypotheses[2].name, "centre_det_pi_unit");

    const Verdict v1 = check_central_criterion(phi1(), {});
    EXPECT_EQ(v1.conclusion, Conclusion::not_applicable);
    EXPECT_FALSE(v1.hypotheses[1].passed);
    EXPECT_EQ(v1.hypotheses[1].name, "pi_like");

    const auto half = corpus::heisenberg({2}, {2}, {2}, {2});
    const Verdict v = check_central_criterion(phi2(half), {2});
    EXPECT_EQ(v.conclusion, Conclusion::automorphism);
    for (const auto& h : v.hypotheses)
        EXPECT_TRUE(h.passed) << h.name;
}

TEST(TfabCriterion, Examples)
{
    const auto hz = corpus::heisenberg({}, {}, {});
    // ab map [[1,1],[0,1]]: E23 ↦ E12 + E23, which needs E13/2 to stay integral.
    const Endomorphism shear = validate_endomorphism(hz, RationalMatrix{{1, 1, 0}, {0, 1, 0}, {0, Rational(1) / 2, 1}});
    EXPECT_EQ(check_tfab_criterion(shear).conclusion, Conclusion::automorphism);
    EXPECT_EQ(surjectivity_oracle(shear).outcome, OracleOutcome::automorphism);
    const Verdict v1 = check_tfab_criterion(phi1());
    EXPECT_EQ(v1.criterion, "tfab");
    EXPECT_EQ(v1.conclusion, Conclusion::not_applicable);
    EXPECT_EQ(v1.hypotheses.at(0).name, "tfab_surjective");
    EXPECT_EQ(check_tfab_criterion(validate_endomorphism(hz, RationalMatrix::identity(3))).conclusion,
              Conclusion::automorphism);
}

TEST(Oracle, Examples)
{
    const OracleResult r1 = surjectivity_oracle(phi1());
    EXPECT_EQ(r1.outcome, OracleOutcome::proper_injection);
    ASSERT_TRUE(r1.witness);
    EXPECT_EQ(r1.witness->position.label(), "E12");
    EXPECT_EQ(r1.witness->value, Rational(1));
    EXPECT_FALSE(oracle::preimage_in_pattern(phi1(), r1.witness->position, r1.witness->value));

    const OracleResult r2 = surjectivity_oracle(phi2());
    EXPECT_EQ(r2.outcome, OracleOutcome::proper_injection);
    EXPECT_EQ(r2.witness->position.label(), "E12");

    const OracleResult id = surjectivity_oracle(validate_endomorphism(mixed_heisenberg(), RationalMatrix::identity(3)));
    EXPECT_EQ(id.outcome, OracleOutcome::automorphism);
    EXPECT_FALSE(id.witness);
    EXPECT_EQ(id.section_surjective, (std::vector<bool>{true, true}));
}

TEST(Oracle, UnitsOfTheRings)
{
    const auto h = corpus::heisenberg({}, {2}, {2});
    // E12 ↦ E12, E23 ↦ 2E23, E13 ↦ 2E13 on Z ⊕ Z[1/2] ⊕ Z[1/2]: 2 is a unit in
    // the divisible rings, so this is onto.
    EXPECT_EQ(surjectivity_oracle(validate_endomorphism(h, diag3(1, 2, 2))).outcome, OracleOutcome::automorphism);
    const auto hz = corpus::heisenberg({}, {}, {});
    // On Heisenberg(Z) E12 ↦ -E12, E23 ↦ E23 is onto; the centre goes to -E13.
    const Endomorphism e = validate_endomorphism(hz, diag3(-1, 1, -1));
    EXPECT_EQ(surjectivity_oracle(e).outcome, OracleOutcome::automorphism);
}

TEST(Report, FlagsOnlyRealContradictions)
{
    const Report r = full_report(phi1(), {});
    EXPECT_EQ(r.central.conclusion, Conclusion::not_applicable);
    EXPECT_EQ(r.tfab.conclusion, Conclusion::not_applicable);
    EXPECT_EQ(r.oracle.outcome, OracleOutcome::proper_injection);
    EXPECT_FALSE(r.soundness_bug);

    const Report skipped = full_report(phi1(), {}, false);
    EXPECT_EQ(skipped.oracle.outcome, OracleOutcome::skipped);

    const auto half = corpus::heisenberg({2}, {2}, {2}, {2});
    const Report ok = full_report(phi2(half), {2});
    EXPECT_EQ(ok.central.conclusion, Conclusion::automorphism);
    EXPECT_EQ(ok.oracle.outcome, OracleOutcome::automorphism);
    EXPECT_FALSE(ok.soundness_bug);

    const Report id = full_report(validate_endomorphism(corpus::ut4({}), RationalMatrix::identity(6)), {});
    EXPECT_EQ(id.central.conclusion, Conclusion::automorphism);
    EXPECT_EQ(id.tfab.conclusion, Conclusion::automorphism);
    EXPECT_EQ(id.oracle.outcome, OracleOutcome::automorphism);
}

TEST(Report, AbelianPattern)
{
    auto p = std::make_shared<Pattern>(2);
    p->set_ring(0, 1, PrimeSet{3});
    const auto l = std::make_shared<LieLattice>(p);
    const Report r = full_report(validate_endomorphism(l, RationalMatrix{{3}}), {});
    EXPECT_EQ(r.tfab.conclusion, Conclusion::automorphism);
    EXPECT_EQ(r.oracle.outcome, OracleOutcome::automorphism);
    const Report s = full_report(validate_endomorphism(l, RationalMatrix{{2}}), {});
    EXPECT_EQ(s.oracle.outcome, OracleOutcome::proper_injection);
    EXPECT_EQ(s.central.conclusion, Conclusion::not_applicable);  // det 2 is not a unit
}

// When det on the centre is a π-unit and φ is π-like, σ⁻¹'s action on Hom
// preserves the hom lattice.
TEST(HomAction, InversePreservesHomLattice)
{
    const auto half = corpus::heisenberg({2}, {2}, {2}, {2});
    const std::vector<Endomorphism> cases = {phi2(half),
                                             validate_endomorphism(corpus::ut4({}), RationalMatrix::identity(6))};
    for (const auto& e : cases) {
        const auto& l = e.lattice();
        const ModuleShape hom = hom_shape(l.abelianisation().shape, l.centre().shape);
        const RationalMatrix inv = hom_inverse_action(e.abelianisation_map(), e.centre_map());
        EXPECT_TRUE(map_preserves(inv, hom));
        EXPECT_EQ(inv * hom_action(e.abelianisation_map(), e.centre_map()), RationalMatrix::identity(hom.rank()));
    }
}
