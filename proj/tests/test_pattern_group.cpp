#include <random>

#include <gtest/gtest.h>

#include "nilcert/pattern_group.hpp"
#include "support/oracles.hpp"

using namespace nilcert;

namespace {

std::shared_ptr<Pattern> heisenberg(PrimeSet r12, PrimeSet r23, PrimeSet r13, PrimeSet pi = {})
{
    auto p = std::make_shared<Pattern>(3, pi);
    p->set_ring(0, 1, r12);
    p->set_ring(1, 2, r23);
    p->set_ring(0, 2, r13);
    return p;
}

std::shared_ptr<Pattern> mixed_heisenberg(PrimeSet pi = {})
{
    return heisenberg({}, {2}, {2}, pi);
}

GroupElement heis(const std::shared_ptr<Pattern>& p, Rational a, Rational b, Rational c)
{
    return GroupElement(p, RationalMatrix{{1, a, c}, {0, 1, b}, {0, 0, 1}});
}

// Products of elementary factors with small entries in each ring.
GroupElement random_member(const std::shared_ptr<const Pattern>& p, std::mt19937_64& rng)
{
    GroupElement g = GroupElement::identity(p);
    for (const auto& pos : p->positions()) {
        Rational t(static_cast<long>(rng() % 9) - 4);
        for (auto q : p->ring(pos).inverted())
            for (unsigned k = rng() % 3; k > 0; --k)
                t /= Rational(static_cast<long>(q));
        g = multiply(g, GroupElement::elementary(p, pos, t));
    }
    return g;
}

std::vector<std::shared_ptr<const Pattern>> test_patterns()
{
    std::vector<std::shared_ptr<const Pattern>> out = {mixed_heisenberg(), heisenberg({2}, {2}, {2}, {2}),
                                                       heisenberg({}, {}, {})};
    out.push_back(std::make_shared<Pattern>(Pattern::full(4, {})));
    out.push_back(std::make_shared<Pattern>(Pattern::full(4, {3}, {3})));
    auto sub = std::make_shared<Pattern>(4);  // Heisenberg × Z inside UT4
    sub->set_ring(0, 1, PrimeSet{});
    sub->set_ring(1, 2, PrimeSet{2});
    sub->set_ring(0, 2, PrimeSet{2});
    sub->set_ring(0, 3, PrimeSet{3});
    out.push_back(sub);
    return out;
}

}  // namespace

TEST(Pattern, Validation)
{
    EXPECT_TRUE(validate_pattern(*mixed_heisenberg()).empty());
    const auto bad = validate_pattern(*heisenberg({2}, {2}, {}));
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_EQ(bad[0].i, 0u);
    EXPECT_EQ(bad[0].j, 1u);
    EXPECT_EQ(bad[0].k, 2u);
    for (std::size_t n = 2; n <= 6; ++n)
        EXPECT_TRUE(validate_pattern(Pattern::full(n, {})).empty()) << n;
    EXPECT_FALSE(validate_pattern(Pattern(3)).empty());  // no nonzero positions

    auto zero_target = std::make_shared<Pattern>(3);
    zero_target->set_ring(0, 1, PrimeSet{});
    zero_target->set_ring(1, 2, PrimeSet{});
    EXPECT_FALSE(validate_pattern(*zero_target).empty());
    EXPECT_THROW(Pattern(1), std::invalid_argument);
}

TEST(Pattern, CanonicalOrder)
{
    const Pattern p = Pattern::full(4, {});
    std::vector<std::string> labels;
    for (const auto& pos : p.positions())
        labels.push_back(pos.label());
    EXPECT_EQ(labels, (std::vector<std::string>{"E12", "E23", "E34", "E13", "E24", "E14"}));
    EXPECT_EQ(p.rank(), 6u);
}

TEST(Pattern, Divisibility)
{
    EXPECT_TRUE(is_pi_divisible(*mixed_heisenberg()));
    EXPECT_FALSE(is_pi_divisible(*mixed_heisenberg({2})));
    EXPECT_TRUE(is_pi_divisible(*heisenberg({2}, {2}, {2}, {2})));
}

TEST(GroupElementTest, MembershipAndProducts)
{
    const auto n = mixed_heisenberg();
    EXPECT_THROW(heis(n, Rational(1) / 2, 0, 0), std::invalid_argument);
    EXPECT_NO_THROW(heis(n, 1, Rational(1) / 2, Rational(3) / 4));

    const GroupElement g = multiply(GroupElement::elementary(n, {0, 1}, 3), GroupElement::elementary(n, {1, 2}, 5));
    EXPECT_EQ(g.matrix()(0, 2), Rational(15));
    EXPECT_EQ(multiply(g, inverse(g)), GroupElement::identity(n));

    const GroupElement c =
        commutator(GroupElement::elementary(n, {0, 1}, 1), GroupElement::elementary(n, {1, 2}, 1));
    EXPECT_EQ(c, GroupElement::elementary(n, {0, 2}, 1));

    const auto other = mixed_heisenberg();
    other->set_ring(0, 1, PrimeSet{3});
    EXPECT_THROW(multiply(g, GroupElement::identity(other)), std::invalid_argument);
}

TEST(GroupElementTest, Axioms)
{
    std::mt19937_64 rng(17);
    for (const auto& p : test_patterns())
        for (int k = 0; k < 60; ++k) {
            const GroupElement a = random_member(p, rng), b = random_member(p, rng), c = random_member(p, rng);
            ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
            ASSERT_EQ(multiply(a, inverse(a)), GroupElement::identity(p));
            ASSERT_EQ(multiply(inverse(a), a), GroupElement::identity(p));
            ASSERT_TRUE(oracle::in_pattern(*p, multiply(a, b).matrix()));
        }
}

TEST(ExpLog, Examples)
{
    const auto n = mixed_heisenberg();
    const Rational a = 3, b = Rational(1) / 2, c = Rational(5) / 4;
    EXPECT_EQ(log(heis(n, a, b, c)).coordinates(*n), (RationalVector{a, b, c - a * b / 2}));
    EXPECT_TRUE(log(GroupElement::identity(n)).matrix().is_zero());
    RationalMatrix x(3, 3);
    x(0, 1) = 7;
    EXPECT_EQ(exp(LieVector(x)), GroupElement::elementary(n, {0, 1}, 7).matrix());
}

TEST(ExpLog, RoundTripsAgainstSeries)
{
    std::mt19937_64 rng(23);
    for (const auto& p : test_patterns())
        for (int k = 0; k < 60; ++k) {
            const GroupElement g = random_member(p, rng);
            const LieVector x = log(g);
            ASSERT_EQ(x.matrix(), oracle::series_log(g.matrix()));
            ASSERT_EQ(exp(x), g.matrix());
            ASSERT_EQ(log_unipotent(exp_nilpotent(x.matrix())), x.matrix());
            ASSERT_EQ(LieVector::from_coordinates(*p, x.coordinates(*p)), x);
        }
}

TEST(RationalPower, Examples)
{
    const auto h = heisenberg({2}, {2}, {2}, {2});
    const GroupElement e = GroupElement::elementary(h, {0, 1}, 1);
    EXPECT_EQ(rational_power(e, 1), e);
    EXPECT_EQ(rational_power(e, Rational(1) / 2), GroupElement::elementary(h, {0, 1}, Rational(1) / 2));

    const Rational a = 3, b = -5, c = 7;
    const GroupElement g = heis(h, a, b, c);
    EXPECT_EQ(rational_power(g, Rational(1) / 2), heis(h, a / 2, b / 2, c / 2 - a * b / 8));

    try {
        rational_power(heis(mixed_heisenberg({2}), 1, 0, 0), Rational(1) / 2);
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "root not guaranteed in N");
    }
    EXPECT_THROW(rational_power(g, Rational(1) / 3), std::domain_error);
}

TEST(RationalPower, RootsAndPowers)
{
    std::mt19937_64 rng(29);
    std::vector<std::shared_ptr<const Pattern>> divisible = {heisenberg({2}, {2}, {2}, {2}),
                                                             heisenberg({2, 3}, {2}, {2, 3}, {2}),
                                                             std::make_shared<Pattern>(Pattern::full(4, {3}, {3})),
                                                             std::make_shared<Pattern>(Pattern::full(4, {2, 3}, {2, 3}))};
    for (const auto& p : divisible)
        for (int k = 0; k < 40; ++k) {
            const GroupElement g = random_member(p, rng);
            const auto& primes = p->pi().primes();
            const Prime q = primes[rng() % primes.size()];
            const GroupElement root = rational_power(g, Rational(1) / Rational(static_cast<long>(q)));
            ASSERT_TRUE(oracle::in_pattern(*p, root.matrix()));
            GroupElement back = GroupElement::identity(p);
            for (Prime i = 0; i < q; ++i)
                back = multiply(back, root);
            ASSERT_EQ(back, g);
            // (g^{2/q})^q = g^2
            const GroupElement two = rational_power(g, Rational(2) / Rational(static_cast<long>(q)));
            ASSERT_EQ(rational_power(two, Rational(static_cast<long>(q))), multiply(g, g));
        }
}

TEST(Factorization, Examples)
{
    const auto n = mixed_heisenberg();
    EXPECT_TRUE(factor_into_elementaries(GroupElement::identity(n)).empty());
    const auto f = factor_into_elementaries(heis(n, 2, Rational(3) / 2, 5));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].position.label(), "E12");
    EXPECT_EQ(f[0].value, Rational(2));
    EXPECT_EQ(f[1].position.label(), "E23");
    EXPECT_EQ(f[1].value, Rational(3) / 2);
    EXPECT_EQ(f[2].position.label(), "E13");
    EXPECT_EQ(f[2].value, Rational(5 - 3));  // c - ab
    const auto single = factor_into_elementaries(GroupElement::elementary(n, {0, 2}, Rational(1) / 8));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].value, Rational(1) / 8);
}

TEST(Factorization, RoundTrip)
{
    std::mt19937_64 rng(31);
    for (const auto& p : test_patterns())
        for (int k = 0; k < 60; ++k) {
            const GroupElement g = random_member(p, rng);
            GroupElement acc = GroupElement::identity(p);
            for (const auto& f : factor_into_elementaries(g)) {
                ASSERT_TRUE(p->ring(f.position).contains(f.value));
                acc = multiply(acc, GroupElement::elementary(p, f.position, f.value));
            }
            ASSERT_EQ(acc, g);
        }
}
