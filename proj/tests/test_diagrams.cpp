#include "support.hpp"

#include "torelli/diagrams.hpp"
#include "torelli/errors.hpp"

#include <gtest/gtest.h>

using namespace torelli;
using namespace testing_support;

namespace {

constexpr int g = 2;
constexpr int N = 5;

HVector const a1 = HVector::a(1, g);
HVector const a2 = HVector::a(2, g);
HVector const b1 = HVector::b(1, g);
HVector const b2 = HVector::b(2, g);

Tensor eta_of(TreeDiagram const &t) { return eta(DiagramSum(t), N); }

// Closed forms of the expansion map on the three tree shapes, computed with
// the independent polynomial oracle.
Poly bra(Poly const &x, Poly const &y) { return poly_bracket(x, y, N); }

Tensor oracle3(HVector const &r, HVector const &x, HVector const &y)
{
	Poly const p = poly_mul(bra(poly_of(r), poly_of(x)), poly_of(y), N);
	return tensor_of(poly_sum(Poly{}, poly_cyclic(p), -1), N);
}

Tensor oracle4(HVector const &x, HVector const &y, HVector const &z, HVector const &w)
{
	Poly const p = poly_mul(bra(poly_of(x), poly_of(y)), bra(poly_of(z), poly_of(w)), N);
	return tensor_of(poly_cyclic(p), N);
}

Tensor oracle5(HVector const &x, HVector const &y, HVector const &z, HVector const &u,
               HVector const &v)
{
	Poly const p = poly_mul(bra(poly_of(x), poly_of(y)),
	                        bra(poly_of(z), bra(poly_of(u), poly_of(v))), N);
	return tensor_of(poly_cyclic(p), N);
}

} // namespace

TEST(Eta, DegreeOneTree)
{
	Tensor const t = eta_of(tree(a1, b1, a2));
	EXPECT_EQ(t, oracle3(a1, b1, a2));
	EXPECT_EQ(t, -eta_of(tree(a1, a2, b1)));
	EXPECT_EQ(t, eta_of(tree(b1, a2, a1)));
	EXPECT_EQ(top_degree(t), 3);
}

TEST(Eta, ClosedFormsOnBasisLabels)
{
	EXPECT_EQ(eta_of(tree(a1, b1, a2, b2)), oracle4(a1, b1, a2, b2));
	EXPECT_EQ(eta_of(tree(a2, b1, a1, a2)), oracle4(a2, b1, a1, a2));
	EXPECT_EQ(eta_of(tree(b2, a2, a1, b1, a1)), oracle5(b2, a2, a1, b1, a1));
}

TEST(Eta, RootedReadingOfY)
{
	PlanarTree const y = embed(tree(a1, b1, a2));
	// rooted at the first leaf, the Y reads [l2, l1]
	EXPECT_EQ(rooted_reading(y, 0, N),
	          bracket(to_tensor(a2, N), to_tensor(b1, N)));
	EXPECT_THROW(rooted_reading(y, 3, N), DomainError);
}

TEST(Eta, OdotIsHalfTheSymmetricTree)
{
	EXPECT_EQ(eta(odot(a1, b1), N), Rational(1, 2) * eta_of(tree(a1, b1, a1, b1)));
	EXPECT_EQ(eta(odot(a1, b1), N), eta(odot(b1, a1), N));
	EXPECT_TRUE(eta(odot(a1 + b2, b1) - odot(b1, a1 + b2), N).is_zero());
}

TEST(Eta, OdotPolarization)
{
	Tensor const lhs =
	    eta(odot(a1, b1 + a2) - odot(a1, b1) - odot(a1, a2), N);
	Tensor const rhs =
	    Rational(1, 2) * (eta_of(tree(a1, b1, a1, a2)) + eta_of(tree(a1, a2, a1, b1)));
	EXPECT_EQ(lhs, rhs);
	EXPECT_FALSE(lhs.is_zero());
}

TEST(Eta, IHX)
{
	DiagramSum ihx = DiagramSum(tree(a1, b1, a2, b2));
	ihx -= DiagramSum(tree(a1, a2, b1, b2));
	ihx -= DiagramSum(tree(a1, b2, a2, b1));
	EXPECT_TRUE(eta(ihx, N).is_zero());
}

TEST(Eta, NeedsRoomInTruncation)
{
	EXPECT_THROW(eta(DiagramSum(tree(a1, b1, a2, b2, a1)), 4), DomainError);
	EXPECT_NO_THROW(eta(DiagramSum(tree(a1, b1, a2, b2)), 4));
	EXPECT_TRUE(eta(DiagramSum(), N).is_zero());
}

TEST(TreeDiagram, LeafCount)
{
	EXPECT_THROW(TreeDiagram({a1, b1}), DomainError);
	EXPECT_THROW(TreeDiagram({a1, b1, a1, b1, a1, b1}), DomainError);
	EXPECT_THROW(tree(a1, b1, HVector::a(1, 1)), EncodingError);
	EXPECT_EQ(tree(a1, b1, a2, b2, a1).degree(), 3);
}

TEST(MoritaForm, Shapes)
{
	DiagramSum const one = morita_tau2({{a1, b1}});
	EXPECT_EQ(eta(one, N), eta(odot(a1, b1), N));
	DiagramSum const two = morita_tau2({{a1, b1}, {a2, b2}});
	EXPECT_EQ(to_string(two), "1/1 O(1,0,0,0;0,0,1,0) + 1/1 O(0,1,0,0;0,0,0,1) + "
	                          "1/1 T(1,0,0,0;0,0,1,0;0,1,0,0;0,0,0,1)");
	EXPECT_THROW(morita_tau2({{b1, a1}}), DomainError);
	EXPECT_THROW(morita_tau2({{a1, b1}, {a1 + a2, b2}}), DomainError);
}

TEST(DiagramSum, TextAndArithmetic)
{
	EXPECT_EQ(to_string(DiagramSum()), "0");
	DiagramSum d = Rational(-1, 2) * DiagramSum(tree(a1, b1, a2));
	d += odot(a1, b1);
	EXPECT_EQ(to_string(d), "-1/2 T(1,0,0,0;0,0,1,0;0,1,0,0) + 1/1 O(1,0,0,0;0,0,1,0)");
	EXPECT_TRUE((Rational(0) * d).empty());
	EXPECT_TRUE(eta(d - d, N).is_zero());
}

TEST(Kappa, Values)
{
	EXPECT_TRUE(kappa(odot(a1, b1)).is_zero());
	Wedge4Mod3 const w = kappa(DiagramSum(tree(a1, b1, a2, b2)));
	EXPECT_EQ(w, wedge(a1, b1, a2, b2));
	// basis order a1 a2 b1 b2: a1^b1^a2^b2 = -e0^e1^e2^e3
	ASSERT_EQ(w.coefficients().size(), 1u);
	EXPECT_EQ(w.coefficients().begin()->first, (Wedge4Mod3::Key{0, 1, 2, 3}));
	EXPECT_EQ(w.coefficients().begin()->second, 2);
	EXPECT_TRUE(wedge(a1, a1, a2, b2).is_zero());
}

TEST(Kappa, IHXIsThreeTimesAWedge)
{
	DiagramSum ihx = DiagramSum(tree(a1, b1, a2, b2));
	ihx -= DiagramSum(tree(a1, a2, b1, b2));
	ihx -= DiagramSum(tree(a1, b2, a2, b1));
	EXPECT_TRUE(kappa(ihx).is_zero());
}

TEST(Kappa, Errors)
{
	EXPECT_THROW(kappa(DiagramSum(tree(a1, b1, a2))), DomainError);
	EXPECT_THROW(kappa(Rational(1, 3) * DiagramSum(tree(a1, b1, a2, b2))), DomainError);
	// a denominator prime to 3 is fine: 1/2 = 2 mod 3
	Wedge4Mod3 const half = kappa(Rational(1, 2) * DiagramSum(tree(a1, b1, a2, b2)));
	EXPECT_EQ(half.coefficients().begin()->second, 1);
}
