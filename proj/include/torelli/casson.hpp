#pragma once

// Homomorphisms d (core of the Casson invariant) and d' on the subgroup
// generated by twists along bounding curves, and the Casson invariant on
// twist lists certified to lie in J_3.

#include "torelli/diagrams.hpp"
#include "torelli/errors.hpp"
#include "torelli/expansion.hpp"
#include "torelli/johnson.hpp"
#include "torelli/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace torelli {

struct CassonReport
{
	std::int64_t d_value = 0;
	std::int64_t d_prime_value = 0;
	Rational n_genus2;  ///< d / 8
	Rational n_genus1;  ///< (4d' - 5d) / 12
	std::optional<Rational> lambda_value;
};

/// tau_2 of the list is nonzero, so lambda is not a homomorphism there.
class CertificateError : public Error
{
  public:
	CertificateError(Tensor tau2_value, int genus);
	Tensor const &tau2_value() const { return tau2_; }

  private:
	Tensor tau2_;
};

/// sum coeff * 4h(h-1).
std::int64_t d_core(TwistList const &twists);

/// sum coeff * h(2h+1).
std::int64_t d_prime(TwistList const &twists);

/// dbar'(u (.) v) = 3 omega(u,v)^2,
/// dbar'(T(a,b,c,d)) = 4 w(a,b)w(c,d) - 2 w(a,d)w(b,c) + 2 w(a,c)w(b,d).
/// Throws DomainError on trees of degree != 2.
Rational dbar_prime(DiagramSum const &d2);

/// -d/24, after checking tau2 == 0; throws CertificateError otherwise.
Rational lambda_J3(SymplecticExpansion const &exp, TwistList const &twists);

/// d, d' and the genus counts; lambda is left empty.
CassonReport twist_audit(TwistList const &twists);

/// twist_audit plus lambda when the list passes the J_3 check.
CassonReport casson_report(SymplecticExpansion const &exp, TwistList const &twists);

/// "d: -24\nd_prime: 0\nn_genus1: 10\nn_genus2: -3\nlambda: 1\n"; an absent
/// lambda prints as "none".
std::string to_string(CassonReport const &r);

} // namespace torelli
