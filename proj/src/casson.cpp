#include "torelli/casson.hpp"

namespace torelli {

CertificateError::CertificateError(Tensor tau2_value, int genus)
    : Error("tau_2 is nonzero: " + to_string(tau2_value, genus)),
      tau2_(std::move(tau2_value))
{}

std::int64_t d_core(TwistList const &twists)
{
	std::int64_t d = 0;
	for (auto const &t : twists.entries())
		d += std::int64_t{t.coeff} * 4 * t.genus * (t.genus - 1);
	return d;
}

std::int64_t d_prime(TwistList const &twists)
{
	std::int64_t d = 0;
	for (auto const &t : twists.entries())
		d += std::int64_t{t.coeff} * t.genus * (2 * t.genus + 1);
	return d;
}

Rational dbar_prime(DiagramSum const &d2)
{
	Rational res(0);
	for (auto const &[c, term] : d2.entries())
	{
		std::int64_t value = 0;
		if (auto const *o = std::get_if<Odot>(&term))
		{
			std::int64_t const w = omega(o->u, o->v);
			value = 3 * w * w;
		}
		else
		{
			auto const &t = std::get<TreeDiagram>(term);
			if (t.degree() != 2)
				throw DomainError("dbar_prime is defined on degree 2 diagrams only");
			auto const &l = t.labels();
			value = 4 * omega(l[0], l[1]) * omega(l[2], l[3]) -
			        2 * omega(l[0], l[3]) * omega(l[1], l[2]) +
			        2 * omega(l[0], l[2]) * omega(l[1], l[3]);
		}
		res += c * Rational(static_cast<long>(value));
	}
	return res;
}

Rational lambda_J3(SymplecticExpansion const &exp, TwistList const &twists)
{
	Tensor t2 = tau2(exp, twists);
	if (!t2.is_zero())
		throw CertificateError(std::move(t2), exp.genus());
	return make_rational(-d_core(twists), 24);
}

CassonReport twist_audit(TwistList const &twists)
{
	CassonReport r;
	r.d_value = d_core(twists);
	r.d_prime_value = d_prime(twists);
	r.n_genus2 = make_rational(r.d_value, 8);
	r.n_genus1 = make_rational(4 * r.d_prime_value - 5 * r.d_value, 12);
	return r;
}

CassonReport casson_report(SymplecticExpansion const &exp, TwistList const &twists)
{
	CassonReport r = twist_audit(twists);
	if (tau2(exp, twists).is_zero())
		r.lambda_value = make_rational(-r.d_value, 24);
	return r;
}

std::string to_string(CassonReport const &r)
{
	std::string out;
	out += "d: " + std::to_string(r.d_value) + "\n";
	out += "d_prime: " + std::to_string(r.d_prime_value) + "\n";
	out += "n_genus1: " + to_short_string(r.n_genus1) + "\n";
	out += "n_genus2: " + to_short_string(r.n_genus2) + "\n";
	out += "lambda: " +
	       (r.lambda_value ? to_short_string(*r.lambda_value) : std::string("none")) +
	       "\n";
	return out;
}

} // namespace torelli
