#include "torelli/verify.hpp"

#include "torelli/casson.hpp"
#include "torelli/psi_dataset.hpp"

#include <sstream>

namespace torelli {

namespace {

constexpr int g = PsiDataset::genus;
constexpr int N = Tensor::default_trunc;

CheckResult tensor_check(std::string name, Tensor const &got, Tensor const &want)
{
	if (got == want)
		return {std::move(name), true, {}};
	return {std::move(name), false, "difference " + to_string(got - want, g)};
}

template <class T>
CheckResult value_check(std::string name, T const &got, T const &want)
{
	if (got == want)
		return {std::move(name), true, {}};
	std::ostringstream os;
	os << "got " << got << ", expected " << want;
	return {std::move(name), false, os.str()};
}

} // namespace

TwistList psi_twists(VerifyOptions const &opts)
{
	TwistList list;
	for (auto const &e : load_psi().entries)
	{
		Twist t = e.twist;
		if (opts.corrupt && e.name == "s1")
			t.coeff -= 1;
		list.push_back(std::move(t));
	}
	return list;
}

std::vector<CheckResult> run_psi_checks(VerifyOptions const &opts)
{
	std::vector<CheckResult> out;
	PsiDataset const &psi = load_psi();
	SymplecticExpansion const exp = default_expansion(g, N);
	TwistList const twists = psi_twists(opts);

	int const through = symplectic_through(exp);
	out.push_back({"expansion symplectic through degree 3", through >= 3,
	               "defect in degree " + std::to_string(through + 1)});
	if (out.back().passed)
		out.back().detail.clear();

	Tensor const t2 = tau2(exp, twists);
	out.push_back(tensor_check("tau2(psi) = 0", t2, Tensor(N)));

	Tensor const t3 = tau3(exp, twists);
	Tensor const e15 = eta(psi.expected_tau3, N);
	out.push_back(tensor_check("tau3(psi) = eta(15 trees)", t3, e15));
	out.push_back(tensor_check("tau3(psi) = eta(compact form)", t3,
	                           eta(psi.expected_tau3_compact, N)));

	Tensor brackets(N);
	for (auto const &term : psi.bracket_terms)
		brackets += evaluate(term, g, N).value();
	out.push_back(tensor_check("tau3(psi) = bracket decomposition", t3, brackets));

	out.push_back(tensor_check("3 tau2(gamma2) = odot combination", eta(psi.boundary_cube, N),
	                           eta(psi.boundary_cube_odots, N)));

	HVector const a1 = HVector::a(1, g), b1 = HVector::b(1, g);
	HVector const a2 = HVector::a(2, g), b2 = HVector::b(2, g);
	TwistList morita;
	morita.push_back({1, 2, psi.entry("gamma2").twist.curve});
	morita.push_back({-1, 1, psi.entry("s1").twist.curve});
	morita.push_back({-1, 1, psi.entry("s2").twist.curve});
	out.push_back(tensor_check("T(a1,b1,a2,b2) = tau2(gamma2 s1^-1 s2^-1)",
	                           eta(DiagramSum(tree(a1, b1, a2, b2)), N),
	                           tau2(exp, morita)));
	out.push_back(tensor_check("T(a2,b1,a1,a2) = odot combination",
	                           eta(psi.mixed_tree, N), eta(psi.mixed_tree_odots, N)));

	bool per_twist = true;
	std::string per_twist_detail;
	for (auto const &e : psi.entries)
	{
		DiagramSum const form = morita_form(e, g);
		int const h = e.twist.genus;
		Rational const want(h * (2 * h + 1));
		bool const ok = dbar_prime(form) == want &&
		                eta(form, N) == L_k(exp, e.twist.curve, 4);
		if (!ok && per_twist)
			per_twist_detail = "entry " + e.name;
		per_twist = per_twist && ok;
	}
	out.push_back({"per-twist Morita forms", per_twist, per_twist_detail});

	CassonReport const rep = twist_audit(twists);
	out.push_back(value_check<std::int64_t>("d(psi) = -24", rep.d_value, -24));
	out.push_back(value_check<std::int64_t>("d'(psi) = 0", rep.d_prime_value, 0));
	out.push_back(value_check<Rational>("genus-1 twist count = 10", rep.n_genus1,
	                                    Rational(10)));
	out.push_back(value_check<Rational>("genus-2 twist count = -3", rep.n_genus2,
	                                    Rational(-3)));
	try
	{
		out.push_back(value_check<Rational>("lambda(psi) = 1", lambda_J3(exp, twists),
		                                    Rational(1)));
	}
	catch (CertificateError const &)
	{
		out.push_back({"lambda(psi) = 1", false, "tau2 does not vanish"});
	}
	return out;
}

std::string format_checks(std::vector<CheckResult> const &checks)
{
	std::string out;
	for (auto const &c : checks)
	{
		out += c.passed ? "PASS  " : "FAIL  ";
		out += c.name;
		if (!c.passed && !c.detail.empty())
			out += ": " + c.detail;
		out += '\n';
	}
	return out;
}

bool all_passed(std::vector<CheckResult> const &checks)
{
	for (auto const &c : checks)
		if (!c.passed)
			return false;
	return true;
}

} // namespace torelli
