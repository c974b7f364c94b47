// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits.

#include "support.hpp"

#include "torelli/casson.hpp"
#include "torelli/expansion.hpp"
#include "torelli/johnson.hpp"
#include "torelli/psi_dataset.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace torelli;
using namespace testing_support;

namespace {

constexpr int g = PsiDataset::genus;
constexpr int N = 5;

struct Outcome
{
	bool ok;
	std::string detail;
};

int failures = 0;

void criterion(int id, std::string const &name, double limit_s,
               std::function<Outcome()> const &body)
{
	auto const t0 = std::chrono::steady_clock::now();
	Outcome out{false, {}};
	try
	{
		out = body();
	}
	catch (std::exception const &e)
	{
		out = {false, std::string("exception: ") + e.what()};
	}
	double const secs =
	    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	bool const in_time = secs < limit_s;
	bool const pass = out.ok && in_time;
	failures += !pass;
	std::printf("%s  [%d] %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", id,
	            name.c_str(), secs, limit_s, out.detail.empty() ? "" : ": ",
	            out.detail.c_str());
	if (!in_time)
		std::printf("      time limit exceeded\n");
}

Outcome equal(Tensor const &x, Tensor const &y)
{
	if (x == y)
		return {true, {}};
	return {false, "difference " + to_string(x - y, g)};
}

SymplecticExpansion const &expansion()
{
	static SymplecticExpansion const e = default_expansion(g, N);
	return e;
}

Tensor const &tau3_psi()
{
	static Tensor const t = tau3(expansion(), load_psi().twists());
	return t;
}

Tensor sum_of_commutators()
{
	Tensor w(N);
	for (int i = 1; i <= g; ++i)
		w += bracket(Tensor::generator(i, N), Tensor::generator(g + i, N));
	return w;
}

} // namespace

int main()
{
	criterion(1, "symplectic audit: defect of the default expansion vanishes in degrees 0-3",
	          5, [] {
		          auto const defect = symplectic_defect(default_expansion(g, N));
		          for (auto const &[k, t] : defect)
			          if (k <= 3)
				          return Outcome{false, "defect in degree " + std::to_string(k)};
		          return Outcome{true, {}};
	          });

	criterion(2, "psi in J3: tau2 of the 16-entry dataset is 0", 30,
	          [] { return equal(tau2(expansion(), load_psi().twists()), Tensor(N)); });

	criterion(3, "tau3(psi) = eta(15-term display) = eta(compact display)", 60, [] {
		PsiDataset const &psi = load_psi();
		Tensor const full = eta(psi.expected_tau3, N);
		Outcome o = equal(tau3_psi(), full);
		if (!o.ok)
			return o;
		return equal(full, eta(psi.expected_tau3_compact, N));
	});

	criterion(4, "bracket decomposition of tau3(psi), no sign flip", 60, [] {
		Tensor sum(N);
		for (auto const &term : load_psi().bracket_terms)
			sum += evaluate(term, g, N).value();
		return equal(sum, tau3_psi());
	});

	criterion(5, "3 tau2(gamma2) as a combination of odot terms", 60, [] {
		PsiDataset const &psi = load_psi();
		return equal(eta(psi.boundary_cube, N), eta(psi.boundary_cube_odots, N));
	});

	criterion(6, "T(a2,b1,a1,a2) as a 4-term odot combination", 60, [] {
		PsiDataset const &psi = load_psi();
		return equal(eta(psi.mixed_tree, N), eta(psi.mixed_tree_odots, N));
	});

	criterion(7, "Casson numbers: d=-24, d'=0, lambda=1, (n1,n2)=(10,-3)", 60, [] {
		CassonReport const r = casson_report(expansion(), load_psi().twists());
		bool const ok = r.d_value == -24 && r.d_prime_value == 0 && r.lambda_value &&
		                *r.lambda_value == 1 && r.n_genus1 == 10 && r.n_genus2 == -3;
		std::string text = to_string(r);
		for (auto &c : text)
			if (c == '\n')
				c = ' ';
		return Outcome{ok, ok ? std::string() : text};
	});

	criterion(8, "per-twist Morita forms: dbar' = h(2h+1) and eta = L4", 60, [] {
		for (auto const &e : load_psi().entries)
		{
			DiagramSum const form = morita_form(e, g);
			int const h = e.twist.genus;
			if (dbar_prime(form) != h * (2 * h + 1))
				return Outcome{false, e.name + ": dbar' = " + to_short_string(dbar_prime(form))};
			if (!(eta(form, N) == L_k(expansion(), e.twist.curve, 4)))
				return Outcome{false, e.name + ": eta != L4"};
		}
		return Outcome{true, {}};
	});

	criterion(9, "kappa: odot -> 0, IHX -> 0 mod 3 (50 labelings), 3 tau2(gamma2) - odots -> 0",
	          60, [] {
		          HVector const a1 = HVector::a(1, g), b1 = HVector::b(1, g);
		          if (!kappa(odot(a1, b1)).is_zero())
			          return Outcome{false, "kappa(a1 . b1) != 0"};
		          Rng rng(9);
		          for (int i = 0; i < 50; ++i)
		          {
			          HVector const a = random_hvector(rng, g), b = random_hvector(rng, g);
			          HVector const c = random_hvector(rng, g), d = random_hvector(rng, g);
			          DiagramSum ihx = DiagramSum(tree(a, b, c, d));
			          ihx -= DiagramSum(tree(a, c, b, d));
			          ihx -= DiagramSum(tree(a, d, c, b));
			          if (!kappa(ihx).is_zero())
				          return Outcome{false, "IHX labeling " + std::to_string(i)};
		          }
		          PsiDataset const &psi = load_psi();
		          if (!kappa(psi.boundary_cube_odots - psi.boundary_cube).is_zero())
			          return Outcome{false, "kappa(RHS - LHS) != 0"};
		          return Outcome{true, {}};
	          });

	// property suites, each with its own limit
	criterion(10, "property: exp/log inverse at truncation 1..6", 60, [] {
		Rng rng(101);
		for (int n = 1; n <= 6; ++n)
			for (int i = 0; i < 20; ++i)
			{
				Tensor const x = random_tensor(rng, g, n, 4, 1, std::min(n, 3));
				if (!(log_series(exp_series(x)) == x) ||
				    !(exp_series(log_series(Tensor::one(n) + x)) == Tensor::one(n) + x))
					return Outcome{false, "truncation " + std::to_string(n)};
			}
		return Outcome{true, {}};
	});

	criterion(10, "property: cyclicize orbit identity", 60, [] {
		Rng rng(102);
		for (int i = 0; i < 100; ++i)
		{
			Tensor const x = random_tensor(rng, g, N, 6, 1, N);
			for (int k = 1; k <= N; ++k)
			{
				Tensor const xk = extract(x, k);
				if (!(cyclicize(cyclicize(xk)) == Rational(k) * cyclicize(xk)))
					return Outcome{false, "degree " + std::to_string(k)};
			}
		}
		return Outcome{true, {}};
	});

	criterion(10, "property: bracket Jacobi identity", 60, [] {
		Rng rng(103);
		for (int i = 0; i < 100; ++i)
		{
			Tensor const x = random_tensor(rng, g, N, 4, 1, 2);
			Tensor const y = random_tensor(rng, g, N, 4, 1, 2);
			Tensor const z = random_tensor(rng, g, N, 4, 1, 1);
			Tensor const j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
			                 bracket(z, bracket(x, y));
			if (!j.is_zero())
				return Outcome{false, "trial " + std::to_string(i)};
		}
		return Outcome{true, {}};
	});

	criterion(10, "property: L4/L5 conjugacy and inversion invariance, 100 random curves", 60,
	          [] {
		          Rng rng(104);
		          for (int i = 0; i < 100; ++i)
		          {
			          Barcode const bc = random_null_homologous(rng, g);
			          KKParts const base = kk_parts(expansion(), bc);
			          Barcode const w = random_barcode(rng, g, rng.uniform(1, 3));
			          for (Barcode const &other :
			               {rotate(bc, rng.uniform(0, bc.size() - 1)), w + bc + w.inverse(),
			                bc.inverse()})
			          {
				          KKParts const p = kk_parts(expansion(), other);
				          if (!(p.L4 == base.L4) || !(p.L5 == base.L5))
					          return Outcome{false, to_string(bc) + " vs " + to_string(other)};
			          }
		          }
		          return Outcome{true, {}};
	          });

	criterion(10, "property: theta invariant under free reduction", 60, [] {
		Rng rng(105);
		for (int i = 0; i < 100; ++i)
		{
			Barcode const bc = random_barcode(rng, g, rng.uniform(0, 16));
			if (!(theta(expansion(), bc) == theta(expansion(), free_reduce(bc))))
				return Outcome{false, to_string(bc)};
		}
		return Outcome{true, {}};
	});

	criterion(10, "property: dynkin_defect(log_theta) = 0", 60, [] {
		Rng rng(106);
		for (int i = 0; i < 100; ++i)
		{
			Barcode const bc = random_barcode(rng, g, rng.uniform(0, 10));
			if (!dynkin_defect(log_theta(expansion(), bc)).is_zero())
				return Outcome{false, to_string(bc)};
		}
		return Outcome{true, {}};
	});

	criterion(10, "property: L4, L5 of dataset curves annihilate sum [a_i,b_i]", 60, [] {
		Tensor const w = sum_of_commutators();
		for (auto const &e : load_psi().entries)
		{
			KKParts const p = kk_parts(expansion(), e.twist.curve);
			if (!apply_derivation(as_derivation(p.L4, 2, g), w).is_zero() ||
			    !apply_derivation(as_derivation(p.L5, 3, g), w).is_zero())
				return Outcome{false, e.name};
		}
		return Outcome{true, {}};
	});

	std::printf("%d failure(s)\n", failures);
	return failures == 0 ? 0 : 1;
}
