#include "torelli/expansion.hpp"

#include "torelli/errors.hpp"

#include <cstdlib>

namespace torelli {

namespace {

std::size_t letter_slot(int entry) { return (std::abs(entry) - 1) * 2 + (entry < 0); }

void check_log_value(Tensor const &l, int generator, char const *name, int i)
{
	Tensor const expected = Tensor::generator(generator, l.trunc());
	if (l.constant_term() != 0 || !(extract(l, 1) == expected))
		throw DomainError(std::string("log value of ") + name +
		                  std::to_string(i) + " must be " + name +
		                  std::to_string(i) + " + higher terms");
	if (!dynkin_defect(l).is_zero())
		throw DomainError(std::string("log value of ") + name + std::to_string(i) +
		                  " is not a Lie series");
}

} // namespace

SymplecticExpansion::SymplecticExpansion(int genus, std::vector<Tensor> log_alpha,
                                         std::vector<Tensor> log_beta)
    : genus_(GenusContext(genus).g), log_alpha_(std::move(log_alpha)),
      log_beta_(std::move(log_beta))
{
	if (static_cast<int>(log_alpha_.size()) != genus ||
	    static_cast<int>(log_beta_.size()) != genus)
		throw DomainError("expansion needs one log value per generator");
	trunc_ = log_alpha_.front().trunc();
	for (int i = 1; i <= genus; ++i)
	{
		if (this->log_alpha(i).trunc() != trunc_ || this->log_beta(i).trunc() != trunc_)
			throw DegreeMismatchError("expansion log values differ in truncation");
		check_log_value(this->log_alpha(i), i, "alpha", i);
		check_log_value(this->log_beta(i), genus + i, "beta", i);
	}
	letter_values_.resize(4 * genus, Tensor(trunc_));
	for (int i = 1; i <= genus; ++i)
	{
		letter_values_[letter_slot(2 * i - 1)] = exp_series(this->log_alpha(i));
		letter_values_[letter_slot(-(2 * i - 1))] = exp_series(-this->log_alpha(i));
		letter_values_[letter_slot(2 * i)] = exp_series(this->log_beta(i));
		letter_values_[letter_slot(-2 * i)] = exp_series(-this->log_beta(i));
	}
}

Tensor const &SymplecticExpansion::letter_value(int entry) const
{
	if (entry == 0 || std::abs(entry) > 2 * genus_)
		throw EncodingError("barcode entry " + std::to_string(entry) +
		                    " out of range");
	return letter_values_[letter_slot(entry)];
}

Tensor SymplecticExpansion::letter_value_by_inversion(int entry) const
{
	if (entry > 0)
		return letter_value(entry);
	return series_inverse(letter_value(-entry));
}

SymplecticExpansion default_expansion(int genus, int trunc)
{
	GenusContext ctx(genus);
	if (trunc < 2)
		throw DomainError("expansion needs truncation degree >= 2");
	auto a = [&](int i) { return Tensor::generator(i, trunc); };
	auto b = [&](int i) { return Tensor::generator(genus + i, trunc); };

	std::vector<Tensor> log_alpha, log_beta;
	Tensor partial_omega(trunc); // sum_{j<i} [a_j, b_j]
	for (int i = 1; i <= ctx.g; ++i)
	{
		Tensor const ab = bracket(a(i), b(i));
		Tensor la = a(i) - Rational(1, 2) * ab +
		            Rational(1, 12) * bracket(ab, b(i)) -
		            Rational(1, 2) * bracket(partial_omega, a(i));
		Tensor lb = b(i) - Rational(1, 2) * ab +
		            Rational(1, 4) * bracket(ab, b(i)) +
		            Rational(1, 12) * bracket(a(i), ab) +
		            Rational(1, 2) * bracket(b(i), partial_omega);
		log_alpha.push_back(truncate(la, 3));
		log_beta.push_back(truncate(lb, 3));
		partial_omega += ab;
	}
	return SymplecticExpansion(genus, std::move(log_alpha), std::move(log_beta));
}

Tensor theta(SymplecticExpansion const &exp, Barcode const &bc)
{
	bc.validate(exp.genus());
	Tensor res = Tensor::one(exp.trunc());
	for (int k : bc.entries())
		res = product(res, exp.letter_value(k));
	return res;
}

Tensor log_theta(SymplecticExpansion const &exp, Barcode const &bc)
{
	return log_series(theta(exp, bc));
}

std::vector<std::pair<int, Tensor>> symplectic_defect(SymplecticExpansion const &exp)
{
	int const n = exp.trunc();
	Tensor omega_sum(n);
	for (int i = 1; i <= exp.genus(); ++i)
		omega_sum += bracket(Tensor::generator(i, n),
		                     Tensor::generator(exp.genus() + i, n));
	Tensor const diff =
	    theta(exp, boundary_barcode(exp.genus())) - exp_series(omega_sum);
	std::vector<std::pair<int, Tensor>> out;
	for (int k = 0; k <= n; ++k)
	{
		Tensor part = extract(diff, k);
		if (!part.is_zero())
			out.emplace_back(k, std::move(part));
	}
	return out;
}

int symplectic_through(SymplecticExpansion const &exp)
{
	auto const defects = symplectic_defect(exp);
	if (defects.empty())
		return exp.trunc();
	return defects.front().first - 1;
}

Tensor series_inverse(Tensor const &x)
{
	if (x.constant_term() != 1)
		throw DomainError("series_inverse: constant term is not 1");
	int const n = x.trunc();
	Tensor const d = x - Tensor::one(n);
	Tensor res = Tensor::one(n);
	Tensor power = Tensor::one(n);
	for (int i = 1; i <= n; ++i)
	{
		power = product(power, d);
		if (power.is_zero())
			break;
		res += (i % 2 == 1 ? Rational(-1) : Rational(1)) * power;
	}
	return res;
}

} // namespace torelli
