#include "torelli/tensor.hpp"

#include "torelli/errors.hpp"

#include <algorithm>

namespace torelli {

namespace {

void check_same_trunc(Tensor const &x, Tensor const &y, char const *op)
{
	if (x.trunc() != y.trunc())
		throw DegreeMismatchError(std::string(op) + ": truncation degrees " +
		                          std::to_string(x.trunc()) + " and " +
		                          std::to_string(y.trunc()) + " differ");
}

void require_no_constant(Tensor const &x, char const *op)
{
	if (x.constant_term() != 0)
		throw DomainError(std::string(op) + ": nonzero constant term");
}

void drop_zeros(Tensor::Terms &terms)
{
	std::erase_if(terms, [](auto const &kv) { return kv.second == 0; });
}

} // namespace

Word::Word(std::initializer_list<int> letters)
{
	data_.reserve(letters.size());
	for (int l : letters)
		data_.push_back(static_cast<char>(l));
}

Word::Word(std::vector<int> const &letters)
{
	data_.reserve(letters.size());
	for (int l : letters)
		data_.push_back(static_cast<char>(l));
}

std::vector<int> Word::letters() const
{
	std::vector<int> r;
	r.reserve(data_.size());
	for (char c : data_)
		r.push_back(static_cast<unsigned char>(c));
	return r;
}

Word Word::rotate(int i) const
{
	if (data_.empty())
		return *this;
	return Word(data_.substr(i) + data_.substr(0, i));
}

std::strong_ordering Word::operator<=>(Word const &other) const
{
	if (auto c = data_.size() <=> other.data_.size(); c != 0)
		return c;
	// std::string compares chars as unsigned via char_traits
	int c = data_.compare(other.data_);
	return c < 0 ? std::strong_ordering::less
	             : (c > 0 ? std::strong_ordering::greater
	                      : std::strong_ordering::equal);
}

Tensor::Tensor(int trunc) : trunc_(trunc)
{
	if (trunc < 0)
		throw DomainError("negative truncation degree");
}

Tensor Tensor::one(int trunc) { return constant(Rational(1), trunc); }

Tensor Tensor::constant(Rational const &c, int trunc)
{
	return monomial(Word{}, c, trunc);
}

Tensor Tensor::generator(int index, int trunc)
{
	return monomial(Word{index}, Rational(1), trunc);
}

Tensor Tensor::monomial(Word const &w, Rational const &coeff, int trunc)
{
	Tensor t(trunc);
	t.add_term(w, coeff);
	return t;
}

Rational Tensor::coefficient(Word const &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add_term(Word const &w, Rational const &c)
{
	if (w.size() > trunc_ || c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Tensor &Tensor::operator+=(Tensor const &other)
{
	check_same_trunc(*this, other, "sum");
	for (auto const &[w, c] : other.terms_)
		add_term(w, c);
	return *this;
}

Tensor &Tensor::operator-=(Tensor const &other)
{
	check_same_trunc(*this, other, "difference");
	for (auto const &[w, c] : other.terms_)
		add_term(w, -c);
	return *this;
}

Tensor &Tensor::operator*=(Rational const &c)
{
	if (c == 0)
		terms_.clear();
	else
		for (auto &kv : terms_)
			kv.second *= c;
	return *this;
}

Tensor operator*(Tensor const &a, Tensor const &b) { return product(a, b); }

Tensor product(Tensor const &x, Tensor const &y)
{
	check_same_trunc(x, y, "product");
	int const n = x.trunc();
	Tensor res(n);
	Tensor::Terms acc;
	Rational c;
	for (auto const &[wx, cx] : x.terms())
	{
		int const room = n - wx.size();
		for (auto const &[wy, cy] : y.terms())
		{
			// terms are sorted by length first
			if (wy.size() > room)
				break;
			mpq_mul(c.get_mpq_t(), cx.get_mpq_t(), cy.get_mpq_t());
			auto [it, inserted] = acc.try_emplace(wx.concat(wy), c);
			if (!inserted)
				it->second += c;
		}
	}
	drop_zeros(acc);
	for (auto &[w, cf] : acc)
		res.add_term(w, cf);
	return res;
}

Tensor bracket(Tensor const &x, Tensor const &y)
{
	return product(x, y) - product(y, x);
}

Tensor cyclicize(Tensor const &x)
{
	require_no_constant(x, "cyclicize");
	Tensor res(x.trunc());
	for (auto const &[w, c] : x.terms())
		for (int i = 0; i < w.size(); ++i)
			res.add_term(w.rotate(i), c);
	return res;
}

Tensor extract(Tensor const &x, int k)
{
	Tensor res(x.trunc());
	for (auto const &[w, c] : x.terms())
		if (w.size() == k)
			res.add_term(w, c);
	return res;
}

Tensor truncate(Tensor const &x, int k)
{
	Tensor res(x.trunc());
	for (auto const &[w, c] : x.terms())
		if (w.size() <= k)
			res.add_term(w, c);
	return res;
}

int top_degree(Tensor const &x)
{
	if (x.is_zero())
		return 0;
	return x.terms().rbegin()->first.size();
}

Tensor exp_series(Tensor const &x)
{
	require_no_constant(x, "exp_series");
	int const n = x.trunc();
	Tensor res = Tensor::one(n);
	Tensor power = Tensor::one(n);
	for (int i = 1; i <= n; ++i)
	{
		power = product(power, x) * Rational(1, i);
		if (power.is_zero())
			break;
		res += power;
	}
	return res;
}

Tensor log_series(Tensor const &x)
{
	if (x.constant_term() != 1)
		throw DomainError("log_series: constant term is not 1");
	int const n = x.trunc();
	Tensor const d = x - Tensor::one(n);
	Tensor res(n);
	Tensor power = Tensor::one(n);
	for (int i = 1; i <= n; ++i)
	{
		power = product(power, d);
		if (power.is_zero())
			break;
		res += power * Rational(i % 2 == 1 ? 1 : -1, i);
	}
	return res;
}

Tensor dynkin_map(Tensor const &x)
{
	int const n = x.trunc();
	Tensor res(n);
	for (auto const &[w, c] : x.terms())
	{
		if (w.empty())
			continue;
		Tensor nested = Tensor::generator(w[0], n);
		for (int i = 1; i < w.size(); ++i)
			nested = bracket(nested, Tensor::generator(w[i], n));
		res += nested * c;
	}
	return res;
}

Tensor dynkin_defect(Tensor const &x)
{
	require_no_constant(x, "dynkin_defect");
	Tensor res = dynkin_map(x);
	for (auto const &[w, c] : x.terms())
		res.add_term(w, -c * w.size());
	return res;
}

std::string generator_name(int index, int genus)
{
	if (index <= genus)
		return "a" + std::to_string(index);
	return "b" + std::to_string(index - genus);
}

std::string to_string(Tensor const &x, int genus)
{
	if (x.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (auto const &[w, c] : x.terms())
	{
		Rational mag = abs(c);
		if (first)
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		first = false;
		out += to_fraction_string(mag);
		for (int i = 0; i < w.size(); ++i)
		{
			out += i == 0 ? " " : "*";
			out += generator_name(w[i], genus);
		}
	}
	return out;
}

} // namespace torelli
