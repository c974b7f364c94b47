#include "torelli/johnson.hpp"

#include "torelli/errors.hpp"

namespace torelli {

TwistList::TwistList(std::vector<Twist> entries)
{
	for (auto &t : entries)
		push_back(std::move(t));
}

void TwistList::push_back(Twist t)
{
	if (t.coeff == 0)
		throw DomainError("twist exponent must be nonzero");
	if (t.genus != 1 && t.genus != 2)
		throw DomainError("twist genus must be 1 or 2");
	entries_.push_back(std::move(t));
}

TwistList &TwistList::operator+=(TwistList const &o)
{
	entries_.insert(entries_.end(), o.entries_.begin(), o.entries_.end());
	return *this;
}

void TwistList::validate(int surface_genus) const
{
	for (auto const &t : entries_)
		t.curve.validate(surface_genus);
}

namespace {

std::vector<Tensor> homogeneous_parts(Tensor const &l, int upto)
{
	std::vector<Tensor> parts;
	for (int i = 0; i <= upto; ++i)
		parts.push_back(extract(l, i));
	return parts;
}

Tensor kk_degree(std::vector<Tensor> const &l, int k)
{
	Tensor res(l.front().trunc());
	for (int i = 2; i <= k - 2; ++i)
		res += cyclicize(product(l[i], l[k - i]));
	return res * Rational(1, 2);
}

std::vector<Tensor> checked_log_parts(SymplecticExpansion const &exp,
                                      Barcode const &bc, int k)
{
	if (k > exp.trunc())
		throw DomainError("L_" + std::to_string(k) +
		                  " exceeds the truncation degree " +
		                  std::to_string(exp.trunc()));
	auto parts = homogeneous_parts(log_theta(exp, bc), k);
	if (!parts[1].is_zero())
		throw DomainError("barcode '" + to_string(bc) +
		                  "' is not null-homologous");
	return parts;
}

} // namespace

Tensor L_k(SymplecticExpansion const &exp, Barcode const &bc, int k)
{
	if (k < 2)
		throw DomainError("L_k needs k >= 2");
	return kk_degree(checked_log_parts(exp, bc, k), k);
}

KKParts kk_parts(SymplecticExpansion const &exp, Barcode const &bc)
{
	auto const parts = checked_log_parts(exp, bc, 5);
	return {kk_degree(parts, 4), kk_degree(parts, 5)};
}

Tensor tau2(SymplecticExpansion const &exp, TwistList const &twists)
{
	Tensor res(exp.trunc());
	for (auto const &t : twists.entries())
		res += Rational(t.coeff) * L_k(exp, t.curve, 4);
	return res;
}

Tensor tau3(SymplecticExpansion const &exp, TwistList const &twists)
{
	Tensor res(exp.trunc());
	for (auto const &t : twists.entries())
		res += Rational(t.coeff) * L_k(exp, t.curve, 5);
	return res;
}

Tensor Derivation::on_generator(int index) const
{
	Tensor res(value_.trunc());
	for (auto const &[w, c] : value_.terms())
	{
		int const u = w[0];
		int pairing = 0;
		if (u <= genus_ && index == u + genus_)
			pairing = 1;
		else if (u > genus_ && index == u - genus_)
			pairing = -1;
		if (pairing != 0)
			res.add_term(w.sub(1, w.size() - 1), pairing * c);
	}
	return res;
}

Derivation as_derivation(Tensor const &t, int k, int genus)
{
	GenusContext ctx(genus);
	if (k < 0)
		throw DomainError("derivation degree must be nonnegative");
	for (auto const &[w, c] : t.terms())
	{
		if (w.size() != k + 2)
			throw DomainError("derivation of degree " + std::to_string(k) +
			                  " needs a homogeneous tensor of degree " +
			                  std::to_string(k + 2));
		for (int l : w.letters())
			if (l < 1 || l > ctx.rank())
				throw EncodingError("generator index out of range");
	}
	return Derivation(t, k, genus);
}

Tensor apply_derivation(Derivation const &d, Tensor const &t)
{
	if (d.value().trunc() != t.trunc())
		throw DegreeMismatchError("apply_derivation: truncation degrees differ");
	int const rank = 2 * d.genus();
	std::vector<Tensor> images;
	images.reserve(rank);
	for (int i = 1; i <= rank; ++i)
		images.push_back(d.on_generator(i));

	Tensor res(t.trunc());
	for (auto const &[w, c] : t.terms())
	{
		if (w.size() + d.degree() > t.trunc())
			continue;
		for (int p = 0; p < w.size(); ++p)
		{
			Word const prefix = w.sub(0, p);
			Word const suffix = w.sub(p + 1, w.size() - p - 1);
			if (w[p] < 1 || w[p] > rank)
				throw EncodingError("generator index out of range");
			for (auto const &[img, ci] : images[w[p] - 1].terms())
				res.add_term(prefix.concat(img).concat(suffix), c * ci);
		}
	}
	return res;
}

Tensor tensor_from_generator_images(std::vector<Tensor> const &images, int genus)
{
	if (static_cast<int>(images.size()) != 2 * genus)
		throw DomainError("need one image per generator");
	int const n = images.front().trunc();
	Tensor res(n);
	for (int i = 1; i <= genus; ++i)
	{
		// omega(a_i, b_i) = 1 makes a_i the dual of b_i and -b_i that of a_i
		res += product(Tensor::generator(i, n), images[genus + i - 1]);
		res -= product(Tensor::generator(genus + i, n), images[i - 1]);
	}
	return res;
}

Derivation derivation_bracket(Derivation const &d1, Derivation const &d2)
{
	if (d1.genus() != d2.genus())
		throw DomainError("derivation_bracket: genus mismatch");
	int const k = d1.degree() + d2.degree();
	int const n = d1.value().trunc();
	if (k + 2 > n)
		throw DomainError("derivation_bracket: degree " + std::to_string(k) +
		                  " does not fit truncation degree " + std::to_string(n));
	int const g = d1.genus();
	std::vector<Tensor> images;
	for (int i = 1; i <= 2 * g; ++i)
		images.push_back(apply_derivation(d1, d2.on_generator(i)) -
		                 apply_derivation(d2, d1.on_generator(i)));
	return as_derivation(tensor_from_generator_images(images, g), k, g);
}

} // namespace torelli
