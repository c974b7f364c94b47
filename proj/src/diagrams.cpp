#include "torelli/diagrams.hpp"

#include "torelli/errors.hpp"

#include <algorithm>

namespace torelli {

TreeDiagram::TreeDiagram(std::vector<HVector> labels) : labels_(std::move(labels))
{
	if (labels_.size() < 3 || labels_.size() > 5)
		throw DomainError("trees of degree 1 to 3 have 3 to 5 leaves");
	for (auto const &l : labels_)
		if (l.coords().size() != labels_.front().coords().size())
			throw EncodingError("tree labels of different lengths");
}

void DiagramSum::add(Rational const &c, DiagramTerm term)
{
	if (c != 0)
		entries_.emplace_back(c, std::move(term));
}

DiagramSum &DiagramSum::operator+=(DiagramSum const &o)
{
	entries_.insert(entries_.end(), o.entries_.begin(), o.entries_.end());
	return *this;
}

DiagramSum &DiagramSum::operator-=(DiagramSum const &o)
{
	for (auto const &[c, t] : o.entries_)
		entries_.emplace_back(-c, t);
	return *this;
}

DiagramSum &DiagramSum::operator*=(Rational const &c)
{
	if (c == 0)
		entries_.clear();
	for (auto &e : entries_)
		e.first *= c;
	return *this;
}

PlanarTree embed(TreeDiagram const &t)
{
	int const k = t.degree();
	int const leaves = k + 2;
	auto spine = [&](int j) { return leaves + j - 1; }; // j = 1..k
	PlanarTree tree;
	tree.neighbours.resize(leaves + k);
	for (int i = 0; i < leaves; ++i)
		tree.leaf_labels.emplace(i, t.labels()[i]);
	tree.neighbours[0] = {spine(1)};
	tree.neighbours[leaves - 1] = {spine(k)};
	if (k == 1)
	{
		// Y shape, first leaf at the root: reading from it gives [l2, l1]
		tree.neighbours[1] = {spine(1)};
		tree.neighbours[spine(1)] = {0, 1, 2};
		return tree;
	}
	for (int j = 1; j <= k; ++j)
	{
		int const left = j == 1 ? 0 : spine(j - 1);
		int const right = j == k ? leaves - 1 : spine(j + 1);
		tree.neighbours[j] = {spine(j)};
		// counterclockwise starting from the left: left, right, up
		tree.neighbours[spine(j)] = {left, right, j};
	}
	return tree;
}

namespace {

Tensor read_from(PlanarTree const &tree, int v, int parent, int trunc)
{
	auto const &nb = tree.neighbours[v];
	if (nb.size() == 1)
		return to_tensor(tree.leaf_labels.at(v), trunc);
	auto const p = std::find(nb.begin(), nb.end(), parent) - nb.begin();
	int const c1 = nb[(p + 1) % 3];
	int const c2 = nb[(p + 2) % 3];
	return bracket(read_from(tree, c2, v, trunc), read_from(tree, c1, v, trunc));
}

void check_trunc(int degree, int trunc)
{
	if (degree + 2 > trunc)
		throw DomainError("eta of a degree " + std::to_string(degree) +
		                  " tree needs truncation degree >= " +
		                  std::to_string(degree + 2));
}

} // namespace

Tensor rooted_reading(PlanarTree const &tree, int root, int trunc)
{
	if (tree.neighbours.at(root).size() != 1)
		throw DomainError("root must be a leaf");
	return read_from(tree, tree.neighbours[root][0], root, trunc);
}

Tensor eta(TreeDiagram const &t, int trunc)
{
	check_trunc(t.degree(), trunc);
	PlanarTree const tree = embed(t);
	Tensor res(trunc);
	for (auto const &[leaf, label] : tree.leaf_labels)
		res += product(to_tensor(label, trunc), rooted_reading(tree, leaf, trunc));
	return res;
}

Tensor eta(Odot const &o, int trunc)
{
	return Rational(1, 2) * eta(tree(o.u, o.v, o.u, o.v), trunc);
}

Tensor eta(DiagramSum const &d, int trunc)
{
	Tensor res(trunc);
	for (auto const &[c, term] : d.entries())
		res += c * std::visit([&](auto const &x) { return eta(x, trunc); }, term);
	return res;
}

TreeDiagram tree(HVector a, HVector b, HVector c)
{
	return TreeDiagram({std::move(a), std::move(b), std::move(c)});
}

TreeDiagram tree(HVector a, HVector b, HVector c, HVector d)
{
	return TreeDiagram({std::move(a), std::move(b), std::move(c), std::move(d)});
}

TreeDiagram tree(HVector a, HVector b, HVector c, HVector d, HVector e)
{
	return TreeDiagram(
	    {std::move(a), std::move(b), std::move(c), std::move(d), std::move(e)});
}

DiagramSum odot(HVector const &u, HVector const &v)
{
	if (u.coords().size() != v.coords().size())
		throw EncodingError("odot: label lengths differ");
	return DiagramSum(Odot{u, v});
}

DiagramSum morita_tau2(std::vector<std::pair<HVector, HVector>> const &pairs)
{
	for (std::size_t i = 0; i < pairs.size(); ++i)
	{
		if (omega(pairs[i].first, pairs[i].second) != 1)
			throw DomainError("morita_tau2: pair " + std::to_string(i + 1) +
			                  " has omega != 1");
		for (std::size_t j = i + 1; j < pairs.size(); ++j)
		{
			auto const &[u, v] = pairs[i];
			auto const &[x, y] = pairs[j];
			if (omega(u, x) != 0 || omega(u, y) != 0 || omega(v, x) != 0 ||
			    omega(v, y) != 0)
				throw DomainError("morita_tau2: pairs " + std::to_string(i + 1) +
				                  " and " + std::to_string(j + 1) +
				                  " are not orthogonal");
		}
	}
	DiagramSum res;
	for (auto const &[u, v] : pairs)
		res += odot(u, v);
	for (std::size_t i = 0; i < pairs.size(); ++i)
		for (std::size_t j = i + 1; j < pairs.size(); ++j)
			res += tree(pairs[i].first, pairs[i].second, pairs[j].first,
			            pairs[j].second);
	return res;
}

namespace {

int mod3(std::int64_t x) { return static_cast<int>(((x % 3) + 3) % 3); }

int rational_mod3(Rational const &c)
{
	mpz_class const den = c.get_den();
	if (den % 3 == 0)
		throw DomainError("kappa: coefficient " + to_short_string(c) +
		                  " is not defined mod 3");
	// den is 1 or 2 mod 3, and each is its own inverse
	mpz_class const num = c.get_num() % 3;
	return mod3(num.get_si() * mpz_class(den % 3).get_si());
}

} // namespace

void Wedge4Mod3::add_wedge(std::array<int, 4> idx, int coeff)
{
	// sort with sign; repeated index kills the wedge
	int sign = 1;
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j + 1 < 4 - i; ++j)
			if (idx[j] > idx[j + 1])
			{
				std::swap(idx[j], idx[j + 1]);
				sign = -sign;
			}
	for (int i = 0; i + 1 < 4; ++i)
		if (idx[i] == idx[i + 1])
			return;
	int const c = mod3(sign * coeff);
	if (c == 0)
		return;
	int &slot = coeffs_[idx];
	slot = mod3(slot + c);
	if (slot == 0)
		coeffs_.erase(idx);
}

Wedge4Mod3 &Wedge4Mod3::operator+=(Wedge4Mod3 const &o)
{
	for (auto const &[k, c] : o.coeffs_)
		add_wedge(k, c);
	return *this;
}

Wedge4Mod3 wedge(HVector const &a, HVector const &b, HVector const &c,
                 HVector const &d)
{
	Wedge4Mod3 w;
	int const n = static_cast<int>(a.coords().size());
	for (int i = 0; i < n; ++i)
	{
		if (mod3(a[i]) == 0)
			continue;
		for (int j = 0; j < n; ++j)
		{
			if (mod3(b[j]) == 0)
				continue;
			for (int k = 0; k < n; ++k)
			{
				if (mod3(c[k]) == 0)
					continue;
				for (int l = 0; l < n; ++l)
				{
					std::int64_t const coeff =
					    mod3(a[i]) * mod3(b[j]) * mod3(c[k]) * mod3(d[l]);
					if (coeff != 0)
						w.add_wedge({i, j, k, l}, mod3(coeff));
				}
			}
		}
	}
	return w;
}

Wedge4Mod3 kappa(DiagramSum const &d)
{
	Wedge4Mod3 res;
	for (auto const &[c, term] : d.entries())
	{
		int const cm = rational_mod3(c);
		if (auto const *t = std::get_if<TreeDiagram>(&term))
		{
			if (t->degree() != 2)
				throw DomainError("kappa is defined on degree 2 diagrams only");
			if (cm == 0)
				continue;
			auto const &l = t->labels();
			Wedge4Mod3 w = wedge(l[0], l[1], l[2], l[3]);
			for (int i = 0; i < cm; ++i)
				res += w;
		}
		// odot symbols map to zero
	}
	return res;
}

namespace {

std::string label_text(HVector const &v)
{
	std::string out;
	for (std::size_t i = 0; i < v.coords().size(); ++i)
	{
		if (i)
			out += ',';
		out += std::to_string(v[static_cast<int>(i)]);
	}
	return out;
}

std::string term_text(DiagramTerm const &term)
{
	if (auto const *o = std::get_if<Odot>(&term))
		return "O(" + label_text(o->u) + ";" + label_text(o->v) + ")";
	auto const &t = std::get<TreeDiagram>(term);
	std::string out = "T(";
	for (std::size_t i = 0; i < t.labels().size(); ++i)
	{
		if (i)
			out += ';';
		out += label_text(t.labels()[i]);
	}
	return out + ")";
}

} // namespace

std::string to_string(DiagramSum const &d)
{
	if (d.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto const &[c, term] : d.entries())
	{
		if (first)
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		first = false;
		out += to_fraction_string(abs(c)) + " " + term_text(term);
	}
	return out;
}

} // namespace torelli
