#include "torelli/psi_dataset.hpp"

#include "torelli/errors.hpp"

namespace torelli {

namespace {

constexpr int g = PsiDataset::genus;

HVector const a1 = HVector::a(1, g);
HVector const a2 = HVector::a(2, g);
HVector const b1 = HVector::b(1, g);
HVector const b2 = HVector::b(2, g);

Barcode brack(int x, int y) { return commutator_barcode({x}, {y}); }
Barcode bra(Barcode const &u, Barcode const &v) { return conjugate_barcode(u, v); }

PsiEntry genus1(std::string name, int coeff, Barcode u, Barcode v)
{
	Barcode curve = bra(u, v);
	return {std::move(name), {coeff, 1, std::move(curve)}, {{std::move(u), std::move(v)}}};
}

std::vector<PsiEntry> build_entries()
{
	std::vector<PsiEntry> e;
	e.push_back({"gamma2",
	             {-3, 2, brack(3, -4) + brack(1, -2)},
	             {{Barcode{3}, Barcode{-4}}, {Barcode{1}, Barcode{-2}}}});
	e.push_back(genus1("t1", -1, brack(-2, 1) + Barcode{-4, 1}, {-2}));
	e.push_back(genus1("t2", -1, {1}, {-4, 3, 4, -2}));
	e.push_back(genus1("t3", 2, {1}, Barcode{-4, -3, 4} + brack(1, -2) + Barcode{-2}));
	e.push_back(genus1("t4", 2, {3}, {-1, -4}));
	e.push_back(genus1("t5", 1, {1}, {-4, -3, -2}));
	e.push_back(genus1("t6", -1, {3}, {-2, -1, -4}));
	e.push_back(genus1("t7", -1, Barcode{-3, 4} + brack(1, -2) + Barcode{-2, -1, -4}, {4}));
	e.push_back(genus1("t8", 1, {3, 4, 1}, {-2}));
	e.push_back(genus1("t9", -1, {1}, {-4, -2}));
	e.push_back(genus1("t10", 1, Barcode{-4, -3, 4} + brack(1, -2) + Barcode{-2}, {4}));
	e.push_back(genus1("t11", -1, brack(-2, 1) + Barcode{-4, 3, 4, 1}, {-2}));
	e.push_back(genus1("t12", -1,
	                   Barcode{1, -4, -3, 4} + brack(1, -2) + Barcode{4, 1} +
	                       brack(-2, 1) + Barcode{-4, 3, 4},
	                   Barcode{-4, -3, 4} + brack(1, -2) + Barcode{-2}));
	e.push_back(genus1("t13", 1, Barcode{-4, -3, 4} + brack(1, -2) + Barcode{-2, -1},
	                   {1, 2, 4}));
	e.push_back({"s1", {7, 1, brack(1, -2)}, {{Barcode{1}, Barcode{-2}}}});
	e.push_back({"s2", {2, 1, brack(3, -4)}, {{Barcode{3}, Barcode{-4}}}});
	return e;
}

DiagramSum build_expected_tau3()
{
	DiagramSum s;
	s.add(-1, tree(a2, a1, a1, b1, a1));
	s.add(-1, tree(a2, b1, a1, a2, a1));
	s.add(-1, tree(b2, a1, a1, b1, a1));
	s.add(-1, tree(b2, b1, a1, b1, a1));
	s.add(1, tree(b2, a2, a1, b1, a1));
	s.add(1, tree(b2, a2, a1, a2, a1));
	s.add(1, tree(b2, a2, a1, b2, a1));
	s.add(1, tree(b2, a2, b1, b2, a1));
	s.add(3, tree(b2, a2, a2, b1, a1));
	s.add(1, tree(b2, a2, a2, a2, a1));
	s.add(1, tree(b2, a2, b2, b1, a1));
	s.add(-1, tree(b2, a1, a2, b1, a1));
	s.add(1, tree(b2, b1, a2, b1, a1));
	s.add(1, tree(b2, a2, b2, a2, a1));
	s.add(-1, tree(b2, a2, b2, a2, b1));
	return s;
}

DiagramSum build_expected_tau3_compact()
{
	DiagramSum s;
	s.add(1, tree(b1 + a2, a1, a1 + a2 + b2, a2, a1 + b2));
	s.add(1, tree(a2 - a1, b2, a1 + b1, a1, b1 + b2));
	s.add(-1, tree(a2 - a1, b1, b2, a2, b1 + b2));
	s.add(1, tree(b2, a2, 2 * a2 - 2 * a1 + b2, b1, a1));
	return s;
}

std::vector<BracketExpr> build_bracket_terms()
{
	using B = BracketExpr;
	std::vector<BracketExpr> terms;

	DiagramSum first = Rational(3) * DiagramSum(tree(a1, b1, a2));
	first += tree(b2, a2, a1);
	first += tree(a1, b1, b2);
	terms.push_back(B::bracket(B::of(first), B::of(tree(a1, b1, a2, b2))));

	terms.push_back(B::bracket(B::of(tree(b1, a1, a2 - b2)),
	                           B::of(tree(a1, a2, b2, a1))));
	terms.push_back(B::bracket(B::of(tree(a2, b2, a1)),
	                           B::of(tree(a2, b1, a1, a2))));
	terms.push_back(B::bracket(
	    B::of(tree(a1, b1, a2)),
	    B::bracket(B::of(tree(a1, b1, b2)), B::of(tree(a1 - b1, a2, b2)))));
	terms.push_back(B::bracket(
	    B::of(tree(b1, a2, b2)),
	    B::bracket(B::of(tree(a1, b2, a2)), B::of(tree(a1, b1, b2)))));
	return terms;
}

DiagramSum build_boundary_cube()
{
	DiagramSum s;
	s.add(Rational(3, 2), tree(a1, b1, a1, b1));
	s.add(3, tree(a1, b1, a2, b2));
	s.add(Rational(3, 2), tree(a2, b2, a2, b2));
	return s;
}

DiagramSum build_boundary_cube_odots()
{
	DiagramSum s;
	auto o = [&](Rational c, HVector const &u, HVector const &v) {
		s.add(c, Odot{u, v});
	};
	o(7, a1, b1);
	o(2, a2, b2);
	o(-1, a1, b1 + b2);
	o(1, b1 + a2, b2);
	o(-1, a1 + a2, b1);
	o(-1, a1 + b1 + a2, b2);
	o(1, a1 + a2 + b2, b1);
	o(1, a1, b1 + a2 + b2);
	o(-1, a2, a1 + b1 + b2);
	o(2, a1, b1 + a2);
	o(2, a2, a1 + b2);
	o(-1, a1 - b2, b1);
	o(-1, a1, b1 - a2);
	o(-1, 2 * a1 + b2, b1 + a2);
	o(1, a1 + b1 + a2, a1 + b1 + b2);
	return s;
}

DiagramSum build_mixed_tree_odots()
{
	DiagramSum s;
	s.add(1, Odot{a1, b1});
	s.add(-1, Odot{a1, b1 + a2});
	s.add(-1, Odot{a1 + a2, b1});
	s.add(1, Odot{a1 + a2, b1 + a2});
	return s;
}

PsiDataset build()
{
	PsiDataset d;
	d.entries = build_entries();
	d.expected_tau3 = build_expected_tau3();
	d.expected_tau3_compact = build_expected_tau3_compact();
	d.bracket_terms = build_bracket_terms();
	d.boundary_cube = build_boundary_cube();
	d.boundary_cube_odots = build_boundary_cube_odots();
	d.mixed_tree = tree(a2, b1, a1, a2);
	d.mixed_tree_odots = build_mixed_tree_odots();
	d.y7_alternative = Barcode{-3, 4, 1, -2, -1, -1, 4, 1, 1, 2, -1, -4, 3, -4};
	return d;
}

int diagram_degree(DiagramSum const &d)
{
	int degree = -1;
	for (auto const &[c, term] : d.entries())
	{
		int const k = std::holds_alternative<Odot>(term)
		                  ? 2
		                  : std::get<TreeDiagram>(term).degree();
		if (degree >= 0 && k != degree)
			throw DomainError("bracket operand mixes degrees");
		degree = k;
	}
	if (degree < 0)
		throw DomainError("empty bracket operand");
	return degree;
}

} // namespace

BracketExpr BracketExpr::of(DiagramSum d) { return {std::move(d), {}}; }

BracketExpr BracketExpr::bracket(BracketExpr x, BracketExpr y)
{
	BracketExpr e;
	e.args.push_back(std::move(x));
	e.args.push_back(std::move(y));
	return e;
}

int BracketExpr::degree() const
{
	if (args.empty())
		return diagram_degree(leaf);
	return args[0].degree() + args[1].degree();
}

TwistList PsiDataset::twists() const
{
	TwistList list;
	for (auto const &e : entries)
		list.push_back(e.twist);
	return list;
}

PsiEntry const &PsiDataset::entry(std::string const &name) const
{
	for (auto const &e : entries)
		if (e.name == name)
			return e;
	throw DomainError("no dataset entry named " + name);
}

PsiDataset const &load_psi()
{
	static PsiDataset const dataset = build();
	return dataset;
}

DiagramSum morita_form(PsiEntry const &entry, int genus)
{
	std::vector<std::pair<HVector, HVector>> pairs;
	for (auto const &[u, v] : entry.spine)
	{
		HVector hu = homology_class(u, genus);
		HVector hv = homology_class(v, genus);
		std::int64_t const w = omega(hu, hv);
		if (w == 1)
			pairs.emplace_back(std::move(hu), std::move(hv));
		else if (w == -1)
			pairs.emplace_back(std::move(hv), std::move(hu));
		else
			throw DomainError(entry.name + ": spine curves meet with omega = " +
			                  std::to_string(w));
	}
	return morita_tau2(pairs);
}

Derivation evaluate(BracketExpr const &e, int genus, int trunc)
{
	if (e.args.empty())
		return as_derivation(eta(e.leaf, trunc), e.degree(), genus);
	return derivation_bracket(evaluate(e.args[0], genus, trunc),
	                          evaluate(e.args[1], genus, trunc));
}

} // namespace torelli
