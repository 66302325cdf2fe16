#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foamcalc/homology.hpp"

using namespace foamcalc;

namespace {

const Specialization origin{GaussianRat(0), GaussianRat(0)};
const Specialization lee{GaussianRat(1), GaussianRat(0)};

BigradedTable homology_of(const PDCode& pd, const Specialization& s = origin) {
	AssembleResult r = assemble(pd, ordering_heuristic(pd), 0);
	return cohomology(apply_tqft(r.complex), s);
}

BigradedTable naive_homology_of(const PDCode& pd, const Specialization& s = origin) {
	AssembleResult r = naive_cube(pd);
	return cohomology(apply_tqft(r.complex), s);
}

std::map<std::pair<int, int>, int> ranks_of(const BigradedTable& t) { return t.ranks; }

bool object_count_equal(const FormalComplex& a, const FormalComplex& b) {
	return a.total_objects() == b.total_objects() && a.min_deg == b.min_deg;
}

}  // namespace

TEST_CASE("unknot: rank one at (0,1) and (0,-1)") {
	BigradedTable t = homology_of(parse_pd("free_loops=1"));
	CHECK(ranks_of(t) == std::map<std::pair<int, int>, int>({{{0, -1}, 1}, {{0, 1}, 1}}));

	// kinked unknots agree (Reidemeister I at homology level)
	CHECK(ranks_of(homology_of(parse_pd("X[1,1,2,2]"))) == ranks_of(t));
	CHECK(ranks_of(homology_of(braid_to_pd({-1}))) == ranks_of(t));
}

TEST_CASE("figure eight: the six bidegrees") {
	PDCode pd = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
	BigradedTable t = homology_of(pd);
	std::map<std::pair<int, int>, int> expect{
	    {{-2, 5}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}, {{0, 1}, 1}, {{1, -1}, 1}, {{2, -5}, 1}};
	CHECK(ranks_of(t) == expect);
	CHECK(t.total_rank() == 6);
}

TEST_CASE("figure eight via braid word and alternative orders") {
	PDCode pd = braid_to_pd({1, -2, 1, -2});
	std::map<std::pair<int, int>, int> expect{
	    {{-2, 5}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}, {{0, 1}, 1}, {{1, -1}, 1}, {{2, -5}, 1}};
	CHECK(ranks_of(homology_of(pd)) == expect);

	std::vector<int> order{0, 1, 2, 3}, rev{3, 2, 1, 0}, shuffled{2, 0, 3, 1};
	for (auto& o : {order, rev, shuffled}) {
		AssembleResult r = assemble(pd, o, 0);
		CHECK(ranks_of(cohomology(apply_tqft(r.complex), origin)) == expect);
	}
}

TEST_CASE("oracle equivalence for small knots") {
	for (auto word : {std::vector<int>{1, 1}, {1, 1, 1}, {1, -2, 1, -2}, {1, 1, 1, 1, 1}}) {
		PDCode pd = braid_to_pd(word);
		CHECK(ranks_of(homology_of(pd)) == ranks_of(naive_homology_of(pd)));
	}
}

TEST_CASE("euler characteristic equals the skein polynomial") {
	for (auto word : {std::vector<int>{1, 1}, {1, 1, 1}, {1, -2, 1, -2}, {1, 1, 1, 2, 2, 2}}) {
		PDCode pd = braid_to_pd(word);
		BigradedTable t = homology_of(pd);
		CHECK(poincare_at_minus_one(t) == p2(pd));
	}
}

TEST_CASE("deformation a=1, h=0 collapses knots to total dimension two") {
	for (auto word : {std::vector<int>{1, 1, 1}, {1, -2, 1, -2}}) {
		PDCode pd = braid_to_pd(word);
		BigradedTable t = homology_of(pd, lee);
		CHECK_FALSE(t.q_graded);
		CHECK(t.total_rank() == 2);
		BigradedTable n = naive_homology_of(pd, lee);
		CHECK(n.total_rank() == 2);
	}
}

TEST_CASE("mirror reflects the table") {
	for (auto word : {std::vector<int>{1, 1, 1}, {1, -2, 1, -2}}) {
		PDCode pd = braid_to_pd(word);
		std::vector<int> mirrored;
		for (int x : word) mirrored.push_back(-x);
		PDCode mir = braid_to_pd(mirrored);
		auto t = ranks_of(homology_of(pd));
		auto m = ranks_of(homology_of(mir));
		std::map<std::pair<int, int>, int> reflected;
		for (auto& [ij, r] : t) reflected[{-ij.first, -ij.second}] = r;
		CHECK(m == reflected);
	}
}

TEST_CASE("integral homology: free ranks match the field ranks") {
	for (auto word : {std::vector<int>{1, 1, 1}, {1, -2, 1, -2}}) {
		PDCode pd = braid_to_pd(word);
		AssembleResult r = assemble(pd, ordering_heuristic(pd), 0);
		AlgebraicComplex A = apply_tqft(r.complex);
		BigradedTable zi = integral_homology(A);
		BigradedTable qi = cohomology(A, origin);
		CHECK(zi.ranks == qi.ranks);
	}
	// the unknot has no torsion anywhere
	AssembleResult u = assemble(parse_pd("free_loops=1"), {}, 0);
	BigradedTable t = integral_homology(apply_tqft(u.complex));
	CHECK(t.torsion.empty());
	CHECK(t.ranks == std::map<std::pair<int, int>, int>({{{0, -1}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("trefoil carries 2-torsion over Z[i]") {
	// Z/2 = Z[i]/(1+i)^2: expect a nontrivial elementary divisor somewhere
	PDCode pd = braid_to_pd({1, 1, 1});
	AssembleResult r = assemble(pd, ordering_heuristic(pd), 0);
	BigradedTable t = integral_homology(apply_tqft(r.complex));
	CHECK_FALSE(t.torsion.empty());
}

TEST_CASE("poincare polynomial printing and evaluation") {
	PDCode pd = braid_to_pd({1, -2, 1, -2});
	BigradedTable t = homology_of(pd);
	Poincare p = poincare_polynomial(t);
	CHECK(p.terms.size() == 6);
	LaurentPoly expect;
	expect += LaurentPoly(1, 5);
	expect += LaurentPoly(1, -5);
	CHECK(poincare_at_minus_one(t) == expect);
	CHECK(p.str().find("t^-2*q^5") != std::string::npos);

	BigradedTable u = homology_of(parse_pd("free_loops=1"));
	CHECK(poincare_polynomial(u).str() == "q^-1 + q");
}

TEST_CASE("smith normal form basics") {
	using detail::smith_diagonal;
	// diag(1, 2) from a shear
	std::vector<std::vector<GaussianInt>> m = {
	    {GaussianInt(2), GaussianInt(4)}, {GaussianInt(0), GaussianInt(1)}};
	auto d = smith_diagonal(m);
	REQUIRE(d.size() == 2);
	CHECK(d[0] == GaussianInt(1));
	CHECK(d[1] == GaussianInt(2));

	// 2 = -i (1+i)^2 is not a unit, but (1+i) divides it
	std::vector<std::vector<GaussianInt>> g = {{GaussianInt(Int(1), Int(1))}};
	auto dg = smith_diagonal(g);
	REQUIRE(dg.size() == 1);
	CHECK(dg[0].norm() == 2);
}

TEST_CASE("apply_tqft expands loops into A-basis generators") {
	// a single oriented loop carries generators at q = +1 and -1
	FormalComplex C = single_object_complex(Matching::loop(LoopKind::oriented), 0);
	AlgebraicComplex A = apply_tqft(C);
	REQUIRE(A.qdegs.size() == 1);
	std::multiset<int> qs(A.qdegs[0].begin(), A.qdegs[0].end());
	CHECK(qs == std::multiset<int>({-1, 1}));
	BigradedTable t = cohomology(A, origin);
	CHECK(t.ranks == std::map<std::pair<int, int>, int>({{{0, -1}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("the dot-difference map on two loops gives the 4x4 matrix") {
	Matching two;
	two.loops = {LoopKind::oriented, LoopKind::oriented};
	MorphismSum tube2 = identity_with_tubes(two);
	MorphismSum dot_left = tube2, dot_right = tube2;
	// loops are sorted inside components; the earlier curve pair is loop 0
	for (auto& c : dot_left.terms[0].components)
		if (c.curves[0].id == 0) c.dots = 1;
	for (auto& c : dot_right.terms[0].components)
		if (c.curves[0].id == 1) c.dots = 1;
	const RingElem i_ = RingElem::unit_i(), a = RingElem::var_a(), h = RingElem::var_h();
	MorphismSum f = add(scale(i_, dot_left), scale(-i_, dot_right));
	auto m = tqft_matrix(f);
	const RingElem z = RingElem::zero();
	std::vector<std::vector<RingElem>> expect = {
	    {z, -a * i_, a * i_, z},
	    {-i_, -h * i_, z, a * i_},
	    {i_, z, h * i_, -a * i_},
	    {z, i_, -i_, z}};
	CHECK(m == expect);
}

TEST_CASE("tensor with the empty complex changes nothing") {
	PDCode pd = braid_to_pd({1, 1, 1});
	AssembleResult r = assemble(pd, ordering_heuristic(pd), 0);
	FormalComplex glued = tensor_complexes(r.complex, empty_complex(), 0, 0);
	CHECK(object_count_equal(glued, r.complex));
	CHECK(cohomology(apply_tqft(glued), origin).ranks ==
	      cohomology(apply_tqft(r.complex), origin).ranks);
}

#include "foamcalc/diagrams.hpp"

TEST_CASE("alternating knots: all torsion is 2-torsion, (det-1)/2 classes") {
	// the knight-move structure of thin knots: total free rank det+1 and one
	// order-two class per knight pair
	for (auto& d : bundled_prime_knots()) {
		AssembleResult r = assemble(d.pd, ordering_heuristic(d.pd), 0);
		AlgebraicComplex A = apply_tqft(r.complex);
		BigradedTable zi = integral_homology(A);
		INFO(d.name);
		CHECK(zi.total_rank() == d.determinant + 1);
		long classes = 0;
		for (auto& [ij, ds] : zi.torsion) {
			for (auto& s : ds) {
				CHECK(s == "(2+0i)");
				classes++;
			}
		}
		CHECK(classes == (d.determinant - 1) / 2);
	}
}
