#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foamcalc/skein.hpp"

using namespace foamcalc;

namespace {
LaurentPoly q(int e) { return LaurentPoly(1, e); }
}

TEST_CASE("unknots") {
	CHECK(p2(parse_pd("free_loops=1")) == LaurentPoly::q_plus_qinv());
	// positive kink: q(q+1/q)^2 - q^2(q+1/q) = q+1/q
	CHECK(p2(parse_pd("X[1,1,2,2]")) == LaurentPoly::q_plus_qinv());
	// kinked unknot as a braid closure
	CHECK(p2(braid_to_pd({1})) == LaurentPoly::q_plus_qinv());
	CHECK(p2(braid_to_pd({-1})) == LaurentPoly::q_plus_qinv());
}

TEST_CASE("unlinks multiply") {
	for (int k = 1; k <= 4; ++k) {
		PDCode pd;
		pd.free_loops = k;
		CHECK(p2(pd) == LaurentPoly::q_plus_qinv().pow(k));
	}
	// disjoint free loop multiplies the trefoil value
	PDCode tref = braid_to_pd({1, 1, 1});
	PDCode tref_loop = tref;
	tref_loop.free_loops = 1;
	CHECK(p2(tref_loop) == p2(tref) * LaurentPoly::q_plus_qinv());
}

TEST_CASE("right trefoil") {
	// hand expansion: q^3(q+1/q)^2 - 3q^4(q+1/q) + 3q^5(q+1/q)^2 - q^6(q+1/q)^3
	LaurentPoly expect = q(1) + q(3) + q(5) - q(9);
	CHECK(p2(braid_to_pd({1, 1, 1})) == expect);
	CHECK(p2(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")) == expect);
	// mirror inverts q
	LaurentPoly mexpect = q(-1) + q(-3) + q(-5) - q(-9);
	CHECK(p2(braid_to_pd({-1, -1, -1})) == mexpect);
}

TEST_CASE("positive Hopf link") {
	LaurentPoly expect = q(6) + q(4) + q(2) + q(0);
	CHECK(p2(braid_to_pd({1, 1})) == expect);
}

TEST_CASE("figure eight") {
	LaurentPoly expect = q(5) + q(-5);
	CHECK(p2(braid_to_pd({1, -2, 1, -2})) == expect);
	CHECK(p2(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")) == expect);
}

TEST_CASE("Reidemeister invariance via Markov moves") {
	std::vector<std::vector<int>> words = {{1, 1, 1}, {1, -2, 1, -2}, {1, 1}};
	for (auto& w : words) {
		LaurentPoly base = p2(braid_to_pd(w));
		// R1: Markov stabilization
		int n = 0;
		for (int x : w) n = std::max(n, std::abs(x) + 1);
		auto r1 = w;
		r1.push_back(n);
		CHECK(p2(braid_to_pd(r1)) == base);
		// R2: sigma sigma^{-1}
		auto r2 = w;
		r2.push_back(1);
		r2.push_back(-1);
		CHECK(p2(braid_to_pd(r2)) == base);
		// R3: braid relation
		auto r3a = w, r3b = w;
		for (int x : {1, 2, 1}) r3a.push_back(x);
		for (int x : {2, 1, 2}) r3b.push_back(x);
		CHECK(p2(braid_to_pd(r3a)) == p2(braid_to_pd(r3b)));
	}
}

TEST_CASE("string form") {
	CHECK((q(5) + q(-5)).str() == "q^5 + q^-5");
	CHECK((q(1) + q(-1)).str() == "q + q^-1");
	CHECK((q(1) + q(3) + q(5) - q(9)).str() == "-q^9 + q^5 + q^3 + q");
	CHECK(LaurentPoly().str() == "0");
	CHECK((LaurentPoly(2) + q(2) + q(2)).str() == "2*q^2 + 2");
}

TEST_CASE("errors") {
	// open tangle has no bracket
	PDCode open_pd = parse_pd("X[1,2,3,4] X[3,2,5,6]");
	CHECK_THROWS(p2(open_pd));
	PDCode big;
	for (int k = 0; k < 17; ++k) big.crossings.push_back({});
	CHECK_THROWS(p2(big, 16));
}
