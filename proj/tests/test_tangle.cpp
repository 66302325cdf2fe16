#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "foamcalc/tangle.hpp"

using namespace foamcalc;

TEST_CASE("parse and sign derivation: right trefoil") {
	PDCode pd = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
	CHECK(pd.crossings.size() == 3);
	CHECK(pd.n_plus == 3);
	CHECK(pd.n_minus == 0);
	for (auto& c : pd.crossings) CHECK(c.sign == 1);
	CHECK(pd.boundary_edges().empty());
}

TEST_CASE("parse: empty diagram with free loops") {
	PDCode pd = parse_pd("free_loops=1");
	CHECK(pd.crossings.empty());
	CHECK(pd.free_loops == 1);
}

TEST_CASE("parse and sign derivation: figure eight") {
	PDCode pd = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
	CHECK(pd.crossings.size() == 4);
	CHECK(pd.n_plus == 2);
	CHECK(pd.n_minus == 2);
}

TEST_CASE("parse errors") {
	CHECK_THROWS(parse_pd("X[1,2,3]"));
	CHECK_THROWS(parse_pd("Y[1,2,3,4]"));
	// edge label used three times
	CHECK_THROWS(parse_pd("X[1,1,2,2] X[1,3,4,5]"));
}

TEST_CASE("kink PD") {
	PDCode pd = parse_pd("X[1,1,2,2]");  // positive kink
	CHECK(pd.n_plus == 1);
	PDCode neg = parse_pd("X[1,2,2,1]");
	CHECK(neg.n_minus + neg.n_plus == 1);
}

TEST_CASE("crossing resolutions") {
	PDCode pd = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
	for (auto& c : pd.crossings) {
		CrossingResolutions r = resolve_crossing(c);
		CHECK(r.sign == 1);
		// oriented smoothing has parity-0 arcs, singular has parity-1 arcs
		for (int p = 0; p < 4; ++p) {
			CHECK(r.oriented.arc_parity(p) == 0);
			CHECK(r.singular.arc_parity(p) == 1);
		}
		// the two smoothings together use both planar pairings of 4 points
		CHECK(r.oriented.pair_of != r.singular.pair_of);
		CHECK(r.oriented.is_planar());
		CHECK(r.singular.is_planar());
	}
}

TEST_CASE("braid closures") {
	PDCode tref = braid_to_pd({1, 1, 1});
	CHECK(tref.crossings.size() == 3);
	CHECK(tref.n_plus == 3);

	PDCode fig8 = braid_to_pd({1, -2, 1, -2});
	CHECK(fig8.crossings.size() == 4);
	CHECK(fig8.n_plus == 2);
	CHECK(fig8.n_minus == 2);

	PDCode hopf = braid_to_pd({1, 1});
	CHECK(hopf.n_plus == 2);

	// unused strand closes to a free loop
	PDCode with_loop = braid_to_pd({1, 1, 1}, 3);
	CHECK(with_loop.free_loops == 1);

	CHECK(parse_braid_word("s1 s-2 s1 s-2") == std::vector<int>({1, -2, 1, -2}));
}

TEST_CASE("mirror reverses all signs") {
	for (auto word : {std::vector<int>{1, 1, 1}, {1, -2, 1, -2}, {1, 1, 1, 2, -1, 2}}) {
		PDCode pd = braid_to_pd(word);
		PDCode m = mirror_pd(pd);
		CHECK(m.n_plus == pd.n_minus);
		CHECK(m.n_minus == pd.n_plus);
	}
}

TEST_CASE("glue: two cups against two caps gives one loop") {
	// arcs {0-1},{2-3} in both; gluing all four points chains them into a circle
	Matching m1 = Matching::from_pairs({Dir::in, Dir::out, Dir::in, Dir::out}, {{0, 1}, {2, 3}});
	Matching m2 = Matching::from_pairs({Dir::in, Dir::out, Dir::in, Dir::out}, {{0, 3}, {1, 2}});
	auto [glued, created] = glue(m1, {0, 1, 2, 3}, m2, {0, 1, 2, 3});
	CHECK(glued.points() == 0);
	REQUIRE(created.size() == 1);
	CHECK(created[0] == LoopKind::oriented);
}

TEST_CASE("glue: identity strands compose to identity strands") {
	// points 0,1 are the bottom (in), 2,3 the top (out)
	Matching id2 = Matching::from_pairs({Dir::in, Dir::in, Dir::out, Dir::out}, {{0, 3}, {1, 2}});
	auto [glued, created] = glue(id2, {2, 3}, id2, {0, 1});
	CHECK(glued.points() == 4);
	CHECK(created.empty());
	CHECK(glued.is_planar());
	CHECK(glued.loops.empty());
	// still two parallel strands with two in and two out tags
	int ins = 0;
	for (Dir d : glued.dirs) ins += d == Dir::in;
	CHECK(ins == 2);
}

TEST_CASE("glue precondition failures") {
	Matching m1 = Matching::from_pairs({Dir::in, Dir::out}, {{0, 1}});
	Matching m2 = Matching::from_pairs({Dir::in, Dir::out}, {{0, 1}});
	CHECK_THROWS(glue(m1, {0}, m2, {0}));  // in against in
	CHECK_THROWS(glue(m1, {0}, m2, {0, 1}));  // size mismatch
	Matching id2 = Matching::from_pairs({Dir::in, Dir::in, Dir::out, Dir::out}, {{0, 3}, {1, 2}});
	CHECK_THROWS(glue(id2, {0, 2}, id2, {0, 1}));  // non-contiguous segment

	// gluing both endpoints of two arcs head-to-tail closes a loop
	auto [closed, created] = glue(m1, {0, 1}, m2, {0, 1});
	CHECK(closed.points() == 0);
	REQUIRE(created.size() == 1);
}

TEST_CASE("zip basics") {
	Matching m = Matching::from_pairs({Dir::in, Dir::out, Dir::in, Dir::out}, {{0, 1}, {2, 3}});
	// zip 1-2 merges the two arcs
	ZipResult r = zip(m, 1);
	CHECK(r.m.points() == 2);
	CHECK(r.closed_loop == -1);
	CHECK(r.m.pair_of[0] == 1);
	// then zip the remaining pair into a loop
	ZipResult r2 = zip(r.m, 1);
	CHECK(r2.m.points() == 0);
	REQUIRE(r2.closed_loop == 0);
	CHECK(r2.m.loops[0] == LoopKind::oriented);

	// equal tags at adjacent points cannot be zipped
	Matching same = Matching::from_pairs({Dir::in, Dir::in, Dir::out, Dir::out}, {{0, 3}, {1, 2}});
	CHECK_THROWS(zip(same, 0));
}

TEST_CASE("glue is associative where defined") {
	// three 2-point identity strands glued in both bracketings
	Matching arc = Matching::from_pairs({Dir::in, Dir::out}, {{0, 1}});
	auto ab = glue(arc, {1}, arc, {0}).first;
	auto ab_c = glue(ab, {1}, arc, {0}).first;
	auto bc = glue(arc, {1}, arc, {0}).first;
	auto a_bc = glue(arc, {1}, bc, {0}).first;
	CHECK(ab_c == a_bc);

	// randomized: chains of rainbow matchings glued end to end
	std::mt19937 rng(99);
	for (int trial = 0; trial < 50; ++trial) {
		auto rainbow = [&](int k) {
			std::vector<Dir> d;
			std::vector<std::pair<int, int>> pr;
			for (int t = 0; t < k; ++t) {
				d.push_back(Dir::in);
				pr.push_back({t, 2 * k - 1 - t});
			}
			for (int t = 0; t < k; ++t) d.push_back(Dir::out);
			return Matching::from_pairs(d, pr);
		};
		int k = 1 + (int)(rng() % 3);
		Matching m = rainbow(k);
		// glue m's out-run to another copy's in-run, two bracketings
		std::vector<int> outs, ins;
		for (int t = 0; t < k; ++t) outs.push_back(k + t), ins.push_back(t);
		auto xy = glue(m, outs, m, ins).first;
		std::vector<int> outs2;
		for (int t = 0; t < k; ++t) outs2.push_back(k + t);
		auto xy_z = glue(xy, outs2, m, ins).first;
		auto yz = glue(m, outs, m, ins).first;
		auto x_yz = glue(m, outs, yz, ins).first;
		CHECK(xy_z == x_yz);
	}
}

TEST_CASE("ordering heuristic") {
	PDCode tref = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
	auto order = ordering_heuristic(tref);
	CHECK(order.size() == 3);

	// figure eight: open boundary never exceeds 4 under the greedy order
	PDCode fig8 = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
	auto ord8 = ordering_heuristic(fig8);
	std::multiset<int> open;
	size_t maxopen = 0;
	for (int c : ord8) {
		for (int e : fig8.crossings[c].edges) {
			auto it = open.find(e);
			if (it != open.end())
				open.erase(it);
			else
				open.insert(e);
		}
		maxopen = std::max(maxopen, open.size());
	}
	CHECK(open.empty());
	CHECK(maxopen <= 4);

	// granny knot: one trefoil factor completes before the other starts
	PDCode granny = braid_to_pd({1, 1, 1, 2, 2, 2});
	auto og = ordering_heuristic(granny);
	std::set<int> first3(og.begin(), og.begin() + 3);
	bool factor_first = first3 == std::set<int>({0, 1, 2}) || first3 == std::set<int>({3, 4, 5});
	CHECK(factor_first);
}
