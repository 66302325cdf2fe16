#ifndef FOAMCALC_DIAGRAMS_HPP
#define FOAMCALC_DIAGRAMS_HPP

#include <functional>
#include <numeric>

#include "foamcalc/tangle.hpp"

// The bundled diagram set: all prime knots with at most seven crossings,
// the Hopf link, unlinks, connected sums, and the eight-crossing torus knot
// used by the benchmark. Torus and twist cases come from braid closures;
// the remaining two-bridge knots are generated as plat closures of
// four-strand braids read off a continued fraction, which keeps each
// diagram alternating with crossing count equal to the sum of the twists.

namespace foamcalc {

// ---------------------------------------------------------------------------
// plat closure of a braid word (even strand count, caps joining 2k-1,2k at
// bottom and top). Orientations are traced through the diagram before the
// tuples are emitted, since plat strands double back.
// ---------------------------------------------------------------------------

inline PDCode plat_to_pd(const std::vector<int>& word, int strands) {
	if (strands % 2) throw std::invalid_argument("plat_to_pd: odd strand count");
	for (int w : word)
		if (w == 0 || std::abs(w) >= strands) throw std::invalid_argument("plat_to_pd: bad letter");
	int n = (int)word.size();

	// ports: crossing c has SW=4c, SE=4c+1, NW=4c+2, NE=4c+3
	auto SW = [](int c) { return 4 * c; };
	auto SE = [](int c) { return 4 * c + 1; };
	auto NW = [](int c) { return 4 * c + 2; };
	auto NE = [](int c) { return 4 * c + 3; };

	// segments join ports (or cap ends); track the open port per strand slot
	std::vector<std::pair<int, int>> segments;  // pairs of ports
	std::vector<int> open_port(strands, -1);    // current dangling port per slot
	std::vector<std::pair<int, int>> bottom_caps, top_caps;  // slots
	// bottom caps: virtual ports -(2k+1), -(2k+2) to seed the traversal
	for (int k = 0; k < strands / 2; ++k) bottom_caps.push_back({2 * k, 2 * k + 1});

	std::vector<int> cap_port_of_slot(strands, -1);
	int next_virtual = -1;
	for (int k = 0; k < strands / 2; ++k) {
		int pa = next_virtual--, pb = next_virtual--;
		cap_port_of_slot[2 * k] = pa;
		cap_port_of_slot[2 * k + 1] = pb;
		open_port[2 * k] = pa;
		open_port[2 * k + 1] = pb;
	}
	std::map<int, int> cap_partner;  // virtual port -> virtual port
	for (int k = 0; k < strands / 2; ++k) {
		cap_partner[cap_port_of_slot[2 * k]] = cap_port_of_slot[2 * k + 1];
		cap_partner[cap_port_of_slot[2 * k + 1]] = cap_port_of_slot[2 * k];
	}

	std::vector<int> letter_sign(n);
	for (int c = 0; c < n; ++c) {
		int k = std::abs(word[c]) - 1;
		letter_sign[c] = word[c] > 0 ? +1 : -1;
		segments.push_back({open_port[k], SW(c)});
		segments.push_back({open_port[k + 1], SE(c)});
		open_port[k] = NW(c);
		open_port[k + 1] = NE(c);
	}
	for (int k = 0; k < strands / 2; ++k) {
		int pa = next_virtual--, pb = next_virtual--;
		cap_partner[pa] = pb;
		cap_partner[pb] = pa;
		segments.push_back({open_port[2 * k], pa});
		segments.push_back({open_port[2 * k + 1], pb});
		top_caps.push_back({2 * k, 2 * k + 1});
	}

	// adjacency: each port meets exactly one segment end
	std::map<int, int> seg_at;  // port -> segment index
	for (int s = 0; s < (int)segments.size(); ++s) {
		seg_at[segments[s].first] = s;
		seg_at[segments[s].second] = s;
	}
	// strands pass straight through crossings: SW<->NE, SE<->NW
	auto through = [&](int port) {
		int c = port / 4, r = port % 4;
		static const int pass[4] = {3, 2, 1, 0};
		return 4 * c + pass[r];
	};

	// trace each component, assigning a direction to every segment:
	// dir_into[port] = true when the strand runs into that port
	std::map<int, bool> dir_into;
	int free_loops = 0;
	std::vector<bool> seg_seen(segments.size(), false);
	for (int s0 = 0; s0 < (int)segments.size(); ++s0) {
		if (seg_seen[s0]) continue;
		// walk forward from segments[s0].first toward .second
		int seg = s0;
		int entry = segments[s0].first;  // we are travelling entry -> other end
		bool closed_without_crossing = true;
		do {
			seg_seen[seg] = true;
			int exit_port = segments[seg].first == entry ? segments[seg].second : segments[seg].first;
			dir_into[exit_port] = true;
			dir_into[entry] = false;
			int next_entry;
			if (exit_port < 0) {
				next_entry = cap_partner.at(exit_port);
			} else {
				closed_without_crossing = false;
				next_entry = through(exit_port);
			}
			entry = next_entry;
			seg = seg_at.at(entry);
		} while (seg != s0 || entry != segments[s0].first);
		if (closed_without_crossing) free_loops++;
	}

	// edges: segments glued through caps
	std::vector<int> edge_of(segments.size());
	{
		std::vector<int> parent(segments.size());
		std::iota(parent.begin(), parent.end(), 0);
		std::function<int(int)> find = [&](int x) {
			while (parent[x] != x) x = parent[x] = parent[parent[x]];
			return x;
		};
		for (auto& [pa, pb] : cap_partner) {
			if (pa > pb) continue;
			parent[find(seg_at.at(pa))] = find(seg_at.at(pb));
		}
		std::map<int, int> ids;
		for (int s = 0; s < (int)segments.size(); ++s) {
			int r = find(s);
			if (!ids.count(r)) ids[r] = (int)ids.size() + 1;
			edge_of[s] = ids[r];
		}
	}

	PDCode pd;
	pd.free_loops = free_loops;
	for (int c = 0; c < n; ++c) {
		// under-strand: for a positive letter the left strand passes over,
		// so under runs SE<->NW; negative: SW<->NE
		int u_in, ports[4];
		if (letter_sign[c] > 0) {
			u_in = dir_into.at(SE(c)) ? SE(c) : NW(c);
		} else {
			u_in = dir_into.at(SW(c)) ? SW(c) : NE(c);
		}
		// counterclockwise orders starting from each possible under-in port
		auto ccw = [&](int start) {
			// planar CCW cycle: SW, SE, NE, NW
			int cyc[4] = {SW(c), SE(c), NE(c), NW(c)};
			int at = 0;
			while (cyc[at] != start) at++;
			for (int k = 0; k < 4; ++k) ports[k] = cyc[(at + k) % 4];
		};
		ccw(u_in);
		Crossing cx;
		for (int k = 0; k < 4; ++k) cx.edges[k] = edge_of[seg_at.at(ports[k])];
		pd.crossings.push_back(cx);
	}
	derive_orientations(pd);
	return pd;
}

// alternating four-plat from a continued fraction [a1, a2, ...]; the
// determinant is the continuant (the fraction's numerator). Plat closure
// needs an odd number of twist regions, and [..., a] = [..., a-1, 1] keeps
// both the continuant and the crossing count.
inline PDCode rational_knot_pd(std::vector<int> cf) {
	for (int a : cf)
		if (a <= 0) throw std::invalid_argument("rational_knot_pd: twists must be positive");
	if (cf.size() % 2 == 0) {
		if (cf.back() == 1) {  // [..., b, 1] = [..., b+1]
			cf.pop_back();
			cf.back() += 1;
		} else {
			cf.back() -= 1;
			cf.push_back(1);
		}
	}
	std::vector<int> word;
	for (size_t k = 0; k < cf.size(); ++k)
		for (int t = 0; t < cf[k]; ++t) word.push_back(k % 2 == 0 ? 2 : -1);
	return plat_to_pd(word, 4);
}

// continuant: numerator of the continued fraction, the determinant of the
// resulting two-bridge knot
inline long continuant(const std::vector<int>& cf) {
	long p = 1, q = 0;
	for (int a : cf) {
		long next = a * p + q;
		q = p;
		p = next;
	}
	return p;
}

// ---------------------------------------------------------------------------
// the bundle
// ---------------------------------------------------------------------------

struct NamedDiagram {
	std::string name;
	PDCode pd;
	long determinant = 0;  // 0 when not an alternating knot sanity anchor
	bool knot = true;      // false for links
};

inline std::vector<NamedDiagram> bundled_prime_knots() {
	std::vector<NamedDiagram> out;
	out.push_back({"3_1", braid_to_pd({1, 1, 1}), 3});
	out.push_back({"4_1", braid_to_pd({1, -2, 1, -2}), 5});
	out.push_back({"5_1", braid_to_pd({1, 1, 1, 1, 1}), 5});
	out.push_back({"5_2", rational_knot_pd({3, 2}), 7});
	out.push_back({"6_1", rational_knot_pd({4, 2}), 9});
	out.push_back({"6_2", rational_knot_pd({3, 1, 2}), 11});
	out.push_back({"6_3", rational_knot_pd({2, 1, 1, 2}), 13});
	out.push_back({"7_1", braid_to_pd({1, 1, 1, 1, 1, 1, 1}), 7});
	out.push_back({"7_2", rational_knot_pd({5, 2}), 11});
	out.push_back({"7_3", rational_knot_pd({3, 4}), 13});
	out.push_back({"7_4", rational_knot_pd({3, 1, 3}), 15});
	out.push_back({"7_5", rational_knot_pd({2, 2, 3}), 17});
	out.push_back({"7_6", rational_knot_pd({2, 1, 2, 2}), 19});
	out.push_back({"7_7", rational_knot_pd({2, 1, 1, 1, 2}), 21});
	return out;
}

inline std::vector<NamedDiagram> bundled_test_set() {
	std::vector<NamedDiagram> out = bundled_prime_knots();
	out.push_back({"unknot", parse_pd("free_loops=1"), 1});
	out.push_back({"hopf", braid_to_pd({1, 1}), 0, false});
	PDCode unlink2;
	unlink2.free_loops = 2;
	out.push_back({"unlink_2", unlink2, 0, false});
	out.push_back({"granny", braid_to_pd({1, 1, 1, 2, 2, 2}), 9});
	out.push_back({"square", braid_to_pd({1, 1, 1, -2, -2, -2}), 9});
	return out;
}

inline PDCode torus_8_19() { return braid_to_pd({1, 2, 1, 2, 1, 2, 1, 2}); }

// Reidemeister pairs generated by Markov-style moves on braid closures
struct DiagramPair {
	std::string name;
	PDCode a, b;
};

inline std::vector<DiagramPair> reidemeister_pairs() {
	auto stabilize = [](std::vector<int> w) {
		int n = 0;
		for (int x : w) n = std::max(n, std::abs(x) + 1);
		w.push_back(n);
		return w;
	};
	auto poke = [](std::vector<int> w, int k) {
		w.push_back(k);
		w.push_back(-k);
		return w;
	};
	auto slide = [](std::vector<int> w, bool second) {
		for (int x : second ? std::vector<int>{2, 1, 2} : std::vector<int>{1, 2, 1}) w.push_back(x);
		return w;
	};
	std::vector<DiagramPair> out;
	std::vector<std::vector<int>> bases = {{1, 1, 1}, {1, -2, 1, -2}, {1, 1}};
	for (auto& w : bases) {
		std::string tag = std::to_string(out.size());
		out.push_back({"R1_" + tag, braid_to_pd(w), braid_to_pd(stabilize(w))});
		out.push_back({"R2_" + tag, braid_to_pd(w), braid_to_pd(poke(w, 1))});
		out.push_back({"R3_" + tag, braid_to_pd(slide(w, false)), braid_to_pd(slide(w, true))});
	}
	return out;
}

}  // namespace foamcalc

#endif
