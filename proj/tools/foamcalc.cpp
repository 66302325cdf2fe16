// foamcalc: universal sl(2) foam cohomology of knots, links and tangles from
// planar diagrams, by delooping + Gaussian elimination over Z[i][a,h].

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "foamcalc/diagrams.hpp"
#include "foamcalc/foamrel.hpp"
#include "foamcalc/homology.hpp"
#include "foamcalc/jsonio.hpp"

using namespace foamcalc;

namespace {

struct CommonOpts {
	std::string pd_text, braid_text, file_path;
	std::string spec_text = "a=0,h=0";
	std::string order_text = "heuristic";
	std::string format = "table";
	std::string dump_path, dump_stage = "final";
	int debug_checks = 0;
	int all_orders = 0;
	unsigned seed = 20240817;
	bool want_stats = false;
	bool want_poincare = false;
	bool integral = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_diagram = true) {
	if (needs_diagram) {
		cmd->add_option("--pd", o.pd_text, "inline PD code, e.g. \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"");
		cmd->add_option("--braid", o.braid_text, "braid word, e.g. \"s1 s-2 s1 s-2\" or \"1 -2 1 -2\"");
		cmd->add_option("--file", o.file_path, "file with one PD diagram per line");
	}
	cmd->add_option("--spec", o.spec_text, "specialization, e.g. a=0,h=0 (rationals allowed)");
	cmd->add_option("--order", o.order_text, "crossing order: heuristic or comma list, e.g. 2,0,1");
	cmd->add_option("--all-orders", o.all_orders,
	                "check every insertion order for diagrams with at most this many crossings");
	cmd->add_option("--format", o.format, "table | json | csv")
	    ->check(CLI::IsMember({"table", "json", "csv"}));
	cmd->add_option("--dump-complex", o.dump_path, "write the complex as JSON to this file");
	cmd->add_option("--dump-stage", o.dump_stage, "raw | delooped | final")
	    ->check(CLI::IsMember({"raw", "delooped", "final"}));
	cmd->add_option("--debug-checks", o.debug_checks, "0 none, 1 per pass, 2 per step")
	    ->check(CLI::Range(0, 2));
	cmd->add_option("--seed", o.seed, "seed for randomized checks");
	cmd->add_flag("--stats", o.want_stats, "print simplification statistics as JSON");
	cmd->add_flag("--poincare", o.want_poincare, "print the two-variable Poincare polynomial");
	cmd->add_flag("--integral", o.integral, "also compute Z[i] homology (Smith normal form)");
}

std::vector<std::pair<std::string, PDCode>> load_diagrams(const CommonOpts& o) {
	std::vector<std::pair<std::string, PDCode>> out;
	if (!o.pd_text.empty()) out.push_back({"pd", parse_pd(o.pd_text)});
	if (!o.braid_text.empty()) out.push_back({"braid", braid_to_pd(parse_braid_word(o.braid_text))});
	if (!o.file_path.empty()) {
		std::ifstream in(o.file_path);
		if (!in) throw std::runtime_error("cannot open " + o.file_path);
		std::string line;
		int lineno = 0;
		while (std::getline(in, line)) {
			lineno++;
			if (line.empty() || line[0] == '#') continue;
			out.push_back({o.file_path + ":" + std::to_string(lineno), parse_pd(line)});
		}
	}
	if (out.empty()) throw std::runtime_error("no diagram given (use --pd, --braid or --file)");
	return out;
}

Specialization parse_spec(const std::string& text) {
	Specialization s{GaussianRat(0), GaussianRat(0)};
	std::istringstream in(text);
	std::string item;
	while (std::getline(in, item, ',')) {
		auto eq = item.find('=');
		if (eq == std::string::npos) throw std::runtime_error("bad --spec entry: " + item);
		std::string name = item.substr(0, eq), val = item.substr(eq + 1);
		Rat r(val);
		r.canonicalize();
		if (name == "a")
			s.value_a = GaussianRat(r, Rat(0));
		else if (name == "h")
			s.value_h = GaussianRat(r, Rat(0));
		else
			throw std::runtime_error("bad --spec variable: " + name);
	}
	return s;
}

std::vector<int> resolve_order(const CommonOpts& o, const PDCode& pd) {
	if (o.order_text == "heuristic") return ordering_heuristic(pd);
	std::vector<int> order;
	std::istringstream in(o.order_text);
	std::string tok;
	while (std::getline(in, tok, ',')) order.push_back(std::stoi(tok));
	return order;
}

void maybe_dump(const CommonOpts& o, const PDCode& pd, const std::vector<int>& order,
                const FormalComplex& final_complex) {
	if (o.dump_path.empty()) return;
	json j;
	if (o.dump_stage == "final") {
		j = to_json(final_complex);
	} else {
		AssembleResult raw = assemble(pd, order, 0, false);
		if (o.dump_stage == "delooped") deloop(raw.complex);
		j = to_json(raw.complex);
	}
	std::ofstream out(o.dump_path);
	out << j.dump(1) << "\n";
}

void print_table(const CommonOpts& o, const BigradedTable& t) {
	if (o.format == "json")
		std::cout << to_json(t).dump(1) << "\n";
	else if (o.format == "csv")
		std::cout << to_csv(t);
	else
		std::cout << to_table(t);
}

int run_homology(const CommonOpts& o) {
	Specialization s = parse_spec(o.spec_text);
	int status = 0;
	for (auto& [name, pd] : load_diagrams(o)) {
		if (!pd.boundary_edges().empty())
			throw std::runtime_error(name + ": homology needs a closed diagram");
		std::vector<int> order = resolve_order(o, pd);
		AssembleResult r = assemble(pd, order, o.debug_checks);
		AlgebraicComplex A = apply_tqft(r.complex);
		BigradedTable t = cohomology(A, s);
		std::cout << "# " << name << "\n";
		print_table(o, t);
		if (o.want_poincare)
			std::cout << "poincare: " << poincare_polynomial(t).str() << "\n";
		if (o.integral) {
			BigradedTable zi = integral_homology(A);
			std::cout << "# integral (a=0, h=0 over Z[i])\n";
			print_table(o, zi);
			if (zi.ranks != cohomology(A, {GaussianRat(0), GaussianRat(0)}).ranks) {
				std::cout << "ERROR: integral free ranks disagree with Q(i) ranks\n";
				status = 1;
			}
		}
		if (o.want_stats) std::cout << to_json(r.stats).dump(1) << "\n";
		maybe_dump(o, pd, order, r.complex);

		if (o.all_orders > 0 && (int)pd.crossings.size() <= o.all_orders) {
			std::vector<int> perm(pd.crossings.size());
			for (size_t k = 0; k < perm.size(); ++k) perm[k] = (int)k;
			bool stable = true;
			do {
				AssembleResult alt = assemble(pd, perm, 0);
				if (!(cohomology(apply_tqft(alt.complex), s).ranks == t.ranks)) stable = false;
			} while (std::next_permutation(perm.begin(), perm.end()) && stable);
			std::cout << "order-stability: " << (stable ? "stable" : "UNSTABLE") << "\n";
			if (!stable) status = 1;
		}
	}
	return status;
}

int run_p2(const CommonOpts& o) {
	for (auto& [name, pd] : load_diagrams(o))
		std::cout << p2(pd).str() << "\n";
	return 0;
}

int run_relcheck(const CommonOpts& o) {
	int status = 0;
	auto report = [&](const std::string& id, bool ok) {
		std::cout << (ok ? "pass  " : "FAIL  ") << id << "\n";
		if (!ok) status = 1;
	};
	for (auto& id : relation_ids()) report(id, check_relation(id));
	report("deloop_maps", check_deloop_maps());
	report("deloop_maps_perturbed_fails", check_deloop_maps_perturbed_fails());
	report("dotted_dotless_cross_validation", cross_validate(1000, 12, o.seed));
	return status;
}

int run_oracle(const CommonOpts& o) {
	Specialization s = parse_spec(o.spec_text);
	int status = 0;
	for (auto& [name, pd] : load_diagrams(o)) {
		AssembleResult fast = assemble(pd, resolve_order(o, pd), o.debug_checks);
		AssembleResult slow = naive_cube(pd);
		BigradedTable tf = cohomology(apply_tqft(fast.complex), s);
		BigradedTable ts = cohomology(apply_tqft(slow.complex), s);
		bool ok = tf.ranks == ts.ranks;
		std::cout << name << ": " << (ok ? "MATCH" : "MISMATCH") << "\n";
		if (!ok) status = 1;
	}
	return status;
}

int run_bench(const CommonOpts& o, int naive_cap) {
	json report = json::array();
	for (auto& [name, pd] : load_diagrams(o)) {
		json item;
		item["diagram"] = name;
		item["crossings"] = pd.crossings.size();
		item["resolutions"] = 1 << pd.crossings.size();

		auto t0 = std::chrono::steady_clock::now();
		AssembleResult fast = assemble(pd, resolve_order(o, pd), 0);
		BigradedTable tf = cohomology(apply_tqft(fast.complex), parse_spec(o.spec_text));
		auto t1 = std::chrono::steady_clock::now();
		item["incremental"] = {{"wall_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()},
		                       {"total_rank", tf.total_rank()},
		                       {"stats", to_json(fast.stats)}};

		if ((int)pd.crossings.size() <= naive_cap) {
			auto t2 = std::chrono::steady_clock::now();
			AssembleResult slow = naive_cube(pd, naive_cap);
			BigradedTable ts = cohomology(apply_tqft(slow.complex), parse_spec(o.spec_text));
			auto t3 = std::chrono::steady_clock::now();
			item["naive"] = {{"wall_ms", std::chrono::duration<double, std::milli>(t3 - t2).count()},
			                 {"total_rank", ts.total_rank()},
			                 {"objects", slow.complex.total_objects()},
			                 {"match", ts.ranks == tf.ranks}};
		} else {
			item["naive"] = {{"error", "crossing count exceeds the naive-cube cap of " +
			                               std::to_string(naive_cap)}};
		}
		report.push_back(item);
	}
	std::cout << report.dump(1) << "\n";
	return 0;
}

int run_dump(const CommonOpts& o) {
	for (auto& [name, pd] : load_diagrams(o)) {
		std::vector<int> order = resolve_order(o, pd);
		AssembleResult r = assemble(pd, order, o.debug_checks);
		CommonOpts local = o;
		if (local.dump_path.empty()) local.dump_path = "/dev/stdout";
		maybe_dump(local, pd, order, r.complex);
	}
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"universal sl(2) foam cohomology calculator"};
	app.require_subcommand(1);

	CommonOpts ho, po, ro, oo, bo, dm;
	int naive_cap = 12;

	CLI::App* homology_cmd = app.add_subcommand("homology", "bigraded cohomology of a closed diagram");
	add_common(homology_cmd, ho);
	CLI::App* p2_cmd = app.add_subcommand("p2", "the sl(2) polynomial by skein expansion");
	add_common(p2_cmd, po);
	CLI::App* rel_cmd = app.add_subcommand("relcheck", "verify the foam relation calculus");
	add_common(rel_cmd, ro, false);
	CLI::App* oracle_cmd = app.add_subcommand("oracle", "incremental pipeline against the naive cube");
	add_common(oracle_cmd, oo);
	CLI::App* bench_cmd = app.add_subcommand("bench", "timing report: incremental vs naive cube");
	add_common(bench_cmd, bo);
	bench_cmd->add_option("--naive-cap", naive_cap, "refuse the naive cube above this crossing count");
	CLI::App* dump_cmd = app.add_subcommand("dump", "emit the formal complex as JSON");
	add_common(dump_cmd, dm);

	try {
		app.parse(argc, argv);
		if (homology_cmd->parsed()) return run_homology(ho);
		if (p2_cmd->parsed()) return run_p2(po);
		if (rel_cmd->parsed()) return run_relcheck(ro);
		if (oracle_cmd->parsed()) return run_oracle(oo);
		if (bench_cmd->parsed()) return run_bench(bo, naive_cap);
		if (dump_cmd->parsed()) return run_dump(dm);
	} catch (const CLI::ParseError& e) {
		return app.exit(e);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}
