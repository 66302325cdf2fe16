#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "foamcalc/frobenius.hpp"

using namespace foamcalc;

namespace {
const RingElem a = RingElem::var_a();
const RingElem h = RingElem::var_h();
const RingElem i_ = RingElem::unit_i();

RingElem g(long re, long im = 0) { return RingElem(GaussianInt(Int(re), Int(im))); }
}  // namespace

TEST_CASE("unit and counit") {
	CHECK(counit(unit()) == RingElem::zero());
	CHECK(counit(AlgebraElement::x()) == RingElem::one());
	// counit(h*1 + a*X) = a
	CHECK(counit(AlgebraElement(h, a)) == a);
}

TEST_CASE("multiplication table") {
	CHECK(mul(AlgebraElement::x(), AlgebraElement::x()) == AlgebraElement(a, h));
	CHECK(mul(unit(), AlgebraElement::x()) == AlgebraElement::x());
	CHECK(mul(AlgebraElement::x(), unit()) == AlgebraElement::x());
	CHECK(mul(unit(), unit()) == unit());

	// (2X-h)^2 = (h^2 + 4a) * 1, the (G2) scalar
	AlgebraElement handle(-h, g(2));
	CHECK(mul(handle, handle) == AlgebraElement(h * h + g(4) * a, RingElem::zero()));
}

TEST_CASE("comultiplication") {
	TensorElement d1 = comul(unit());
	CHECK(d1.coeff({0, 1}) == RingElem::one());
	CHECK(d1.coeff({1, 0}) == RingElem::one());
	CHECK(d1.coeff({0, 0}) == -h);
	CHECK(d1.coeff({1, 1}) == RingElem::zero());

	TensorElement dX = comul(AlgebraElement::x());
	CHECK(dX.coeff({1, 1}) == RingElem::one());
	CHECK(dX.coeff({0, 0}) == a);
	CHECK(dX.coeff({0, 1}) == RingElem::zero());

	CHECK(comul(AlgebraElement::zero()).is_zero());
}

TEST_CASE("handle powers") {
	CHECK(handle_power(0, 0) == unit());
	CHECK(handle_power(2, 0) == AlgebraElement(h * h + g(4) * a, RingElem::zero()));
	CHECK(handle_power(1, 0) == AlgebraElement(-h, g(2)));
	CHECK(counit(handle_power(1, 0)) == g(2));
}

TEST_CASE("closed surface evaluations") {
	CHECK(evaluate_closed_surface(0, 0) == RingElem::zero());  // sphere
	CHECK(evaluate_closed_surface(0, 1) == RingElem::one());   // dotted sphere
	CHECK(evaluate_closed_surface(0, 2) == h);
	CHECK(evaluate_closed_surface(1, 0) == g(2));  // torus
	CHECK(evaluate_closed_surface(2, 0) == RingElem::zero());
	CHECK(evaluate_closed_surface(2, 1) == h * h + g(4) * a);
}

TEST_CASE("dot maps on a two-circle object match the tensor calculus") {
	// i*(dot on left) - i*(dot on right) in basis (1x1, 1xX, Xx1, XxX)
	auto dotdiff = [&](const TensorElement& t) {
		return apply_on_factor(t, 0, FactorOp::mulX) * i_ -
		       apply_on_factor(t, 1, FactorOp::mulX) * i_;
	};
	auto m = matrix_of(dotdiff, 2, 2);
	const RingElem z = RingElem::zero(), one = RingElem::one();
	std::vector<std::vector<RingElem>> expect = {
	    {z, -a * i_, a * i_, z},
	    {-i_, -h * i_, z, a * i_},
	    {i_, z, h * i_, -a * i_},
	    {z, i_, -i_, z}};
	CHECK(m == expect);

	auto dotdiff_plain = [&](const TensorElement& t) {
		return apply_on_factor(t, 0, FactorOp::mulX) - apply_on_factor(t, 1, FactorOp::mulX);
	};
	auto m2 = matrix_of(dotdiff_plain, 2, 2);
	std::vector<std::vector<RingElem>> expect2 = {
	    {z, -a, a, z},
	    {-one, -h, z, a},
	    {one, z, h, -a},
	    {z, one, -one, z}};
	CHECK(m2 == expect2);
}

TEST_CASE("merge and split on tensor factors") {
	TensorElement oneX = TensorElement::basis({0, 1});
	TensorElement merged = merge_factors(oneX, 0, 1);
	CHECK(merged.arity == 1);
	CHECK(merged.coeff({1}) == RingElem::one());
	CHECK(merged.coeff({0}) == RingElem::zero());

	// splitting then merging the same factor is the handle 2X - h
	TensorElement v = TensorElement::basis({0});
	TensorElement around = merge_factors(split_factor(v, 0), 0, 1);
	CHECK(around.coeff({1}) == g(2));
	CHECK(around.coeff({0}) == -h);
}

TEST_CASE("Frobenius identity on all basis vectors of AxA") {
	for (int idx = 0; idx < 4; ++idx) {
		TensorElement v = TensorElement::basis(word_of_index(idx, 2));
		// (m x id) o (id x Delta)
		TensorElement left = merge_factors(split_factor(v, 1), 0, 1);
		// Delta o m
		TensorElement mid = split_factor(merge_factors(v, 0, 1), 0);
		// (id x m) o (Delta x id)
		TensorElement right = merge_factors(split_factor(v, 0), 1, 2);
		CHECK(left == mid);
		CHECK(mid == right);
	}
}

TEST_CASE("genus-g dotted surfaces through the algebra") {
	// epsilon o m o Delta o iota = 2
	TensorElement t(1);
	t.add_term({0}, RingElem::one());
	TensorElement torus = merge_factors(split_factor(t, 0), 0, 1);
	RingElem val = torus.coeff({1});  // counit picks the X coordinate
	CHECK(val == g(2));

	for (int genus = 0; genus <= 3; ++genus) {
		for (int dots = 0; dots <= 2; ++dots) {
			TensorElement s(1);
			s.add_term({0}, RingElem::one());
			for (int k = 0; k < genus; ++k) s = merge_factors(split_factor(s, 0), 0, 1);
			for (int k = 0; k < dots; ++k) s = apply_on_factor(s, 0, FactorOp::mulX);
			CHECK(s.coeff({1}) == evaluate_closed_surface(genus, dots));
		}
	}
}

TEST_CASE("structure maps are q-homogeneous of the right degree") {
	// deg(m) = -1: check on homogeneous inputs deg(x*y) = deg x + deg y - 1
	auto deg = [](const AlgebraElement& v) { return *v.q_degree(); };
	AlgebraElement one = unit(), X = AlgebraElement::x();
	CHECK(deg(mul(one, one)) == deg(one) + deg(one) - 1);
	CHECK(deg(mul(one, X)) == deg(one) + deg(X) - 1);
	CHECK(deg(mul(X, X)) == deg(X) + deg(X) - 1);

	// deg(Delta) = -1 on both generators
	for (auto& v : {one, X}) {
		int dv = deg(v);
		for (auto& [w, c] : comul(v).coeffs) {
			int dw = *c.q_degree();
			for (uint8_t b : w) dw += b ? -1 : +1;
			CHECK(dw == dv - 1);
		}
	}

	// deg(iota) = +1, deg(epsilon) = +1
	CHECK(deg(unit()) == 1);
	CHECK(*counit(AlgebraElement::x()).q_degree() == deg(AlgebraElement::x()) + 1);
	CHECK(*counit(handle_power(0, 2)).q_degree() == deg(handle_power(0, 2)) + 1);

	// X^2 = hX + a exactly
	CHECK(mul(X, X) == AlgebraElement(RingElem::var_a(), RingElem::var_h()));
}
