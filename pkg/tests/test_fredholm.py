import random
from fractions import Fraction

import pytest

from odolab.dual import make_root
from odolab.errors import NotAProjection, OutOfRange, ScaleTooShallow
from odolab.fredholm import (BlockLabel, build_module, commutator_tail_norm,
                             dirac_spectrum, index_pairing, pairing_operator,
                             spectral_commutator_bound)
from odolab.harmonic import LevelFunction, rd_norm
from odolab.ktheory import evaluate, pair
from odolab.odometer import gamma
from odolab.presets import dyadic_spec, mixed_spec
from odolab.selftest import (random_homomorphism, random_projection,
                             random_rational_function)

DY = dyadic_spec(4)
MIX = mixed_spec(4)


def test_build_module_single_generator():
    model = build_module(DY.scale, {1: 1})
    assert model.labels == (BlockLabel(1, 1, 1),)
    assert model.odd_point(model.labels[0]) == 1
    assert model.ev_point(model.labels[0]) == 0


def test_build_module_counts_units():
    model = build_module(DY.scale, {1: 2, 3: -1})
    assert model.labels == (BlockLabel(1, 1, 1), BlockLabel(1, 2, 1),
                            BlockLabel(3, 1, -1))
    minus = model.labels[2]
    assert model.odd_point(minus) == gamma(3, DY.scale)
    assert model.ev_point(minus) == 3


def test_build_module_zero_block():
    model = build_module(DY.scale, {0: 1})
    label = model.labels[0]
    assert model.is_zero_block(label)
    assert model.odd_point(label) == 0
    assert model.ev_point(label) is None


def test_build_module_out_of_range_support():
    with pytest.raises(OutOfRange):
        build_module(DY.scale, {16: 1})


def test_index_one_dimensional_kernel():
    odds = LevelFunction(DY.scale, 2, [0, 1, 0, 1])
    assert index_pairing({1: 1}, odds) == 1
    assert pair({1: 1}, odds) == 1


def test_index_one_dimensional_cokernel():
    evens = LevelFunction(DY.scale, 2, [1, 0, 1, 0])
    assert index_pairing({1: 1}, evens) == -1


def test_index_bijective_is_zero():
    one = LevelFunction.constant(DY.scale, 1, 2)
    assert index_pairing({1: 1}, one) == 0


def test_index_zero_block_pairs_as_evaluation():
    one = LevelFunction.constant(DY.scale, 1, 2)
    supported_at_zero = LevelFunction(DY.scale, 2, [1, 0, 0, 0])
    assert index_pairing({0: 3}, one) == 3
    assert index_pairing({0: -2}, one) == -2
    assert index_pairing({0: -2}, supported_at_zero) == -2
    missing_zero = LevelFunction(DY.scale, 2, [0, 1, 1, 1])
    assert index_pairing({0: 5}, missing_zero) == 0


def test_index_requires_projection():
    with pytest.raises(NotAProjection):
        index_pairing({1: 1}, LevelFunction(DY.scale, 1, [2, 0]))


def closed_form_index(scale, phi, proj):
    total = 0
    for y, c in phi.items():
        if y == 0:
            total += c * evaluate(proj, 0)
        else:
            total += c * (evaluate(proj, y) - evaluate(proj, gamma(y, scale)))
    return total


def test_index_matches_pairing_and_closed_form():
    rng = random.Random(40)
    for spec in (DY, MIX):
        for _ in range(30):
            phi = random_homomorphism(spec.scale, rng)
            proj = random_projection(spec.scale, rng.randint(0, spec.depth), rng)
            idx = index_pairing(phi, proj)
            assert idx == pair(phi, proj)
            assert idx == closed_form_index(spec.scale, phi, proj)


def test_kernel_dimensions_match_label_counting():
    rng = random.Random(41)
    for _ in range(20):
        phi = random_homomorphism(DY.scale, rng)
        proj = random_projection(DY.scale, rng.randint(1, 4), rng)
        model = build_module(DY.scale, phi)
        result = pairing_operator(model, proj)
        ker = coker = 0
        for label in model.labels:
            odd = model.odd_point(label)
            ev = model.ev_point(label)
            odd_in = odd is not None and evaluate(proj, odd) == 1
            ev_in = ev is not None and evaluate(proj, ev) == 1
            if model.is_zero_block(label):
                ker += odd_in
                coker += ev_in
            else:
                ker += odd_in and not ev_in
                coker += ev_in and not odd_in
        assert (result.dim_ker, result.dim_coker) == (ker, coker)


def test_diagonal_weights_never_change_the_index():
    rng = random.Random(42)
    for _ in range(20):
        phi = random_homomorphism(DY.scale, rng)
        proj = random_projection(DY.scale, rng.randint(1, 4), rng)
        assert index_pairing(phi, proj) == index_pairing(phi, proj, spec=DY)


def test_dirac_spectrum_examples():
    spec3 = dyadic_spec(3)
    values = [lam for _, lam in dirac_spectrum({5: 1}, spec3)]
    assert values == [Fraction(8)]
    assert [lam for _, lam in dirac_spectrum({0: 1}, spec3)] == [Fraction(1)]
    both = sorted(lam for _, lam in dirac_spectrum({1: 1, 3: 1}, spec3))
    assert both == [Fraction(2), Fraction(4)]


def test_dirac_spectrum_lists_every_unit():
    spectrum = dirac_spectrum({1: 2, 3: -1}, DY)
    assert len(spectrum) == 3
    assert sorted(lam for _, lam in spectrum) == [2, 2, 4]


def test_commutator_tail_vanishes_beyond_level():
    rng = random.Random(43)
    f = random_rational_function(DY.scale, 2, rng)
    assert commutator_tail_norm(f, 256, threshold=2) == 0.0
    assert commutator_tail_norm(f, 256, threshold=3) == 0.0


def test_commutator_tail_half_turn():
    chi = LevelFunction.character(DY.scale, make_root(1, 2))
    assert commutator_tail_norm(chi, 16, threshold=0) == 2.0


def test_commutator_tail_constant():
    f = LevelFunction.constant(DY.scale, 7, 2)
    for threshold in range(4):
        assert commutator_tail_norm(f, 64, threshold) == 0.0


def test_spectral_bound_quarter_turn_attains_twice_length():
    chi = LevelFunction.character(DY.scale, make_root(1, 4))
    assert spectral_commutator_bound(chi, DY, 16) == 8.0
    assert spectral_commutator_bound(chi, DY, 256) == 8.0


def test_spectral_bound_constant_and_half_turn():
    assert spectral_commutator_bound(LevelFunction.constant(DY.scale, 3, 1),
                                     DY, 16) == 0.0
    chi = LevelFunction.character(DY.scale, make_root(1, 2))
    assert spectral_commutator_bound(chi, DY, 16) == 4.0


def test_spectral_bound_dominated_by_norm():
    rng = random.Random(44)
    for spec in (DY, mixed_spec(3)):
        for _ in range(20):
            f = random_rational_function(spec.scale, rng.randint(0, 3), rng)
            bound = spectral_commutator_bound(f, spec, 256)
            assert bound <= 2 * rd_norm(f, 1, spec) + 1e-9


def test_spectral_bound_requires_covering_spec():
    f = LevelFunction.zero(DY.scale, 4)
    with pytest.raises(ScaleTooShallow):
        spectral_commutator_bound(f, dyadic_spec(3), 16)
