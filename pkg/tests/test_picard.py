import itertools
from fractions import Fraction as Q

import pytest

from wonderful.classify import load_table
from wonderful.descriptor import Colour, WonderfulDescriptor, descriptor_from_dict
from wonderful.diagram import parse_diagram
from wonderful.picard import (LineBundle, UnboundedSectionEnumeration, canonical_weight,
                              classify_bundle, colour_multiplicity, restrict_to_Z,
                              section_weights, very_ample_witness)
from wonderful.rootsys import Weight


@pytest.fixture(scope="module")
def table():
    return load_table()


def p1xp1():
    return descriptor_from_dict({
        "diagram": "A1", "sigma": [["1"]], "sp": [],
        "colours": [{"id": "D+", "moving": [1], "rho": [1]},
                    {"id": "D-", "moving": [1], "rho": [1]}]})


def p2():
    return descriptor_from_dict({
        "diagram": "A1", "sigma": [["2"]], "sp": [],
        "colours": [{"id": "D", "moving": [1], "rho": [2]}]})


def test_classify_bundle():
    d = p1xp1()
    assert classify_bundle(d, LineBundle({"D+": 1, "D-": 1})) == "ample"
    assert classify_bundle(d, LineBundle({"D+": 0, "D-": 1})) == "globally_generated"
    assert classify_bundle(d, LineBundle({"D+": -1, "D-": 1})) == "neither"
    with pytest.raises(ValueError):
        classify_bundle(d, LineBundle({"D+": 1}))


def test_colour_multiplicity():
    assert colour_multiplicity(p2(), "D") == 2
    d = p1xp1()
    assert colour_multiplicity(d, "D+") == 1
    pair = WonderfulDescriptor(
        parse_diagram("A1+A1"), (Weight([1, 1]),), frozenset(),
        (Colour("D", frozenset({1, 2}), (2,)),))
    assert colour_multiplicity(pair, "D") == 1


def test_restrict_to_Z_three_cases():
    assert restrict_to_Z(p1xp1(), "D+") == Weight([Q(1, 2)])       # omega
    assert restrict_to_Z(p2(), "D") == Weight([1])                 # 2 omega
    pair = WonderfulDescriptor(
        parse_diagram("A1+A1"), (Weight([1, 1]),), frozenset(),
        (Colour("D", frozenset({1, 2}), (2,)),))
    assert restrict_to_Z(pair, "D") == Weight([Q(1, 2), Q(1, 2)])  # omega + omega'


def test_canonical_weight_examples():
    assert canonical_weight(p2(), LineBundle({"D": 1})) == Weight([1])
    assert canonical_weight(p1xp1(), LineBundle({"D+": 1, "D-": 1})) == Weight([1])
    # rank zero: the full flag variety of the rank-two special linear group
    gb = WonderfulDescriptor(parse_diagram("A2"), (), frozenset(),
                             (Colour("D1", frozenset({1}), ()),
                              Colour("D2", frozenset({2}), ())))
    assert canonical_weight(gb, LineBundle({"D1": 1, "D2": 1})) == Weight([1, 1])


def test_canonical_weight_additive():
    d = p1xp1()
    bundles = [LineBundle({"D+": a, "D-": b}) for a, b in itertools.product(range(3), repeat=2)]
    for l1 in bundles:
        for l2 in bundles:
            total = LineBundle({"D+": l1.coeffs["D+"] + l2.coeffs["D+"],
                                "D-": l1.coeffs["D-"] + l2.coeffs["D-"]})
            assert canonical_weight(d, total) == \
                canonical_weight(d, l1) + canonical_weight(d, l2)


def test_section_weights_rank_zero_is_a_single_module():
    gb = WonderfulDescriptor(parse_diagram("A2"), (), frozenset(),
                             (Colour("D1", frozenset({1}), ()),
                              Colour("D2", frozenset({2}), ())))
    L = LineBundle({"D1": 1, "D2": 1})
    assert section_weights(gb, L) == {Weight([1, 1])}


def test_section_weights_product_of_lines():
    d = p1xp1()
    got = section_weights(d, LineBundle({"D+": 1, "D-": 1}))
    assert got == {Weight([1]), Weight([0])}
    bigger = section_weights(d, LineBundle({"D+": 2, "D-": 1}))
    assert bigger == {Weight([Q(3, 2)]), Weight([Q(1, 2)])}


def test_section_weights_contain_canonical_weight(table):
    for e in table.entries:
        inst = e.instantiate()
        d = inst.as_descriptor()
        ids = [c.id for c in d.colours]
        for coeffs in ([1] * len(ids), [2] * len(ids), list(range(1, len(ids) + 1))):
            L = LineBundle(dict(zip(ids, coeffs)))
            weights = section_weights(d, L)
            chi = canonical_weight(d, L)
            assert chi in weights, e.label
            for w in weights:
                diff = chi - w
                # the difference is a non-negative combination of the roots
                assert diff.is_nonnegative() or diff.is_zero()


def test_section_weights_unbounded_error():
    d = WonderfulDescriptor(parse_diagram("A1"), (Weight([1]),), frozenset(),
                            (Colour("D", frozenset({1}), (0,)),))
    with pytest.raises(UnboundedSectionEnumeration) as err:
        section_weights(d, LineBundle({"D": 1}))
    assert err.value.gamma_index == 0


def test_very_ample_witness_on_table(table):
    for e in table.entries:
        if e.normalizer_quotient == 1:
            continue
        inst = e.instantiate()
        ids = [c.id for c in inst.colours]
        for values in itertools.product([1, 2, 3], repeat=len(ids)):
            assert very_ample_witness(inst, LineBundle(dict(zip(ids, values))))


def test_very_ample_witness_rejects_strict_entries(table):
    inst = table.by_label("2").instantiate()
    with pytest.raises(ValueError):
        very_ample_witness(inst, LineBundle({"D": 1}))


def test_very_ample_witness_pole_two():
    from wonderful.classify import ColourSpec, Rank1Entry
    entry = Rank1Entry(
        label="HYP", family="A", rank_min=1, rank_max=1,
        gamma=(("1", Q(1)),), sp=(),
        colours=(ColourSpec("D", ("1",), Q(1), 2),),
        self_normalizing=False, normalizer_quotient=2, adjoint_action=True,
        coincides_with=None, source="hypothetical pole order two")
    inst = entry.instantiate()
    assert very_ample_witness(inst, LineBundle({"D": 1})) is False
    assert very_ample_witness(inst, LineBundle({"D": 2})) is True
