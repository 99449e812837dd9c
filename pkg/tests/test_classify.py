import json

import pytest

from wonderful.classify import (TableValidationError, load_table, lookup,
                                non_strict_entries, nontrivial_normalizer_labels)
from wonderful.descriptor import validate
from wonderful.rootsys import Weight


@pytest.fixture(scope="module")
def table():
    return load_table()


def test_table_loads_and_has_unique_labels(table):
    labels = table.labels()
    assert len(labels) == len(set(labels)) == 25


def test_non_strict_sublist_is_the_four_cases(table):
    assert [e.label for e in non_strict_entries(table)] == \
        ["1A(n=2)", "7B", "7C(n=2)", "13"]


def test_nontrivial_normalizer_set_matches_the_very_ampleness_list(table):
    assert nontrivial_normalizer_labels(table) == \
        {"1A", "3", "5A", "7B", "10", "5D", "5", "13"}


def test_every_entry_instantiates_to_a_valid_descriptor(table):
    for e in table.entries:
        inst = e.instantiate()
        problems = validate(inst.as_descriptor())
        assert problems == [], (e.label, problems)


def test_entry_9b_data(table):
    e = table.by_label("9B")
    inst = e.instantiate(4)
    assert inst.gamma == Weight([1, 1, 1, 1])
    assert sorted(inst.sp) == [2, 3]
    assert sorted(frozenset().union(*[c.moving for c in inst.colours])) == [1, 4]


def test_entry_15_data(table):
    e = table.by_label("15")
    inst = e.instantiate()
    assert inst.gamma == Weight([1, 1])
    assert inst.sp == frozenset()


def test_duplicate_label_rejected(table):
    raw = json.loads(json.dumps({
        "schema_version": 1,
        "entries": [
            {"label": "X", "family": "A", "rank_min": 1, "rank_max": 1,
             "gamma": {"1": "1"}, "sp": [],
             "colours": [{"id": "D", "moving": ["1"], "rho_gamma": 1, "pole": None}],
             "self_normalizing": True, "normalizer_quotient": 1,
             "adjoint_action": True, "coincides_with": None, "source": ""},
        ] * 2,
    }))
    with pytest.raises(TableValidationError) as err:
        load_table(raw)
    assert any("duplicate" in p[2] for p in err.value.problems)


def test_negative_gamma_rejected():
    raw = {
        "schema_version": 1,
        "entries": [
            {"label": "X", "family": "A", "rank_min": 1, "rank_max": 1,
             "gamma": {"1": "-1"}, "sp": [],
             "colours": [{"id": "D", "moving": ["1"], "rho_gamma": 1, "pole": None}],
             "self_normalizing": True, "normalizer_quotient": 1,
             "adjoint_action": True, "coincides_with": None, "source": ""},
        ],
    }
    with pytest.raises(TableValidationError) as err:
        load_table(raw)
    assert any(p[1] == "gamma" for p in err.value.problems)


def test_moving_root_inside_sp_rejected():
    raw = {
        "schema_version": 1,
        "entries": [
            {"label": "X", "family": "A", "rank_min": 2, "rank_max": 2,
             "gamma": {"1..2": "1"}, "sp": ["1"],
             "colours": [{"id": "D", "moving": ["1"], "rho_gamma": 1, "pole": None}],
             "self_normalizing": True, "normalizer_quotient": 1,
             "adjoint_action": True, "coincides_with": None, "source": ""},
        ],
    }
    with pytest.raises(TableValidationError) as err:
        load_table(raw)
    assert any("sp" in p[2] for p in err.value.problems)


def test_lookup_doubled_rank_one_root(table):
    hits = lookup(table, "A1", Weight([2]), set())
    assert [h.label for h in hits] == ["2"]
    assert lookup(table, "A1", Weight([3]), set()) == []


def test_lookup_case_15(table):
    hits = lookup(table, "G2", Weight([1, 1]), set())
    assert [h.label for h in hits] == ["15"]


def test_lookup_is_diagram_local(table):
    # the same data inside a bigger group matches through the sub-diagram
    hits = lookup(table, "B4", Weight([0, 2, 2, 2]), {3, 4})
    assert "8B" in [h.label for h in hits]


def test_lookup_crosses_the_rank_two_coincidence(table):
    # rank-two orthogonal and symplectic data match each other's realizations
    hits = lookup(table, "C2", Weight([1, 1]), {1})
    labels = {h.label for h in hits}
    assert "7C(n=2)" in labels and "7B" in labels


def test_lookup_respects_diagram_automorphism(table):
    # reversing the chain of the rank-three special linear diagram
    hits = lookup(table, "A3", Weight([1, 2, 1]), {1, 3})
    assert [h.label for h in hits] == ["4"]
    hits_rev = lookup(table, "A3", Weight([1, 2, 1]), {3, 1})
    assert [h.label for h in hits_rev] == ["4"]


def test_pole_data_only_on_the_non_strict_entries(table):
    for e in table.entries:
        has_pole = all(c.pole is not None for c in e.colours)
        if e.normalizer_quotient > 1:
            assert has_pole, e.label
        else:
            assert all(c.pole is None for c in e.colours), e.label


def test_rho_values_follow_the_pairing_rules(table):
    # single moving root: rho = <alpha^vee, gamma>, halved when 2 alpha is the
    # spherical root; a pair of colours moved by the same root splits the
    # coroot pairing; an orthogonal pair uses either root's pairing
    for e in table.entries:
        inst = e.instantiate()
        diagram = inst.diagram
        for c in inst.colours:
            pair = sum(inst.gamma.coords[j - 1] * diagram.cartan(i, j)
                       for i in c.moving for j in range(1, diagram.rank + 1))
            if len(c.moving) == 2:
                pair = pair / 2  # both roots pair equally
            i = next(iter(c.moving))
            doubled = Weight([2 if k == i - 1 else 0 for k in range(diagram.rank)])
            simple = Weight([1 if k == i - 1 else 0 for k in range(diagram.rank)])
            if inst.gamma == doubled:
                assert c.rho_gamma == pair / 2, e.label
            elif inst.gamma == simple and len(inst.colours) == 2:
                assert c.rho_gamma == 1, e.label  # the split pair case
            else:
                assert c.rho_gamma == pair, e.label
