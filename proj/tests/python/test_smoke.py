import pytest

import dfa_decomp as dd


def test_generate_and_round_trip():
    grid = dd.generate("grid", r=3, s=5)
    assert len(grid) == 15
    assert dd.Dfa.parse(grid.to_text()) == grid
    assert grid.run("ab") == "q1_1"


def test_grid_has_one_nonredundant_sb_decomposition():
    entries = [e for e in dd.decompose("sb", dd.generate("grid", r=3, s=5)) if not e["redundant"]]
    assert len(entries) == 1
    assert (len(entries[0]["a1"]), len(entries[0]["a2"])) == (3, 5)


def test_a4b4_verifies_as_ai_and_si_but_not_sb():
    a, a1, a2 = (dd.generate("a4b4_triple", part=p) for p in ("a", "a1", "a2"))
    assert dd.verify("ai", a, a1, a2)[0]
    assert dd.verify("si", a, a1, a2)[0]
    ok, reason, _ = dd.verify("sb", a, a1, a2)
    assert not ok and reason
    assert dd.equivalent(dd.parallel_connection(a1, a2), a)


def test_minimize_example31():
    prime = dd.generate("example31_prime")
    minimal, mapping = dd.minimize(prime)
    assert len(minimal) == 5
    assert mapping["R0"] == mapping["R1"]
    assert dd.isomorphic(minimal, dd.generate("example31_min"))


def test_lattice_and_certificate():
    assert len(dd.sp_partitions(dd.generate("grid", r=2, s=2))) == 7
    cert = dd.certify("wai", dd.generate("ln", n=4), 3, 3)
    assert cert["exhausted"]


def test_errors():
    with pytest.raises(ValueError):
        dd.Dfa.parse("dfa x\n")
    with pytest.raises(ValueError):
        dd.generate("grid", r=1, s=2)
    with pytest.raises(dd.BudgetError):
        dd.certify("ai", dd.generate("lkl", k=3, l=5), 14, 14, canonical=False)
