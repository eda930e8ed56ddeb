import pytest

from core.laws import LAWS, verify_law


@pytest.mark.parametrize("law", sorted(LAWS))
def test_every_law_holds_on_small_inputs(law):
    report = verify_law(law, 2)
    assert report["failures"] == []
    assert report["checked"] > 0


@pytest.mark.parametrize("law, bound", [("character_ipc", 8), ("chen_ipc", 8), ("coassoc_coqspart", 5),
                                        ("chen_gpc", 7), ("coassoc_coqsgen", 4), ("character_gpc", 6),
                                        ("bialgebra_vincular", 4), ("phi_hom", 4), ("bialgebra_partition", 4),
                                        ("psi_hom", 4), ("section_oracle", 4), ("superinf_duality", 4),
                                        ("antipode_partition", 4), ("ipc_chen_oracle", 7), ("antipode_vincular", 3)])
def test_selected_laws_at_larger_bounds(law, bound):
    assert verify_law(law, bound)["failures"] == []


def test_spot_checks_are_seeded():
    first = verify_law("comm_qspart", 7, seed=5, spot_checks=3)
    second = verify_law("comm_qspart", 7, seed=5, spot_checks=3)
    assert first == second
    assert first["failures"] == []
    exhaustive = verify_law("comm_qspart", 5)
    assert first["checked"] == exhaustive["checked"] + 3


def test_antipode_statistics():
    report = verify_law("antipode_partition", 3)
    assert report["statistics"]["max_size"] == 3
    assert set(report["statistics"]) == {"max_size", "max_block_count"}


def test_report_shape():
    report = verify_law("single_block_product", 2)
    assert report["law"] == "single_block_product"
    assert report["bound"] == 2
    assert report["checked"] == 4


def test_unknown_law():
    with pytest.raises(KeyError):
        verify_law("nosuch", 2)


def test_negative_bound():
    with pytest.raises(ValueError):
        verify_law("comm_qspart", -1)


def test_gluing_on_random_triples():
    report = verify_law("gluing_assoc", 10, seed=0, spot_checks=500)
    assert report["failures"] == []
    assert report["checked"] >= 500
