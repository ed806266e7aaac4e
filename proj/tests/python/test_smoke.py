import pytest

import gbl


def test_version():
    assert gbl.__version__.count(".") == 2


def test_validate_and_reduce():
    trefoil = {"m": 1, "block_sizes": [2], "rows": [[-1, 1], [0, -1]]}
    assert gbl.validate(trefoil)["valid"]
    assert not gbl.validate({"m": 1, "block_sizes": [2], "rows": [[0, 1], [1, 0]]})["valid"]
    assert gbl.reduce_to_null(trefoil)["status"] == "exhausted"
    assert gbl.good_basis(trefoil) is None

    wd = gbl.whitehead_double_matrix(3, [0, 1, 0])
    result = gbl.reduce_to_null(wd)
    assert result["status"] == "found"
    assert len(result["sequence"]["moves"]) == 3
    assert gbl.replay(result["sequence"])["block_sizes"] == [0, 0, 0]
    assert gbl.good_basis(wd)["signs"] == [0, 1, 0]


def test_normalize_lifts_a_minimum():
    start = {"m": 1, "block_sizes": [2], "rows": [[0, 1], [0, 0]]}
    seq = {
        "start": start,
        "moves": [
            {"type": "reduction", "k": 1, "u": 1, "v": 2},
            {"type": "enlargement", "k": 1, "eps": 1, "eps_prime": 0, "positions": [1, 2], "rows": [[]]},
        ],
    }
    out = gbl.normalize(seq)
    kinds = [mv["type"] for mv in out["moves"]]
    assert kinds.index("enlargement") < kinds.index("reduction")
    assert gbl.replay(out) == gbl.replay(seq)


def test_mu_and_homotopy_on_catalog_links():
    hopf = gbl.catalog_entry("hopf")
    assert gbl.mu_bar(hopf, "12") == {"value": 1, "indeterminacy": 0}
    borromean = gbl.catalog_entry("borromean")
    assert abs(gbl.mu_bar(borromean, [1, 2, 3])["value"]) == 1
    assert not gbl.homotopy(borromean)["trivial"]
    whitehead = gbl.catalog_entry("whitehead-link")
    assert gbl.homotopy(whitehead)["trivial"]
    assert gbl.ht_plus(whitehead)["trivial"]
    assert abs(gbl.mu_bar(whitehead, "1122", depth=4)["value"]) == 1


def test_certify_catalog_bundles():
    assert gbl.certify(gbl.catalog_entry("l-beta"))["verdict"] == "certified-freely-slice"
    assert gbl.certify(gbl.catalog_entry("wd-borromean"))["verdict"] == "hypothesis-failed"
    bundle = gbl.l_beta_bundle(gbl.catalog_entry("beta"))
    assert bundle == gbl.catalog_entry("l-beta")


def test_errors():
    with pytest.raises(gbl.GblError):
        gbl.validate("{")
    with pytest.raises(gbl.GblError):
        gbl.catalog_entry("no-such-entry")
    with pytest.raises(ValueError):
        gbl.mu_bar(gbl.catalog_entry("hopf"), "123")
    assert "l-beta" in gbl.catalog_names()
