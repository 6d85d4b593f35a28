import json

import pytest

morreyseq = pytest.importorskip("morreyseq")


def test_version():
    assert morreyseq.version()


def test_decide_json_round_trip():
    request = {
        "source": {
            "scale": "N", "d": 1, "s": 1.0, "p": 2.0, "q": 2.0,
            "phi": {"family": "power", "u": 2.0},
        },
        "target": {
            "scale": "N", "d": 1, "s": 0.25, "p": 2.0, "q": 2.0,
            "phi": {"family": "power", "u": 2.0},
        },
    }
    verdict = json.loads(morreyseq.decide_json(json.dumps(request)))
    assert verdict["continuous"] == "yes"
    assert verdict["compact"] == "yes"
    assert any(r.startswith("n.") for r in verdict["rules"])


def test_norms_json():
    request = {
        "params": {
            "d": 1, "s": 0.5, "p": 2.0, "q": 1.0,
            "phi": {"family": "power", "u": 2.0},
        },
        "sequence": {
            "d": 1, "J": 3,
            "entries": [{"j": 2, "m": [1], "v": 0.8}],
        },
    }
    norms = json.loads(morreyseq.norms_json(json.dumps(request)))
    assert norms["n_norm_star"] == pytest.approx(0.8)
    assert norms["b_norm"] == pytest.approx(0.8)


def test_eval_phi_json():
    request = {"d": 1, "phi": {"family": "power", "u": 2.0}, "t": 0.25}
    out = json.loads(morreyseq.eval_phi_json(json.dumps(request)))
    assert out["value"] == pytest.approx(0.5)
    assert out["rate"]["beta"] == pytest.approx(0.5)


def test_run_config_sweep():
    config = {
        "task": "sweep",
        "source": {
            "scale": "N", "d": 1, "s": 1.5, "p": 2.0, "q": 2.0,
            "phi": {"family": "power", "u": 2.0},
        },
        "target": {
            "scale": "N", "d": 1, "s": 0.0, "p": 2.0, "q": 2.0,
            "phi": {"family": "power", "u": 2.0},
        },
        "parameter": "target.s",
        "from": 0.0, "to": 2.0, "step": 0.5,
    }
    code, report, err = morreyseq.run_config(json.dumps(config), "json", 2)
    assert code == 0, err
    rows = json.loads(report)["rows"]
    assert len(rows) == 5
    assert rows[0]["compact"] == "yes"
    assert rows[-1]["continuous"] == "no"


def test_config_error_exit_code():
    code, report, err = morreyseq.run_config("{broken", "json", 1)
    assert code == 2
    assert report == ""
    assert err
