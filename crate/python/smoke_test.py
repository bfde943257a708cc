"""Smoke test for the tenfold Python extension.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`
or `pip install` of a wheel from `maturin build -m crates/py/Cargo.toml`.
"""

import json

import tenfold


def main():
    labels = tenfold.labels()
    assert len(labels) == 10
    for label in labels:
        report = tenfold.canonical(label).classify()
        assert report["label"] == label, (label, report["label"])

    h = tenfold.canonical("H")
    assert h.dim == 4 and h.parity == [0, 0, 0, 0]
    assert h.invert(["0", "1", "0", "0"]) == ["0", "-1", "0", "0"]

    again = tenfold.Algebra.from_json(h.to_json())
    assert again.to_json() == h.to_json()

    assert tenfold.clifford(3, 0).classify()["label"] == "H_minus"
    assert tenfold.clifford(0, 3).classify()["label"] == "H_plus"
    assert tenfold.clifford_complex(1).realify().classify()["label"] == "C_comm"

    try:
        tenfold.clifford(1, 1).classify()
    except tenfold.Rejected as e:
        message, witness = e.args
        assert witness == {"kind": "zero_divisor", "element": ["0", "1", "1", "0"]}, witness
        assert "e1 + e2" in message
    else:
        raise AssertionError("Cl(1,1) must be rejected")

    product = tenfold.clifford(1, 0).tensor(tenfold.clifford(0, 1))
    assert product.dim == 4 and product.parity == [0, 1, 1, 0]

    cert = tenfold.periodicity(1, 0)
    assert cert["span_dim"] == 8 and len(cert["images"]) == 3
    assert [tenfold.brauer_wall(p, q) for p, q in [(3, 2), (0, 1), (4, 4)]] == [1, 7, 0]

    q8 = json.dumps({
        "field": "C",
        "degree": 2,
        "generators": [
            [{"re": "0", "im": "1"}, {"re": "0", "im": "0"}, {"re": "0", "im": "0"}, {"re": "0", "im": "-1"}],
            [{"re": "0", "im": "0"}, {"re": "1", "im": "0"}, {"re": "-1", "im": "0"}, {"re": "0", "im": "0"}],
        ],
    })
    assert tenfold.analyze_rep(q8) == {"order": 8, "commutant_dim": 1, "type": "C", "fs": "-1"}
    c4 = json.dumps({"field": "R", "degree": 2, "generators": [["0", "-1", "1", "0"]]})
    assert tenfold.analyze_rep(c4) == {"order": 4, "commutant_dim": 2, "type": "C"}

    passed, matrix = tenfold.run_selftest(["tenfold", "threefold"])
    assert passed, matrix

    print("python smoke test passed")


if __name__ == "__main__":
    main()
