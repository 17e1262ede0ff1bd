"""Smoke test for the mcdm extension module.

Build and install first, for example:
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/mcdm-*.whl
"""

import math

import mcdm

CUSTOMER = """,ENG,PIS,RMG,STF,SRT
ENG,1,5,2,5,7
PIS,5,1,6,3,3
RMG,4,4,1,1,1
STF,6,8,1,1,8
SRT,3,1,8,8,1
"""


def close(a, b, tol=1e-9):
    return math.isclose(a, b, abs_tol=tol)


def main():
    m = mcdm.PairwiseMatrix.from_csv(CUSTOMER)
    assert m.labels == ["ENG", "PIS", "RMG", "STF", "SRT"]
    assert len(m) == 5
    assert mcdm.PairwiseMatrix.from_json(m.to_json()) == m
    assert m.to_csv() == CUSTOMER

    w = mcdm.ahp_weights(m)
    assert close(sum(w), 1.0, 1e-12)
    assert close(w[3], 0.25, 0.0005)
    s = mcdm.fuzzy_scores(m)
    assert s == [0.5, 0.375, 0.125, 1.0, 1 / 3]
    d = mcdm.decisions(m)
    assert d["ahp"][0] == "STF" and d["fuzzy"] == ("STF", 1.0)

    c = mcdm.consistency(m)
    assert c["display"]["lambda_max"] == 18.86 and not c["acceptable"]
    assert close(mcdm.lambda_max(mcdm.PairwiseMatrix.uniform(list("ABCDEFG"))), 7.0, 0.0)

    small = mcdm.PairwiseMatrix(["A", "B", "C"], [[1, 2, 3], [1, 1, 2], [1, 1, 1]])
    assert mcdm.evaluate(small)["ahp"]["consistency"] is None
    assert mcdm.consistency(small, ri={3: 0.58})["ri"] == 0.58
    try:
        mcdm.consistency(small)
    except ValueError as e:
        assert "random index" in str(e).lower()
    else:
        raise AssertionError("missing RI should raise")
    try:
        mcdm.PairwiseMatrix(["A", "B"], [[1, 2]])
    except ValueError:
        pass
    else:
        raise AssertionError("ragged matrix should raise")

    assert mcdm.classify_transition(0.1, -0.1) == "ahp_up_fuzzy_down"
    datasets = mcdm.corpus()
    assert len(datasets) == 8
    series = [
        (name, matrix.labels, expected["ahp"], expected["fuzzy"])
        for name, matrix, expected in datasets
    ]
    series.append(
        mcdm.decision_series(
            [(name, *expected["decision"]) for name, _, expected in datasets if expected["decision"]]
        )
    )
    summary = mcdm.summarize(series)
    assert summary["total"] == 68

    report = mcdm.run_regression()
    assert report["passed"]
    assert not mcdm.run_regression(strict=True)["passed"]

    svg = mcdm.render_chart("Customer", m.labels, w, s)
    assert svg.startswith("<svg") and svg == mcdm.render_chart("Customer", m.labels, w, s)
    print("smoke test passed")


if __name__ == "__main__":
    main()
