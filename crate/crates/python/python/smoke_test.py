"""Smoke test for the tensordim extension module.

Build and install first, e.g. `maturin develop` or
`pip install --no-build-isolation .` inside crates/python.
"""

import json

import tensordim


def algebra(base, vars, relations):
    return tensordim.Algebra(json.dumps({"base": base, "vars": vars, "relations": relations}))


def main():
    a = algebra({"kind": "Zmod", "n": 12}, ["x"], [])
    b = algebra({"kind": "Zmod", "n": 18}, ["y"], ["y^2"])
    assert a.base == "Z/12"
    assert a.characteristic() == 12
    assert a.dim_at(2) == 1
    assert a.fibre_dim() == 1
    assert a.effective_spectrum() == {"includes_generic": False, "closed_points": [2, 3], "cofinite": False}

    report = tensordim.dim_tensor(a, b)
    assert report["formula_dim"] == 1 and report["agreement"], report
    assert [p["point"] for p in report["points"]] == [2, 3]
    assert tensordim.is_triplet(a, b)

    zx = algebra({"kind": "Z"}, ["x"], [])
    bounds = zx.seidenberg_bounds()
    assert (bounds["lower"], bounds["upper"], bounds["dim_if_known"]) == (1, 3, None)
    assert zx.dim_at("generic") == 1
    assert zx.effective_dim() == 1

    missing_two = algebra({"kind": "Z"}, ["x"], ["2*x - 1"])
    assert not missing_two.is_effective(2)
    assert missing_two.dim_at(2) == "empty"

    boolean = tensordim.Algebra.boolean_atoms(4)
    assert boolean.num_factors == 4
    zxy = algebra({"kind": "Z"}, ["x", "y"], [])
    assert tensordim.boolean_dim(4, zxy)["formula_dim"] == 2
    assert tensordim.dim_tensor_at(boolean, zxy, 2) == 2

    af = algebra({"kind": "Z"}, ["x", "y"], []).verify_af(
        json.dumps({"fibre": 3, "prime": ["x"], "components": [[]]})
    )
    assert af["holds"] and af["height"] == 1

    batch = tensordim.random_cross_check(seed=5, count=5)
    assert batch["failures"] == 0 and batch["seed"] == 5

    try:
        tensordim.dim_tensor(zx, zx)
    except tensordim.TensordimError as e:
        assert "nonzero characteristic" in str(e)
    else:
        raise AssertionError("expected an unsupported-configuration error")

    try:
        tensordim.Algebra('{"base": {"kind": "Fp", "n": 6}}')
    except tensordim.TensordimError:
        pass
    else:
        raise AssertionError("F_6 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
