"""Smoke test for the u3codes extension module.

Build and install first, e.g. ``maturin develop -m crates/py/Cargo.toml``.
"""

import json

import u3codes


def main():
    assert u3codes.factor(3) == ["x+1", "x^2+x+1"]
    assert u3codes.factor(7) == ["x+1", "x^3+x+1", "x^3+x^2+1"]
    assert len(u3codes.divisors(7)) == 8

    assert u3codes.lee_weight(["1+u", "u^2", "0"]) == 4
    assert u3codes.gray_map(["1+u"]) == "111"
    assert u3codes.crt_split("1+u") == (1, "w")

    spec = u3codes.CodeSpec(3, "x+1", "1", "x+1")
    assert spec.size_log2() == 7
    assert spec.size_log2() + spec.dual_size_log2() == 9
    assert spec.distance() == (2, True)
    assert spec.is_dual_containing() is False
    try:
        spec.css_params()
    except ValueError:
        pass
    else:
        raise AssertionError("css_params accepted a code that does not contain its dual")

    good = u3codes.CodeSpec(7, "x+1", "1", "x^3+x+1")
    assert good.is_dual_containing()
    length, dimension, _, _ = good.css_params()
    assert (length, dimension) == (21, 13)
    line = json.loads(good.result_line())
    assert line["quantum"]["dimension"] == 13

    try:
        u3codes.CodeSpec(3, "x+1", "x^2+x+1", "x+1")
    except ValueError as e:
        assert "does not divide" in str(e)
    else:
        raise AssertionError("invalid triple accepted")

    records = [json.loads(r) for r in u3codes.search(3)]
    assert [r["quantum"]["dimension"] for r in records] == [9, 7, 5, 3]

    passed, text = u3codes.verify_paper()
    print(text, end="")
    print("smoke test ok (verify_paper passed: %s)" % passed)


if __name__ == "__main__":
    main()
