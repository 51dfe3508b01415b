"""Smoke test for the pynaxes extension.

Build with `cargo build -p naxes-py --features extension-module`, copy
target/debug/libpynaxes.so to pynaxes.so somewhere on PYTHONPATH, then run
this script.
"""

import pynaxes as nx


def main():
    pts = [nx.Point(x, y) for x, y in [(0, 0), (10, 6), (0, 5), (5, 0), (6, 9)]]
    cfg = nx.Config(pts)
    assert cfg.n == 5 and cfg.field == "Q"
    report = cfg.check("five")
    assert report["verdict"] == "pass", report
    m = cfg.center()
    assert all(m.lies_on(g) for g in cfg.axes())

    p, q = nx.Point("1/2", 3), nx.Point(1, 6, 2)
    assert p == q
    assert nx.Point(0, 0).join(nx.Point(1, 0)) == nx.Line(0, 1, 0)

    hexagon = nx.sample(6, seed=3)
    assert hexagon.check("main")["verdict"] == "hypothesis not satisfied"

    seven = nx.sample(7, seed=1, pencil=True)
    assert seven.check("main")["verdict"] == "pass"
    kind, center = nx.pencil(seven.axes())
    assert kind in ("finite-center", "infinite-center") and center == seven.center()
    bigger = seven.expand_in_pencil(2, "1/3", seed=5)
    assert bigger.n == 8 and bigger.center() == center

    six = cfg.expand(2, "1/2", "1/3")
    assert six.reduce(2) == cfg
    assert nx.Config.from_json(cfg.to_json()) == cfg
    assert cfg.render().count('class="circle"') == 5

    try:
        nx.Config([nx.Point(0, 0), nx.Point(1, 1), nx.Point(2, 2), nx.Point(3, 0), nx.Point(0, 3)])
    except ValueError as e:
        print("rejected:", e)
    else:
        raise AssertionError("collinear vertices accepted")

    over_p = nx.sample(5, seed=2, prime=10007)
    assert over_p.check("five")["verdict"] == "pass"
    print("pynaxes smoke test passed")


if __name__ == "__main__":
    main()
