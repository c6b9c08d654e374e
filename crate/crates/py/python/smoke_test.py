"""Smoke test for the ats extension module. Run after `maturin develop`."""

import ats


def main() -> None:
    c6 = ats.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert (c6.n, c6.m, c6.excess, c6.total_weight) == (6, 6, 0, 6)

    res = ats.min_separator(c6)
    assert res.min_size == 2, res.min_size

    sep = ats.separate(c6)
    check = ats.verify(c6, sep.vertices)
    assert check.passed and check.max_fraction <= 2 / 3

    g = ats.near_tree_planar(2000, 10, seed=7)
    assert g.n == 2000 and g.m == 2010 and g.is_planar()
    again = ats.near_tree_planar(2000, 10, seed=7)
    assert g.edges() == again.edges()

    sep = ats.separate(g)
    assert ats.verify(g, sep.vertices).passed
    assert sep.size == len(sep.vertices)
    assert [name for name, _ in sep.stage_ns][-1] == "finish"

    text = ats.trace(g)
    assert text.startswith("stage ")

    grid = ats.grid_graph(8, 8)
    lt = ats.lt_separator(grid)
    assert ats.verify(grid, lt).passed

    round_trip = ats.Graph.parse(g.to_text())
    assert round_trip.edges() == g.edges()

    try:
        ats.Graph(3, [(0, 1)])
        ats.separate(ats.Graph(3, [(0, 1)]))
    except ValueError:
        pass
    else:
        raise AssertionError("disconnected graph accepted")

    print("smoke test OK")


if __name__ == "__main__":
    main()
