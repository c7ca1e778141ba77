import json

import pytest
from hypothesis import given, settings, strategies as st

from sstlab import (
    InstanceError,
    convex_instance,
    emit_instance,
    parse_instance,
    random_instance,
)
from sstlab.geometry import COORD_BOUND


VALID = '{"points":[[0,0],[6,0],[6,6],[0,6]],"edges":{"B":[[0,1],[1,2],[2,3]]}}'


class TestParse:
    def test_valid(self):
        inst = parse_instance(VALID)
        assert inst.config().n == 4
        assert inst.edges("B").pairs() == ((0, 1), (1, 2), (2, 3))

    def test_edges_canonicalized(self):
        inst = parse_instance('{"points":[[0,0],[6,0],[3,5]],"edges":{"B":[[2,0]]}}')
        assert inst.edges("B").pairs() == ((0, 2),)

    def test_collinear_named(self):
        text = '{"points":[[0,3],[9,9],[3,0],[2,1]]}'
        with pytest.raises(InstanceError, match="0, 2, 3 are collinear"):
            parse_instance(text)

    def test_duplicate_named(self):
        with pytest.raises(InstanceError, match="duplicates"):
            parse_instance('{"points":[[0,0],[1,2],[0,0]]}')

    def test_index_out_of_range(self):
        text = '{"points":[[0,0],[6,0],[6,6],[0,6]],"edges":{"B":[[0,9]]}}'
        with pytest.raises(InstanceError, match=r"edges\['B'\]\[0\] index out of range"):
            parse_instance(text)

    def test_coordinate_bound(self):
        text = json.dumps({"points": [[0, 0], [COORD_BOUND + 1, 0], [3, 5]]})
        with pytest.raises(InstanceError, match="bound"):
            parse_instance(text)

    def test_bad_json_positional(self):
        with pytest.raises(InstanceError, match="invalid JSON"):
            parse_instance("{nope")

    def test_non_integer_coordinates(self):
        with pytest.raises(InstanceError, match="integers"):
            parse_instance('{"points":[[0.5,0],[6,0],[6,6]]}')

    def test_unknown_keys(self):
        with pytest.raises(InstanceError, match="unknown keys"):
            parse_instance('{"points":[[0,0],[1,0],[0,1]],"bogus":1}')

    def test_loop_edge(self):
        text = '{"points":[[0,0],[6,0],[3,5]],"edges":{"B":[[1,1]]}}'
        with pytest.raises(InstanceError, match="coincide"):
            parse_instance(text)


class TestRoundTrip:
    def test_fixed(self):
        inst = parse_instance(VALID)
        assert parse_instance(emit_instance(inst)) == inst

    @given(st.integers(0, 500), st.integers(3, 8))
    @settings(max_examples=30, deadline=None)
    def test_generated(self, seed, n):
        inst = random_instance(n, seed)
        again = parse_instance(emit_instance(inst))
        assert again == inst
        assert emit_instance(again) == emit_instance(inst)

    def test_metadata_preserved(self):
        inst = parse_instance('{"name":"x","seed":3,"points":[[0,0],[1,0],[0,1]]}')
        assert inst.name == "x" and inst.seed == 3
        assert parse_instance(emit_instance(inst)) == inst


class TestGenerators:
    def test_random_deterministic(self):
        assert random_instance(6, 42) == random_instance(6, 42)
        assert random_instance(6, 42) != random_instance(6, 43)

    def test_random_valid(self):
        for seed in range(10):
            inst = random_instance(7, seed)
            config = inst.config()  # raises if degenerate
            assert config.n == 7

    def test_convex_deterministic(self):
        assert convex_instance(6, 42) == convex_instance(6, 42)

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_convex_all_on_hull_in_order(self, n):
        inst = convex_instance(n, seed=9)
        config = inst.config()
        assert config.hull == tuple(range(n))

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            random_instance(2, 0)
