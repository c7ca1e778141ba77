import pytest

from sstlab import Family, analyze_tree, blocks, classify, is_noncrossing
from sstlab.fixtures import (
    FIG7_PATH,
    FIG7_POINTS,
    FIG7_T4_WITNESS,
    fig7_enlarged,
    fig7_instance,
    verify_counterexample,
)


class TestFig7:
    def test_fixture_verifies(self):
        inst = fig7_instance()
        config = inst.config()
        witness = verify_counterexample(config, inst.edges("B"))
        assert witness == inst.edges("T")
        assert witness.pairs() == FIG7_T4_WITNESS

    def test_blocks_t3_not_t4(self):
        inst = fig7_instance()
        config = inst.config()
        path = inst.edges("B")
        assert blocks(config, path, Family.trees_diam_at_most(3)).blocks
        report = blocks(config, path, Family.trees_diam_at_most(4))
        assert not report.blocks
        assert analyze_tree(config, report.witness).diameter == 4

    def test_neither_star_nor_comb(self):
        inst = fig7_instance()
        result = classify(inst.config(), inst.edges("B"))
        assert not result.is_star and not result.is_comb

    def test_path_shape(self):
        inst = fig7_instance()
        assert len(FIG7_POINTS) == 7
        assert FIG7_PATH == tuple((i, i + 1) for i in range(6))
        assert is_noncrossing(inst.config(), inst.edges("B"))


class TestEnlargement:
    def test_one_extra_each_side(self):
        inst = fig7_enlarged(1, 1)
        assert len(inst.points) == 9
        config = inst.config()
        witness = verify_counterexample(config, inst.edges("B"))
        assert witness == inst.edges("T")

    def test_two_steps_on_one_side(self):
        inst = fig7_enlarged(2, 0)
        assert len(inst.points) == 9
        assert inst.edges("B").pairs()[0] == (0, 1)

    def test_zero_is_the_base_fixture(self):
        inst = fig7_enlarged(0, 0)
        assert inst.points == fig7_instance().points

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            fig7_enlarged(-1, 0)
