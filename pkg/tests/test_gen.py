import pytest

from lbs_parens.core import Bin, Nul, is_balanced, parse, parse_forest, pr, prf, size
from lbs_parens.gen import (GenError, GenKind, GenSpec, SplitMix64, gen_adversarial, gen_forest, gen_string,
                            gen_tree, gen_uniform)


def test_splitmix_reference_value():
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_block_matches_scalar():
    scalar = SplitMix64(12345)
    expected = [scalar.next() for _ in range(1000)]

    vector = SplitMix64(12345)
    assert [int(x) for x in vector.block(1000)] == expected
    assert vector.state == scalar.state
    assert vector.next() == scalar.next()


def test_uniform_characters_follow_high_bit():
    rng = SplitMix64(99)
    expected = "".join("(" if rng.next() >> 63 == 0 else ")" for _ in range(300))
    assert gen_uniform(GenSpec("uniform", 300, 99)) == expected
    assert gen_uniform(GenSpec("uniform", 1, 0)) == ")"


def test_uniform():
    assert gen_uniform(GenSpec("uniform", 0, 1)) == ""

    a = gen_uniform(GenSpec("uniform", 10, 1))
    assert a == gen_uniform(GenSpec("uniform", 10, 1))
    assert len(a) == 10

    big = gen_uniform(GenSpec("uniform", (1 << 20) + 17, 3))
    assert len(big) == (1 << 20) + 17
    assert set(big) == {"(", ")"}
    assert gen_uniform(GenSpec("uniform", 64, 1)) != gen_uniform(GenSpec("uniform", 64, 2))


def test_tree():
    assert gen_tree(GenSpec("balanced", 0, 5)) is Nul
    assert gen_tree(GenSpec("balanced", 2, 5)) == Bin(Nul, Nul)

    for seed in range(200):
        t = gen_tree(GenSpec("balanced", 2 * seed, seed))
        assert size(t) == 2 * seed
        assert parse(pr(t)) == t
        assert gen_tree(GenSpec("balanced", 2 * seed, seed)) == t

    with pytest.raises(GenError):
        gen_tree(GenSpec("balanced", 7, 0))


def test_tree_shapes_vary():
    shapes = {pr(gen_tree(GenSpec("balanced", 8, seed))) for seed in range(300)}
    # 14 shapes exist with four nodes
    assert len(shapes) >= 8
    assert "(((())))" in shapes
    assert "()()()()" in shapes


def test_forest():
    for seed in range(200):
        f = gen_forest(GenSpec("forest", seed, seed))
        printed = prf(f)
        assert len(printed) == seed
        assert parse_forest(printed) == f


@pytest.mark.parametrize("kind, n, expected", [
    ("deep", 6, "((()))"),
    ("deep", 7, "((())))"),
    ("deep", 0, ""),
    ("flat", 6, "()()()"),
    ("flat", 7, "()()())"),
])
def test_adversarial(kind, n, expected):
    assert gen_adversarial(GenSpec(kind, n)) == expected
    assert gen_string(GenSpec(kind, n)) == expected


def test_gen_string():
    s = gen_string(GenSpec(GenKind.BALANCED, 10, 4))
    assert len(s) == 10 and is_balanced(s)

    s = gen_string(GenSpec("forest", 11, 4))
    assert len(s) == 11 and parse_forest(s) is not None

    assert gen_string(GenSpec("uniform", 50, 4)) == gen_uniform(GenSpec("uniform", 50, 4))


def test_bad_specs():
    with pytest.raises(GenError):
        GenSpec("uniform", -1)
    with pytest.raises(ValueError):
        GenSpec("zigzag", 4)
    with pytest.raises(GenError):
        gen_adversarial(GenSpec("uniform", 4))
