import itertools
import random
from fractions import Fraction

import pytest

from nclie.coeffalg import FreeContext
from nclie.commfilt import FiltrationCache, ideal_IklS, lie_generated, two_sided_ideal
from nclie.subspace import GradedSubspace, op_bracket, op_product, subspace_sum


def compositions_oracle(cache, k, l):
    """Direct definition: sum over all weak compositions of k into l parts."""
    ctx = cache.ctx
    parts = []
    for comp in itertools.product(range(k + 1), repeat=l):
        if sum(comp) != k:
            continue
        space = cache.commutator_space(comp[0])
        for lam in comp[1:]:
            if space.is_zero():
                break
            space = op_product(ctx, space, cache.commutator_space(lam))
        parts.append(space)
    return subspace_sum(ctx.ambient, parts)


def union_oracle(cache):
    """I_k as the two-sided ideal generated by the k-th commutator space plus
    all shorter-index products, saturated multiplicatively."""

    def at(k):
        gen = cache.commutator_space(k)
        for split in range(1, k):
            gen = gen.sum(op_product(cache.ctx, at(split), at(k - split)))
        return two_sided_ideal(cache.ctx, gen)

    return at


def test_commutative_filtration_vanishes():
    ctx = FreeContext(1, 4)
    cache = FiltrationCache(ctx)
    assert cache.commutator_space(1).is_zero()
    for k in range(1, 4):
        assert cache.ideal_Ik(k).is_zero()


def test_first_commutator_space_small():
    ctx = FreeContext(2, 2, unital=False)
    cache = FiltrationCache(ctx)
    assert [d for _, d in cache.commutator_space(1).dim_profile()] == [0, 1]
    xy = ctx.word_index[(0, 1)]
    yx = ctx.word_index[(1, 0)]
    assert cache.commutator_space(1).contains_vector({xy: 1, yx: -1})


def test_commutator_spaces_nest():
    cache = FiltrationCache(FreeContext(2, 5))
    for k in range(1, 5):
        assert cache.commutator_space(k).issubset(cache.commutator_space(k - 1))


def test_lie_generated(free23):
    ctx = free23
    full = ctx.filtration_subspace()
    assert lie_generated(ctx, full) == full
    x_line = GradedSubspace.span(ctx.ambient, [{ctx.word_index[(0,)]: 1}])
    assert lie_generated(ctx, x_line) == x_line
    span_xy = GradedSubspace.span(
        ctx.ambient, [{ctx.word_index[(0,)]: 1}, {ctx.word_index[(1,)]: 1}]
    )
    gen = lie_generated(ctx, span_xy)
    from nclie.coeffalg import commutator

    x, y = ctx.generators()
    bracket = commutator(x, y)
    for elem in (bracket, commutator(x, bracket), commutator(y, bracket)):
        assert gen.contains_vector(elem.to_vector())
    # the generated Lie algebra is smaller than the full commutator space:
    # it misses brackets of longer words such as [x, x*y]
    assert [d for _, d in gen.dim_profile()] == [0, 2, 1, 2]


def test_ikl_single_factor_and_zero_sum(free23):
    cache = FiltrationCache(free23)
    for k in range(4):
        assert cache.ideal_Ikl(k, 1) == cache.commutator_space(k)
    # all parts zero: l-fold product of the algebra with itself
    base = cache.base
    cube = op_product(free23, op_product(free23, base, base), base)
    assert cache.ideal_Ikl(0, 3) == cube


def test_ikl_recursion_against_direct_enumeration():
    cache = FiltrationCache(FreeContext(2, 5))
    for k in range(5):
        for l in range(1, 5):
            assert cache.ideal_Ikl(k, l) == compositions_oracle(cache, k, l)


def test_ideal_I0_is_algebra():
    ctx = FreeContext(2, 3, unital=False)
    cache = FiltrationCache(ctx)
    assert cache.ideal_Ik(0) == ctx.full_subspace()


def test_ideal_I1_profile_frozen():
    # independent oracle: I_1 is the two-sided ideal generated by [F, F];
    # the degree-3 component is already 4-dimensional at two generators
    ctx = FreeContext(2, 3)
    cache = FiltrationCache(ctx)
    oracle = two_sided_ideal(ctx, cache.commutator_space(1))
    i1 = cache.ideal_Ik(1)
    assert i1 == oracle
    assert [d for _, d in i1.dim_profile()] == [0, 0, 1, 4]


def test_ideal_union_oracle_matches():
    ctx = FreeContext(2, 4)
    cache = FiltrationCache(ctx)
    # I_2 contains the second commutator space itself (single factor)
    assert cache.commutator_space(2).issubset(cache.ideal_Ik(2))
    gen2 = cache.commutator_space(2).sum(
        op_product(ctx, cache.commutator_space(1), cache.commutator_space(1))
    )
    assert cache.ideal_Ik(2) == two_sided_ideal(ctx, gen2)


def test_ideals_are_two_sided():
    ctx = FreeContext(2, 4)
    cache = FiltrationCache(ctx)
    full = ctx.full_subspace()
    for k in (1, 2, 3):
        ik = cache.ideal_Ik(k)
        grown = subspace_sum(
            ctx.ambient, [ik, op_product(ctx, full, ik), op_product(ctx, ik, full)]
        )
        assert grown == ik


def test_ideals_nest_and_brackets_raise():
    cache = FiltrationCache(FreeContext(2, 4))
    for k in (1, 2, 3):
        assert cache.ideal_Ik(k).issubset(cache.ideal_Ik(k - 1))
        br = op_bracket(cache.ctx, cache.base, cache.ideal_Ik(k - 1))
        assert br.issubset(cache.ideal_Ik(k))


def test_subset_variant_reproduces_full(free23):
    cache = FiltrationCache(free23)
    full_base = free23.filtration_subspace()
    for k in range(3):
        for l in (1, 2):
            assert ideal_IklS(free23, k, l, full_base) == cache.ideal_Ikl(k, l)


def test_subset_variant_lemma_inclusions(free23):
    rng = random.Random(5)
    ctx = free23
    vs = [
        {rng.randrange(ctx.ambient.dim): Fraction(rng.randint(-2, 2)) for _ in range(2)}
        for _ in range(3)
    ]
    S = GradedSubspace.span(ctx.ambient, vs)
    sub = FiltrationCache(ctx, generating=S)
    # recursion over the first factor
    for k in range(3):
        for l in (2, 3):
            rhs = subspace_sum(
                ctx.ambient,
                [
                    op_product(ctx, sub.commutator_space(i), sub.ideal_Ikl(k - i, l - 1))
                    for i in range(k + 1)
                ],
            )
            assert sub.ideal_Ikl(k, l) == rhs
    # products and brackets shift both indices
    for (k, l), (kp, lp) in [((0, 1), (1, 1)), ((1, 1), (0, 2)), ((0, 2), (1, 1))]:
        prod = op_product(ctx, sub.ideal_Ikl(k, l), sub.ideal_Ikl(kp, lp))
        assert prod.issubset(sub.ideal_Ikl(k + kp, l + lp))
        br = op_bracket(ctx, sub.ideal_Ikl(k, l), sub.ideal_Ikl(kp, lp))
        assert br.issubset(sub.ideal_Ikl(k + kp + 1, l + lp - 1))


def test_subset_ideal_rejected_for_full_ideal(free23):
    S = GradedSubspace.span(free23.ambient, [{free23.word_index[(0,)]: 1}])
    sub = FiltrationCache(free23, generating=S)
    with pytest.raises(ValueError):
        sub.ideal_Ik(1)


def test_nonunital_structure_filtration():
    from nclie.coeffalg import StructureContext

    # one nilpotent generator: x*x = y, x*y = y*x = y*y = 0; commutative,
    # so the whole filtration above level zero vanishes
    table = [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]
    ctx = StructureContext(table, labels=["x", "y"])
    cache = FiltrationCache(ctx)
    assert cache.commutator_space(1).is_zero()
    assert cache.ideal_Ik(1).is_zero()
    assert cache.ideal_Ikl(0, 2).dim == 1  # span of x*x


def test_matrix_backend_is_simple(m2ctx):
    cache = FiltrationCache(m2ctx)
    assert cache.commutator_space(1).dim == 3
    assert cache.ideal_Ik(1) == m2ctx.full_subspace()
    assert cache.ideal_Ik(2) == m2ctx.full_subspace()


def test_unital_closed_form_on_matrix_backend(m2ctx):
    # in a unital algebra the union collapses to I_k^k + F I_k^k
    cache = FiltrationCache(m2ctx)
    for k in (1, 2, 3):
        ikk = cache.ideal_Ikl(k, k)
        closed = ikk.sum(op_product(m2ctx, cache.base, ikk))
        assert closed == cache.ideal_Ik(k)
