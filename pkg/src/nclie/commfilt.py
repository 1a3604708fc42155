"""Commutator filtration of a coefficient algebra.

Computes the iterated commutator spaces, the ideals spanned by products of
commutator spaces whose orders sum to a given k, their partial sums over the
number of factors, and the full two-sided ideals via the closed form
I_k = I_k^k + F * I_k^k.  The same machinery evaluated on a generating
subspace S gives the subset ideals used by the refined upper bound.

For unital free contexts everything is computed on the augmentation ideal:
the unit is central, so the spaces for k >= 1 coincide with the full-algebra
ones while staying inside the graded coordinates.
"""

from __future__ import annotations

from .subspace import GradedSubspace, bracket_saturate, op_bracket, op_product, subspace_sum


class FiltrationCache:
    """Memoized filtration data for one context (optionally for a subset S)."""

    def __init__(self, ctx, generating: GradedSubspace | None = None):
        self.ctx = ctx
        self._full_base = generating is None
        self.base = ctx.filtration_subspace() if generating is None else generating
        if self.base.ambient != ctx.ambient:
            raise ValueError("generating subspace lives in a different ambient")
        self._comm: dict[int, GradedSubspace] = {}
        self._ikl: dict[tuple[int, int], GradedSubspace] = {}
        self._ikle: dict[tuple[int, int], GradedSubspace] = {}
        self._ik: dict[int, GradedSubspace] = {}

    # -- commutator spaces --------------------------------------------------

    def commutator_space(self, k: int) -> GradedSubspace:
        """k-fold bracket span; k = 0 is the (filtration) algebra itself."""
        if k < 0:
            raise ValueError("k must be >= 0")
        if k not in self._comm:
            if k == 0:
                self._comm[0] = self.base
            else:
                self._comm[k] = op_bracket(self.ctx, self.base, self.commutator_space(k - 1))
        return self._comm[k]

    # -- product ideals -------------------------------------------------------

    def ideal_Ikl(self, k: int, l: int) -> GradedSubspace:
        """Span of l-fold products of commutator spaces with orders summing to k."""
        if k < 0 or l < 1:
            raise ValueError("need k >= 0 and l >= 1")
        kl = (k, l)
        if kl not in self._ikl:
            if l == 1:
                self._ikl[kl] = self.commutator_space(k)
            else:
                parts = []
                for i in range(k + 1):
                    left = self.commutator_space(i)
                    if left.is_zero():
                        continue
                    right = self.ideal_Ikl(k - i, l - 1)
                    if right.is_zero():
                        continue
                    parts.append(op_product(self.ctx, left, right))
                self._ikl[kl] = subspace_sum(self.ctx.ambient, parts)
        return self._ikl[kl]

    def ideal_Ik_le(self, k: int, l: int) -> GradedSubspace:
        """Sum of the product ideals over factor counts 1..l."""
        if k < 0 or l < 1:
            raise ValueError("need k >= 0 and l >= 1")
        kl = (k, l)
        if kl not in self._ikle:
            if l == 1:
                self._ikle[kl] = self.ideal_Ikl(k, 1)
            else:
                self._ikle[kl] = self.ideal_Ik_le(k, l - 1).sum(self.ideal_Ikl(k, l))
        return self._ikle[kl]

    def ideal_Ik(self, k: int) -> GradedSubspace:
        """The two-sided ideal: union of the partial sums over all factor counts.

        Computed as a joint fixed point: the partial sums for 0..k satisfy a
        monotone recursion in the factor-count bound, so once one more factor
        adds nothing at any index the union is reached.  (The closed form
        I_k = I_k^k + F I_k^k familiar from unital algebras fails on the
        augmentation ideal, where nothing pads short products.)
        """
        if not self._full_base:
            raise ValueError("two-sided ideals are defined for the full algebra only")
        if k < 0:
            raise ValueError("k must be >= 0")
        if k not in self._ik:
            if k == 0:
                self._ik[0] = self.base
            else:
                ell = 1
                cap = self.ctx.ambient.dim + k + 2
                while True:
                    stable = all(
                        self.ideal_Ik_le(j, ell + 1) == self.ideal_Ik_le(j, ell)
                        for j in range(k + 1)
                    )
                    if stable:
                        break
                    ell += 1
                    if ell > cap:
                        raise RuntimeError("ideal saturation failed to stabilize")
                self._ik[k] = self.ideal_Ik_le(k, ell)
        return self._ik[k]


def ideal_IklS(ctx, k: int, l: int, S: GradedSubspace) -> GradedSubspace:
    """Subset variant: products of bracket spans of S with orders summing to k."""
    return FiltrationCache(ctx, generating=S).ideal_Ikl(k, l)


def lie_generated(ctx, S: GradedSubspace) -> GradedSubspace:
    """Smallest Lie subalgebra containing S: saturate S against its brackets."""
    gens = [dict(v) for v in S.vectors()]
    return bracket_saturate(ctx, gens)


def two_sided_ideal(ctx, S: GradedSubspace) -> GradedSubspace:
    """Smallest two-sided ideal containing S, by multiplicative saturation.

    Independent of the closed form in FiltrationCache.ideal_Ik; used as an
    oracle when cross-checking that closed form.
    """
    full = ctx.filtration_subspace()
    if getattr(ctx, "unital", False):
        full = ctx.full_subspace()
    current = S
    while True:
        grown = subspace_sum(
            ctx.ambient,
            [current, op_product(ctx, full, current), op_product(ctx, current, full)],
        )
        if grown == current:
            return current
        current = grown
