"""Signed permutations for W(D_n) words and their signed cycle-types.

Generators of D_n act on the basis e_1..e_n as the adjacent transpositions
(e_i e_{i+1}) for i < n plus the final generator e_{n-1} -> -e_n,
e_n -> -e_{n-1}.  A word maps to the composition of its generators with the
rightmost applied first, matching how words label group elements elsewhere
in this package.

Only family D is wired up; the story for family B needs one extra sign-flip
generator and is gated behind ENABLE_FAMILY_B until it has trusted fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IntegrityError, WeylError
from .rootsystems import RootSystem, parse_id

# Family B action (e_n -> -e_n for the last generator) is implemented but
# unverified; flip only if you bring your own ground truth.
ENABLE_FAMILY_B = False


@dataclass(frozen=True)
class SignedPermutation:
    """images[i] = j means e_{i+1} -> e_j, with j < 0 for a sign flip."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(abs(v) for v in self.images) != list(range(1, n + 1)) or 0 in self.images:
            raise WeylError(f"not a signed permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    def compose(self, inner: "SignedPermutation") -> "SignedPermutation":
        """self after inner (inner is applied first)."""
        out = []
        for v in inner.images:
            w = self.images[abs(v) - 1]
            out.append(w if v > 0 else -w)
        return SignedPermutation(tuple(out))

    def negative_count(self) -> int:
        return sum(1 for v in self.images if v < 0)


def _family_rank(system: RootSystem | str) -> tuple[str, int]:
    if isinstance(system, RootSystem):
        if system.family is None:
            raise WeylError("custom root systems carry no signed-permutation model")
        return system.family, system.rank
    return parse_id(system)


def _action(n: int, i: int, last_flips_one: bool = False) -> SignedPermutation:
    if not 1 <= i <= n:
        raise WeylError(f"generator index {i} out of range 1..{n}")
    images = list(range(1, n + 1))
    if i < n:
        images[i - 1], images[i] = i + 1, i
    elif last_flips_one:
        images[n - 1] = -n
    else:
        images[n - 2], images[n - 1] = -n, -(n - 1)
    return SignedPermutation(tuple(images))


def generator_action(system: RootSystem | str, i: int) -> SignedPermutation:
    """Action of generator i on the basis, for a D_n (or gated B_n) system."""
    family, n = _family_rank(system)
    if family == "D":
        return _action(n, i)
    if family == "B" and ENABLE_FAMILY_B:
        return _action(n, i, last_flips_one=True)
    raise WeylError(f"signed permutations are implemented for family D, not {family}")


def word_to_signed_perm(word: Sequence[int], n: int) -> SignedPermutation:
    """Compose a word's generator actions, rightmost generator first (D_n)."""
    if n < 3:
        raise WeylError(f"family D needs rank >= 3, got {n}")
    perm = SignedPermutation.identity(n)
    for g in word:
        perm = perm.compose(_action(n, int(g)))
    return perm


def signed_cycle_type(p: SignedPermutation) -> tuple[int, ...]:
    """Cycle lengths of the underlying permutation, negated when the signs
    along the cycle multiply to -1.  Canonical order: longer cycles first,
    negative before positive at equal length; length-1 cycles included."""
    seen = [False] * p.n
    cycles = []
    for s in range(p.n):
        if seen[s]:
            continue
        length, sign, k = 0, 1, s
        while not seen[k]:
            seen[k] = True
            v = p.images[k]
            if v < 0:
                sign = -sign
            k = abs(v) - 1
            length += 1
        cycles.append(length if sign > 0 else -length)
    cycles.sort(key=lambda c: (-abs(c), c > 0))
    return tuple(cycles)


def render_cycle_type(ctype: Sequence[int]) -> str:
    """Plain-text form with ~ standing in for the negative mark: [2~1~1]."""
    return "[" + "".join(str(c) if c > 0 else f"~{-c}" for c in ctype) + "]"


def class_cycle_type(cls, store) -> tuple[int, ...]:
    """Cycle type of a conjugacy class, checked to be constant over all members.

    `store` is the sequence of levels the class's (level, ordinal) member
    coordinates point into.
    """
    levels = list(store)
    n = levels[0].weights.shape[1]
    rep_lvl, rep_ord = cls.representative
    expected = signed_cycle_type(word_to_signed_perm(levels[rep_lvl].words[rep_ord], n))
    for lvl, j in cls.members:
        got = signed_cycle_type(word_to_signed_perm(levels[lvl].words[j], n))
        if got != expected:
            raise IntegrityError(
                f"cycle type {got} of member ({lvl}, {j}) differs from the "
                f"representative's {expected}; conjugation must preserve it")
    return expected
