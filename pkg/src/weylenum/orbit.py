"""Level-by-level enumeration of a Weyl group with same-pass inverse pairing.

Elements are generated as levels L_0, L_1, ... where L_k holds the elements
of reduced word length k, each represented by its weight (the image of the
start weight), its matrix, the matrix of its inverse, and its word.  A
candidate successor is kept only when the acceptance rule of
:func:`snow_accepts` fires, which reaches every element of the next level
exactly once, so no global visited-set is needed.

Because an element and its inverse share a word length, each level can be
paired against itself.  Two interchangeable pairing strategies are provided:

* ``weights``: the weight of the inverse of element ``w`` equals
  ``start @ w.matr``, so partners are found by matching weight rows.  Fully
  vectorized; requires a strictly dominant start weight (weights within a
  level are then distinct).
* ``dict``: the incremental protocol over matrix keys.  Each element is
  checked for self-inverseness, then looked up in a :class:`PairingDictionary`
  holding the keys of earlier elements' inverses; on a miss it deposits its
  own inverse key.  Kept as the reference semantics and cross-checked against
  the vectorized path in the test suite.

Only the level under construction and its predecessor are needed in memory;
`generate_group` yields sealed levels one at a time so callers can stream
them to disk and drop them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import IntegrityError, WeylError
from .rootsystems import RootSystem

# Any matrix or weight entry at or beyond this magnitude aborts the run;
# far below the int64 overflow threshold of the level step.
ENTRY_LIMIT = 1 << 40

Weight = Sequence[int]


@dataclass(frozen=True, eq=False)
class GroupElement:
    """One group element, materialized from a level on demand."""

    weight: tuple[int, ...]
    name: tuple[int, ...]        # generator indices, leftmost applied last
    matr: np.ndarray
    matr_inv: np.ndarray
    n_in_lvl: int
    n_inv_in_lvl: int            # -1 while the level is unsealed

    @property
    def name_inv(self) -> tuple[int, ...]:
        """Word of the inverse: the reverse of the element's own word."""
        return self.name[::-1]


@dataclass(eq=False)
class Level:
    """All elements of one word length, in discovery order."""

    index: int
    weights: np.ndarray          # (n, rank) int64
    matrices: np.ndarray         # (n, rank, rank) int64
    inv_matrices: np.ndarray     # (n, rank, rank) int64
    words: list[tuple[int, ...]]
    inv_ordinal: np.ndarray      # (n,) int64; -1 until the level is sealed
    src: np.ndarray = field(repr=False, default=None)  # predecessor ordinal
    gen: np.ndarray = field(repr=False, default=None)  # 1-based generator applied

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def sealed(self) -> bool:
        return bool((self.inv_ordinal >= 0).all())

    def element(self, j: int) -> GroupElement:
        return GroupElement(
            weight=tuple(int(x) for x in self.weights[j]),
            name=self.words[j],
            matr=self.matrices[j],
            matr_inv=self.inv_matrices[j],
            n_in_lvl=j,
            n_inv_in_lvl=int(self.inv_ordinal[j]),
        )

    def __repr__(self) -> str:
        return f"Level(index={self.index}, size={self.size})"

    def __eq__(self, other: object) -> bool:
        """Structural equality over the persisted fields (provenance arrays excluded)."""
        if not isinstance(other, Level):
            return NotImplemented
        return (self.index == other.index
                and self.words == other.words
                and np.array_equal(self.weights, other.weights)
                and np.array_equal(self.matrices, other.matrices)
                and np.array_equal(self.inv_matrices, other.inv_matrices)
                and np.array_equal(self.inv_ordinal, other.inv_ordinal))


@dataclass(frozen=True)
class OrbitLevel:
    """One level of a plain weight orbit: weights only, no group data."""

    index: int
    weights: np.ndarray

    @property
    def size(self) -> int:
        return len(self.weights)


def apply_reflection(w: Weight, i: int, rs: RootSystem) -> np.ndarray:
    """Image of weight w under generator i: coordinate k becomes w[k] - w[i]*c[i][k]."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"generator index {i} out of range 1..{rs.rank}")
    arr = np.asarray(w, dtype=np.int64)
    out = arr - arr[i - 1] * rs.cartan[i - 1]
    if np.abs(out).max(initial=0) >= ENTRY_LIMIT:
        raise IntegrityError(f"weight entry magnitude exceeded {ENTRY_LIMIT} applying s{i}")
    return out


def level_delta(w: Weight, i: int) -> int:
    """Word-length change when generator i is applied: the sign of coordinate i."""
    v = int(np.asarray(w)[i - 1])
    return (v > 0) - (v < 0)


def snow_accepts(source: Weight, i: int, image: Weight) -> bool:
    """Acceptance rule for extending level k to level k+1.

    Assumes source coordinate i is positive and image is the reflection of
    source by generator i; keeps the image iff every image coordinate past
    position i is nonnegative.  Among all one-step ancestries of a given
    next-level element exactly one passes this test.
    """
    img = np.asarray(image)
    return bool((img[i:] >= 0).all())


def matrix_key(m: np.ndarray) -> bytes:
    """Injective byte serialization: row-major entries, fixed 8-byte width each."""
    return np.ascontiguousarray(m, dtype="<i8").tobytes()


class PairingDictionary:
    """Map from matrix key to ordinal, for the level under construction.

    Holds, at any moment, the inverse-matrix keys of elements still waiting
    for their partner.  Entries are never removed; once every element is
    paired the dictionary retains exactly one entry per two-element pair,
    i.e. (size - self_inverse_count) / 2 entries.
    """

    def __init__(self) -> None:
        self._slots: dict[bytes, int] = {}

    def __len__(self) -> int:
        return len(self._slots)

    def match(self, key: bytes) -> int | None:
        """Ordinal that registered this key, or None."""
        return self._slots.get(key)

    def insert(self, key: bytes, ordinal: int) -> None:
        prior = self._slots.get(key)
        if prior is not None:
            raise IntegrityError(
                f"matrix key registered twice (ordinals {prior} and {ordinal}); "
                "elements within a level must be distinct")
        self._slots[key] = ordinal


def pair_level_dict(level: Level) -> PairingDictionary:
    """Resolve inverse ordinals with the incremental dictionary protocol.

    Fills level.inv_ordinal in place and returns the final dictionary.
    """
    n = level.size
    rank = level.weights.shape[1]
    eye = np.eye(rank, dtype=np.int64)
    inv = np.full(n, -1, dtype=np.int64)
    waiting = PairingDictionary()
    for t in range(n):
        m = level.matrices[t]
        if np.array_equal(m @ m, eye):
            inv[t] = t
            continue
        partner = waiting.match(matrix_key(m))
        if partner is not None:
            inv[t] = partner
            inv[partner] = t
        else:
            waiting.insert(matrix_key(level.inv_matrices[t]), t)
    if (inv < 0).any():
        missing = int((inv < 0).sum())
        raise IntegrityError(
            f"level {level.index}: {missing} elements left unpaired; "
            "inverses must occur within the same level")
    self_count = int((inv == np.arange(n)).sum())
    if 2 * len(waiting) != n - self_count:
        raise IntegrityError(
            f"level {level.index}: dictionary holds {len(waiting)} entries, "
            f"expected ({n} - {self_count})/2")
    level.inv_ordinal = inv
    return waiting


def pair_level_weights(level: Level, start: np.ndarray) -> None:
    """Resolve inverse ordinals by weight matching (vectorized).

    The weight of the inverse of element j is start @ matrices[j]; with a
    strictly dominant start the weights within a level are pairwise distinct,
    so row matching recovers the pairing in one shot.
    """
    n = level.size
    weights = level.weights
    inv_weights = np.matmul(start, level.matrices)
    labels = np.unique(np.concatenate([weights, inv_weights]), axis=0,
                       return_inverse=True)[1].reshape(2, n)
    own, inverse = labels
    if np.unique(own).size != n:
        raise IntegrityError(
            f"level {level.index}: duplicate weights within the level; "
            "weight pairing requires a strictly dominant start weight")
    if not np.array_equal(np.sort(inverse), np.sort(own)):
        raise IntegrityError(
            f"level {level.index}: some inverse weight has no matching element")
    # Both checks passed, so own is a permutation of 0..n-1.
    lookup = np.empty(n, dtype=np.int64)
    lookup[own] = np.arange(n)
    pos = lookup[inverse]
    if not np.array_equal(pos[pos], np.arange(n)):
        raise IntegrityError(f"level {level.index}: inverse pairing is not reciprocal")
    level.inv_ordinal = pos


def build_level_zero(start: Weight) -> Level:
    """Level 0: the identity alone, carrying the start weight."""
    arr = np.asarray(start, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise WeylError(f"start weight must be a nonempty vector, got shape {arr.shape}")
    if (arr < 0).any():
        raise WeylError(f"start weight must be dominant (all coordinates >= 0), got {arr.tolist()}")
    rank = arr.size
    return Level(
        index=0,
        weights=arr[None, :].copy(),
        matrices=np.eye(rank, dtype=np.int64)[None],
        inv_matrices=np.eye(rank, dtype=np.int64)[None],
        words=[()],
        inv_ordinal=np.zeros(1, dtype=np.int64),
        src=np.full(1, -1, dtype=np.int64),
        gen=np.zeros(1, dtype=np.int64),
    )


def _check_entry_limit(level: Level) -> None:
    worst = max(int(np.abs(level.matrices).max(initial=0)),
                int(np.abs(level.weights).max(initial=0)))
    if worst >= ENTRY_LIMIT:
        raise IntegrityError(
            f"level {level.index}: entry magnitude {worst} exceeds the checked "
            f"arithmetic bound {ENTRY_LIMIT}")


def build_next_level(current: Level, rs: RootSystem, kernel: str | None = None,
                     pairing: str = "weights") -> Level:
    """Construct and seal the successor of a sealed level.

    Sources are scanned in stored order and generators in ascending order;
    survivors of the acceptance rule are appended in discovery order with
    word = generator prepended to the source's word.
    """
    if not current.sealed:
        raise IntegrityError(f"level {current.index} is not sealed; pair it first")
    picked = kernels.resolve_kernel(kernel)
    new_w, new_m, new_inv, src, gen0 = kernels.step_level(
        current.weights, current.matrices, current.inv_matrices,
        rs.cartan, rs.reflections, picked)
    words = [(int(g) + 1,) + current.words[int(s)] for s, g in zip(src, gen0)]
    nxt = Level(
        index=current.index + 1,
        weights=new_w,
        matrices=new_m,
        inv_matrices=new_inv,
        words=words,
        inv_ordinal=np.full(len(new_w), -1, dtype=np.int64),
        src=src,
        gen=gen0 + 1,
    )
    if nxt.size == 0:
        return nxt
    _check_entry_limit(nxt)
    if pairing == "weights":
        start = current.weights[0] @ current.matrices[0]
        pair_level_weights(nxt, start)
    elif pairing == "dict":
        pair_level_dict(nxt)
    else:
        raise WeylError(f"unknown pairing strategy {pairing!r}")
    return nxt


def _max_levels(rs: RootSystem) -> int:
    if rs.n_positive_roots is not None:
        return rs.n_positive_roots + 1
    # Finite-type bound: no finite system of rank l has more than 2*l*l
    # positive roots (E8 peaks at 120 against 128).
    return 2 * rs.rank * rs.rank + 1


def generate_group(rs: RootSystem, start: Weight | None = None,
                   kernel: str | None = None, levels_up_to: int | None = None,
                   pairing: str = "weights") -> Iterator[Level]:
    """Yield the levels L_0..L_N of the full group, each sealed.

    The start weight defaults to all-ones and must be strictly dominant so
    that weights stay in bijection with elements.  A full run is checked
    against the closed-form level count, group order, and the singleton top
    level; `levels_up_to` truncates the run and skips those checks.
    """
    if start is None:
        start = np.ones(rs.rank, dtype=np.int64)
    else:
        start = np.asarray(start, dtype=np.int64)
        if start.shape != (rs.rank,):
            raise WeylError(f"start weight must have {rs.rank} coordinates")
    if (start <= 0).any():
        raise WeylError(
            f"group enumeration needs a strictly dominant start weight, got {start.tolist()}")
    picked = kernels.resolve_kernel(kernel)
    limit = _max_levels(rs)
    level = build_level_zero(start)
    total = 1
    yield level
    while levels_up_to is None or level.index < levels_up_to:
        nxt = build_next_level(level, rs, kernel=picked, pairing=pairing)
        if nxt.size == 0:
            break
        if (nxt.weights == 0).any():
            raise IntegrityError(
                f"level {nxt.index}: zero weight coordinate on a regular orbit")
        if nxt.index >= limit:
            raise IntegrityError(
                f"exceeded {limit} levels; the Cartan matrix is not of finite type "
                "or the enumeration is corrupted")
        total += nxt.size
        level = nxt
        yield level
    if levels_up_to is not None:
        return
    if rs.n_positive_roots is not None and level.index != rs.n_positive_roots:
        raise IntegrityError(
            f"run ended at level {level.index}, expected {rs.n_positive_roots}")
    if rs.order is not None and total != rs.order:
        raise IntegrityError(f"enumerated {total} elements, expected {rs.order}")
    if level.size != 1:
        raise IntegrityError(
            f"top level holds {level.size} elements, expected the longest element alone")


def generate_orbit(rs: RootSystem, mu: Weight, kernel: str | None = None,
                   levels_up_to: int | None = None) -> Iterator[OrbitLevel]:
    """Yield the levels of the orbit of a dominant weight, weights only.

    Works for weights on chamber walls too; the acceptance rule still visits
    each orbit point exactly once.  Inverse pairing is not attempted: on a
    wall, distinct group elements share weights, so weight rows identify
    orbit points rather than elements.
    """
    arr = np.asarray(mu, dtype=np.int64)
    if arr.shape != (rs.rank,):
        raise WeylError(f"weight must have {rs.rank} coordinates")
    if (arr < 0).any():
        raise WeylError(f"weight must be dominant, got {arr.tolist()}")
    picked = kernels.resolve_kernel(kernel)
    limit = _max_levels(rs)
    weights = arr[None, :].copy()
    index = 0
    yield OrbitLevel(index=0, weights=weights)
    while levels_up_to is None or index < levels_up_to:
        weights, _, _ = kernels.step_orbit(weights, rs.cartan, picked)
        if len(weights) == 0:
            break
        index += 1
        if index >= limit:
            raise IntegrityError(
                f"exceeded {limit} levels; the Cartan matrix is not of finite type "
                "or the enumeration is corrupted")
        if np.abs(weights).max(initial=0) >= ENTRY_LIMIT:
            raise IntegrityError(f"orbit level {index}: weight entry exceeds {ENTRY_LIMIT}")
        yield OrbitLevel(index=index, weights=weights)
