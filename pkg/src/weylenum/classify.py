"""Element orders, the order partition, and conjugacy classes.

Classes are closed under conjugation by the simple reflections alone, which
suffices because they generate the group; closure runs breadth-first from
the least unassigned element in (level, ordinal) order, so class numbering
and representatives are deterministic.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import cycletype
from .errors import IntegrityError, WeylError
from .orbit import Level
from .reference import D4_CLASS_ROWS
from .store import GlobalIndex

# Conjugacy needs the whole group in memory; refuse beyond this many elements
# unless the caller raises the ceiling explicitly.
DEFAULT_CEILING = 10_000_000

# No element of a finite Weyl group in the supported rank range has an order
# anywhere near this; hitting it means the input was not a group element.
DEFAULT_ORDER_BOUND = 10_000


@dataclass(frozen=True)
class ConjugacyClass:
    representative: tuple[int, int]          # least member as (level, ordinal)
    representative_word: tuple[int, ...]
    members: tuple[tuple[int, int], ...]     # sorted by (level, ordinal)
    size: int
    element_order: int


def element_order(m: np.ndarray, bound: int = DEFAULT_ORDER_BOUND) -> int:
    """Smallest p >= 1 with m^p equal to the identity."""
    m = np.asarray(m, dtype=np.int64)
    eye = np.eye(len(m), dtype=np.int64)
    power = m
    p = 1
    while not np.array_equal(power, eye):
        power = power @ m
        p += 1
        if p > bound:
            raise IntegrityError(f"no power up to {bound} reached the identity")
    return p


def order_partition(index: GlobalIndex) -> dict[int, int]:
    """Count of elements per element order, over the whole group."""
    counts: Counter[int] = Counter()
    for key, _ in index.items():
        counts[element_order(index.key_matrix(key))] += 1
    return dict(sorted(counts.items()))


def conjugacy_classes(levels: Iterable[Level], index: GlobalIndex,
                      ceiling: int = DEFAULT_CEILING) -> list[ConjugacyClass]:
    """Partition the group into conjugacy classes.

    Levels must be the complete run the index was built from.  Generator
    matrices are taken from level 1, whose elements are exactly the simple
    reflections in ascending order.
    """
    levels = list(levels)
    if index.total > ceiling:
        raise WeylError(
            f"group has {index.total} elements, above the ceiling {ceiling}; "
            "raise it explicitly to proceed")
    if len(levels) < 2:
        # Rank-0 degenerate case never occurs; a one-level list is trivial.
        return [ConjugacyClass((0, 0), (), ((0, 0),), 1, 1)]
    generators = [levels[1].matrices[j] for j in range(levels[1].size)]
    order_bound = max(index.total, 2)
    assigned = [np.zeros(level.size, dtype=bool) for level in levels]
    classes: list[ConjugacyClass] = []
    for lvl, level in enumerate(levels):
        for j in range(level.size):
            if assigned[lvl][j]:
                continue
            members: list[tuple[int, int]] = []
            queue: deque[tuple[int, int]] = deque([(lvl, j)])
            assigned[lvl][j] = True
            while queue:
                a, b = queue.popleft()
                members.append((a, b))
                m = levels[a].matrices[b]
                for refl in generators:
                    la, lb = index.find(refl @ m @ refl)
                    if not assigned[la][lb]:
                        assigned[la][lb] = True
                        queue.append((la, lb))
            members.sort()
            rep = members[0]
            classes.append(ConjugacyClass(
                representative=rep,
                representative_word=levels[rep[0]].words[rep[1]],
                members=tuple(members),
                size=len(members),
                element_order=element_order(levels[rep[0]].matrices[rep[1]],
                                            bound=order_bound),
            ))
    total = sum(c.size for c in classes)
    if total != index.total:
        raise IntegrityError(f"classes cover {total} elements of {index.total}")
    return classes


def class_label_d4(cls: ConjugacyClass) -> str | None:
    """Published label of a D4 class, keyed by (size, order, cycle type).

    Two pairs of table rows collide on all three invariants; those come back
    as an "ambiguous" answer naming both rows.  Unknown combinations give None.
    """
    ctype = cycletype.signed_cycle_type(
        cycletype.word_to_signed_perm(cls.representative_word, 4))
    hits = [(row, label) for row, (size, order, ct, label) in enumerate(D4_CLASS_ROWS)
            if size == cls.size and order == cls.element_order and ct == ctype]
    if not hits:
        return None
    if len(hits) == 1:
        return hits[0][1]
    return "ambiguous: " + " / ".join(f"{label} (line {row})" for row, label in hits)


def format_class_report(classes: Sequence[ConjugacyClass], levels: Sequence[Level],
                        family: str | None, rank: int) -> str:
    """Human-readable class report, one block per class."""
    from .store import format_word

    with_types = family == "D" and rank >= 3
    with_labels = family == "D" and rank == 4
    lines = []
    for i, cls in enumerate(classes):
        word = format_word(cls.representative_word).strip() or "e"
        head = (f"class {i}: size={cls.size}, order={cls.element_order}, "
                f"representative={cls.representative}, word={word}")
        if with_types:
            ctype = cycletype.class_cycle_type(cls, levels)
            head += f", cycle_type={cycletype.render_cycle_type(ctype)}"
        if with_labels:
            label = class_label_d4(cls)
            if label is not None:
                head += f", label={label}"
        lines.append(head)
        lines.append("  members: " + ", ".join(f"({a}, {b})" for a, b in cls.members))
    return "\n".join(lines) + "\n"
