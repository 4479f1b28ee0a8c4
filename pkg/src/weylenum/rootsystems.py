"""Root-system constants: Cartan matrices, simple reflections, Weyl invariants.

Weights are integer row vectors of coordinates in the fundamental-weight
basis.  Generator i (1-based) acts on the right, ``w @ reflection_matrix(id, i)``,
sending coordinate k of w to ``w[k] - w[i] * c[i][k]`` where c is the Cartan
matrix.  All integer matrices are int64 and frozen after construction.

Families follow the Bourbaki numbering: A/B/C are chains 1..n with the short
root last for B and the long root last for C; in D the fork node n attaches
to node n-2; in E the chain is 1-3-4-5-6(-7(-8)) with node 2 attached to
node 4.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import UnsupportedRootSystem

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANK = {"F": 4, "G": 2}
_EXCEPTIONAL_POSITIVE = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
_EXCEPTIONAL_ORDER = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}
_NAME_RE = re.compile(r"^([A-G])([0-9]+)$")


def parse_id(name: str) -> tuple[str, int]:
    """Split a name like "D4" into (family, rank), validating the combination."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise UnsupportedRootSystem(
            f"cannot parse root system {name!r}: expected a family letter A-G "
            "followed by the rank, e.g. 'D4'")
    family, rank = m.group(1), int(m.group(2))
    if family == "E":
        if rank not in (6, 7, 8):
            raise UnsupportedRootSystem(f"E{rank} does not exist: E rank must be 6, 7 or 8")
    elif family in _FIXED_RANK:
        if rank != _FIXED_RANK[family]:
            raise UnsupportedRootSystem(
                f"{family}{rank} does not exist: family {family} has rank {_FIXED_RANK[family]} only")
    elif rank < _MIN_RANK[family]:
        raise UnsupportedRootSystem(
            f"{family}{rank} is below the minimal rank {_MIN_RANK[family]} of family {family}")
    return family, rank


def cartan_matrix(name: str) -> np.ndarray:
    """Cartan matrix c[i][j] = <alpha_i, alpha_j> in Bourbaki numbering."""
    family, n = parse_id(name)
    c = 2 * np.eye(n, dtype=np.int64)

    def join(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i - 1, j - 1] = cij
        c[j - 1, i - 1] = cji

    if family in "ABC":
        for i in range(1, n):
            join(i, i + 1)
        if family == "B":
            join(n - 1, n, -2, -1)
        elif family == "C":
            join(n - 1, n, -1, -2)
    elif family == "D":
        for i in range(1, n - 1):
            join(i, i + 1)
        join(n - 2, n)
    elif family == "E":
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)):
            join(i, j)
        for i in range(6, n):
            join(i, i + 1)
    elif family == "F":
        join(1, 2)
        join(2, 3, -2, -1)
        join(3, 4)
    elif family == "G":
        join(1, 2, -1, -3)
    c.setflags(write=False)
    return c


def _reflections_from_cartan(cartan: np.ndarray) -> np.ndarray:
    # R_i is the identity except row i, which holds delta_ik - c_ik.
    n = len(cartan)
    refl = np.tile(np.eye(n, dtype=np.int64), (n, 1, 1))
    for i in range(n):
        refl[i, i, :] -= cartan[i, :]
    return refl


def reflection_matrix(name: str, i: int) -> np.ndarray:
    """Matrix of generator i acting on weight rows from the right."""
    c = cartan_matrix(name)
    if not 1 <= i <= len(c):
        raise IndexError(f"generator index {i} out of range 1..{len(c)}")
    r = _reflections_from_cartan(c)[i - 1]
    r.setflags(write=False)
    return r


def positive_root_count(name: str) -> int:
    """Number of positive roots; the full group has this many levels plus one."""
    family, n = parse_id(name)
    closed = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}
    if family in closed:
        return closed[family]
    return _EXCEPTIONAL_POSITIVE[f"{family}{n}"]


def weyl_order(name: str) -> int:
    """Order of the Weyl group."""
    family, n = parse_id(name)
    if family == "A":
        return math.factorial(n + 1)
    if family in "BC":
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return _EXCEPTIONAL_ORDER[f"{family}{n}"]


def _invert_rational(matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(int(matrix[i][j])) for j in range(n)]
           + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def inverse_cartan(name: str) -> tuple[tuple[Fraction, ...], ...]:
    """Exact rational inverse of the Cartan matrix."""
    return _invert_rational(cartan_matrix(name))


def fundamental_weight_in_root_basis(name: str, i: int) -> tuple[Fraction, ...]:
    """Fundamental weight i expanded over the simple roots (row i of the inverse Cartan)."""
    inv = inverse_cartan(name)
    if not 1 <= i <= len(inv):
        raise IndexError(f"weight index {i} out of range 1..{len(inv)}")
    return inv[i - 1]


def _leading_minors_positive(matrix: np.ndarray) -> bool:
    n = len(matrix)
    for k in range(1, n + 1):
        sub = [[Fraction(int(matrix[i][j])) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        for col in range(k):
            pivot = next((r for r in range(col, k) if sub[r][col] != 0), None)
            if pivot is None:
                return False
            if pivot != col:
                sub[col], sub[pivot] = sub[pivot], sub[col]
                det = -det
            det *= sub[col][col]
            inv = 1 / sub[col][col]
            for r in range(col + 1, k):
                f = sub[r][col] * inv
                if f:
                    sub[r] = [x - f * y for x, y in zip(sub[r], sub[col])]
        if det <= 0:
            return False
    return True


def validate_cartan(matrix) -> np.ndarray:
    """Check generalized-Cartan invariants plus finite type; return an int64 copy."""
    arr = np.asarray(matrix)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise UnsupportedRootSystem(f"Cartan matrix must be square and nonempty, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.array_equal(arr, arr.astype(np.int64)):
            raise UnsupportedRootSystem("Cartan matrix entries must be integers")
    c = arr.astype(np.int64)
    n = len(c)
    if (np.diag(c) != 2).any():
        raise UnsupportedRootSystem("every Cartan diagonal entry must equal 2")
    off = c[~np.eye(n, dtype=bool)]
    if ((off > 0) | (off < -3)).any():
        raise UnsupportedRootSystem("off-diagonal Cartan entries must lie in {0, -1, -2, -3}")
    if ((c == 0) != (c.T == 0)).any():
        raise UnsupportedRootSystem("c[i][j] = 0 must imply c[j][i] = 0")
    if not _leading_minors_positive(c):
        raise UnsupportedRootSystem("matrix is not of finite type (a leading principal minor is <= 0)")
    return c


def load_cartan_file(path) -> np.ndarray:
    """Read a Cartan matrix from a text file: the rank, then one row per line.

    Blank lines and lines starting with '#' are ignored.
    """
    path = Path(path)
    rows = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append(([int(t) for t in line.split()], lineno))
        except ValueError:
            raise UnsupportedRootSystem(f"{path}:{lineno}: expected integers, got {raw!r}") from None
    if not rows:
        raise UnsupportedRootSystem(f"{path}: no data lines")
    (first, first_line), rest = rows[0], rows[1:]
    if len(first) != 1:
        raise UnsupportedRootSystem(f"{path}:{first_line}: first data line must hold the rank alone")
    rank = first[0]
    if len(rest) != rank:
        raise UnsupportedRootSystem(f"{path}: expected {rank} matrix rows, found {len(rest)}")
    for row, lineno in rest:
        if len(row) != rank:
            raise UnsupportedRootSystem(f"{path}:{lineno}: expected {rank} entries per row")
    return validate_cartan([row for row, _ in rest])


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable bundle of per-system constants used by the enumeration."""

    name: str
    family: str | None
    rank: int
    cartan: np.ndarray        # (rank, rank)
    reflections: np.ndarray   # (rank, rank, rank); reflections[i-1] is R_i
    n_positive_roots: int | None
    order: int | None

    def reflection(self, i: int) -> np.ndarray:
        """Reflection matrix of generator i (1-based)."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"generator index {i} out of range 1..{self.rank}")
        return self.reflections[i - 1]

    def __repr__(self) -> str:
        return f"RootSystem({self.name!r}, rank={self.rank})"


def _freeze(rs: RootSystem) -> RootSystem:
    rs.cartan.setflags(write=False)
    rs.reflections.setflags(write=False)
    return rs


def root_system(name: str) -> RootSystem:
    """Construct the named root system, e.g. root_system("D4")."""
    family, rank = parse_id(name)
    cartan = cartan_matrix(name).copy()
    return _freeze(RootSystem(
        name=f"{family}{rank}",
        family=family,
        rank=rank,
        cartan=cartan,
        reflections=_reflections_from_cartan(cartan),
        n_positive_roots=positive_root_count(name),
        order=weyl_order(name),
    ))


def root_system_from_cartan(matrix, name: str = "custom") -> RootSystem:
    """Construct a system from an explicit finite-type Cartan matrix.

    The positive-root count and group order are unknown up front; the
    enumeration discovers them and guards against non-terminating input.
    """
    cartan = validate_cartan(matrix)
    return _freeze(RootSystem(
        name=name,
        family=None,
        rank=len(cartan),
        cartan=cartan,
        reflections=_reflections_from_cartan(cartan),
        n_positive_roots=None,
        order=None,
    ))
