"""Brute-force matroid queries driven by a GF(2) representation.

``BinaryMatroid`` answers rank, closure, circuit and flat questions by
definition-level computation on the column space of its matrix.  It is
deliberately naive: this module is the ground truth that every
closed-form prediction elsewhere in the package is checked against, so
clarity beats speed everywhere.

Subsets of the ground set travel as plain ``frozenset`` objects of
labels; emitted lists are sorted by the ground-set order fixed at
construction (first by size, then lexicographically by position).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import GroundSetTooLarge, UnknownLabel
from .gf2 import GF2Matrix

OX = "OX"
EX = "EX"


def classify_circuit(circuit: Iterable[str], x_set: Iterable[str]) -> str:
    """``OX`` if the overlap with ``x_set`` has odd size, else ``EX``."""
    overlap = frozenset(circuit) & frozenset(x_set)
    return OX if len(overlap) % 2 else EX


def _reduce(word: int, basis: dict[int, int]) -> int:
    """Reduce ``word`` against an XOR basis keyed by lowest set bit."""
    while word:
        low = word & -word
        pivot = basis.get(low)
        if pivot is None:
            return word
        word ^= pivot
    return 0


def _insert(basis: dict[int, int], word: int) -> bool:
    """Add ``word`` to the basis; False if it was already in the span."""
    word = _reduce(word, basis)
    if word == 0:
        return False
    basis[word & -word] = word
    return True


class BinaryMatroid:
    """Binary matroid given by a labeled GF(2) matrix.

    The ground set is the tuple of column labels, in matrix order.  The
    circuit list is computed on first request and cached; the cache
    write is a single attribute assignment, so concurrent callers may
    duplicate work but always observe the same tuple.
    """

    DEFAULT_CAP = 24
    SUBSET_CAP = 20  # ceiling for operations that walk every subset

    def __init__(self, matrix: GF2Matrix, enumeration_cap: int = DEFAULT_CAP):
        self.matrix = matrix
        self.ground: tuple[str, ...] = matrix.col_labels
        self.enumeration_cap = enumeration_cap
        self._index = {lab: i for i, lab in enumerate(self.ground)}
        self._cols = tuple(matrix.column(lab).bits for lab in self.ground)
        self._circuits: tuple[frozenset[str], ...] | None = None

    @classmethod
    def from_text(cls, text: str, source: str = "<string>", **kwargs) -> "BinaryMatroid":
        from .gf2 import parse_matrix

        return cls(parse_matrix(text, source), **kwargs)

    def __repr__(self) -> str:
        return f"BinaryMatroid(ground={list(self.ground)!r})"

    # -- label plumbing -------------------------------------------------

    def _positions(self, labels: Iterable[str]) -> list[int]:
        out = []
        for lab in set(labels):
            pos = self._index.get(lab)
            if pos is None:
                raise UnknownLabel(f"{lab!r} is not a ground-set element")
            out.append(pos)
        out.sort()
        return out

    def sort_set(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Labels sorted into the canonical ground-set order."""
        return tuple(self.ground[i] for i in self._positions(labels))

    def subset_key(self, labels: Iterable[str]) -> tuple:
        positions = self._positions(labels)
        return (len(positions), tuple(positions))

    def all_subsets(self) -> Iterator[frozenset[str]]:
        """Every subset of the ground set, smallest first, then lexicographic."""
        if len(self.ground) > self.SUBSET_CAP:
            raise GroundSetTooLarge(
                f"{len(self.ground)} elements exceed the all-subset cap "
                f"of {self.SUBSET_CAP}"
            )
        for size in range(len(self.ground) + 1):
            for combo in combinations(self.ground, size):
                yield frozenset(combo)

    # -- rank and closure ------------------------------------------------

    def _span_basis(self, positions: Iterable[int]) -> dict[int, int]:
        basis: dict[int, int] = {}
        for pos in positions:
            _insert(basis, self._cols[pos])
        return basis

    def rank_of(self, labels: Iterable[str]) -> int:
        """Rank of the columns indexed by ``labels``."""
        return len(self._span_basis(self._positions(labels)))

    def closure_of(self, labels: Iterable[str]) -> frozenset[str]:
        """All elements whose addition leaves the rank unchanged."""
        basis = self._span_basis(self._positions(labels))
        return frozenset(
            lab
            for lab, word in zip(self.ground, self._cols)
            if _reduce(word, basis) == 0
        )

    def is_flat(self, labels: Iterable[str]) -> bool:
        """True iff the set equals its own closure."""
        subset = frozenset(labels)
        return self.closure_of(subset) == subset

    def flats(self) -> tuple[frozenset[str], ...]:
        """Every closed subset, canonically ordered; includes the empty
        flat whenever the matroid has no loops."""
        seen: set[frozenset[str]] = set()
        out: list[frozenset[str]] = []
        for subset in self.all_subsets():
            closed = self.closure_of(subset)
            if closed not in seen:
                seen.add(closed)
                out.append(closed)
        out.sort(key=self.subset_key)
        return tuple(out)

    # -- circuits ----------------------------------------------------------

    def _dependent(self, positions: Iterable[int]) -> bool:
        basis: dict[int, int] = {}
        for pos in positions:
            if not _insert(basis, self._cols[pos]):
                return True
        return False

    def _enumerate_circuits(self) -> tuple[frozenset[str], ...]:
        n = len(self.ground)
        max_size = self.rank_of(self.ground) + 1
        found_masks: list[int] = []
        found: list[frozenset[str]] = []
        for size in range(1, max_size + 1):
            for combo in combinations(range(n), size):
                mask = 0
                for pos in combo:
                    mask |= 1 << pos
                if any(cm & mask == cm for cm in found_masks):
                    continue  # contains a smaller circuit
                if self._dependent(combo):
                    found_masks.append(mask)
                    found.append(frozenset(self.ground[pos] for pos in combo))
        return tuple(found)

    def circuits(self) -> tuple[frozenset[str], ...]:
        """All minimal dependent subsets, smallest first.

        A subset reached by the size-ordered sweep is a circuit exactly
        when it is dependent and contains no previously found circuit,
        because any dependent proper subset would contain a smaller
        circuit already recorded.
        """
        if self._circuits is None:
            if len(self.ground) > self.enumeration_cap:
                raise GroundSetTooLarge(
                    f"{len(self.ground)} elements exceed the enumeration cap "
                    f"of {self.enumeration_cap}"
                )
            self._circuits = self._enumerate_circuits()
        return self._circuits
