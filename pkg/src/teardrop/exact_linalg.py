"""Incremental Gaussian elimination over an exact field.

Vectors are sparse dicts ``{basis_key: value}``.  The field is whatever the
values implement: ``Fraction`` for specialised checks, ``RatQ`` for generic
ones.  Each stored row remembers the combination of input vectors it came from,
so membership queries can return an explicit witness.
"""
from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Tuple

__all__ = ["EchelonBasis"]


def _axpy(y: dict, a, x: dict) -> None:
    """``y += a * x`` in place, dropping zeros."""
    for k, v in x.items():
        s = y.get(k)
        s = a * v if s is None else s + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class EchelonBasis:
    def __init__(self):
        # pivot key -> (row with row[pivot] == 1, combination of input tags)
        self.rows: Dict[Hashable, Tuple[dict, dict]] = {}
        self.order: List[Hashable] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict):
        vec = dict(vec)
        combo = dict(combo)
        for piv in self.order:
            c = vec.get(piv)
            if c:
                row, rcombo = self.rows[piv]
                _axpy(vec, -c, row)
                _axpy(combo, -c, rcombo)
        return vec, combo

    def add(self, vec: dict, tag: Hashable, one) -> bool:
        """Insert ``vec`` labelled ``tag``; return True if it raised the rank.

        ``one`` is the multiplicative identity of the field.
        """
        red, combo = self._reduce(vec, {tag: one})
        if not red:
            return False
        piv = min(red, key=repr)
        inv = one / red[piv]
        red = {k: v * inv for k, v in red.items()}
        combo = {k: v * inv for k, v in combo.items()}
        # keep earlier rows reduced against the new pivot
        for p in self.order:
            row, rcombo = self.rows[p]
            c = row.get(piv)
            if c:
                _axpy(row, -c, red)
                _axpy(rcombo, -c, combo)
        self.rows[piv] = (red, combo)
        self.order.append(piv)
        return True

    def express(self, target: dict) -> Optional[dict]:
        """Coefficients ``{tag: c}`` with ``sum c * vec_tag == target``, or None."""
        red, combo = self._reduce(target, {})
        if red:
            return None
        return {k: -v for k, v in combo.items() if v}
