"""Exact one-way LOCC indistinguishability certificates.

Everything in this module is integer arithmetic over residues mod d.  A set is
certified when its pairwise difference set contains one of the label patterns
that leave no room for a distinguisher vector (a unit vector whose images
under the set's operators are pairwise orthogonal):

* ``OddWindow`` (odd d): the full row ``(1, 0..d-1)`` plus ``floor(d/2)``
  consecutive ``(0, i)`` with ``1 <= i <= d-1``;
* ``EvenWindow`` (even d): ``(d/2, 0..d/2)`` plus ``d/2`` consecutive ``(0, i)``;
* ``FourMSpecial`` (d = 0 mod 4): the full ``(d/2, .)`` row plus every
  ``(0, i)`` except ``i = d/2``.

Failure to certify never means the set is distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .core import GbsSet, PauliLabel, check_dimension

ODD_WINDOW = "OddWindow"
EVEN_WINDOW = "EvenWindow"
FOUR_M_SPECIAL = "FourMSpecial"

CERTIFIED = "certified"
NOT_CERTIFIED = "not_certified"


@dataclass(frozen=True)
class DifferenceSet:
    d: int
    labels: frozenset

    def __post_init__(self):
        check_dimension(self.d)
        labels = frozenset(PauliLabel(int(m), int(n)) for m, n in self.labels)
        object.__setattr__(self, "labels", labels)
        if (0, 0) in labels:
            raise ValueError("(0,0) cannot be a pairwise difference")
        for m, n in labels:
            if not (0 <= m < self.d and 0 <= n < self.d):
                raise ValueError(f"difference ({m},{n}) not canonical for d={self.d}")
            if ((-m) % self.d, (-n) % self.d) not in labels:
                raise ValueError(f"difference set not closed under negation at ({m},{n})")

    def __contains__(self, item) -> bool:
        return item in self.labels

    def __len__(self) -> int:
        return len(self.labels)

    def row(self, m: int) -> set[int]:
        """Second components of the members whose first component is ``m``."""
        return {n for mm, n in self.labels if mm == m}


@dataclass(frozen=True)
class Certificate:
    rule: str
    window_len: int
    i0: Optional[int] = None
    closure_added: frozenset = field(default_factory=frozenset)

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "i0": self.i0,
            "window_len": self.window_len,
            "closure_added": [list(x) for x in sorted(self.closure_added)],
        }


@dataclass(frozen=True)
class CertReport:
    input: GbsSet
    delta: DifferenceSet
    certificate: Optional[Certificate]
    missing: Optional[PauliLabel] = None

    @property
    def status(self) -> str:
        return CERTIFIED if self.certificate is not None else NOT_CERTIFIED

    @property
    def certified(self) -> bool:
        return self.certificate is not None

    def to_dict(self) -> dict:
        out = {"status": self.status, "d": self.input.d}
        if self.certificate is not None:
            out.update(self.certificate.to_dict())
        else:
            out.update({"rule": None, "i0": None, "window_len": None, "closure_added": []})
        out["missing"] = list(self.missing) if self.missing is not None else None
        return out


def difference_set(s: GbsSet) -> DifferenceSet:
    d = s.d
    diffs = {
        PauliLabel((mj - mk) % d, (nj - nk) % d)
        for j, (mj, nj) in enumerate(s.labels)
        for k, (mk, nk) in enumerate(s.labels)
        if j != k
    }
    return DifferenceSet(d, frozenset(diffs))


def closure_thm1(delta: DifferenceSet) -> DifferenceSet:
    """Add ``(1,0)`` and ``(d-1,0)`` when ``(1,1..d-1)`` and ``(2,0)`` are present."""
    d = delta.d
    if (2 % d, 0) in delta and all((1, i) in delta for i in range(1, d)):
        return DifferenceSet(d, delta.labels | {PauliLabel(1 % d, 0), PauliLabel((d - 1) % d, 0)})
    return delta


def _first_missing(delta: DifferenceSet, m: int, indices) -> Optional[PauliLabel]:
    for i in indices:
        if (m, i) not in delta:
            return PauliLabel(m, i)
    return None


def find_window(delta: DifferenceSet, length: int) -> Optional[int]:
    """Smallest i0 >= 1 with ``(0, i0..i0+length-1)`` all present; no wraparound."""
    zero_row = delta.row(0)
    run = 0
    for i in range(1, delta.d):
        run = run + 1 if i in zero_row else 0
        if run >= length:
            return i - length + 1
    return None


def _diagnose_odd(delta: DifferenceSet) -> Optional[PauliLabel]:
    d = delta.d
    missing = _first_missing(delta, 1, range(d))
    if missing is not None:
        return missing
    if find_window(delta, d // 2) is None:
        return _first_missing(delta, 0, range(1, d))
    return None


def certify_odd(delta: DifferenceSet) -> Optional[Certificate]:
    d = delta.d
    if d % 2 == 0:
        raise ValueError(f"certify_odd needs odd d, got {d}")
    if _first_missing(delta, 1, range(d)) is not None:
        return None
    i0 = find_window(delta, d // 2)
    if i0 is None:
        return None
    return Certificate(ODD_WINDOW, window_len=d // 2, i0=i0)


def _diagnose_even(delta: DifferenceSet) -> Optional[PauliLabel]:
    d, h = delta.d, delta.d // 2
    missing = _first_missing(delta, h, range(h + 1))
    if missing is not None:
        return missing
    if find_window(delta, h) is None:
        return _first_missing(delta, 0, range(1, d))
    return None


def certify_even(delta: DifferenceSet) -> Optional[Certificate]:
    d = delta.d
    if d % 2 == 1:
        raise ValueError(f"certify_even needs even d, got {d}")
    h = d // 2
    if _first_missing(delta, h, range(h + 1)) is None:
        # the upper half of the row follows from negation closure
        assert _first_missing(delta, h, range(d)) is None
        i0 = find_window(delta, h)
        if i0 is not None:
            return Certificate(EVEN_WINDOW, window_len=h, i0=i0)
    if (
        d % 4 == 0
        and _first_missing(delta, 0, (i for i in range(1, d) if i != h)) is None
        and _first_missing(delta, h, range(d)) is None
    ):
        return Certificate(FOUR_M_SPECIAL, window_len=h)
    return None


def certify(s: GbsSet) -> CertReport:
    if len(s) < 2:
        raise ValueError("certification needs at least two states")
    delta = difference_set(s)
    closed = closure_thm1(delta)
    added = frozenset(closed.labels - delta.labels)
    if s.d % 2:
        cert, diagnose = certify_odd(closed), _diagnose_odd
    else:
        cert, diagnose = certify_even(closed), _diagnose_even
    if cert is None:
        return CertReport(s, closed, None, missing=diagnose(closed))
    return CertReport(s, closed, replace(cert, closure_added=added))


def replay(s: GbsSet, cert: Certificate) -> bool:
    """Re-check every membership ``cert`` relies on against a fresh difference set."""
    d, h = s.d, s.d // 2
    delta = difference_set(s)
    if cert.closure_added:
        if cert.closure_added != {(1 % d, 0), ((d - 1) % d, 0)}:
            return False
        if (2 % d, 0) not in delta or any((1, i) not in delta for i in range(1, d)):
            return False
        delta = DifferenceSet(d, delta.labels | cert.closure_added)

    def window_ok():
        i0, n = cert.i0, cert.window_len
        return i0 is not None and 1 <= i0 and i0 + n - 1 <= d - 1 and all(
            (0, i) in delta for i in range(i0, i0 + n)
        )

    if cert.rule == ODD_WINDOW:
        return d % 2 == 1 and cert.window_len == d // 2 and window_ok() and all(
            (1, i) in delta for i in range(d)
        )
    if cert.rule == EVEN_WINDOW:
        return d % 2 == 0 and cert.window_len == h and window_ok() and all(
            (h, i) in delta for i in range(h + 1)
        )
    if cert.rule == FOUR_M_SPECIAL:
        return (
            d % 4 == 0
            and all((0, i) in delta for i in range(1, d) if i != h)
            and all((h, i) in delta for i in range(d))
        )
    return False
