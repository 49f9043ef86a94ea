"""Generalized Bell state labels, set constructions and cardinality bounds.

A generalized Bell state in ``d x d`` is identified with the label ``(m, n)``
of the single-system operator ``X^m Z^n``.  Every construction here returns a
:class:`GbsSet`; families whose index ranges can collide report both the
formula ("nominal") cardinality and the number of distinct labels.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, NamedTuple, Optional


class DomainError(ValueError):
    """Raised when a construction is asked for a dimension outside its family."""


class PauliLabel(NamedTuple):
    m: int
    n: int


def check_dimension(d: int) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {d!r}")
    return d


def canonical_label(m: int, n: int, d: int) -> PauliLabel:
    check_dimension(d)
    return PauliLabel(m % d, n % d)


@dataclass(frozen=True)
class GbsSet:
    """A dimension plus an ordered, duplicate-free tuple of canonical labels.

    ``family``, ``nominal_size`` and ``params`` are descriptive metadata and do
    not take part in equality.
    """

    d: int
    labels: tuple[PauliLabel, ...]
    family: Optional[str] = field(default=None, compare=False)
    nominal_size: Optional[int] = field(default=None, compare=False)
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        check_dimension(self.d)
        labels = tuple(PauliLabel(int(m), int(n)) for m, n in self.labels)
        for m, n in labels:
            if not (0 <= m < self.d and 0 <= n < self.d):
                raise ValueError(f"label ({m},{n}) is not canonical for d={self.d}")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be pairwise distinct")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    @property
    def label_set(self) -> frozenset[PauliLabel]:
        return frozenset(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    @classmethod
    def from_pairs(cls, d: int, pairs: Iterable[tuple[int, int]], **meta) -> "GbsSet":
        """Canonicalize ``pairs`` mod ``d`` and drop repeats, keeping first occurrences."""
        seen: dict[PauliLabel, None] = {}
        for m, n in pairs:
            seen.setdefault(canonical_label(m, n, d), None)
        return cls(d, tuple(seen), **meta)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def floor_sqrt(x: int) -> int:
    return isqrt(x)


def ceil_sqrt(x: int) -> int:
    r = isqrt(x)
    return r if r * r == x else r + 1


def _require(cond: bool, msg: str):
    if not cond:
        raise DomainError(msg)


def construct_fan5() -> GbsSet:
    labels = [(0, 0), (2, 0), (1, 1), (1, 3)]
    return GbsSet.from_pairs(5, labels, family="fan5", nominal_size=4)


def construct_thm1(d: int) -> GbsSet:
    """``{(0,0), (2,0)} + {(1, 2i-1)}``, i = 1..(d-1)/2, for odd d >= 5."""
    _require(d % 2 == 1 and d >= 5, f"thm1 needs odd d >= 5, got {d}")
    pairs = [(0, 0), (2, 0)] + [(1, 2 * i - 1) for i in range(1, (d - 1) // 2 + 1)]
    return GbsSet.from_pairs(d, pairs, family="thm1", nominal_size=(d + 3) // 2)


def construct_thm2(d: int) -> GbsSet:
    """Odd d >= 9.

    The formula count ``5 + floor((d+1)/4)`` always double-counts (1,1), and
    also (1, floor(d/2)) whenever that index is one of the odd entries.
    """
    _require(d % 2 == 1 and d >= 9, f"thm2 needs odd d >= 9, got {d}")
    pairs = [(1, 2 * i - 1) for i in range(1, (d + 1) // 4 + 1)]
    pairs += [(0, 0), (1, 0), (1, 1), (1, d // 2), (1, _ceil_div(d, 2))]
    return GbsSet.from_pairs(d, pairs, family="thm2", nominal_size=5 + (d + 1) // 4)


def sdm_odd_nominal(d: int, m: int) -> int:
    return m + _ceil_div(d, m) + _ceil_div(_ceil_div(d - 1, 4), m)


def construct_sdm_odd(d: int, m: int) -> GbsSet:
    _require(d % 2 == 1 and d >= 9, f"sdm-odd needs odd d >= 9, got {d}")
    _require(1 <= m <= d, f"sdm-odd needs 1 <= m <= d, got m={m}")
    pairs = [(0, i) for i in range(m)]
    pairs += [(1, i * m - 1) for i in range(1, _ceil_div(d, m) + 1)]
    pairs += [(0, (d - 1) // 2 - i * m) for i in range(_ceil_div(_ceil_div(d - 1, 4), m))]
    return GbsSet.from_pairs(
        d, pairs, family="sdm-odd", nominal_size=sdm_odd_nominal(d, m), params={"m": m}
    )


def k_max(a: int, b: int, target: int) -> Optional[int]:
    """Largest k >= 0 with ``target <= (a-k)(b+k)``, or None if even k=0 fails.

    Scans upward and stops at the first failure; k stays below ``a``.
    """
    if a < 1 or b < 1 or target < 1:
        raise ValueError("k_max needs positive a, b and target")
    if a * b < target:
        return None
    k = 0
    while k + 1 < a and (a - k - 1) * (b + k + 1) >= target:
        k += 1
    return k


def _sqrt_split(x: int) -> tuple[int, int, int]:
    """Return (case, m, k) choosing the S(m) parameter for a square-root family."""
    lo, hi = floor_sqrt(x), ceil_sqrt(x)
    if lo * lo <= x <= lo * hi:
        k = k_max(lo, hi, x)
        return 1, hi + k, k
    assert lo * hi < x <= lo * (hi + 1)
    k = k_max(lo, hi + 1, x)
    return 2, hi + 1 + k, k


def construct_thm3(d: int) -> GbsSet:
    _require(d % 2 == 1 and d >= 9, f"thm3 needs odd d >= 9, got {d}")
    case, m, k = _sqrt_split(d)
    base = construct_sdm_odd(d, m)
    return GbsSet(
        d,
        base.labels,
        family="thm3",
        nominal_size=base.nominal_size,
        params={"case": case, "m": m, "k": k},
    )


def construct_thm4(d: int) -> GbsSet:
    _require(d % 2 == 0 and d >= 4, f"thm4 needs even d >= 4, got {d}")
    h = d // 2
    if d % 4 == 0:
        pairs = [(0, 2 * i - 1) for i in range(1, d // 4 + 1)]
        pairs += [(0, 0), (h, 0), (h, h + 1)]
        case = 1
    else:
        pairs = [(0, 2 * i - 1) for i in range(1, _ceil_div(d, 4) + 1)]
        pairs += [(0, 0), (h, 0), (h, h)]
        case = 2
    return GbsSet.from_pairs(
        d, pairs, family="thm4", nominal_size=3 + _ceil_div(d, 4), params={"case": case}
    )


def sdm_even_nominal(d: int, m: int) -> int:
    return m + _ceil_div((d + 2) // 2, m) + _ceil_div(_ceil_div(d + 1, 4), m)


def construct_sdm_even(d: int, m: int) -> GbsSet:
    _require(d % 2 == 0 and d >= 6, f"sdm-even needs even d >= 6, got {d}")
    _require(1 <= m <= d, f"sdm-even needs 1 <= m <= d, got m={m}")
    h = d // 2
    pairs = [(0, i) for i in range(m)]
    pairs += [(h, i * m - 1) for i in range(1, _ceil_div(d + 2, 2 * m) + 1)]
    pairs += [(0, h - i * m) for i in range(_ceil_div(_ceil_div(d + 1, 4), m))]
    return GbsSet.from_pairs(
        d, pairs, family="sdm-even", nominal_size=sdm_even_nominal(d, m), params={"m": m}
    )


def construct_thm5(d: int) -> GbsSet:
    # both cases use (d+2)/2 as the k_max target
    _require(d % 2 == 0 and d >= 6, f"thm5 needs even d >= 6, got {d}")
    case, m, k = _sqrt_split((d + 2) // 2)
    base = construct_sdm_even(d, m)
    return GbsSet(
        d,
        base.labels,
        family="thm5",
        nominal_size=base.nominal_size,
        params={"case": case, "m": m, "k": k},
    )


CONSTRUCTORS = {
    "fan5": construct_fan5,
    "thm1": construct_thm1,
    "thm2": construct_thm2,
    "thm3": construct_thm3,
    "thm4": construct_thm4,
    "thm5": construct_thm5,
    "sdm-odd": construct_sdm_odd,
    "sdm-even": construct_sdm_even,
}


def construct(family: str, d: Optional[int] = None, m: Optional[int] = None) -> GbsSet:
    """Dispatch by family name; used by the command line."""
    if family not in CONSTRUCTORS:
        raise DomainError(f"unknown family {family!r}")
    if family == "fan5":
        if d not in (None, 5):
            raise DomainError("fan5 is defined only for d=5")
        return construct_fan5()
    if d is None:
        raise DomainError(f"family {family} needs --d")
    if family.startswith("sdm"):
        if m is None:
            raise DomainError(f"family {family} needs --m")
        return CONSTRUCTORS[family](d, m)
    if m is not None:
        raise DomainError(f"family {family} takes no m parameter")
    return CONSTRUCTORS[family](d)


# -- bounds ------------------------------------------------------------------

KNOWN_FGBS = {2: 3, 3: 4, 4: 4, 5: 4, 7: 5}


def fgbs_known(d: int) -> Optional[int]:
    return KNOWN_FGBS.get(d)


def odd_bound_terms(d: int) -> dict[str, int]:
    r = ceil_sqrt(d)
    return {
        "(d+3)/2": (d + 3) // 2,
        "floor((d+1)/4)+5": (d + 1) // 4 + 5,
        "2*ceil(sqrt(d))+ceil(ceil((d-1)/4)/ceil(sqrt(d)))": 2 * r
        + _ceil_div(_ceil_div(d - 1, 4), r),
    }


def even_bound_terms(d: int) -> dict[str, int]:
    r = ceil_sqrt((d + 2) // 2)
    return {
        "ceil(d/4)+3": _ceil_div(d, 4) + 3,
        "2*ceil(sqrt((d+2)/2))+ceil(ceil((d+1)/4)/ceil(sqrt((d+2)/2)))": 2 * r
        + _ceil_div(_ceil_div(d + 1, 4), r),
    }


@dataclass(frozen=True)
class BoundReport:
    d: int
    closed_form_bound: int
    terms: dict
    per_construction: dict
    construction_params: dict
    best_constructive: int
    known_exact: Optional[int]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "closed_form_bound": self.closed_form_bound,
            "terms": dict(self.terms),
            "per_construction": dict(self.per_construction),
            "construction_params": {k: dict(v) for k, v in self.construction_params.items()},
            "best_constructive": self.best_constructive,
            "known_exact": self.known_exact,
        }


def applicable_families(d: int) -> list[str]:
    if d % 2:
        return [f for f, lo in (("thm1", 5), ("thm2", 9), ("thm3", 9)) if d >= lo]
    return [f for f, lo in (("thm4", 4), ("thm5", 6)) if d >= lo]


def fgbs_upper(d: int) -> BoundReport:
    if not isinstance(d, int) or d < 4:
        raise DomainError(f"bounds are computed for d >= 4, got {d}")
    terms = odd_bound_terms(d) if d % 2 else even_bound_terms(d)
    sizes, params = {}, {}
    for family in applicable_families(d):
        s = CONSTRUCTORS[family](d)
        sizes[family] = s.nominal_size
        params[family] = dict(s.params)
    return BoundReport(
        d=d,
        closed_form_bound=min(terms.values()),
        terms=terms,
        per_construction=sizes,
        construction_params=params,
        best_constructive=min(sizes.values()),
        known_exact=fgbs_known(d),
    )
