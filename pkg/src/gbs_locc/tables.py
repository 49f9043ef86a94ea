"""Regenerate the four comparison tables from formulas and constructors."""

from __future__ import annotations

import csv
import io

from .core import (
    ceil_sqrt,
    construct_thm1,
    construct_thm2,
    construct_thm3,
    construct_thm4,
    construct_thm5,
)

ODD_DIMS = (5, 7, 9, 11, 13, 15, 17, 19, 29, 35, 39, 49, 59, 69, 79, 89, 99)
EVEN_DIMS = (4, 6, 8, 10, 12, 14, 16, 18, 20, 26, 30, 40, 50, 60, 70, 80, 90, 100)


def zhang2015(d: int) -> int:
    return (d + 5) // 2 if d % 2 else (d + 4) // 2


def wang2016(d: int) -> int:
    return 3 * ceil_sqrt(d) - 1


# table -> (dimensions, [(column, value function, smallest d, constructor for --audit)])
TABLES = {
    1: (ODD_DIMS, [
        ("zhang2015", zhang2015, 5, None),
        ("thm1", lambda d: construct_thm1(d).nominal_size, 5, construct_thm1),
        ("thm2", lambda d: construct_thm2(d).nominal_size, 9, construct_thm2),
    ]),
    2: (ODD_DIMS, [
        ("wang2016", wang2016, 9, None),
        ("thm3", lambda d: construct_thm3(d).nominal_size, 9, construct_thm3),
    ]),
    3: (EVEN_DIMS, [
        ("zhang2015", zhang2015, 4, None),
        ("thm4", lambda d: construct_thm4(d).nominal_size, 4, construct_thm4),
    ]),
    4: (EVEN_DIMS, [
        ("wang2016", wang2016, 6, None),
        ("thm5", lambda d: construct_thm5(d).nominal_size, 6, construct_thm5),
    ]),
}


def table_rows(which: int, audit: bool = False) -> list[dict]:
    """One row per dimension printed in the table; cells outside a column's range are absent.

    With ``audit`` every constructed column gains a ``<name>_distinct`` entry
    holding the number of distinct labels actually produced.
    """
    if which not in TABLES:
        raise ValueError(f"no table {which}; choose 1-4")
    dims, columns = TABLES[which]
    rows = []
    for d in dims:
        cols = {}
        for name, fn, lo, ctor in columns:
            if d < lo:
                continue
            cols[name] = fn(d)
            if audit and ctor is not None:
                cols[f"{name}_distinct"] = ctor(d).size
        rows.append({"d": d, "columns": cols})
    return rows


def column_names(which: int, audit: bool = False) -> list[str]:
    names = []
    for name, _, _, ctor in TABLES[which][1]:
        names.append(name)
        if audit and ctor is not None:
            names.append(f"{name}_distinct")
    return names


def render(which: int, fmt: str = "csv", audit: bool = False) -> str:
    rows = table_rows(which, audit)
    names = column_names(which, audit)
    grid = [[str(r["d"])] + [str(r["columns"].get(c, "")) for c in names] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["d"] + names)
        writer.writerows(grid)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| d | " + " | ".join(names) + " |", "|" + "---|" * (len(names) + 1)]
        lines += ["| " + " | ".join(row) + " |" for row in grid]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
