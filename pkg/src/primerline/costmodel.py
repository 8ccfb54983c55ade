"""SIMPLE product-line economics.

All arithmetic is in integer person-weeks; person-month figures are derived
display values at 4 person-weeks per person-month, rounded half-up where a
"paper-style" number is requested (the source material rounds before
subtracting, so both the exact and the rounded-then-subtracted savings are
reported).
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction

PW_PER_PM = 4


class CostInputError(ValueError):
    pass


@dataclass(frozen=True)
class CostInputs:
    c_org: int        # person-weeks
    c_cab: int
    c_unique: int     # per product
    c_reuse: int      # per product
    c_product: int    # per stand-alone product
    n: int

    def __post_init__(self):
        for name in ("c_org", "c_cab", "c_unique", "c_reuse", "c_product", "n"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise CostInputError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise CostInputError(f"{name} must be >= 0, got {value}")


def person_months(pw: int) -> Fraction:
    return Fraction(pw, PW_PER_PM)


def round_half_up_pm(pw: int) -> int:
    months = person_months(pw)
    return int(months + Fraction(1, 2)) if months >= 0 else -int(-months + Fraction(1, 2))


def spl_cost(inputs: CostInputs, n: int | None = None) -> int:
    n = inputs.n if n is None else n
    return inputs.c_org + inputs.c_cab + n * (inputs.c_unique + inputs.c_reuse)


def standalone_cost(inputs: CostInputs, n: int | None = None) -> int:
    n = inputs.n if n is None else n
    return n * inputs.c_product


def savings_exact(inputs: CostInputs, n: int | None = None) -> int:
    return standalone_cost(inputs, n) - spl_cost(inputs, n)


def savings_paper_style(inputs: CostInputs, n: int | None = None) -> int:
    """Person-months, each operand rounded half-up before subtracting."""
    return (round_half_up_pm(standalone_cost(inputs, n))
            - round_half_up_pm(spl_cost(inputs, n)))


def break_even(inputs: CostInputs) -> int | None:
    """Smallest product count with positive exact savings, or None."""
    per_product = inputs.c_product - (inputs.c_unique + inputs.c_reuse)
    if per_product <= 0:
        return None
    fixed = inputs.c_org + inputs.c_cab
    n = fixed // per_product + 1
    assert savings_exact(inputs, n) > 0 and savings_exact(inputs, n - 1) <= 0
    return n


def cost_curve(inputs: CostInputs, n_max: int) -> list[tuple[int, int, int]]:
    if n_max < 1:
        raise CostInputError(f"n_max must be >= 1, got {n_max}")
    return [(n, spl_cost(inputs, n), standalone_cost(inputs, n))
            for n in range(1, n_max + 1)]


def curve_csv(curve: list[tuple[int, int, int]]) -> str:
    out = io.StringIO()
    out.write("n,spl_pw,standalone_pw\n")
    for n, spl, standalone in curve:
        out.write(f"{n},{spl},{standalone}\n")
    return out.getvalue()


@dataclass(frozen=True)
class CostReport:
    inputs: CostInputs
    c_spl: int
    c_standalone: int
    savings_exact: int
    savings_paper_style: int
    break_even: int | None
    curve: list[tuple[int, int, int]]

    def to_dict(self) -> dict:
        return {
            "break_even": self.break_even,
            "c_spl_pm": round_half_up_pm(self.c_spl),
            "c_spl_pm_exact": str(person_months(self.c_spl)),
            "c_spl_pw": self.c_spl,
            "c_standalone_pm": round_half_up_pm(self.c_standalone),
            "c_standalone_pw": self.c_standalone,
            "curve": [{"n": n, "spl_pw": s, "standalone_pw": a}
                      for n, s, a in self.curve],
            "n": self.inputs.n,
            "savings_exact_pw": self.savings_exact,
            "savings_paper_style_pm": self.savings_paper_style,
        }


def build_report(inputs: CostInputs, n_max: int | None = None) -> CostReport:
    curve = cost_curve(inputs, n_max) if n_max else []
    return CostReport(
        inputs=inputs,
        c_spl=spl_cost(inputs),
        c_standalone=standalone_cost(inputs),
        savings_exact=savings_exact(inputs),
        savings_paper_style=savings_paper_style(inputs),
        break_even=break_even(inputs),
        curve=curve,
    )
