"""Trace-weighted character sums, content polynomials, and nilpotency reports.

The central object is the scalar attached to a shape ``delta`` and an
assignment of traces to cycle lengths: the sum over the symmetric group on
|delta| letters of the character of delta times the product of per-cycle
traces.  Because every factor depends only on the cycle type, the
permutation sum collapses to a sum over cycle types weighted by class
sizes; the literal permutation sum is kept alongside as a brute-force
oracle for that collapse.

Specializing all traces to a single stable value t yields the content
polynomial of delta, which factors exactly as
``dim(delta) * prod over cells (t + column - row)`` and therefore vanishes
at integer t exactly on the interval [-(cols-1), rows-1].  That interval
drives the nilpotency report: outside a slightly larger forbidden interval
the scalar is provably nonzero and the numerically-trivial ideal is
nilpotent with endomorphism exponent s-1 and ideal exponent 2^(s-1)-1,
where s is the length of the biggest hook.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterator, NamedTuple, Union

from .characters import CharacterCache, character, class_size, dimension
from .partitions import Partition, big_hook_split, enumerate_partitions, rectangle
from .polynomial import ALPHA_VARS, T_VARS, Polynomial

BRUTE_FORCE_CAP = 7


# -- trace specifications ---------------------------------------------------


@dataclass(frozen=True)
class StableTrace:
    """One endomorphism whose trace is the same for every iterate.

    The value may be an exact scalar or a polynomial; passing the bare
    variable t produces content polynomials.
    """

    value: Union[Fraction, int, Polynomial]


@dataclass(frozen=True)
class TraceSequence:
    """Explicit per-cycle-length traces t_1, ..., t_r."""

    values: tuple

    def __init__(self, values):
        object.__setattr__(
            self, "values", tuple(Fraction(v) for v in values)
        )


@dataclass(frozen=True)
class TwoProjectorTrace:
    """Two endomorphisms with stable traces a and b and vanishing mixed traces.

    Evaluated on the pencil alpha1*pi1 + alpha2*pi2, an l-cycle contributes
    a*alpha1^l + b*alpha2^l: mixed words die, so only the two pure powers
    survive.  The result of a sum under this spec is a bivariate polynomial.
    """

    a: Fraction
    b: Fraction

    def __init__(self, a, b):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))


TraceSpec = Union[StableTrace, TraceSequence, TwoProjectorTrace]


def _unit(spec: TraceSpec):
    """Multiplicative unit in the result space of a spec (empty products)."""
    if isinstance(spec, TwoProjectorTrace):
        return Polynomial.constant(1, ALPHA_VARS)
    if isinstance(spec, StableTrace) and isinstance(spec.value, Polynomial):
        return Polynomial.constant(1, spec.value.variables)
    return Fraction(1)


def _length_trace(spec: TraceSpec, max_length: int):
    """Return the map cycle length -> trace factor, checking coverage."""
    if isinstance(spec, StableTrace):
        value = spec.value
        if not isinstance(value, Polynomial):
            value = Fraction(value)
        return lambda length: value
    if isinstance(spec, TraceSequence):
        if len(spec.values) < max_length:
            raise ValueError(
                f"trace sequence of length {len(spec.values)} cannot cover "
                f"cycle lengths up to {max_length}"
            )
        return lambda length: spec.values[length - 1]
    if isinstance(spec, TwoProjectorTrace):
        a, b = spec.a, spec.b
        return lambda length: Polynomial(ALPHA_VARS, {(length, 0): a, (0, length): b})
    raise TypeError(f"not a trace spec: {spec!r}")


# -- the trace-weighted character sum and its oracle -----------------------


def trace_character_sum(delta: Partition, spec: TraceSpec, cache: CharacterCache | None = None):
    """Sum over the symmetric group on |delta| letters of character times
    per-cycle trace product, computed as a class sum.

    All trace factors depend only on the cycle type, so the permutation sum
    collapses to ``sum over cycle types mu of class_size(mu) * chi_delta(mu)
    * prod_i trace(mu_i)``.  The empty shape gives 1 (empty product).
    Returns a Fraction for numeric specs and a Polynomial for symbolic ones.
    """
    r = delta.size
    if r == 0:
        return _unit(spec)
    trace_of = _length_trace(spec, r)
    one = _unit(spec)
    total = one * 0
    for mu in enumerate_partitions(r):
        chi = character(delta, mu, cache)
        if chi == 0:
            continue
        weight = class_size(mu) * chi
        prod = one
        for part in mu.parts:
            prod = prod * trace_of(part)
        total = total + prod * weight
    return total


def _cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        count = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            count += 1
        lengths.append(count)
    lengths.sort(reverse=True)
    return lengths


def trace_character_sum_brute(
    delta: Partition, spec: TraceSpec, cap: int = BRUTE_FORCE_CAP
):
    """Literal permutation-sum evaluation; oracle for the class collapse."""
    r = delta.size
    if r > cap:
        raise ValueError(f"brute force capped at size {cap}, got {r}")
    if r == 0:
        return _unit(spec)
    trace_of = _length_trace(spec, r)
    one = _unit(spec)
    total = one * 0
    for perm in permutations(range(r)):
        lengths = _cycle_lengths(perm)
        chi = character(delta, Partition(lengths))
        if chi == 0:
            continue
        prod = one
        for length in lengths:
            prod = prod * trace_of(length)
        total = total + prod * chi
    return total


# -- content polynomial -----------------------------------------------------


def content_polynomial(delta: Partition, cache: CharacterCache | None = None) -> Polynomial:
    """Class-sum polynomial in t: each cycle contributes a factor t."""
    t = Polynomial.variable("t", T_VARS)
    result = trace_character_sum(delta, StableTrace(t), cache)
    if isinstance(result, Fraction):  # empty shape
        return Polynomial.constant(result, T_VARS)
    return result


def content_polynomial_brute(delta: Partition, cap: int = BRUTE_FORCE_CAP) -> Polynomial:
    """Permutation-sum form of the content polynomial (oracle)."""
    t = Polynomial.variable("t", T_VARS)
    result = trace_character_sum_brute(delta, StableTrace(t), cap)
    if isinstance(result, Fraction):
        return Polynomial.constant(result, T_VARS)
    return result


def content_closed_form(delta: Partition) -> Polynomial:
    """Factored form: dimension of delta times prod over cells of (t + content)."""
    t = Polynomial.variable("t", T_VARS)
    if not delta.parts:
        return Polynomial.constant(1, T_VARS)
    poly = Polynomial.constant(dimension(delta), T_VARS)
    for c in delta.contents():
        poly = poly * (t + c)
    return poly


@dataclass(frozen=True)
class IntegerInterval:
    """The integers lo..hi inclusive; membership requires integrality."""

    lo: int
    hi: int

    def __contains__(self, value) -> bool:
        v = Fraction(value)
        return v.denominator == 1 and self.lo <= v <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def issubset(self, other: "IntegerInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"

    def to_json_dict(self) -> dict:
        return {"min": self.lo, "max": self.hi}


def content_roots(delta: Partition) -> IntegerInterval | None:
    """Integer vanishing locus of the content polynomial: [-(cols-1), rows-1].

    The empty shape has constant polynomial 1 and no roots (None).
    """
    if not delta.parts:
        return None
    return IntegerInterval(-(delta.cols - 1), delta.rows - 1)


# -- the full-cycle scalar for hooks ---------------------------------------


def hook_cycle_scalar(lam: Partition) -> int:
    """(n-1)! * (-1)^j for the hook (n-j, 1^j).

    This is the sum of the character over all n-cycles, i.e. the number of
    n-cycles times the hook character value at an n-cycle.
    """
    if lam.size < 2:
        raise ValueError("needs a partition of at least 2")
    if not lam.is_hook():
        raise ValueError(f"{lam} is not a hook")
    j = lam.rows - 1
    return factorial(lam.size - 1) * (-1) ** j


class CycleSumFactors(NamedTuple):
    """The trace-sum scalar split as sign * cycle_count * y.

    Its nonzeroness is exactly the nonzeroness of the y factor, so the
    three factors are reported unmultiplied.  ``sign`` is (-1)^(rows-1),
    the parity of the biggest-hook strip, and ``cycle_count`` = (s-1)! is
    the number of long cycles on the fixed support.
    """

    sign: int
    cycle_count: int
    y: Union[Fraction, Polynomial]


def cycle_sum_factors(lam: Partition, spec: TraceSpec) -> CycleSumFactors:
    if lam.size < 2:
        raise ValueError("needs a partition of at least 2")
    split = big_hook_split(lam)
    sign = (-1) ** (lam.rows - 1)
    return CycleSumFactors(
        sign, factorial(split.s - 1), trace_character_sum(split.delta, spec)
    )


# -- nilpotency report ------------------------------------------------------

REASON_HOOK = "Hook"
REASON_OUTSIDE = "TraceOutsideForbiddenSet"
REASON_INSIDE = "TraceInForbiddenSet"
REASON_NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class NilpotencyReport:
    applies: bool
    reason: str
    s: int
    endo_exponent: int
    ideal_exponent: int
    forbidden_set: IntegerInterval | None = None
    sharp_roots: IntegerInterval | None = None
    trace: Fraction | None = None
    y_nonzero: bool | None = None
    witness: str | None = None

    def to_json_dict(self) -> dict:
        out = {
            "applies": self.applies,
            "reason": self.reason,
            "s": self.s,
            "endo_exponent": self.endo_exponent,
            "ideal_exponent": str(self.ideal_exponent),
        }
        if self.trace is not None:
            out["trace"] = str(self.trace)
        if self.forbidden_set is not None:
            out["forbidden_set"] = self.forbidden_set.to_json_dict()
        if self.sharp_roots is not None:
            out["sharp_roots"] = self.sharp_roots.to_json_dict()
        if self.y_nonzero is not None:
            out["y_nonzero"] = self.y_nonzero
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "NilpotencyReport":
        def interval(key):
            if key not in data:
                return None
            return IntegerInterval(data[key]["min"], data[key]["max"])

        return cls(
            applies=data["applies"],
            reason=data["reason"],
            s=data["s"],
            endo_exponent=data["endo_exponent"],
            ideal_exponent=int(data["ideal_exponent"]),
            forbidden_set=interval("forbidden_set"),
            sharp_roots=interval("sharp_roots"),
            trace=Fraction(data["trace"]) if "trace" in data else None,
            y_nonzero=data.get("y_nonzero"),
            witness=data.get("witness"),
        )


def nilpotency_check(lam: Partition, trace=None) -> NilpotencyReport:
    """Decide whether the nilpotency bound applies to a vanishing shape.

    Hooks always qualify.  Otherwise a stable trace value is required and
    must avoid the integer interval [-(cols-2), rows-2].  The report also
    carries the sharp interval (the content-polynomial roots of the
    leftover shape): the scalar is nonzero exactly outside it, which can
    hold even when the coarser forbidden-set test fails.
    """
    if lam.size < 2:
        raise ValueError("needs a partition of at least 2")
    s = lam.rows + lam.cols - 1
    endo = s - 1
    ideal = 2 ** (s - 1) - 1
    if lam.is_hook():
        return NilpotencyReport(True, REASON_HOOK, s, endo, ideal)
    if trace is None:
        raise ValueError(f"{lam} is not a hook: a trace value is required")
    trace = Fraction(trace)
    forbidden = IntegerInterval(-(lam.cols - 2), lam.rows - 2)
    delta = big_hook_split(lam).delta
    sharp = content_roots(delta)
    applies = trace not in forbidden
    return NilpotencyReport(
        applies,
        REASON_OUTSIDE if applies else REASON_INSIDE,
        s,
        endo,
        ideal,
        forbidden_set=forbidden,
        sharp_roots=sharp,
        trace=trace,
        y_nonzero=trace not in sharp,
    )


# -- two-projector sweep ----------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    lam: Partition
    delta: Partition
    y: Polynomial
    nonzero: bool

    def to_json_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "delta": str(self.delta),
            "y": self.y.to_json_dict(),
            "nonzero": self.nonzero,
        }


def excluded_rectangle(a: int, b: int, rows_exponent: bool = True) -> Partition:
    """The rectangle whose containment excludes a shape from the sweep.

    With the default orientation the exponent counts rows: traces (a, b)
    exclude shapes containing the (a+2)-row, (b+2)-column rectangle.
    ``rows_exponent=False`` flips the convention.
    """
    if a < 0 or b < 0 or int(a) != a or int(b) != b:
        raise ValueError("projector traces must be non-negative integers")
    if rows_exponent:
        return rectangle(int(a) + 2, int(b) + 2)
    return rectangle(int(b) + 2, int(a) + 2)


def scan_shapes(
    a: int, b: int, n_max: int, rows_exponent: bool = True
) -> Iterator[Partition]:
    """All shapes of size 2..n_max that avoid the excluded rectangle."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rect = excluded_rectangle(a, b, rows_exponent)
    for n in range(2, n_max + 1):
        for lam in enumerate_partitions(n):
            if not lam.contains(rect):
                yield lam


def scan_record(lam: Partition, a, b) -> ScanRecord:
    """Evaluate the two-projector polynomial for one shape."""
    delta = big_hook_split(lam).delta
    y = trace_character_sum(delta, TwoProjectorTrace(a, b))
    if isinstance(y, Fraction):  # hooks: empty shape, constant 1
        y = Polynomial.constant(y, ALPHA_VARS)
    return ScanRecord(lam, delta, y, not y.is_zero())


def conjecture_scan(
    a: int, b: int, n_max: int, rows_exponent: bool = True
) -> Iterator[ScanRecord]:
    """Serial sweep: a record per scanned shape, in enumeration order.

    Counterexamples are records with ``nonzero`` False; the expectation is
    that none occur.
    """
    for lam in scan_shapes(a, b, n_max, rows_exponent):
        yield scan_record(lam, a, b)
