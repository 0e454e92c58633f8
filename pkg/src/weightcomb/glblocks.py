"""Blocks and weights of finite general linear and unitary groups.

Semisimple classes of GL_n(q) (eps = +1) and GU_n(q) (eps = -1) are encoded
by their elementary divisors.  An elementary divisor is represented here by
a root label: the orbit of a fraction a/r (standing for a primitive r-th
root of unity in the algebraic closure) under multiplication by eps*q.  The
orbit size is the degree of the divisor.  This representation keeps the
whole enumeration grid tractable and turns the central and Frobenius
actions into exact fraction arithmetic: the central character z shifts a
label by k/(q - eps) and the field automorphism multiplies it by p.

On top of the labels the module enumerates Lusztig series characters, block
labels (s, kappa), the generic weights of a block, the Alperin-style weight
labels built from shapes (gamma, c-sequence) with their defect-zero index
sets, and the hook classification of generalized-cuspidal unipotent
characters in type A.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import (
    PrimePower,
    d_of,
    divisors,
    ellprime_part,
    is_prime,
    mobius,
    multiplicative_order,
    valuation,
)
from .errors import BoundExceededError, UnsupportedRegimeError
from .partitions import (
    Partition,
    d_core,
    hooks,
    is_d_core,
    partitions_of,
)

#: Enumeration bounds for the grid operations (semisimple_labels, blocks,
#: series_labels, verify_counting).  Single-block operations are not bounded.
GRID_MAX_N = 6
GRID_PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9)
GRID_ELLS = (2, 3, 5, 7)


def _check_eps(eps: int) -> None:
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")


def _check_modular(q: int, eps: int, ell: int) -> None:
    """Validation shared by every modular operation (no size bound)."""
    _check_eps(eps)
    PrimePower.from_q(q)
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if q % ell == 0:
        raise ValueError(f"ell={ell} must not divide q={q}")
    if ell == 2 and (q - eps) % 4 != 0:
        raise UnsupportedRegimeError(
            f"ell=2 requires 4 | (q - eps); got q={q}, eps={eps:+d}"
        )


def _check_grid(n: int, q: int, eps: int, ell: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > GRID_MAX_N:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {GRID_MAX_N}")
    if q not in GRID_PRIME_POWERS:
        raise BoundExceededError(f"q={q} outside the supported set {GRID_PRIME_POWERS}")
    if ell not in GRID_ELLS:
        raise BoundExceededError(f"ell={ell} outside the supported set {GRID_ELLS}")
    _check_modular(q, eps, ell)


# ---------------------------------------------------------------------------
# Root labels.


@dataclass(frozen=True, order=True)
class FracLabel:
    """An elementary-divisor label: the multiply-by-(eps*q) orbit of a root
    of unity, stored by its smallest member num/den (reduced, in [0, 1))."""

    deg: int
    den: int
    num: int

    def __post_init__(self) -> None:
        if self.den < 1 or not 0 <= self.num < self.den:
            raise ValueError(f"fraction {self.num}/{self.den} is not in [0, 1)")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"fraction {self.num}/{self.den} is not reduced")
        if self.deg < 1:
            raise ValueError(f"degree must be >= 1, got {self.deg}")

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


def orbit_of_fraction(fr: Fraction, q: int, eps: int) -> tuple[Fraction, ...]:
    """The multiply-by-(eps*q) orbit of ``fr`` in Q/Z, starting at ``fr``."""
    step = eps * q
    out = [fr]
    cur = (fr * step) % 1
    while cur != fr:
        out.append(cur)
        cur = (cur * step) % 1
    return tuple(out)


def label_of_fraction(num: int, den: int, q: int, eps: int) -> FracLabel:
    """Canonical label of the orbit through num/den (den coprime to q)."""
    _check_eps(eps)
    if den < 1:
        raise ValueError(f"denominator must be >= 1, got {den}")
    if math.gcd(den, q) != 1:
        raise ValueError(f"denominator {den} must be coprime to q={q}")
    orbit = orbit_of_fraction(Fraction(num, den) % 1, q, eps)
    rep = min(orbit)
    return FracLabel(len(orbit), rep.denominator, rep.numerator)


def is_ellprime_label(lab: FracLabel, ell: int) -> bool:
    """Whether the label's roots have order coprime to ell."""
    return lab.den % ell != 0


def d_gamma(deg: int, q: int, eps: int, ell: int) -> int:
    """Order of (eps*q)**deg modulo ell (modulo 4 when ell == 2)."""
    _check_modular(q, eps, ell)
    modulus = 4 if ell == 2 else ell
    return multiplicative_order(pow(eps * q, deg, modulus), modulus)


@lru_cache(maxsize=None)
def _all_labels(q: int, eps: int, max_deg: int) -> tuple[FracLabel, ...]:
    """Every label of degree <= max_deg, sorted by (deg, den, num)."""
    dens: set[int] = set()
    for m in range(1, max_deg + 1):
        dens.update(divisors(abs((eps * q) ** m - 1)))
    found: list[FracLabel] = []
    for r in sorted(dens):
        step = (eps * q) % r if r > 1 else 0
        seen = bytearray(max(r, 1))
        for a in range(max(r, 1)):
            if seen[a] or (r > 1 and math.gcd(a, r) != 1):
                continue
            orbit = []
            b = a
            while not seen[b]:
                seen[b] = 1
                orbit.append(b)
                b = b * step % r if r > 1 else 0
            found.append(FracLabel(len(orbit), r, min(orbit)))
    return tuple(sorted(lab for lab in found if lab.deg <= max_deg))


def ellprime_labels(q: int, eps: int, ell: int, max_deg: int) -> tuple[FracLabel, ...]:
    """Labels of degree <= max_deg whose roots have order coprime to ell."""
    _check_modular(q, eps, ell)
    return tuple(
        lab for lab in _all_labels(q, eps, max_deg) if is_ellprime_label(lab, ell)
    )


def ellprime_label_count(q: int, eps: int, ell: int, deg: int) -> int:
    """Number of degree-``deg`` labels with roots of order coprime to ell,
    by Moebius inversion over the fixed-point counts of (eps*q)-multiplication."""
    _check_modular(q, eps, ell)
    total = sum(
        mobius(deg // m) * ellprime_part((eps * q) ** m - 1, ell)
        for m in divisors(deg)
    )
    if total % deg:
        raise AssertionError(f"orbit count {total} not divisible by degree {deg}")
    return total // deg


def _first_labels(q: int, eps: int, ell: int, deg: int, count: int) -> tuple[FracLabel, ...]:
    """The first ``count`` ell-prime labels of exact degree ``deg`` in
    canonical order, without enumerating the full degree."""
    if count == 0:
        return ()
    out: list[FracLabel] = []
    for r in sorted(divisors(abs((eps * q) ** deg - 1))):
        if r % ell == 0:
            continue
        order = 1 if r == 1 else multiplicative_order((eps * q) % r, r)
        if order != deg:
            continue
        step = (eps * q) % r if r > 1 else 0
        seen = bytearray(max(r, 1))
        for a in range(max(r, 1)):
            if seen[a] or (r > 1 and math.gcd(a, r) != 1):
                continue
            b = a
            while not seen[b]:
                seen[b] = 1
                b = b * step % r if r > 1 else 0
            out.append(FracLabel(deg, r, a))
            if len(out) == count:
                return tuple(out)
    return tuple(out)


# ---------------------------------------------------------------------------
# Semisimple labels.


@dataclass(frozen=True)
class SemisimpleLabel:
    """A semisimple ell'-class: distinct labels with multiplicities whose
    weighted degrees sum to n, at a fixed grid point (q, eps, ell)."""

    q: int
    eps: int
    ell: int
    n: int
    assignments: tuple[tuple[FracLabel, int], ...]

    def __post_init__(self) -> None:
        labs = [lab for lab, _ in self.assignments]
        if len(set(labs)) != len(labs):
            raise ValueError("elementary divisors must be pairwise distinct")
        if any(m < 1 for _, m in self.assignments):
            raise ValueError("multiplicities must be >= 1")
        if sorted(labs) != labs:
            raise ValueError("assignments must be sorted by label")
        total = sum(lab.deg * m for lab, m in self.assignments)
        if total != self.n:
            raise ValueError(f"degrees sum to {total}, expected n={self.n}")

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "eps": self.eps,
            "ell": self.ell,
            "n": self.n,
            "s": [[str(lab), m] for lab, m in self.assignments],
        }


def _assignments(labels: tuple[FracLabel, ...], start: int, remaining: int):
    """Yield tuples ((index, multiplicity), ...) over distinct labels with
    index >= start, multiplicities >= 1, total weighted degree = remaining."""
    if remaining == 0:
        yield ()
        return
    for idx in range(start, len(labels)):
        deg = labels[idx].deg
        if deg > remaining:
            break  # labels are sorted by degree first
        for mult in range(remaining // deg, 0, -1):
            for rest in _assignments(labels, idx + 1, remaining - mult * deg):
                yield ((idx, mult),) + rest


def semisimple_labels(n: int, q: int, eps: int, ell: int) -> list[SemisimpleLabel]:
    """All semisimple ell'-labels of GL_n / GU_n at the grid point."""
    _check_grid(n, q, eps, ell)
    labels = ellprime_labels(q, eps, ell, n)
    return [
        SemisimpleLabel(
            q, eps, ell, n, tuple((labels[i], m) for i, m in chosen)
        )
        for chosen in _assignments(labels, 0, n)
    ]


# ---------------------------------------------------------------------------
# Blocks and series characters.


def _core_of(mu: Partition, d: int) -> Partition:
    """d-core extended to d = 1 (where every hook is removable)."""
    return () if d == 1 else d_core(mu, d)


def _is_core(mu: Partition, d: int) -> bool:
    return mu == () if d == 1 else is_d_core(mu, d)


@dataclass(frozen=True)
class SeriesCharLabel:
    """A series character label: a semisimple label together with one
    partition of each multiplicity (aligned with s.assignments)."""

    s: SemisimpleLabel
    mu: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if len(self.mu) != len(self.s.assignments):
            raise ValueError("mu must align with the assignments of s")
        for (lab, m), part in zip(self.s.assignments, self.mu):
            if sum(part) != m:
                raise ValueError(f"|mu| = {sum(part)} differs from m = {m} at {lab}")

    def to_json_dict(self) -> dict:
        return {
            "s": self.s.to_json_dict(),
            "mu": [
                [str(lab), list(part)]
                for (lab, _), part in zip(self.s.assignments, self.mu)
            ],
        }


@dataclass(frozen=True)
class BlockLabel:
    """A block label (s, kappa): per elementary divisor a d_Gamma-core with
    the induced nonnegative weight (both aligned with s.assignments)."""

    s: SemisimpleLabel
    kappa: tuple[Partition, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.kappa) != len(self.s.assignments) or len(self.weights) != len(
            self.s.assignments
        ):
            raise ValueError("kappa and weights must align with the assignments of s")
        for (lab, m), core, w in zip(self.s.assignments, self.kappa, self.weights):
            d = d_gamma(lab.deg, self.s.q, self.s.eps, self.s.ell)
            if not _is_core(core, d):
                raise ValueError(f"kappa at {lab} is not a {d}-core")
            if w < 0 or m - sum(core) != w * d:
                raise ValueError(f"weight mismatch at {lab}: m={m}, |kappa|={sum(core)}")

    def to_json_dict(self) -> dict:
        base = self.s.to_json_dict()
        return {
            **base,
            "kappa": [
                [str(lab), list(core)]
                for (lab, _), core in zip(self.s.assignments, self.kappa)
            ],
            "weights": list(self.weights),
        }


@lru_cache(maxsize=None)
def _core_choices(m: int, d: int) -> tuple[Partition, ...]:
    """All d-cores arising as the d-core of a partition of m: the d-cores of
    size congruent to m mod d, sizes ascending."""
    out: list[Partition] = []
    for size in range(m % d, m + 1, d):
        out.extend(mu for mu in partitions_of(size) if _is_core(mu, d))
    return tuple(out)


def blocks(n: int, q: int, eps: int, ell: int) -> list[BlockLabel]:
    """All block labels (s, kappa) at the grid point."""
    _check_grid(n, q, eps, ell)
    out: list[BlockLabel] = []
    for s in semisimple_labels(n, q, eps, ell):
        per_gamma = [
            _core_choices(m, d_gamma(lab.deg, q, eps, ell))
            for lab, m in s.assignments
        ]
        for combo in itertools.product(*per_gamma):
            weights = tuple(
                (m - sum(core)) // d_gamma(lab.deg, q, eps, ell)
                for (lab, m), core in zip(s.assignments, combo)
            )
            out.append(BlockLabel(s, combo, weights))
    return out


def principal_block(n: int, q: int, eps: int, ell: int) -> BlockLabel:
    """The block containing the unipotent characters: s trivial with
    multiplicity n and kappa the d-core of the single-row partition."""
    _check_eps(eps)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_modular(q, eps, ell)
    d = d_of(q, eps, ell)
    trivial = FracLabel(1, 1, 0)
    s = SemisimpleLabel(q, eps, ell, n, ((trivial, n),))
    core = _core_of((n,), d)
    return BlockLabel(s, (core,), ((n - sum(core)) // d,))


def block_irr(block: BlockLabel) -> list[SeriesCharLabel]:
    """The series characters in the block: all mu with the block's cores."""
    s = block.s
    per_gamma = []
    for (lab, m), core in zip(s.assignments, block.kappa):
        d = d_gamma(lab.deg, s.q, s.eps, s.ell)
        per_gamma.append(
            tuple(mu for mu in partitions_of(m) if _core_of(mu, d) == core)
        )
    return [SeriesCharLabel(s, combo) for combo in itertools.product(*per_gamma)]


def series_labels(n: int, q: int, eps: int, ell: int) -> list[SeriesCharLabel]:
    """All series character labels at the grid point."""
    _check_grid(n, q, eps, ell)
    out: list[SeriesCharLabel] = []
    for s in semisimple_labels(n, q, eps, ell):
        per_gamma = [partitions_of(m) for _, m in s.assignments]
        out.extend(SeriesCharLabel(s, combo) for combo in itertools.product(*per_gamma))
    return out


# ---------------------------------------------------------------------------
# Weights.


def _is_ell_power(m: int, ell: int) -> bool:
    while m % ell == 0:
        m //= ell
    return m == 1


def is_defect_zero(block: BlockLabel) -> bool:
    """Defect-zero test: every weight vanishes and ell does not divide q - eps."""
    s = block.s
    return all(w == 0 for w in block.weights) and (s.q - s.eps) % s.ell != 0


def _positive_defect_case(block: BlockLabel) -> int | None:
    """The exponent delta when the block is the full series union of a
    single elementary divisor with ell-power multiplicity and ell | (q - eps);
    None otherwise."""
    s = block.s
    if (s.q - s.eps) % s.ell != 0:
        return None
    if len(s.assignments) != 1:
        return None
    _, m = s.assignments[0]
    if not _is_ell_power(m, s.ell):
        return None
    return valuation(m, s.ell)


@dataclass(frozen=True)
class GenericWeightLabel:
    """A generic weight: a hook partition of the multiplicity (positive
    defect case) or the block's unique series character (defect zero)."""

    s: SemisimpleLabel
    hook: Partition | None
    series: SeriesCharLabel | None

    def __post_init__(self) -> None:
        if (self.hook is None) == (self.series is None):
            raise ValueError("exactly one of hook and series must be set")
        if self.hook is not None:
            if len(self.s.assignments) != 1:
                raise ValueError("hook labels require a single elementary divisor")
            _, m = self.s.assignments[0]
            if sum(self.hook) != m or any(p != 1 for p in self.hook[1:]):
                raise ValueError(f"{self.hook} is not a hook partition of {m}")

    def to_json_dict(self) -> dict:
        if self.hook is not None:
            return {"generic": list(self.hook)}
        return {"generic": self.series.to_json_dict()}


def generic_weights(block: BlockLabel) -> tuple[GenericWeightLabel, ...]:
    """Generic weights of the block: one series label at defect zero, the
    hook partitions when ell | (q - eps) and s is a single divisor with
    ell-power multiplicity, and nothing otherwise."""
    s = block.s
    if is_defect_zero(block):
        series = SeriesCharLabel(s, block.kappa)
        return (GenericWeightLabel(s, None, series),)
    if _positive_defect_case(block) is None:
        return ()
    _, m = s.assignments[0]
    return tuple(GenericWeightLabel(s, h, None) for h in hooks(m))


def _compositions(total: int):
    """Compositions of ``total`` into positive parts, first part descending."""
    if total == 0:
        yield ()
        return
    for head in range(total, 0, -1):
        for tail in _compositions(total - head):
            yield (head,) + tail


@dataclass(frozen=True)
class AFWeightLabel:
    """A weight label built from a local-subgroup shape: gamma_exp copies of
    the extraspecial layer, a composition c_seq of wreath layers, and an
    index psi_index into the d_Gamma * (ell-1)**len(c_seq) defect-zero
    characters of the local quotient."""

    s: SemisimpleLabel
    gamma_exp: int
    c_seq: tuple[int, ...]
    psi_index: tuple[int, tuple[int, ...]]
    m_basic: int | None = field(default=None, compare=False)
    alpha: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.gamma_exp < 0 or any(c < 1 for c in self.c_seq):
            raise ValueError("shape parts must be a nonnegative gamma and positive c's")
        r, vec = self.psi_index
        if r < 0 or len(vec) != len(self.c_seq):
            raise ValueError("psi index must pair a residue with one value per c part")

    def to_json_dict(self) -> dict:
        return {
            "af": {
                "gamma": self.gamma_exp,
                "c_seq": list(self.c_seq),
                "psi_index": [self.psi_index[0], list(self.psi_index[1])],
            }
        }


def af_weights(block: BlockLabel) -> tuple[AFWeightLabel, ...]:
    """Alperin-style weight labels of the block: the trivial-subgroup label
    at defect zero; all shapes (gamma, c) with gamma + |c| = delta and their
    psi indices when ell | (q - eps) and s is a single divisor with
    multiplicity ell**delta; nothing otherwise."""
    s = block.s
    if is_defect_zero(block):
        return (AFWeightLabel(s, 0, (), (0, ())),)
    delta = _positive_defect_case(block)
    if delta is None:
        return ()
    lab, m = s.assignments[0]
    ell = s.ell
    d = d_of(s.q, s.eps, ell)
    d_gam = d_gamma(lab.deg, s.q, s.eps, ell)
    scaled = d_gam * lab.deg
    if scaled % d:
        raise AssertionError(f"d={d} does not divide d_Gamma*deg={scaled}")
    alpha = valuation(scaled // d, ell)
    m_basic = (scaled // d) // ell**alpha
    out: list[AFWeightLabel] = []
    for gamma_exp in range(delta, -1, -1):
        for c_seq in _compositions(delta - gamma_exp):
            for residue in range(d_gam):
                for vec in itertools.product(range(ell - 1), repeat=len(c_seq)):
                    out.append(
                        AFWeightLabel(
                            s, gamma_exp, c_seq, (residue, vec), m_basic, alpha
                        )
                    )
    if len(out) != m:
        raise AssertionError(f"shape enumeration produced {len(out)} != m = {m}")
    return tuple(out)


def shape_count_identity(delta: int, ell: int) -> bool:
    """Whether the shape sum over gamma + |c| = delta of (ell-1)**len(c)
    equals ell**delta."""
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    total = sum(
        (ell - 1) ** len(c_seq)
        for gamma_exp in range(delta + 1)
        for c_seq in _compositions(delta - gamma_exp)
    )
    return total == ell**delta


# ---------------------------------------------------------------------------
# Actions.


def _act_label(action, lab: FracLabel, q: int, eps: int) -> FracLabel:
    if action == "frob":
        shifted = (lab.fraction * PrimePower.from_q(q).p) % 1
    elif isinstance(action, int):
        shifted = (lab.fraction + Fraction(action, q - eps)) % 1
    else:
        raise ValueError(f"action must be an integer or 'frob', got {action!r}")
    moved = label_of_fraction(shifted.numerator, shifted.denominator, q, eps)
    if moved.deg != lab.deg:
        raise AssertionError(f"action changed the degree of {lab}")
    return moved


def act_on_semisimple(action, s: SemisimpleLabel) -> SemisimpleLabel:
    """Relabel every elementary divisor by the central shift (an integer
    exponent modulo q - eps) or by 'frob' (multiplication by p)."""
    pairs = sorted(
        (_act_label(action, lab, s.q, s.eps), m) for lab, m in s.assignments
    )
    return SemisimpleLabel(s.q, s.eps, s.ell, s.n, tuple(pairs))


def act_on_series(action, label: SeriesCharLabel) -> SeriesCharLabel:
    """Relabel the series character, carrying each partition with its divisor."""
    s = label.s
    moved = sorted(
        ((_act_label(action, lab, s.q, s.eps), m), part)
        for (lab, m), part in zip(s.assignments, label.mu)
    )
    new_s = SemisimpleLabel(s.q, s.eps, s.ell, s.n, tuple(p for p, _ in moved))
    return SeriesCharLabel(new_s, tuple(part for _, part in moved))


def act_on_block(action, block: BlockLabel) -> BlockLabel:
    """Relabel the block, carrying each core and weight with its divisor."""
    s = block.s
    moved = sorted(
        ((_act_label(action, lab, s.q, s.eps), m), core, w)
        for (lab, m), core, w in zip(s.assignments, block.kappa, block.weights)
    )
    new_s = SemisimpleLabel(s.q, s.eps, s.ell, s.n, tuple(p for p, _, _ in moved))
    return BlockLabel(
        new_s, tuple(c for _, c, _ in moved), tuple(w for _, _, w in moved)
    )


def act_on_weight(action, label):
    """Relabel a generic or AF weight label, keeping its combinatorial data."""
    if isinstance(label, GenericWeightLabel):
        new_s = act_on_semisimple(action, label.s)
        series = None if label.series is None else act_on_series(action, label.series)
        return GenericWeightLabel(new_s, label.hook, series)
    if isinstance(label, AFWeightLabel):
        new_s = act_on_semisimple(action, label.s)
        return AFWeightLabel(
            new_s, label.gamma_exp, label.c_seq, label.psi_index,
            label.m_basic, label.alpha,
        )
    raise ValueError(f"not a weight label: {label!r}")


def covered_blocks(block: BlockLabel) -> int:
    """Number of special-subgroup blocks covered: the count of central
    elements of ell'-order fixing the block.  Requires a block with
    nonempty weight sets (defect zero or the single-divisor ell-power case)."""
    if not is_defect_zero(block) and _positive_defect_case(block) is None:
        raise ValueError("covered-block count requires a block with nonempty weights")
    s = block.s
    z_order = s.q - s.eps
    count = 0
    for k in range(z_order):
        if (z_order // math.gcd(k, z_order)) % s.ell == 0:
            continue
        if act_on_block(k, block) == block:
            count += 1
    return count


# ---------------------------------------------------------------------------
# The counting report.


@dataclass(frozen=True)
class CountingReport:
    """Aggregate result of comparing generic and AF weight counts blockwise."""

    n: int
    q: int
    eps: int
    ell: int
    s_count: int
    blocks_checked: int
    nonempty_blocks: int
    weights_total: int
    af_total: int
    passed: bool
    mismatches: tuple[dict, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "eps": self.eps,
            "ell": self.ell,
            "s_count": self.s_count,
            "blocks_checked": self.blocks_checked,
            "nonempty_blocks": self.nonempty_blocks,
            "weights_total": self.weights_total,
            "af_total": self.af_total,
            "pass": self.passed,
            "mismatches": list(self.mismatches),
        }


def _shape_iter(degs: tuple[int, ...], counts: dict[int, int], n: int):
    """Yield shapes: tuples ((deg, multiplicity-partition), ...) with
    weighted total n and at most counts[deg] distinct divisors per degree."""

    def rec(i: int, rem: int):
        if rem == 0:
            yield ()
            return
        if i == len(degs):
            return
        d = degs[i]
        for t in range(rem // d + 1):
            if t == 0:
                yield from rec(i + 1, rem)
                continue
            for mults in partitions_of(t):
                if len(mults) > counts[d]:
                    continue
                for rest in rec(i + 1, rem - d * t):
                    yield ((d, mults),) + rest

    yield from rec(0, n)


def _shape_class_size(shape, counts: dict[int, int]) -> int:
    """Number of semisimple labels realizing the shape."""
    total = 1
    for deg, mults in shape:
        k = len(mults)
        ways = math.comb(counts[deg], k) * math.factorial(k)
        for value in set(mults):
            ways //= math.factorial(mults.count(value))
        total *= ways
    return total


def _representative_semisimple(
    shape, q: int, eps: int, ell: int, n: int
) -> SemisimpleLabel:
    pairs = []
    for deg, mults in shape:
        reps = _first_labels(q, eps, ell, deg, len(mults))
        if len(reps) < len(mults):
            raise AssertionError(f"not enough degree-{deg} labels for {mults}")
        pairs.extend(zip(reps, mults))
    return SemisimpleLabel(q, eps, ell, n, tuple(sorted(pairs)))


def verify_counting(n: int, q: int, eps: int, ell: int) -> CountingReport:
    """Check blockwise that the generic and AF weight sets have equal
    emptiness and equal cardinality across the whole grid point.

    Blocks are grouped by the shape of their semisimple label (the multiset
    of (degree, multiplicity) pairs): every quantity compared depends only
    on the shape, so one representative per shape verifies its whole class.
    """
    _check_grid(n, q, eps, ell)
    counts = {d: ellprime_label_count(q, eps, ell, d) for d in range(1, n + 1)}
    degs = tuple(d for d in range(1, n + 1) if counts[d] > 0)
    s_count = 0
    blocks_checked = 0
    nonempty = 0
    weights_total = 0
    af_total = 0
    mismatches: list[dict] = []

    for shape in _shape_iter(degs, counts, n):
        class_size = _shape_class_size(shape, counts)
        s_count += class_size
        rep_s = _representative_semisimple(shape, q, eps, ell, n)
        per_gamma = [
            _core_choices(m, d_gamma(lab.deg, q, eps, ell))
            for lab, m in rep_s.assignments
        ]
        blocks_per_s = math.prod(len(choices) for choices in per_gamma)
        blocks_checked += class_size * blocks_per_s

        def record(rep_block: BlockLabel, copies: int) -> None:
            nonlocal nonempty, weights_total, af_total
            gen = generic_weights(rep_block)
            af = af_weights(rep_block)
            if (len(gen) == 0) != (len(af) == 0) or len(gen) != len(af):
                mismatches.append(
                    {
                        "block": rep_block.to_json_dict(),
                        "generic": len(gen),
                        "af": len(af),
                        "class_size": copies,
                    }
                )
            if gen:
                nonempty += copies
                weights_total += copies * len(gen)
                af_total += copies * len(af)

        if (q - eps) % ell == 0:
            # d_Gamma = 1 throughout: a single block per s with empty cores.
            if blocks_per_s != 1:
                raise AssertionError("expected one block per label when ell | q - eps")
            rep_block = BlockLabel(
                rep_s,
                tuple(() for _ in rep_s.assignments),
                tuple(m for _, m in rep_s.assignments),
            )
            record(rep_block, class_size)
            continue

        # Defect-zero blocks: independently pick a core of full size for
        # every divisor; any such representative verifies its whole class.
        full_cores = [
            tuple(core for core in choices if sum(core) == m)
            for choices, (_, m) in zip(per_gamma, rep_s.assignments)
        ]
        zero_blocks = math.prod(len(f) for f in full_cores)
        if zero_blocks:
            rep_block = BlockLabel(
                rep_s,
                tuple(f[0] for f in full_cores),
                tuple(0 for _ in rep_s.assignments),
            )
            record(rep_block, class_size * zero_blocks)

        # Positive-weight blocks with ell not dividing q - eps: both weight
        # sets are empty; verify one representative when any exists.
        if blocks_per_s > zero_blocks:
            combo = None
            for candidate in itertools.product(*per_gamma):
                if any(
                    sum(core) != m
                    for core, (_, m) in zip(candidate, rep_s.assignments)
                ):
                    combo = candidate
                    break
            weights = tuple(
                (m - sum(core)) // d_gamma(lab.deg, q, eps, ell)
                for (lab, m), core in zip(rep_s.assignments, combo)
            )
            record(BlockLabel(rep_s, combo, weights),
                   class_size * (blocks_per_s - zero_blocks))

    return CountingReport(
        n,
        q,
        eps,
        ell,
        s_count,
        blocks_checked,
        nonempty,
        weights_total,
        af_total,
        not mismatches,
        tuple(mismatches),
    )


# ---------------------------------------------------------------------------
# Hook classification of generalized-cuspidal unipotent characters.


@dataclass(frozen=True)
class HookEGC:
    """Outcome of the unipotent classification: mode 'hooks' lists the n
    hook partitions, mode 'all' lists every partition of n, mode 'none' is
    empty."""

    mode: str
    partitions: tuple[Partition, ...]

    def to_json_dict(self) -> dict:
        return {"mode": self.mode, "partitions": [list(p) for p in self.partitions]}


def unipotent_hook_eGC(n: int, q: int, eps: int, ell: int) -> HookEGC:
    """Classify which unipotent characters are generalized e-cuspidal: the
    hook partitions when ell divides q - eps (4 divides q - eps for ell = 2)
    and n is a power of ell; every partition when ell = 2 and 4 divides
    q + eps; nothing otherwise."""
    _check_eps(eps)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    PrimePower.from_q(q)
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if q % ell == 0:
        raise ValueError(f"ell={ell} must not divide q={q}")
    split = (q - eps) % (4 if ell == 2 else ell) == 0
    if split and _is_ell_power(n, ell):
        return HookEGC("hooks", hooks(n))
    if ell == 2 and (q + eps) % 4 == 0:
        return HookEGC("all", partitions_of(n))
    return HookEGC("none", ())
