"""Mechanical verification of symmetry and limit theorems on small grids.

Each verifier sweeps a compiled-in grid (overridable through a JSON config
file), evaluates both sides of an identity exactly, and returns a report
whose failure list is empty exactly when every case holds.  Grid cells are
independent, so sweeps can fan out over a thread pool; results are merged
in submission order, keeping reports byte-identical for any thread count.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .exact import LaurentQT, RationalQT, limit_at_one, q_bracket, t_power
from .hecke import (
    all_permutations,
    normalized_homfly_of_closure,
    perm_cycle_type,
    perm_length,
    torus_braid_word,
)
from .partitions import Partition, partitions_of
from .special import alexander_torus, special_delta, special_H
from .torus import TorusLinkSpec, colored_homfly

DEFAULT_KNOTS = ((2, 3), (2, 5), (2, 7), (3, 4), (3, 5))
# 2-component torus links on (m, n, L) = (1, k, 2): the (2, 2k) family
DEFAULT_LINKS = ((1, 1, 2), (1, 2, 2))
DEFAULT_MAX_COLOR = 4
DEFAULT_HOOK_MAX = 5
DEFAULT_PARITY_MAX = 7
DEFAULT_HOOK_IDENTITY_MAX = 8
DEFAULT_LOWEST_TERM_TWISTS = (1, 2, 3)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one theorem sweep; empty failures means pass."""

    theorem: str
    grid: str
    cases: int
    failures: tuple
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self, include_elapsed: bool = False) -> str:
        """Report text; elapsed time is opt-in so output bytes stay reproducible."""
        status = "PASS" if self.passed else "FAIL"
        timing = f"elapsed={self.elapsed:.2f}s " if include_elapsed else ""
        lines = [
            f"theorem={self.theorem} grid={self.grid} cases={self.cases} "
            f"failures={len(self.failures)} {timing}{status}"
        ]
        for case, expected, actual in self.failures:
            lines.append(f"  case {case}: expected {expected}, got {actual}")
        return "\n".join(lines)

    def to_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "grid": self.grid,
            "cases": self.cases,
            "failures": [list(f) for f in self.failures],
            "passed": self.passed,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


@dataclass(frozen=True)
class GridConfig:
    """Grid sizes for the verification sweeps."""

    knots: tuple = DEFAULT_KNOTS
    links: tuple = DEFAULT_LINKS
    max_color: int = DEFAULT_MAX_COLOR
    hook_max: int = DEFAULT_HOOK_MAX
    parity_max: int = DEFAULT_PARITY_MAX
    hook_identity_max: int = DEFAULT_HOOK_IDENTITY_MAX
    lowest_term_twists: tuple = DEFAULT_LOWEST_TERM_TWISTS

    @classmethod
    def load(cls, path: str) -> "GridConfig":
        with open(path) as fh:
            raw = json.load(fh)
        kwargs = {}
        for key in (
            "knots",
            "links",
            "max_color",
            "hook_max",
            "parity_max",
            "hook_identity_max",
            "lowest_term_twists",
        ):
            if key in raw:
                v = raw[key]
                kwargs[key] = tuple(tuple(x) if isinstance(x, list) else x for x in v) if isinstance(v, list) else v
        return cls(**kwargs)


def _run_cells(theorem: str, grid_desc: str, cells, threads=None) -> VerificationReport:
    """Evaluate callables returning None (pass) or a failure triple."""
    start = time.perf_counter()
    if threads is None:
        threads = os.cpu_count() or 1
    if threads <= 1 or len(cells) <= 1:
        results = [c() for c in cells]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: c(), cells))
    failures = tuple(r for r in results if r is not None)
    return VerificationReport(
        theorem, grid_desc, len(cells), failures, time.perf_counter() - start
    )


# -- color grids --------------------------------------------------------


def _colors_up_to(max_size: int, include_empty: bool = True):
    out = [Partition(())] if include_empty else []
    for d in range(1, max_size + 1):
        out.extend(partitions_of(d))
    return out


def _hooks_up_to(max_size: int):
    out = []
    for d in range(1, max_size + 1):
        for a in range(d):
            out.append(Partition((a + 1,) + (1,) * (d - 1 - a)))
    return out


def _link_color_vectors(max_total: int):
    """All pairs of non-empty colors with total size <= max_total."""
    out = []
    for d1 in range(1, max_total):
        for d2 in range(1, max_total - d1 + 1):
            for a in partitions_of(d1):
                for b in partitions_of(d2):
                    out.append((a, b))
    return out


def _symmetry_grid(config: GridConfig):
    specs = []
    for m, n in config.knots:
        for a in _colors_up_to(config.max_color, include_empty=False):
            specs.append(TorusLinkSpec(m, n, 1, (a,)))
    for m, n, L in config.links:
        if L != 2:
            raise ValueError("only 2-component links in the default grids")
        for a, b in _link_color_vectors(config.max_color):
            specs.append(TorusLinkSpec(m, n, 2, (a, b)))
    return specs


# -- symmetry theorems ---------------------------------------------------


def _symmetry_cell(spec, q_target: str):
    def cell():
        w = colored_homfly(spec).value
        wt = colored_homfly(spec.conjugate_colors()).value
        if q_target == "q^-1":
            sign = -1 if sum(c.size for c in spec.all_colors()) % 2 else 1
        else:
            sign = -1 if sum(c.k_invariant() for c in spec.all_colors()) % 2 else 1
        lhs = w.substituted(q=q_target)
        rhs = wt * sign
        if lhs != rhs:
            return (str(spec), f"{q_target} image matches transposed colors", "mismatch")
        return None

    return cell


def verify_symmetry_q_inverse(config: GridConfig = None, threads=None) -> VerificationReport:
    """W(q^-1, t) = (-1)^(total boxes) * W with all colors transposed."""
    config = config or GridConfig()
    cells = [_symmetry_cell(s, "q^-1") for s in _symmetry_grid(config)]
    grid = f"knots={list(config.knots)} links={list(config.links)} |colors|<={config.max_color}"
    return _run_cells("thm72", grid, cells, threads)


def verify_symmetry_neg_q_inverse(config: GridConfig = None, threads=None) -> VerificationReport:
    """W(-q^-1, t) = (-1)^(sum of framing exponents) * W with colors transposed."""
    config = config or GridConfig()
    cells = [_symmetry_cell(s, "-q^-1") for s in _symmetry_grid(config)]
    grid = f"knots={list(config.knots)} links={list(config.links)} |colors|<={config.max_color}"
    return _run_cells("thm71", grid, cells, threads)


# -- special polynomial theorems -----------------------------------------


def _h_cell(m, n, a):
    def cell():
        spec = TorusLinkSpec(m, n, 1, (a,))
        lhs = special_H(spec).value
        base = special_H(TorusLinkSpec(m, n, 1, (Partition((1,)),))).value
        rhs = base ** a.size if a.size else LaurentQT.one()
        if lhs != rhs:
            return (str(spec), "H equals single-box H to the |A|", "mismatch")
        return None

    return cell


def _h_link_cell(m, n, colors):
    def cell():
        spec = TorusLinkSpec(m, n, 2, colors)
        lhs = special_H(spec).value
        # components of these links are unknots, so the product form is 1
        if lhs != LaurentQT.one():
            return (str(spec), "H = 1 for unknot components", str(lhs))
        return None

    return cell


def verify_special_H(config: GridConfig = None, threads=None) -> VerificationReport:
    """Multiplicativity of the q->1 special polynomial in the color size."""
    config = config or GridConfig()
    cells = []
    for m, n in config.knots:
        for a in _colors_up_to(config.max_color):
            cells.append(_h_cell(m, n, a))
    for m, n, L in config.links:
        cells.append(_h_link_cell(m, n, (Partition((1,)), Partition((1,)))))
    grid = f"knots={list(config.knots)} |A|<={config.max_color} plus single-box links"
    return _run_cells("thm62", grid, cells, threads)


def _delta_hook_cell(m, n, a):
    def cell():
        spec = TorusLinkSpec(m, n, 1, (a,))
        lhs = special_delta(spec).value
        rhs = alexander_torus(m, n, a.size)
        if lhs != rhs:
            return (str(spec), "t->1 limit equals Alexander at q^|A|", "mismatch")
        return None

    return cell


def _delta_counterexample_cell():
    def cell():
        spec = TorusLinkSpec(2, 3, 1, (Partition((2, 2)),))
        lhs = special_delta(spec).value
        rhs = alexander_torus(2, 3, 4)
        if lhs == rhs:
            return (str(spec), "non-hook color must break the q^|A| rule", "equality held")
        return None

    return cell


def verify_special_delta(config: GridConfig = None, threads=None) -> VerificationReport:
    """Hook colors reduce the t->1 limit to the Alexander polynomial at q^|A|.

    The grid also confirms the non-hook counterexample: (2,2) on the
    (2,3) torus knot must NOT satisfy the hook identity.
    """
    config = config or GridConfig()
    cells = []
    for m, n in config.knots:
        for a in _hooks_up_to(config.hook_max):
            cells.append(_delta_hook_cell(m, n, a))
    cells.append(_delta_counterexample_cell())
    grid = f"knots={list(config.knots)} hooks |A|<={config.hook_max} + counterexample"
    return _run_cells("thm64", grid, cells, threads)


def verify_special_theorems(config: GridConfig = None, threads=None):
    """Both special-polynomial sweeps, aggregated."""
    return (verify_special_H(config, threads), verify_special_delta(config, threads))


# -- combinatorial lemmas -------------------------------------------------


def verify_hook_character_identity(config: GridConfig = None, threads=None) -> VerificationReport:
    """Exhaustive hook character generating identity for all classes."""
    from .characters import hook_character_identity

    config = config or GridConfig()

    def make_cell(b):
        def cell():
            if not hook_character_identity(b):
                return (str(b), "hook alternating sum equals bracket product", "mismatch")
            return None

        return cell

    cells = [
        make_cell(b)
        for d in range(1, config.hook_identity_max + 1)
        for b in partitions_of(d)
    ]
    return _run_cells("lemma65", f"|B| <= {config.hook_identity_max}", cells, threads)


def verify_permutation_parity(n: int = DEFAULT_PARITY_MAX, threads=None) -> VerificationReport:
    """Inversion count plus cycle count has the parity of the degree."""
    if n > 8:
        raise ValueError("parity sweep capped at n = 8")

    def make_cell(d):
        def cell():
            for pi in all_permutations(d):
                if (perm_length(pi) + perm_cycle_type(pi).length - d) % 2:
                    return (str(pi), f"parity {d % 2}", "parity mismatch")
            return None

        return cell

    cells = [make_cell(d) for d in range(1, n + 1)]
    return _run_cells("lemma73", f"all permutations, degree <= {n}", cells, threads)


def verify_lowest_term(config: GridConfig = None, threads=None) -> VerificationReport:
    """Lowest coefficient of the 2-component expansion in powers of q - q^-1.

    For the (2, 2k) torus links the coefficient at (q - q^-1)^(-1),
    extracted as the q->1 limit of (q - q^-1) * P, must be
    t^(-2k) (t - t^-1) with both components unknots.  The exponent is
    -2k under the orientation convention that makes the quadratic skein
    relation, the single-box specialization, and this expansion mutually
    consistent: the closure of the positive 2-braid carries linking
    number -k there.
    """
    config = config or GridConfig()

    def make_cell(k):
        def cell():
            word = torus_braid_word(2, 2 * k)
            p = normalized_homfly_of_closure(word)
            bracket_scaled = p * RationalQT(q_bracket(1))
            lowest = limit_at_one(bracket_scaled, "q")
            expected = t_power(1 - 2 * k) - t_power(-1 - 2 * k)
            if lowest != expected:
                return (f"T(2,{2 * k})", str(expected), str(lowest))
            return None

        return cell

    cells = [make_cell(k) for k in config.lowest_term_twists]
    grid = f"T(2,2k) for k in {list(config.lowest_term_twists)}"
    return _run_cells("thm22", grid, cells, threads)


# -- registry -------------------------------------------------------------

THEOREMS = {
    "thm62": lambda config, threads: verify_special_H(config, threads),
    "thm64": lambda config, threads: verify_special_delta(config, threads),
    "thm71": lambda config, threads: verify_symmetry_neg_q_inverse(config, threads),
    "thm72": lambda config, threads: verify_symmetry_q_inverse(config, threads),
    "lemma65": lambda config, threads: verify_hook_character_identity(config, threads),
    "lemma73": lambda config, threads: verify_permutation_parity(
        (config or GridConfig()).parity_max, threads
    ),
    "thm22": lambda config, threads: verify_lowest_term(config, threads),
}


def run_theorem(name: str, config: GridConfig = None, threads=None) -> VerificationReport:
    if name not in THEOREMS:
        raise KeyError(f"unknown theorem {name!r}; choose from {sorted(THEOREMS)}")
    return THEOREMS[name](config, threads)
