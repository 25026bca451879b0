"""Verification suites run by ``krcrystal verify``.

Every suite returns a :class:`SuiteResult`. Failures are collected as short
text entries, never raised, so one run reports everything that went wrong.
"""

__all__ = [
    "SUITES",
    "SuiteResult",
    "has_graph_model",
    "check_axioms",
    "check_sigma",
    "check_lemma52",
    "check_rigidity",
    "check_norms",
    "run_suites",
]

import logging
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

from .cartan import A2ODD, B1, D1, AffineType, affine_cartan_matrix, pairing
from .exceptions import (
    DiagramError,
    DiagramLookupError,
    LevelError,
    NodeIndexError,
    PairMoveError,
)
from .executor import SweepExecutor, run_sweep
from .iso_check import check_prop61
from .kn_tableaux import DEFAULT_MAX_VERTICES
from .kr_crystal import (
    KRCrystalGraph,
    affine_weight,
    apply_affine,
    apply_affine_f,
    build,
    inner_shape,
    sigma,
    sigma_twisted_decomposition,
)
from .norms import NormCheck, check_criterion, norm_domain, recursion_check
from .pm_diagram import PairIndex, e1_on_pair, supports_pair_model
from .utils import check_positive_int

logger = logging.getLogger(__name__)

SUITES = ("axioms", "sigma", "lemma52", "prop61", "norms")

# failure entries kept per suite
_MAX_FAILURES = 25


class SuiteResult(NamedTuple):
    name: str
    passed: bool
    failures: Tuple[str, ...]
    skipped: bool = False


class _Failures:
    __slots__ = ["_entries", "_total"]

    def __init__(self) -> None:
        self._entries: List[str] = []
        self._total = 0

    def add(self, entry: str) -> None:
        self._total += 1
        if len(self._entries) < _MAX_FAILURES:
            self._entries.append(entry)

    def result(self, name: str) -> SuiteResult:
        entries = list(self._entries)
        if self._total > len(entries):
            entries.append(f"... {self._total - len(entries)} more")
        if self._total:
            logger.warning("suite %s: %d failures", name, self._total)
        return SuiteResult(name, not self._total, tuple(entries))


def has_graph_model(t: AffineType, r: int) -> bool:
    """Return True if B^{r,s} of type t can be built as a graph."""
    bound = {D1: t.rank - 2, B1: t.rank - 1, A2ODD: t.rank}.get(t.family, 0)
    return 1 <= r <= bound


def _check_stembridge(g: KRCrystalGraph, i: int, j: int, vid: int, a_ij: int, out: _Failures) -> None:
    up = g.e(i, vid)
    if up is None:
        return
    d_eps = g.epsilon(j, up) - g.epsilon(j, vid)
    d_phi = g.phi(j, up) - g.phi(j, vid)
    if d_phi - d_eps != a_ij:
        out.add(f"vertex {vid}: e_{i} moves phi_{j} - eps_{j} by {d_phi - d_eps}, not {a_ij}")
    if a_ij == 0:
        if d_eps or d_phi:
            out.add(f"vertex {vid}: e_{i} changes the {j}-string length")
    elif d_eps < 0 or d_phi > 0:
        out.add(f"vertex {vid}: e_{i} violates the {j}-string monotonicity")
    side = g.e(j, vid)
    if side is None:
        return
    if d_eps == 0:
        left = g.e(i, g.e(j, vid))
        right = g.e(j, up)
        if left is None or left != right:
            out.add(f"vertex {vid}: e_{i} and e_{j} do not commute")
    elif a_ij == -1 and d_eps == 1 and g.epsilon(i, side) - g.epsilon(i, vid) == 1:
        left = _chain(g, [i, j, j, i], vid)
        right = _chain(g, [j, i, i, j], vid)
        if left is None or left != right:
            out.add(f"vertex {vid}: braid relation fails for colors {i}, {j}")


def _chain(g: KRCrystalGraph, colors: List[int], vid: int) -> Optional[int]:
    # rightmost color acts first
    current: Optional[int] = vid
    for color in reversed(colors):
        if current is None:
            return None
        current = g.e(color, current)
    return current


def check_axioms(g: KRCrystalGraph) -> SuiteResult:
    """Check the crystal axioms of a built graph.

    * e_i and f_i are mutually inverse partial bijections for every i in I,
      the stored i-arrows for i in I_0 match the tableau rule on the words,
      and e_0, f_0 agree with sigma e_1 sigma and sigma f_1 sigma;
    * phi_i - eps_i = <h_i, wt> for i in I_0;
    * every affine weight has level zero;
    * the graph is connected under I;
    * local rank 2 conditions for every pair of simply laced or orthogonal colors.
    """
    t = g.affine_type
    out = _Failures()
    matrix = affine_cartan_matrix(t)
    pairs = [
        (i, j, matrix[i][j])
        for i in t.index_set
        for j in t.index_set
        if i != j and matrix[i][j] == matrix[j][i] and matrix[i][j] in (0, -1)
    ]
    for vid in range(len(g)):
        for i in t.index_set:
            down = g.f(i, vid)
            if down is not None and g.e(i, down) != vid:
                out.add(f"vertex {vid}: e_{i} f_{i} is not the identity")
        word = g.word(vid)
        for i in t.classical_index_set:
            for name, stored, rule in (("f", g.f, g.crystal.apply_f), ("e", g.e, g.crystal.apply_e)):
                target = stored(i, vid)
                if (None if target is None else g.word(target)) != rule(i, word):
                    out.add(f"vertex {vid}: stored {name}_{i} arrow differs from the tableau rule")
        if apply_affine(g, 0, vid) != g.e(0, vid) or apply_affine_f(g, 0, vid) != g.f(0, vid):
            out.add(f"vertex {vid}: 0-arrows disagree with sigma")
        for i in t.classical_index_set:
            if g.phi(i, vid) - g.epsilon(i, vid) != pairing(t, i, g.weight(vid)):
                out.add(f"vertex {vid}: phi_{i} - eps_{i} differs from the weight")
        try:
            affine_weight(g, vid)
        except LevelError as err:
            out.add(err.message)
        for i, j, a_ij in pairs:
            _check_stembridge(g, i, j, vid, a_ij, out)
    if not g.is_connected(t.index_set):
        out.add("graph is not connected under all colors")
    return out.result("axioms")


def check_sigma(g: KRCrystalGraph) -> SuiteResult:
    """Check that sigma is an involution commuting with colors 2..n.

    Also checks that the {0,2,..,n} decomposition is the 0 <-> 1 twist of the
    {1,..,n} decomposition and that sigma keeps inner shapes.
    """
    t = g.affine_type
    out = _Failures()
    for vid in range(len(g)):
        image = sigma(g, vid)
        if sigma(g, image) != vid:
            out.add(f"vertex {vid}: sigma is not an involution")
        for i in range(2, t.rank + 1):
            for step in (g.f, g.e):
                moved = step(i, vid)
                target = step(i, image)
                if (moved is None) != (target is None) or (
                    moved is not None and sigma(g, moved) != target
                ):
                    out.add(f"vertex {vid}: sigma does not commute with color {i}")
        if inner_shape(g, image) != inner_shape(g, vid):
            out.add(f"vertex {vid}: sigma changes the inner shape")
    zero_side, one_side = sigma_twisted_decomposition(g)
    if zero_side != one_side:
        out.add(f"twisted decomposition differs: {zero_side} vs {one_side}")
    return out.result("sigma")


def check_lemma52(g: KRCrystalGraph) -> SuiteResult:
    """Check the pair model on the X_{n-2} highest weight vertices.

    For every such vertex b with pair (P, p):

    * the pair move agrees with e_1 on the graph;
    * if p has no signs and eps_0(b), eps_1(b) > 0, the inner shape of b is
      strictly contained in those of e_0 b, e_1 b and e_0 e_1 b.

    Skipped when the pair model is undefined for (t, r).
    """
    t = g.affine_type
    if not supports_pair_model(t, g.r):
        logger.warning("lemma52 skipped: no pair model for %s r=%d", t, g.r)
        return SuiteResult("lemma52", True, ("no pair model for this node",), skipped=True)
    out = _Failures()
    index = PairIndex(t, g.r, g.s, g.crystal)
    tops = g.highest_weight_vertices(range(3, t.rank + 1))
    if len(tops) != len(index):
        out.add(f"{len(tops)} X_(n-2) highest weights but {len(index)} pairs")
    for vid in tops:
        raised = g.e(1, vid)
        try:
            pair = index.lookup(g.word(vid))
            moved = e1_on_pair(pair)
            expected = None if raised is None else index.lookup(g.word(raised))
        except (DiagramError, DiagramLookupError, PairMoveError) as err:
            out.add(err.message)
            continue
        if moved != expected:
            out.add(f"vertex {vid}: pair move differs from e_1")
        small = pair.small
        if small.inner != small.outer or not g.epsilon(0, vid) or not g.epsilon(1, vid):
            continue
        base = inner_shape(g, vid)
        up0 = g.e(0, vid)
        up1 = g.e(1, vid)
        both = g.e(0, up1)
        for label, other in (("e_0", up0), ("e_1", up1), ("e_0 e_1", both)):
            if other is None:
                out.add(f"vertex {vid}: {label} vanishes")
                continue
            shape = inner_shape(g, other)
            if shape == base or not shape.contains(base):
                out.add(f"vertex {vid}: inner shape does not grow under {label}")
    return out.result("lemma52")


def check_rigidity(g: KRCrystalGraph, reference: KRCrystalGraph = None) -> SuiteResult:
    report = check_prop61(g, reference)
    if report.passed:
        return SuiteResult("prop61", True, ())
    witness = "" if report.witness is None else f" (vertex {report.witness})"
    logger.warning("prop61 failed for %r: %s", g, report.reason)
    return SuiteResult("prop61", False, (report.reason + witness,))


def _norm_checks(task: Tuple[AffineType, int, int]) -> List[NormCheck]:
    t, r, s = task
    return check_criterion(t, r, s).checks + recursion_check(t, r, s).checks


def check_norms(
    tasks: Iterable[Tuple[AffineType, int, int]], executor: SweepExecutor = None
) -> Tuple[SuiteResult, List[NormCheck]]:
    """Run the norm criterion and recursion checks over (t, r, s) triples.

    :return: Suite result and every check entry in task order.
    :rtype: (krcrystal.verify.SuiteResult, [krcrystal.norms.NormCheck])
    """
    chunks = run_sweep(list(tasks), _norm_checks, executor)
    checks = [check for chunk in chunks for check in chunk]
    out = _Failures()
    for check in checks:
        if not check.passed:
            out.add(f"{check.family} r={check.r} s={check.s} c={check.c} j={check.j}: "
                    f"{check.check} = {check.value}")
    return out.result("norms"), checks


_GRAPH_SUITES: Dict[str, Callable[[KRCrystalGraph], SuiteResult]] = {
    "axioms": check_axioms,
    "sigma": check_sigma,
    "lemma52": check_lemma52,
    "prop61": check_rigidity,
}


def run_suites(
    t: AffineType,
    r: int,
    s: int,
    suites: Iterable[str] = SUITES,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    executor: SweepExecutor = None,
) -> Tuple[List[SuiteResult], List[NormCheck]]:
    """Run the named suites on B^{r,s} of type t.

    Graph suites are skipped for types without a graph model; the norm suite
    is skipped outside the nodes with closed forms.

    :raise krcrystal.exceptions.CrystalUsageError: On invalid (t, r, s) or when
        the build exceeds max_vertices.
    """
    check_positive_int(s, "s")
    if not 1 <= r <= t.rank:
        raise NodeIndexError(f"node {r} outside 1..{t.rank}")
    chosen = [name for name in SUITES if name in set(suites)]
    results: List[SuiteResult] = []
    checks: List[NormCheck] = []
    graph: Optional[KRCrystalGraph] = None
    for name in chosen:
        if name == "norms":
            if r not in norm_domain(t):
                results.append(SuiteResult(name, True, ("no closed form for this node",), True))
                continue
            result, checks = check_norms([(t, r, s)], executor)
            results.append(result)
            continue
        if not has_graph_model(t, r):
            results.append(SuiteResult(name, True, ("no graph model for this type",), True))
            continue
        if graph is None:
            graph = build(t, r, s, max_vertices=max_vertices)
        results.append(_GRAPH_SUITES[name](graph))
    return results, checks
