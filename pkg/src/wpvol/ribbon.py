"""
Trivalent ribbon graphs as permutation triples, and Kontsevich's formula.

Darts are 0..2E-1.  Vertex rotations are fixed once and for all as
s0 = (0 1 2)(3 4 5)..., so a graph is just the edge involution s1, and faces
are the cycles of s2 = s1 s0^-1.  Connected graphs are generated in a
breadth-first normal form: the smallest unpaired dart among discovered vertices
is joined either to another discovered dart or to dart 3k of the next vertex k.
Each rooted graph arises exactly once, and isomorphism classes are separated by
taking the smallest normal form over all 2E roots.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from .arith import double_factorial
from .reports import FAIL, PASS, CheckReport

__all__ = [
    "BudgetExceeded",
    "RibbonGraph",
    "enumerate_trivalent",
    "orbit_size",
    "check_orbit_stabilizer",
    "kontsevich_rhs_eval",
    "kontsevich_lhs_eval",
    "kontsevich_check",
    "sample_grid",
    "census_rows",
    "census_csv",
    "MAX_EDGES",
    "MAX_POINTS",
]

MAX_EDGES = 12
MAX_POINTS = 20000


class BudgetExceeded(RuntimeError):
    pass


def _s0(d: int) -> int:
    return 3 * (d // 3) + (d + 1) % 3


def _s0_inv(d: int) -> int:
    return 3 * (d // 3) + (d + 2) % 3


def _cycles(perm: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class RibbonGraph:
    """Trivalent ribbon graph; face_of[d] is the label (1..n) of the face containing dart d."""
    s1: Tuple[int, ...]
    face_of: Tuple[int, ...]

    @property
    def num_darts(self) -> int:
        return len(self.s1)

    @property
    def E(self) -> int:
        return len(self.s1) // 2

    @property
    def V(self) -> int:
        return len(self.s1) // 3

    @property
    def s0(self) -> Tuple[int, ...]:
        return tuple(_s0(d) for d in range(self.num_darts))

    @property
    def s2(self) -> Tuple[int, ...]:
        return tuple(self.s1[_s0_inv(d)] for d in range(self.num_darts))

    @property
    def n(self) -> int:
        return len(_cycles(self.s2))

    @property
    def genus(self) -> int:
        chi = self.V - self.E + self.n
        return (2 - chi) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(d, self.s1[d]) for d in range(self.num_darts) if d < self.s1[d]]

    def edge_faces(self) -> List[Tuple[int, int]]:
        """(l(e), r(e)) for each edge: the face labels on its two sides."""
        return [(self.face_of[a], self.face_of[b]) for a, b in self.edges()]

    def validate(self) -> None:
        X = range(self.num_darts)
        if self.num_darts % 6:
            raise ValueError("trivalent graph needs 2E = 3V darts")
        if any(self.s1[d] == d or self.s1[self.s1[d]] != d for d in X):
            raise ValueError("s1 is not a fixed-point-free involution")
        if _reachable(self.s1) != self.num_darts:
            raise ValueError("graph is not connected")
        chi = self.V - self.E + self.n
        if chi % 2:
            raise ValueError("odd Euler characteristic")
        s2 = self.s2
        for cyc in _cycles(s2):
            if len({self.face_of[d] for d in cyc}) != 1:
                raise ValueError("face label not constant on a face")
        if sorted({self.face_of[d] for d in X}) != list(range(1, self.n + 1)):
            raise ValueError("face labels are not a bijection onto 1..n")


def _reachable(s1: Sequence[int]) -> int:
    """Number of darts reachable from dart 0 under s0 and s1."""
    seen = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        for t in (_s0(d), s1[d]):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return len(seen)


def _normal_form(s1: Sequence[int], root: int,
                 face_of: Optional[Sequence[int]]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Breadth-first relabelling from `root`; returns (s1, face labels) in the new labels."""
    N = len(s1)
    new = {}
    old = []

    def discover(d):
        for j in range(3):
            new[d] = len(old)
            old.append(d)
            d = _s0(d)

    discover(root)
    out = [-1] * N
    i = 0
    while i < len(old):
        if out[i] < 0:
            partner = s1[old[i]]
            if partner not in new:
                discover(partner)
            out[i] = new[partner]
            out[new[partner]] = i
        i += 1
    faces = tuple(face_of[d] for d in old) if face_of is not None else ()
    return tuple(out), faces


def _canonical(s1: Sequence[int], face_of: Optional[Sequence[int]]) -> Tuple[Tuple, int]:
    """Smallest normal form over all roots, and how many roots attain it (= |Aut|)."""
    best = None
    count = 0
    for r in range(len(s1)):
        nf = _normal_form(s1, r, face_of)
        if best is None or nf < best:
            best, count = nf, 1
        elif nf == best:
            count += 1
    return best, count


def _generate_connected(V: int) -> Iterator[Tuple[int, ...]]:
    """Every connected trivalent s1 on 3V darts in breadth-first normal form."""
    N = 3 * V
    s1 = [-1] * N

    def rec(discovered):
        d = next((x for x in range(3 * discovered) if s1[x] < 0), None)
        if d is None:
            if discovered == V:
                yield tuple(s1)
            return
        for t in range(d + 1, 3 * discovered):
            if s1[t] < 0:
                s1[d], s1[t] = t, d
                yield from rec(discovered)
                s1[d] = s1[t] = -1
        if discovered < V:
            t = 3 * discovered
            s1[d], s1[t] = t, d
            yield from rec(discovered + 1)
            s1[d] = s1[t] = -1

    if V == 0:
        return
    yield from rec(1)


def _face_index(s1: Sequence[int]) -> Tuple[List[List[int]], List[int]]:
    s2 = [s1[_s0_inv(d)] for d in range(len(s1))]
    faces = _cycles(s2)
    idx = [0] * len(s1)
    for k, cyc in enumerate(faces):
        for d in cyc:
            idx[d] = k
    return faces, idx


def enumerate_trivalent(g: int, n: int, max_edges: int = MAX_EDGES) -> List[Tuple[RibbonGraph, int]]:
    """Isomorphism classes of face-labelled trivalent ribbon graphs of type (g, n) with |Aut|."""
    if g < 0 or n < 1 or 2 - 2 * g - n >= 0:
        raise ValueError(f"need 2 - 2g - n < 0 and n >= 1, got ({g}, {n})")
    E = 6 * g - 6 + 3 * n
    V = 4 * g - 4 + 2 * n
    if E > max_edges:
        raise BudgetExceeded(f"(g, n) = ({g}, {n}) needs {E} edges; budget is {max_edges}")
    unlabeled = set()
    for s1 in _generate_connected(V):
        faces, _ = _face_index(s1)
        if len(faces) == n:
            unlabeled.add(_canonical(s1, None)[0][0])
    classes: Dict[Tuple, Tuple[RibbonGraph, int]] = {}
    for s1 in sorted(unlabeled):
        faces, idx = _face_index(s1)
        for perm in permutations(range(1, n + 1)):
            face_of = tuple(perm[idx[d]] for d in range(len(s1)))
            key, aut = _canonical(s1, face_of)
            if key not in classes:
                classes[key] = (RibbonGraph(key[0], key[1]), aut)
    return [classes[k] for k in sorted(classes)]


# --- orbit-stabilizer ---------------------------------------------------------

def orbit_size(graph: RibbonGraph) -> int:
    """Number of distinct labelled (s1, faces) obtained by relabellings that commute with s0."""
    V = graph.V
    seen = set()
    for order in permutations(range(V)):
        for rot in product(range(3), repeat=V):
            # vertex v goes to vertex order[v], rotated by rot[v]
            phi = [3 * order[d // 3] + (d % 3 + rot[d // 3]) % 3 for d in range(3 * V)]
            s1 = [0] * (3 * V)
            faces = [0] * (3 * V)
            for d in range(3 * V):
                s1[phi[d]] = phi[graph.s1[d]]
                faces[phi[d]] = graph.face_of[d]
            seen.add((tuple(s1), tuple(faces)))
    return len(seen)


def check_orbit_stabilizer(g: int, n: int, max_vertices: int = 4) -> CheckReport:
    """|orbit| * |Aut| = 3^V V! for every class (the centraliser of s0 has that order)."""
    V = 4 * g - 4 + 2 * n
    if V > max_vertices:
        raise BudgetExceeded(f"orbit enumeration over 3^{V} {V}! relabellings exceeds the budget")
    group = 3 ** V * math.factorial(V)
    bad = []
    classes = enumerate_trivalent(g, n)
    for graph, aut in classes:
        if orbit_size(graph) * aut != group:
            bad.append(graph)
    ok = not bad
    return CheckReport(f"orbit-stabilizer ({g},{n})", PASS if ok else FAIL,
                       f"{len(classes)} classes" if ok else f"{len(bad)} classes violate", {"g": g, "n": n})


# --- Kontsevich's formula ---------------------------------------------------

def _as_point(s: Sequence) -> List[Fraction]:
    pts = [Fraction(v) for v in s]
    if any(v <= 0 for v in pts):
        raise ZeroDivisionError("sample point needs every s_k > 0")
    return pts


def kontsevich_rhs_eval(g: int, n: int, s: Sequence,
                        classes: Optional[List[Tuple[RibbonGraph, int]]] = None) -> Fraction:
    """sum over graphs of 2^(2g-2+n)/|Aut| prod_e 1/(s_l(e) + s_r(e))."""
    s = _as_point(s)
    if len(s) != n:
        raise ValueError(f"expected {n} values, got {len(s)}")
    if classes is None:
        classes = enumerate_trivalent(g, n)
    total = Fraction(0)
    for graph, aut in classes:
        den = math.prod(s[a - 1] + s[b - 1] for a, b in graph.edge_faces())
        total += Fraction(1, aut) / den
    return total * 2 ** (2 * g - 2 + n)


def kontsevich_lhs_eval(g: int, n: int, s: Sequence, correlator_fn) -> Fraction:
    """sum over |alpha| = 3g-3+n of <tau_alpha> prod (2 alpha_k - 1)!! / s_k^(2 alpha_k + 1)."""
    s = _as_point(s)
    D = 3 * g - 3 + n
    total = Fraction(0)
    for alpha in product(range(D + 1), repeat=n):
        if sum(alpha) != D:
            continue
        c = correlator_fn(alpha)
        if c:
            total += c * math.prod(Fraction(double_factorial(2 * a - 1)) / s[k] ** (2 * a + 1)
                                   for k, a in enumerate(alpha))
    return total


def sample_grid(g: int, n: int, classes: List[Tuple[RibbonGraph, int]]) -> List[Tuple[Fraction, ...]]:
    """Grid with s_n = 1 and distinct primes elsewhere, large enough to force equality.

    After multiplying by prod_k s_k^(6g-5+2n) prod_{i<=j} (s_i+s_j)^c_ij, where c_ij
    is the largest number of edges between faces i and j in any graph, the
    difference of the two sides is a polynomial whose degree in s_k is at most
    that denominator's degree in s_k.  A polynomial vanishing on a product grid
    with more points per variable than its degree is zero, and homogeneity lets
    us set s_n = 1.
    """
    c: Dict[Tuple[int, int], int] = {}
    for graph, _ in classes:
        counts: Dict[Tuple[int, int], int] = {}
        for a, b in graph.edge_faces():
            key = (min(a, b), max(a, b))
            counts[key] = counts.get(key, 0) + 1
        for key, v in counts.items():
            c[key] = max(c.get(key, 0), v)
    base = 6 * g - 5 + 2 * n
    axes = []
    used = 0
    for k in range(1, n):
        deg = base + sum(v for (a, b), v in c.items() if k in (a, b))
        primes = [sympy.prime(used + j + 1) for j in range(deg + 1)]
        used += deg + 1
        axes.append([Fraction(q) for q in primes])
    return [pt + (Fraction(1),) for pt in product(*axes)]


def kontsevich_check(g: int, n: int, correlator_fn, max_edges: int = MAX_EDGES,
                     max_points: int = MAX_POINTS) -> CheckReport:
    """Equality of the two sides as rational functions, by exact sampling."""
    params = {"g": g, "n": n}
    name = f"Kontsevich ({g},{n})"
    classes = enumerate_trivalent(g, n, max_edges)
    points = sample_grid(g, n, classes)
    if len(points) > max_points:
        raise BudgetExceeded(f"({g},{n}) needs {len(points)} sample points; budget is {max_points}")
    for pt in points:
        lhs = kontsevich_lhs_eval(g, n, pt, correlator_fn)
        rhs = kontsevich_rhs_eval(g, n, pt, classes)
        if lhs != rhs:
            return CheckReport(name, FAIL, f"at s = {[str(v) for v in pt]}: {lhs} != {rhs}", params)
    params["points"] = len(points)
    params["classes"] = len(classes)
    return CheckReport(name, PASS, f"{len(points)} points, {len(classes)} graphs", params)


def census_rows(g: int, n: int, max_edges: int = MAX_EDGES) -> List[Dict[str, int]]:
    rows = []
    for graph, aut in enumerate_trivalent(g, n, max_edges):
        rows.append({"E": graph.E, "V": graph.V, "n": graph.n, "g": graph.genus, "aut": aut})
    return rows


def census_csv(g: int, n: int, max_edges: int = MAX_EDGES) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["E", "V", "n", "g", "aut"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(census_rows(g, n, max_edges))
    return buf.getvalue()
