"""
Reflections in Farey edges acting on the boundary Q ∪ {∞}, reduction of a slope
to its canonical representative modulo the group generated by Γ_r and Γ_∞, and
the null-homotopy decision built on it.

Γ_∞ is generated by the reflections in the edges (∞, n); its fundamental
interval on the boundary is [0, 1].  Γ_r is generated by the reflections in
the edges with endpoint r.  Every slope is equivalent to exactly one element
of I1 ∪ I2 ∪ {∞, r}, where I1 = [0, r1] and I2 = [r2, 1].
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Set, Tuple

import numpy as np

from .errors import DomainError, ReductionError
from .rational import ExtendedRational, cf_expand, interval_endpoints, is_farey_neighbor


@dataclass(frozen=True)
class ReflectionMatrix:
    """
    An integer matrix [[alpha, beta], [gamma, delta]] of determinant -1 and
    trace 0, acting by x -> (alpha x + beta) / (gamma x + delta).
    """

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        if self.alpha * self.delta - self.beta * self.gamma != -1:
            raise DomainError(f"Reflection matrix {self.to_list()} must have determinant -1")
        if self.alpha + self.delta != 0:
            raise DomainError(f"Reflection matrix {self.to_list()} must have trace 0")

    def apply(self, s: ExtendedRational) -> ExtendedRational:
        return apply_mobius(self, s)

    def to_list(self) -> List[List[int]]:
        return [[self.alpha, self.beta], [self.gamma, self.delta]]

    def __str__(self) -> str:
        return str(self.to_list())


def apply_mobius(matrix: ReflectionMatrix, s: ExtendedRational) -> ExtendedRational:
    numerator, denominator = s.numerator, s.denominator
    return ExtendedRational(
        matrix.alpha * numerator + matrix.beta * denominator,
        matrix.gamma * numerator + matrix.delta * denominator,
    )


def reflection_in_edge(v1: ExtendedRational, v2: ExtendedRational) -> ReflectionMatrix:
    """
    The reflection in the Farey edge joining v1 = q/p and v2 = c/d.

    Raises:
        DomainError: If v1 and v2 are not Farey neighbours.
    """
    if not is_farey_neighbor(v1, v2):
        raise DomainError(f"{v1} and {v2} are not Farey neighbours")
    q, p = v1.numerator, v1.denominator
    c, d = v2.numerator, v2.denominator
    return ReflectionMatrix(q * d + p * c, -2 * q * c, 2 * p * d, -(q * d + p * c))


INFINITY = ExtendedRational.infinity()
# x -> -x and x -> 2 - x, the reflections in (∞, 0) and (∞, 1).
NEGATE = reflection_in_edge(INFINITY, ExtendedRational(0))
TWO_MINUS = reflection_in_edge(INFINITY, ExtendedRational(1))


def normalize_mod_gamma_inf(s: ExtendedRational) -> Tuple[ExtendedRational, List[ReflectionMatrix]]:
    """
    Moves s into [0, 1] ∪ {∞} with reflections in edges (∞, n).

    Returns:
        Tuple[ExtendedRational, List[ReflectionMatrix]]: The normalized slope and
        the reflections applied, in order.
    """
    trail: List[ReflectionMatrix] = []
    if s.is_infinite:
        return s, trail
    if s < 0:
        s = NEGATE.apply(s)
        trail.append(NEGATE)
    if s > 1:
        # s lies in (2n - 2, 2n]
        n = -((-s.numerator) // (2 * s.denominator))
        if s >= 2 * n - 1:
            edge = reflection_in_edge(INFINITY, ExtendedRational(n))
            s = edge.apply(s)
            trail.append(edge)
        else:
            edge = reflection_in_edge(INFINITY, ExtendedRational(n - 1))
            s = NEGATE.apply(edge.apply(s))
            trail.extend([edge, NEGATE])
    return s, trail


@dataclass(frozen=True)
class OrbitResult:
    r: ExtendedRational
    s: ExtendedRational
    canonical: ExtendedRational
    trail: Tuple[ReflectionMatrix, ...] = field(default_factory=tuple)

    @property
    def null_homotopic(self) -> bool:
        return self.canonical.is_infinite or self.canonical == self.r

    def replay(self) -> ExtendedRational:
        """Applies the trail to s; always equals canonical."""
        current = self.s
        for matrix in self.trail:
            current = matrix.apply(current)
        return current


def _require_open_unit(r: ExtendedRational) -> None:
    if r.is_infinite or not (0 < r < 1):
        raise DomainError(f"Orbit reduction is defined for 0 < r < 1, got {r}")


def is_canonical(r: ExtendedRational, s: ExtendedRational) -> bool:
    """True iff s ∈ I1 ∪ I2 ∪ {∞, r}."""
    _require_open_unit(r)
    if s.is_infinite or s == r:
        return True
    r1, r2 = interval_endpoints(cf_expand(r))
    return 0 <= s <= r1 or r2 <= s <= 1


def default_fuel(s: ExtendedRational) -> int:
    """Iteration cap for the reduction loop; each round strictly lowers the denominator."""
    return 10 * max(1, s.denominator.bit_length()) + s.denominator


def reduce_to_fundamental(r: ExtendedRational, s: ExtendedRational, fuel: Optional[int] = None) -> OrbitResult:
    """
    Reduces s to the unique element of I1 ∪ I2 ∪ {∞, r} in its orbit.

    Each round normalizes into [0, 1] ∪ {∞}, stops if the slope is canonical and
    otherwise reflects in the edge (r, r1) when s < r or in (r, r2) when s > r.

    Raises:
        DomainError: If r is not in (0, 1).
        ReductionError: If the loop runs out of fuel.
    """
    _require_open_unit(r)
    r1, r2 = interval_endpoints(cf_expand(r))
    lower_edge = reflection_in_edge(r, r1)
    upper_edge = reflection_in_edge(r, r2)
    rounds = default_fuel(s) if fuel is None else fuel
    trail: List[ReflectionMatrix] = []
    current = s
    for _ in range(rounds):
        current, steps = normalize_mod_gamma_inf(current)
        trail.extend(steps)
        if current.is_infinite or current == r or current <= r1 or current >= r2:
            logging.debug(f"Reduced {s} to {current} for r = {r} in {len(trail)} reflections")
            return OrbitResult(r=r, s=s, canonical=current, trail=tuple(trail))
        edge = lower_edge if current < r else upper_edge
        current = edge.apply(current)
        trail.append(edge)
    raise ReductionError(f"Reduction of {s} for r = {r} did not finish within {rounds} rounds")


@lru_cache(maxsize=256)
def farey_neighbors(r: ExtendedRational, cap: int) -> Tuple[ExtendedRational, ...]:
    """
    Every Farey neighbour c/d of r = q/p with 0 < d <= cap, sorted.

    The solutions of qd - pc = ±1 are (c0 + kq)/(d0 + kp) for a particular
    solution (c0, d0), with both signs.
    """
    _require_open_unit(r)
    q, p = r.numerator, r.denominator
    d0 = pow(q, -1, p)
    c0 = (q * d0 - 1) // p
    neighbors: Set[ExtendedRational] = set()
    for c_base, d_base in ((c0, d0), (-c0, -d0)):
        k = -(d_base // p)
        while d_base + k * p <= cap:
            d = d_base + k * p
            if d > 0:
                neighbors.add(ExtendedRational(c_base + k * q, d))
            k += 1
    return tuple(sorted(neighbors))


@lru_cache(maxsize=256)
def _edge_generators(r: ExtendedRational, cap: int) -> Tuple[ReflectionMatrix, ...]:
    return tuple(reflection_in_edge(r, v) for v in farey_neighbors(r, cap))


def _normalized_pair(numerator: int, denominator: int) -> Tuple[int, int]:
    """(m, d) with m/d the representative of numerator/denominator in [0, 1] ∪ {∞}."""
    if denominator == 0:
        return 1, 0
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    m = numerator % (2 * denominator)
    if m > denominator:
        m = 2 * denominator - m
    return m, denominator


def _check_cap(r: ExtendedRational, s: ExtendedRational, cap: int) -> None:
    if cap < r.denominator or cap < s.denominator:
        raise DomainError(f"Denominator cap {cap} is below the denominators of {r} and {s}")


def orbit_closure(r: ExtendedRational, s: ExtendedRational, cap: int) -> Set[ExtendedRational]:
    """
    The orbit of s, as slopes in [0, 1] ∪ {∞} of denominator at most cap.

    Breadth-first search over the reflections in edges (r, v) with v a Farey
    neighbour of denominator at most cap; the reflections x -> -x and
    x -> 2 - x act through normalizing every image into [0, 1] ∪ {∞}.  Images
    beyond the cap are pruned, so the result is a subset of the true orbit.
    The search runs on (numerator, denominator) pairs; a determinant -1 matrix
    keeps them coprime.
    """
    _require_open_unit(r)
    _check_cap(r, s, cap)
    generators = [(g.alpha, g.beta, g.gamma, g.delta) for g in _edge_generators(r, cap)]
    start = _normalized_pair(s.numerator, s.denominator)
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for alpha, beta, gamma, delta in generators:
            denominator = gamma * x + delta * y
            if abs(denominator) > cap:
                continue
            image = _normalized_pair(alpha * x + beta * y, denominator)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    logging.debug(f"Orbit of {s} for r = {r} under cap {cap} has {len(seen)} elements")
    return {ExtendedRational(m, d) for m, d in seen}


def canonical_members(r: ExtendedRational, orbit: Iterable[ExtendedRational]) -> List[ExtendedRational]:
    return sorted((x for x in orbit if is_canonical(r, x)), key=lambda x: (x.is_infinite, x))


def orbit_bfs_oracle(r: ExtendedRational, s: ExtendedRational, cap: int) -> Optional[ExtendedRational]:
    """
    Canonical representative of s found by pruned orbit search, or None when
    the search finds none.

    Raises:
        ReductionError: If the pruned orbit holds two canonical slopes.
    """
    members = canonical_members(r, orbit_closure(r, s, cap))
    if len(members) > 1:
        raise ReductionError(f"Orbit of {s} for r = {r} holds several canonical slopes: {[str(x) for x in members]}")
    return members[0] if members else None


def _connected_labels(size: int, sources: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Smallest node index of the component of every node, by min-label propagation with pointer jumping."""
    labels = np.arange(size, dtype=np.int64)
    while True:
        previous = labels.copy()
        low = np.minimum(labels[sources], labels[targets])
        np.minimum.at(labels, sources, low)
        np.minimum.at(labels, targets, low)
        while True:
            jumped = labels[labels]
            if np.array_equal(jumped, labels):
                break
            labels = jumped
        if np.array_equal(labels, previous):
            return labels


class OrbitPartition:
    """
    Every slope of [0, 1] ∪ {∞} with denominator at most cap, split into pruned orbits.

    Two slopes share a part when one is the normalized image of the other
    under a reflection in an edge (r, v), v a Farey neighbour of denominator at
    most cap, with images beyond the cap dropped.  Each part lies inside one
    orbit and contains the breadth-first closure of any of its members.  All
    generators act on all slopes at once as numpy integer arrays.
    """

    def __init__(self, r: ExtendedRational, cap: int):
        _require_open_unit(r)
        if cap < r.denominator:
            raise DomainError(f"Denominator cap {cap} is below the denominator of {r}")
        self.r = r
        self.cap = cap
        numerators, denominators = np.meshgrid(np.arange(cap + 1), np.arange(1, cap + 1))
        reduced = (numerators <= denominators) & (np.gcd(numerators, denominators) == 1)
        # ∞ is the last node, stored as 1/0.
        self._numerators = np.append(numerators[reduced], 1).astype(np.int64)
        self._denominators = np.append(denominators[reduced], 0).astype(np.int64)
        size = len(self._numerators)
        self._index = np.full((cap + 1, cap + 1), -1, dtype=np.int64)
        self._index[self._denominators, self._numerators] = np.arange(size)

        nodes = np.arange(size)
        sources, targets = [], []
        for g in _edge_generators(r, cap):
            image_denominators = g.gamma * self._numerators + g.delta * self._denominators
            kept = np.abs(image_denominators) <= cap
            image_numerators = (g.alpha * self._numerators + g.beta * self._denominators)[kept]
            image_denominators = image_denominators[kept]
            sign = np.where(image_denominators < 0, -1, 1)
            image_numerators = image_numerators * sign
            image_denominators = image_denominators * sign
            finite = image_denominators > 0
            period = 2 * np.where(finite, image_denominators, 1)
            m = np.mod(image_numerators, period)
            m = np.where(m > period // 2, period - m, m)
            m = np.where(finite, m, 1)
            sources.append(nodes[kept])
            targets.append(self._index[image_denominators, m])
        if sources:
            self._labels = _connected_labels(size, np.concatenate(sources), np.concatenate(targets))
        else:
            self._labels = nodes

        self._canonical: Dict[int, List[ExtendedRational]] = {}
        for node in np.flatnonzero(self._canonical_mask()):
            slope = ExtendedRational(int(self._numerators[node]), int(self._denominators[node]))
            self._canonical.setdefault(int(self._labels[node]), []).append(slope)
        logging.debug(f"Orbit partition for r = {r} under cap {cap}: {size} slopes in {len(np.unique(self._labels))} parts")

    def _canonical_mask(self) -> np.ndarray:
        r1, r2 = interval_endpoints(cf_expand(self.r))
        m, d = self._numerators, self._denominators
        finite = d > 0
        in_first = m * r1.denominator <= r1.numerator * d
        in_second = m * r2.denominator >= r2.numerator * d
        at_r = (m == self.r.numerator) & (d == self.r.denominator)
        return ~finite | at_r | (finite & (in_first | in_second))

    def __len__(self) -> int:
        return len(self._labels)

    def _label(self, s: ExtendedRational) -> int:
        if s.denominator > self.cap:
            raise DomainError(f"Denominator cap {self.cap} is below the denominator of {s}")
        m, d = _normalized_pair(s.numerator, s.denominator)
        return int(self._labels[self._index[d, m]])

    def part(self, s: ExtendedRational) -> Set[ExtendedRational]:
        """The slopes sharing a part with s."""
        nodes = np.flatnonzero(self._labels == self._label(s))
        return {ExtendedRational(int(self._numerators[i]), int(self._denominators[i])) for i in nodes}

    def canonical_members(self, s: ExtendedRational) -> List[ExtendedRational]:
        return sorted(self._canonical.get(self._label(s), []), key=lambda x: (x.is_infinite, x))

    def canonical(self, s: ExtendedRational) -> Optional[ExtendedRational]:
        """
        The canonical slope in the part of s, or None when the part holds none.

        Raises:
            ReductionError: If the part holds two canonical slopes.
        """
        members = self.canonical_members(s)
        if len(members) > 1:
            raise ReductionError(f"Orbit of {s} for r = {self.r} holds several canonical slopes: {[str(x) for x in members]}")
        return members[0] if members else None


def is_null_homotopic(r: ExtendedRational, s: ExtendedRational, fuel: Optional[int] = None) -> bool:
    """True iff s lies in the orbit of ∞ or of r."""
    return reduce_to_fundamental(r, s, fuel).null_homotopic
