"""Shared helpers: cached groups and independent combinatorial oracles.

The raising operator and the brute-force Bruhat oracle live here, not in the
package, so the tests exercise the shipped lowering operator and subword
order against genuinely separate implementations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from wondermono.orbits import OrbitPoset
from wondermono.paths import LSPath, canonical_segments
from wondermono.rootsys import RootSystem, Weight, from_name
from wondermono.weyl import WeylElement, WeylGroup

_GROUPS: dict[str, WeylGroup] = {}
_POSETS: dict[str, OrbitPoset] = {}


def group_of(name: str) -> WeylGroup:
    if name not in _GROUPS:
        _GROUPS[name] = WeylGroup(from_name(name))
    return _GROUPS[name]


def poset_of(name: str) -> OrbitPoset:
    if name not in _POSETS:
        _POSETS[name] = OrbitPoset.build(group_of(name))
    return _POSETS[name]


def weight_grid(rank: int, bound: int) -> list[Weight]:
    return [tuple(t) for t in product(range(bound + 1), repeat=rank)]


def root_raise(rs: RootSystem, i: int, path: LSPath) -> LSPath | None:
    """Raising operator, the time mirror of the shipped lowering operator.

    Reflects between the last descent through m + 1 and the first attainment
    of the minimal height m; defined iff the starting height exceeds m by at
    least 1.
    """
    coord = i - 1
    heights = [Fraction(0)]
    for direction, duration in path.segments:
        heights.append(heights[-1] + duration * direction[coord])
    m = min(heights)
    if heights[0] - m < 1:
        return None
    j1 = min(j for j, x in enumerate(heights) if x == m)
    target = m + 1
    j0 = max(j for j in range(j1) if heights[j] >= target)
    theta = (target - heights[j0]) / (heights[j0 + 1] - heights[j0])

    alpha = rs.simple_root(i)

    def reflect(d: Weight) -> Weight:
        return tuple(x - d[coord] * a for x, a in zip(d, alpha))

    segs = list(path.segments[:j0])
    d, t = path.segments[j0]
    if theta != 0:
        segs.append((d, theta * t))
    segs.append((reflect(d), (1 - theta) * t))
    for k in range(j0 + 1, j1):
        d, t = path.segments[k]
        segs.append((reflect(d), t))
    segs.extend(path.segments[j1:])
    return LSPath(canonical_segments(segs), path.shape)


def brute_bruhat_down(group: WeylGroup, w: WeylElement) -> set[WeylElement]:
    """Lower Bruhat interval of w via all subwords of its canonical word."""
    out = set()
    word = w.word
    for bits in range(1 << len(word)):
        sub = tuple(word[k] for k in range(len(word)) if bits >> k & 1)
        out.add(group.from_word(sub))
    return out


def all_reduced_words(group: WeylGroup, w: WeylElement) -> list[tuple[int, ...]]:
    if w.length == 0:
        return [()]
    out = []
    for i in group.left_descents(w):
        shorter = group.multiply(group.simple(i), w)
        out.extend((i,) + rest for rest in all_reduced_words(group, shorter))
    return sorted(out)
