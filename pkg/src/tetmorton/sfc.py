"""Interleaved curve codes, per-level linear indices and curve traversal.

The curve code of an element interleaves, level by level, the cube-id of
each ancestor with that ancestor's type.  Read as a base ``2**dim``
number (cube-id digit first, then type digit, root level first) it
orders all elements along the space-filling curve.  Codes are kept at a
fixed width of ``2 * max_level`` digits, zero-padded below the
element's level, so that integer comparison is branch-free; the level
caps in :mod:`tetmorton.tet` keep every code within 128 bits.

The code of a level-``l`` element is not dense in ``0..2**(dim*l)-1``
(type digits skip values), so a separate gap-free *linear index* exists
per level and is order-isomorphic to the code.
"""

from __future__ import annotations

from typing import NamedTuple

from . import tables
from .tet import MeshConfig, TetId, is_inside_root


class TmCode(NamedTuple):
    """Fixed-width interleaved curve code plus the level it encodes."""

    code: int
    level: int


class LinearIndex(NamedTuple):
    """Gap-free curve position among all elements of one level."""

    value: int
    level: int


class Cube6D(NamedTuple):
    """Anchor of the six-dimensional cube a tetrahedron embeds into.

    The three type-bit planes of the ancestor chain come first, then the
    spatial coordinates.
    """

    b0: int
    b1: int
    b2: int
    x: int
    y: int
    z: int
    level: int


def _require_inside(cfg: MeshConfig, t: TetId) -> None:
    if not is_inside_root(cfg, t):
        raise ValueError(f"element {t} lies outside the root simplex")


def tm_index(cfg: MeshConfig, t: TetId) -> TmCode:
    """Curve code of ``t``; runs in O(level) to recover ancestor types."""
    _require_inside(cfg, t)
    d = cfg.dim
    L = cfg.max_level
    pt = tables.PARENT_TYPE[d]
    code = 0
    b = t.type
    for q in range(t.level, 0, -1):
        h = 1 << (L - q)
        c = 0
        if t.x & h:
            c |= 1
        if t.y & h:
            c |= 2
        if t.z & h:
            c |= 4
        code |= ((c << d) | b) << (2 * d * (L - q))
        b = pt[c][b]
    return TmCode(code, t.level)


def format_tm_code(cfg: MeshConfig, m: TmCode) -> str:
    """Digit string of ``m``: base 8 in 3D, base 4 in 2D, ``2 * level``
    digits, highest first.  The root yields an empty string."""
    d = cfg.dim
    L = cfg.max_level
    digits = []
    for pos in range(2 * m.level):
        shift = d * (2 * L - 1 - pos)
        digits.append(str((m.code >> shift) & ((1 << d) - 1)))
    return "".join(digits)


def compare(cfg: MeshConfig, a: TetId, b: TetId) -> int:
    """Total curve order: -1, 0 or +1.

    Orders by code; equal codes (ancestor chains padded with zeros) are
    broken by ascending level, so elements are equal only when identical.
    """
    ca = tm_index(cfg, a).code
    cb = tm_index(cfg, b).code
    if ca != cb:
        return -1 if ca < cb else 1
    if a.level != b.level:
        return -1 if a.level < b.level else 1
    return 0


def linear_id(cfg: MeshConfig, t: TetId) -> LinearIndex:
    """Curve position of ``t`` among all level ``t.level`` elements.

    The value is the base ``2**dim`` number whose digits are the curve
    ranks of the ancestor chain, root level first.
    """
    _require_inside(cfg, t)
    d = cfg.dim
    L = cfg.max_level
    loc = tables.LOCAL_FROM_CUBE_TYPE[d]
    pt = tables.PARENT_TYPE[d]
    value = 0
    b = t.type
    for q in range(t.level, 0, -1):
        h = 1 << (L - q)
        c = 0
        if t.x & h:
            c |= 1
        if t.y & h:
            c |= 2
        if t.z & h:
            c |= 4
        value += loc[b][c] << (d * (t.level - q))
        b = pt[c][b]
    return LinearIndex(value, t.level)


def tet_from_linear_id(cfg: MeshConfig, index: int, level: int) -> TetId:
    """Element with linear index ``index`` at ``level``; inverse of
    :func:`linear_id`."""
    if not 0 <= level <= cfg.max_level:
        raise ValueError(f"level must be in 0..{cfg.max_level}, got {level}")
    d = cfg.dim
    if not 0 <= index < 1 << (d * level):
        raise ValueError(f"index must be in 0..{(1 << (d * level)) - 1}, got {index}")
    cid_tab = tables.CUBE_FROM_PARENT_LOCAL[d]
    type_tab = tables.TYPE_FROM_PARENT_LOCAL[d]
    mask = (1 << d) - 1
    x = y = z = 0
    b = 0
    for q in range(1, level + 1):
        j = (index >> (d * (level - q))) & mask
        c = cid_tab[b][j]
        b = type_tab[b][j]
        h = 1 << (cfg.max_level - q)
        if c & 1:
            x += h
        if c & 2:
            y += h
        if c & 4:
            z += h
    return TetId(x, y, z, level, b)


def successor(cfg: MeshConfig, t: TetId) -> TetId | None:
    """Next same-level element on the curve, or None past the last one.

    Amortized constant time: the carry walks up one level only every
    ``2**dim`` calls.
    """
    d = cfg.dim
    L = cfg.max_level
    loc = tables.LOCAL_FROM_CUBE_TYPE[d]
    pt = tables.PARENT_TYPE[d]
    cid_tab = tables.CUBE_FROM_PARENT_LOCAL[d]
    type_tab = tables.TYPE_FROM_PARENT_LOCAL[d]
    nch = 1 << d
    x, y, z, level, b = t
    q = level
    while q > 0:
        h = 1 << (L - q)
        c = 0
        if x & h:
            c |= 1
        if y & h:
            c |= 2
        if z & h:
            c |= 4
        j = loc[b][c] + 1
        p = pt[c][b]
        if j < nch:
            c2 = cid_tab[p][j]
            b2 = type_tab[p][j]
            # Rank j at level q; every deeper level resets to rank 0,
            # which zeroes the coordinate bits and keeps the type.
            clear = ~(h | (h - 1))
            x = (x & clear) | (h if c2 & 1 else 0)
            y = (y & clear) | (h if c2 & 2 else 0)
            z = (z & clear) | (h if c2 & 4 else 0)
            return TetId(x, y, z, level, b2)
        b = p
        q -= 1
    return None


def predecessor(cfg: MeshConfig, t: TetId) -> TetId | None:
    """Previous same-level element on the curve, or None before the first."""
    d = cfg.dim
    L = cfg.max_level
    loc = tables.LOCAL_FROM_CUBE_TYPE[d]
    pt = tables.PARENT_TYPE[d]
    cid_tab = tables.CUBE_FROM_PARENT_LOCAL[d]
    type_tab = tables.TYPE_FROM_PARENT_LOCAL[d]
    x, y, z, level, b = t
    q = level
    while q > 0:
        h = 1 << (L - q)
        c = 0
        if x & h:
            c |= 1
        if y & h:
            c |= 2
        if z & h:
            c |= 4
        j = loc[b][c] - 1
        p = pt[c][b]
        if j >= 0:
            c2 = cid_tab[p][j]
            b2 = type_tab[p][j]
            # Rank j at level q; every deeper level resets to the last
            # rank, which sets all coordinate bits and keeps the type.
            low = ((1 << (level - q)) - 1) << (L - level)
            clear = ~(h | (h - 1))
            x = (x & clear) | (h if c2 & 1 else 0) | low
            y = (y & clear) | (h if c2 & 2 else 0) | low
            if d == 3:
                z = (z & clear) | (h if c2 & 4 else 0) | low
            return TetId(x, y, z, level, b2)
        b = p
        q -= 1
    return None


def is_valid_code(cfg: MeshConfig, m: TmCode) -> bool:
    """True when ``m`` is the curve code of an actual element.

    The type digits must form a consistent ancestor chain ending in the
    root type 0, every type digit must be a real type, and all digits
    below the stated level must be zero.
    """
    d = cfg.dim
    L = cfg.max_level
    code, level = m
    if not 0 <= level <= L:
        return False
    if code < 0 or code >> (2 * d * L):
        return False
    if code & ((1 << (2 * d * (L - level))) - 1):
        return False
    num_types = cfg.num_types
    pt = tables.PARENT_TYPE[d]
    mask = (1 << d) - 1
    expected = None  # parent type required one level up
    for q in range(level, 0, -1):
        pair = code >> (2 * d * (L - q))
        b = pair & mask
        c = (pair >> d) & mask
        if b >= num_types:
            return False
        if expected is not None and b != expected:
            return False
        expected = pt[c][b]
    return expected is None or expected == 0


def phi(cfg: MeshConfig, t: TetId) -> Cube6D:
    """Embed a tetrahedron into the 6D cube hierarchy.

    Splits each ancestor type into its three bits and stacks them into
    three extra coordinates; bitwise-interleaving the six coordinates
    (z, y, x, b2, b1, b0, highest bit first) reproduces the curve code.
    """
    if cfg.dim != 3:
        raise ValueError("the 6D embedding is defined for tetrahedra only")
    _require_inside(cfg, t)
    L = cfg.max_level
    pt = tables.PARENT_TYPE[3]
    b0 = b1 = b2 = 0
    b = t.type
    for q in range(t.level, 0, -1):
        h = 1 << (L - q)
        c = 0
        if t.x & h:
            c |= 1
        if t.y & h:
            c |= 2
        if t.z & h:
            c |= 4
        if b & 1:
            b0 |= h
        if b & 2:
            b1 |= h
        if b & 4:
            b2 |= h
        b = pt[c][b]
    return Cube6D(b0, b1, b2, t.x, t.y, t.z, t.level)
