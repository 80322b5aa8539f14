import logging
import re
from itertools import permutations
from pathlib import Path
from typing import List, NamedTuple, Union

import numpy as np
from sympy import factorial, isprime

from ..config import MAX_ORDER, MAX_SYMMETRIC_DEGREE
from ..errors import GroupIngestionError, InvalidDescriptorError
from .model import FiniteGroup

logger = logging.getLogger(__name__)

_FACTOR_RE = re.compile(r"^(?P<kind>[ZDQS])(?P<order>\d+)$")
_ELEMENTARY_RE = re.compile(r"^E(?P<p>\d+)\^(?P<k>\d+)$")


def cyclic_table(k: int) -> np.ndarray:
    idx = np.arange(k)
    return (idx[:, None] + idx[None, :]) % k


def dihedral_table(k: int) -> np.ndarray:
    """
    Dihedral group of order 2k. Element r^i s^j has index i + k*j.

    (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d).
    """
    n = 2 * k
    idx = np.arange(n)
    a, b = idx % k, idx // k
    sign = np.where(b == 1, -1, 1)
    rot = (a[:, None] + sign[:, None] * a[None, :]) % k
    ref = (b[:, None] + b[None, :]) % 2
    return rot + k * ref


def quaternion_table(k: int) -> np.ndarray:
    """
    Generalized quaternion group Q_4k = <x, y : x^k = y^2, x^2k = y^4 = e, y^-1 x y = x^-1>.

    Element x^i y^j (0 <= i < 2k, j in {0, 1}) has index i + 2k*j; x is index 1 and
    y is index 2k.
    """
    m = 2 * k
    n = 2 * m
    idx = np.arange(n)
    a, b = idx % m, idx // m
    table = np.empty((n, n), dtype=np.int64)
    for left in range(n):
        if b[left] == 0:
            # x^a * x^c y^d = x^(a+c) y^d
            power = (a[left] + a) % m
            table[left] = power + m * b
        else:
            # x^a y * x^c y^d = x^(a-c) y^(1+d), and y^2 = x^k
            power = (a[left] - a + k * b) % m
            table[left] = power + m * (1 - b)
    return table


def symmetric_table(k: int) -> np.ndarray:
    """Symmetric group S_k on k letters; the identity permutation comes first."""
    perms = np.array(list(permutations(range(k))), dtype=np.int64)
    lookup = {tuple(p): i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        # (p_i * p_j)(v) = p_i(p_j(v))
        composed = perms[i][perms]
        table[i] = [lookup[tuple(row)] for row in composed]
    return table


def direct_product_table(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Element (a, b) has index a * |right| + b; the identity stays at index 0."""
    nl, nr = left.shape[0], right.shape[0]
    product = left[:, None, :, None] * nr + right[None, :, None, :]
    return product.reshape(nl * nr, nl * nr)


class _Factor(NamedTuple):
    kind: str
    param: int
    exponent: int
    order: int


def _parse_factor(token: str) -> _Factor:
    """Validates one direct factor without building its table."""
    match = _ELEMENTARY_RE.match(token)
    if match:
        p, k = int(match.group("p")), int(match.group("k"))
        if not isprime(p) or k < 1:
            raise InvalidDescriptorError(f"E{p}^{k}: p must be prime and k >= 1")
        return _Factor("E", p, k, p ** k)

    match = _FACTOR_RE.match(token)
    if not match:
        raise InvalidDescriptorError(f"Unrecognized group descriptor '{token}'")
    kind, order = match.group("kind"), int(match.group("order"))

    if kind == "Z":
        if order < 1:
            raise InvalidDescriptorError("Z<k> requires k >= 1")
        return _Factor(kind, order, 1, order)
    if kind == "D":
        if order < 2 or order % 2:
            raise InvalidDescriptorError(f"D{order}: dihedral order must be even and >= 2")
        return _Factor(kind, order // 2, 1, order)
    if kind == "Q":
        if order % 4 or order < 8:
            raise InvalidDescriptorError(f"Q{order}: quaternion order must be a multiple of 4 and >= 8")
        return _Factor(kind, order // 4, 1, order)
    # kind == "S"
    if order < 1 or order > MAX_SYMMETRIC_DEGREE:
        raise InvalidDescriptorError(f"S{order}: symmetric degree must be in 1..{MAX_SYMMETRIC_DEGREE}")
    return _Factor(kind, order, 1, int(factorial(order)))


def descriptor_order(spec: str) -> int:
    """
    |G| for a descriptor, computed without building any table.

    Raises:
        InvalidDescriptorError: Unparseable descriptor or a factor out of range.
    """
    spec = spec.strip()
    if not spec:
        raise InvalidDescriptorError("Empty group descriptor")
    order = 1
    for token in spec.split("x"):
        order *= _parse_factor(token).order
    return order


def _build_factor(factor: _Factor) -> np.ndarray:
    if factor.kind == "E":
        table = cyclic_table(factor.param)
        for _ in range(factor.exponent - 1):
            table = direct_product_table(table, cyclic_table(factor.param))
        return table
    if factor.kind == "Z":
        return cyclic_table(factor.param)
    if factor.kind == "D":
        return dihedral_table(factor.param)
    if factor.kind == "Q":
        return quaternion_table(factor.param)
    return symmetric_table(factor.param)


def build_group(spec: str) -> FiniteGroup:
    """
    Builds a group from a descriptor.

    Grammar: Z<k>, D<2k>, Q<4k>, E<p>^<k>, S<k>, x-joined direct products
    (left-associative) and file:<path> for Cayley-table files.

    Args:
        spec: Descriptor string, e.g. "Q8", "Z2xZ4", "E3^2", "file:table.txt".

    Returns:
        A validated FiniteGroup with the identity at index 0.

    Raises:
        InvalidDescriptorError: Unparseable or out-of-range descriptor, or |G| above
            GRPDIM_MAX_ORDER.
        GroupIngestionError: Invalid Cayley table file.
    """
    spec = spec.strip()
    if spec.startswith("file:"):
        return load_cayley_table(spec[len("file:"):])
    if not spec:
        raise InvalidDescriptorError("Empty group descriptor")

    factors = [_parse_factor(token) for token in spec.split("x")]
    order = 1
    for factor in factors:
        order *= factor.order
    if order > MAX_ORDER:
        raise InvalidDescriptorError(f"{spec} has order {order}; descriptors are limited to order {MAX_ORDER}")

    table = _build_factor(factors[0])
    for factor in factors[1:]:
        table = direct_product_table(table, _build_factor(factor))

    group = FiniteGroup(table, name=spec)
    logger.info(f"Built group {group.name} of order {group.n}")
    return group


def validate_table(table: np.ndarray, check_associativity: bool = True) -> np.ndarray:
    """
    Validates a raw Cayley table and relabels its identity to index 0.

    Args:
        table: Square integer array with entries in 0..n-1.
        check_associativity: Run the O(n^3) associativity check.

    Returns:
        The relabeled table.

    Raises:
        GroupIngestionError: With the first violating triple, in the input labels.
    """
    table = np.asarray(table, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise GroupIngestionError(f"Cayley table must be a non-empty square matrix, got shape {table.shape}")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        i, j = (int(v) for v in np.argwhere((table < 0) | (table >= n))[0])
        raise GroupIngestionError(f"Entry ({i}, {j}) = {table[i, j]} is outside 0..{n - 1}", (i, j, int(table[i, j])))

    expected = np.arange(n)
    rows_ok = (np.sort(table, axis=1) == expected).all(axis=1)
    if not rows_ok.all():
        i = int(np.argmin(rows_ok))
        raise GroupIngestionError(f"Not a Latin square: row {i} is not a permutation", (i, -1, -1))
    cols_ok = (np.sort(table, axis=0) == expected[:, None]).all(axis=0)
    if not cols_ok.all():
        j = int(np.argmin(cols_ok))
        raise GroupIngestionError(f"Not a Latin square: column {j} is not a permutation", (-1, j, -1))

    identity = None
    for e in range(n):
        if (table[e] == expected).all() and (table[:, e] == expected).all():
            identity = e
            break
    if identity is None:
        raise GroupIngestionError("Cayley table has no two-sided identity")

    if check_associativity:
        for i in range(n):
            # (i*j)*k vs i*(j*k) for all j, k
            left = table[table[i]]
            right = table[i][table]
            bad = np.argwhere(left != right)
            if len(bad):
                j, k = (int(v) for v in bad[0])
                raise GroupIngestionError(f"Not associative: ({i}*{j})*{k} != {i}*({j}*{k})", (i, j, k))

    if identity != 0:
        logger.info(f"Relabeling identity {identity} -> 0")
        perm = np.arange(n)
        perm[0], perm[identity] = identity, 0
        relabeled = np.empty_like(table)
        relabeled[np.ix_(perm, perm)] = perm[table]
        table = relabeled

    return table


def parse_cayley_text(text: str) -> np.ndarray:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise GroupIngestionError("Empty Cayley table file")
    try:
        n = int(lines[0][0])
        rows: List[List[int]] = [[int(v) for v in line] for line in lines[1:]]
    except ValueError as e:
        raise GroupIngestionError(f"Cayley table file is not integer-valued: {e}")
    if len(lines[0]) != 1 or len(rows) != n or any(len(row) != n for row in rows):
        raise GroupIngestionError(f"Expected a first line with n followed by {n} rows of {n} integers")
    return np.array(rows, dtype=np.int64)


def load_cayley_table(path: Union[str, Path]) -> FiniteGroup:
    """Reads a Cayley-table file, validates it and returns the group named after the file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise GroupIngestionError(f"Cannot read Cayley table '{path}': {e}")
    table = validate_table(parse_cayley_text(text), check_associativity=True)
    group = FiniteGroup(table, name=path.stem)
    logger.info(f"Ingested Cayley table {path} (order {group.n})")
    return group


def write_cayley_table(group: FiniteGroup, path: Union[str, Path]) -> Path:
    path = Path(path)
    lines = [str(group.n)] + [" ".join(str(int(v)) for v in row) for row in group.table]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
