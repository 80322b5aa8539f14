import logging
from typing import List

from sympy import primerange

from ..config import MAX_ORDER, MAX_SYMMETRIC_DEGREE
from ..errors import InvalidDescriptorError
from .builders import descriptor_order

logger = logging.getLogger(__name__)

# Фиксированный список прямых произведений (порядок в комментарии)
DIRECT_PRODUCTS = [
    "Z2xZ2xZ2",   # 8, same as E2^3 but built as a product
    "Z2xZ4",      # 8
    "Z3xZ3",      # 9
    "Z2xZ6",      # 12
    "Z2xZ8",      # 16
    "Z4xZ4",      # 16
    "Z2xZ2xZ4",   # 16
    "Z2xQ8",      # 16
    "Z2xD8",      # 16
    "Z2xS3",      # 12
    "Z3xS3",      # 18
    "Z2xZ10",     # 20
    "Z3xQ8",      # 24
    "Z4xS3",      # 24
    "Z2xZ2xZ6",   # 24
    "Z2xD12",     # 24
    "Z2xQ12",     # 24
    "Z5xS3",      # 30
    "Z3xD10",     # 30
    "Z2xZ16",     # 32
    "Z4xZ8",      # 32
    "Z2xZ4xZ4",   # 32
    "Z2xZ2xZ8",   # 32
    "Z2xQ16",     # 32
    "Z2xD16",     # 32
    "Z4xQ8",      # 32
    "Z2xZ2xD8",   # 32
    "Z3xS4",      # 72
    "Z2xS4",      # 48
    "Z5xQ8",      # 40
    "S3xS3",      # 36
    "Z2xS5",      # 240
]


def builtin_catalog(max_order: int) -> List[str]:
    """
    Возвращает дескрипторы всех групп встроенного каталога порядка не выше max_order.

    Args:
        max_order: Upper bound on |G| (1..MAX_ORDER).

    Returns:
        Descriptor strings, trivial group first, then cyclic, dihedral, quaternion,
        elementary abelian, symmetric and the fixed direct products, each family
        in increasing order.
    """
    if max_order < 1 or max_order > MAX_ORDER:
        raise InvalidDescriptorError(f"max_order must be in 1..{MAX_ORDER}, got {max_order}")

    specs = [f"Z{k}" for k in range(1, max_order + 1)]
    specs += [f"D{2 * k}" for k in range(2, max_order // 2 + 1)]
    specs += [f"Q{4 * k}" for k in range(2, max_order // 4 + 1)]
    for p in primerange(2, max_order + 1):
        k = 2
        while p ** k <= max_order:
            specs.append(f"E{p}^{k}")
            k += 1
    factorial = 2
    for k in range(3, MAX_SYMMETRIC_DEGREE + 1):
        factorial *= k
        if factorial <= max_order:
            specs.append(f"S{k}")
    specs += sorted(
        (spec for spec in DIRECT_PRODUCTS if descriptor_order(spec) <= max_order),
        key=descriptor_order,
    )
    logger.info(f"Catalog up to order {max_order}: {len(specs)} groups")
    return specs
