"""Pure-Python LEA resolution kernel.

Fallback twin of the compiled ``corefkit._lea_c`` extension; both export
the same ``resolution_sums`` with identical semantics. Entities are
sequences of interned mention ids (non-negative ints).
"""
from __future__ import annotations

__all__ = ["resolution_sums"]


def resolution_sums(entities_a, entities_b):
    """Size-weighted LEA resolution of side A against side B.

    For each entity ``a`` the resolution is
    ``sum_b C(|a & b|, 2) / C(|a|, 2)``; a singleton resolves to 1 when
    any B entity contains its mention (self-link convention). Returns
    ``(sum_a |a| * resolution(a), sum_a |a|)``, the numerator and
    denominator of the corresponding precision or recall.
    """
    membership: dict[int, list[int]] = {}
    for j, entity in enumerate(entities_b):
        for mention in entity:
            membership.setdefault(mention, []).append(j)

    numerator = 0.0
    denominator = 0
    overlap: dict[int, int] = {}
    for entity in entities_a:
        size = len(entity)
        denominator += size
        overlap.clear()
        for mention in entity:
            for j in membership.get(mention, ()):
                overlap[j] = overlap.get(j, 0) + 1
        if size == 1:
            resolution = 1.0 if overlap else 0.0
        else:
            common = 0
            for count in overlap.values():
                common += count * (count - 1) // 2
            resolution = common / (size * (size - 1) // 2)
        numerator += size * resolution
    return numerator, denominator
