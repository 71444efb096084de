"""Exponentiation of group-element tuples by extension-field exponents.

A base is an n-tuple over the prime-order group (the n-fold direct product,
multiplied componentwise); an exponent is an element of GF(q^n) with the
same q.  Component i of base**exp is

    prod_j base_j ** lam[i][j](exp)

with the lam values taken from `field.lambda_matrix`.  The map obeys the
usual exponent laws, degenerates to ordinary exponentiation at n = 1, and
is a bijection from the exponent field onto the product group for every
non-identity base.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IdentityBase, ParamsMismatch
from .field import FieldElement, FieldParams, _lambda_entries, fe_one
from .group import GroupElement, GroupParams, g_inv, g_mul, identity, pow_sm


@dataclass(frozen=True)
class FusionBase:
    """n-tuple of subgroup elements, tied to matching group and field parameters."""

    group: GroupParams
    field: FieldParams
    components: tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.group.q != self.field.q:
            raise ParamsMismatch("group order and exponent-field characteristic differ")
        if len(self.components) != self.field.n:
            raise ParamsMismatch(
                f"need {self.field.n} components, got {len(self.components)}"
            )
        if any(c.params != self.group for c in self.components):
            raise ParamsMismatch("component from a different group")


def scalar_embed(g: GroupElement, x: FieldElement) -> FusionBase:
    """The tuple (g^x_0, ..., g^x_{n-1}); g must not be the identity."""
    if g.residue == 1:
        raise IdentityBase("cannot embed the group identity")
    P = g.params.modulus
    comps = tuple(
        GroupElement(g.params, pow_sm(g.residue, c, P)) for c in x.coeffs
    )
    return FusionBase(group=g.params, field=x.params, components=comps)


def unit_embed(g: GroupElement, field: FieldParams) -> FusionBase:
    """The tuple (g, 1, ..., 1), i.e. g raised to the field's one-element."""
    if g.residue == 1:
        raise IdentityBase("cannot embed the group identity")
    return scalar_embed(g, fe_one(field))


def fb_identity(group: GroupParams, field: FieldParams) -> FusionBase:
    return FusionBase(group, field, tuple(identity(group) for _ in range(field.n)))


def is_identity(a: FusionBase) -> bool:
    return all(c.residue == 1 for c in a.components)


def _check_same_params(a: FusionBase, b: FusionBase) -> None:
    if a.group != b.group or a.field != b.field:
        raise ParamsMismatch("tuple bases from different parameter sets")


def fb_mul(a: FusionBase, b: FusionBase) -> FusionBase:
    _check_same_params(a, b)
    comps = tuple(g_mul(x, y) for x, y in zip(a.components, b.components))
    return FusionBase(a.group, a.field, comps)


def fb_inv(a: FusionBase) -> FusionBase:
    return FusionBase(a.group, a.field, tuple(g_inv(c) for c in a.components))


def _pow_components(
    residues: tuple[int, ...], lam: list[list[int]], modulus: int
) -> tuple[int, ...]:
    out = []
    for row in lam:
        acc = 1
        for base, e in zip(residues, row):
            if e and base != 1:
                acc = acc * pow_sm(base, e, modulus) % modulus
        out.append(acc)
    return tuple(out)


def fusion_pow(base: FusionBase, exp: FieldElement) -> FusionBase:
    """Raise a tuple base to a field exponent through the lambda matrix."""
    if exp.params != base.field:
        raise ParamsMismatch("exponent from a different field")
    lam = _lambda_entries(base.field, exp.coeffs)
    residues = tuple(c.residue for c in base.components)
    powered = _pow_components(residues, lam, base.group.modulus)
    comps = tuple(GroupElement(base.group, r) for r in powered)
    return FusionBase(base.group, base.field, comps)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def fusion_base_to_json(a: FusionBase) -> list[str]:
    return [str(c.residue) for c in a.components]


def fusion_base_from_json(
    group: GroupParams, field: FieldParams, data: list[str]
) -> FusionBase:
    from .group import group_element

    if len(data) != field.n:
        raise ParamsMismatch(f"need {field.n} components, got {len(data)}")
    comps = tuple(group_element(group, int(r, 10)) for r in data)
    return FusionBase(group, field, comps)
