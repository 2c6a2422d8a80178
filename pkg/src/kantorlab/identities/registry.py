"""Named varieties: products they use plus their defining identities."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .dsl import parse_identity
from .expr import IdentityExpr

__all__ = ["VarietySpec", "variety_registry", "get_variety", "dump_registry"]


@dataclass(frozen=True)
class VarietySpec:
    name: str
    products: Tuple[str, ...]
    identities: Tuple[IdentityExpr, ...]
    params: Tuple[str, ...] = ()
    # variables bound to special elements instead of being quantified
    # (only "unit" is supported)
    fixed: Tuple[Tuple[str, str], ...] = ()
    description: str = ""

    @property
    def arity(self) -> int:
        return len(self.products)

    def sources(self) -> List[str]:
        return [str(e) for e in self.identities]


# name -> (products, [(label, dsl)], params, fixed, description)
_TABLE = [
    ("associative", ("m",), [("assoc", "m(m(x,y),z) = m(x,m(y,z))")], (), (),
     "(xy)z = x(yz)"),
    ("commutative", ("m",), [("comm", "m(x,y) = m(y,x)")], (), (), "xy = yx"),
    ("anticommutative", ("m",), [("anticomm", "m(x,y) = -m(y,x)")], (), (), "xy = -yx"),
    ("eps_commutative", ("m",), [("eps_comm", "m(x,y) = @eps*m(y,x)")], ("eps",), (),
     "xy = eps*yx with eps in {1,-1}"),
    ("perm", ("m",), [("perm_1", "m(m(x,y),z) = m(x,m(y,z))"), ("perm_2", "m(x,m(y,z)) = m(x,m(z,y))")], (), (),
     "(xy)z = x(yz) = x(zy)"),
    ("lie", ("m",), [("anticomm", "m(x,y) + m(y,x)"),
                     ("jacobi", "cyc(x,y,z){m(m(x,y),z)}")], (), (),
     "anticommutative with the Jacobi identity"),
    ("leibniz_left", ("m",), [("leibniz", "m(x,m(y,z)) = m(m(x,y),z) + m(y,m(x,z))")], (), (),
     "x(yz) = (xy)z + y(xz)"),
    ("left_commutative", ("m",), [("left_comm", "m(x,m(y,z)) = m(y,m(x,z))")], (), (), "x(yz) = y(xz)"),
    ("bicommutative", ("m",), [("left_comm", "m(x,m(y,z)) = m(y,m(x,z))"),
                               ("right_comm", "m(m(x,y),z) = m(m(x,z),y)")], (), (),
     "x(yz) = y(xz), (xy)z = (xz)y"),
    ("zinbiel_left", ("m",), [("zinbiel", "m(x,m(y,z)) = m(m(x,y),z) + m(m(y,x),z)")], (), (),
     "x(yz) = (xy)z + (yx)z"),
    ("zinbiel_right", ("m",), [("zinbiel_r", "m(m(x,y),z) = m(x,m(y,z)) + m(x,m(z,y))")], (), (),
     "(xy)z = x(yz) + x(zy)"),
    ("novikov_left", ("m",), [("left_comm", "m(x,m(y,z)) = m(y,m(x,z))"),
                              ("right_sym", "assoc(m;x,y,z) = assoc(m;x,z,y)")], (), (),
     "x(yz) = y(xz), (x,y,z) = (x,z,y)"),
    ("novikov_right", ("m",), [("right_comm", "m(m(x,y),z) = m(m(x,z),y)"),
                               ("left_sym", "assoc(m;x,y,z) = assoc(m;y,x,z)")], (), (),
     "(xy)z = (xz)y, (x,y,z) = (y,x,z)"),
    ("alternative", ("m",), [("left_alt", "m(m(x,x),y) = m(x,m(x,y))"),
                             ("right_alt", "m(x,m(y,y)) = m(m(x,y),y)")], (), (),
     "x^2 y = x(xy), x y^2 = (xy)y"),
    ("left_alternative", ("m",), [("left_alt", "m(m(x,x),y) = m(x,m(x,y))")], (), (), "(x,x,y) = 0"),
    ("right_alternative", ("m",), [("right_alt", "assoc(m;x,y,y)")], (), (), "(x,y,y) = 0"),
    ("flexible", ("m",), [("flexible", "m(m(x,y),x) = m(x,m(y,x))")], (), (), "(xy)x = x(yx)"),
    ("moufang", ("m",), [("moufang_right", "m(x,m(m(y,z),y)) = m(m(m(x,y),z),y)"),
                         ("moufang_left", "m(m(m(y,z),y),x) = m(y,m(z,m(y,x)))"),
                         ("moufang_middle", "m(m(x,y),m(z,x)) = m(x,m(m(y,z),x))")], (), (),
     "the three Moufang laws"),
    ("alternative_consequences", ("m",), [
        ("skew_12", "assoc(m;x,y,z) = -assoc(m;y,x,z)"),
        ("skew_23", "assoc(m;x,y,z) = -assoc(m;x,z,y)"),
        ("xxy", "assoc(m;x,m(x,y),z) = m(assoc(m;x,y,z),x)"),
        ("xyx", "assoc(m;x,m(y,x),z) = m(x,assoc(m;x,y,z))"),
    ], (), (), "identities holding in every alternative algebra"),
    ("jordan", ("m",), [("comm", "m(x,y) = m(y,x)"),
                        ("jordan", "assoc(m;m(x,x),y,x)")], (), (),
     "commutative with (x^2,y,x) = 0"),
    ("noncommutative_jordan", ("m",), [("flexible", "m(m(x,y),x) = m(x,m(y,x))"),
                                       ("jordan", "assoc(m;m(x,x),y,x)")], (), (),
     "flexible with (x^2,y,x) = 0"),
    ("quasi_associative", ("m",), [
        ("cyclic", "cyc(x,y,z){assoc(m;x,y,z)}"),
        ("quasi", "assoc(m;x,y,z) = @alpha*comm(m;y,comm(m;x,z))"),
    ], ("alpha",), (), "cyclic associator sum vanishes, (x,y,z) = alpha[y,[x,z]]"),
    ("quasi_alternative", ("m",), [
        ("flexible", "assoc(m;x,y,x)"),
        ("quasi", "assoc(m;x,x,y) = @alpha*comm(m;x,comm(m;x,y))"),
    ], ("alpha",), (), "(x,y,x) = 0, (x,x,y) = alpha[x,[x,y]]"),
    ("dialgebra_assoc", ("vdash", "dashv"), [
        ("d1", "vdash(dashv(x,y),z) = vdash(vdash(x,y),z)"),
        ("d2", "dashv(x,vdash(y,z)) = dashv(x,dashv(y,z))"),
        ("d3", "vdash(vdash(x,y),z) = vdash(x,vdash(y,z))"),
        ("d4", "dashv(dashv(x,y),z) = dashv(x,dashv(y,z))"),
        ("d5", "dashv(vdash(x,y),z) = vdash(x,dashv(y,z))"),
    ], (), (), "associative dialgebra"),
    ("duplicial", ("prec", "succ"), [
        ("p1", "prec(prec(x,y),z) = prec(x,prec(y,z))"),
        ("p2", "prec(succ(x,y),z) = succ(x,prec(y,z))"),
        ("p3", "succ(succ(x,y),z) = succ(x,succ(y,z))"),
    ], (), (), "duplicial algebra"),
    ("dual_duplicial", ("prec", "succ"), [
        ("p1", "prec(prec(x,y),z) = prec(x,prec(y,z))"),
        ("p2", "prec(succ(x,y),z) = succ(x,prec(y,z))"),
        ("p3", "succ(succ(x,y),z) = succ(x,succ(y,z))"),
        ("z1", "prec(x,succ(y,z))"),
        ("z2", "succ(prec(x,y),z)"),
    ], (), (), "duplicial with x<(y>z) = (x<y)>z = 0"),
    ("as2", ("dot", "circ"), [
        ("a1", "dot(circ(x,y),z) = circ(x,dot(y,z))"),
        ("a2", "circ(dot(x,y),z) = dot(x,circ(y,z))"),
        ("a3", "circ(circ(x,y),z) = circ(x,circ(y,z))"),
        ("a4", "dot(dot(x,y),z) = dot(x,dot(y,z))"),
    ], (), (), "two compatible associative products"),
    ("comm_tridendriform", ("dot", "prec"), [
        ("comm", "dot(x,y) = dot(y,x)"),
        ("assoc", "dot(dot(x,y),z) = dot(x,dot(y,z))"),
        ("prec", "prec(prec(x,y),z) = prec(x,prec(y,z)) + prec(x,prec(z,y))"),
        ("mixed", "prec(dot(x,y),z) = dot(x,prec(y,z))"),
    ], (), (), "commutative tridendriform algebra"),
    ("poisson", ("m", "b"), [
        ("comm", "m(x,y) = m(y,x)"),
        ("assoc", "m(m(x,y),z) = m(x,m(y,z))"),
        ("leibniz", "b(m(x,y),z) = m(b(x,z),y) + m(x,b(y,z))"),
        ("anticomm", "b(x,y) + b(y,x)"),
        ("jacobi", "cyc(x,y,z){b(b(x,y),z)}"),
    ], (), (), "Poisson algebra"),
    ("generalized_poisson", ("m", "b"), [
        ("comm", "m(x,y) = m(y,x)"),
        ("assoc", "m(m(x,y),z) = m(x,m(y,z))"),
        ("leibniz", "b(m(x,y),z) = m(b(x,z),y) + m(x,b(y,z)) + m(b(one,z),m(x,y))"),
        ("anticomm", "b(x,y) + b(y,x)"),
        ("jacobi", "cyc(x,y,z){b(b(x,y),z)}"),
    ], (), (("one", "unit"),), "unital, {xy,z} = {x,z}y + x{y,z} + D(z)xy with D(z) = {1,z}"),
    ("generalized_poisson_minus", ("m", "b"), [
        ("comm", "m(x,y) = m(y,x)"),
        ("assoc", "m(m(x,y),z) = m(x,m(y,z))"),
        ("leibniz", "b(m(x,y),z) = m(b(x,z),y) + m(x,b(y,z)) - m(b(one,z),m(x,y))"),
        ("anticomm", "b(x,y) + b(y,x)"),
        ("jacobi", "cyc(x,y,z){b(b(x,y),z)}"),
    ], (), (("one", "unit"),), "unital, {xy,z} = {x,z}y + x{y,z} - D(z)xy with D(z) = {1,z}"),
    ("novikov_poisson_left", ("m", "circ"), [
        ("comm", "m(x,y) = m(y,x)"),
        ("assoc", "m(m(x,y),z) = m(x,m(y,z))"),
        ("left_comm", "circ(x,circ(y,z)) = circ(y,circ(x,z))"),
        ("right_sym", "assoc(circ;x,y,z) = assoc(circ;x,z,y)"),
        ("compat_1", "circ(x,m(y,z)) = m(circ(x,y),z)"),
        ("compat_2", "circ(m(x,y),z) - m(x,circ(y,z)) = circ(m(x,z),y) - m(x,circ(z,y))"),
    ], (), (), "left Novikov-Poisson algebra"),
    ("novikov_poisson_right", ("m", "circ"), [
        ("comm", "m(x,y) = m(y,x)"),
        ("assoc", "m(m(x,y),z) = m(x,m(y,z))"),
        ("right_comm", "circ(circ(x,y),z) = circ(circ(x,z),y)"),
        ("left_sym", "assoc(circ;x,y,z) = assoc(circ;y,x,z)"),
        ("compat_1", "circ(m(x,y),z) = m(x,circ(y,z))"),
        ("compat_2", "m(circ(x,y),z) - circ(x,m(y,z)) = m(circ(y,x),z) - circ(y,m(x,z))"),
    ], (), (), "right Novikov-Poisson algebra"),
    ("associative_commutative", ("m",), [("assoc", "m(m(x,y),z) = m(x,m(y,z))"),
                                         ("comm", "m(x,y) = m(y,x)")], (), (),
     "commutative and associative"),
    ("zero_product", ("m",), [("zero", "m(x,y)")], (), (), "xy = 0"),
    ("two_nilpotent", ("m",), [("left", "m(m(x,y),z)"), ("right", "m(x,m(y,z))")], (), (),
     "all products of three elements vanish"),
]


def _build() -> Dict[str, VarietySpec]:
    reg: Dict[str, VarietySpec] = {}
    for name, prods, idents, params, fixed, desc in _TABLE:
        if name in reg:
            raise ValueError(f"duplicate variety {name}")
        exprs = tuple(parse_identity(text, name=label) for label, text in idents)
        reg[name] = VarietySpec(name, prods, exprs, params, fixed, desc)
    return reg


_REGISTRY: Optional[Dict[str, VarietySpec]] = None


def variety_registry() -> Dict[str, VarietySpec]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build()
    return dict(_REGISTRY)


def get_variety(name: str) -> VarietySpec:
    reg = variety_registry()
    if name not in reg:
        raise KeyError(f"unknown variety {name!r}; known: {', '.join(sorted(reg))}")
    return reg[name]


def dump_registry() -> str:
    """The registry as DSL text, one ``[variety]`` block per entry."""
    lines = []
    for name, spec in sorted(variety_registry().items()):
        head = f"[{name}] products={','.join(spec.products)}"
        if spec.params:
            head += f" params={','.join(spec.params)}"
        if spec.fixed:
            head += " fixed=" + ",".join(f"{v}:{k}" for v, k in spec.fixed)
        lines.append(head)
        for e in spec.identities:
            lines.append(f"  {e.name}: {e} = 0")
        lines.append("")
    return "\n".join(lines)
