"""The frozen identity-label table.

Every identity a verifier can evaluate has a short numeric code used in
reports ("Eq (2.2) violated at (e1, e2, e1): ...").  The codes are fixed here,
in one place, together with the formula each one stands for; nothing else in
the package hardcodes them.  Products: ``o`` is the Novikov product, ``<`` and
``>`` the two pre-Novikov products (with a o b = a<b + a>b), ``.`` a second
algebra's product, ``(.)`` and ``(*)`` the derived products a(.)b = a>b + b<a
and a(*)b = a o b + b o a.
"""

from __future__ import annotations

NOVIKOV = ("2.1", "2.2")
NOVIKOV_REP = ("2.3", "2.4", "2.5", "2.6")
PRE_NOVIKOV = ("2.8", "2.9", "2.10", "2.11")
O_OPERATOR_NOVIKOV = "2.13"
QF_SKEW = "skew"
QF_NONDEGENERATE = "nondegenerate"
QF_COCYCLE = "2.14"
FORM_ISO = "2.15"
MATCHED_PAIR = ("3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8")
COALGEBRA = ("3.11", "3.12", "3.13", "3.14")
COMPATIBILITY = ("3.16", "3.17", "3.18", "3.19", "3.20", "3.21", "3.22", "3.23")
COBOUNDARY_CONDITIONS = ("4.3", "4.4", "4.5", "4.6")
COBOUNDARY_EQUATIONS = ("4.7", "4.8", "4.9", "4.10")
YBE = "4.13"
PRE_NOVIKOV_REP = tuple(f"4.{k}" for k in range(18, 28))
O_OPERATOR_PRE_NOVIKOV = ("4.29", "4.30")
OPERATOR_FORM = ("4.31", "4.32")

FORMULAS = {
    "2.1": "(a o b) o c - a o (b o c) = (b o a) o c - b o (a o c)",
    "2.2": "(a o b) o c = (a o c) o b",
    "2.3": "l(a o b - b o a) v = l(a) l(b) v - l(b) l(a) v",
    "2.4": "l(a) r(b) v - r(b) l(a) v = r(a o b) v - r(b) r(a) v",
    "2.5": "l(a o b) v = r(b) l(a) v",
    "2.6": "r(a) r(b) v = r(b) r(a) v",
    "2.8": "a>(b>c) = (a o b)>c + b>(a>c) - (b o a)>c",
    "2.9": "a>(b<c) = (a>b)<c + b<(a o c) - (b<a)<c",
    "2.10": "(a o b)>c = (a>c)<b",
    "2.11": "(a<b)<c = (a<c)<b",
    "2.13": "T(u) o T(v) = T(l(T(u)) v) + T(r(T(v)) u)",
    "skew": "w(a, b) = -w(b, a)",
    "nondegenerate": "det w != 0",
    "2.14": "w(a o b, c) - w(a o c + c o a, b) + w(c o b, a) = 0",
    "2.15": "w(T(f), a) = <f, a>",
    "3.1": "lB(x)(a o b) = -lB(lA(a)x - rA(a)x)b + (lB(x)a - rB(x)a) o b + rB(rA(b)x)a + a o (lB(x)b)",
    "3.2": "rB(x)(a o b - b o a) = rB(lA(b)x)a - rB(lA(a)x)b + a o (rB(x)b) - b o (rB(x)a)",
    "3.3": "lA(a)(x . y) = -lA(lB(x)a - rB(x)a)y + (lA(a)x - rA(a)x) . y + rA(rB(y)a)x + x . (lA(a)y)",
    "3.4": "rA(a)(x . y - y . x) = rA(lB(y)a)x - rA(lB(x)a)y + x . (rA(a)y) - y . (rA(a)x)",
    "3.5": "(lB(x)a) o b + lB(rA(a)x)b = (lB(x)b) o a + lB(rA(b)x)a",
    "3.6": "(rB(x)a) o b + lB(lA(a)x)b = rB(x)(a o b)",
    "3.7": "lA(rB(x)a)y + (lA(a)x) . y = lA(rB(y)a)x + (lA(a)y) . x",
    "3.8": "lA(lB(x)a)y + (rA(a)x) . y = rA(a)(x . y)",
    "3.11": "(al(x)id)al + (tau(x)id)(id(x)al)be - (id(x)(al+be))al - (tau(x)id)(be(x)id)al = 0",
    "3.12": "(id(x)be)be + (tau(x)id)((al+be)(x)id)be - ((al+be)(x)id)be - (tau(x)id)(id(x)be)be = 0",
    "3.13": "(id(x)tau)(be(x)id)al - ((al+be)(x)id)be = 0",
    "3.14": "(id(x)tau)(al(x)id)al - (al(x)id)al = 0",
    "3.16": "(tau.al+be)(a o b) = ((L> + 2R<)(a)(x)id + id(x)Lo(a))(tau.al+be)(b) + (id(x)Ro(b))(2tau.al+be)(a) - (R<(b)(x)id)tau.al(a)",
    "3.17": "tau.al(a o b - b o a) = ((L>+R<)(a)(x)id + id(x)Lo(a))tau.al(b) - ((L>+R<)(b)(x)id + id(x)Lo(b))tau.al(a)",
    "3.18": "(al+be)(a(.)b) = (id(x)(R>+L<)(b))(2tau.al+be)(a) - (L<(b)(x)id)al(a) + ((L>+2R<)(a)(x)id + id(x)(L>+R<)(a))(al+be)(b)",
    "3.19": "(al+be-tau.al-tau.be)(b<a) = (id(x)L<(b))(tau.al+be)(a) - (L<(b)(x)id)(al+tau.be)(a) + (id(x)R<(a))(al+be)(b) - (R<(a)(x)id)(tau.al+tau.be)(b)",
    "3.20": "(id(x)Ro(b) - R<(b)(x)id)(tau.al+be)(a) = (id(x)Ro(a) - R<(a)(x)id)(tau.al+be)(b)",
    "3.21": "tau.al(a o b) = (id(x)Ro(b))tau.al(a) + ((L>+R<)(a)(x)id)(tau.al+be)(b)",
    "3.22": "(id(x)(R>+L<)(b))tau.al(a) = ((R>+L<)(b)(x)id)al(a) + (id(x)(L>+R<)(a))(tau.al+tau.be)(b) - ((L>+R<)(a)(x)id)(al+be)(b)",
    "3.23": "(al+be)(b<a) = (id(x)(R>+L<)(b))(tau.al+be)(a) + (R<(a)(x)id)(al+be)(b)",
    "4.3": "coboundary condition 1 applied to (tau r - r)",
    "4.4": "coboundary condition 2 applied to (tau r - r)",
    "4.5": "coboundary condition 3 applied to (tau r - r)",
    "4.6": "coboundary condition 4 applied to (tau r - r)",
    "4.7": "(Lo(a)(x)id(x)id)R11 + (id(x)L>(a)(x)id)R12 + (id(x)id(x)L(.)(a))R13 - corrections = 0",
    "4.8": "(L>(a)(x)id(x)id - id(x)L>(a)(x)id)R21 + (id(x)id(x)L(*)(a))R22 + corrections = 0",
    "4.9": "-(id(x)L(.)(a)(x)id)R21 + (id(x)id(x)L(*)(a))R31 + corrections = 0",
    "4.10": "-(id(x)L(.)(a)(x)id)R12 + (id(x)id(x)L(.)(a))R41 = 0",
    "4.13": "r12 o r13 + r23 (.) r13 - r12 < r23 = 0",
    "4.18": "l>(a)l>(b)v - l>(b)l>(a)v = l>(a o b - b o a)v",
    "4.19": "l>(a)l<(b)v - l<(b)l>(a)v = l<(a>b - b<a)v + l<(b)l<(a)v",
    "4.20": "r>(a>b)v = r>(b)(r> + r<)(a)v + l>(a)r>(b)v - r>(b)(l< + l>)(a)v",
    "4.21": "r>(a<b)v = r<(b)r>(a)v + l<(a)(r> + r<)(b)v - r<(b)l<(a)v",
    "4.22": "l>(a)r<(b)v - r<(b)l>(a)v = r<(a o b)v - r<(b)r<(a)v",
    "4.23": "r>(a)(r> + r<)(b)v = r<(b)r>(a)v",
    "4.24": "l<(a>b)v = r>(b)(l> + l<)(a)v",
    "4.25": "l>(a o b)v = r<(b)l>(a)v",
    "4.26": "r<(a)r<(b)v = r<(b)r<(a)v",
    "4.27": "l<(a<b)v = r<(b)l<(a)v",
    "4.29": "T(u)>T(v) = T(l>(T(u))v) + T(r>(T(v))u)",
    "4.30": "T(u)<T(v) = T(l<(T(u))v) + T(r<(T(v))u)",
    "4.31": "r12 > r13 + r23 (*) r13 + r12 > r23 = 0",
    "4.32": "r12 < r13 - r13 (.) r23 - r12 o r23 = 0",
}


def render_identity(identity: str) -> str:
    """How an identity code appears in text reports."""
    if identity[0].isdigit():
        return f"Eq ({identity})"
    return identity
