"""Text grammar for series, rational functions and closed forms, plus the printers.

Series::

    [pi*] pfq(p1, p2, ...; q1, ...; z)
    [pi*] binom(k; R(n) [; start=N] [; z=-1])

Parameters are Gaussian rationals such as ``3/2``, ``-1/3`` or ``1/2+3/4i``; a
run of equal parameters may be written ``{x}_r``.  Numeric literals of the form
``p/q`` bind tighter than any operator, so ``1/2n`` means ``n/2`` and
``3/4i`` means ``(3/4)i``; write ``1/(2n)`` for the reciprocal.

Closed forms are sums of products of atoms::

    pi  log2  sqrt2  sqrtpi  gamma14  gammaE  C
    zeta(n)  beta(n)  li(n,1/2)  imli(n)  hzeta(4,1/4)  hzeta(4,3/4)
    mz(s1,...;e1,...)  qmz(4,s1,...;c1,...[;im])

where ``mz`` signs are +-1 and ``qmz`` characters are exponents of ``i``; the
optional ``im`` selects the imaginary part (default real part).
"""
from __future__ import annotations

import re
from fractions import Fraction

from .core import (
    CATALAN, EULER_GAMMA, GAMMA14, LOG2, PI, SQRT2, SQRTPI, Atom, ClosedForm,
    GaussianRational, beta, hzeta4, imli, li_half, mz, qmz, zeta,
)
from .errors import ParseError, SemanticError
from .poly import Poly, RationalFunction, format_poly
from .series import pfq_to_binom  # noqa: F401  (grammar-level conversion, re-exported)

__all__ = [
    "parse_series", "parse_closedform", "parse_ratfunc", "parse_param", "pfq_to_binom",
    "format_atom", "format_closedform", "format_ratfunc", "format_series", "format_param",
]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?i?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9]*)
  | (?P<op>[-+*/^(){},;=])
""", re.VERBOSE)
_INT_AFTER_CARET = re.compile(r"\s*(-?\d+)")


class _Tok:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind, self.text, self.pos = kind, text, pos

    def __repr__(self):
        return f"{self.kind}:{self.text}@{self.pos}"


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        if toks and toks[-1].text == "^":
            m = _INT_AFTER_CARET.match(text, pos)
            if m:
                toks.append(_Tok("int", m.group(1), m.start(1)))
                pos = m.end()
                continue
        # "}_" is the repetition marker; "_" alone is not an identifier start there
        if text[pos] == "_" and toks and toks[-1].text == "}":
            toks.append(_Tok("op", "_", pos))
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


def _num_value(text: str) -> GaussianRational:
    imag = text.endswith("i")
    if imag:
        text = text[:-1]
    v = Fraction(text)
    return GaussianRational(0, v) if imag else GaussianRational(v)


# --------------------------------------------------------------------------
# expression domains

class _NumberDomain:
    """Constant Gaussian-rational arithmetic."""

    def lift(self, c):
        return c

    def ident(self, p, tok):
        if tok.text == "i":
            return GaussianRational(0, 1)
        raise ParseError(f"unexpected identifier {tok.text!r}", tok.pos, p.text)

    def div(self, a, b, tok, p):
        if b.is_zero():
            raise SemanticError("division by zero", tok.pos, p.text)
        return a / b

    def pow(self, a, e, tok, p):
        if e < 0 and a.is_zero():
            raise SemanticError("zero to a negative power", tok.pos, p.text)
        return a ** e


class _RatDomain(_NumberDomain):
    def lift(self, c):
        return RationalFunction(Poly([c]))

    def ident(self, p, tok):
        if tok.text == "n":
            return RationalFunction.n()
        if tok.text == "i":
            return self.lift(GaussianRational(0, 1))
        raise ParseError(f"unknown identifier {tok.text!r} in rational function", tok.pos, p.text)

    def div(self, a, b, tok, p):
        if b.is_zero():
            raise SemanticError("division by zero", tok.pos, p.text)
        return a / b

    def pow(self, a, e, tok, p):
        if e < 0 and a.is_zero():
            raise SemanticError("zero to a negative power", tok.pos, p.text)
        return a ** e


_SIMPLE_ATOMS = {
    "pi": PI, "log2": LOG2, "sqrt2": SQRT2, "sqrtpi": SQRTPI,
    "gamma14": GAMMA14, "gammaE": EULER_GAMMA, "C": CATALAN,
}


class _FormDomain:
    def lift(self, c):
        return ClosedForm.const(c)

    def ident(self, p, tok):
        name = tok.text
        if name == "i":
            return ClosedForm.const(GaussianRational(0, 1))
        if name in _SIMPLE_ATOMS:
            return ClosedForm.atom(_SIMPLE_ATOMS[name])
        if name in ("zeta", "beta", "li", "imli", "hzeta", "mz", "qmz"):
            groups = p.arg_groups()
            try:
                return ClosedForm.atom(_make_atom(name, groups))
            except (ValueError, TypeError, IndexError) as exc:
                raise SemanticError(f"bad arguments for {name}: {exc}", tok.pos, p.text) from None
        raise ParseError(f"unknown atom {name!r}", tok.pos, p.text)

    def div(self, a, b, tok, p):
        if not b.is_constant() or b.is_zero():
            # weight-0 prefactors may be divided out
            if len(b) == 1:
                (m, c), = b.items()
                if all(at.weight == 0 for at, _ in m):
                    inv = ClosedForm({tuple((at, -e) for at, e in m): 1 / c})
                    return a * inv
            raise SemanticError("division only by constants or weight-0 monomials", tok.pos, p.text)
        return a.scale(1 / b.constant_value())

    def pow(self, a, e, tok, p):
        if e >= 0:
            return a ** e
        if len(a) == 1:
            (m, c), = a.items()
            if all(at.weight == 0 for at, _ in m) and not c.is_zero():
                return ClosedForm({tuple((at, ex * e) for at, ex in m): c ** e})
        raise SemanticError("negative powers only of weight-0 monomials", tok.pos, p.text)


def _ints(group):
    out = []
    for x in group:
        if not isinstance(x, Fraction) or x.denominator != 1:
            raise ValueError(f"expected integer, got {x}")
        out.append(int(x))
    return out


def _make_atom(name, groups) -> Atom:
    if name in ("zeta", "beta", "imli"):
        (n,) = _ints(groups[0])
        if len(groups) != 1:
            raise ValueError("one argument expected")
        return {"zeta": zeta, "beta": beta, "imli": imli}[name](n)
    if name == "li":
        n, half = groups[0]
        if half != Fraction(1, 2) or len(groups) != 1:
            raise ValueError("only li(n,1/2) is supported")
        return li_half(_ints([n])[0])
    if name == "hzeta":
        s, off = groups[0]
        if s != 4 or off not in (Fraction(1, 4), Fraction(3, 4)):
            raise ValueError("only hzeta(4,1/4) and hzeta(4,3/4)")
        return hzeta4(int(off * 4))
    if name == "mz":
        s, signs = _ints(groups[0]), _ints(groups[1])
        if len(groups) != 2:
            raise ValueError("mz(s...;signs...)")
        return mz(s, signs)
    if name == "qmz":
        head = _ints(groups[0])
        if head[0] != 4:
            raise ValueError("only level 4 qmz")
        part = "re"
        if len(groups) == 3:
            if groups[2] not in (["re"], ["im"]):
                raise ValueError("part must be re or im")
            part = groups[2][0]
        elif len(groups) != 2:
            raise ValueError("qmz(4,s...;chars...[;im])")
        return qmz(head[1:], _ints(groups[1]), part)
    raise ValueError(name)


# --------------------------------------------------------------------------
# recursive descent

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, text) -> bool:
        if self.tok.text == text and self.tok.kind != "eof":
            self.i += 1
            return True
        return False

    def expect(self, text) -> _Tok:
        if self.tok.text != text or self.tok.kind == "eof":
            got = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, got {got!r}", self.tok.pos, self.text)
        return self.next()

    def expect_end(self):
        if self.tok.kind != "eof":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos, self.text)

    def signed_int(self) -> int:
        neg = self.accept("-")
        t = self.next()
        if t.kind not in ("num", "int") or not re.fullmatch(r"-?\d+", t.text):
            raise ParseError(f"expected integer, got {t.text!r}", t.pos, self.text)
        v = int(t.text)
        return -v if neg else v

    # expression := term (("+"|"-") term)*
    def expr(self, dom):
        if self.tok.text in ("+", "-"):
            neg = self.next().text == "-"
            val = self.term(dom)
            if neg:
                val = -val
        else:
            val = self.term(dom)
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.next().text
            rhs = self.term(dom)
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_primary(self) -> bool:
        t = self.tok
        return t.kind in ("num", "ident") or t.text == "("

    # term := unary (("*"|"/"|<juxtaposition>) unary)*
    def term(self, dom):
        val = self.unary(dom)
        while True:
            t = self.tok
            if t.text == "*":
                self.next()
                val = val * self.unary(dom)
            elif t.text == "/":
                self.next()
                rhs = self.unary(dom)
                val = dom.div(val, rhs, t, self)
            elif self._starts_primary():
                val = val * self.power(dom)
            else:
                return val

    def unary(self, dom):
        if self.tok.text == "-":
            self.next()
            return -self.unary(dom)
        if self.tok.text == "+":
            self.next()
            return self.unary(dom)
        return self.power(dom)

    def power(self, dom):
        base = self.primary(dom)
        if self.tok.text == "^":
            t = self.next()
            if self.accept("("):
                e = self.signed_int()
                self.expect(")")
            else:
                e = self.signed_int()
            base = dom.pow(base, e, t, self)
        return base

    def primary(self, dom):
        t = self.tok
        if t.kind == "num":
            self.next()
            return dom.lift(_num_value(t.text))
        if t.kind == "ident":
            self.next()
            return dom.ident(self, t)
        if t.text == "(":
            self.next()
            v = self.expr(dom)
            self.expect(")")
            return v
        got = t.text or "end of input"
        raise ParseError(f"unexpected {got!r}", t.pos, self.text)

    def arg_groups(self):
        """``( a, b ; c, d ; ident )`` with signed rationals or bare identifiers."""
        self.expect("(")
        groups = [[]]
        while True:
            t = self.tok
            if t.kind == "ident":
                self.next()
                groups[-1].append(t.text)
            else:
                v = self.expr(_NumberDomain())
                if not v.is_real():
                    raise SemanticError("atom arguments must be real", t.pos, self.text)
                groups[-1].append(v.re)
            if self.accept(","):
                continue
            if self.accept(";"):
                groups.append([])
                continue
            self.expect(")")
            return groups

    # series
    def param_list(self, closers):
        out = []
        if self.tok.text in closers:
            return out
        while True:
            if self.accept("{"):
                v = self.expr(_NumberDomain())
                self.expect("}")
                self.expect("_")
                r = self.signed_int()
                if r < 1:
                    raise SemanticError("repetition count must be >= 1", self.tok.pos, self.text)
                out.extend([v] * r)
            else:
                out.append(self.expr(_NumberDomain()))
            if not self.accept(","):
                return out

    def series(self):
        from .series import SeriesSpec
        pi_pref = False
        if self.tok.text == "pi" and self.toks[self.i + 1].text == "*":
            self.i += 2
            pi_pref = True
        t = self.next()
        if t.text == "pfq":
            self.expect("(")
            top = self.param_list({";"})
            self.expect(";")
            bottom = self.param_list({";"})
            self.expect(";")
            zt = self.tok
            z = self.expr(_NumberDomain())
            if not z.is_real():
                raise SemanticError("argument z must be rational", zt.pos, self.text)
            self.expect(")")
            self.expect_end()
            return SeriesSpec("pfq", tuple(top), tuple(bottom), z=z.re, pi_prefactor=pi_pref)
        if t.text == "binom":
            self.expect("(")
            k = self.signed_int()
            self.expect(";")
            R = self.expr(_RatDomain())
            start, sign = 0, 1
            while self.accept(";"):
                key = self.next()
                self.expect("=")
                if key.text == "start":
                    start = self.signed_int()
                elif key.text == "z":
                    zv = self.signed_int()
                    if zv not in (1, -1):
                        raise SemanticError("binom z must be 1 or -1", key.pos, self.text)
                    sign = zv
                else:
                    raise ParseError(f"unknown option {key.text!r}", key.pos, self.text)
            self.expect(")")
            self.expect_end()
            return SeriesSpec("binom", k=k, R=R, start=start, pi_prefactor=pi_pref, sign=sign)
        raise ParseError(f"expected pfq or binom, got {t.text!r}", t.pos, self.text)


def parse_series(text: str):
    return _Parser(text).series()


def parse_closedform(text: str) -> ClosedForm:
    p = _Parser(text)
    v = p.expr(_FormDomain())
    p.expect_end()
    return v


def parse_ratfunc(text: str) -> RationalFunction:
    p = _Parser(text)
    v = p.expr(_RatDomain())
    p.expect_end()
    return v


def parse_param(text: str) -> GaussianRational:
    p = _Parser(text)
    v = p.expr(_NumberDomain())
    p.expect_end()
    return v


# --------------------------------------------------------------------------
# printers

def format_atom(a: Atom) -> str:
    k, args = a.kind, a.args
    if k == "beta" and args == (2,):
        return "C"
    if not args:
        return k
    if k in ("zeta", "beta", "imli"):
        return f"{k}({args[0]})"
    if k == "li":
        return f"li({args[0]},1/2)"
    if k == "hzeta":
        return f"hzeta(4,{args[0]}/4)"
    if k == "mz":
        s, e = args
        return f"mz({','.join(map(str, s))};{','.join(map(str, e))})"
    s, ch, part = args
    tail = ";im" if part == "im" else ""
    return f"qmz(4,{','.join(map(str, s))};{','.join(map(str, ch))}{tail})"


def _format_mono(m) -> str:
    parts = []
    for a, e in m:
        parts.append(format_atom(a) if e == 1 else f"{format_atom(a)}^{e}")
    return "*".join(parts)


def format_closedform(f: ClosedForm, hurwitz: bool = False) -> str:
    if hurwitz:
        from .canon import to_hurwitz
        f = to_hurwitz(f)
    if f.is_zero():
        return "0"
    out = ""
    for m, c in f.items():
        if c.is_real():
            neg = c.re < 0
            mag = GaussianRational(abs(c.re))
        else:
            neg, mag = False, c
        if not m:
            body = str(mag)
        elif mag == 1:
            body = _format_mono(m)
        else:
            body = f"{mag}*{_format_mono(m)}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def _factor_str(q: int, p: int) -> str:
    """``q*n - p`` printed with integer coefficients."""
    lead = "n" if q == 1 else f"{q}n"
    if p == 0:
        return lead
    return f"{lead} - {p}" if p > 0 else f"{lead} + {-p}"


def format_ratfunc(R: RationalFunction) -> str:
    from .series import lattice_roots
    num, den = R.num, R.den
    if den.deg == 0:
        return format_poly(num)
    roots, rest = lattice_roots(den, 12)
    scale = GaussianRational(1) / rest.lead()
    factors = []
    for r, e in roots:
        q, p = r.re.denominator, r.re.numerator
        scale = scale * GaussianRational(q) ** e
        f = f"({_factor_str(q, p)})"
        factors.append(f if e == 1 else f"{f}^{e}")
    if rest.deg > 0:
        factors.append(f"({format_poly(rest.monic())})")
    num = num * Poly([scale])
    if num.deg == 0:
        ns = str(num.c[0])
        if num.c[0].is_real() and num.c[0].re.denominator != 1:
            ns = f"({ns})"
    else:
        ns = f"({format_poly(num)})"
    ds = "*".join(factors)
    if len(factors) > 1 or "^" in ds:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def format_param(x: GaussianRational) -> str:
    s = str(x)
    return s[1:-1] if s.startswith("(") else s


def _format_params(ps) -> str:
    out = []
    i = 0
    while i < len(ps):
        j = i
        while j < len(ps) and ps[j] == ps[i]:
            j += 1
        s = format_param(ps[i])
        out.append(f"{{{s}}}_{j - i}" if j - i > 1 else s)
        i = j
    return ",".join(out)


def format_series(s) -> str:
    pre = "pi*" if s.pi_prefactor else ""
    if s.form == "pfq":
        return f"{pre}pfq({_format_params(s.top)};{_format_params(s.bottom)};{_frac(s.z)})"
    opts = ""
    if s.start:
        opts += f"; start={s.start}"
    if s.sign == -1:
        opts += "; z=-1"
    return f"{pre}binom({s.k}; {format_ratfunc(s.R)}{opts})"


def _frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
