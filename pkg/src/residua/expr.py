"""Parser for formation expressions such as ``meet(nilpotent, sylwk(supersoluble, 2 3))``.

    expr := NAME | NAME(prime) | meet(expr, expr) | join(expr, expr)
          | not(expr) | quasi(expr) | sylw(expr, primes) | sylwk(expr, primes)

Whitespace is ignored between tokens; error offsets count UTF-8 bytes.
"""

import re

from .errors import InputError
from . import formations as fm

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\d+)|([(),])|(\S))")

COMBINATORS = ("meet", "join", "not", "quasi", "sylw", "sylwk")


class ExprError(InputError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos and not m.group(0):
                break
            if not m.group(0).strip():
                break
            kind = "name" if m.group(1) else "int" if m.group(2) else "punct" if m.group(3) else "bad"
            start = m.start(m.lastindex)
            self.tokens.append((kind, m.group(m.lastindex), self._bytes(start)))
            pos = m.end()
        self.end = self._bytes(len(text))
        self.i = 0

    def _bytes(self, index):
        return len(self.text[:index].encode("utf-8"))

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", self.end)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] == "bad":
            raise ExprError(f"unexpected character {tok[1]!r}", tok[2])
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = repr(value) if value else kind
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ExprError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if not self.text.strip():
            raise ExprError("empty formation expression", 0)
        f = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ExprError(f"trailing input {tok[1]!r}", tok[2])
        return f

    def prime(self):
        _, value, off = self.take("int")
        p = int(value)
        from .groups import is_prime

        if not is_prime(p):
            raise ExprError(f"{p} is not a prime", off)
        return p

    def expr(self):
        _, name, off = self.take("name")
        has_args = self.peek()[1] == "("
        if name in ("meet", "join"):
            self.take(value="(")
            a = self.expr()
            self.take(value=",")
            b = self.expr()
            self.take(value=")")
            return self._wrap(fm.meet if name == "meet" else fm.join_formations, off, a, b)
        if name in ("not", "quasi"):
            self.take(value="(")
            a = self.expr()
            self.take(value=")")
            return self._wrap(fm.complement if name == "not" else fm.quasi, off, a)
        if name in ("sylw", "sylwk"):
            from .subnormal import sylow_subnorm_class

            self.take(value="(")
            a = self.expr()
            self.take(value=",")
            primes = [self.prime()]
            while self.peek()[0] == "int":
                primes.append(self.prime())
            self.take(value=")")
            return self._wrap(sylow_subnorm_class, off, a, set(primes), "k" if name == "sylwk" else "f")
        if name not in fm.BUILTIN_NAMES:
            raise ExprError(f"unknown formation {name!r}", off)
        if name in fm.PARAMETRIZED:
            if not has_args:
                raise ExprError(f"{name} needs a prime argument", off)
            self.take(value="(")
            p = self.prime()
            self.take(value=")")
            return fm.builtin(name, p)
        if has_args:
            raise ExprError(f"{name} takes no arguments", self.peek()[2])
        return fm.builtin(name)

    @staticmethod
    def _wrap(fn, off, *args):
        try:
            return fn(*args)
        except InputError as e:
            raise ExprError(str(e), off) from None


def parse_formation(text):
    """Parse an expression into a formation object (ChiefFunction or Sylow class)."""
    return _Parser(text).parse()
