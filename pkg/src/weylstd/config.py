"""Run configuration: a flat key = value file.

The format is a TOML-ish subset that stays trivially parseable: one
``key = value`` per line, ``#`` comments, integers, quoted strings, and
flat lists of either.  Example:

    n = 2
    p = [0, -1]
    q = [0, 1]
    tiebreak = "degrevlex"
    var_order = ["x1", "x2", "D1", "D2"]
    field = "rational"      # or "fp(7)"
    degree_cap = 64
    output = "text"

``p``/``q`` are the variable weights (admissible: p_i + q_i >= 0) and
``var_order`` lists all 2n variables from smallest to largest for the
tiebreak order.  Every key except ``n`` has a default; the default
weights are the order filtration (p = 0, q = 1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ConfigError
from .orders import LinearForm, OrderContext, TieBreak, TIEBREAK_KINDS
from .scalars import QQ, PrimeField

_KEYS = ("n", "p", "q", "tiebreak", "var_order", "field", "degree_cap", "output")


@dataclass(frozen=True)
class RunConfig:
    n: int
    p: tuple
    q: tuple
    tiebreak: str = "degrevlex"
    var_order: tuple = None
    field: str = "rational"
    degree_cap: int = 64
    output: str = "text"

    def __post_init__(self):
        if self.var_order is None:
            names = [f"x{i + 1}" for i in range(self.n)]
            names += [f"D{i + 1}" for i in range(self.n)]
            object.__setattr__(self, "var_order", tuple(names))
        _validate(self)

    @classmethod
    def default(cls, n=1):
        return cls(n=n, p=(0,) * n, q=(1,) * n)

    def scalar_field(self):
        if self.field == "rational":
            return QQ
        return PrimeField(int(re.fullmatch(r"fp\((\d+)\)", self.field).group(1)))

    def order_context(self):
        perm = tuple(_flat_index(name, self.n) for name in self.var_order)
        return OrderContext(LinearForm(self.p, self.q), TieBreak(self.tiebreak, perm))


def _flat_index(name, n):
    head, digits = name[:1], name[1:]
    if head in ("x", "D", "d") and digits.isdigit() and 1 <= int(digits) <= n:
        i = int(digits) - 1
        return i if head == "x" else n + i
    raise ConfigError(f"var_order entry {name!r} is not a variable for n = {n}")


def _validate(cfg):
    if not isinstance(cfg.n, int) or cfg.n < 1:
        raise ConfigError(f"n must be a natural number >= 1, got {cfg.n!r}")
    for key in ("p", "q"):
        vec = getattr(cfg, key)
        if len(vec) != cfg.n or not all(isinstance(e, int) for e in vec):
            raise ConfigError(f"{key} must be a list of {cfg.n} integers, got {vec!r}")
    for i, (pi, qi) in enumerate(zip(cfg.p, cfg.q)):
        if pi + qi < 0:
            raise ConfigError(f"weights not admissible: p[{i}] + q[{i}] = {pi + qi} < 0")
    if cfg.tiebreak not in TIEBREAK_KINDS:
        raise ConfigError(f"tiebreak must be one of {TIEBREAK_KINDS}, got {cfg.tiebreak!r}")
    if len(cfg.var_order) != 2 * cfg.n:
        raise ConfigError(f"var_order must list all {2 * cfg.n} variables")
    if sorted(_flat_index(v, cfg.n) for v in cfg.var_order) != list(range(2 * cfg.n)):
        raise ConfigError("var_order must mention every variable exactly once")
    if cfg.field != "rational" and not re.fullmatch(r"fp\(\d+\)", cfg.field):
        raise ConfigError(f"field must be \"rational\" or \"fp(prime)\", got {cfg.field!r}")
    if cfg.field != "rational":
        cfg.scalar_field()  # raises ConfigError if the modulus is not prime
    if not isinstance(cfg.degree_cap, int) or cfg.degree_cap < 0:
        raise ConfigError(f"degree_cap must be a natural number, got {cfg.degree_cap!r}")
    if cfg.output not in ("text", "json"):
        raise ConfigError(f"output must be \"text\" or \"json\", got {cfg.output!r}")


def load_config(path) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from None

    raw = {}
    for lineno, line in enumerate(lines, start=1):
        stripped = _strip_comment(line).strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in _KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        raw[key] = _parse_value(value.strip(), f"{path}:{lineno}")

    if "n" not in raw:
        raise ConfigError(f"{path}: missing required key 'n'")
    n = raw["n"]
    if not isinstance(n, int) or n < 1:
        raise ConfigError(f"{path}: n must be a natural number >= 1")
    raw.setdefault("p", [0] * n)
    raw.setdefault("q", [1] * n)
    for key in ("p", "q", "var_order"):
        if key in raw:
            if not isinstance(raw[key], list):
                raise ConfigError(f"{path}: {key} must be a list")
            raw[key] = tuple(raw[key])
    return RunConfig(**raw)


def _strip_comment(line):
    quoted = False
    for i, ch in enumerate(line):
        if ch == '"':
            quoted = not quoted
        elif ch == "#" and not quoted:
            return line[:i]
    return line


def _parse_value(text, where):
    if text.startswith("[") and text.endswith("]"):
        body = text[1:-1].strip()
        if not body:
            return []
        return [_parse_scalar(part.strip(), where) for part in body.split(",")]
    return _parse_scalar(text, where)


def _parse_scalar(text, where):
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1]
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{where}: cannot parse value {text!r}") from None
