"""Python front-end for the filtadm core.

Rationals come back as fractions.Fraction; command reports come back as dicts
with the timing field removed so they compare equal across runs.
"""

import json
from fractions import Fraction

from . import _core

__all__ = ["run", "t_n", "is_special", "solve_t", "omega", "weighted_inequality"]


def _text(obj):
    if obj is None:
        return ""
    if isinstance(obj, str):
        return obj
    return json.dumps(obj)


def _frac(s):
    return Fraction(s)


def _strs(xs):
    return [str(Fraction(x)) for x in xs]


def run(command, spec=None, weights=None, seed=0, no_modify=False, trials=10000, cap=None):
    """Run a CLI subcommand in-process. Returns (exit_code, report)."""
    code, text = _core.run(command, _text(spec), _text(weights), seed, no_modify, trials, cap)
    return code, json.loads(text)


def t_n(spec):
    return _frac(_core.t_n(_text(spec)))


def is_special(a, c):
    return _core.is_special(_strs(a), _strs(c))


def solve_t(a, c):
    t, r = _core.solve_t(_strs(a), _strs(c))
    return [_frac(x) for x in t], _frac(r)


def omega(a, c):
    return list(_core.omega(_strs(a), _strs(c)))


def weighted_inequality(omega_set, m, n):
    status, lhs, rhs = _core.weighted_inequality(list(omega_set), _strs(m), _strs(n))
    return status, _frac(lhs), _frac(rhs)
