"""Library of FD constraints.

Most members are indexical definitions compiled from ``library.fdi``; they
are available by name in :data:`LIBRARY` and through the ``post_*`` helpers.
Names follow the convention where ``t`` marks an integer argument, e.g.
``'a<>b+t'(A, B, T)`` posts ``A != B + T``.
"""

from importlib import resources

from ..errors import ContractError
from ..indexicals import compile_indexicals
from . import kernel


def _load_library():
    text = resources.files(__package__).joinpath("library.fdi").read_text()
    return compile_indexicals(text, "library.fdi")


#: Compiled indexical constraints keyed by name.
LIBRARY = _load_library()


def post_domain(store, terms, lo, hi):
    """Restrict every term in *terms* to ``lo..hi``."""
    if lo > hi:
        raise ContractError(f"empty domain {lo}..{hi}")
    r = store.kind.interval(lo, hi)
    if r is None:
        return not terms
    for t in terms:
        if not store.tell_range(t, r):
            return False
    return True


def post_eq_vv(store, a, b):
    return LIBRARY["a=b"].post(store, a, b)


def post_eq_vt(store, a, n):
    return store.tell_value(a, n)


def post_neq_vv(store, a, b):
    return LIBRARY["a<>b"].post(store, a, b)


def post_neq_vt(store, a, n):
    return LIBRARY["a<>t"].post(store, a, n)


def post_neq_v_vt(store, a, b, n):
    """``a != b + n``."""
    return LIBRARY["a<>b+t"].post(store, a, b, n)


def post_sum_neq(store, a, b, c):
    """``a + b != c``."""
    return LIBRARY["a+b<>c"].post(store, a, b, c)


def post_plus_eq(store, a, b, c):
    """``a = b + c``."""
    return LIBRARY["a=b+c"].post(store, a, b, c)


def post_plus_eq_t(store, a, b, n):
    """``a = b + n``."""
    return LIBRARY["a=b+t"].post(store, a, b, n)


def post_lt(store, a, b):
    if b.__class__ is int:
        return LIBRARY["a<t"].post(store, a, b)
    if a.__class__ is int:
        return LIBRARY["a>t"].post(store, b, a)
    return LIBRARY["a<b"].post(store, a, b)


def post_le(store, a, b):
    if b.__class__ is int:
        return LIBRARY["a<=t"].post(store, a, b)
    if a.__class__ is int:
        return LIBRARY["a>=t"].post(store, b, a)
    return LIBRARY["a<=b"].post(store, a, b)


def post_le_offset(store, a, b, n):
    """``a <= b + n``."""
    return LIBRARY["a<=b+t"].post(store, a, b, n)


#: Every constraint name usable by the model compiler, mapped to a poster
#: ``fn(store, *args)``.  Mirrored spellings permute their arguments.
CONSTRAINTS = {name: compiled.post for name, compiled in LIBRARY.items()}
CONSTRAINTS.update({
    "a=t": post_eq_vt,
    "a+b=c": lambda store, a, b, c: post_plus_eq(store, c, a, b),
    "a+t=c": lambda store, a, t, c: post_plus_eq_t(store, c, a, t),
    "t<a": lambda store, t, a: LIBRARY["a>t"].post(store, a, t),
    "t<=a": lambda store, t, a: LIBRARY["a>=t"].post(store, a, t),
    "a<>b/kernel": kernel.neq,
    "a<>b+t/kernel": kernel.neq_offset,
})

__all__ = [
    "CONSTRAINTS", "LIBRARY", "kernel", "post_domain", "post_eq_vt", "post_eq_vv",
    "post_le", "post_le_offset", "post_lt", "post_neq_v_vt", "post_neq_vt", "post_neq_vv",
    "post_plus_eq", "post_plus_eq_t", "post_sum_neq",
]
