"""Binding model variables to FD terms and posting relations."""

from ..constraints import CONSTRAINTS, post_eq_vt, post_eq_vv
from ..errors import ClpfdTypeError
from ..propagation import VAL
from .expr import ModelVar, Param, Rel, Temp, deref
from .linearize import Linearizer, linearize


def _record_value(store, x, mv):
    store.trail_setattr(mv, "ground", store.integerize(x))
    return True


def wrapper(store, v):
    """The FD term behind *v*, creating and attaching one on first use."""
    if v.__class__ is int:
        return v
    if not isinstance(v, ModelVar):
        raise ClpfdTypeError(f"cannot wrap {v!r}")
    root = deref(v)
    if root.fd is not None:
        return root.fd
    x = store.new_var(root.name)
    store.trail_setattr(root, "fd", x)
    if not root.hidden:
        store.add_propag(x, VAL, store.propagator(_record_value, x, root, name="integerize"))
    return x


def unify(store, a, b):
    """Make *a* equal to *b* (a model variable or an integer)."""
    if not isinstance(a, ModelVar):
        raise ClpfdTypeError(f"not a model variable: {a!r}")
    a = deref(a)
    if b.__class__ is int:
        if a.fd is None:
            store.trail_setattr(a, "fd", b)
            return True
        return post_eq_vt(store, a.fd, b)
    if not isinstance(b, ModelVar):
        raise ClpfdTypeError(f"type error: {b!r} in =/2")
    b = deref(b)
    if a is b:
        return True
    if a.fd is not None and b.fd is not None:
        if a.fd.__class__ is int:
            return unify(store, b, a.fd)
        if b.fd.__class__ is int:
            return post_eq_vt(store, a.fd, b.fd)
        return post_eq_vv(store, a.fd, b.fd)
    if a.fd is None:
        store.trail_setattr(a, "alias", b)
    else:
        store.trail_setattr(b, "alias", a)
    return True


def run_posts(store, posts, resolve):
    for post in posts:
        if post.name == "false":
            return False
        if not CONSTRAINTS[post.name](store, *[resolve(a) for a in post.args]):
            return False
    return True


def post_rel(store, r: Rel):
    """Linearize *r* and post the result.  ``False`` on failure."""
    return run_posts(store, linearize(r), lambda a: wrapper(store, a))


class Predicate:
    """A conjunction of relations over named parameters, linearized once.

    The body is built from :class:`Param` placeholders, so nothing about the
    actual arguments is known when it is compiled: an argument that will
    always be an integer is still treated as a variable.  Each call binds the
    parameters, creates fresh temporaries and posts the stored constraints.
    """

    def __init__(self, params, body):
        self.params = tuple(Param(p) for p in params)
        rels = body(*self.params)
        if isinstance(rels, Rel):
            rels = [rels]
        lin = Linearizer()
        for r in rels:
            lin.add(r)
        self.posts = tuple(lin.posts)

    def __call__(self, store, *args):
        if len(args) != len(self.params):
            raise TypeError(f"expected {len(self.params)} arguments, got {len(args)}")
        env = dict(zip(self.params, args))

        def resolve(a):
            if a.__class__ is int:
                return a
            if isinstance(a, Param):
                return wrapper(store, env[a])
            if isinstance(a, Temp) and a not in env:
                env[a] = Temp()
            return wrapper(store, env.get(a, a))

        return run_posts(store, self.posts, resolve)

    def __str__(self):
        return "\n".join(map(str, self.posts))


def predicate(*params):
    """Decorator form of :class:`Predicate`."""
    return lambda body: Predicate(params, body)
