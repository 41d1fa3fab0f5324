"""Catalogue of two-qutrit support patterns with their geometry and maxima.

One :class:`TableRow` per inequivalent few-term state family, from two to
six nonzero coefficients. Coefficients are named by position in the
coefficient matrix::

    a b c
    p q r
    x y z

Each row carries a concrete example state (``example``), the class and
orthogonal-pair count that example must produce, and the maximization
target over the support: the largest value, whether it is reached inside
the support, and which coefficients must vanish when it is not.
"""

from dataclasses import dataclass, field

from .classify import EntanglementClass
from .states import PureState

__all__ = ["NAMES", "INDEX", "TableRow", "ROWS", "row", "support_of"]

NAMES = "abcpqrxyz"
INDEX = {name: divmod(k, 3) for k, name in enumerate(NAMES)}

I, II, III = EntanglementClass.TYPE_I, EntanglementClass.TYPE_II, EntanglementClass.TYPE_III

# generic values for otherwise unspecified coefficients
GENERIC = {
    "a": 0.71 + 0.23j,
    "b": -0.42 + 0.55j,
    "c": 0.37 - 0.61j,
    "p": 0.58 + 0.19j,
    "q": -0.33 - 0.47j,
    "r": 0.64 + 0.08j,
    "x": -0.26 + 0.69j,
    "y": 0.49 - 0.36j,
    "z": 0.83 + 0.12j,
}


def support_of(names):
    return tuple(sorted(INDEX[n] for n in names))


@dataclass(frozen=True)
class TableRow:
    key: str
    names: str
    ent_class: EntanglementClass
    op: int
    op_listed: tuple
    max_value: float
    attained: bool
    vanishing: str = ""
    # squared norms of the three post-measurement vectors at the optimum
    norms_at_max: tuple = ()
    overrides: dict = field(default_factory=dict)

    @property
    def support(self):
        return support_of(self.names)

    @property
    def vanishing_indices(self):
        return frozenset(INDEX[n] for n in self.vanishing)

    @property
    def example(self):
        terms = {INDEX[n]: self.overrides.get(n, GENERIC[n]) for n in self.names}
        return PureState.from_terms((3, 3), terms)


ROWS = (
    TableRow("T1.1", "aq", I, 1, (1,), 0.5, True, norms_at_max=(0.5, 0.5, 0.0)),
    TableRow("T2.1", "aqz", II, 3, (3,), 1.0, True, norms_at_max=(1 / 3,) * 3),
    TableRow("T2.2", "abp", I, 0, (0,), 0.5, False, "a", (0.5, 0.5, 0.0)),
    # printed ket and decomposition disagree; only {a,b,z} fits Op=1 with an attained 1/2
    TableRow("T2.3", "abz", I, 1, (1,), 0.5, True, norms_at_max=(0.5, 0.0, 0.5)),
    TableRow("T3.1", "abcp", I, 0, (0,), 0.5, False, "a", (0.5, 0.5, 0.0)),
    TableRow("T3.2", "abpr", I, 0, (0,), 0.5, False, "p", (0.5, 0.5, 0.0)),
    TableRow("T3.3", "abpz", III, 2, (2,), 1.0, False, "a", (1 / 3,) * 3),
    TableRow("T3.4", "abpq", I, 0, (0, 1), 0.5, True, norms_at_max=(0.5, 0.5, 0.0)),
    TableRow("T3.5", "abrz", I, 2, (2,), 0.5, True),
    TableRow("T4.1", "abcpq", I, 0, (0, 1), 0.5, True, norms_at_max=(0.5, 0.5, 0.0)),
    TableRow("T4.2", "abpqz", III, 2, (2, 3), 1.0, True, norms_at_max=(1 / 3,) * 3),
    # listed Op=2 holds only on the a = 0 face the row maximizes towards
    TableRow("T4.3", "abcpx", I, 2, (2,), 0.5, False, "a", overrides={"a": 0}),
    TableRow("T4.4", "abcpy", III, 1, (1,), 1.0, False, "ab", (1 / 3,) * 3),
    TableRow("T4.5", "abpry", III, 1, (1,), 1.0, False, "bp", (1 / 3,) * 3),
    TableRow("T4.6", "abprz", III, 1, (1,), 1.0, False, "ar", (1 / 3,) * 3),
    TableRow("T5.1", "abcpqr", I, 0, (0, 1), 0.5, True, norms_at_max=(0.5, 0.5, 0.0)),
    # the remark's vanishing "x" is not in the support; z is the third one
    TableRow("T5.2", "abpryz", III, 0, (0,), 1.0, False, "bpz", (1 / 3,) * 3),
    TableRow("T5.3", "abcpqx", III, 0, (0, 1), 1.0, False, "abp", (1 / 3,) * 3),
    TableRow("T5.4", "abcpqz", III, 1, (1, 2), 1.0, False, "c", (1 / 3,) * 3),
)


def row(key):
    for r in ROWS:
        if r.key == key:
            return r
    raise KeyError(key)
