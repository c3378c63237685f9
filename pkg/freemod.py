"""
Sparse integer linear combinations for hopfwords

An Elem maps basis keys to nonzero integer coefficients. Keys are words
(tuples of positive integers), substitutions (objects with a ``sort_key``
method) or plain tuples such as compositions. A TensorElem is the same
thing over tuples of keys, one per tensor factor.
"""
from collections.abc import Mapping

import config


class CoefficientOverflowError(ArithmeticError):
    """Raised when a coefficient leaves the checked signed integer range"""


def check_coefficient(value):
    """Return value if it fits the configured coefficient width"""
    if not -config.COEFFICIENT_LIMIT <= value < config.COEFFICIENT_LIMIT:
        raise CoefficientOverflowError(
            f"Coefficient {value} exceeds the {config.COEFFICIENT_BITS}-bit range")
    return value


def basis_order(key):
    """Sort key for a basis key: words by length then lexicographically"""
    sort_key = getattr(key, 'sort_key', None)
    if sort_key is not None:
        return sort_key()
    if isinstance(key, tuple):
        return (len(key), key)
    return (1, (key,))


def _normalize_key(key):
    if isinstance(key, list):
        return tuple(key)
    return key


def _accumulate(acc, key, coeff):
    if coeff == 0:
        return
    total = check_coefficient(acc.get(key, 0) + coeff)
    if total:
        acc[key] = total
    else:
        del acc[key]


class Elem(Mapping):
    """An immutable finite integer combination of basis keys"""
    __slots__ = ('_terms', '_ordered', '_hash')

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            _accumulate(acc, self.normalize_key(key), check_coefficient(int(coeff)))
        self._terms = acc
        self._ordered = None
        self._hash = None

    @classmethod
    def _from_dict(cls, acc):
        obj = cls.__new__(cls)
        obj._terms = acc
        obj._ordered = None
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._from_dict({})

    @classmethod
    def basis(cls, key, coeff=1):
        return cls([(key, coeff)])

    @staticmethod
    def normalize_key(key):
        return _normalize_key(key)

    @staticmethod
    def order_key(key):
        return basis_order(key)

    # Mapping protocol, in canonical key order
    def __getitem__(self, key):
        return self._terms[self.normalize_key(key)]

    def __iter__(self):
        if self._ordered is None:
            self._ordered = tuple(sorted(self._terms, key=self.order_key))
        return iter(self._ordered)

    def __len__(self):
        return len(self._terms)

    def __contains__(self, key):
        return self.normalize_key(key) in self._terms

    def coefficient(self, key):
        return self._terms.get(self.normalize_key(key), 0)

    def support(self):
        return frozenset(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int) and other == 0:
            return type(self).zero()
        if not isinstance(other, Elem):
            return None
        if isinstance(other, TensorElem) != isinstance(self, TensorElem):
            raise TypeError("Cannot combine an Elem with a TensorElem")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(acc, key, coeff)
        return type(self)._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_dict({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        return scale(n, self)

    __rmul__ = __mul__

    def homogeneous_components(self, degree):
        """Split into {degree: component} using the given degree function"""
        parts = {}
        for key, coeff in self._terms.items():
            parts.setdefault(degree(key), {})[key] = coeff
        return {d: type(self)._from_dict(acc) for d, acc in sorted(parts.items())}

    def map_keys(self, f):
        """Linear extension of a key-to-key map"""
        acc = {}
        for key, coeff in self._terms.items():
            _accumulate(acc, self.normalize_key(f(key)), coeff)
        return type(self)._from_dict(acc)

    def to_dict(self):
        return {"terms": [{"coeff": coeff, "key": key_to_json(key)}
                          for key, coeff in self.items()]}

    def __repr__(self):
        inner = ", ".join(f"{key!r}: {coeff}" for key, coeff in self.items())
        return f"{type(self).__name__}({{{inner}}})"

    def __str__(self):
        return format_elem(self)


class TensorElem(Elem):
    """An Elem whose keys are tuples of basis keys, one per tensor factor"""
    __slots__ = ()

    @staticmethod
    def normalize_key(key):
        return tuple(_normalize_key(k) for k in key)

    @staticmethod
    def order_key(key):
        return tuple(basis_order(k) for k in key)

    def flip(self):
        return self.map_keys(lambda key: tuple(reversed(key)))

    def to_dict(self):
        return {"terms": [{"coeff": coeff, "key": [key_to_json(k) for k in key]}
                          for key, coeff in self.items()]}


def add(a, b):
    return a + b


def scale(n, a):
    if n == 0:
        return type(a).zero()
    check_coefficient(n)
    return type(a)._from_dict({k: check_coefficient(n * c) for k, c in a.items()})


def linear_extend(f, a, kind=None):
    """Σ coeff(k)·f(k) for a basis-level map f returning Elems"""
    acc = {}
    for key, coeff in a.items():
        image = f(key)
        if kind is None:
            kind = type(image)
        for key2, coeff2 in image.items():
            _accumulate(acc, key2, check_coefficient(coeff * coeff2))
    return (kind or Elem)._from_dict(acc)


def bilinear_extend(f, a, b, kind=None):
    """Σ coeff_a(k)·coeff_b(k')·f(k, k') for a basis-level map f"""
    acc = {}
    for key_a, coeff_a in a.items():
        for key_b, coeff_b in b.items():
            image = f(key_a, key_b)
            if kind is None:
                kind = type(image)
            coeff = check_coefficient(coeff_a * coeff_b)
            for key, c in image.items():
                _accumulate(acc, key, check_coefficient(coeff * c))
    return (kind or Elem)._from_dict(acc)


def tensor(*factors):
    """Tensor product of Elems as a TensorElem"""
    terms = {(): 1}
    for factor in factors:
        nxt = {}
        for key, coeff in terms.items():
            for key2, coeff2 in factor.items():
                _accumulate(nxt, key + (key2,), check_coefficient(coeff * coeff2))
        terms = nxt
    return TensorElem._from_dict(terms)


def tensor_map(maps, t):
    """Apply f1⊗f2⊗... factorwise; each fi is a basis-level map to Elems"""
    acc = {}
    for key, coeff in t.items():
        images = tensor(*(f(k) for f, k in zip(maps, key)))
        for key2, coeff2 in images.items():
            _accumulate(acc, key2, check_coefficient(coeff * coeff2))
    return TensorElem._from_dict(acc)


def tensor_multiply(product, s, t):
    """(m⊗m)∘(id⊗tw⊗id) applied to s⊗t for two 2-tensors"""
    acc = {}
    for (a1, a2), c1 in s.items():
        for (b1, b2), c2 in t.items():
            images = tensor(product(a1, b1), product(a2, b2))
            coeff = check_coefficient(c1 * c2)
            for key, c in images.items():
                _accumulate(acc, key, check_coefficient(coeff * c))
    return TensorElem._from_dict(acc)


def contract(f, t, kind=None):
    """Apply a bilinear basis-level map f(k1, k2) to a 2-tensor"""
    acc = {}
    for (k1, k2), coeff in t.items():
        image = f(k1, k2)
        if kind is None:
            kind = type(image)
        for key, c in image.items():
            _accumulate(acc, key, check_coefficient(coeff * c))
    return (kind or Elem)._from_dict(acc)


def format_key(key):
    """Text form of a basis key: [1,2], (top | bottom) or factors joined by ⊗"""
    render = getattr(key, 'render', None)
    if render is not None:
        return render()
    if isinstance(key, tuple):
        return "[" + ",".join(str(letter) for letter in key) + "]"
    return str(key)


def format_elem(elem):
    """Text form of an Elem or TensorElem, e.g. 2[1,1,2] - [1,2,1]"""
    if not elem:
        return "0"
    tensorial = isinstance(elem, TensorElem)
    pieces = []
    for key, coeff in elem.items():
        text = " ⊗ ".join(format_key(k) for k in key) if tensorial else format_key(key)
        if tensorial and len(key) > 1 and abs(coeff) != 1:
            text = "(" + text + ")"
        magnitude = "" if abs(coeff) == 1 else str(abs(coeff))
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + magnitude + text)
        else:
            pieces.append(("- " if coeff < 0 else "+ ") + magnitude + text)
    return " ".join(pieces)


def key_to_json(key):
    to_json = getattr(key, 'to_json', None)
    if to_json is not None:
        return to_json()
    if isinstance(key, tuple):
        return list(key)
    return key
