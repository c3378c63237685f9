"""
Generic Hopf algebra harness for hopfwords

A HopfDef bundles the basis-level structure maps of one algebra. Everything
here works on any HopfDef: linear extension of the structure maps, the
antipode of a connected graded bialgebra, and the exhaustive law checkers
that return a Report carrying the first counterexample.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from freemod import Elem, TensorElem, basis_order, bilinear_extend, format_elem, format_key, linear_extend, \
    tensor_map, tensor_multiply
from logging_manager import add_log


class EnumerationCapError(ValueError):
    """Raised when an infinite-rank basis is enumerated without a size cap"""


@dataclass(frozen=True, eq=False)
class HopfDef:
    """Basis-level description of a connected graded bialgebra"""
    name: str
    degree: Callable[[Any], int]
    enumerate: Callable[[int, Any], list]
    coproduct: Callable[[Any], TensorElem]
    product: Optional[Callable[[Any, Any], Elem]] = None
    unit: Any = ()
    counit: Optional[Callable[[Any], int]] = None
    size: Optional[Callable[[Any], int]] = None
    finite_rank: bool = True
    antipode_cache: dict = field(default_factory=dict, repr=False)

    def epsilon(self, key):
        if self.counit is not None:
            return self.counit(key)
        return 1 if key == self.unit else 0

    def measure(self, key):
        return (self.size or self.degree)(key)

    def unit_elem(self):
        return Elem.basis(self.unit)


@dataclass
class Report:
    """Outcome of one verification run"""
    suite: str
    subject: str
    bound: Any = None
    cases_run: int = 0
    passed: bool = True
    counterexample: Optional[dict] = None
    notes: list = field(default_factory=list)

    def record_failure(self, law, inputs, lhs, rhs):
        self.passed = False
        self.counterexample = {"law": law, "inputs": list(inputs), "lhs": lhs, "rhs": rhs}

    def expect(self, law, inputs, lhs, rhs):
        """Count one case; record it as the counterexample if the sides differ"""
        self.cases_run += 1
        if lhs != rhs:
            self.record_failure(law, inputs, lhs, rhs)
            return False
        return True

    def merge(self, other):
        """Fold a sub-report into this one, keeping the first failure"""
        self.cases_run += other.cases_run
        self.notes.extend(other.notes)
        if not other.passed and self.passed:
            self.passed = False
            self.counterexample = dict(other.counterexample or {})
            self.counterexample.setdefault("law", other.suite)
        return self.passed

    @property
    def witness(self):
        """Inputs of the counterexample, or None"""
        if self.counterexample is None:
            return None
        return self.counterexample["inputs"]

    def to_dict(self):
        record = {"suite": self.suite, "subject": self.subject, "bound": self.bound,
                  "cases_run": self.cases_run, "passed": self.passed, "notes": list(self.notes),
                  "counterexample": None}
        if self.counterexample is not None:
            ce = self.counterexample
            record["counterexample"] = {
                "law": ce["law"],
                "inputs": [_json_value(x) for x in ce["inputs"]],
                "lhs": _json_value(ce["lhs"]),
                "rhs": _json_value(ce["rhs"]),
                "difference": _json_value(_difference(ce["lhs"], ce["rhs"])),
            }
        return record

    def render(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [f"[{status}] {self.suite}: {self.subject} (bound {self.bound}) - {self.cases_run} cases"]
        for note in self.notes:
            lines.append(f"  note: {note}")
        if self.counterexample is not None:
            ce = self.counterexample
            lines.append(f"  law: {ce['law']}")
            lines.append("  inputs: " + ", ".join(_text_value(x) for x in ce["inputs"]))
            lines.append(f"  lhs: {_text_value(ce['lhs'])}")
            lines.append(f"  rhs: {_text_value(ce['rhs'])}")
            lines.append(f"  difference: {_text_value(_difference(ce['lhs'], ce['rhs']))}")
        return "\n".join(lines)


def _difference(lhs, rhs):
    if isinstance(lhs, Elem) and isinstance(rhs, Elem):
        return lhs - rhs
    if isinstance(lhs, int) and isinstance(rhs, int):
        return lhs - rhs
    return None


def _text_value(value):
    if isinstance(value, Elem):
        return format_elem(value)
    if isinstance(value, (int, str)) or value is None:
        return str(value)
    return format_key(value)


def _json_value(value):
    if isinstance(value, Elem):
        return value.to_dict()
    if isinstance(value, (int, str)) or value is None:
        return value
    return _text_value(value)


# Linear extensions of the structure maps

def mul(H, x, y):
    if H.product is None:
        raise ValueError(f"{H.name} has no product")
    return bilinear_extend(H.product, x, y, kind=Elem)


def comul(H, x):
    return linear_extend(H.coproduct, x, kind=TensorElem)


def counit(H, x):
    return sum(coeff * H.epsilon(key) for key, coeff in x.items())


def apply_map(f, x):
    """Linear extension of a basis-level map f: key -> Elem"""
    return linear_extend(f, x, kind=Elem)


def pair(P, a, b):
    """Bilinear extension of a basis-level pairing"""
    return sum(ca * cb * P(ka, kb) for ka, ca in a.items() for kb, cb in b.items())


def pair_tensor(P, s, t):
    """Pairing of 2-tensors, factor by factor"""
    total = 0
    for (a1, a2), ca in s.items():
        for (b1, b2), cb in t.items():
            value = P(a1, b1)
            if value:
                total += ca * cb * value * P(a2, b2)
    return total


def enumerate_basis(H, bound, cap=None):
    """All basis keys of size at most bound, ordered by size then basis order"""
    if not H.finite_rank and cap is None:
        raise EnumerationCapError(
            f"{H.name} has infinite-rank homogeneous components; an enumeration cap is required")
    keys = list(H.enumerate(bound, cap))
    return sorted(keys, key=lambda k: (H.measure(k), basis_order(k)))


# Antipode

def antipode_of_key(H, key):
    """S(1) = 1 and S(x) = -x - Σ S(x')x'' over the non-trivial coproduct terms"""
    cache = H.antipode_cache
    if key in cache:
        return cache[key]
    if H.product is None:
        raise ValueError(f"{H.name} has no product, so no antipode")
    result = Elem.basis(key)
    if H.degree(key) > 0:
        result = -result
        for (left, right), coeff in H.coproduct(key).items():
            if H.degree(left) == 0 or H.degree(right) == 0:
                continue
            result = result - coeff * mul(H, antipode_of_key(H, left), Elem.basis(right))
    cache[key] = result
    return result


def antipode(H, x):
    return linear_extend(lambda key: antipode_of_key(H, key), x, kind=Elem)


# Checkers

def _pairs(H, keys, bound):
    return [(x, y) for x in keys for y in keys if H.measure(x) + H.measure(y) <= bound]


def _triples(H, keys, bound):
    return [(x, y, z) for x in keys for y in keys for z in keys
            if H.measure(x) + H.measure(y) + H.measure(z) <= bound]


def _comul_left(H, t):
    """(Δ⊗id) applied to a 2-tensor"""
    acc = {}
    for (k1, k2), coeff in t.items():
        for (a, b), c in H.coproduct(k1).items():
            acc[(a, b, k2)] = acc.get((a, b, k2), 0) + coeff * c
    return TensorElem(acc)


def _comul_right(H, t):
    """(id⊗Δ) applied to a 2-tensor"""
    acc = {}
    for (k1, k2), coeff in t.items():
        for (a, b), c in H.coproduct(k2).items():
            acc[(k1, a, b)] = acc.get((k1, a, b), 0) + coeff * c
    return TensorElem(acc)


def _counit_left(H, t):
    acc = {}
    for (k1, k2), coeff in t.items():
        acc[k2] = acc.get(k2, 0) + coeff * H.epsilon(k1)
    return Elem(acc)


def _counit_right(H, t):
    acc = {}
    for (k1, k2), coeff in t.items():
        acc[k1] = acc.get(k1, 0) + coeff * H.epsilon(k2)
    return Elem(acc)


def _start(suite, subject, bound):
    add_log(f"Checking {suite} for {subject} up to {bound}")
    return Report(suite=suite, subject=subject, bound=bound)


def finish(report):
    """Log the outcome of a report and return it"""
    if report.passed:
        add_log(f"{report.suite} passed for {report.subject}: {report.cases_run} cases")
    else:
        add_log(f"{report.suite} failed for {report.subject}: {report.counterexample['law']} "
                f"at {', '.join(_text_value(x) for x in report.counterexample['inputs'])}", "warning")
    return report


def _check_coalgebra_laws(H, keys, report):
    unit_keys = [k for k in keys if H.degree(k) == 0]
    if not report.expect("connectedness", unit_keys, unit_keys, [H.unit]):
        return False
    if not report.expect("counit on unit", [H.unit], H.epsilon(H.unit), 1):
        return False
    for x in keys:
        if H.degree(x) > 0 and not report.expect("counit vanishes in positive degree", [x],
                                                H.epsilon(x), 0):
            return False
        delta = H.coproduct(x)
        bad = TensorElem({key: c for key, c in delta.items()
                          if H.degree(key[0]) + H.degree(key[1]) != H.degree(x)})
        if not report.expect("coproduct degree compatibility", [x], bad, TensorElem.zero()):
            return False
        elem = Elem.basis(x)
        if not report.expect("left counitality", [x], _counit_left(H, delta), elem):
            return False
        if not report.expect("right counitality", [x], _counit_right(H, delta), elem):
            return False
        if not report.expect("coassociativity", [x], _comul_left(H, delta), _comul_right(H, delta)):
            return False
    return True


def _check_algebra_laws(H, keys, report, bound, triple_bound):
    one = H.unit_elem()
    for x in keys:
        elem = Elem.basis(x)
        if not report.expect("left unitality", [x], mul(H, one, elem), elem):
            return False
        if not report.expect("right unitality", [x], mul(H, elem, one), elem):
            return False
    for x, y in _pairs(H, keys, bound):
        product = H.product(x, y)
        expected = H.degree(x) + H.degree(y)
        bad = Elem({key: c for key, c in product.items() if H.degree(key) != expected})
        if not report.expect("product degree additivity", [x, y], bad, Elem.zero()):
            return False
        lhs = comul(H, product)
        rhs = tensor_multiply(H.product, H.coproduct(x), H.coproduct(y))
        if not report.expect("Hopf compatibility", [x, y], lhs, rhs):
            return False
    for x, y, z in _triples(H, keys, triple_bound):
        lhs = mul(H, H.product(x, y), Elem.basis(z))
        rhs = mul(H, Elem.basis(x), H.product(y, z))
        if not report.expect("associativity", [x, y, z], lhs, rhs):
            return False
    return True


def check_bialgebra(H, bound, cap=None, triple_bound=None):
    """Exhaustively check the bialgebra axioms on basis keys within bound"""
    report = _start("bialgebra", H.name, bound)
    keys = enumerate_basis(H, bound, cap)
    if _check_coalgebra_laws(H, keys, report) and H.product is not None:
        _check_algebra_laws(H, keys, report, bound, bound if triple_bound is None else triple_bound)
    if H.product is None:
        report.notes.append("coalgebra only: algebra axioms skipped")
    return finish(report)


def check_antipode(H, bound, cap=None):
    """m(S⊗id)Δ = eε = m(id⊗S)Δ on every basis key within bound"""
    report = _start("antipode", H.name, bound)
    for x in enumerate_basis(H, bound, cap):
        delta = H.coproduct(x)
        expected = H.epsilon(x) * H.unit_elem()
        left = Elem.zero()
        right = Elem.zero()
        for (a, b), coeff in delta.items():
            left = left + coeff * mul(H, antipode_of_key(H, a), Elem.basis(b))
            right = right + coeff * mul(H, Elem.basis(a), antipode_of_key(H, b))
        if not report.expect("m(S⊗id)Δ = eε", [x], left, expected):
            break
        if not report.expect("m(id⊗S)Δ = eε", [x], right, expected):
            break
    return finish(report)


def check_antimorphism(H, bound, cap=None):
    """S(xy) = S(y)S(x) on pairs within bound"""
    report = _start("antipode antimorphism", H.name, bound)
    keys = enumerate_basis(H, bound, cap)
    for x, y in _pairs(H, keys, bound):
        lhs = antipode(H, H.product(x, y))
        rhs = mul(H, antipode_of_key(H, y), antipode_of_key(H, x))
        if not report.expect("S(xy) = S(y)S(x)", [x, y], lhs, rhs):
            break
    return finish(report)


def check_pairing_orthogonality(A, B, P, bound, cap_a=None, cap_b=None):
    """Keys of unequal degree pair to zero"""
    report = _start("pairing orthogonality", f"{A.name}/{B.name}", bound)
    for x in enumerate_basis(A, bound, cap_a):
        for z in enumerate_basis(B, bound, cap_b):
            if A.degree(x) != B.degree(z) and not report.expect("degree orthogonality", [x, z],
                                                                P(x, z), 0):
                return finish(report)
    return finish(report)


def check_dual_pair(A, B, P, bound, cap_a=None, cap_b=None):
    """⟨m_A(x⊗y), z⟩ = ⟨x⊗y, μ_B(z)⟩ and ⟨μ_A(x), y⊗z⟩ = ⟨x, m_B(y⊗z)⟩"""
    report = check_pairing_orthogonality(A, B, P, bound, cap_a, cap_b)
    report.suite = "dual pair"
    if not report.passed:
        return report
    keys_a = enumerate_basis(A, bound, cap_a)
    keys_b = enumerate_basis(B, bound, cap_b)
    for z in keys_b:
        if not report.expect("unit pairs as counit", [A.unit, z], P(A.unit, z), B.epsilon(z)):
            return finish(report)
    for x in keys_a:
        if not report.expect("counit pairs as unit", [x, B.unit], P(x, B.unit), A.epsilon(x)):
            return finish(report)
    if A.product is not None:
        for x, y in _pairs(A, keys_a, bound):
            target = A.degree(x) + A.degree(y)
            product = A.product(x, y)
            for z in keys_b:
                if B.degree(z) != target:
                    continue
                lhs = pair(P, product, Elem.basis(z))
                rhs = pair_tensor(P, TensorElem.basis((x, y)), B.coproduct(z))
                if not report.expect("product dual to coproduct", [x, y, z], lhs, rhs):
                    return finish(report)
    if B.product is not None:
        for y, z in _pairs(B, keys_b, bound):
            target = B.degree(y) + B.degree(z)
            product = B.product(y, z)
            for x in keys_a:
                if A.degree(x) != target:
                    continue
                lhs = pair_tensor(P, A.coproduct(x), TensorElem.basis((y, z)))
                rhs = pair(P, Elem.basis(x), product)
                if not report.expect("coproduct dual to product", [x, y, z], lhs, rhs):
                    return finish(report)
    return finish(report)


def check_hopf_morphism(f, A, B, bound, halves="both", cap=None, name=None):
    """f∘m_A = m_B∘(f⊗f) and/or (f⊗f)∘μ_A = μ_B∘f on basis keys within bound"""
    if halves not in ("both", "algebra", "coalgebra"):
        raise ValueError(f"Unknown morphism half: {halves}")
    subject = name or f"{A.name} -> {B.name}"
    report = _start(f"morphism ({halves})", subject, bound)
    keys = enumerate_basis(A, bound, cap)
    if halves in ("both", "coalgebra"):
        for x in keys:
            image = f(x)
            if not report.expect("counit preserved", [x], counit(B, image), A.epsilon(x)):
                return finish(report)
            lhs = comul(B, image)
            rhs = tensor_map([f, f], A.coproduct(x))
            if not report.expect("coalgebra morphism", [x], lhs, rhs):
                return finish(report)
    if halves in ("both", "algebra"):
        if not report.expect("unit preserved", [A.unit], f(A.unit), B.unit_elem()):
            return finish(report)
        for x, y in _pairs(A, keys, bound):
            lhs = apply_map(f, A.product(x, y))
            rhs = mul(B, f(x), f(y))
            if not report.expect("algebra morphism", [x, y], lhs, rhs):
                return finish(report)
    return finish(report)
