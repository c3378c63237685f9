"""
Registry of algebras, operations, maps and pairings for hopfwords

The command groups look everything up here by name.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import config
from descent import complement_map, psi_map, psi_retract, section_lld_map, section_lsd_map
from dwha import Subst, dwha2_def, dwha_cocompose, dwha_compose, dwha_def, dwha_mul2, dwha_comul2, inner_product, \
    orthonormal as dwha_orthonormal, project_mpr, swap_map
from freemod import Elem, TensorElem, bilinear_extend, format_key, linear_extend, tensor_map
from hopf import antipode, comul, mul, pair
from icc import icc_comul, icc_def, icc_dual_mul, icc_to_qsymm, mpr_to_icc
from mpr import cocompose_linear, compose_linear, embed_map, inverse_map, kronecker_inverse, mpr2_def, mpr_comul2, \
    make_perm, mpr_def, mpr_mul2, orthonormal as mpr_orthonormal
from nsq import NsymmElem, QsymmElem, duality_pairing, embed_i, i_map, kronecker, nsymm_def, nsymm_second_mul, \
    pi_map, project_pi, qsymm_def, qsymm_f_def, s_to_z
from shuffle_lie import liehopf_def, shuffle_def
from wha import encode_map, st_map, std_surj_map, wha_compose, wha_def
from words import make_word


class UnknownNameError(KeyError):
    """Raised for an algebra, operation, map or pairing that is not registered"""

    def __str__(self):
        return self.args[0]


class OperandKindError(ValueError):
    """Raised when an operand is not built from basis keys of its algebra"""


def _word_key(key):
    if not isinstance(key, tuple):
        raise OperandKindError(f"{format_key(key)} is not a word")
    return make_word(key)


def _perm_key(key):
    return make_perm(_word_key(key))


def _subst_key(key):
    if not isinstance(key, Subst):
        raise OperandKindError(f"{format_key(key)} is not a substitution, write ([top] | [bottom])")
    return key


KEY_KINDS = {
    'word': _word_key,
    'perm': _perm_key,
    'subst': _subst_key,
}


@dataclass(frozen=True)
class Operation:
    name: str
    arity: int
    run: Callable
    help: str = ""


@dataclass(frozen=True)
class Algebra:
    name: str
    make: Callable
    help: str
    bound: int = 5
    cap: Any = None
    triple_bound: Optional[int] = None
    bases: tuple = ()
    kind: str = 'word'
    default_basis: Optional[str] = None
    operations: dict = field(default_factory=dict)

    def hopf(self):
        return self.make()

    def validate(self, elem):
        """Check every key of an operand against the kind of this algebra"""
        if isinstance(elem, TensorElem):
            raise OperandKindError(f"{self.name} operands are not tensors")
        for key in elem.keys():
            KEY_KINDS[self.kind](key)
        return elem


def _ops(*operations):
    return {op.name: op for op in operations}


def _plain_ops(make, pairing=None, product=True):
    """mul, comul and antipode of a HopfDef on Elem operands"""
    def run_mul(x, y, options):
        return mul(make(), x, y)

    def run_comul(x, options):
        return comul(make(), x)

    def run_antipode(x, options):
        return antipode(make(), x)

    found = [Operation('comul', 1, run_comul, "coproduct")]
    if product:
        found += [Operation('mul', 2, run_mul, "product"),
                  Operation('antipode', 1, run_antipode, "antipode")]
    if pairing is not None:
        found.append(Operation('pair', 2, lambda x, y, options: pair(pairing, x, y), "duality pairing"))
    return found


def _binary(fn, kind=Elem):
    return lambda x, y, options: bilinear_extend(fn, x, y, kind=kind)


def _unary(fn, kind=Elem):
    return lambda x, options: linear_extend(fn, x, kind=kind)


def _tagged_ops(cls, make):
    """Operations on NSymm or QSymm elements given in the basis of options.basis"""
    hub = cls.hub_basis

    def basis_of(options):
        return options.basis or cls.bases[0]

    def back(options):
        return lambda key: cls(hub, Elem.basis(key)).to_basis(basis_of(options)).elem

    def run_mul(x, y, options):
        b = basis_of(options)
        return (cls(b, x) * cls(b, y)).elem

    def run_comul(x, options):
        delta = comul(make(), cls(basis_of(options), x).to_basis(hub).elem)
        return tensor_map([back(options), back(options)], delta)

    def run_antipode(x, options):
        image = antipode(make(), cls(basis_of(options), x).to_basis(hub).elem)
        return cls(hub, image).to_basis(basis_of(options)).elem

    def run_convert(x, options):
        return cls(basis_of(options), x).to_basis(options.to or hub).elem

    return [Operation('mul', 2, run_mul, "product"),
            Operation('comul', 1, run_comul, "coproduct"),
            Operation('antipode', 1, run_antipode, "antipode"),
            Operation('convert', 1, run_convert, "change of basis (--basis to --to)")]


def _nsymm_extra():
    def run_mul2(x, y, options):
        b = options.basis or 'Z'
        return nsymm_second_mul(NsymmElem(b, x), NsymmElem(b, y)).elem

    def run_embed(x, options):
        return embed_i(NsymmElem(options.basis or 'Z', x))

    def run_pair(x, y, options):
        return duality_pairing(NsymmElem(options.basis or 'Z', x), QsymmElem('M', y))

    return [Operation('mul2', 2, run_mul2, "second product, transported from composition"),
            Operation('embed', 1, run_embed, "embedding into MPR with its second structure"),
            Operation('pair', 2, run_pair, "pairing with a QSymm element in the M basis")]


def _qsymm_extra():
    def run_section(kind):
        def run(x, options):
            fundamental = QsymmElem(options.basis or 'M', x).to_basis('F').elem
            return linear_extend(section_lsd_map if kind == 'lsd' else section_lld_map, fundamental, kind=Elem)
        return run

    return [Operation('section', 1, run_section('lsd'), "lsd coalgebra section into MPR"),
            Operation('section_lld', 1, run_section('lld'), "lld coalgebra section into MPR")]


def _mpr_project(x, options):
    total = QsymmElem('F', Elem.zero())
    for perm, coeff in x.items():
        total = total + coeff * project_pi(perm)
    return total.to_basis(options.basis or 'F').elem


def _psi(x, options):
    total = NsymmElem('R', Elem.zero())
    for perm, coeff in x.items():
        total = total + coeff * psi_retract(perm)
    return total.to_basis(options.basis or 'R').elem


ALGEBRAS = {a.name: a for a in [
    Algebra('shuffle', shuffle_def, "shuffle product, cut coproduct",
            operations=_ops(*_plain_ops(shuffle_def, kronecker))),
    Algebra('liehopf', liehopf_def, "concatenation, subword coproduct",
            operations=_ops(*_plain_ops(liehopf_def, kronecker))),
    Algebra('mpr', mpr_def, "permutations: shifted shuffle, standardized cuts",
            kind='perm',
            operations=_ops(*_plain_ops(mpr_def, kronecker_inverse),
                            Operation('mul2', 2, _binary(mpr_mul2), "second product"),
                            Operation('comul2', 1, _unary(mpr_comul2, TensorElem), "second coproduct"),
                            Operation('compose', 2, lambda x, y, options: compose_linear(x, y), "composition"),
                            Operation('cocompose', 1, lambda x, options: cocompose_linear(x), "cocomposition"),
                            Operation('embed', 1, _unary(embed_map), "embedding into dWHA"),
                            Operation('inverse', 1, _unary(inverse_map), "isomorphism onto the second structure"),
                            Operation('complement', 1, _unary(complement_map), "complement coalgebra automorphism"),
                            Operation('project', 1, _mpr_project, "projection onto QSymm (F basis)"),
                            Operation('to_icc', 1, _unary(mpr_to_icc), "coalgebra map into ICC"))),
    Algebra('mpr2', mpr2_def, "permutations: subset products, restricted cuts",
            kind='perm',
            operations=_ops(*_plain_ops(mpr2_def, kronecker_inverse),
                            Operation('pair_mpr', 2, lambda x, y, options: pair(mpr_orthonormal, x, y),
                                      "orthonormal pairing with the first structure"),
                            Operation('project', 1, _psi, "algebra retraction onto NSymm (R basis)"))),
    Algebra('wha', wha_def, "words graded by height",
            operations=_ops(*_plain_ops(wha_def),
                            Operation('compose', 2, _binary(wha_compose), "composition of staircase substitutions"),
                            Operation('embed', 1, _unary(encode_map), "staircase substitution in dWHA"),
                            Operation('project', 1, _unary(st_map), "standardization into MPR"),
                            Operation('retract', 1, _unary(std_surj_map), "surjective standardization"))),
    Algebra('wha_len', lambda: wha_def(grading="length", max_letter=3),
            "words graded by length, letters at most 3", bound=4,
            operations=_ops(*_plain_ops(lambda: wha_def(grading="length", max_letter=3)))),
    Algebra('wha_inj', lambda: wha_def(family='injective'), "injective words",
            operations=_ops(*_plain_ops(lambda: wha_def(family='injective')))),
    Algebra('wha_surj', lambda: wha_def(family='surjective'), "surjective words",
            operations=_ops(*_plain_ops(lambda: wha_def(family='surjective')))),
    Algebra('dwha', dwha_def, "substitutions", bound=4, cap=(config.DWHA_TOP_CAP, config.DWHA_BOTTOM_CAP),
            triple_bound=3, kind='subst',
            operations=_ops(*_plain_ops(dwha_def, inner_product),
                            Operation('mul2', 2, _binary(dwha_mul2), "second product"),
                            Operation('comul2', 1, _unary(dwha_comul2, TensorElem), "second coproduct"),
                            Operation('compose', 2, _binary(dwha_compose), "composition"),
                            Operation('cocompose', 1, _unary(dwha_cocompose, TensorElem),
                                      "cocomposition (injective substitutions)"),
                            Operation('project', 1, _unary(project_mpr), "retraction onto MPR"),
                            Operation('swap', 1, _unary(swap_map), "exchange top and bottom"))),
    Algebra('dwha2', dwha2_def, "substitutions, second structure", bound=4,
            cap=(config.DWHA_TOP_CAP, config.DWHA_BOTTOM_CAP), triple_bound=3, kind='subst',
            operations=_ops(*_plain_ops(dwha2_def, dwha_orthonormal))),
    Algebra('nsymm', nsymm_def, "noncommutative symmetric functions", bases=('Z', 'S', 'R'), default_basis='Z',
            operations=_ops(*_tagged_ops(NsymmElem, nsymm_def), *_nsymm_extra())),
    Algebra('qsymm', qsymm_def, "quasisymmetric functions", bases=('M', 'F'), default_basis='M',
            operations=_ops(*_tagged_ops(QsymmElem, qsymm_def), *_qsymm_extra())),
    Algebra('qsymm_f', qsymm_f_def, "quasisymmetric functions in the F basis", bound=4,
            operations=_ops(*_plain_ops(qsymm_f_def))),
    Algebra('icc', icc_def, "incisive cut coalgebra", bound=6,
            operations=_ops(Operation('comul', 1, _unary(icc_comul, TensorElem), "incisive cuts"),
                            Operation('dual_mul', 2, _binary(icc_dual_mul), "ribbon product of the dual"),
                            Operation('to_qsymm', 1, _unary(icc_to_qsymm), "α ↦ F_α in the M basis"))),
]}


@dataclass(frozen=True)
class MapEntry:
    name: str
    fn: Callable
    source: str
    target: str
    halves: str
    bound: int
    help: str
    expect_pass: bool = True


MAPS = {m.name: m for m in [
    MapEntry('embed', embed_map, 'mpr', 'dwha', 'both', 3, "MPR into dWHA"),
    MapEntry('inverse', inverse_map, 'mpr', 'mpr2', 'both', 4, "σ ↦ σ⁻¹ between the two MPR structures"),
    MapEntry('project_mpr', project_mpr, 'dwha', 'mpr', 'both', 3,
             "dWHA onto MPR, killing repeated letters"),
    MapEntry('encode', encode_map, 'wha', 'dwha', 'both', 4, "WHA into dWHA"),
    MapEntry('std_surj', std_surj_map, 'wha', 'wha_surj', 'both', 5, "surjective standardization"),
    MapEntry('st', st_map, 'wha', 'mpr', 'algebra', 5, "standardization, algebra half"),
    MapEntry('st_coalgebra', st_map, 'wha', 'mpr', 'coalgebra', 5,
             "standardization, coalgebra half", expect_pass=False),
    MapEntry('swap', swap_map, 'dwha', 'dwha2', 'both', 3, "swap onto the second structure"),
    MapEntry('i', i_map, 'nsymm', 'mpr2', 'both', 5, "NSymm into MPR"),
    MapEntry('pi', pi_map, 'mpr', 'qsymm', 'both', 5, "MPR onto QSymm"),
    MapEntry('psi', psi_map, 'mpr2', 'nsymm', 'algebra', 4, "retraction of the embedding of NSymm"),
    MapEntry('section_lsd', section_lsd_map, 'qsymm_f', 'mpr', 'coalgebra', 5, "lsd section of π"),
    MapEntry('section_lld', section_lld_map, 'qsymm_f', 'mpr', 'coalgebra', 5, "lld section of π"),
    MapEntry('complement', complement_map, 'mpr', 'mpr', 'coalgebra', 5, "complement automorphism"),
    MapEntry('mpr_to_icc', mpr_to_icc, 'mpr', 'icc', 'coalgebra', 5, "MPR into ICC"),
    MapEntry('icc_to_qsymm', icc_to_qsymm, 'icc', 'qsymm', 'coalgebra', 5, "ICC onto QSymm"),
    MapEntry('wronski', s_to_z, 'nsymm', 'nsymm', 'both', 5, "Z_α ↦ S_α"),
]}


@dataclass(frozen=True)
class PairingEntry:
    name: str
    left: str
    right: str
    fn: Callable
    bound: int
    help: str


PAIRINGS = {p.name: p for p in [
    PairingEntry('liehopf-shuffle', 'liehopf', 'shuffle', kronecker, 5, "Kronecker pairing of words"),
    PairingEntry('nsymm-qsymm', 'nsymm', 'qsymm', kronecker, 5, "Z_β against the monomial basis"),
    PairingEntry('mpr-self', 'mpr', 'mpr', kronecker_inverse, 4, "⟨σ, τ⟩ = 1 iff τ = σ⁻¹"),
    PairingEntry('mpr2-self', 'mpr2', 'mpr2', kronecker_inverse, 4, "⟨σ, τ⟩ = 1 iff τ = σ⁻¹"),
    PairingEntry('mpr2-mpr', 'mpr2', 'mpr', mpr_orthonormal, 4, "orthonormal pairing of the two structures"),
    PairingEntry('dwha-self', 'dwha', 'dwha', inner_product, 3, "⟨p, q⟩ = 1 iff q is the swap of p"),
    PairingEntry('dwha2-dwha', 'dwha2', 'dwha', dwha_orthonormal, 3, "orthonormal pairing of the two structures"),
]}


def _lookup(table, kind, name):
    if name not in table:
        raise UnknownNameError(f"Unknown {kind} {name!r}; expected one of {', '.join(sorted(table))}")
    return table[name]


def get_algebra(name):
    return _lookup(ALGEBRAS, "algebra", name)


def get_operation(algebra, name):
    return _lookup(algebra.operations, f"operation for {algebra.name}", name)


def get_map(name):
    return _lookup(MAPS, "map", name)


def get_pairing(name):
    return _lookup(PAIRINGS, "pairing", name)
