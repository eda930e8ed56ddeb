"""
Law verification harness.

Each law enumerates its inputs exhaustively up to a cap, then draws seeded
random inputs between the cap and the requested bound. Every mismatch is kept
in the report together with the inputs that produced it.

What "size" bounds differs per law and is stated in each law's description.
"""
import itertools
import logging
import os
import random
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import (Composition, Interval, LabeledIntervalPartition, Permutation, compositions,
                                glue, interval_subpartitions, permutations_of)
from core.config import get_verify_defaults
from core.freealg import (LinComb, Tensor, coproduct_left, coproduct_right, pairing, swap, tensor_map,
                          tensor_multiply)
from core import hopf_tools, partition_hopf as ph, perm_hopf as pp, signatures as sg, vincular_hopf as vh
from core import word_iso as wi

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Input generators
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def objects_of_size(kind: str, n: int) -> tuple:
    if kind == "composition":
        return tuple(compositions(n))
    if kind == "word":
        return tuple(wi.IntWord(c.parts) for c in compositions(n))
    if kind == "permutation":
        return tuple(permutations_of(n))
    if kind == "pattern":
        return tuple(vh.VincularPattern(c, p) for c in compositions(n) for p in permutations_of(n))
    raise ValueError(f"Unknown object kind: {kind}")


def objects_up_to(kind: str, bound: int, start: int = 0) -> List:
    return [x for n in range(start, bound + 1) for x in objects_of_size(kind, n)]


def random_object(kind: str, rng: random.Random, n: int):
    if kind in ("composition", "word", "pattern"):
        parts, run = [], 1
        for _ in range(n - 1):
            if rng.random() < 0.5:
                parts.append(run)
                run = 1
            else:
                run += 1
        comp = Composition(tuple(parts + [run]) if n else ())
        if kind == "composition":
            return comp
        if kind == "word":
            return wi.IntWord(comp.parts)
        return vh.VincularPattern(comp, random_object("permutation", rng, n))
    if kind == "permutation":
        values = list(range(1, n + 1))
        rng.shuffle(values)
        return Permutation(tuple(values))
    raise ValueError(f"Unknown object kind: {kind}")


def tuples_with_total(kind: str, arity: int, bound: int) -> Iterable[tuple]:
    """All arity-tuples whose sizes add up to at most bound"""
    for sizes in itertools.product(range(bound + 1), repeat=arity):
        if sum(sizes) <= bound:
            yield from itertools.product(*(objects_of_size(kind, n) for n in sizes))


def random_tuple_with_total(kind: str, arity: int, rng: random.Random, lo: int, hi: int) -> tuple:
    total = rng.randint(lo, hi)
    cuts = sorted(rng.randint(0, total) for _ in range(arity - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    return tuple(random_object(kind, rng, n) for n in sizes)


def all_labeled_partitions(n: int) -> List[LabeledIntervalPartition]:
    """Every interval partition of every subset of [n]"""
    return [I for I, _ in _subpartitions_of_range(n)]


def _subpartitions_of_range(n: int):
    if n == 0:
        return [(LabeledIntervalPartition(), 0)]
    return interval_subpartitions(Composition((n,)))


def random_labeled_partition(rng: random.Random, n: int) -> LabeledIntervalPartition:
    blocks = []
    x = 1
    while x <= n:
        if rng.random() < 0.35:
            x += 1
            continue
        length = rng.randint(1, n - x + 1)
        blocks.append(Interval(x, length))
        x += length
    return LabeledIntervalPartition(tuple(blocks))


# ---------------------------------------------------------------------------
# Law registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Law:
    name: str
    description: str
    exhaustive_cap: int
    enumerate: Callable[[int], Iterable[tuple]]
    sample: Callable[[random.Random, int, int], tuple]
    check: Callable[..., Iterable[tuple]]
    statistics: Optional[Callable[[List[tuple]], dict]] = None


LAWS: Dict[str, Law] = {}


def register(name, description, cap, enumerate, sample, statistics=None):
    def wrap(check):
        LAWS[name] = Law(name, description, cap, enumerate, sample, check, statistics)
        return check
    return wrap


def _pairs(kind):
    return (lambda bound: tuples_with_total(kind, 2, bound),
            lambda rng, lo, hi: random_tuple_with_total(kind, 2, rng, lo, hi))


def _triples(kind):
    return (lambda bound: tuples_with_total(kind, 3, bound),
            lambda rng, lo, hi: random_tuple_with_total(kind, 3, rng, lo, hi))


def _singles(kind, start=0):
    return (lambda bound: ((x,) for x in objects_up_to(kind, bound, start)),
            lambda rng, lo, hi: (random_object(kind, rng, rng.randint(lo, hi)),))


# --- gluing ---------------------------------------------------------------

@register("gluing_assoc", "glue is associative; size = largest element of the ground sets", 3,
          lambda bound: itertools.product(all_labeled_partitions(bound), repeat=3),
          lambda rng, lo, hi: tuple(random_labeled_partition(rng, hi) for _ in range(3)))
def _gluing_assoc(I, J, K):
    yield glue(glue(I, J), K), glue(I, glue(J, K))


# --- interval partitions ----------------------------------------------------

@register("coassoc_coqspart", "coqspart is coassociative; size = size(s)", 5, *_singles("composition"))
def _coassoc_coqspart(s):
    delta = ph.coqspart(s)
    yield coproduct_left(delta, ph.coqspart), coproduct_right(delta, ph.coqspart)


@register("cocomm_coqspart", "coqspart is cocommutative; size = size(s)", 6, *_singles("composition"))
def _cocomm_coqspart(s):
    delta = ph.coqspart(s)
    yield delta, swap(delta)


@register("bialgebra_partition", "coqspart(s.t) = coqspart(s).coqspart(t); size = size(s)+size(t)", 5,
          *_pairs("composition"))
def _bialgebra_partition(s, t):
    yield ph.coqspart(ph.conc(s, t)), tensor_multiply(ph.coqspart(s), ph.coqspart(t), ph.conc)


@register("dual_bialgebra_partition", "deconc(s*t) = deconc(s)*deconc(t); size = size(s)+size(t)", 4,
          *_pairs("composition"))
def _dual_bialgebra_partition(s, t):
    yield ph.deconcatenation(ph.qspart(s, t)), tensor_multiply(ph.deconc(s), ph.deconc(t), ph.qspart)


@register("assoc_qspart", "qspart is associative; size = total size of the three factors", 4,
          *_triples("composition"))
def _assoc_qspart(s, t, u):
    yield ph.quasi_shuffle(ph.qspart(s, t), u), ph.quasi_shuffle(s, ph.qspart(t, u))


@register("comm_qspart", "qspart is commutative with unit []; size = size(s)+size(t)", 5, *_pairs("composition"))
def _comm_qspart(s, t):
    yield ph.qspart(s, t), ph.qspart(t, s)
    if t == ph.EMPTY:
        yield ph.qspart(s, t), LinComb.basis(s)


@register("section_oracle", "qspart equals its section-coefficient expansion; size = size(s)+size(t)", 4,
          *_pairs("composition"))
def _section_oracle(s, t):
    yield ph.qspart(s, t), ph.qspart_via_sections(s, t)


@register("single_block_product", "closed form of (m)*(n) and its IPC identity; size = max(m, n)", 6,
          lambda bound: itertools.product(range(1, bound + 1), repeat=2),
          lambda rng, lo, hi: (rng.randint(lo, hi), rng.randint(1, hi)))
def _single_block_product(m, n):
    product = ph.single_block_product(m, n)
    yield ph.qspart(Composition((m,)), Composition((n,))), product
    for N in range(1, m + n + 3):
        expected = max(N - m + 1, 0) * max(N - n + 1, 0)
        host = Composition((N,))
        yield expected, sg.ipc_count(host, Composition((m,))) * sg.ipc_count(host, Composition((n,)))
        yield expected, sg.ipc_pairing(host, product)


@lru_cache(maxsize=4096)
def _ipc_sig(L, depth):
    return sg.ipc_signature(L, depth)


@register("character_ipc", "<IPC(L),s><IPC(L),t> = <IPC(L),s*t>; size = size(L), patterns up to 3", 8,
          lambda bound: ((L, s, t) for L in objects_up_to("composition", bound)
                         for s in objects_up_to("composition", min(3, bound))
                         for t in objects_up_to("composition", min(3, bound))),
          lambda rng, lo, hi: (random_object("composition", rng, rng.randint(lo, hi)),
                               random_object("composition", rng, rng.randint(0, 3)),
                               random_object("composition", rng, rng.randint(0, 3))))
def _character_ipc(L, s, t):
    sig = _ipc_sig(L, s.size + t.size)
    yield sig.coefficient(s) * sig.coefficient(t), pairing(sig, ph.qspart(s, t))


@register("chen_ipc", "IPC(L.M) on s factors through deconc(s); size = size(L)+size(M), patterns up to 4", 8,
          lambda bound: ((L, M, s) for L, M in tuples_with_total("composition", 2, bound)
                         for s in objects_up_to("composition", min(4, bound))),
          lambda rng, lo, hi: random_tuple_with_total("composition", 2, rng, lo, hi)
          + (random_object("composition", rng, rng.randint(0, 4)),))
def _chen_ipc(L, M, s):
    depth = s.size
    lhs = _ipc_sig(ph.conc(L, M), depth).coefficient(s)
    rhs = sum(c * _ipc_sig(L, depth).coefficient(t[0]) * _ipc_sig(M, depth).coefficient(t[1])
              for t, c in ph.deconc(s).items())
    yield lhs, rhs
    yield lhs, sg.ipc_chen_eval(ph.conc(L, M), s)


@register("ipc_chen_oracle", "ipc_chen_eval = ipc_count; size = size(L), patterns up to 4", 7,
          lambda bound: ((L, s) for L in objects_up_to("composition", bound)
                         for s in objects_up_to("composition", min(4, bound))),
          lambda rng, lo, hi: (random_object("composition", rng, rng.randint(lo, hi)),
                               random_object("composition", rng, rng.randint(0, 4))))
def _ipc_chen_oracle(L, s):
    yield sg.ipc_chen_eval(L, s), sg.ipc_count(L, s)


@register("word_iso", "phi is an algebra isomorphism and qswrd is commutative; size = total letter sum", 6,
          *_pairs("word"))
def _word_iso(u, v):
    yield wi.phi(wi.word_concat(u, v)), ph.conc(wi.phi(u), wi.phi(v))
    yield wi.phi_inverse(wi.phi(u)), u
    yield wi.qswrd(u, v), wi.qswrd(v, u)
    yield wi.phi_linear(wi.qswrd(u, v)), ph.qspart(wi.phi(u), wi.phi(v))


# --- permutations -----------------------------------------------------------

@lru_cache(maxsize=8192)
def _pc_sig(host, depth):
    return sg.pc_signature(host, depth)


@register("character_pc", "<PC(L),s><PC(L),t> = <PC(L),s^t>; size = |L|, patterns up to 2", 6,
          lambda bound: ((h, s, t) for h in objects_up_to("permutation", bound)
                         for s in objects_up_to("permutation", min(2, bound))
                         for t in objects_up_to("permutation", min(2, bound))),
          lambda rng, lo, hi: (random_object("permutation", rng, rng.randint(lo, hi)),
                               random_object("permutation", rng, rng.randint(0, 2)),
                               random_object("permutation", rng, rng.randint(0, 2))))
def _character_pc(host, s, t):
    sig = _pc_sig(host, s.size + t.size)
    yield sig.coefficient(s) * sig.coefficient(t), pairing(sig, pp.superinfiltration(s, t))


@register("chen_pc", "PC(L.U) on s factors through delta_conc(s); size = |L|+|U|, patterns up to 3", 6,
          lambda bound: ((a, b, s) for a, b in tuples_with_total("permutation", 2, bound)
                         for s in objects_up_to("permutation", min(3, bound))),
          lambda rng, lo, hi: random_tuple_with_total("permutation", 2, rng, lo, hi)
          + (random_object("permutation", rng, rng.randint(0, 3)),))
def _chen_pc(a, b, s):
    depth = s.size
    lhs = _pc_sig(pp.perm_concat(a, b), depth).coefficient(s)
    rhs = sum(c * _pc_sig(a, depth).coefficient(t[0]) * _pc_sig(b, depth).coefficient(t[1])
              for t, c in pp.delta_conc(s).items())
    yield lhs, rhs


@register("bialgebra_superinf", "delta_superinf(s.t) = delta_superinf(s).delta_superinf(t); size = |s|+|t|", 6,
          *_pairs("permutation"))
def _bialgebra_superinf(s, t):
    yield (pp.delta_superinfiltration(pp.perm_concat(s, t)),
           tensor_multiply(pp.delta_superinfiltration(s), pp.delta_superinfiltration(t), pp.perm_concat))


@register("superinf_duality", "superinfiltration is dual to delta_superinf, supershuffle to its disjoint part; "
          "size = |s|+|t|", 4, *_pairs("permutation"))
def _superinf_duality(s, t):
    key = Tensor(s, t)
    lo, hi = max(s.size, t.size), s.size + t.size
    dual = LinComb((g, pp.delta_superinfiltration(g).coefficient(key))
                   for n in range(lo, hi + 1) for g in objects_of_size("permutation", n))
    yield pp.superinfiltration(s, t), dual
    shuffle_part = LinComb((g, c) for g, c in dual.items() if g.size == hi)
    yield pp.supershuffle(s, t), shuffle_part


# --- vincular patterns ------------------------------------------------------

@register("coassoc_coqsgen", "coqsgen is coassociative; size = |x|", 4, *_singles("pattern"))
def _coassoc_coqsgen(x):
    delta = vh.coqsgen(x)
    yield coproduct_left(delta, vh.coqsgen), coproduct_right(delta, vh.coqsgen)


@register("bialgebra_vincular", "coqsgen(x.y) = coqsgen(x).coqsgen(y) and deconcgen(x*y) = "
          "deconcgen(x)*deconcgen(y); size = |x|+|y|", 4, *_pairs("pattern"))
def _bialgebra_vincular(x, y):
    yield vh.coqsgen(vh.genconc(x, y)), tensor_multiply(vh.coqsgen(x), vh.coqsgen(y), vh.genconc)
    yield (vh.deconcgen_coproduct(vh.qsgen(x, y)),
           tensor_multiply(vh.deconcgen(x), vh.deconcgen(y), vh.qsgen))


@lru_cache(maxsize=8192)
def _gpc_sig(host, depth):
    return sg.gpc_signature(host.blocks, host.perm, depth)


@register("character_gpc", "<GPC(H),x><GPC(H),y> = <GPC(H),x*y>; size = |H|, patterns up to 2", 4,
          lambda bound: ((h, x, y) for h in objects_up_to("pattern", bound)
                         for x in objects_up_to("pattern", min(2, bound))
                         for y in objects_up_to("pattern", min(2, bound))),
          lambda rng, lo, hi: (random_object("pattern", rng, rng.randint(lo, hi)),
                               random_object("pattern", rng, rng.randint(0, 2)),
                               random_object("pattern", rng, rng.randint(0, 2))))
def _character_gpc(host, x, y):
    sig = _gpc_sig(host, x.size + y.size)
    yield sig.coefficient(x) * sig.coefficient(y), pairing(sig, vh.qsgen(x, y))


@register("chen_gpc", "GPC(H.K) on x factors through deconcgen(x); size = |H|+|K|, patterns up to 3", 4,
          lambda bound: ((h, k, x) for h, k in tuples_with_total("pattern", 2, bound)
                         for x in objects_up_to("pattern", min(3, bound))),
          lambda rng, lo, hi: random_tuple_with_total("pattern", 2, rng, lo, hi)
          + (random_object("pattern", rng, rng.randint(0, 3)),))
def _chen_gpc(h, k, x):
    depth = x.size
    lhs = _gpc_sig(vh.genconc(h, k), depth).coefficient(x)
    rhs = sum(c * _gpc_sig(h, depth).coefficient(t[0]) * _gpc_sig(k, depth).coefficient(t[1])
              for t, c in vh.deconcgen(x).items())
    yield lhs, rhs


@register("psi_hom", "psi respects * and the deconcatenation coproduct; size = size(s)+size(t)", 4,
          *_pairs("composition"))
def _psi_hom(s, t):
    yield vh.psi(ph.qspart(s, t)), vh.qsgen_product(vh.embed_psi(s), vh.embed_psi(t))
    yield vh.deconcgen_coproduct(vh.embed_psi(s)), tensor_map(ph.deconc(s), vh.embed_psi, vh.embed_psi)


@register("phi_hom", "phi respects superinfiltration, concatenation and delta_conc; size = |s|+|t|", 4,
          *_pairs("permutation"))
def _phi_hom(s, t):
    yield vh.phi(pp.superinfiltration(s, t)), vh.qsgen(vh.embed_phi(s), vh.embed_phi(t))
    yield LinComb.basis(vh.embed_phi(pp.perm_concat(s, t))), LinComb.basis(vh.genconc(vh.embed_phi(s), vh.embed_phi(t)))
    yield vh.deconcgen(vh.embed_phi(s)), tensor_map(pp.delta_conc(s), vh.embed_phi, vh.embed_phi)


@register("qsgen_interleave", "interleaving enumeration equals brute force; size = total size", 4,
          *_pairs("pattern"))
def _qsgen_interleave(x, y):
    yield vh.qsgen(x, y, method="brute"), vh.qsgen(x, y, method="interleave")
    yield (pp.superinfiltration(x.perm, y.perm, method="brute"),
           pp.superinfiltration(x.perm, y.perm, method="interleave"))


# --- antipodes ----------------------------------------------------------------

def _antipode_statistics(algebra):
    def stats(inputs):
        out = {"max_size": 0, "max_block_count": 0}
        for (b,) in inputs:
            s = hopf_tools.degree_statistics(hopf_tools.takeuchi_antipode(b, algebra))
            out = {k: max(out[k], s[k]) for k in out}
        return out
    return stats


def _antipode_check(algebra):
    def check(b):
        left, right, expected = hopf_tools.antipode_axiom_sides(b, algebra)
        yield left, expected
        yield right, expected
    return check


for _name, _algebra, _kind, _cap in (("antipode_partition", "partition_qspart", "composition", 5),
                                     ("antipode_vincular", "vincular_qsgen", "pattern", 3),
                                     ("antipode_permutation", "permutation_superinf", "permutation", 3),
                                     ("antipode_word", "word_qswrd", "word", 4)):
    register(_name, f"Takeuchi antipode satisfies both antipode axioms in {_algebra}; size = |x|", _cap,
             *_singles(_kind), statistics=_antipode_statistics(_algebra))(_antipode_check(_algebra))


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------

def _text(value) -> str:
    return str(value)


def verify_law(law: str, size_bound: int, seed: Optional[int] = None, spot_checks: Optional[int] = None) -> dict:
    """Run one law and return {law, bound, checked, failures:[{inputs, lhs, rhs}]}"""
    if law not in LAWS:
        raise KeyError(f"Unknown law: {law}")
    if size_bound < 0:
        raise ValueError(f"Size bound must be >= 0, got {size_bound}")
    defaults = get_verify_defaults()
    seed = defaults["seed"] if seed is None else seed
    spot_checks = defaults["spot_checks"] if spot_checks is None else spot_checks

    entry = LAWS[law]
    exhaustive = min(size_bound, entry.exhaustive_cap)
    inputs = list(entry.enumerate(exhaustive))
    if size_bound > entry.exhaustive_cap:
        rng = random.Random(seed)
        inputs += [entry.sample(rng, entry.exhaustive_cap + 1, size_bound) for _ in range(spot_checks)]

    failures = []
    for args in inputs:
        for lhs, rhs in entry.check(*args):
            if lhs != rhs:
                failures.append({"inputs": [_text(a) for a in args], "lhs": _text(lhs), "rhs": _text(rhs)})

    report = {"law": law, "bound": size_bound, "checked": len(inputs), "failures": failures}
    if entry.statistics is not None:
        report["statistics"] = entry.statistics(inputs)
    logger.info(f"[VERIFY] {law} bound={size_bound}: {len(inputs)} inputs, {len(failures)} failures")
    return report
