import logging
from dataclasses import dataclass, field
from typing import Optional
import sympy.ntheory as snt
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = [
    "CLAIM_IRREDUCIBLE",
    "CLAIM_FULL_SYMMETRIC",
    "CLAIM_POWER_OF_IRREDUCIBLE",
    "CLAIM_LINEAR_POWER",
    "RULE_IRREDUCIBLE_MOD_ELL",
    "RULE_DEGREE_SET_SIEVE",
    "RULE_SMALL_DEGREE",
    "RULE_JORDAN",
    "RULE_DOUBLY_TRANSITIVE",
    "RULE_THEOREM1",
    "RULE_COROLLARY",
    "RULE_T2_REMARK",
    "CycleType",
    "SquarefreeFailure",
    "Evidence",
    "Certificate",
    "NotFound",
    "cycle_type",
    "proper_degree_set",
    "certify_irreducible_poly",
    "certify_irreducible",
    "certify_full_symmetric_poly",
    "certify_full_symmetric",
]

CLAIM_IRREDUCIBLE = "Irreducible"
CLAIM_FULL_SYMMETRIC = "FullSymmetricGroup"
CLAIM_POWER_OF_IRREDUCIBLE = "PowerOfIrreducible"
CLAIM_LINEAR_POWER = "LinearPower"

RULE_IRREDUCIBLE_MOD_ELL = "IrreducibleModEll"
RULE_DEGREE_SET_SIEVE = "DegreeSetSieve"
RULE_SMALL_DEGREE = "SmallDegree"
RULE_JORDAN = "Jordan"
RULE_DOUBLY_TRANSITIVE = "DoublyTransitive"
RULE_THEOREM1 = "Theorem1"
RULE_COROLLARY = "Corollary"
RULE_T2_REMARK = "T2RemarkRule"


@dataclass(frozen=True)
class CycleType:
    """
    Degrees of the irreducible factors of a squarefree reduction mod ell

    By Dedekind's theorem the Galois group over Q of the reduced
    polynomial contains a permutation with these cycle lengths.
    """

    parts: tuple
    ell: int

    @property
    def degree(self):
        return sum(self.parts)

    def yields_cycle(self, q):
        """
        Whether a power of this permutation is a single q-cycle, q prime
        """
        return self.parts.count(q) == 1 and all(
            part % q for part in self.parts if part != q
        )

    def has_transposition(self):
        return self.yields_cycle(2)

    def __str__(self):
        return "[{0}]".format(",".join(str(part) for part in self.parts))


@dataclass(frozen=True)
class SquarefreeFailure:
    """A reduction mod ell with a repeated factor; it says nothing about
    the Galois group"""

    ell: int
    factorization: object

    def __str__(self):
        return "not squarefree mod {0}: {1}".format(self.ell, self.factorization)


@dataclass(frozen=True)
class Evidence:
    """One reduction used by a certificate, recomputable from (f, ell)"""

    ell: int
    factorization: object
    cycle_type: Optional[CycleType] = None

    def to_dict(self):
        out = {
            "ell": self.ell,
            "factorization": str(self.factorization),
            "roots": self.factorization.roots(),
        }
        if self.cycle_type is not None:
            out["cycle_type"] = list(self.cycle_type.parts)
        return out


@dataclass(frozen=True)
class Certificate:
    """
    A claim about a polynomial together with the reductions proving it

    Parameters
    ----------
    claim:       str
                 One of the CLAIM_* names
    subject:     tuple
                 (p, k) for T_{p,k}, or a free-form label
    rule:        str
                 One of the RULE_* names
    evidence:    tuple of Evidence
    assumptions: tuple of str
                 Hypotheses the claim depends on; empty for an
                 unconditional certificate
    details:     dict
                 Rule specific data, e.g. the witnessing primes
    """

    claim: str
    subject: tuple
    rule: str
    evidence: tuple = ()
    assumptions: tuple = ()
    details: dict = field(default_factory=dict, compare=False)

    @property
    def conditional(self):
        return bool(self.assumptions)

    def to_dict(self):
        return {
            "claim": self.claim,
            "subject": list(self.subject),
            "rule": self.rule,
            "conditional": self.conditional,
            "assumptions": list(self.assumptions),
            "evidence": [item.to_dict() for item in self.evidence],
            "details": self.details,
        }


@dataclass(frozen=True)
class NotFound:
    """A search that ran out of primes; not a disproof"""

    subject: tuple
    bound: int
    reason: str

    def to_dict(self):
        return {
            "subject": list(self.subject),
            "bound": self.bound,
            "found": False,
            "reason": self.reason,
        }


def _as_fp(f, ell):
    if isinstance(f, hm.gfpoly.FpPoly):
        return f
    return hm.gfpoly.reduce_mod(f, ell)


def cycle_type(f, ell, seed=hm.gfpoly.DEFAULT_SEED):
    """
    Cycle type realized by Frobenius at ell in the Galois group of f

    Parameters
    ----------
    f:   IntPoly or sequence of int
         Monic nonconstant integer polynomial
    ell: int
         Prime

    Returns
    -------
    ctype: CycleType or SquarefreeFailure
           The latter when f mod ell has a repeated factor, in which case
           ell should be skipped
    """
    coeffs = f.coeffs if hasattr(f, "coeffs") else tuple(f)
    if len(coeffs) < 2 or coeffs[-1] != 1:
        raise ValueError("cycle_type needs a monic nonconstant polynomial")
    return _classify(hm.gfpoly.factor(hm.gfpoly.reduce_mod(coeffs, ell), seed=seed), ell)


def _classify(fact, ell):
    if not fact.is_squarefree:
        return SquarefreeFailure(ell, fact)
    return CycleType(fact.partition(), ell)


def proper_degree_set(parts):
    """
    Degrees 1..d-1 of factors over Q compatible with a cycle type

    Notes
    -----
    A factor over Q of degree e reduces to a product of some of the
    factors mod ell, so e is a subset sum of the parts.
    """
    total = sum(parts)
    sums = {0}
    for part in parts:
        sums |= {ss + part for ss in sums}
    return {ss for ss in sums if 0 < ss < total}


def _scan(f, bound, exclude, seed):
    for ell in snt.primerange(2, int(bound) + 1):
        if ell in exclude:
            continue
        fact = hm.gfpoly.factor(hm.gfpoly.reduce_mod(f.coeffs, ell), seed=seed)
        ctype = _classify(fact, ell)
        if isinstance(ctype, SquarefreeFailure):
            logger.debug("skipping ell=%d: %s", ell, ctype)
            continue
        yield Evidence(ell, fact, ctype)


class _IrreducibilityTracker(object):
    # degree-set sieve state shared by both certificate searches

    def __init__(self, degree):
        self.degree = degree
        self.surviving = set(range(1, degree))
        self.used = []
        self.result = None

    def update(self, item):
        if self.result is not None:
            return
        if item.cycle_type.parts == (self.degree,):
            self.result = (RULE_IRREDUCIBLE_MOD_ELL, (item,))
            return
        before = set(self.surviving)
        self.surviving &= proper_degree_set(item.cycle_type.parts)
        if self.surviving != before:
            self.used.append(item)
        if not self.surviving:
            self.result = (RULE_DEGREE_SET_SIEVE, tuple(self.used))


def _subject(subject, f):
    if subject is not None:
        return tuple(subject)
    return (str(f),)


def certify_irreducible_poly(f, bound, exclude=(), subject=None, seed=hm.gfpoly.DEFAULT_SEED):
    """
    Search for a proof that a monic integer polynomial is irreducible

    Parameters
    ----------
    f:       IntPoly
             Monic, degree at least 1
    bound:   int
             Largest prime ell examined
    exclude: collection of int
             Primes to skip
    subject: tuple, optional
             Label stored in the result

    Returns
    -------
    result: Certificate or NotFound
            IrreducibleModEll when some reduction is irreducible,
            DegreeSetSieve when the sets of possible factor degrees have
            an empty intersection

    See Also
    --------
    proper_degree_set, certify_full_symmetric_poly
    """
    if f.degree < 1:
        raise ValueError("Constant polynomials are not irreducible")
    label = _subject(subject, f)
    tracker = _IrreducibilityTracker(f.degree)
    for item in _scan(f, bound, exclude, seed):
        tracker.update(item)
        if tracker.result is not None:
            rule, evidence = tracker.result
            logger.info("%s irreducible by %s at ell=%d", label, rule, item.ell)
            return Certificate(
                CLAIM_IRREDUCIBLE,
                label,
                rule,
                evidence=evidence,
                details={"witness_ell": item.ell},
            )
    return NotFound(
        label,
        int(bound),
        "factor degrees {0} not excluded".format(sorted(tracker.surviving)),
    )


def _charpoly_subject(p, k, source):
    if not snt.isprime(int(p)):
        raise ValueError("p must be prime, got {0}".format(p))
    dim = hm.hecke.dim_cusp(k)
    if dim < 1:
        raise ValueError("S_{0}(1) is zero".format(k))
    return hm.modfactor.charpoly_int(p, k, source)


def certify_irreducible(p, k, bound, source=None):
    """Irreducibility certificate for T_{p,k}, skipping ell = p"""
    poly = _charpoly_subject(p, k, source)
    return certify_irreducible_poly(poly, bound, exclude=(p,), subject=(p, k))


def _big_cycle(ctype, degree):
    # a (d-1)-cycle, or a q-cycle for a prime d/2 < q < d - 2
    if ctype.parts == (degree - 1, 1):
        return RULE_DOUBLY_TRANSITIVE
    for qq in set(ctype.parts):
        if 2 * qq > degree and qq < degree - 2 and snt.isprime(qq):
            if ctype.yields_cycle(qq):
                return RULE_JORDAN
    return None


def certify_full_symmetric_poly(f, bound, exclude=(), subject=None, seed=hm.gfpoly.DEFAULT_SEED):
    """
    Search for a proof that the Galois group of f is the full S_d

    Parameters
    ----------
    f:       IntPoly
             Monic, degree d >= 1
    bound:   int
             Largest prime ell examined
    exclude: collection of int
    subject: tuple, optional

    Returns
    -------
    result: Certificate or NotFound

    Notes
    -----
    The group is transitive once f is certified irreducible. For d = 2
    that is all; for d = 3 a transposition type [2, 1] is also needed.
    For d >= 4 the evidence must contain a cycle type with a single
    2-cycle and odd other parts, and either a type [d - 1, 1] (the group
    is then doubly transitive) or a type with a single part q, q prime,
    d/2 < q < d - 2, and the other parts prime to q (Jordan).
    """
    degree = f.degree
    if degree < 1:
        raise ValueError("Constant polynomials have no Galois group")
    label = _subject(subject, f)
    tracker = _IrreducibilityTracker(degree)
    transposition = None
    big = None
    for item in _scan(f, bound, exclude, seed):
        tracker.update(item)
        if transposition is None and item.cycle_type.has_transposition():
            transposition = item
        if big is None and degree >= 4:
            rule = _big_cycle(item.cycle_type, degree)
            if rule is not None:
                big = (rule, item)
        if tracker.result is None:
            continue
        if degree <= 2:
            rule, needed = RULE_SMALL_DEGREE, []
        elif degree == 3:
            if transposition is None:
                continue
            rule, needed = RULE_SMALL_DEGREE, [transposition]
        else:
            if transposition is None or big is None:
                continue
            rule, needed = big[0], [transposition, big[1]]
        evidence = list(tracker.result[1])
        for extra in needed:
            if extra not in evidence:
                evidence.append(extra)
        logger.info("%s has full symmetric group by %s", label, rule)
        return Certificate(
            CLAIM_FULL_SYMMETRIC,
            label,
            rule,
            evidence=tuple(sorted(evidence, key=lambda ev: ev.ell)),
            details={
                "irreducibility_rule": tracker.result[0],
                "transposition_ell": None if transposition is None else transposition.ell,
                "cycle_ell": None if big is None else big[1].ell,
            },
        )
    missing = []
    if tracker.result is None:
        missing.append("irreducibility")
    if degree >= 3 and transposition is None:
        missing.append("transposition")
    if degree >= 4 and big is None:
        missing.append("long prime cycle")
    return NotFound(label, int(bound), "missing " + ", ".join(missing))


def certify_full_symmetric(p, k, bound, source=None):
    """Full symmetric Galois group certificate for T_{p,k}, skipping ell = p"""
    poly = _charpoly_subject(p, k, source)
    return certify_full_symmetric_poly(poly, bound, exclude=(p,), subject=(p, k))
