import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional
import sympy.ntheory as snt
import heckemod as hm
from heckemod.errors import FalsificationError
from heckemod.galois.certificates import (
    CLAIM_FULL_SYMMETRIC,
    CLAIM_IRREDUCIBLE,
    CLAIM_LINEAR_POWER,
    CLAIM_POWER_OF_IRREDUCIBLE,
    RULE_COROLLARY,
    RULE_T2_REMARK,
    RULE_THEOREM1,
    Certificate,
    Evidence,
)

logger = logging.getLogger(__name__)

__all__ = [
    "ASSUME_IRREDUCIBLE",
    "ASSUME_FULL_GALOIS",
    "ShapeVerdict",
    "Conclusion",
    "Deduction",
    "prop2_shape_filter",
    "theorem1_applies",
    "theorem1_density",
    "theorem1_conclusion",
    "corollary_conclusion",
    "corollary_density",
    "table_evidence",
    "remark_t2_rule",
    "deduce",
]

ASSUME_IRREDUCIBLE = "T_{n,k} is irreducible for some n"
ASSUME_FULL_GALOIS = "T_{n,k} is irreducible and has full Galois group for some n"

VERDICT_FULL = "Irreducible+FullGalois"
VERDICT_IRREDUCIBLE = "Irreducible"
VERDICT_INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ShapeVerdict:
    """
    What the mod-ell root multiplicities leave of T_{p,k} = f^r

    Parameters
    ----------
    verdict:          str
                      "Irreducible+FullGalois", "Irreducible" or
                      "Inconclusive"
    degree:           int
                      d_k
    surviving_r:      tuple of int
                      Exponents r > 1 dividing d_k compatible with every
                      reduction
    linear_ruled_out: bool
                      True when some reduction has two distinct factors,
                      which excludes (x - a)^(d_k)
    assumptions:      tuple of str
    """

    verdict: str
    degree: int
    surviving_r: tuple
    linear_ruled_out: bool
    assumptions: tuple = ()

    def open_claims(self):
        """Claims of the shape still consistent with the evidence"""
        claims = ["{0}({1})".format(CLAIM_POWER_OF_IRREDUCIBLE, rr) for rr in self.surviving_r]
        if not self.linear_ruled_out:
            claims.append("{0}^{1}".format(CLAIM_LINEAR_POWER, self.degree))
        return claims

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "degree": self.degree,
            "surviving_r": list(self.surviving_r),
            "linear_ruled_out": self.linear_ruled_out,
            "assumptions": list(self.assumptions),
        }


def prop2_shape_filter(p, k, evidence):
    """
    Rule out the branches T_{p,k} = f^r (r > 1) and T_{p,k} = (x - a)^d

    Parameters
    ----------
    p:        int
    k:        int
              Even weight, d = d_k
    evidence: sequence of FactorMultiset
              Reductions of T_{p,k} modulo 5 or 7

    Returns
    -------
    shape: ShapeVerdict

    Notes
    -----
    If T_{n,k} is irreducible for some n then T_{p,k} = f^r with f
    irreducible, and every factor mod ell has multiplicity divisible by
    r. If moreover T_{n,k} has full Galois group, T_{p,k} either is
    irreducible with full Galois group or equals (x - a)^d, which has a
    single root mod ell.
    """
    degree = hm.hecke.dim_cusp(k)
    if degree <= 1:
        return ShapeVerdict(VERDICT_IRREDUCIBLE, degree, (), True)
    multiplicities = [mult for fact in evidence for _, mult in fact.factors]
    surviving = tuple(
        int(rr)
        for rr in snt.divisors(degree)
        if rr > 1 and all(mult % rr == 0 for mult in multiplicities)
    )
    linear_ruled_out = any(len(fact.factors) >= 2 for fact in evidence)
    if not surviving:
        return ShapeVerdict(
            VERDICT_FULL, degree, (), True, (ASSUME_FULL_GALOIS,)
        )
    if linear_ruled_out:
        return ShapeVerdict(
            VERDICT_FULL, degree, surviving, True, (ASSUME_FULL_GALOIS,)
        )
    logger.debug("T_{%d,%d}: r in %s not excluded", p, k, surviving)
    return ShapeVerdict(VERDICT_INCONCLUSIVE, degree, surviving, False)


def theorem1_applies(p):
    """p is not +-1 mod 5, or p is not +-1 mod 7"""
    return p % 5 not in (1, 4) or p % 7 not in (1, 6)


def theorem1_density():
    """Fraction of the units mod 35 for which theorem1_applies holds"""
    units = [rr for rr in range(35) if rr % 5 and rr % 7]
    return Fraction(sum(theorem1_applies(rr) for rr in units), len(units))


def table_evidence(p, k, ell):
    """
    The first d_k roots of T_{p,k} mod ell predicted by the printed table

    Returns
    -------
    roots: tuple of int
           The row for the class of p mod ell and the column k mod
           (ell - 1), extended periodically. None when no row matches.
    """
    table = hm.modfactor.paper_table(ell)
    kclass = k % (ell - 1)
    for (row, col), period in table.items():
        if col == kclass and (row - p) % ell == 0:
            degree = hm.hecke.dim_cusp(k)
            return tuple(period[ii % len(period)] for ii in range(degree))
    return None


@dataclass(frozen=True)
class Conclusion:
    """
    Outcome of one of the deduction rules for T_{p,k}

    Parameters
    ----------
    rule:        str
    p:           int
    k:           int
    applicable:  bool
    claim:       str or None
    ell:         int or None
                 Modulus of the table evidence
    roots:       tuple of int
                 Table roots of T_{p,k} mod ell
    shape:       ShapeVerdict or None
    assumptions: tuple of str
    case:        str or None
                 Which case of the rule applies
    """

    rule: str
    p: int
    k: int
    applicable: bool
    claim: Optional[str] = None
    ell: Optional[int] = None
    roots: tuple = ()
    shape: Optional[ShapeVerdict] = None
    assumptions: tuple = ()
    case: Optional[str] = None

    def to_dict(self):
        return {
            "rule": self.rule,
            "p": self.p,
            "k": self.k,
            "applicable": self.applicable,
            "claim": self.claim,
            "ell": self.ell,
            "roots": list(self.roots),
            "shape": None if self.shape is None else self.shape.to_dict(),
            "assumptions": list(self.assumptions),
            "case": self.case,
        }


def _shape_from_table(p, k, ell):
    roots = table_evidence(p, k, ell)
    if roots is None:
        return None, None
    fact = hm.gfpoly.from_roots(roots, ell)
    return roots, prop2_shape_filter(p, k, [fact])


def theorem1_conclusion(p, k):
    """
    Whether full Galois group of some T_{n,k} forces it for T_{p,k}

    Parameters
    ----------
    p: int
       Prime; 5 and 7 are treated through their residues
    k: int
       Even weight

    Returns
    -------
    conclusion: Conclusion
                Applicable when p is not +-1 mod 5 or not +-1 mod 7. The
                table row of ell = 5 or 7 for the class of p then has two
                distinct roots among the first d_k terms, which excludes
                T_{p,k} = (x - a)^(d_k).
    """
    if not snt.isprime(int(p)):
        raise ValueError("p must be prime, got {0}".format(p))
    if not theorem1_applies(p):
        return Conclusion(RULE_THEOREM1, p, k, False)
    for ell in (5, 7):
        if p % ell in (0, 1, ell - 1):
            continue
        roots, shape = _shape_from_table(p, k, ell)
        if shape is not None and shape.verdict != VERDICT_INCONCLUSIVE:
            return Conclusion(
                RULE_THEOREM1,
                p,
                k,
                True,
                claim=CLAIM_FULL_SYMMETRIC,
                ell=ell,
                roots=roots,
                shape=shape,
                assumptions=(ASSUME_FULL_GALOIS,),
            )
    return Conclusion(RULE_THEOREM1, p, k, False)


def _corollary_case(p, degree):
    if degree % 2 == 1 and theorem1_applies(p):
        return "i", (5, 7)
    if degree % 4 == 2 and p % 7 in (3, 5):
        return "ii", (7,)
    return None, ()


def corollary_conclusion(p, k):
    """
    Whether irreducibility of some T_{n,k} forces it for T_{p,k}

    Returns
    -------
    conclusion: Conclusion
                case "i": d_k odd and p not +-1 mod 5 or not +-1 mod 7;
                case "ii": d_k = 2 mod 4 and p = 3, 5 mod 7. The shape
                carries the surviving exponents, which are empty.
    """
    if not snt.isprime(int(p)):
        raise ValueError("p must be prime, got {0}".format(p))
    degree = hm.hecke.dim_cusp(k)
    case, ells = _corollary_case(p, degree)
    for ell in ells:
        if p % ell in (0, 1, ell - 1):
            continue
        roots, shape = _shape_from_table(p, k, ell)
        if shape is not None and not shape.surviving_r:
            return Conclusion(
                RULE_COROLLARY,
                p,
                k,
                True,
                claim=CLAIM_IRREDUCIBLE,
                ell=ell,
                roots=roots,
                shape=shape,
                assumptions=(ASSUME_IRREDUCIBLE,),
                case=case,
            )
    return Conclusion(RULE_COROLLARY, p, k, False)


def corollary_density():
    """
    Fraction of the classes (d mod 4, p mod 35), p a unit, covered by the
    corollary
    """
    units = [rr for rr in range(35) if rr % 5 and rr % 7]
    covered = sum(
        _corollary_case(rr, dd)[0] is not None for dd in range(4) for rr in units
    )
    return Fraction(covered, 4 * len(units))


def _surviving_from_tables(p, k, ells):
    degree = hm.hecke.dim_cusp(k)
    multiplicities = []
    for ell in ells:
        roots = table_evidence(p, k, ell)
        if roots is not None:
            multiplicities.extend(Counter(roots).values())
    return tuple(
        int(rr)
        for rr in snt.divisors(degree)
        if rr > 1 and all(mult % rr == 0 for mult in multiplicities)
    )


def remark_t2_rule(k):
    """
    Irreducibility of T_{2,k} or T_{3,k} from the tables alone

    Parameters
    ----------
    k: int
       Even weight

    Returns
    -------
    conclusion: Conclusion
                claim "Irreducible" for T_{2,k} when the table roots of
                T_{2,k} mod 5, 7 and 13 exclude every r > 1; otherwise
                case "T3" when the roots of T_{3,k} mod 5 and 7 do.
                Conditional on ASSUME_IRREDUCIBLE.

    Notes
    -----
    The period 14 sequence mod 13 excludes every r > 1 for T_{2,k}
    whenever d_k is not a multiple of 14. The bookkeeping is derived
    mechanically from the tables and labelled T2RemarkRule.
    """
    degree = hm.hecke.dim_cusp(k)
    if degree < 1:
        raise ValueError("S_{0}(1) is zero".format(k))
    for p, ells, case in ((2, (5, 7, 13), "T2"), (3, (5, 7), "T3")):
        if not _surviving_from_tables(p, k, ells):
            return Conclusion(
                RULE_T2_REMARK,
                p,
                k,
                True,
                claim=CLAIM_IRREDUCIBLE,
                assumptions=(ASSUME_IRREDUCIBLE,),
                case=case,
            )
    return Conclusion(RULE_T2_REMARK, 2, k, False)


@dataclass(frozen=True)
class Deduction:
    """
    Results of deduce for one weight

    Parameters
    ----------
    k:         int
    base:      Certificate, NotFound or None
               Full symmetric group search for T_{2,k}; None when no
               search was requested
    theorem1:  tuple
               Certificate or Conclusion per prime
    corollary: tuple
               Certificate or Conclusion per prime
    """

    k: int
    base: object
    theorem1: tuple = ()
    corollary: tuple = ()
    primes: tuple = field(default=())

    @property
    def unconditional(self):
        return isinstance(self.base, Certificate)

    def to_dict(self):
        return {
            "k": self.k,
            "primes": list(self.primes),
            "base": None if self.base is None else self.base.to_dict(),
            "unconditional": self.unconditional,
            "theorem1": [item.to_dict() for item in self.theorem1],
            "corollary": [item.to_dict() for item in self.corollary],
        }


def _recheck(conclusion, source, seed):
    # the table roots must be the actual roots of T_{p,k} mod ell
    poly = hm.modfactor.charpoly_mod(conclusion.p, conclusion.k, conclusion.ell, source)
    fact = hm.gfpoly.factor(poly, seed=seed)
    if fact.roots() != sorted(conclusion.roots) or len(fact.roots()) != poly.degree:
        raise FalsificationError(
            "table",
            "T_{{{0},{1}}} mod {2} is {3}, table predicts roots {4}".format(
                conclusion.p, conclusion.k, conclusion.ell, fact, list(conclusion.roots)
            ),
            p=conclusion.p,
            k=conclusion.k,
            ell=conclusion.ell,
        )
    return Evidence(conclusion.ell, fact)


def _upgrade(conclusion, base, source, seed):
    if not conclusion.applicable:
        return conclusion
    evidence = _recheck(conclusion, source, seed)
    assumptions = () if isinstance(base, Certificate) else conclusion.assumptions
    details = {"roots": list(conclusion.roots), "case": conclusion.case}
    if isinstance(base, Certificate):
        details["base"] = list(base.subject)
    return Certificate(
        conclusion.claim,
        (conclusion.p, conclusion.k),
        conclusion.rule,
        evidence=(evidence,),
        assumptions=assumptions,
        details=details,
    )


def deduce(k, primes, bound=None, source=None, seed=hm.gfpoly.DEFAULT_SEED):
    """
    Certify T_{2,k}, then carry the result to T_{p,k} for each prime

    Parameters
    ----------
    k:      int
            Even weight with d_k >= 1
    primes: iterable of int
    bound:  int, optional
            ell bound for the full symmetric group search on T_{2,k}. With
            None no search is made and every certificate is conditional.
    source: callable, optional
            Polynomial source, see hm.modfactor.charpoly_int

    Returns
    -------
    deduction: Deduction

    Raises
    ------
    FalsificationError
       claim "table" when a recomputed reduction disagrees with the table
       roots behind a conclusion

    Notes
    -----
    The full symmetric group of T_{2,k} discharges the hypotheses of both
    rules, so its certificate makes every derived certificate
    unconditional.
    """
    if hm.hecke.dim_cusp(k) < 1:
        raise ValueError("S_{0}(1) is zero".format(k))
    primes = tuple(int(p) for p in primes)
    base = None
    if bound is not None:
        base = hm.galois.certify_full_symmetric(2, k, bound, source)
    theorem1 = []
    corollary = []
    for p in primes:
        theorem1.append(_upgrade(theorem1_conclusion(p, k), base, source, seed))
        corollary.append(_upgrade(corollary_conclusion(p, k), base, source, seed))
    logger.info(
        "k=%d: %d of %d primes covered, %s",
        k,
        sum(isinstance(item, Certificate) for item in theorem1),
        len(primes),
        "unconditional" if isinstance(base, Certificate) else "conditional",
    )
    return Deduction(
        k=k,
        base=base,
        theorem1=tuple(theorem1),
        corollary=tuple(corollary),
        primes=primes,
    )
