import logging
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = [
    "PAPER_TABLE_5",
    "PAPER_TABLE_7",
    "PAPER_TABLE_13",
    "paper_table",
    "table_theorem2a",
    "table_theorem2b",
    "table_sequence",
    "compare_with_paper",
]

# One period of a_j for each (p, k mod (ell - 1)). Rows are labelled by a
# prime of the class p mod ell and kept in the printed order.
PAPER_TABLE_5 = {
    (11, 0): (2,),
    (11, 2): (2,),
    (2, 0): (1, 4),
    (2, 2): (2, 3),
    (3, 0): (2, 3),
    (3, 2): (1, 4),
    (19, 0): (0,),
    (19, 2): (0,),
}

PAPER_TABLE_7 = {
    (29, 0): (2,),
    (29, 2): (2,),
    (29, 4): (2,),
    (2, 0): (4, 5),
    (2, 2): (1, 3),
    (2, 4): (6, 2),
    (3, 0): (0, 1, 0, 6),
    (3, 2): (0, 3, 0, 4),
    (3, 4): (5, 0, 2, 0),
    (11, 0): (1, 3),
    (11, 2): (4, 5),
    (11, 4): (6, 2),
    (5, 0): (0, 3, 0, 4),
    (5, 2): (0, 1, 0, 6),
    (5, 4): (2, 0, 5, 0),
    (13, 0): (0,),
    (13, 2): (0,),
    (13, 4): (0,),
}

# p = 2, keyed by k mod 12
PAPER_TABLE_13 = {
    (2, 0): (2, 12, 9, 4, 1, 11, 5, 11, 1, 4, 9, 12, 2, 8),
    (2, 2): (4, 11, 5, 8, 2, 9, 10, 9, 2, 8, 5, 11, 4, 3),
    (2, 4): (8, 6, 8, 9, 10, 3, 4, 5, 7, 5, 4, 3, 10, 9),
    (2, 6): (5, 3, 12, 3, 5, 7, 6, 8, 10, 1, 10, 8, 6, 7),
    (2, 8): (1, 10, 6, 11, 6, 10, 1, 12, 3, 7, 2, 7, 3, 12),
    (2, 10): (11, 2, 7, 12, 9, 12, 7, 2, 11, 6, 1, 4, 1, 6),
}


def paper_table(ell):
    """The printed table for ell in {5, 7, 13}"""
    tables = {5: PAPER_TABLE_5, 7: PAPER_TABLE_7, 13: PAPER_TABLE_13}
    if ell not in tables:
        raise ValueError("No printed table for ell = {0}".format(ell))
    return tables[ell]


def _build(cells, ell, max_weight, single_period, source):
    table = {}
    for p, kclass in cells:
        table[(p, kclass)] = hm.modfactor.root_sequence(
            p,
            ell,
            kclass,
            max_weight=max_weight,
            single_period=single_period,
            source=source,
        )
    logger.info("table for ell=%d done, %d cells", ell, len(table))
    return table


def table_theorem2a(ell, max_weight=None, source=None):
    """
    Root sequences for every cell of the ell = 5 or ell = 7 table

    Parameters
    ----------
    ell:        int
                5 or 7
    max_weight: int, optional
                Override of the per-class default walk length
    source:     callable, optional
                Polynomial source, see hm.modfactor.charpoly_int

    Returns
    -------
    table: dict
           (p, kclass) -> RootSequence, rows in the printed order. Row p
           stands for every prime congruent to p mod ell.
    """
    if ell not in (5, 7):
        raise ValueError("ell must be 5 or 7")
    return _build(paper_table(ell), ell, max_weight, False, source)


def table_theorem2b(single_period=False, max_weight=None, source=None):
    """
    Root sequences of T_{2,k} mod 13, one row per k mod 12

    Parameters
    ----------
    single_period: bool
                   Walk only far enough for one period of 14 roots and
                   skip period detection
    max_weight:    int, optional
    source:        callable, optional

    Returns
    -------
    table: dict
           (2, kclass) -> RootSequence
    """
    return _build(PAPER_TABLE_13, 13, max_weight, single_period, source)


def table_sequence(sequence):
    """
    The printed form of a cell: one period, or in single-period mode the
    first (ell^2 - 1) / 12 roots
    """
    if sequence.period is None:
        length = hm.traceformula.a_j_period_bound(sequence.ell)
        return tuple(sequence.terms[:length])
    return tuple(sequence.one_period())


def compare_with_paper(table, ell):
    """
    Cells whose computed period differs from the printed one

    Returns
    -------
    mismatches: list of dict
                Entries with keys p, kclass, expected and computed; empty
                when the table reproduces exactly
    """
    expected = paper_table(ell)
    mismatches = []
    for key, printed in expected.items():
        if key not in table:
            continue
        computed = table_sequence(table[key])
        if computed != printed:
            mismatches.append(
                {
                    "p": key[0],
                    "kclass": key[1],
                    "expected": list(printed),
                    "computed": list(computed),
                }
            )
    return mismatches
