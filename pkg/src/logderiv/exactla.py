"""Exact linear algebra over the rationals on sparse dict-vectors.

Rows are dicts mapping a hashable column label to a nonzero Fraction.
Column precedence is given by a key function: the column with the largest
key is eliminated first.  Used by the Artin-quotient reduction and by the
jet oracle.
"""

from __future__ import annotations

from fractions import Fraction


class RowBasis:
    """A fully reduced row-echelon set of sparse rows (RREF)."""

    def __init__(self, colkey):
        self.colkey = colkey
        self.pivots = {}  # pivot column -> row dict (pivot coeff 1, reduced)

    def reduce(self, row):
        """Eliminate all pivot columns from row; returns a new dict."""
        r = dict(row)
        while True:
            hit = None
            for col in r:
                if col in self.pivots:
                    if hit is None or self.colkey(col) > self.colkey(hit):
                        hit = col
            if hit is None:
                return r
            c = r[hit]
            for col2, v in self.pivots[hit].items():
                s = r.get(col2, Fraction(0)) - c * v
                if s:
                    r[col2] = s
                elif col2 in r:
                    del r[col2]

    def insert(self, row):
        """Reduce row and, if nonzero, add it as a new pivot row.

        Returns the new pivot column, or None if the row was dependent.
        """
        r = self.reduce(row)
        if not r:
            return None
        piv = max(r, key=self.colkey)
        inv = Fraction(1) / r[piv]
        r = {col: v * inv for col, v in r.items()}
        # back-substitute into existing rows to stay fully reduced
        for pcol, prow in self.pivots.items():
            c = prow.get(piv)
            if c is None:
                continue
            for col2, v in r.items():
                s = prow.get(col2, Fraction(0)) - c * v
                if s:
                    prow[col2] = s
                elif col2 in prow:
                    del prow[col2]
        self.pivots[piv] = r
        return piv

    def extend(self, rows):
        for row in rows:
            self.insert(row)

    @property
    def rank(self):
        return len(self.pivots)

    def contains(self, row):
        return not self.reduce(row)

    def rows(self):
        return [dict(r) for r in self.pivots.values()]


def nullspace(rows, columns, colkey):
    """Basis of {x : sum_col x[col] * row[col] = 0 for each row}.

    `rows` are sparse dicts over `columns`; the nullspace vectors are
    returned as dicts over the same column labels.  Classic RREF + free
    variable construction, all exact.
    """
    rb = RowBasis(colkey)
    rb.extend(rows)
    pivcols = set(rb.pivots)
    free = [c for c in columns if c not in pivcols]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for pcol, prow in rb.pivots.items():
            c = prow.get(f)
            if c:
                vec[pcol] = -c
        basis.append(vec)
    return basis
