"""Ternary rings as flat operation tables, with exhaustive axiom checks,
isomorphism search, and isotopism machinery.

The ternary operation <ax+b> is stored as a flat table of q^3 values at
index ((a*q)+x)*q+b.  Every failed check reports the lexicographically
smallest counterexample (in the order the variables are quantified), so
test expectations are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .errors import InputError, SearchBoundExceeded

ISOMORPHISM_SEARCH_BOUND = 16
ISOTOPISM_SEARCH_BOUND = 9


@dataclass(frozen=True)
class TernaryRing:
    """Carrier {0..q-1} with distinguished 0, 1 and a q^3 operation table."""

    q: int
    table: tuple  # flat, index ((a*q)+x)*q+b
    validated: bool = False

    zero = 0
    one = 1

    def __post_init__(self):
        if self.q < 2:
            raise InputError(f"carrier size must be >= 2, got {self.q}")
        if len(self.table) != self.q ** 3:
            raise InputError("table length does not match q^3")
        if any(not 0 <= v < self.q for v in self.table):
            raise InputError("table entry out of range")

    def eval(self, a, x, b):
        q = self.q
        if not (0 <= a < q and 0 <= x < q and 0 <= b < q):
            raise InputError(f"arguments out of range for order {q}")
        return self.table[(a * q + x) * q + b]

    def at(self, a, x, b):
        """Unchecked lookup for hot loops."""
        return self.table[(a * self.q + x) * self.q + b]

    def __repr__(self):
        return f"TernaryRing(q={self.q}, validated={self.validated})"


@dataclass
class TernaryAxiomReport:
    t1: bool = True
    t2: bool = True
    t3: bool = True
    t4: bool = True
    t5: bool = True
    witnesses: dict = field(default_factory=dict)

    @property
    def all_pass(self):
        return self.t1 and self.t2 and self.t3 and self.t4 and self.t5

    def flags(self):
        return {"T1": self.t1, "T2": self.t2, "T3": self.t3,
                "T4": self.t4, "T5": self.t5}


def check_ternary_axioms(T):
    """Exhaustive check of the five ternary-ring axioms.

    T5 is always checked in full even when T3 and T4 hold, so the
    finite-case implication (T3 and T4 => T5) can be cross-validated by
    callers.
    """
    q = T.q
    at = T.at
    report = TernaryAxiomReport()

    # T1: <1x+0> = <x1+0> = x
    for x in range(q):
        if at(1, x, 0) != x or at(x, 1, 0) != x:
            report.t1 = False
            report.witnesses["T1"] = (x,)
            break

    # T2: <a0+b> = <0a+b> = b
    done = False
    for a in range(q):
        for b in range(q):
            if at(a, 0, b) != b or at(0, a, b) != b:
                report.t2 = False
                report.witnesses["T2"] = (a, b)
                done = True
                break
        if done:
            break

    # T3: for each (a, x, y) a unique b with <ax+b> = y
    done = False
    for a in range(q):
        for x in range(q):
            counts = [0] * q
            for b in range(q):
                counts[at(a, x, b)] += 1
            bad = next((y for y in range(q) if counts[y] != 1), None)
            if bad is not None:
                report.t3 = False
                report.witnesses["T3"] = (a, x, bad)
                done = True
                break
        if done:
            break

    # Per-(a, x) solution lists for <ax+b> = y, used by the T4 sweep.
    solve_b = [[[] for _ in range(q)] for _ in range(q * q)]
    for a in range(q):
        for x in range(q):
            row = solve_b[a * q + x]
            for b in range(q):
                row[at(a, x, b)].append(b)

    # T4: for a != a', each (b, b') admits a unique solution x of
    # <ax+b> = <a'x+b'>
    done = False
    for a in range(q):
        for a2 in range(q):
            if a2 == a:
                continue
            counts = [0] * (q * q)
            for x in range(q):
                row2 = solve_b[a2 * q + x]
                for b in range(q):
                    y = at(a, x, b)
                    for b2 in row2[y]:
                        counts[b * q + b2] += 1
            bad = next((i for i in range(q * q) if counts[i] != 1), None)
            if bad is not None:
                report.t4 = False
                report.witnesses["T4"] = (a, a2, bad // q, bad % q)
                done = True
                break
        if done:
            break

    # T5: for x != x', each (y, y') comes from a unique pair (a, b)
    done = False
    for x in range(q):
        for x2 in range(q):
            if x2 == x:
                continue
            counts = [0] * (q * q)
            for a in range(q):
                for b in range(q):
                    counts[at(a, x, b) * q + at(a, x2, b)] += 1
            bad = next((i for i in range(q * q) if counts[i] != 1), None)
            if bad is not None:
                report.t5 = False
                report.witnesses["T5"] = (x, x2, bad // q, bad % q)
                done = True
                break
        if done:
            break

    return report


def validate(T):
    """Return a validated copy of T, or raise with the failing axioms."""
    if T.validated:
        return T
    report = check_ternary_axioms(T)
    if not report.all_pass:
        failing = [k for k, ok in report.flags().items() if not ok]
        raise InputError(f"ternary axioms fail: {', '.join(failing)}")
    return replace(T, validated=True)


# ---------------------------------------------------------------------------
# isomorphisms

def isomorphism_failure(T, U, perm):
    """First failing triple of the isomorphism identity, or None."""
    q = T.q
    for a in range(q):
        for x in range(q):
            for b in range(q):
                if perm[T.at(a, x, b)] != U.at(perm[a], perm[x], perm[b]):
                    return (a, x, b)
    return None


def is_isomorphism(T, U, perm):
    """True iff perm fixes 0 and 1 and commutes with the ternary operation."""
    if T.q != U.q:
        raise InputError("carrier sizes differ")
    if len(perm) != T.q or sorted(perm) != list(range(T.q)):
        return False
    if perm[0] != 0 or perm[1] != 1:
        return False
    return isomorphism_failure(T, U, perm) is None


def find_isomorphism(T, U):
    """Backtracking search for an isomorphism T -> U.

    Elements 2..q-1 are assigned in carrier order with candidate images
    tried in increasing order, so the first hit is the lexicographically
    smallest isomorphism.  Absence is certified by exhausting the pruned
    search space.
    """
    if T.q != U.q:
        raise InputError("carrier sizes differ")
    q = T.q
    if q > ISOMORPHISM_SEARCH_BOUND:
        raise SearchBoundExceeded(
            f"isomorphism search supports q <= {ISOMORPHISM_SEARCH_BOUND}")

    perm = [0, 1] + [-1] * (q - 2)
    used = [False] * q
    used[0] = used[1] = True

    def consistent(e):
        # all triples within {0..e} that involve the newly assigned e
        rng = range(e + 1)
        for a in rng:
            for x in rng:
                for b in rng:
                    if a != e and x != e and b != e:
                        continue
                    v = T.at(a, x, b)
                    w = U.at(perm[a], perm[x], perm[b])
                    if v <= e:
                        if perm[v] != w:
                            return False
                    elif used[w]:
                        # v must map to w later, but w is already taken
                        return False
        return True

    def search(e):
        if e == q:
            return True
        for img in range(2, q):
            if used[img]:
                continue
            perm[e] = img
            used[img] = True
            if consistent(e) and search(e + 1):
                return True
            used[img] = False
        perm[e] = -1
        return False

    if q == 2:
        return (0, 1) if is_isomorphism(T, U, (0, 1)) else None
    if search(2):
        return tuple(perm)
    return None


# ---------------------------------------------------------------------------
# isotopisms

@dataclass(frozen=True)
class Isotopism:
    """Triple (F, G, H) of carrier bijections with H(0) = 0."""

    f: tuple
    g: tuple
    h: tuple


def _is_bijection(seq, q):
    return len(seq) == q and sorted(seq) == list(range(q))


def _identity_holds(T, U, F, G, H):
    q = T.q
    at = T.at
    at2 = U.at
    # nontrivial block first: for well-formed tables the a=0 and x=0
    # slices hold automatically, so bad candidates die fast here
    for a in range(1, q):
        fa = F[a]
        for x in range(1, q):
            gx = G[x]
            for b in range(q):
                if H[at(a, x, b)] != at2(fa, gx, H[b]):
                    return False
    for a in range(q):
        fa = F[a]
        for x in range(q):
            if a and x:
                continue
            gx = G[x]
            for b in range(q):
                if H[at(a, x, b)] != at2(fa, gx, H[b]):
                    return False
    return True


def is_isotopism(T, U, iso):
    """True iff H(0)=0 and H(<ax+b>) = <F(a)G(x)+H(b)> on all triples."""
    if T.q != U.q:
        raise InputError("carrier sizes differ")
    q = T.q
    F, G, H = iso.f, iso.g, iso.h
    if not (_is_bijection(F, q) and _is_bijection(G, q) and _is_bijection(H, q)):
        return False
    if H[0] != 0:
        return False
    return _identity_holds(T, U, F, G, H)


def complete_isotopism(T, U, H, f_inv1, g_inv1):
    """Reconstruct (F, G, H) from H and the preimages of 1 under F and G.

    F(a) = H(<a g1 + 0>) and G(a) = H(<f1 a + 0>) where f1, g1 are the
    stated preimages; returns the verified triple or None.
    """
    if T.q != U.q:
        raise InputError("carrier sizes differ")
    q = T.q
    if H[0] != 0:
        raise InputError("H must fix 0")
    F = tuple(H[T.at(a, g_inv1, 0)] for a in range(q))
    G = tuple(H[T.at(f_inv1, x, 0)] for x in range(q))
    if not (_is_bijection(F, q) and _is_bijection(G, q)):
        return None
    if _identity_holds(T, U, F, G, H):
        return Isotopism(F, G, H)
    return None


def find_isotopism(T, U):
    """Exhaustive isotopism search in lexicographic (H, f1, g1) order.

    Each H with H(0)=0 determines F from g1 and G from f1; every emitted
    triple is verified in full, and absence means the whole candidate
    space was exhausted.
    """
    if T.q != U.q:
        raise InputError("carrier sizes differ")
    q = T.q
    if q > ISOTOPISM_SEARCH_BOUND:
        raise SearchBoundExceeded(
            f"isotopism search supports q <= {ISOTOPISM_SEARCH_BOUND}")
    rng = range(q)
    for rest in itertools.permutations(range(1, q)):
        H = (0,) + rest
        f_by_g1 = {}
        for g1 in rng:
            F = tuple(H[T.at(a, g1, 0)] for a in rng)
            if _is_bijection(F, q):
                f_by_g1[g1] = F
        g_by_f1 = {}
        for f1 in rng:
            G = tuple(H[T.at(f1, x, 0)] for x in rng)
            if _is_bijection(G, q):
                g_by_f1[f1] = G
        for f1 in sorted(g_by_f1):
            G = g_by_f1[f1]
            for g1 in sorted(f_by_g1):
                F = f_by_g1[g1]
                if _identity_holds(T, U, F, G, H):
                    return Isotopism(F, G, H)
    return None


def compose_isotopisms(first, second):
    """Componentwise composition: apply `first`, then `second`."""
    f = tuple(second.f[v] for v in first.f)
    g = tuple(second.g[v] for v in first.g)
    h = tuple(second.h[v] for v in first.h)
    return Isotopism(f, g, h)
