"""Table-based arithmetic for small finite fields GF(p^n).

Elements are encoded as integers: the polynomial sum(a_i t^i) corresponds
to the integer sum(a_i p^i), so 0 encodes 0 and 1 encodes 1.  All
operations are precomputed lookup tables, which keeps automorphism and
norm computations pure table work and makes cross-run output byte-stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InputError, InternalCheckError

DEFAULT_MAX_ORDER = 4096

# full q^3 sweeps over the axioms stay cheap up to this order; bigger
# fields get structural checks plus a deterministic sample instead
EXHAUSTIVE_CHECK_BOUND = 64


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, low-degree-first)

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_rem(num, den, p):
    num = _trim(num)
    den = _trim(den)
    deg = len(den) - 1
    lead_inv = pow(den[-1], -1, p)
    while num and len(num) - 1 >= deg:
        shift = len(num) - 1 - deg
        factor = (num[-1] * lead_inv) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        num = _trim(num)
    return num


def _monic_polys(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_rem(poly, cand, p):
                return False
    return True


def smallest_irreducible(p, n):
    """Lexicographically smallest monic irreducible of degree n over GF(p).

    Coefficient sequences are compared low-degree-first, which makes the
    choice deterministic without any external polynomial tables.
    """
    for tail in itertools.product(range(p), repeat=n):
        poly = list(tail) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise InternalCheckError(f"no irreducible polynomial of degree {n} over GF({p})")


def _decode(e, p):
    coeffs = []
    while e:
        e, r = divmod(e, p)
        coeffs.append(r)
    return coeffs


def _encode(coeffs, p):
    e = 0
    for c in reversed(coeffs):
        e = e * p + c
    return e


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteField:
    """GF(p^n) with fully materialized operation tables."""

    p: int
    n: int
    q: int
    modulus: tuple  # length n+1, low-degree-first, monic
    add_table: tuple  # flat q*q, index a*q+b
    mul_table: tuple
    neg_table: tuple
    inv_table: tuple  # inv_table[0] is a 0 sentinel, guarded by inv()
    generator: int
    exp_table: tuple  # generator powers, length q-1
    log_table: tuple  # log_table[0] == -1 sentinel

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        return self.add_table[a * self.q + b]

    def mul(self, a, b):
        return self.mul_table[a * self.q + b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a * self.q + self.neg_table[b]]

    def inv(self, a):
        if a == 0:
            raise InputError("inverse of 0 is undefined")
        return self.inv_table[a]

    def pow(self, a, k):
        r = 1
        while k > 0:
            k, bit = divmod(k, 2)
            if bit:
                r = self.mul(r, a)
            a = self.mul(a, a)
        return r

    def __repr__(self):
        return f"FiniteField(p={self.p}, n={self.n}, q={self.q})"


def make_field(p, n, max_order=DEFAULT_MAX_ORDER):
    """Build GF(p^n) with the lexicographically smallest irreducible modulus."""
    if not _is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    if n < 1:
        raise InputError(f"extension degree must be >= 1, got {n}")
    q = p ** n
    if q > max_order:
        raise InputError(f"order {q} exceeds the configured bound {max_order}")

    modulus = smallest_irreducible(p, n)
    polys = [_decode(e, p) for e in range(q)]

    add = [0] * (q * q)
    mul = [0] * (q * q)
    for a in range(q):
        pa = polys[a]
        for b in range(a, q):
            pb = polys[b]
            s = [0] * max(len(pa), len(pb))
            for i, c in enumerate(pa):
                s[i] = c
            for i, c in enumerate(pb):
                s[i] = (s[i] + c) % p
            v = _encode(s, p)
            add[a * q + b] = v
            add[b * q + a] = v
            m = _encode(_poly_rem(_poly_mul(pa, pb, p), modulus, p), p)
            mul[a * q + b] = m
            mul[b * q + a] = m

    neg = [0] * q
    inv = [0] * q
    for a in range(q):
        for b in range(q):
            if add[a * q + b] == 0:
                neg[a] = b
            if a and mul[a * q + b] == 1:
                inv[a] = b

    generator, exp = _find_generator(q, mul)
    log = [-1] * q
    for i, v in enumerate(exp):
        log[v] = i

    K = FiniteField(p, n, q, modulus, tuple(add), tuple(mul), tuple(neg),
                    tuple(inv), generator, tuple(exp), tuple(log))
    verify_field_tables(K)
    return K


def _find_generator(q, mul):
    for g in range(1, q):
        powers = [1]
        x = g
        while x != 1:
            powers.append(x)
            x = mul[x * q + g]
        if len(powers) == q - 1:
            return g, powers
    raise InternalCheckError("no multiplicative generator found")


def verify_field_tables(K):
    """Check the field axioms on the stored tables.

    Exhaustive (all q^3 triples) for q <= EXHAUSTIVE_CHECK_BOUND; above
    that, structural bijectivity checks plus a deterministic sample.
    """
    q = K.q
    if K.add(0, 0) != 0 or K.mul(1, 1) != 1:
        raise InternalCheckError("0/1 encoding broken")
    for a in range(q):
        if K.add(a, 0) != a or K.add(0, a) != a:
            raise InternalCheckError(f"0 is not an additive identity at {a}")
        if K.mul(a, 1) != a or K.mul(1, a) != a:
            raise InternalCheckError(f"1 is not a multiplicative identity at {a}")
        if K.mul(a, 0) != 0 or K.mul(0, a) != 0:
            raise InternalCheckError(f"0 does not annihilate at {a}")
        if K.add(a, K.neg(a)) != 0:
            raise InternalCheckError(f"missing additive inverse for {a}")
        if a and K.mul(a, K.inv_table[a]) != 1:
            raise InternalCheckError(f"missing multiplicative inverse for {a}")
    for a in range(q):
        if sorted(K.add(a, b) for b in range(q)) != list(range(q)):
            raise InternalCheckError(f"addition row {a} is not a permutation")
        if a and sorted(K.mul(a, b) for b in range(1, q)) != list(range(1, q)):
            raise InternalCheckError(f"multiplication row {a} is not a permutation")
    if q <= EXHAUSTIVE_CHECK_BOUND:
        triples = itertools.product(range(q), repeat=3)
    else:
        step = max(1, q // 13)
        sample = range(0, q, step)
        triples = itertools.product(sample, repeat=3)
    for a, b, c in triples:
        if K.add(a, b) != K.add(b, a) or K.mul(a, b) != K.mul(b, a):
            raise InternalCheckError(f"commutativity fails at ({a},{b})")
        if K.add(K.add(a, b), c) != K.add(a, K.add(b, c)):
            raise InternalCheckError(f"additive associativity fails at ({a},{b},{c})")
        if K.mul(K.mul(a, b), c) != K.mul(a, K.mul(b, c)):
            raise InternalCheckError(f"multiplicative associativity fails at ({a},{b},{c})")
        if K.mul(a, K.add(b, c)) != K.add(K.mul(a, b), K.mul(a, c)):
            raise InternalCheckError(f"distributivity fails at ({a},{b},{c})")


def field_arith(K, op, a, b=None):
    """Checked single-operation entry point (used by the CLI)."""
    if not 0 <= a < K.q or (b is not None and not 0 <= b < K.q):
        raise InputError(f"operand out of range for GF({K.q})")
    if op == "add":
        if b is None:
            raise InputError("add needs two operands")
        return K.add(a, b)
    if op == "mul":
        if b is None:
            raise InputError("mul needs two operands")
        return K.mul(a, b)
    if op == "neg":
        return K.neg(a)
    if op == "inv":
        return K.inv(a)
    raise InputError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Galois groups, fixed fields, norms

@dataclass(frozen=True)
class GaloisGroup:
    """Cyclic group of automorphisms x -> x^(p^(d*j)) stored as permutations."""

    field: FiniteField
    d: int
    order: int
    perms: tuple  # perms[j] is the permutation table of x -> x^(p^(d*j))

    def apply(self, j, x):
        return self.perms[j][x]

    def __repr__(self):
        return f"GaloisGroup(q={self.field.q}, d={self.d}, order={self.order})"


def _is_automorphism(K, perm, exhaustive):
    if perm[0] != 0 or perm[1] != 1:
        return False
    q = K.q
    if exhaustive:
        pairs = itertools.product(range(q), repeat=2)
    else:
        step = max(1, q // 29)
        pairs = itertools.product(range(0, q, step), repeat=2)
    for x, y in pairs:
        if perm[K.add(x, y)] != K.add(perm[x], perm[y]):
            return False
        if perm[K.mul(x, y)] != K.mul(perm[x], perm[y]):
            return False
    return True


def galois_subgroup(K, d):
    """The cyclic automorphism group generated by x -> x^(p^d)."""
    if d < 1 or K.n % d != 0:
        raise InputError(f"{d} does not divide the extension degree {K.n}")
    order = K.n // d
    identity = tuple(range(K.q))
    frob = tuple(K.pow(x, K.p ** d) for x in range(K.q))
    perms = [identity]
    cur = identity
    for _ in range(1, order):
        cur = tuple(frob[cur[x]] for x in range(K.q))
        perms.append(cur)
    exhaustive = K.q <= EXHAUSTIVE_CHECK_BOUND
    for g in perms:
        if not _is_automorphism(K, g, exhaustive):
            raise InternalCheckError("stored permutation is not a field automorphism")
    perm_set = set(perms)
    for a in perms:
        for b in perms:
            if tuple(a[b[x]] for x in range(K.q)) not in perm_set:
                raise InternalCheckError("automorphism set not closed under composition")
    return GaloisGroup(K, d, order, tuple(perms))


def fixed_field(K, G):
    """Elements fixed by every automorphism in G; verified to be a subfield."""
    fixed = tuple(x for x in range(K.q)
                  if all(g[x] == x for g in G.perms))
    expected = K.p ** G.d
    if len(fixed) != expected:
        raise InternalCheckError(
            f"fixed field has {len(fixed)} elements, expected {expected}")
    members = set(fixed)
    for x in fixed:
        if K.neg(x) not in members:
            raise InternalCheckError("fixed field not closed under negation")
        if x and K.inv(x) not in members:
            raise InternalCheckError("fixed field not closed under inversion")
        for y in fixed:
            if K.add(x, y) not in members or K.mul(x, y) not in members:
                raise InternalCheckError("fixed field not closed under +/*")
    return fixed


def norm(K, G, x):
    """Product of g(x) over all g in G; lands in the fixed field."""
    if not 0 <= x < K.q:
        raise InputError(f"element {x} out of range for GF({K.q})")
    r = 1
    for g in G.perms:
        r = K.mul(r, g[x])
    return r


def norm_image(K, G):
    """The image of the nonzero elements under the norm map, sorted.

    Verified to be a subgroup of the multiplicative group of the fixed
    field.
    """
    image = sorted({norm(K, G, x) for x in range(1, K.q)})
    members = set(image)
    if 1 not in members or 0 in members:
        raise InternalCheckError("norm image is not a subgroup of F*")
    for u in image:
        if K.inv(u) not in members:
            raise InternalCheckError("norm image not closed under inversion")
        for v in image:
            if K.mul(u, v) not in members:
                raise InternalCheckError("norm image not closed under products")
    fixed = set(fixed_field(K, G))
    if not members <= fixed:
        raise InternalCheckError("norm image leaves the fixed field")
    return tuple(image)
