"""Exact arithmetic in the ring of symmetric functions and its completion.

Elements are stored in the power sum basis with Fraction coefficients:
Kronecker products are diagonal there, plethysm is index substitution,
and the degree involution is a sign flip. A SymFunc with ``cutoff=None``
is an exact element of the polynomial ring; ``cutoff=N`` marks a
truncated series, known exactly through degree N with nothing stored
above. Pairing a series that is too short raises PrecisionError rather
than truncating silently.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import (
    as_partition,
    canonical_key,
    divisors,
    mobius,
    multiplicities,
    multiset_diff,
    multiset_union,
    partitions_of,
    z_value,
)

BASES = ("m", "e", "h", "p", "s")


class PrecisionError(Exception):
    """A series cutoff is too small for the exact answer requested."""


class InternalCheckError(Exception):
    """An internal cross-check failed; indicates a bug, not a usage error."""


class IntegralityError(InternalCheckError):
    """A coefficient that must be an integer is not."""


def _normalize_terms(terms, cutoff, validate):
    out = {}
    for lam, c in terms.items():
        lam = as_partition(lam) if validate else tuple(lam)
        c = c if isinstance(c, Fraction) else Fraction(c)
        if c == 0:
            continue
        if cutoff is not None and sum(lam) > cutoff:
            raise ValueError(f"term of degree {sum(lam)} above cutoff {cutoff}")
        out[lam] = c
    return out


class SymFunc:
    """A symmetric function in the internal power sum representation.

    ``terms`` maps partition tuples to the Fraction coefficient of the
    corresponding power sum product. ``cutoff=None`` marks an exact
    finite element; an integer cutoff marks a truncated series.
    """

    __slots__ = ("_terms", "cutoff", "_hash")

    def __init__(self, terms=None, cutoff=None, _validate=True):
        if cutoff is not None:
            cutoff = int(cutoff)
            if cutoff < 0:
                raise ValueError("cutoff must be nonnegative")
        self._terms = _normalize_terms(terms or {}, cutoff, _validate)
        self.cutoff = cutoff
        self._hash = None

    @classmethod
    def zero(cls, cutoff=None):
        return cls({}, cutoff)

    @classmethod
    def one(cls, cutoff=None):
        return cls({(): 1}, cutoff)

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_series(self) -> bool:
        return self.cutoff is not None

    @property
    def degree(self) -> int:
        """Largest degree with a nonzero term (0 for the zero element)."""
        return max((sum(lam) for lam in self._terms), default=0)

    def terms(self):
        """Iterate (partition, coefficient) pairs, unspecified order."""
        return self._terms.items()

    def support(self) -> list:
        return sorted(self._terms, key=canonical_key)

    def coefficient(self, lam) -> Fraction:
        """Coefficient of p_lam; raises PrecisionError beyond the cutoff."""
        lam = as_partition(lam)
        if self.cutoff is not None and sum(lam) > self.cutoff:
            raise PrecisionError(
                f"degree {sum(lam)} is beyond the cutoff {self.cutoff}"
            )
        return self._terms.get(lam, Fraction(0))

    def homogeneous_component(self, n: int) -> "SymFunc":
        """The exact degree-n part (requires n within the cutoff)."""
        if self.cutoff is not None and n > self.cutoff:
            raise PrecisionError(f"degree {n} is beyond the cutoff {self.cutoff}")
        return SymFunc(
            {lam: c for lam, c in self._terms.items() if sum(lam) == n},
            None,
            _validate=False,
        )

    def truncate(self, n: int) -> "SymFunc":
        """View through degree n as a series with cutoff n."""
        if self.cutoff is not None and n > self.cutoff:
            raise PrecisionError(
                f"cannot extend cutoff {self.cutoff} to {n}"
            )
        return SymFunc(
            {lam: c for lam, c in self._terms.items() if sum(lam) <= n},
            n,
            _validate=False,
        )

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, SymFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return SymFunc({(): x}, None, _validate=False)
        return NotImplemented

    @staticmethod
    def _min_cutoff(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cutoff = self._min_cutoff(self.cutoff, other.cutoff)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        if cutoff is not None:
            out = {lam: c for lam, c in out.items() if sum(lam) <= cutoff}
        return SymFunc(out, cutoff, _validate=False)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(
            {lam: -c for lam, c in self._terms.items()}, self.cutoff, _validate=False
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc(
                {lam: c * other for lam, c in self._terms.items()},
                self.cutoff,
                _validate=False,
            )
        if not isinstance(other, SymFunc):
            return NotImplemented
        cutoff = self._min_cutoff(self.cutoff, other.cutoff)
        out = {}
        for lam, a in self._terms.items():
            la = sum(lam)
            for mu, b in other._terms.items():
                if cutoff is not None and la + sum(mu) > cutoff:
                    continue
                key = multiset_union(lam, mu)
                out[key] = out.get(key, Fraction(0)) + a * b
        return SymFunc(out, cutoff, _validate=False)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be nonnegative integers")
        result = SymFunc.one(self.cutoff)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
            return self.cutoff is None and self._terms == other._terms
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.cutoff == other.cutoff and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cutoff, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if self.is_zero:
            body = "0"
        else:
            bits = []
            for lam in self.support():
                c = self._terms[lam]
                coef = "" if c == 1 and lam else str(c) + ("*" if lam else "")
                mono = "p[%s]" % ",".join(str(p) for p in lam) if lam else ""
                bits.append(coef + mono if (coef or mono) else "1")
            body = " + ".join(bits)
        tail = "" if self.cutoff is None else f" (cutoff {self.cutoff})"
        return f"<SymFunc {body}{tail}>"


# -- characters and basis expansions ------------------------------------


@lru_cache(maxsize=None)
def character_value(lam, mu) -> int:
    """Irreducible symmetric group character chi_lam at the class mu.

    Border strip (Murnaghan-Nakayama) recursion on beta numbers: removing
    a strip of size mu_0 subtracts mu_0 from one beta number, and the sign
    is the number of beta numbers jumped over.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"character needs |lam| = |mu|, got {lam} and {mu}")
    if not lam:
        return 1
    k, rest = mu[0], mu[1:]
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(
            c - (n - 1 - i) for i, c in enumerate(newbeta) if c - (n - 1 - i) > 0
        )
        total += (-1) ** height * character_value(newlam, rest)
    return total


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> tuple:
    """p-expansion of the complete homogeneous h_n: sum over lam of p_lam/z_lam."""
    return tuple((lam, Fraction(1, z_value(lam))) for lam in partitions_of(n))


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> tuple:
    return tuple(
        (lam, Fraction((-1) ** (n - len(lam)), z_value(lam)))
        for lam in partitions_of(n)
    )


@lru_cache(maxsize=None)
def _s_in_p(lam) -> tuple:
    n = sum(lam)
    out = []
    for mu in partitions_of(n):
        chi = character_value(lam, mu)
        if chi:
            out.append((mu, Fraction(chi, z_value(mu))))
    return tuple(out)


def _convolve(pairs_a, pairs_b):
    out = {}
    for lam, a in pairs_a:
        for mu, b in pairs_b:
            key = multiset_union(lam, mu)
            out[key] = out.get(key, Fraction(0)) + a * b
    return tuple(out.items())


@lru_cache(maxsize=None)
def _multiplicative_in_p(base: str, lam) -> tuple:
    """p-expansion of h_lam or e_lam (products over the parts)."""
    single = _h_in_p if base == "h" else _e_in_p
    out = (((), Fraction(1)),)
    for part in lam:
        out = _convolve(out, single(part))
    return out


@lru_cache(maxsize=None)
def _m_in_p_degree(n: int) -> dict:
    """p-expansions of all monomial symmetric functions of degree n.

    m is the Hall dual of h, so with A the h-to-p matrix and D = diag(z),
    the m-to-p matrix B solves A D B^T = I. Solved once per degree by
    exact Gaussian elimination.
    """
    parts = partitions_of(n)
    k = len(parts)
    index = {lam: i for i, lam in enumerate(parts)}
    G = [[Fraction(0)] * k for _ in range(k)]
    for i, lam in enumerate(parts):
        for nu, c in _multiplicative_in_p("h", lam):
            G[i][index[nu]] = c * z_value(nu)
    # Gauss-Jordan inverse of G.
    inv = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if G[r][col] != 0)
        G[col], G[pivot] = G[pivot], G[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        p = G[col][col]
        G[col] = [x / p for x in G[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(k):
            if r != col and G[r][col]:
                f = G[r][col]
                G[r] = [x - f * y for x, y in zip(G[r], G[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # B = G^{-T}: row i of B gives the p-coefficients of m_{parts[i]}.
    table = {}
    for i, lam in enumerate(parts):
        table[lam] = tuple(
            (parts[j], inv[j][i]) for j in range(k) if inv[j][i] != 0
        )
    return table


def from_basis(basis: str, lam) -> SymFunc:
    """The basis element with the given index, as an exact SymFunc."""
    lam = as_partition(lam)
    if basis == "p":
        return SymFunc({lam: 1}, None, _validate=False)
    if basis in ("h", "e"):
        pairs = _multiplicative_in_p(basis, lam)
    elif basis == "s":
        pairs = _s_in_p(lam)
    elif basis == "m":
        pairs = _m_in_p_degree(sum(lam))[lam]
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return SymFunc(dict(pairs), None, _validate=False)


def to_basis(f: SymFunc, basis: str) -> dict:
    """Expand f in the given basis: mapping partition -> Fraction.

    For a series the expansion covers degrees up to the cutoff. The m and
    h coefficients come from Hall duality (pair against h and m), the e
    coefficients are the h coefficients of the degree involution, and the
    Schur coefficients are character sums.
    """
    if basis == "p":
        return dict(f._terms)
    out = {}
    if basis == "s":
        degrees = {sum(lam) for lam in f._terms}
        for n in degrees:
            for lam in partitions_of(n):
                c = sum(
                    (
                        character_value(lam, mu) * f._terms[mu]
                        for mu in partitions_of(n)
                        if mu in f._terms
                    ),
                    Fraction(0),
                )
                if c:
                    out[lam] = c
        return out
    if basis == "e":
        return to_basis(omega(f), "h")
    if basis == "m":
        dual = lambda mu: _multiplicative_in_p("h", mu)
    elif basis == "h":
        dual = lambda mu: _m_in_p_degree(sum(mu))[mu]
    else:
        raise ValueError(f"unknown basis {basis!r}")
    degrees = {sum(lam) for lam in f._terms}
    for n in degrees:
        for mu in partitions_of(n):
            c = sum(
                (f._terms[nu] * z_value(nu) * coef for nu, coef in dual(mu)
                 if nu in f._terms),
                Fraction(0),
            )
            if c:
                out[mu] = c
    return out


def to_basis_int(f: SymFunc, basis: str) -> dict:
    """Like to_basis but demands integer coefficients (IntegralityError otherwise)."""
    out = {}
    for lam, c in to_basis(f, basis).items():
        if c.denominator != 1:
            raise IntegralityError(
                f"coefficient of {basis}_{lam} is {c}, expected an integer"
            )
        out[lam] = c.numerator
    return out


# -- pairings and operators ----------------------------------------------


def hall(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product, diagonal on power sums with weight z_lam.

    One argument must be exact; a series argument must reach the exact
    argument's degree.
    """
    if f.cutoff is not None and g.cutoff is not None:
        raise ValueError("hall pairing of two truncated series is not defined")
    if f.cutoff is not None:
        f, g = g, f
    if g.cutoff is not None and g.cutoff < f.degree:
        raise PrecisionError(
            f"series cutoff {g.cutoff} below pairing degree {f.degree}"
        )
    total = Fraction(0)
    for lam, a in f._terms.items():
        b = g._terms.get(lam)
        if b is not None:
            total += z_value(lam) * a * b
    return total


def kronecker(f: SymFunc, g: SymFunc) -> SymFunc:
    """Kronecker product: diagonal on power sums with eigenvalue z_lam."""
    cutoff = SymFunc._min_cutoff(f.cutoff, g.cutoff)
    out = {}
    small, large = (f, g) if len(f._terms) <= len(g._terms) else (g, f)
    for lam, a in small._terms.items():
        b = large._terms.get(lam)
        if b is not None and (cutoff is None or sum(lam) <= cutoff):
            out[lam] = z_value(lam) * a * b
    return SymFunc(out, cutoff, _validate=False)


def omega(f: SymFunc) -> SymFunc:
    """Degree involution: p_k -> (-1)^(k-1) p_k."""
    return SymFunc(
        {lam: c * (-1) ** (sum(lam) - len(lam)) for lam, c in f._terms.items()},
        f.cutoff,
        _validate=False,
    )


def skew(g: SymFunc, f: SymFunc) -> SymFunc:
    """Apply the skewing operator of g to f (the Hall adjoint of multiplying by g).

    In the power sum representation each p_k acts as k d/dp_k, so a term
    p_mu of g removes the multiset mu from terms of f with a falling
    factorial weight on the multiplicities.
    """
    if f.cutoff is not None:
        raise ValueError("skew acts on exact symmetric functions")
    if g.cutoff is not None and g.cutoff < f.degree:
        raise PrecisionError(
            f"series cutoff {g.cutoff} below skewed degree {f.degree}"
        )
    out = {}
    fdeg = f.degree
    for mu, b in g._terms.items():
        if sum(mu) > fdeg:
            continue
        mu_mult = multiplicities(mu)
        for nu, a in f._terms.items():
            nu_mult = multiplicities(nu)
            weight = 1
            for k, m in mu_mult.items():
                avail = nu_mult.get(k, 0)
                if avail < m:
                    weight = 0
                    break
                for step in range(m):
                    weight *= k * (avail - step)
            if not weight:
                continue
            key = multiset_diff(nu, mu)
            out[key] = out.get(key, Fraction(0)) + a * b * weight
    return SymFunc(out, None, _validate=False)


def _scaled_partition(lam, k: int) -> tuple:
    return tuple(p * k for p in lam)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """Plethysm f[g]: substitute p_j -> p_{jk} in g for each p_k of f.

    Defined when f is exact, or when g has no constant term (then only
    finitely many terms of f touch each output degree).
    """
    has_constant = () in g._terms
    if f.cutoff is not None and has_constant:
        raise ValueError(
            "plethysm of a truncated series by a series with constant term"
        )
    if f.cutoff is None and g.cutoff is None:
        cutoff = None
    elif f.cutoff is None:
        cutoff = g.cutoff
    elif g.cutoff is None:
        cutoff = f.cutoff
    else:
        cutoff = min(f.cutoff, g.cutoff)

    pk_cache: dict = {}

    def pk_of_g(k: int) -> dict:
        if k not in pk_cache:
            sub = {}
            for mu, c in g._terms.items():
                if cutoff is not None and k * sum(mu) > cutoff:
                    continue
                sub[_scaled_partition(mu, k)] = c
            pk_cache[k] = sub
        return pk_cache[k]

    out: dict = {}
    for lam, c in f._terms.items():
        if cutoff is not None and not has_constant and sum(lam) > cutoff:
            continue
        prod = {(): Fraction(1)}
        for part in lam:
            sub = pk_of_g(part)
            nxt: dict = {}
            for rho, a in prod.items():
                ra = sum(rho)
                for sig, b in sub.items():
                    if cutoff is not None and ra + sum(sig) > cutoff:
                        continue
                    key = multiset_union(rho, sig)
                    nxt[key] = nxt.get(key, Fraction(0)) + a * b
            prod = nxt
            if not prod:
                break
        for rho, a in prod.items():
            val = out.get(rho, Fraction(0)) + c * a
            out[rho] = val
    return SymFunc(out, cutoff, _validate=False)


# -- standard series ------------------------------------------------------


@lru_cache(maxsize=None)
def lyndon_sf(n: int) -> SymFunc:
    """The degree-n Lyndon symmetric function (Mobius sum over divisor powers)."""
    if n < 1:
        raise ValueError("lyndon_sf is defined for n >= 1")
    terms = {}
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            terms[(d,) * (n // d)] = Fraction(mu, n)
    return SymFunc(terms, None, _validate=False)


@lru_cache(maxsize=None)
def standard_series(name: str, cutoff: int) -> SymFunc:
    """The named generating series, exact through the cutoff.

    H (all complete homogeneous), Hplus (H - 1), Hgeq2 (H - 1 - h_1),
    E, Emin (alternating elementary), Lsum (sum of the Lyndon symmetric
    functions), Cadogan (the plethystic inverse of Hplus), and Lyndon
    (the single degree-``cutoff`` Lyndon function, which is exact).
    """
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    if name == "Lyndon":
        return lyndon_sf(cutoff)
    terms: dict = {}
    if name in ("H", "Hplus", "Hgeq2"):
        skip_sizes = {"H": (), "Hplus": (0,), "Hgeq2": (0, 1)}[name]
        for n in range(cutoff + 1):
            if n in skip_sizes:
                continue
            for lam in partitions_of(n):
                terms[lam] = Fraction(1, z_value(lam))
    elif name == "E":
        for n in range(cutoff + 1):
            for lam in partitions_of(n):
                terms[lam] = Fraction((-1) ** (n - len(lam)), z_value(lam))
    elif name == "Emin":
        for n in range(cutoff + 1):
            for lam in partitions_of(n):
                terms[lam] = Fraction((-1) ** len(lam), z_value(lam))
    elif name == "Lsum":
        acc = SymFunc.zero()
        for n in range(1, cutoff + 1):
            acc = acc + lyndon_sf(n)
        terms = dict(acc._terms)
    elif name == "Cadogan":
        acc = SymFunc.zero()
        for n in range(1, cutoff + 1):
            acc = acc + omega(lyndon_sf(n)) * ((-1) ** (n - 1))
        terms = dict(acc._terms)
    else:
        raise ValueError(f"unknown series {name!r}")
    return SymFunc(terms, cutoff, _validate=False)


def leading_term(f: SymFunc, basis: str = "s"):
    """(partition, coefficient) of the canonical leading term of the top degree."""
    if f.is_zero:
        raise ValueError("the zero element has no leading term")
    top = to_basis(f.homogeneous_component(f.degree), basis)
    lam = min(top, key=lambda t: tuple(-p for p in t))
    return lam, top[lam]


# -- serialization ---------------------------------------------------------


def to_serializable(f: SymFunc, basis: str) -> dict:
    """JSON-ready form with exact decimal strings and stable ordering."""
    coeffs = to_basis(f, basis)
    terms = [
        {
            "partition": list(lam),
            "num": str(coeffs[lam].numerator),
            "den": str(coeffs[lam].denominator),
        }
        for lam in sorted(coeffs, key=canonical_key)
    ]
    return {"basis": basis, "terms": terms, "cutoff": f.cutoff}


def from_serializable(data: dict) -> SymFunc:
    """Rebuild a SymFunc from its serialized form."""
    basis = data["basis"]
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    total = SymFunc.zero()
    for term in data["terms"]:
        c = Fraction(int(term["num"]), int(term["den"]))
        total = total + from_basis(basis, as_partition(term["partition"])) * c
    cutoff = data.get("cutoff")
    return total if cutoff is None else total.truncate(cutoff)
