"""Pure-Python reduction kernel.

A monomial is carried as two packed integers:

* ``E``: exponents, ``FIELD`` bits per variable, top bit of each field is a
  guard so that divisibility is one subtraction and one mask;
* ``K``: the weight-matrix vector ``W @ e``, most significant row first, so
  integer comparison is the monomial order.

Both encodings are additive, so multiplying monomials is adding integers.
This module and ``_ckernel.pyx`` expose the same ``Reducer`` class.
"""

from heapq import heapify, heappop, heappush

FIELD = 32


class Reducer:
    """Store of monic polynomials over F_p with S-pair and normal-form reduction."""

    compiled = False

    def __init__(self, nvars, weights, p):
        self.n = nvars
        self.p = p
        self._mask = (1 << FIELD) - 1
        self._guard = sum(1 << (FIELD * i + FIELD - 1) for i in range(nvars))
        nrows = len(weights)
        self._kcol = [
            sum(weights[r][i] << (FIELD * (nrows - 1 - r)) for r in range(nrows))
            for i in range(nvars)
        ]
        self._polys = []  # list of [(K, E, c), ...] sorted by K descending, monic
        self._active = []

    # packing ---------------------------------------------------------------
    def _pack(self, exps):
        E = 0
        K = 0
        for i, e in enumerate(exps):
            if e >= 1 << (FIELD - 1):
                raise OverflowError("exponent too large for the kernel")
            E |= e << (FIELD * i)
            K += e * self._kcol[i]
        return K, E

    def _unpack(self, E):
        mask = self._mask
        return tuple((E >> (FIELD * i)) & mask for i in range(self.n))

    def _convert(self, terms):
        p = self.p
        out = []
        for exps, c in terms:
            c %= p
            if c:
                K, E = self._pack(exps)
                out.append((K, E, c))
        out.sort(reverse=True)
        return out

    def _store(self, poly):
        p = self.p
        inv = pow(poly[0][2], -1, p)
        if inv != 1:
            poly = [(K, E, c * inv % p) for K, E, c in poly]
        self._polys.append(poly)
        self._active.append(True)
        return len(self._polys) - 1

    # public API ------------------------------------------------------------
    def __len__(self):
        return len(self._polys)

    def add(self, terms):
        """Store ``terms`` (made monic) without reduction; returns its index, -1 if zero."""
        poly = self._convert(terms)
        if not poly:
            return -1
        return self._store(poly)

    def add_reduced(self, terms):
        """Reduce ``terms`` by the active store, then store the remainder."""
        poly = self._reduce(self._convert(terms), -1)
        if not poly:
            return -1
        return self._store(poly)

    def set_active(self, i, flag):
        self._active[i] = bool(flag)

    def lm(self, i):
        return self._unpack(self._polys[i][0][1])

    def nterms(self, i):
        return len(self._polys[i])

    def terms(self, i):
        return [(self._unpack(E), c) for _, E, c in self._polys[i]]

    def normal_form(self, terms):
        return [(self._unpack(E), c) for _, E, c in self._reduce(self._convert(terms), -1)]

    def spoly_reduce(self, i, j):
        """Reduce the S-polynomial of stored ``i`` and ``j``; store and index it, or -1."""
        f, g = self._polys[i], self._polys[j]
        Ef, Eg = f[0][1], g[0][1]
        uf, ug = self._unpack(Ef), self._unpack(Eg)
        L = tuple(max(a, b) for a, b in zip(uf, ug))
        KL, EL = self._pack(L)
        p = self.p
        acc = {}
        dK, dE = KL - f[0][0], EL - Ef
        for K, E, c in f[1:]:
            acc[K + dK] = [E + dE, c]
        dK, dE = KL - g[0][0], EL - Eg
        for K, E, c in g[1:]:
            K2 = K + dK
            s = acc.get(K2)
            if s is None:
                acc[K2] = [E + dE, p - c]
            else:
                s[1] = (s[1] - c) % p
        poly = self._reduce_acc(acc, -1)
        if not poly:
            return -1
        return self._store(poly)

    def reduce_tail(self, i):
        """Fully reduce the non-leading terms of stored ``i`` by the other active entries."""
        f = self._polys[i]
        acc = {K: [E, c] for K, E, c in f[1:]}
        self._polys[i] = [f[0]] + self._reduce_acc(acc, i)

    # reduction -------------------------------------------------------------
    def _reduce(self, poly, skip):
        return self._reduce_acc({K: [E, c] for K, E, c in poly}, skip)

    def _reduce_acc(self, acc, skip):
        p = self.p
        guard = self._guard
        reducers = [
            (f[0][1], f[0][0], f[1:])
            for idx, f in enumerate(self._polys)
            if self._active[idx] and idx != skip
        ]
        heap = [-K for K in acc]
        heapify(heap)
        rem = []
        while heap:
            K = -heappop(heap)
            t = acc.pop(K, None)
            if t is None:
                continue
            E, c = t
            if not c:
                continue
            EG = E | guard
            for Eg, Kg, tail in reducers:
                if (EG - Eg) & guard == guard:
                    dK = K - Kg
                    dE = E - Eg
                    for Kt, Et, ct in tail:
                        K2 = Kt + dK
                        s = acc.get(K2)
                        if s is None:
                            acc[K2] = [Et + dE, (-c * ct) % p]
                            heappush(heap, -K2)
                        else:
                            s[1] = (s[1] - c * ct) % p
                    break
            else:
                if (E & guard) != 0:
                    raise OverflowError("exponent overflow in the kernel")
                rem.append((K, E, c))
        return rem
